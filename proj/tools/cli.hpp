#pragma once

// Command-line front end. Kept in a header so tests can drive it in-process.
//
// Exit status: 0 success, 1 a check failed unexpectedly (or output could not
// be written), 2 invalid usage or an argument outside its domain.

#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pascalnet/pascalnet.hpp"

namespace pascalnet::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

struct Range {
  std::uint32_t first = 0;
  std::uint32_t last = 0;
};

// "A..B" inclusive, or a single "A".
inline Range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  auto number = [&](const std::string& s) -> std::uint32_t {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
      throw CLI::ValidationError("--range", "expected A..B with non-negative integers, got '" +
                                                text + "'");
    }
    return static_cast<std::uint32_t>(std::stoul(s));
  };
  Range r;
  if (dots == std::string::npos) {
    r.first = r.last = number(text);
  } else {
    r.first = number(text.substr(0, dots));
    r.last = number(text.substr(dots + 2));
  }
  if (r.first > r.last) {
    throw CLI::ValidationError("--range", "range start exceeds end in '" + text + "'");
  }
  return r;
}

inline std::vector<Vertex> parse_vertex_list(const std::string& text) {
  std::vector<Vertex> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw CLI::ValidationError("--fail-set", "expected comma-separated vertices, got '" +
                                                   text + "'");
    }
    out.push_back(static_cast<Vertex>(std::stoul(item)));
  }
  return out;
}

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(int argc, const char* const* argv) {
    CLI::App app{"Pascal graph construction, property checks, dependable nodes and resilience"};
    app.name("pascalnet");
    app.require_subcommand(1);

    Options opt;
    std::map<std::string, std::string> formats;
    auto common = [&](CLI::App* sub, std::vector<std::string> allowed) {
      auto& format = formats[sub->get_name()];
      format = allowed.front();
      sub->add_option("--format", format, "Output format")->check(CLI::IsMember(allowed));
      sub->add_option("--out", opt.out_path, "Write to this file instead of standard output");
    };
    auto orders = [&](CLI::App* sub) {
      sub->add_option("n", opt.n, "Order of the Pascal graph");
      sub->add_option("--range", opt.range_text, "Inclusive order range A..B");
    };

    auto* gen = app.add_subcommand("gen", "Emit the Pascal matrix PM(n)");
    gen->add_option("n", opt.n, "Order")->required();
    common(gen, {"text", "json"});

    auto* props = app.add_subcommand("props", "Check every connectivity property of PG(n)");
    orders(props);
    common(props, {"text", "json", "csv"});

    auto* dnp = app.add_subcommand("dnp", "Dependable nodes by formula and exhaustive scan");
    orders(dnp);
    common(dnp, {"text", "json", "csv"});

    auto* table1 = app.add_subcommand("table1", "Reproduce the published DNP table");
    table1->add_option("--range", opt.range_text, "Inclusive order range A..B");
    common(table1, {"text", "json", "csv"});

    auto* resil = app.add_subcommand("resilience", "Vertex-failure sweep");
    orders(resil);
    resil->add_option("--seed", opt.seed, "Seed for the failure draws");
    resil->add_option("--trials", opt.trials, "Number of trials")->check(CLI::PositiveNumber);
    resil->add_option("--failures", opt.failures, "Failed vertices per trial");
    resil->add_option("--fail-set", opt.fail_set_text, "Vertices failed in every trial, e.g. \"1,9\"");
    resil->add_option("--config", opt.config_path, "JSON scenario {n, failures, trials, seed, forced_failed}")
        ->check(CLI::ExistingFile);
    resil->add_option("--threads", opt.threads, "Worker threads")->check(CLI::PositiveNumber);
    common(resil, {"text", "json", "csv"});

    auto* exp = app.add_subcommand("export", "Export PG(n) as DOT or an edge-list CSV");
    exp->add_option("n", opt.n, "Order")->required();
    common(exp, {"dot", "csv"});

    try {
      app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
      out_ << app.help();
      return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
      out_ << app.help("", CLI::AppFormatMode::All);
      return kExitOk;
    } catch (const CLI::ParseError& e) {
      err_ << "error: " << e.what() << '\n';
      return kExitUsage;
    }

    opt.format = formats.at(app.get_subcommands().front()->get_name());

    try {
      std::ostringstream body;
      int status = kExitOk;
      if (*gen) status = run_gen(opt, body);
      else if (*props) status = run_props(opt, body);
      else if (*dnp) status = run_dnp(opt, body);
      else if (*table1) status = run_table1(opt, body);
      else if (*resil) status = run_resilience(opt, body);
      else if (*exp) status = run_export(opt, body);
      if (!emit(opt, body.str())) return kExitCheckFailed;
      return status;
    } catch (const CLI::ValidationError& e) {
      err_ << "error: " << e.what() << '\n';
      return kExitUsage;
    } catch (const DomainError& e) {
      err_ << "error: " << e.what() << '\n';
      return kExitUsage;
    } catch (const CapacityError& e) {
      err_ << "error: " << e.what() << '\n';
      return kExitUsage;
    } catch (const nlohmann::json::exception& e) {
      err_ << "error: invalid scenario file: " << e.what() << '\n';
      return kExitUsage;
    }
  }

 private:
  struct Options {
    std::string format;
    std::string out_path;
    std::optional<std::uint32_t> n;
    std::string range_text;
    std::uint64_t seed = 0;
    std::uint32_t trials = 1;
    std::optional<std::uint32_t> failures;
    std::string fail_set_text;
    std::string config_path;
    unsigned threads = 1;
  };

  bool emit(const Options& opt, const std::string& body) {
    if (opt.out_path.empty()) {
      out_ << body;
      return true;
    }
    std::ofstream file(opt.out_path, std::ios::binary);
    file << body;
    if (!file) {
      err_ << "error: cannot write " << opt.out_path << '\n';
      return false;
    }
    return true;
  }

  static std::vector<std::uint32_t> orders_from(const Options& opt,
                                                std::optional<Range> fallback) {
    if (opt.n && !opt.range_text.empty()) {
      throw CLI::ValidationError("n", "give either an order or --range, not both");
    }
    Range r;
    if (opt.n) {
      r = {*opt.n, *opt.n};
    } else if (!opt.range_text.empty()) {
      r = parse_range(opt.range_text);
    } else if (fallback) {
      r = *fallback;
    } else {
      throw CLI::ValidationError("n", "an order or --range is required");
    }
    std::vector<std::uint32_t> out;
    for (std::uint64_t n = r.first; n <= r.last; ++n) out.push_back(static_cast<std::uint32_t>(n));
    return out;
  }

  static int run_gen(const Options& opt, std::ostream& body) {
    const PascalMatrix pm = generate(*opt.n);
    if (opt.format == "json") body << io::matrix_json(pm).dump(2) << '\n';
    else body << io::matrix_text(pm);
    return kExitOk;
  }

  static int run_props(const Options& opt, std::ostream& body) {
    const auto ns = orders_from(opt, Range{3, 64});
    std::vector<PropertyReport> all;
    for (auto n : ns) {
      auto reports = evaluate_properties(n);
      all.insert(all.end(), reports.begin(), reports.end());
    }
    if (opt.format == "json") {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& r : all) arr.push_back(io::property_json(r));
      body << arr.dump(2) << '\n';
    } else if (opt.format == "csv") {
      body << io::kPropertyCsvHeader;
      for (const auto& r : all) body << io::property_csv_row(r);
    } else {
      body << "n     property       status      witness\n";
      for (const auto& r : all) body << io::property_text_row(r);
    }
    return all_hold(all) ? kExitOk : kExitCheckFailed;
  }

  static int write_dnp(const Options& opt, const std::vector<DnpReport>& reports,
                       std::ostream& body) {
    if (opt.format == "json") {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& r : reports) arr.push_back(io::dnp_json(r));
      body << arr.dump(2) << '\n';
    } else if (opt.format == "csv") {
      body << io::kDnpCsvHeader;
      for (const auto& r : reports) body << io::dnp_csv_row(r);
    } else {
      body << io::dnp_table_text(reports);
    }
    for (const auto& r : reports) {
      if (!r.agrees) return kExitCheckFailed;
    }
    return kExitOk;
  }

  static int run_dnp(const Options& opt, std::ostream& body) {
    const auto ns = orders_from(opt, std::nullopt);
    return write_dnp(opt, table1_report(ns), body);
  }

  static int run_table1(const Options& opt, std::ostream& body) {
    std::vector<std::uint32_t> ns(kPublishedOrders.begin(), kPublishedOrders.end());
    if (!opt.range_text.empty()) ns = orders_from(opt, std::nullopt);
    return write_dnp(opt, table1_report(ns), body);
  }

  static std::vector<FailureScenario> scenarios_from(const Options& opt) {
    if (!opt.config_path.empty()) {
      std::ifstream file(opt.config_path);
      return {io::scenario_from_json(nlohmann::json::parse(file))};
    }
    std::vector<FailureScenario> out;
    const auto forced = opt.fail_set_text.empty() ? std::vector<Vertex>{}
                                                  : parse_vertex_list(opt.fail_set_text);
    for (auto n : orders_from(opt, std::nullopt)) {
      FailureScenario s;
      s.n = n;
      s.trials = opt.trials;
      s.seed = opt.seed;
      s.forced_failed = forced;
      s.failures = opt.failures.value_or(forced.empty() ? 1u
                                                        : static_cast<std::uint32_t>(forced.size()));
      validate(s);
      out.push_back(std::move(s));
    }
    return out;
  }

  static bool v1_only(const FailureScenario& s) {
    return s.failures == 1 && s.forced_failed == std::vector<Vertex>{1};
  }

  static int run_resilience(const Options& opt, std::ostream& body) {
    const auto scenarios = scenarios_from(opt);
    if (opt.format == "csv" && scenarios.size() != 1) {
      throw CLI::ValidationError("--range", "CSV output takes a single order");
    }
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& s : scenarios) {
      const auto reports = failure_sweep(s, opt.threads);
      const char* model = v1_only(s) ? "v1-failure" : "random-failures-extension";
      if (opt.format == "csv") {
        body << io::kResilienceCsvHeader;
        for (const auto& r : reports) body << io::resilience_csv_row(r);
      } else if (opt.format == "json") {
        nlohmann::json rs = nlohmann::json::array();
        for (const auto& r : reports) rs.push_back(io::resilience_json(r));
        arr.push_back({{"n", s.n},
                       {"failures", s.failures},
                       {"trials", s.trials},
                       {"seed", s.seed},
                       {"forced_failed", s.forced_failed},
                       {"model", model},
                       {"reports", std::move(rs)}});
      } else {
        body << "PG(" << s.n << ") failures=" << s.failures << " trials=" << s.trials
             << " seed=" << s.seed << " model=" << model << '\n';
        body << "trial  failed          connected  diameter  avg_hops    hub\n";
        for (const auto& r : reports) body << io::resilience_text_row(r);
      }
    }
    if (opt.format == "json") body << arr.dump(2) << '\n';
    return kExitOk;
  }

  static int run_export(const Options& opt, std::ostream& body) {
    const Graph g = pascal_graph(*opt.n);
    if (opt.format == "csv") body << io::graph_edge_csv(g);
    else body << io::graph_dot(g, "PG" + std::to_string(*opt.n));
    return kExitOk;
  }

  std::ostream& out_;
  std::ostream& err_;
};

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  return Runner(out, err).run(argc, argv);
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"pascalnet"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace pascalnet::cli
