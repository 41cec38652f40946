#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pascalnet {

// Largest order any generator accepts unless the caller passes its own Limits.
inline constexpr std::size_t kDefaultMaxOrder = 4096;

struct Limits {
  std::size_t max_order = kDefaultMaxOrder;
};

// An argument lies outside the mathematical domain of the operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A request exceeds the configured maximum order.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Two vertices have no path between them in the surviving graph.
class UnreachableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pascalnet
