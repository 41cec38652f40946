#pragma once

#include "pascalnet/error.hpp"
#include "pascalnet/triangle.hpp"
#include "pascalnet/matrix.hpp"
#include "pascalnet/graph.hpp"
#include "pascalnet/planarity.hpp"
#include "pascalnet/dnp.hpp"
#include "pascalnet/properties.hpp"
#include "pascalnet/resilience.hpp"
#include "pascalnet/io.hpp"
