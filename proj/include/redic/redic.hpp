#ifndef REDIC_REDIC_HPP
#define REDIC_REDIC_HPP

#include "redic/builders.hpp"
#include "redic/canonical.hpp"
#include "redic/constructions.hpp"
#include "redic/detection.hpp"
#include "redic/existence.hpp"
#include "redic/generators.hpp"
#include "redic/graph.hpp"
#include "redic/graph_io.hpp"
#include "redic/reduction.hpp"
#include "redic/solver.hpp"
#include "redic/tables.hpp"
#include "redic/vertex_set.hpp"

#endif  // REDIC_REDIC_HPP
