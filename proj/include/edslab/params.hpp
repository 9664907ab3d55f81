// Structural parameters used as class constraints: domination number and
// matching number. Each has a linear-time rooted DP and an exponential
// brute-force oracle so that verdicts downstream never hinge on a single
// implementation.
#pragma once

#include "edslab/tree.hpp"

namespace edslab {

// Minimum size of a set S such that every vertex outside S has a neighbor
// in S. Three-state rooted DP.
int domination_number(const Tree &t);

// Maximum number of pairwise disjoint edges. Two-state rooted DP.
int matching_number(const Tree &t);

// Exhaustive reference implementations. Guarded: order <= 20 for the vertex
// subset scan, order <= 16 for the edge subset scan.
int domination_number_oracle(const Tree &t);
int matching_number_oracle(const Tree &t);

}  // namespace edslab
