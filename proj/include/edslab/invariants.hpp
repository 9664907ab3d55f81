// Distance-based invariants. Everything is exact 64-bit integer arithmetic;
// distances come from per-vertex BFS (no floating point anywhere).
//
// Conventions for the one-vertex tree: all sums are 0, radius = diameter = 0,
// the single vertex is the center, and it counts as zero leaves.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "edslab/tree.hpp"

namespace edslab {

std::vector<int> bfs_distances(const Tree &t, int source);

// Transmission D(v): sum of distances from v to all vertices.
int64_t transmission(const Tree &t, int v);
int eccentricity(const Tree &t, int v);

int radius(const Tree &t);
int diameter(const Tree &t);
std::vector<int> center(const Tree &t);  // ascending; size 1 or 2 for trees

// Eccentric distance sum: sum over vertices of ecc(v) * D(v).
int64_t eccentric_distance_sum(const Tree &t);
// Same invariant summed over unordered pairs as (ecc(u)+ecc(v)) * d(u,v).
int64_t eds_pair_form(const Tree &t);

int64_t wiener_index(const Tree &t);
int64_t degree_distance(const Tree &t);        // sum of deg(v) * D(v)
int64_t eccentric_connectivity(const Tree &t); // sum of ecc(v) * deg(v)
int64_t total_eccentricity(const Tree &t);     // sum of ecc(v)

std::vector<int> leaves(const Tree &t);  // degree-1 vertices, ascending
// Sizes of the two color classes, normalized so first <= second.
std::pair<int, int> bipartition_sizes(const Tree &t);

struct InvariantRecord {
  int order = 0;
  int radius = 0;
  int diameter = 0;
  std::vector<int> center;
  int leaf_count = 0;
  std::pair<int, int> bipartition{0, 0};
  int64_t eds = 0;
  int64_t wiener = 0;
  int64_t degree_distance = 0;
  int64_t eccentric_connectivity = 0;
  int64_t total_eccentricity = 0;
};

// Single pass over all BFS sources; cheaper than calling each accessor.
InvariantRecord compute_invariants(const Tree &t);

// Full distance matrix, guarded to order <= 2048; used to speed up the
// pair-form cross-check. row[v][w] = d(v,w).
std::vector<std::vector<int>> distance_matrix(const Tree &t);

}  // namespace edslab
