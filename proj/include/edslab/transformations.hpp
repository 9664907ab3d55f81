// The four EDS-monotone tree surgeries, as pure functions returning a fresh
// tree plus the before/after values and their relation. Preconditions are
// validated and violations throw TransformError; the monotonicity contracts
// themselves are checked exhaustively by the verification harness.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "edslab/tree.hpp"

namespace edslab {

enum class EdsRelation { strict_decrease, equal, strict_increase };
const char *to_string(EdsRelation r);

struct TransformOutcome {
  Tree result;
  int64_t eds_before = 0;
  int64_t eds_after = 0;
  EdsRelation relation = EdsRelation::equal;
};

enum class TransformErrorKind {
  order,             // tree too small for the operation
  missing_edge,      // named edge absent or vertices not distinct
  pendant_edge,      // edge-growing needs both endpoints of degree >= 2
  degree,            // vertex degree precondition violated
  eccentricity,      // requires ecc(v) >= ecc(w)
  no_path_subtree,   // no pendant-path component hangs at v away from w
  bad_spine,         // spine is not a longest path of the tree
  no_movable_block,  // no interior spine vertex carries an off-spine subtree
  leaf_shape,        // v needs >= 1 non-u neighbors, all of them leaves
};
const char *to_string(TransformErrorKind k);

class TransformError : public std::runtime_error {
 public:
  TransformError(TransformErrorKind kind, const std::string &msg)
      : std::runtime_error(msg), kind_(kind) {}
  TransformErrorKind kind() const { return kind_; }

 private:
  TransformErrorKind kind_;
};

// Contracts the internal edge (u,v) into u and hangs a new leaf (reusing
// label v) on u. Requires order > 3 and both endpoints of degree >= 2.
// The eds strictly decreases.
TransformOutcome edge_growing(const Tree &t, int u, int v);

// Requires deg(v) >= 3, w adjacent to v, ecc(v) >= ecc(w). Among the
// components of T - v other than w's, at least one must be a pendant path
// (a path with its v-neighbor as an endpoint); the one with the smallest
// root id stays, the others are re-rooted from v to w. The eds never
// increases; equality holds exactly under rho_equality_condition.
TransformOutcome rho_transform(const Tree &t, int v, int w);

// True iff ecc(v) == ecc(w) and the vertices of w's component of T - v,
// together with v and the designated pendant path, induce a path whose
// length equals the diameter.
bool rho_equality_condition(const Tree &t, int v, int w);

// spine must be a longest path v_0..v_d given as vertex ids. Writes the
// first interior index r in 2..d-2 whose spine vertex carries off-spine
// neighbors, or -1 if none. Throws bad_spine.
int slide_block_index(const Tree &t, const std::vector<int> &spine);

// Moves all off-spine neighbors of spine vertex v_r to v_1. Requires spine
// to be a longest path with hanging-block orders |T_1| <= |T_{d-1}|, and r
// to be the first interior index (2..d-2) with a nontrivial block. The eds
// strictly increases.
TransformOutcome leaf_block_slide(const Tree &t, const std::vector<int> &spine,
                                  int r);

// Requires edges (w,u) and (u,v) with w,u,v distinct, deg(w) >= 2, and
// every neighbor of v except u a leaf (at least one). Moves those leaves
// from v to w. The eds strictly decreases, the bipartition sizes are
// preserved, and the diameter does not increase.
TransformOutcome transformation_i(const Tree &t, int w, int u, int v);

}  // namespace edslab
