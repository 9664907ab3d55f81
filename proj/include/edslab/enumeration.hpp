// Exhaustive generation of free (unlabeled) trees with canonical codes and
// constraint filtering. Ground truth for every extremal claim.
//
// Canonical code: depth sequence of the tree rooted at its center, children
// ordered so the sequence is lexicographically maximal; for bicentral trees
// the larger of the two center-rooted sequences. Codes are equal iff the
// trees are isomorphic, and are totally ordered lexicographically.
//
// Generation walks canonical rooted level sequences in decreasing
// lexicographic order with a centroid guard (every principal subtree of an
// emitted root has at most floor((n-1)/2) vertices), which yields exactly
// one rooted representative per unicentroidal free tree; bicentroidal trees
// (even n) are formed by joining ordered pairs of half-order rooted trees at
// their roots. Per-order class lists are materialized once, sorted by
// canonical code, and cached.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "edslab/tree.hpp"

namespace edslab {

using CanonicalCode = std::vector<uint8_t>;

// Requires order <= 255.
CanonicalCode canonical_code(const Tree &t);
bool isomorphic(const Tree &a, const Tree &b);

// "0,1,2,2,1" rendering used by reports and golden tests.
std::string code_to_string(const CanonicalCode &code);
CanonicalCode code_from_string(const std::string &text);

// Rebuilds the tree a code describes: vertex i's parent is the most recent
// vertex at depth code[i]-1.
Tree tree_from_code(const CanonicalCode &code);

// Soft order cap for class generation (default 18).
int enumeration_cap();
void set_enumeration_cap(int cap);

// All isomorphism classes of order n as strictly increasing canonical
// codes. Cached; safe for concurrent callers. Throws order_cap beyond the
// configured cap.
const std::vector<CanonicalCode> &tree_classes(int n);
int64_t count_classes(int n);

struct ConstraintSpec {
  std::optional<int> leaf_count;
  std::optional<int> domination;
  std::optional<int> matching;
  std::optional<std::pair<int, int>> bipartition;  // stored normalized p <= q
};

bool satisfies(const Tree &t, const ConstraintSpec &c);

// Single-consumer stream over an index range of tree_classes(n), emitting
// decoded trees in increasing code order. Independent streams may run in
// parallel.
class TreeStream {
 public:
  explicit TreeStream(int n);
  TreeStream(int n, size_t begin, size_t end);
  std::optional<Tree> next();
  size_t size() const { return end_ - begin_; }

 private:
  const std::vector<CanonicalCode> *codes_;
  size_t begin_;
  size_t pos_;
  size_t end_;
};

std::vector<Tree> filtered_trees(int n, const ConstraintSpec &c);

}  // namespace edslab
