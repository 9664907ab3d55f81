#include "edslab/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "edslab/invariants.hpp"
#include "edslab/params.hpp"

namespace edslab {

namespace {

// Canonical (lexicographically maximal) depth sequence of the subtree at v,
// with v itself at depth 0.
std::vector<uint8_t> subtree_code(const Tree &t, int v, int parent) {
  std::vector<std::vector<uint8_t>> child_codes;
  for (int w : t.neighbors(v)) {
    if (w == parent) continue;
    child_codes.push_back(subtree_code(t, w, v));
  }
  std::sort(child_codes.begin(), child_codes.end(),
            [](const auto &a, const auto &b) { return b < a; });
  std::vector<uint8_t> out;
  out.reserve(1 + t.order());
  out.push_back(0);
  for (const auto &c : child_codes)
    for (uint8_t d : c) out.push_back(static_cast<uint8_t>(d + 1));
  return out;
}

}  // namespace

CanonicalCode canonical_code(const Tree &t) {
  if (t.order() > 255)
    throw TreeError(TreeErrorKind::order_cap,
                    "canonical codes support order <= 255");
  CanonicalCode best;
  for (int c : center(t)) {
    CanonicalCode code = subtree_code(t, c, -1);
    if (code > best) best = std::move(code);
  }
  return best;
}

bool isomorphic(const Tree &a, const Tree &b) {
  if (a.order() != b.order()) return false;
  return canonical_code(a) == canonical_code(b);
}

std::string code_to_string(const CanonicalCode &code) {
  std::string out;
  for (size_t i = 0; i < code.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(static_cast<int>(code[i]));
  }
  return out;
}

CanonicalCode code_from_string(const std::string &text) {
  CanonicalCode out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size() || v < 0 || v > 255)
        throw std::invalid_argument(item);
      out.push_back(static_cast<uint8_t>(v));
    } catch (const std::exception &) {
      throw TreeError(TreeErrorKind::bad_format,
                      "bad canonical code entry '" + item + "'");
    }
  }
  if (out.empty())
    throw TreeError(TreeErrorKind::bad_format, "empty canonical code");
  return out;
}

Tree tree_from_code(const CanonicalCode &code) {
  int n = static_cast<int>(code.size());
  if (n < 1 || code[0] != 0)
    throw TreeError(TreeErrorKind::bad_format,
                    "canonical code must start at depth 0");
  std::vector<int> last_at_depth(n, -1);
  last_at_depth[0] = 0;
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) {
    int d = code[i];
    if (d < 1 || d >= n || last_at_depth[d - 1] < 0)
      throw TreeError(TreeErrorKind::bad_format,
                      "canonical code depth jump at index " +
                          std::to_string(i));
    edges.emplace_back(last_at_depth[d - 1], i);
    last_at_depth[d] = i;
    for (int deeper = d + 1; deeper < n && last_at_depth[deeper] >= 0;
         ++deeper)
      last_at_depth[deeper] = -1;
  }
  return Tree::from_edges(n, edges);
}

namespace {

std::atomic<int> g_enumeration_cap{18};

// Levels are the classic 1-based form: root has level 1. A canonical
// sequence lists subtrees in non-increasing lexicographic order; the
// successor of L (next smaller canonical sequence) truncates at the last
// position p with L[p] >= 3 and tiles the block L[q..p-1], where q is the
// last position before p with L[q] = L[p]-1.
using Levels = std::vector<int>;

// Successor forced at position p (requires L[p] >= 3): the largest
// canonical sequence that is strictly smaller than L within the prefix
// [0..p]. Returns false from the regular successor when L is the star.
void successor_at(Levels &levels, int p) {
  int q = p - 1;
  while (levels[q] != levels[p] - 1) --q;
  int n = static_cast<int>(levels.size());
  int block = p - q;
  for (int i = p; i < n; ++i) levels[i] = levels[i - block];
}

bool successor(Levels &levels) {
  int p = static_cast<int>(levels.size()) - 1;
  while (p >= 0 && levels[p] < 3) --p;
  if (p < 0) return false;
  successor_at(levels, p);
  return true;
}

// Index of the (cap+1)-th vertex of the first root subtree exceeding cap
// vertices, or -1 if all principal subtrees fit. Positions with level 2
// start a new principal subtree.
int first_centroid_violation(const Levels &levels, int cap) {
  int n = static_cast<int>(levels.size());
  int block_start = 1;
  for (int i = 2; i <= n; ++i) {
    if (i == n || levels[i] == 2) {
      if (i - block_start > cap) return block_start + cap;
      block_start = i;
    }
  }
  return -1;
}

Tree tree_from_levels(const Levels &levels) {
  CanonicalCode depths;
  depths.reserve(levels.size());
  for (int l : levels) depths.push_back(static_cast<uint8_t>(l - 1));
  return tree_from_code(depths);
}

// One rooted representative per unicentroidal free tree of order n: the
// canonical sequence rooted at the unique centroid, i.e. every principal
// subtree has at most floor((n-1)/2) vertices.
template <typename Emit>
void generate_unicentroidal(int n, Emit &&emit) {
  if (n == 1) {
    emit(tree_from_levels({1}));
    return;
  }
  if (n == 2) return;  // K2 is bicentroidal
  int cap = (n - 1) / 2;
  Levels levels(n);
  for (int i = 0; i < n; ++i) levels[i] = i + 1;
  while (true) {
    int v = first_centroid_violation(levels, cap);
    if (v >= 0) {
      // Every sequence sharing the prefix [0..v] keeps the oversized
      // subtree, so jump past all of them. levels[v] >= 3 because v sits
      // inside a principal subtree beyond its root.
      successor_at(levels, v);
      continue;
    }
    emit(tree_from_levels(levels));
    if (!successor(levels)) break;
  }
}

// All canonical rooted sequences of order n (no centroid guard), in the
// generator's decreasing lexicographic order.
std::vector<Levels> rooted_sequences(int n) {
  std::vector<Levels> out;
  Levels levels(n);
  for (int i = 0; i < n; ++i) levels[i] = i + 1;
  out.push_back(levels);
  while (successor(levels)) out.push_back(levels);
  return out;
}

// Bicentroidal trees of even order n: two rooted halves of order n/2 joined
// at their roots, one per unordered pair of rooted classes.
template <typename Emit>
void generate_bicentroidal(int n, Emit &&emit) {
  if (n % 2 != 0) return;
  int h = n / 2;
  std::vector<Levels> halves = rooted_sequences(h);
  std::vector<std::vector<std::pair<int, int>>> half_edges;
  half_edges.reserve(halves.size());
  for (const auto &levels : halves)
    half_edges.push_back(tree_from_levels(levels).edges());
  for (size_t i = 0; i < halves.size(); ++i) {
    for (size_t j = i; j < halves.size(); ++j) {
      std::vector<std::pair<int, int>> edges = half_edges[i];
      for (auto [u, v] : half_edges[j]) edges.emplace_back(u + h, v + h);
      edges.emplace_back(0, h);
      emit(Tree::from_edges(n, edges));
    }
  }
}

std::mutex g_cache_mutex;
std::map<int, std::vector<CanonicalCode>> g_class_cache;

}  // namespace

int enumeration_cap() { return g_enumeration_cap.load(); }

void set_enumeration_cap(int cap) { g_enumeration_cap.store(cap); }

const std::vector<CanonicalCode> &tree_classes(int n) {
  if (n < 1 || n > enumeration_cap())
    throw TreeError(TreeErrorKind::order_cap,
                    "order " + std::to_string(n) +
                        " outside enumeration cap " +
                        std::to_string(enumeration_cap()));
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  auto it = g_class_cache.find(n);
  if (it != g_class_cache.end()) return it->second;

  std::vector<CanonicalCode> codes;
  auto emit = [&codes](const Tree &t) { codes.push_back(canonical_code(t)); };
  generate_unicentroidal(n, emit);
  generate_bicentroidal(n, emit);
  std::sort(codes.begin(), codes.end());
  for (size_t i = 1; i < codes.size(); ++i)
    if (codes[i - 1] >= codes[i])
      throw std::logic_error("duplicate isomorphism class generated at order " +
                             std::to_string(n));
  return g_class_cache.emplace(n, std::move(codes)).first->second;
}

int64_t count_classes(int n) {
  return static_cast<int64_t>(tree_classes(n).size());
}

bool satisfies(const Tree &t, const ConstraintSpec &c) {
  if (c.leaf_count &&
      static_cast<int>(leaves(t).size()) != *c.leaf_count)
    return false;
  if (c.bipartition) {
    auto [p, q] = bipartition_sizes(t);
    auto want = *c.bipartition;
    if (want.first > want.second) std::swap(want.first, want.second);
    if (std::make_pair(p, q) != want) return false;
  }
  if (c.matching && matching_number(t) != *c.matching) return false;
  if (c.domination && domination_number(t) != *c.domination) return false;
  return true;
}

TreeStream::TreeStream(int n) : TreeStream(n, 0, tree_classes(n).size()) {}

TreeStream::TreeStream(int n, size_t begin, size_t end)
    : codes_(&tree_classes(n)), begin_(begin), pos_(begin), end_(end) {
  if (end_ > codes_->size() || begin_ > end_)
    throw TreeError(TreeErrorKind::out_of_range, "stream range out of bounds");
}

std::optional<Tree> TreeStream::next() {
  if (pos_ >= end_) return std::nullopt;
  return tree_from_code((*codes_)[pos_++]);
}

std::vector<Tree> filtered_trees(int n, const ConstraintSpec &c) {
  std::vector<Tree> out;
  TreeStream stream(n);
  while (auto t = stream.next())
    if (satisfies(*t, c)) out.push_back(std::move(*t));
  return out;
}

}  // namespace edslab
