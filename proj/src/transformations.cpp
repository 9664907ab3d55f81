#include "edslab/transformations.hpp"

#include <algorithm>

#include "edslab/invariants.hpp"

namespace edslab {

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

TransformOutcome finish(const Tree &before, Tree after) {
  TransformOutcome out{std::move(after), eccentric_distance_sum(before), 0,
                       EdsRelation::equal};
  out.eds_after = eccentric_distance_sum(out.result);
  out.relation = out.eds_after < out.eds_before ? EdsRelation::strict_decrease
                 : out.eds_after > out.eds_before
                     ? EdsRelation::strict_increase
                     : EdsRelation::equal;
  return out;
}

void check_vertex(const Tree &t, int v) {
  if (v < 0 || v >= t.order())
    throw TransformError(TransformErrorKind::missing_edge,
                         "vertex " + std::to_string(v) + " out of range");
}

// Vertices of the component of T - v that contains start.
std::vector<int> component_away_from(const Tree &t, int v, int start) {
  std::vector<int> comp{start};
  std::vector<char> seen(t.order(), 0);
  seen[v] = seen[start] = 1;
  for (size_t i = 0; i < comp.size(); ++i)
    for (int w : t.neighbors(comp[i]))
      if (!seen[w]) {
        seen[w] = 1;
        comp.push_back(w);
      }
  return comp;
}

// True iff the component hanging at root (away from v) is a path with root
// as an endpoint: walking from root, every vertex has at most one child.
bool is_pendant_path(const Tree &t, int v, int root) {
  int prev = v;
  int cur = root;
  while (true) {
    int next = -1;
    for (int w : t.neighbors(cur)) {
      if (w == prev) continue;
      if (next >= 0) return false;
      next = w;
    }
    if (next < 0) return true;
    prev = cur;
    cur = next;
  }
}

}  // namespace

const char *to_string(EdsRelation r) {
  switch (r) {
    case EdsRelation::strict_decrease: return "strict-decrease";
    case EdsRelation::equal: return "equal";
    case EdsRelation::strict_increase: return "strict-increase";
  }
  return "unknown";
}

const char *to_string(TransformErrorKind k) {
  switch (k) {
    case TransformErrorKind::order: return "order";
    case TransformErrorKind::missing_edge: return "missing-edge";
    case TransformErrorKind::pendant_edge: return "pendant-edge";
    case TransformErrorKind::degree: return "degree";
    case TransformErrorKind::eccentricity: return "eccentricity";
    case TransformErrorKind::no_path_subtree: return "no-path-subtree";
    case TransformErrorKind::bad_spine: return "bad-spine";
    case TransformErrorKind::no_movable_block: return "no-movable-block";
    case TransformErrorKind::leaf_shape: return "leaf-shape";
  }
  return "unknown";
}

TransformOutcome edge_growing(const Tree &t, int u, int v) {
  if (t.order() <= 3)
    throw TransformError(TransformErrorKind::order,
                         "edge growing needs order > 3");
  check_vertex(t, u);
  check_vertex(t, v);
  if (u == v || !t.has_edge(u, v))
    throw TransformError(TransformErrorKind::missing_edge,
                         "no such edge to contract");
  if (t.degree(u) < 2 || t.degree(v) < 2)
    throw TransformError(TransformErrorKind::pendant_edge,
                         "edge growing needs an internal edge");
  EdgeList edges;
  edges.reserve(t.order() - 1);
  for (auto [a, b] : t.edges()) {
    if ((a == u && b == v) || (a == v && b == u)) continue;
    edges.emplace_back(a == v ? u : a, b == v ? u : b);
  }
  edges.emplace_back(u, v);  // label v becomes the fresh leaf on u
  return finish(t, Tree::from_edges(t.order(), edges));
}

namespace {

// Root of the designated pendant-path component at v away from w: smallest
// qualifying neighbor id. -1 when none qualifies.
int designated_path_root(const Tree &t, int v, int w) {
  for (int x : t.neighbors(v)) {
    if (x == w) continue;
    if (is_pendant_path(t, v, x)) return x;
  }
  return -1;  // neighbors are in ascending order, so first hit is smallest
}

void check_rho_preconditions(const Tree &t, int v, int w) {
  check_vertex(t, v);
  check_vertex(t, w);
  if (v == w || !t.has_edge(v, w))
    throw TransformError(TransformErrorKind::missing_edge,
                         "w must be a neighbor of v");
  if (t.degree(v) < 3)
    throw TransformError(TransformErrorKind::degree,
                         "rho needs deg(v) >= 3");
  std::vector<int> ecc = eccentricity(t);
  if (ecc[v] < ecc[w])
    throw TransformError(TransformErrorKind::eccentricity,
                         "rho needs ecc(v) >= ecc(w)");
}

}  // namespace

TransformOutcome rho_transform(const Tree &t, int v, int w) {
  check_rho_preconditions(t, v, w);
  int keep = designated_path_root(t, v, w);
  if (keep < 0)
    throw TransformError(TransformErrorKind::no_path_subtree,
                         "no pendant path hangs at v away from w");
  EdgeList edges;
  edges.reserve(t.order() - 1);
  for (auto [a, b] : t.edges()) {
    int other = a == v ? b : b == v ? a : -1;
    if (other >= 0 && other != w && other != keep)
      edges.emplace_back(w, other);
    else
      edges.emplace_back(a, b);
  }
  return finish(t, Tree::from_edges(t.order(), edges));
}

bool rho_equality_condition(const Tree &t, int v, int w) {
  check_rho_preconditions(t, v, w);
  int keep = designated_path_root(t, v, w);
  if (keep < 0)
    throw TransformError(TransformErrorKind::no_path_subtree,
                         "no pendant path hangs at v away from w");
  std::vector<int> ecc = eccentricity(t);
  if (ecc[v] != ecc[w]) return false;
  std::vector<char> in_set(t.order(), 0);
  in_set[v] = 1;
  for (int x : component_away_from(t, v, w)) in_set[x] = 1;
  for (int x : component_away_from(t, v, keep)) in_set[x] = 1;
  int members = 0;
  int induced_edges = 0;
  int endpoints = 0;
  for (int x = 0; x < t.order(); ++x) {
    if (!in_set[x]) continue;
    ++members;
    int deg = 0;
    for (int y : t.neighbors(x)) deg += in_set[y];
    if (deg > 2) return false;
    if (deg <= 1) ++endpoints;
    induced_edges += deg;
  }
  induced_edges /= 2;
  // Connected superset of an edge, so it's a path iff degrees fit exactly.
  if (induced_edges != members - 1 || endpoints != 2) return false;
  return induced_edges == diameter(t);
}

namespace {

struct SpineView {
  std::vector<int> pos;          // spine index per vertex, -1 off spine
  std::vector<int> block_size;   // |T_i|: spine vertex i plus its hangers
};

SpineView check_spine(const Tree &t, const std::vector<int> &spine) {
  int d = static_cast<int>(spine.size()) - 1;
  if (d < 1)
    throw TransformError(TransformErrorKind::bad_spine,
                         "spine needs at least two vertices");
  SpineView view;
  view.pos.assign(t.order(), -1);
  for (int i = 0; i <= d; ++i) {
    check_vertex(t, spine[i]);
    if (view.pos[spine[i]] >= 0)
      throw TransformError(TransformErrorKind::bad_spine,
                           "spine repeats a vertex");
    view.pos[spine[i]] = i;
    if (i > 0 && !t.has_edge(spine[i - 1], spine[i]))
      throw TransformError(TransformErrorKind::bad_spine,
                           "spine vertices are not consecutive");
  }
  if (d != diameter(t))
    throw TransformError(TransformErrorKind::bad_spine,
                         "spine is not a longest path");
  view.block_size.assign(d + 1, 1);
  std::vector<char> seen(t.order(), 0);
  for (int i = 0; i <= d; ++i) seen[spine[i]] = 1;
  for (int i = 0; i <= d; ++i) {
    std::vector<int> stack;
    for (int x : t.neighbors(spine[i]))
      if (!seen[x]) {
        seen[x] = 1;
        stack.push_back(x);
      }
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      ++view.block_size[i];
      for (int y : t.neighbors(x))
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
    }
  }
  return view;
}

}  // namespace

int slide_block_index(const Tree &t, const std::vector<int> &spine) {
  SpineView view = check_spine(t, spine);
  int d = static_cast<int>(spine.size()) - 1;
  for (int i = 2; i <= d - 2; ++i)
    if (view.block_size[i] > 1) return i;
  return -1;
}

TransformOutcome leaf_block_slide(const Tree &t, const std::vector<int> &spine,
                                  int r) {
  SpineView view = check_spine(t, spine);
  int d = static_cast<int>(spine.size()) - 1;
  if (view.block_size[1] > view.block_size[d - 1])
    throw TransformError(TransformErrorKind::bad_spine,
                         "needs |T_1| <= |T_{d-1}|; reverse the spine");
  int first = -1;
  for (int i = 2; i <= d - 2 && first < 0; ++i)
    if (view.block_size[i] > 1) first = i;
  if (first < 0)
    throw TransformError(TransformErrorKind::no_movable_block,
                         "already a double broom on this spine");
  if (r != first)
    throw TransformError(TransformErrorKind::no_movable_block,
                         "r must be the first movable block, " +
                             std::to_string(first));
  int vr = spine[r];
  int v1 = spine[1];
  EdgeList edges;
  edges.reserve(t.order() - 1);
  for (auto [a, b] : t.edges()) {
    int other = a == vr ? b : b == vr ? a : -1;
    if (other >= 0 && view.pos[other] < 0)
      edges.emplace_back(v1, other);
    else
      edges.emplace_back(a, b);
  }
  return finish(t, Tree::from_edges(t.order(), edges));
}

TransformOutcome transformation_i(const Tree &t, int w, int u, int v) {
  check_vertex(t, w);
  check_vertex(t, u);
  check_vertex(t, v);
  if (w == u || u == v || w == v || !t.has_edge(w, u) || !t.has_edge(u, v))
    throw TransformError(TransformErrorKind::missing_edge,
                         "needs distinct w,u,v with edges wu and uv");
  if (t.degree(w) < 2)
    throw TransformError(TransformErrorKind::degree,
                         "transformation I needs deg(w) >= 2");
  std::vector<int> moved;
  for (int x : t.neighbors(v)) {
    if (x == u) continue;
    if (t.degree(x) != 1)
      throw TransformError(TransformErrorKind::leaf_shape,
                           "every neighbor of v except u must be a leaf");
    moved.push_back(x);
  }
  if (moved.empty())
    throw TransformError(TransformErrorKind::leaf_shape,
                         "v must carry at least one pendant leaf");
  EdgeList edges;
  edges.reserve(t.order() - 1);
  for (auto [a, b] : t.edges()) {
    int other = a == v ? b : b == v ? a : -1;
    if (other >= 0 && other != u)
      edges.emplace_back(w, other);
    else
      edges.emplace_back(a, b);
  }
  return finish(t, Tree::from_edges(t.order(), edges));
}

}  // namespace edslab
