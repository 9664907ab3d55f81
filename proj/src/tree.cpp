#include "edslab/tree.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace edslab {

const char *to_string(TreeErrorKind kind) {
  switch (kind) {
    case TreeErrorKind::out_of_range: return "out_of_range";
    case TreeErrorKind::self_loop: return "self_loop";
    case TreeErrorKind::duplicate_edge: return "duplicate_edge";
    case TreeErrorKind::edge_count: return "edge_count";
    case TreeErrorKind::disconnected: return "disconnected";
    case TreeErrorKind::bad_format: return "bad_format";
    case TreeErrorKind::order_cap: return "order_cap";
  }
  return "unknown";
}

Tree Tree::from_edges(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 1)
    throw TreeError(TreeErrorKind::out_of_range,
                    "tree order must be at least 1, got " + std::to_string(n));
  if (static_cast<int>(edges.size()) != n - 1)
    throw TreeError(TreeErrorKind::edge_count,
                    "expected " + std::to_string(n - 1) + " edges, got " +
                        std::to_string(edges.size()));
  for (auto &[u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw TreeError(TreeErrorKind::out_of_range,
                      "edge endpoint outside 0.." + std::to_string(n - 1));
    if (u == v)
      throw TreeError(TreeErrorKind::self_loop,
                      "self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  for (size_t i = 1; i < edges.size(); ++i)
    if (edges[i] == edges[i - 1])
      throw TreeError(TreeErrorKind::duplicate_edge,
                      "duplicate edge " + std::to_string(edges[i].first) + " " +
                          std::to_string(edges[i].second));

  Tree t;
  t.n_ = n;
  t.edges_ = std::move(edges);
  t.adj_.assign(n, {});
  for (auto [u, v] : t.edges_) {
    t.adj_[u].push_back(v);
    t.adj_[v].push_back(u);
  }
  for (auto &nb : t.adj_) std::sort(nb.begin(), nb.end());

  // n-1 loop-free distinct edges form a tree iff the graph is connected.
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : t.adj_[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  if (reached != n)
    throw TreeError(TreeErrorKind::disconnected,
                    "edge set does not connect all " + std::to_string(n) +
                        " vertices");
  return t;
}

bool Tree::has_edge(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
  const auto &nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

Tree read_edge_list(std::istream &in) {
  int n;
  if (!(in >> n))
    throw TreeError(TreeErrorKind::bad_format,
                    "missing vertex count on line 1");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(n > 0 ? n - 1 : 0);
  for (int i = 0; i + 1 < n; ++i) {
    int u, v;
    if (!(in >> u >> v))
      throw TreeError(TreeErrorKind::bad_format,
                      "expected " + std::to_string(n - 1) +
                          " edge lines, failed at edge " + std::to_string(i));
    edges.emplace_back(u, v);
  }
  return Tree::from_edges(n, std::move(edges));
}

Tree read_edge_list_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw TreeError(TreeErrorKind::bad_format, "cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list(const Tree &t, std::ostream &out) {
  out << t.order() << "\n";
  for (auto [u, v] : t.edges()) out << u << " " << v << "\n";
}

Tree tree_from_graph6(const std::string &s) {
  if (s.empty())
    throw TreeError(TreeErrorKind::bad_format, "empty graph6 string");
  unsigned char h = static_cast<unsigned char>(s[0]);
  if (h < 63 || h == 126)
    throw TreeError(TreeErrorKind::bad_format,
                    "unsupported graph6 header byte");
  int n = h - 63;
  if (n > 62)
    throw TreeError(TreeErrorKind::order_cap, "graph6 support ends at order 62");
  int nbits = n * (n - 1) / 2;
  int nbytes = (nbits + 5) / 6;
  if (static_cast<int>(s.size()) != 1 + nbytes)
    throw TreeError(TreeErrorKind::bad_format,
                    "graph6 length mismatch for order " + std::to_string(n));
  std::vector<std::pair<int, int>> edges;
  int bit = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row, ++bit) {
      unsigned char b = static_cast<unsigned char>(s[1 + bit / 6]);
      if (b < 63 || b > 126)
        throw TreeError(TreeErrorKind::bad_format, "graph6 byte out of range");
      if ((b - 63) >> (5 - bit % 6) & 1) edges.emplace_back(row, col);
    }
  }
  return Tree::from_edges(n, std::move(edges));
}

std::string to_graph6(const Tree &t) {
  int n = t.order();
  if (n > 62)
    throw TreeError(TreeErrorKind::order_cap, "graph6 support ends at order 62");
  int nbits = n * (n - 1) / 2;
  std::string out(1 + (nbits + 5) / 6, static_cast<char>(63));
  out[0] = static_cast<char>(63 + n);
  int bit = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row, ++bit) {
      if (t.has_edge(row, col))
        out[1 + bit / 6] += static_cast<char>(1 << (5 - bit % 6));
    }
  }
  return out;
}

}  // namespace edslab
