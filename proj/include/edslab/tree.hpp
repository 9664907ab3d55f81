// Tree representation and IO. Vertices are 0..n-1; construction validates
// tree-ness and rejects malformed input with a typed error. Instances are
// immutable after construction, so every query is const and safe to share
// across threads.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace edslab {

enum class TreeErrorKind {
  out_of_range,    // vertex id outside 0..n-1, or nonpositive order
  self_loop,
  duplicate_edge,
  edge_count,      // number of edges != n-1
  disconnected,    // n-1 edges but not connected (hence cyclic elsewhere)
  bad_format,      // unparseable text input
  order_cap,       // operation refuses orders this large
};

const char *to_string(TreeErrorKind kind);

class TreeError : public std::runtime_error {
 public:
  TreeError(TreeErrorKind kind, const std::string &what)
      : std::runtime_error(what), kind_(kind) {}
  TreeErrorKind kind() const { return kind_; }

 private:
  TreeErrorKind kind_;
};

class Tree {
 public:
  // Validates and normalizes: edges are stored as (min,max) pairs in
  // lexicographic order, adjacency lists ascending.
  static Tree from_edges(int n, std::vector<std::pair<int, int>> edges);

  int order() const { return n_; }
  const std::vector<int> &neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  const std::vector<std::pair<int, int>> &edges() const { return edges_; }
  bool has_edge(int u, int v) const;

 private:
  Tree() = default;
  int n_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<std::pair<int, int>> edges_;
};

// Text format: line 1 is the vertex count, then one "u v" line per edge.
Tree read_edge_list(std::istream &in);
Tree read_edge_list_file(const std::string &path);
void write_edge_list(const Tree &t, std::ostream &out);

// graph6 interop, short form (order <= 62): header byte 63+n, then the upper
// triangle packed column by column into 6-bit groups offset by 63.
Tree tree_from_graph6(const std::string &s);
std::string to_graph6(const Tree &t);

}  // namespace edslab
