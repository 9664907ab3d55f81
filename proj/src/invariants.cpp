#include "edslab/invariants.hpp"

#include <algorithm>

namespace edslab {

std::vector<int> bfs_distances(const Tree &t, int source) {
  int n = t.order();
  std::vector<int> dist(n, -1);
  std::vector<int> queue;
  queue.reserve(n);
  dist[source] = 0;
  queue.push_back(source);
  for (size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    for (int w : t.neighbors(v))
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

int64_t transmission(const Tree &t, int v) {
  auto dist = bfs_distances(t, v);
  int64_t sum = 0;
  for (int d : dist) sum += d;
  return sum;
}

int eccentricity(const Tree &t, int v) {
  auto dist = bfs_distances(t, v);
  return *std::max_element(dist.begin(), dist.end());
}

int radius(const Tree &t) {
  int r = t.order();
  for (int v = 0; v < t.order(); ++v) r = std::min(r, eccentricity(t, v));
  return r;
}

int diameter(const Tree &t) {
  int d = 0;
  for (int v = 0; v < t.order(); ++v) d = std::max(d, eccentricity(t, v));
  return d;
}

std::vector<int> center(const Tree &t) {
  int n = t.order();
  std::vector<int> ecc(n);
  int r = n;
  for (int v = 0; v < n; ++v) {
    ecc[v] = eccentricity(t, v);
    r = std::min(r, ecc[v]);
  }
  std::vector<int> c;
  for (int v = 0; v < n; ++v)
    if (ecc[v] == r) c.push_back(v);
  return c;
}

InvariantRecord compute_invariants(const Tree &t) {
  int n = t.order();
  InvariantRecord rec;
  rec.order = n;
  int rad = n, diam = 0;
  std::vector<int> ecc(n);
  for (int v = 0; v < n; ++v) {
    auto dist = bfs_distances(t, v);
    int64_t d_v = 0;
    int e_v = 0;
    for (int d : dist) {
      d_v += d;
      e_v = std::max(e_v, d);
    }
    ecc[v] = e_v;
    rad = std::min(rad, e_v);
    diam = std::max(diam, e_v);
    rec.eds += static_cast<int64_t>(e_v) * d_v;
    rec.wiener += d_v;
    rec.degree_distance += static_cast<int64_t>(t.degree(v)) * d_v;
    rec.eccentric_connectivity += static_cast<int64_t>(e_v) * t.degree(v);
    rec.total_eccentricity += e_v;
  }
  rec.wiener /= 2;  // each unordered pair was counted from both ends
  rec.radius = rad;
  rec.diameter = diam;
  for (int v = 0; v < n; ++v)
    if (ecc[v] == rad) rec.center.push_back(v);
  for (int v = 0; v < n; ++v)
    if (t.degree(v) == 1) ++rec.leaf_count;
  rec.bipartition = bipartition_sizes(t);
  return rec;
}

int64_t eccentric_distance_sum(const Tree &t) {
  int64_t sum = 0;
  for (int v = 0; v < t.order(); ++v) {
    auto dist = bfs_distances(t, v);
    int64_t d_v = 0;
    int e_v = 0;
    for (int d : dist) {
      d_v += d;
      e_v = std::max(e_v, d);
    }
    sum += static_cast<int64_t>(e_v) * d_v;
  }
  return sum;
}

int64_t eds_pair_form(const Tree &t) {
  int n = t.order();
  if (n <= 2048) {
    auto rows = distance_matrix(t);
    std::vector<int> ecc(n, 0);
    for (int v = 0; v < n; ++v)
      ecc[v] = *std::max_element(rows[v].begin(), rows[v].end());
    int64_t sum = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        sum += static_cast<int64_t>(ecc[u] + ecc[v]) * rows[u][v];
    return sum;
  }
  // Streaming fallback: one BFS pass for eccentricities, one for the pairs.
  std::vector<int> ecc(n, 0);
  for (int v = 0; v < n; ++v) ecc[v] = eccentricity(t, v);
  int64_t sum = 0;
  for (int u = 0; u < n; ++u) {
    auto dist = bfs_distances(t, u);
    for (int v = u + 1; v < n; ++v)
      sum += static_cast<int64_t>(ecc[u] + ecc[v]) * dist[v];
  }
  return sum;
}

int64_t wiener_index(const Tree &t) {
  int64_t doubled = 0;
  for (int v = 0; v < t.order(); ++v) doubled += transmission(t, v);
  return doubled / 2;
}

int64_t degree_distance(const Tree &t) {
  int64_t sum = 0;
  for (int v = 0; v < t.order(); ++v)
    sum += static_cast<int64_t>(t.degree(v)) * transmission(t, v);
  return sum;
}

int64_t eccentric_connectivity(const Tree &t) {
  int64_t sum = 0;
  for (int v = 0; v < t.order(); ++v)
    sum += static_cast<int64_t>(eccentricity(t, v)) * t.degree(v);
  return sum;
}

int64_t total_eccentricity(const Tree &t) {
  int64_t sum = 0;
  for (int v = 0; v < t.order(); ++v) sum += eccentricity(t, v);
  return sum;
}

std::vector<int> leaves(const Tree &t) {
  std::vector<int> out;
  for (int v = 0; v < t.order(); ++v)
    if (t.degree(v) == 1) out.push_back(v);
  return out;
}

std::pair<int, int> bipartition_sizes(const Tree &t) {
  auto dist = bfs_distances(t, 0);
  int even = 0;
  for (int d : dist)
    if (d % 2 == 0) ++even;
  int odd = t.order() - even;
  return {std::min(even, odd), std::max(even, odd)};
}

std::vector<std::vector<int>> distance_matrix(const Tree &t) {
  if (t.order() > 2048)
    throw TreeError(TreeErrorKind::order_cap,
                    "distance matrix is guarded to order 2048");
  std::vector<std::vector<int>> rows;
  rows.reserve(t.order());
  for (int v = 0; v < t.order(); ++v) rows.push_back(bfs_distances(t, v));
  return rows;
}

}  // namespace edslab
