#include "edslab/params.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

namespace edslab {

namespace {

constexpr int kInf = 1 << 28;

// BFS order rooted at vertex 0: parents plus a root-first visit order, so a
// reverse sweep processes every child before its parent. Iterative so that
// long paths (order up to a few hundred) never touch the call stack.
void root_at_zero(const Tree &t, std::vector<int> &parent,
                  std::vector<int> &order) {
  int n = t.order();
  parent.assign(n, -1);
  order.clear();
  order.reserve(n);
  order.push_back(0);
  for (size_t head = 0; head < order.size(); ++head) {
    int v = order[head];
    for (int w : t.neighbors(v))
      if (w != parent[v] && parent[w] < 0 && w != 0) {
        parent[w] = v;
        order.push_back(w);
      }
  }
}

}  // namespace

int domination_number(const Tree &t) {
  int n = t.order();
  if (n == 1) return 1;
  std::vector<int> parent, order;
  root_at_zero(t, parent, order);
  // States per vertex: in the set / out but dominated by a child / out and
  // not yet dominated (the parent must take it).
  std::vector<int> in_set(n), dominated(n), undominated(n);
  for (int idx = n - 1; idx >= 0; --idx) {
    int v = order[idx];
    int sum_any = 0;       // children free to pick their best state
    int sum_safe = 0;      // children not allowed to lean on v
    int penalty = kInf;    // cheapest upgrade of one child to in-set
    bool leaf = true;
    for (int w : t.neighbors(v)) {
      if (w == parent[v]) continue;
      leaf = false;
      sum_any += std::min({in_set[w], dominated[w], undominated[w]});
      int safe = std::min(in_set[w], dominated[w]);
      sum_safe += safe;
      penalty = std::min(penalty, in_set[w] - safe);
    }
    if (leaf) {
      in_set[v] = 1;
      dominated[v] = kInf;
      undominated[v] = 0;
    } else {
      in_set[v] = 1 + sum_any;
      dominated[v] = std::min(kInf, sum_safe + penalty);
      undominated[v] = sum_safe;
    }
  }
  return std::min(in_set[0], dominated[0]);
}

int matching_number(const Tree &t) {
  int n = t.order();
  if (n == 1) return 0;
  std::vector<int> parent, order;
  root_at_zero(t, parent, order);
  std::vector<int> unmatched(n), matched(n);
  for (int idx = n - 1; idx >= 0; --idx) {
    int v = order[idx];
    int sum_best = 0;
    int gain = -kInf;  // best improvement from matching v with one child
    for (int w : t.neighbors(v)) {
      if (w == parent[v]) continue;
      int best = std::max(unmatched[w], matched[w]);
      sum_best += best;
      gain = std::max(gain, 1 + unmatched[w] - best);
    }
    unmatched[v] = sum_best;
    matched[v] = gain > -kInf ? sum_best + gain : -kInf;
  }
  return std::max(unmatched[0], matched[0]);
}

int domination_number_oracle(const Tree &t) {
  int n = t.order();
  if (n > 20)
    throw TreeError(TreeErrorKind::order_cap,
                    "domination oracle is guarded to order 20");
  if (n == 1) return 1;
  std::vector<uint32_t> closed(n);
  for (int v = 0; v < n; ++v) {
    uint32_t m = 1u << v;
    for (int w : t.neighbors(v)) m |= 1u << w;
    closed[v] = m;
  }
  uint32_t full = (n == 32) ? ~0u : (1u << n) - 1;
  int best = n;
  for (uint32_t s = 1; s <= full; ++s) {
    int popcount = __builtin_popcount(s);
    if (popcount >= best) continue;
    uint32_t covered = 0;
    for (uint32_t rest = s; rest; rest &= rest - 1)
      covered |= closed[__builtin_ctz(rest)];
    if (covered == full) best = popcount;
  }
  return best;
}

int matching_number_oracle(const Tree &t) {
  int n = t.order();
  if (n > 16)
    throw TreeError(TreeErrorKind::order_cap,
                    "matching oracle is guarded to order 16");
  int m = n - 1;
  if (m <= 0) return 0;
  std::vector<uint32_t> ends(m);
  for (int i = 0; i < m; ++i)
    ends[i] = (1u << t.edges()[i].first) | (1u << t.edges()[i].second);
  int best = 0;
  for (uint32_t s = 0; s < (1u << m); ++s) {
    uint32_t used = 0;
    bool ok = true;
    int size = 0;
    for (uint32_t rest = s; rest; rest &= rest - 1) {
      uint32_t e = ends[__builtin_ctz(rest)];
      if (used & e) {
        ok = false;
        break;
      }
      used |= e;
      ++size;
    }
    if (ok) best = std::max(best, size);
  }
  return best;
}

}  // namespace edslab
