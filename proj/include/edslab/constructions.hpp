// Deterministic constructors for the named tree families. Labelings are
// fixed and documented per constructor so canonical codes and golden tests
// stay stable across runs.
//
// Constructors accept every structurally realizable parameter combination
// (all leaf-group counts >= 0), which is a superset of the ranges the
// closed-form evaluators mark valid; the FormulaValue validity flag is the
// authority on the proven range.
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "edslab/tree.hpp"

namespace edslab {

// 0-1-...-(n-1).
Tree path(int n);
// Center 0, leaves 1..n-1.
Tree star(int n);

// Spine 0..l-1; a extra leaves on vertex 0 labeled l..l+a-1; b extra leaves
// on vertex l-1 labeled l+a..l+a+b-1. Order l+a+b. Requires l >= 2, a,b >= 0.
Tree double_broom(int l, int a, int b);

// Center 0 adjacent to 1..n-beta; a pendant labeled n-beta+j is attached to
// each support j for j = 1..beta-1. Matching number is beta.
// Requires 1 <= beta <= n/2.
Tree t_n_beta(int n, int beta);

// Hub 0; leg i occupies the next legs[i] labels as a chain off the hub.
// Requires every leg >= 1. Order 1 + sum(legs).
Tree spider(const std::vector<int> &legs);
// Spider with r copies of ceil((n-1)/k) followed by k-r copies of
// floor((n-1)/k), where r = (n-1) mod k. Requires k >= 2 and n-1 >= k.
Tree balanced_spider(int n, int k);

// Base tree keeps labels 0..n-1; pendant j (0-based, j < p) of vertex i is
// labeled n + i*p + j. Order (p+1)*n. Requires p >= 1.
Tree pendant_expansion(const Tree &t, int p);
// pendant_expansion(t, 1).
Tree corona_k1(const Tree &t);

// Centers u=0, w=1 adjacent; p-1 leaves on u labeled 2..p; q-1 leaves on w
// labeled p+1..p+q-1. Bipartition sizes (p,q). Requires p,q >= 2.
Tree double_star(int p, int q);

// Hub c=0 adjacent to a=1, b=2 and q-2 leaves (3..q); a carries p-s-1 leaves
// (q+1..q+p-s-1); b carries s leaves (q+p-s..p+q-1). Bipartition (p,q).
Tree t_s(int p, int q, int s);
// Same shape with the roles exchanged: c carries p-2 leaves, a carries
// q-t-1, b carries t. Labels c=0, a=1, b=2, then c-, a-, b-leaves.
Tree t_prime_t(int p, int q, int t);

// Hub c=0 with q-3 leaves, a pendant path c-x-y (x=3, y=4), a=1 on c with
// p-s-2 leaves, b=2 on c with s leaves. Labels: c-leaves 5..q+1, then
// a-leaves, then b-leaves. Bipartition (p,q).
Tree hat_t_s(int p, int q, int s);
// Caterpillar spine w1=0, w2=1, w3=2, b=3 with p-2 leaves on w1 (4..p+1),
// q-t-2 leaves on w2, none on w3, t leaves on b. Bipartition (p,q).
Tree tilde_t_t(int p, int q, int t);
// Vertex u=0 with p-3 leaves, adjacent to b=1 (r leaves) and v=2 (q-r-2
// leaves), with a pendant path v-x-y (x=3, y=4). Labels: u-leaves 5..p+1,
// then b-leaves, then v-leaves. Bipartition (p,q).
Tree vec_t_r(int p, int q, int r);

enum class FamilyId {
  path,
  star,
  double_broom,
  t_n_beta,
  spider,
  balanced_spider,
  corona,
  pendant_expansion,
  double_star,
  t_s,
  t_prime_t,
  hat_t_s,
  tilde_t_t,
  vec_t_r,
};

// Tagged family descriptor with a canonical text syntax:
//   path:7  star:5  broom:4,1,5  tnbeta:8,3  spider:2,2,2  bspider:7,3
//   dstar:3,4  ts:4,5,2  tprime:4,5,1  hats:4,5,1  tildet:4,5,1  vect:4,5,1
//   corona:<spec>  pexp:<p>:<spec>
struct FamilySpec {
  FamilyId id = FamilyId::path;
  std::vector<int> params;
  std::shared_ptr<FamilySpec> base;  // corona / pexp only
};

FamilySpec parse_family_spec(const std::string &text);
std::string format_family_spec(const FamilySpec &spec);
Tree make_family(const FamilySpec &spec);

}  // namespace edslab
