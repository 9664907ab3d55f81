#include "edslab/constructions.hpp"

#include <numeric>
#include <sstream>
#include <utility>

namespace edslab {

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

void require(bool ok, const std::string &msg) {
  if (!ok) throw TreeError(TreeErrorKind::out_of_range, msg);
}

// Attaches `count` leaves to `host`, labeling them next, next+1, ...
void attach_leaves(EdgeList &edges, int host, int count, int &next) {
  for (int j = 0; j < count; ++j) edges.emplace_back(host, next++);
}

}  // namespace

Tree path(int n) {
  require(n >= 1, "path order must be >= 1");
  EdgeList edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Tree::from_edges(n, edges);
}

Tree star(int n) {
  require(n >= 1, "star order must be >= 1");
  EdgeList edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
  return Tree::from_edges(n, edges);
}

Tree double_broom(int l, int a, int b) {
  require(l >= 2, "double broom spine must have >= 2 vertices");
  require(a >= 0 && b >= 0, "leaf counts must be >= 0");
  EdgeList edges;
  for (int i = 0; i + 1 < l; ++i) edges.emplace_back(i, i + 1);
  int next = l;
  attach_leaves(edges, 0, a, next);
  attach_leaves(edges, l - 1, b, next);
  return Tree::from_edges(l + a + b, edges);
}

Tree t_n_beta(int n, int beta) {
  require(beta >= 1 && 2 * beta <= n,
          "t_n_beta requires 1 <= beta <= n/2");
  EdgeList edges;
  for (int i = 1; i <= n - beta; ++i) edges.emplace_back(0, i);
  for (int j = 1; j <= beta - 1; ++j) edges.emplace_back(j, n - beta + j);
  return Tree::from_edges(n, edges);
}

Tree spider(const std::vector<int> &legs) {
  for (int leg : legs) require(leg >= 1, "spider legs must have length >= 1");
  int n = 1 + std::accumulate(legs.begin(), legs.end(), 0);
  EdgeList edges;
  int next = 1;
  for (int leg : legs) {
    int prev = 0;
    for (int step = 0; step < leg; ++step) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  return Tree::from_edges(n, edges);
}

Tree balanced_spider(int n, int k) {
  require(k >= 2 && n - 1 >= k, "balanced spider requires 2 <= k <= n-1");
  int lo = (n - 1) / k;
  int r = (n - 1) % k;
  std::vector<int> legs;
  legs.insert(legs.end(), r, lo + 1);
  legs.insert(legs.end(), k - r, lo);
  return spider(legs);
}

Tree pendant_expansion(const Tree &t, int p) {
  require(p >= 1, "pendant multiplicity must be >= 1");
  int n = t.order();
  EdgeList edges = t.edges();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < p; ++j) edges.emplace_back(i, n + i * p + j);
  return Tree::from_edges((p + 1) * n, edges);
}

Tree corona_k1(const Tree &t) { return pendant_expansion(t, 1); }

Tree double_star(int p, int q) {
  require(p >= 2 && q >= 2, "double star sides must be >= 2");
  EdgeList edges;
  edges.emplace_back(0, 1);
  int next = 2;
  attach_leaves(edges, 0, p - 1, next);
  attach_leaves(edges, 1, q - 1, next);
  return Tree::from_edges(p + q, edges);
}

Tree t_s(int p, int q, int s) {
  require(q >= 2 && s >= 0 && p - s - 1 >= 0,
          "t_s requires q >= 2, 0 <= s <= p-1");
  EdgeList edges = {{0, 1}, {0, 2}};
  int next = 3;
  attach_leaves(edges, 0, q - 2, next);
  attach_leaves(edges, 1, p - s - 1, next);
  attach_leaves(edges, 2, s, next);
  return Tree::from_edges(p + q, edges);
}

Tree t_prime_t(int p, int q, int t) {
  require(p >= 2 && t >= 0 && q - t - 1 >= 0,
          "t_prime_t requires p >= 2, 0 <= t <= q-1");
  EdgeList edges = {{0, 1}, {0, 2}};
  int next = 3;
  attach_leaves(edges, 0, p - 2, next);
  attach_leaves(edges, 1, q - t - 1, next);
  attach_leaves(edges, 2, t, next);
  return Tree::from_edges(p + q, edges);
}

Tree hat_t_s(int p, int q, int s) {
  require(q >= 3 && s >= 0 && p - s - 2 >= 0,
          "hat_t_s requires q >= 3, 0 <= s <= p-2");
  EdgeList edges = {{0, 1}, {0, 2}, {0, 3}, {3, 4}};
  int next = 5;
  attach_leaves(edges, 0, q - 3, next);
  attach_leaves(edges, 1, p - s - 2, next);
  attach_leaves(edges, 2, s, next);
  return Tree::from_edges(p + q, edges);
}

Tree tilde_t_t(int p, int q, int t) {
  require(p >= 2 && t >= 0 && q - t - 2 >= 0,
          "tilde_t_t requires p >= 2, 0 <= t <= q-2");
  EdgeList edges = {{0, 1}, {1, 2}, {2, 3}};
  int next = 4;
  attach_leaves(edges, 0, p - 2, next);
  attach_leaves(edges, 1, q - t - 2, next);
  attach_leaves(edges, 3, t, next);
  return Tree::from_edges(p + q, edges);
}

Tree vec_t_r(int p, int q, int r) {
  require(p >= 3 && r >= 0 && q - r - 2 >= 0,
          "vec_t_r requires p >= 3, 0 <= r <= q-2");
  EdgeList edges = {{0, 1}, {0, 2}, {2, 3}, {3, 4}};
  int next = 5;
  attach_leaves(edges, 0, p - 3, next);
  attach_leaves(edges, 1, r, next);
  attach_leaves(edges, 2, q - r - 2, next);
  return Tree::from_edges(p + q, edges);
}

namespace {

struct FamilyName {
  FamilyId id;
  const char *text;
  int arity;  // -1: variable (spider); -2: nested base spec
};

constexpr FamilyName kFamilyNames[] = {
    {FamilyId::path, "path", 1},
    {FamilyId::star, "star", 1},
    {FamilyId::double_broom, "broom", 3},
    {FamilyId::t_n_beta, "tnbeta", 2},
    {FamilyId::spider, "spider", -1},
    {FamilyId::balanced_spider, "bspider", 2},
    {FamilyId::corona, "corona", -2},
    {FamilyId::pendant_expansion, "pexp", -2},
    {FamilyId::double_star, "dstar", 2},
    {FamilyId::t_s, "ts", 3},
    {FamilyId::t_prime_t, "tprime", 3},
    {FamilyId::hat_t_s, "hats", 3},
    {FamilyId::tilde_t_t, "tildet", 3},
    {FamilyId::vec_t_r, "vect", 3},
};

const FamilyName &family_name(FamilyId id) {
  for (const auto &f : kFamilyNames)
    if (f.id == id) return f;
  throw TreeError(TreeErrorKind::bad_format, "unknown family id");
}

std::vector<int> parse_int_list(const std::string &text,
                                const std::string &context) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception &) {
      throw TreeError(TreeErrorKind::bad_format,
                      "bad integer '" + item + "' in " + context);
    }
  }
  if (out.empty())
    throw TreeError(TreeErrorKind::bad_format, "empty parameters in " + context);
  return out;
}

}  // namespace

FamilySpec parse_family_spec(const std::string &text) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw TreeError(TreeErrorKind::bad_format,
                    "family spec needs 'name:params', got '" + text + "'");
  std::string name = text.substr(0, colon);
  std::string rest = text.substr(colon + 1);
  for (const auto &f : kFamilyNames) {
    if (name != f.text) continue;
    FamilySpec spec;
    spec.id = f.id;
    if (f.id == FamilyId::corona) {
      spec.base = std::make_shared<FamilySpec>(parse_family_spec(rest));
    } else if (f.id == FamilyId::pendant_expansion) {
      auto sep = rest.find(':');
      if (sep == std::string::npos)
        throw TreeError(TreeErrorKind::bad_format,
                        "pexp spec needs 'pexp:<p>:<base>'");
      spec.params = parse_int_list(rest.substr(0, sep), "pexp multiplicity");
      if (spec.params.size() != 1)
        throw TreeError(TreeErrorKind::bad_format,
                        "pexp takes a single multiplicity");
      spec.base =
          std::make_shared<FamilySpec>(parse_family_spec(rest.substr(sep + 1)));
    } else {
      spec.params = parse_int_list(rest, "family '" + name + "'");
      if (f.arity >= 0 && static_cast<int>(spec.params.size()) != f.arity)
        throw TreeError(TreeErrorKind::bad_format,
                        "family '" + name + "' takes " +
                            std::to_string(f.arity) + " parameters");
    }
    return spec;
  }
  throw TreeError(TreeErrorKind::bad_format, "unknown family '" + name + "'");
}

std::string format_family_spec(const FamilySpec &spec) {
  const FamilyName &f = family_name(spec.id);
  std::string out = f.text;
  if (spec.id == FamilyId::corona) return out + ":" + format_family_spec(*spec.base);
  if (spec.id == FamilyId::pendant_expansion)
    return out + ":" + std::to_string(spec.params.at(0)) + ":" +
           format_family_spec(*spec.base);
  char sep = ':';
  for (int v : spec.params) {
    out += sep;
    out += std::to_string(v);
    sep = ',';
  }
  return out;
}

Tree make_family(const FamilySpec &spec) {
  const auto &a = spec.params;
  switch (spec.id) {
    case FamilyId::path: return path(a.at(0));
    case FamilyId::star: return star(a.at(0));
    case FamilyId::double_broom: return double_broom(a.at(0), a.at(1), a.at(2));
    case FamilyId::t_n_beta: return t_n_beta(a.at(0), a.at(1));
    case FamilyId::spider: return spider(a);
    case FamilyId::balanced_spider: return balanced_spider(a.at(0), a.at(1));
    case FamilyId::corona: return corona_k1(make_family(*spec.base));
    case FamilyId::pendant_expansion:
      return pendant_expansion(make_family(*spec.base), a.at(0));
    case FamilyId::double_star: return double_star(a.at(0), a.at(1));
    case FamilyId::t_s: return t_s(a.at(0), a.at(1), a.at(2));
    case FamilyId::t_prime_t: return t_prime_t(a.at(0), a.at(1), a.at(2));
    case FamilyId::hat_t_s: return hat_t_s(a.at(0), a.at(1), a.at(2));
    case FamilyId::tilde_t_t: return tilde_t_t(a.at(0), a.at(1), a.at(2));
    case FamilyId::vec_t_r: return vec_t_r(a.at(0), a.at(1), a.at(2));
  }
  throw TreeError(TreeErrorKind::bad_format, "unknown family id");
}

}  // namespace edslab
