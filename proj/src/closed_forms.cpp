#include "edslab/closed_forms.hpp"

namespace edslab {

namespace {

FormulaValue flagged(int64_t value, bool valid, const std::string &note) {
  FormulaValue f;
  f.value = value;
  f.valid = valid;
  if (!valid) f.note = note;
  return f;
}

}  // namespace

FormulaValue eds_t_n_beta(int64_t n, int64_t beta) {
  if (beta < 1 || 2 * beta > n)
    throw TreeError(TreeErrorKind::out_of_range,
                    "no tree of order " + std::to_string(n) +
                        " has matching number " + std::to_string(beta));
  int64_t v = 6 * n * n + beta * beta + 9 * beta * n - 22 * n - 28 * beta + 34;
  return flagged(v, beta >= 3,
                 "only proven for matching number >= 3; direct eds disagrees "
                 "at 1 and 2");
}

int64_t corona_eds(int64_t n, int64_t m, int64_t eds_t, int64_t wiener_t,
                   int64_t totecc_t) {
  if (m < 1)
    throw TreeError(TreeErrorKind::out_of_range,
                    "pendant multiplicity must be >= 1");
  return (m + 1) * (m + 1) * eds_t + 2 * (2 * m + 1) * (m + 1) * wiener_t +
         2 * m * (n * m + n - 1) * totecc_t + 4 * n * n * m * m +
         3 * n * n * m - 4 * n * m;
}

FormulaValue f_s(int64_t n, int64_t p, int64_t s) {
  int64_t v = 6 * n * n + 9 * n * p - 7 * p * p - 22 * n - 4 * p + 16 * p * s -
              16 * s * s - 16 * s + 18;
  bool ok = p >= 3 && n - p >= p && s >= 1 && 2 * s <= p - 1;
  return flagged(v, ok, "proven range: 3 <= p <= n-p, 1 <= s <= (p-1)/2");
}

FormulaValue g_t(int64_t n, int64_t q, int64_t t) {
  int64_t v = 6 * n * n + 9 * n * q - 7 * q * q - 22 * n - 4 * q + 16 * q * t -
              16 * t * t - 16 * t + 18;
  bool ok = n - q >= 3 && q >= n - q && t >= 1 && 2 * t <= q - 1;
  return flagged(v, ok, "proven range: 3 <= n-q <= q, 1 <= t <= (q-1)/2");
}

FormulaValue f1(int64_t n, int64_t p, int64_t s) {
  int64_t v = 6 * n * n + 9 * n * p - 7 * p * p - 22 * n + 12 * p +
              16 * p * s - 16 * s * s - 32 * s - 14;
  bool ok = p >= 4 && n - p > p && s >= 1 && s <= p - 3;
  return flagged(v, ok, "proven range: 4 <= p < n-p, 1 <= s <= p-3");
}

FormulaValue f2(int64_t n, int64_t p, int64_t t) {
  int64_t v = 8 * n * n + 11 * n * p - 9 * p * p - 33 * n + 14 * p +
              20 * n * t + 3 * p * t - 64 * t - 18 * t * t - 4;
  bool ok = p >= 4 && n - p > p && t >= 1 && t <= p - 3;
  return flagged(v, ok, "proven range: 4 <= p < n-p, 1 <= t <= p-3");
}

FormulaValue f3(int64_t n, int64_t p, int64_t r) {
  int64_t v = 8 * n * n + 8 * n * p - 8 * p * p - 24 * n + 17 * p +
              20 * n * r - 17 * p * r - 4 * r - 18 * r * r - 22;
  bool ok = p >= 4 && n - p > p && r >= 1 && r <= (n - p) - 3;
  return flagged(v, ok, "proven range: 4 <= p < n-p, 1 <= r <= n-p-3");
}

int64_t eds_double_star(int64_t p, int64_t q) {
  if (p < 2 || q < 2)
    throw TreeError(TreeErrorKind::out_of_range,
                    "double star sides must be >= 2");
  return 2 * (p + 2 * q - 2) + 2 * (q + 2 * p - 2) +
         3 * (p - 1) * (2 * p + 3 * q - 4) + 3 * (q - 1) * (2 * q + 3 * p - 4);
}

int64_t eds_star(int64_t n) {
  if (n < 1)
    throw TreeError(TreeErrorKind::out_of_range, "order must be >= 1");
  return (n - 1) * (4 * n - 5);
}

int64_t total_ecc_path_bound(int64_t n, int64_t d) {
  if (d < 2 || d > n - 1)
    throw TreeError(TreeErrorKind::out_of_range,
                    "diameter must satisfy 2 <= d <= n-1");
  int64_t quadrupled = 4 * n * d - d * d + (d % 2 == 1 ? 1 : 0);
  // nd − d²/4 (+1/4 for odd d) is an integer: d² ≡ 0 or 1 (mod 4).
  return quadrupled / 4;
}

const char *to_string(ThresholdVariant v) {
  return v == ThresholdVariant::paper ? "paper" : "rederived";
}

const char *to_string(ThirdMinWinner w) {
  switch (w) {
    case ThirdMinWinner::t2: return "T2";
    case ThirdMinWinner::t1prime: return "T1Prime";
    case ThirdMinWinner::tie: return "Tie";
  }
  return "unknown";
}

int64_t third_min_quadratic(int64_t n, int64_t p, ThresholdVariant v) {
  if (v == ThresholdVariant::paper)
    return 2 * n * n + 12 * n - 4 * n * p - 30 * p + 64;
  return 2 * n * n - 4 * n * p + 12 * n - 40 * p + 64;
}

ThirdMinPrediction third_min_winner(int64_t n, int64_t p, ThresholdVariant v) {
  if (p < 4 || n - p <= p)
    throw TreeError(TreeErrorKind::out_of_range,
                    "third-minimum comparison needs 4 <= p < n-p");
  ThirdMinPrediction out;
  out.quadratic = third_min_quadratic(n, p, v);
  out.t2_value = f_s(n, p, 2).value;
  out.t1prime_value = g_t(n, n - p, 1).value;
  out.winner = out.quadratic > 0   ? ThirdMinWinner::t2
               : out.quadratic < 0 ? ThirdMinWinner::t1prime
                                   : ThirdMinWinner::tie;
  return out;
}

}  // namespace edslab
