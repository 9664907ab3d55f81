// Closed-form EDS evaluators. All arithmetic is exact 64-bit integer; the
// third-minimum threshold is decided by the sign of a quadratic, never by a
// floating-point square root.
//
// Each polynomial carries a validity predicate. Evaluating outside the
// proven parameter range returns the value with valid=false and a note,
// rather than throwing, because probing the boundary is exactly what the
// verification harness is for. Structurally impossible parameters (no tree
// of that shape exists) and empty classes do throw.
#pragma once

#include <cstdint>
#include <string>

#include "edslab/tree.hpp"

namespace edslab {

struct FormulaValue {
  int64_t value = 0;
  bool valid = true;
  std::string note;  // set when valid is false
};

// 6n² + β² + 9βn − 22n − 28β + 34. Valid for β >= 3; the β ∈ {1,2} boundary
// provably disagrees with direct eds (51 vs 33 at n=4, β=1) and is flagged.
// Throws for empty classes (β < 1 or 2β > n).
FormulaValue eds_t_n_beta(int64_t n, int64_t beta);

// (m+1)²·ξ^d + 2(2m+1)(m+1)·W + 2m(nm+n−1)·ξ + 4n²m² + 3n²m − 4nm, where the
// inputs are the base tree's order, eds, Wiener index and total eccentricity.
// Equals eds(pendant_expansion(T, m)) for every tree T.
int64_t corona_eds(int64_t n, int64_t m, int64_t eds_t, int64_t wiener_t,
                   int64_t totecc_t);

// 6n² + 9np − 7p² − 22n − 4p + 16ps − 16s² − 16s + 18 == eds(t_s(p, n−p, s)).
// Valid on 3 <= p <= n−p, 1 <= s <= (p−1)/2.
FormulaValue f_s(int64_t n, int64_t p, int64_t s);
// Mirror image in the q-side parameters: f_s with (p,s) -> (q,t).
FormulaValue g_t(int64_t n, int64_t q, int64_t t);

// 6n² + 9np − 7p² − 22n + 12p + 16ps − 16s² − 32s − 14 == eds(hat_t_s).
FormulaValue f1(int64_t n, int64_t p, int64_t s);
// 8n² + 11np − 9p² − 33n + 14p + 20nt + 3pt − 64t − 18t² − 4 == eds(tilde_t_t).
FormulaValue f2(int64_t n, int64_t p, int64_t t);
// 8n² + 8np − 8p² − 24n + 17p + 20nr − 17pr − 4r − 18r² − 22 == eds(vec_t_r).
FormulaValue f3(int64_t n, int64_t p, int64_t r);

// 2(p+2q−2) + 2(q+2p−2) + 3(p−1)(2p+3q−4) + 3(q−1)(2q+3p−4), p,q >= 2.
// Equals eds(double_star(p,q)); gated behind direct-eds tests before use.
int64_t eds_double_star(int64_t p, int64_t q);

// (n−1)(4n−5) == eds(star(n)); same gating as eds_double_star.
int64_t eds_star(int64_t n);

// Upper bound on total eccentricity over diameter-d trees of order n:
// nd − d²/4 for even d, nd − d²/4 + 1/4 for odd d. The bound is always an
// integer; internally 4x the value is formed and divided exactly.
int64_t total_ecc_path_bound(int64_t n, int64_t d);

enum class ThresholdVariant { paper, rederived };
enum class ThirdMinWinner { t2, t1prime, tie };

const char *to_string(ThresholdVariant v);
const char *to_string(ThirdMinWinner w);

// Sign of the quadratic eds(T'_1) − eds(T_2) in the chosen variant:
//   paper:     2n² + 12n − 4np − 30p + 64
//   rederived: 2n² − 4np + 12n − 40p + 64  (expanded from g_t(n,q,1) − f_s(n,p,2))
// Positive -> T_2 is the smaller (wins third place), negative -> T'_1, zero -> tie.
struct ThirdMinPrediction {
  int64_t quadratic = 0;
  ThirdMinWinner winner = ThirdMinWinner::tie;
  int64_t t2_value = 0;       // f_s(n, p, 2)
  int64_t t1prime_value = 0;  // g_t(n, n−p, 1)
};
ThirdMinPrediction third_min_winner(int64_t n, int64_t p, ThresholdVariant v);
int64_t third_min_quadratic(int64_t n, int64_t p, ThresholdVariant v);

}  // namespace edslab
