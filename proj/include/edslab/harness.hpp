// Theorem-by-theorem verification over exhaustive enumeration, extremal
// scans, and report persistence. Enumeration plus direct eds is the ground
// truth; constructions and closed forms supply the claimed side.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "edslab/enumeration.hpp"

namespace edslab {

enum class TheoremId {
  l2_4,        // broom chain ordering per (n, l)
  l2_5_prop,   // edge growing strictly decreases eds
  l2_6_corona, // corona identity + its extremes per (n, m)
  l2_8,        // domination n/2 classes == corona classes
  t2_10,       // minimum eds at fixed domination number
  t2_11,       // maximum eds at domination n/2
  t2_12,       // maximum eds at domination ceil(n/3)
  t2_13,       // maximum eds at domination 2
  l3_1_prop,   // rho never increases; equality condition exact
  l3_2_prop,   // leaf block slide strictly increases
  t3_4,        // minimum eds at fixed leaf count
  t3_5,        // maximum eds at fixed leaf count
  l4_1_prop,   // leaf relocation strictly decreases
  t4_2,        // minimum eds at fixed bipartition
  t4_3,        // second-smallest eds at fixed bipartition
  t4_4,        // third-smallest eds at fixed bipartition, both variants
  p2_chain,    // bipartition (2, n-2) chain and class equality
};

const char *to_string(TheoremId id);
std::optional<TheoremId> theorem_from_string(const std::string &text);
const std::vector<TheoremId> &all_theorems();

enum class Verdict { confirmed, refuted, boundary_excluded, class_empty };
const char *to_string(Verdict v);

// One parameter of a verification point, e.g. n=9 or variant=rederived.
struct ParamEntry {
  std::string key;
  int64_t num = 0;
  std::string text;   // set instead of num when is_text
  bool is_text = false;
};

struct VerificationReport {
  TheoremId theorem = TheoremId::l2_4;
  std::vector<ParamEntry> params;
  std::vector<CanonicalCode> claimed_codes;
  std::optional<int64_t> claimed_value;
  std::vector<CanonicalCode> observed_codes;
  std::optional<int64_t> observed_value;
  Verdict verdict = Verdict::class_empty;
  int64_t class_size = 0;
  int64_t ms = 0;
};

struct VerifyOptions {
  // Inclusive order range; the per-theorem default grid is used when unset.
  std::optional<std::pair<int, int>> order_range;
  // key=value filters narrowing the grid ("gamma", "k", "p", "q", "l", "m",
  // "variant"). Values compare textually against the point's parameters.
  std::map<std::string, std::string> param_filter;
  int jobs = 1;
  bool with_timing = false;  // ms stays 0 when false, keeping output stable
};

std::vector<VerificationReport> verify(TheoremId id, const VerifyOptions &opt);
std::vector<VerificationReport> verify_all(const VerifyOptions &opt);

// JSON Lines persistence. Key order per line:
// theorem, params{...}, claimed{codes,value}, observed{codes,value},
// verdict, class_size, ms.
std::string report_to_json_line(const VerificationReport &r);
void emit_jsonl(const std::vector<VerificationReport> &reports,
                std::ostream &out);
std::vector<VerificationReport> read_jsonl(std::istream &in);

// Fixed-width human summary, one row per report.
std::string render_table(const std::vector<VerificationReport> &reports);
bool any_refuted(const std::vector<VerificationReport> &reports);

enum class ScanInvariant {
  eds,
  wiener,
  degree_distance,
  ecc_connectivity,
  total_ecc,
};
std::optional<ScanInvariant> scan_invariant_from_string(const std::string &s);
const char *to_string(ScanInvariant inv);

struct RankedEntry {
  CanonicalCode code;
  int64_t value = 0;
};

// Classes of order n meeting the constraints, ranked by (value, code).
// bottom holds the first bottom_k ascending; top holds the last top_k,
// largest first.
struct ScanResult {
  std::vector<RankedEntry> bottom;
  std::vector<RankedEntry> top;
  int64_t class_size = 0;
};
ScanResult extremal_scan(int n, const ConstraintSpec &c, ScanInvariant inv,
                         int bottom_k, int top_k);

}  // namespace edslab
