#pragma once

#include <optional>
#include <string>
#include <vector>

#include "galileo/rational.hpp"
#include "galileo/sequence.hpp"

namespace galileo {

struct OddPart {
  unsigned r = 0;  // power of two
  Index m = 1;     // odd part
  friend bool operator==(const OddPart&, const OddPart&) = default;
};

/// n = 2^r m with m odd; n >= 1.
OddPart odd_part_decomposition(Index n);

/// S_{2^r m} = k^r S_m for every n <= N, checked exactly.
/// Failures carry the residual S_n - k^r S_m. Relation tag is `global`.
VerificationReport scale_invariance_check(const SequencePrefix& prefix);

enum class BoundStatus { pass, fail, indeterminate };

std::string to_string(BoundStatus status);

/// Outcome of the four power-law bounds at one index.
struct BoundRecord {
  Index n = 0;
  BoundStatus sum_lower = BoundStatus::pass;   // C1 n^d <= S_n
  BoundStatus sum_upper = BoundStatus::pass;   // S_n <= C2 n^d
  BoundStatus term_lower = BoundStatus::pass;  // D1 n^{d-1} <= a_n
  BoundStatus term_upper = BoundStatus::pass;  // a_n <= D2 n^{d-1}

  BoundStatus overall() const;
};

/// Verification of C1 n^d <= S_n <= C2 n^d and D1 n^{d-1} <= a_n <= D2 n^{d-1},
/// d = log2 k, with
///   C1 = S_1 / 2^d = S_1 / k,     C2 = S_1 2^d = S_1 k,
///   D2 = (k-1) C2,                D1 = min((k-1) C1 4^{1-d}, a_1).
/// Irrational powers are enclosed with outward directed rounding, so a
/// reported pass is rigorous.
struct GrowthReport {
  Rational k;
  double exponent = 0;                  // d, for display only
  std::optional<unsigned> integer_exponent;  // set when k is a power of two
  Rational C1, C2, D1, D2;
  Rational D1_proof;                    // (k-1) C1 4^{1-d} = 4 (k-1) C1 / k^2
  bool D1_adjusted = false;             // D1 lowered to a_1 to cover m = 1
  unsigned base_precision = 0;          // bits requested
  unsigned max_precision_used = 0;      // highest precision any comparison needed
  Index checked_through = 0;
  std::size_t passes = 0, failures = 0, indeterminates = 0;
  std::optional<Index> first_failure;
  std::optional<Index> first_indeterminate;
  std::vector<BoundRecord> records;     // only when requested

  BoundStatus verdict() const;
};

enum class Side { at_most, at_least };

/// Decides m^{log2 k} <= bound (at_most) or >= bound (at_least) rigorously:
/// pass/fail only when an outward-rounded enclosure lies entirely on one side,
/// doubling the MPFR precision from `precision` up to `max_precision`, else indeterminate.
BoundStatus compare_power(Index m, const Rational& k, Side side, const Rational& bound, unsigned precision = 128,
                          unsigned max_precision = 1024);

struct GrowthOptions {
  unsigned precision = 128;       // bits
  unsigned max_precision = 1024;  // escalation cap
  bool keep_records = false;
};

/// Throws std::invalid_argument when the hypotheses fail: non-integer or
/// decreasing terms, k < 2, or (G) violated within the prefix.
GrowthReport growth_bounds_check(const SequencePrefix& prefix, const GrowthOptions& options = {});

}  // namespace galileo
