#include "galileo/growth.hpp"

#include <mpfr.h>

#include <algorithm>
#include <bit>
#include <memory>
#include <stdexcept>

namespace galileo {

OddPart odd_part_decomposition(Index n) {
  if (n == 0) throw std::invalid_argument("odd-part decomposition needs n >= 1");
  const auto r = static_cast<unsigned>(std::countr_zero(n));
  return {r, n >> r};
}

VerificationReport scale_invariance_check(const SequencePrefix& prefix) {
  const PartialSums sums = partial_sums(prefix);
  VerificationReport report{Relation::global, prefix.length(), {}};
  std::vector<Rational> k_powers{Rational(1)};
  for (Index n = 1; n <= prefix.length(); ++n) {
    const auto [r, m] = odd_part_decomposition(n);
    while (k_powers.size() <= r) k_powers.push_back(k_powers.back() * prefix.k());
    Rational residual = sums.at(n) - k_powers[r] * sums.at(m);
    if (residual != 0) report.failures.push_back({n, std::move(residual)});
  }
  return report;
}

std::string to_string(BoundStatus status) {
  switch (status) {
    case BoundStatus::pass: return "pass";
    case BoundStatus::fail: return "fail";
    case BoundStatus::indeterminate: return "indeterminate";
  }
  return "unknown";
}

namespace {

BoundStatus combine(BoundStatus a, BoundStatus b) {
  if (a == BoundStatus::fail || b == BoundStatus::fail) return BoundStatus::fail;
  if (a == BoundStatus::indeterminate || b == BoundStatus::indeterminate) return BoundStatus::indeterminate;
  return BoundStatus::pass;
}

class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t precision) { mpfr_init2(value_, precision); }
  ~BigFloat() { mpfr_clear(value_); }
  BigFloat(const BigFloat&) = delete;
  BigFloat& operator=(const BigFloat&) = delete;

  mpfr_ptr get() noexcept { return value_; }
  mpfr_srcptr get() const noexcept { return value_; }

 private:
  mpfr_t value_;
};

// Encloses log2(k) at one precision: d_lo <= log2 k <= d_hi.
struct ExponentEnclosure {
  explicit ExponentEnclosure(const Rational& k, mpfr_prec_t precision) : lo(precision), hi(precision) {
    mpfr_set_q(lo.get(), k.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi.get(), k.get_mpq_t(), MPFR_RNDU);
    mpfr_log2(lo.get(), lo.get(), MPFR_RNDD);
    mpfr_log2(hi.get(), hi.get(), MPFR_RNDU);
  }
  BigFloat lo, hi;
};

// Decides `m^d (side) bound` for an odd m >= 1, escalating precision when the
// enclosure straddles the bound.
class PowerComparator {
 public:
  PowerComparator(const Rational& k, std::optional<unsigned> integer_exponent, unsigned precision,
                  unsigned max_precision)
      : k_(k), integer_exponent_(integer_exponent), base_precision_(precision), max_precision_(max_precision) {}

  BoundStatus compare(Index m, Side side, const Rational& bound) {
    if (m == 1 || integer_exponent_) {
      Integer exact = 1;
      if (m != 1) mpz_ui_pow_ui(exact.get_mpz_t(), m, *integer_exponent_);
      const int c = cmp(Rational(exact), bound);
      return decide_exact(c, side);
    }
    for (unsigned p = base_precision_; p <= max_precision_; p *= 2) {
      max_used_ = std::max(max_used_, p);
      const ExponentEnclosure& d = exponent(p);
      BigFloat base(p), lo(p), hi(p);
      mpfr_set_ui(base.get(), m, MPFR_RNDN);  // exact: m < 2^64 <= 2^p
      mpfr_pow(lo.get(), base.get(), d.lo.get(), MPFR_RNDD);
      mpfr_pow(hi.get(), base.get(), d.hi.get(), MPFR_RNDU);
      const int c_lo = mpfr_cmp_q(lo.get(), bound.get_mpq_t());
      const int c_hi = mpfr_cmp_q(hi.get(), bound.get_mpq_t());
      if (side == Side::at_most) {
        if (c_hi <= 0) return BoundStatus::pass;
        if (c_lo > 0) return BoundStatus::fail;
      } else {
        if (c_lo >= 0) return BoundStatus::pass;
        if (c_hi < 0) return BoundStatus::fail;
      }
    }
    return BoundStatus::indeterminate;
  }

  unsigned max_used() const noexcept { return max_used_; }

 private:
  static BoundStatus decide_exact(int c, Side side) {
    if (side == Side::at_most) return c <= 0 ? BoundStatus::pass : BoundStatus::fail;
    return c >= 0 ? BoundStatus::pass : BoundStatus::fail;
  }

  const ExponentEnclosure& exponent(unsigned p) {
    for (auto& [prec, enc] : cache_) {
      if (prec == p) return *enc;
    }
    cache_.emplace_back(p, std::make_unique<ExponentEnclosure>(k_, p));
    return *cache_.back().second;
  }

  Rational k_;
  std::optional<unsigned> integer_exponent_;
  unsigned base_precision_;
  unsigned max_precision_;
  unsigned max_used_ = 0;
  std::vector<std::pair<unsigned, std::unique_ptr<ExponentEnclosure>>> cache_;
};

std::optional<unsigned> power_of_two_exponent(const Rational& k) {
  if (!is_integer(k)) return std::nullopt;
  const Integer& num = k.get_num();
  if (mpz_popcount(num.get_mpz_t()) != 1) return std::nullopt;
  return static_cast<unsigned>(mpz_scan1(num.get_mpz_t(), 0));
}

}  // namespace

BoundStatus compare_power(Index m, const Rational& k, Side side, const Rational& bound, unsigned precision,
                          unsigned max_precision) {
  if (m == 0) throw std::invalid_argument("compare_power needs m >= 1");
  if (k <= 1) throw std::invalid_argument("compare_power needs k > 1");
  PowerComparator comparator(k, power_of_two_exponent(k), precision, max_precision);
  return comparator.compare(m, side, bound);
}

BoundStatus BoundRecord::overall() const {
  return combine(combine(sum_lower, sum_upper), combine(term_lower, term_upper));
}

BoundStatus GrowthReport::verdict() const {
  if (failures > 0) return BoundStatus::fail;
  if (indeterminates > 0) return BoundStatus::indeterminate;
  return BoundStatus::pass;
}

GrowthReport growth_bounds_check(const SequencePrefix& prefix, const GrowthOptions& options) {
  const Rational& k = prefix.k();
  if (k < 2) throw std::invalid_argument("growth bounds need k >= 2 (d = log2 k >= 1)");
  if (!is_integer_sequence(prefix)) throw std::invalid_argument("growth bounds need an integer-valued prefix");
  if (!is_non_decreasing(prefix)) throw std::invalid_argument("growth bounds need a non-decreasing prefix");
  if (const auto failure = check_global(prefix).first_failure()) {
    throw std::invalid_argument("prefix violates S_2n = k S_n at n = " + std::to_string(*failure));
  }
  if (options.precision < 64 || options.max_precision < options.precision) {
    throw std::invalid_argument("precision must be >= 64 bits and not exceed the escalation cap");
  }

  GrowthReport report;
  report.k = k;
  report.integer_exponent = power_of_two_exponent(k);
  report.base_precision = options.precision;
  {
    const ExponentEnclosure d(k, 64);
    report.exponent = mpfr_get_d(d.lo.get(), MPFR_RNDN);
  }
  const Rational& s1 = prefix.term(1);
  report.C1 = s1 / k;
  report.C2 = s1 * k;
  report.D2 = (k - 1) * report.C2;
  // 4^{1-d} = 4 / (2^d)^2 = 4 / k^2
  report.D1_proof = (k - 1) * report.C1 * Rational(4) / (k * k);
  report.D1_adjusted = report.D1_proof > prefix.term(1);
  report.D1 = report.D1_adjusted ? prefix.term(1) : report.D1_proof;

  PowerComparator power(k, report.integer_exponent, options.precision, options.max_precision);
  const PartialSums sums = partial_sums(prefix);
  std::vector<Rational> k_powers{Rational(1)};
  for (Index n = 1; n <= prefix.length(); ++n) {
    const auto [r, m] = odd_part_decomposition(n);
    while (k_powers.size() <= r) k_powers.push_back(k_powers.back() * k);
    // n^d = k^r m^d and n^{d-1} = k^r m^d / n; each bound becomes m^d against an exact rational.
    const Rational& kr = k_powers[r];
    const Rational& s = sums.at(n);
    const Rational& a = prefix.term(n);
    const Rational nq(static_cast<unsigned long>(n));
    BoundRecord rec{n};
    rec.sum_lower = power.compare(m, Side::at_most, s / (report.C1 * kr));
    rec.sum_upper = power.compare(m, Side::at_least, s / (report.C2 * kr));
    rec.term_lower = power.compare(m, Side::at_most, a * nq / (report.D1 * kr));
    rec.term_upper = power.compare(m, Side::at_least, a * nq / (report.D2 * kr));
    switch (rec.overall()) {
      case BoundStatus::pass: ++report.passes; break;
      case BoundStatus::fail:
        ++report.failures;
        if (!report.first_failure) report.first_failure = n;
        break;
      case BoundStatus::indeterminate:
        ++report.indeterminates;
        if (!report.first_indeterminate) report.first_indeterminate = n;
        break;
    }
    if (options.keep_records) report.records.push_back(rec);
  }
  report.checked_through = prefix.length();
  report.max_precision_used = power.max_used();
  return report;
}

}  // namespace galileo
