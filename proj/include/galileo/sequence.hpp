#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "galileo/error.hpp"
#include "galileo/rational.hpp"

namespace galileo {

/// A finite prefix a_1..a_N of a candidate Galileo sequence together with its ratio k.
///
/// Terms and k are exact rationals. Construction enforces N >= 1, k > 1 and
/// strictly positive terms; whether the terms are integers is a separate
/// predicate (is_integer_sequence), not a type constraint.
class SequencePrefix {
 public:
  SequencePrefix(std::vector<Rational> terms, Rational k);

  /// 1-based access, 1 <= n <= length().
  const Rational& term(Index n) const { return terms_.at(n - 1); }
  const std::vector<Rational>& terms() const noexcept { return terms_; }
  const Rational& k() const noexcept { return k_; }
  Index length() const noexcept { return terms_.size(); }

  /// Largest n with 2n <= N, i.e. the last index at which (G) and (L) can be checked.
  Index verifiable_limit() const noexcept { return length() / 2; }

  friend bool operator==(const SequencePrefix&, const SequencePrefix&) = default;

 private:
  std::vector<Rational> terms_;
  Rational k_;
};

/// S_1..S_N, strictly increasing.
class PartialSums {
 public:
  explicit PartialSums(std::vector<Rational> sums) : sums_(std::move(sums)) {}

  const Rational& at(Index n) const { return sums_.at(n - 1); }
  const std::vector<Rational>& values() const noexcept { return sums_; }
  Index length() const noexcept { return sums_.size(); }

  friend bool operator==(const PartialSums&, const PartialSums&) = default;

 private:
  std::vector<Rational> sums_;
};

enum class Relation { global, local };

std::string_view to_string(Relation relation);

struct Residual {
  Index n;
  Rational value;  // S_{2n} - k S_n  or  a_{2n-1} + a_{2n} - k a_n

  friend bool operator==(const Residual&, const Residual&) = default;
};

/// Outcome of checking one relation over n = 1..verified_through.
///
/// `verified_through == 0` means nothing could be checked (N == 1); that is
/// not a pass of any index. `failures` lists every failing n in increasing
/// order, so `failures.empty()` is the pass condition.
struct VerificationReport {
  Relation relation = Relation::global;
  Index verified_through = 0;
  std::vector<Residual> failures;

  bool passed() const noexcept { return failures.empty(); }
  std::optional<Index> first_failure() const {
    if (failures.empty()) return std::nullopt;
    return failures.front().n;
  }

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

PartialSums partial_sums(const SequencePrefix& prefix);

/// S_{2n} = k S_n for every n with 2n <= N.
VerificationReport check_global(const SequencePrefix& prefix);

/// a_{2n-1} + a_{2n} = k a_n for every n with 2n <= N.
VerificationReport check_local(const SequencePrefix& prefix);

bool is_integer_sequence(const SequencePrefix& prefix);
bool is_non_decreasing(const SequencePrefix& prefix);

}  // namespace galileo
