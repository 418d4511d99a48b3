#include "galileo/sequence.hpp"

#include <stdexcept>
#include <utility>

namespace galileo {

SequencePrefix::SequencePrefix(std::vector<Rational> terms, Rational k)
    : terms_(std::move(terms)), k_(std::move(k)) {
  if (terms_.empty()) throw std::invalid_argument("sequence prefix must have at least one term");
  k_.canonicalize();
  for (auto& t : terms_) t.canonicalize();
  if (k_ <= 1) throw std::invalid_argument("ratio k must exceed 1, got " + galileo::to_string(k_));
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (sgn(terms_[i]) <= 0) throw NodeError(i + 1, "term is not strictly positive");
  }
}

std::string_view to_string(Relation relation) {
  return relation == Relation::global ? "global" : "local";
}

PartialSums partial_sums(const SequencePrefix& prefix) {
  std::vector<Rational> sums;
  sums.reserve(prefix.length());
  Rational running = 0;
  for (const auto& a : prefix.terms()) {
    running += a;
    sums.push_back(running);
  }
  return PartialSums(std::move(sums));
}

VerificationReport check_global(const SequencePrefix& prefix) {
  const PartialSums sums = partial_sums(prefix);
  VerificationReport report{Relation::global, prefix.verifiable_limit(), {}};
  for (Index n = 1; n <= report.verified_through; ++n) {
    Rational residual = sums.at(2 * n) - prefix.k() * sums.at(n);
    if (residual != 0) report.failures.push_back({n, std::move(residual)});
  }
  return report;
}

VerificationReport check_local(const SequencePrefix& prefix) {
  VerificationReport report{Relation::local, prefix.verifiable_limit(), {}};
  for (Index n = 1; n <= report.verified_through; ++n) {
    Rational residual = prefix.term(2 * n - 1) + prefix.term(2 * n) - prefix.k() * prefix.term(n);
    if (residual != 0) report.failures.push_back({n, std::move(residual)});
  }
  return report;
}

bool is_integer_sequence(const SequencePrefix& prefix) {
  for (const auto& a : prefix.terms()) {
    if (!is_integer(a)) return false;
  }
  return true;
}

bool is_non_decreasing(const SequencePrefix& prefix) {
  const auto& t = prefix.terms();
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (t[i] < t[i - 1]) return false;
  }
  return true;
}

}  // namespace galileo
