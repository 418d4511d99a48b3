#include "galileo/generators.hpp"

#include <bit>
#include <stdexcept>

namespace galileo {

unsigned digit_sum_base2(std::uint64_t m) noexcept { return static_cast<unsigned>(std::popcount(m)); }

unsigned floor_log2(std::uint64_t m) noexcept { return static_cast<unsigned>(std::bit_width(m) - 1); }

SequencePrefix poly_family(const PolyFamilyParams& params, Index length) {
  if (params.d == 0) throw std::invalid_argument("exponent d must be >= 1 (d = 0 gives k = 1)");
  if (sgn(params.C) <= 0) throw std::invalid_argument("C must be positive for a positive sequence");
  if (length == 0) throw std::invalid_argument("length must be >= 1");
  std::vector<Rational> terms;
  terms.reserve(length);
  Integer prev_power = 0;
  for (Index n = 1; n <= length; ++n) {
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), n, params.d);
    terms.emplace_back(params.C * Rational(power - prev_power));
    prev_power = std::move(power);
  }
  Integer k;
  mpz_ui_pow_ui(k.get_mpz_t(), 2, params.d);
  return SequencePrefix(std::move(terms), Rational(k));
}

SequencePrefix tattersall(const TattersallParams& params, Index length) {
  if (params.k <= 3) throw std::invalid_argument("Tattersall construction needs integer k >= 4");
  if (length < 2) throw std::invalid_argument("length must be >= 2");
  const Integer k = params.k;
  std::vector<Integer> a{1, k - 1};
  a.reserve(length);
  Integer scaled, half;
  for (Index n = 2; a.size() < length; ++n) {
    scaled = k * a[n - 1];
    mpz_fdiv_q_2exp(half.get_mpz_t(), Integer(scaled - 1).get_mpz_t(), 1);
    a.push_back(half);
    if (a.size() == length) break;
    mpz_fdiv_q_2exp(half.get_mpz_t(), scaled.get_mpz_t(), 1);
    a.push_back(half + 1);
  }
  std::vector<Rational> terms(a.begin(), a.end());
  return SequencePrefix(std::move(terms), Rational(k));
}

SequencePrefix from_splitting(const Rational& a1, const Rational& k, const FactorOracle& factors, Index length) {
  if (sgn(a1) <= 0) throw std::invalid_argument("a_1 must be positive");
  if (k <= 1) throw std::invalid_argument("ratio k must exceed 1");
  if (length == 0) throw std::invalid_argument("length must be >= 1");
  std::vector<Rational> terms;
  terms.reserve(length);
  terms.push_back(a1);
  if (length >= 2) terms.emplace_back((k - 1) * a1);
  for (Index n = 2; terms.size() < length; ++n) {
    const FactorPair pair = factors(n);
    validate_factor_pair(n, pair, k);
    const Rational parent = terms[n - 1];
    terms.emplace_back(pair.left * parent);
    if (terms.size() < length) terms.emplace_back(pair.right * parent);
  }
  return SequencePrefix(std::move(terms), k);
}

SequencePrefix from_splitting(const Rational& a1, const SplittingFactors& factors, Index length) {
  return from_splitting(a1, factors.k(), [&](Index n) { return factors.at(n); }, length);
}

SequencePrefix closed_equal_children(Index length) {
  if (length < 2) throw std::invalid_argument("length must be >= 2");
  std::vector<Rational> terms;
  terms.reserve(length);
  terms.emplace_back(1);
  for (Index n = 2; n <= length; ++n) {
    Integer v = 3;
    mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), floor_log2(n - 1));
    terms.emplace_back(v);
  }
  return SequencePrefix(std::move(terms), Rational(4));
}

SequencePrefix closed_unequal_children(Index length) {
  if (length < 1) throw std::invalid_argument("length must be >= 1");
  std::vector<Rational> terms;
  terms.reserve(length);
  for (Index n = 1; n <= length; ++n) {
    Integer v;
    mpz_ui_pow_ui(v.get_mpz_t(), 3, digit_sum_base2(n - 1));
    terms.emplace_back(v);
  }
  return SequencePrefix(std::move(terms), Rational(4));
}

}  // namespace galileo
