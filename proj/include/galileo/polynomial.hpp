#pragma once

#include <optional>
#include <string>
#include <vector>

#include "galileo/rational.hpp"

namespace galileo {

/// Dense polynomial c_0 + c_1 x + ... + c_m x^m over exact rationals.
/// Always canonical: no trailing zero coefficients; the zero polynomial is empty.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);

  static Polynomial monomial(Rational c, unsigned degree);

  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coefficient(std::size_t j) const { return j < coeffs_.size() ? coeffs_[j] : Rational(0); }

  Rational operator()(const Rational& x) const;

  /// x -> T(alpha x).
  Polynomial dilate(const Rational& alpha) const;
  /// x -> T(x + shift).
  Polynomial translate(const Rational& shift) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& s);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(Polynomial lhs, const Rational& s) { return lhs *= s; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// "c0,c1,...,cm" with exact rational entries.
Polynomial parse_coefficients(const std::string& text);
std::string to_string(const Polynomial& p);

/// Binomial coefficient as an exact integer.
Integer binomial(unsigned n, unsigned r);

/// P with P(n) = p(1) + ... + p(n) for all integers n >= 0, P(0) = 0.
Polynomial summation_polynomial(const Polynomial& p);

/// Expanded C (x^d - (x-1)^d).
Polynomial power_difference(const Rational& C, unsigned d);

enum class DilationVerdict { zero, monomial, not_eigenfunction };

struct MonomialResult {
  DilationVerdict verdict = DilationVerdict::zero;
  Rational C;       // meaningful for monomial
  unsigned d = 0;   // meaningful for monomial

  friend bool operator==(const MonomialResult&, const MonomialResult&) = default;
};

std::string to_string(DilationVerdict verdict);

/// Decides T(alpha x) = lambda T(x) by coefficient comparison c_j alpha^j = lambda c_j.
/// Requires alpha > 0, alpha != 1.
MonomialResult dilation_monomial_test(const Polynomial& T, const Rational& alpha, const Rational& lambda);

/// Decides whether a_n = p(n) is a Galileo sequence with ratio k.
///
/// A monomial verdict carries (C, d) with p(n) = C (n^d - (n-1)^d) and k = 2^d.
/// Rejects the zero polynomial with std::invalid_argument.
MonomialResult classify_polynomial(const Polynomial& p, const Rational& k);

}  // namespace galileo
