#include "galileo/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace galileo {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  for (auto& c : coeffs_) c.canonicalize();  // GMP arithmetic assumes canonical operands
  trim();
}

Polynomial Polynomial::monomial(Rational c, unsigned degree) {
  std::vector<Rational> coeffs(degree + 1);
  coeffs[degree] = std::move(c);
  return Polynomial(std::move(coeffs));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::dilate(const Rational& alpha) const {
  std::vector<Rational> out(coeffs_.size());
  Rational scale = 1;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    out[j] = coeffs_[j] * scale;
    scale *= alpha;
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::translate(const Rational& shift) const {
  // Horner in polynomial arithmetic: T(x + s) = (...(c_m (x+s) + c_{m-1})(x+s) + ...).
  const Polynomial linear({shift, Rational(1)});
  Polynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * linear + Polynomial({*it});
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) coeffs_[j] += rhs.coeffs_[j];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) coeffs_[j] -= rhs.coeffs_[j];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial parse_coefficients(const std::string& text) {
  std::vector<Rational> coeffs;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw std::invalid_argument("empty coefficient in '" + text + "'");
    coeffs.push_back(parse_rational(item.substr(first, last - first + 1)));
  }
  if (coeffs.empty()) throw std::invalid_argument("no coefficients given");
  return Polynomial(std::move(coeffs));
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t j = 0; j < p.coefficients().size(); ++j) {
    if (j) out += ",";
    out += to_string(p.coefficients()[j]);
  }
  return out;
}

Integer binomial(unsigned n, unsigned r) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, r);
  return out;
}

namespace {

// F_j(x) = 1^j + 2^j + ... + x^j, built from the telescoping identity
// (x+1)^{j+1} - 1 = sum_{t=0}^{j} C(j+1, t) F_t(x).
std::vector<Polynomial> power_sums(unsigned max_degree) {
  std::vector<Polynomial> sums;
  sums.reserve(max_degree + 1);
  for (unsigned j = 0; j <= max_degree; ++j) {
    Polynomial acc = Polynomial::monomial(Rational(1), j + 1).translate(Rational(1)) - Polynomial({Rational(1)});
    for (unsigned t = 0; t < j; ++t) acc -= sums[t] * Rational(binomial(j + 1, t));
    sums.push_back(acc * Rational(1, j + 1));
  }
  return sums;
}

}  // namespace

Polynomial summation_polynomial(const Polynomial& p) {
  if (p.is_zero()) return {};
  const auto sums = power_sums(static_cast<unsigned>(p.degree()));
  Polynomial out;
  for (std::size_t j = 0; j < p.coefficients().size(); ++j) {
    if (p.coefficients()[j] != 0) out += sums[j] * p.coefficients()[j];
  }
  return out;
}

Polynomial power_difference(const Rational& C, unsigned d) {
  const Polynomial top = Polynomial::monomial(Rational(1), d);
  return (top - top.translate(Rational(-1))) * C;
}

std::string to_string(DilationVerdict verdict) {
  switch (verdict) {
    case DilationVerdict::zero: return "zero";
    case DilationVerdict::monomial: return "monomial";
    case DilationVerdict::not_eigenfunction: return "not-dilation-eigenfunction";
  }
  return "unknown";
}

MonomialResult dilation_monomial_test(const Polynomial& T, const Rational& alpha, const Rational& lambda) {
  if (sgn(alpha) <= 0 || alpha == 1) throw std::invalid_argument("dilation factor must be positive and != 1");
  if (T.is_zero()) return {DilationVerdict::zero, Rational(0), 0};
  // alpha^j are pairwise distinct, so at most one nonzero coefficient can satisfy c_j alpha^j = lambda c_j.
  Rational power = 1;
  for (std::size_t j = 0; j < T.coefficients().size(); ++j, power *= alpha) {
    if (T.coefficients()[j] != 0 && power != lambda) return {DilationVerdict::not_eigenfunction, Rational(0), 0};
  }
  const auto d = static_cast<unsigned>(T.degree());
  return {DilationVerdict::monomial, T.coefficients()[d], d};
}

MonomialResult classify_polynomial(const Polynomial& p, const Rational& k) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial gives S_1 = 0, not a positive sequence");
  if (k <= 1) throw std::invalid_argument("ratio k must exceed 1");
  return dilation_monomial_test(summation_polynomial(p), Rational(2), k);
}

}  // namespace galileo
