#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace galileo::continuous {

/// Working precision for evaluation and quadrature. Extended precision keeps
/// absolute residuals of integrals in the 10^7 range below 10^-9.
using Real = long double;

/// g(u) = value.
struct ConstantProfile {
  Real value = 1;
};

/// g(u) = offset + sum_j (cos_j cos(2 pi j u) + sin_j sin(2 pi j u)), j = 1..terms.
struct FourierProfile {
  Real offset = 0;
  std::vector<Real> cos_coeffs;  // j = 1, 2, ...
  std::vector<Real> sin_coeffs;  // j = 1, 2, ...

  /// offset + amp sin(2 pi freq u); freq >= 1.
  static FourierProfile sinusoid(Real offset, Real amplitude, unsigned frequency);
};

/// Uniform samples g(i/M), i = 0..M-1, linear interpolation with wrap-around.
struct SampledProfile {
  std::vector<Real> samples;
};

/// A continuous nonnegative period-1 function. Periodicity holds by
/// construction: every representation reduces its argument mod 1.
class Profile {
 public:
  using Representation = std::variant<ConstantProfile, FourierProfile, SampledProfile>;

  /// Throws std::invalid_argument if the profile is negative somewhere
  /// (checked on a dense grid for the Fourier form).
  explicit Profile(Representation rep);

  Real operator()(Real u) const;
  /// An upper bound on g over [0, 1).
  Real upper_bound() const;
  /// Number of uniform kinks per period (sample count), 0 if smooth.
  std::size_t kinks_per_period() const;

  const Representation& representation() const noexcept { return rep_; }

 private:
  Representation rep_;
};

/// f(x) = g(log_a x) x^e with e = log_a(b/a), f(0) = 0.
class GalileoFunction {
 public:
  /// Requires a > 0, a != 1, b > 0 and e > 0.
  GalileoFunction(Real a, Real b, Profile profile);

  Real operator()(Real x) const;  // throws std::domain_error for x < 0

  Real a() const noexcept { return a_; }
  Real b() const noexcept { return b_; }
  Real exponent() const noexcept { return e_; }
  const Profile& profile() const noexcept { return profile_; }

 private:
  Real a_, b_, e_, log_a_;
  Profile profile_;
};

/// log_a(b/a); the admissible class needs this positive.
Real galileo_exponent(Real a, Real b);

Real eval_f(const GalileoFunction& f, Real x);

enum class Outcome { pass, fail, indeterminate };
std::string to_string(Outcome outcome);

struct IntegralResidual {
  Real x = 0;
  Real lhs = 0;           // int_0^{a x} f
  Real rhs = 0;           // b int_0^{x} f
  Real residual = 0;      // |lhs - rhs|
  Real error_bound = 0;   // quadrature error estimate of the worse integral
  Outcome outcome = Outcome::indeterminate;
};

struct QuadratureOptions {
  unsigned panels_per_period = 32;  // minimum panels per unit of log_a x
  unsigned max_depth = 10;          // adaptive bisection depth per panel
  std::size_t kinks_per_period = 0; // panel edges aligned to these when nonzero
  Real profile_bound = 1;           // sup g, bounds the tail near 0
};

struct Integral {
  Real value = 0;
  Real error = 0;
  bool converged = true;
};

/// int_0^X f(t) dt for f(t) = g(log_A t) t^e, integrating over panels that are
/// geometric in t (uniform in log t) and bounding the remainder near 0 by
/// sup g * eps^{e+1} / (e+1).
Integral integrate_from_zero(const std::function<Real(Real)>& f, Real X, Real log_period_base, Real exponent,
                             Real tolerance, const QuadratureOptions& options);

/// R(x) = |int_0^{ax} f - b int_0^x f| for an arbitrary integrand, which lets
/// callers probe functions outside the admissible class.
IntegralResidual integral_residual(const std::function<Real(Real)>& f, Real a, Real b, Real exponent, Real x,
                                   Real tol, const QuadratureOptions& options);

IntegralResidual verify_integral_relation(const GalileoFunction& f, Real x, Real tol);

struct PointwiseSample {
  Real x = 0;
  Real residual = 0;  // |a f(ax) - b f(x)|
  Real scale = 1;     // max(1, |b f(x)|)
  bool pass = true;   // residual <= tol * scale
};

struct PointwiseReport {
  std::vector<PointwiseSample> samples;
  Real max_residual = 0;
  Real max_scaled_residual = 0;
  bool pass = true;
};

PointwiseReport verify_pointwise_identity(const GalileoFunction& f, const std::vector<Real>& xs, Real tol);

struct ProfileExtraction {
  std::vector<Real> grid;
  std::vector<Real> values;          // g(u) = f(a^u) / (b/a)^u
  Real periodicity_defect = 0;       // max |g(u+1) - g(u)|
};

/// Throws std::invalid_argument when b/a == 1 or the grid is empty.
ProfileExtraction extract_profile(const std::function<Real(Real)>& f, Real a, Real b, const std::vector<Real>& grid);

/// i/M for i = 0..M-1.
std::vector<Real> uniform_grid(std::size_t points);

/// `const:<v>`, `sin:<offset>,<amp>,<freq>`, or `file:<path>` (two columns u g(u)).
Profile parse_profile(const std::string& text);

}  // namespace galileo::continuous
