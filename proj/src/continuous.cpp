#include "galileo/continuous.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace galileo::continuous {

namespace {

constexpr Real two_pi = boost::math::constants::two_pi<Real>();

Real wrap(Real u) { return u - std::floor(u); }

struct Evaluate {
  Real u;
  Real operator()(const ConstantProfile& p) const { return p.value; }
  Real operator()(const FourierProfile& p) const {
    const Real w = wrap(u);
    Real acc = p.offset;
    for (std::size_t j = 0; j < p.cos_coeffs.size(); ++j) acc += p.cos_coeffs[j] * std::cos(two_pi * (j + 1) * w);
    for (std::size_t j = 0; j < p.sin_coeffs.size(); ++j) acc += p.sin_coeffs[j] * std::sin(two_pi * (j + 1) * w);
    return acc;
  }
  Real operator()(const SampledProfile& p) const {
    const std::size_t m = p.samples.size();
    const Real pos = wrap(u) * static_cast<Real>(m);
    std::size_t i = static_cast<std::size_t>(pos);
    if (i >= m) i = m - 1;
    const Real t = pos - static_cast<Real>(i);
    return (1 - t) * p.samples[i] + t * p.samples[(i + 1) % m];
  }
};

struct UpperBound {
  Real operator()(const ConstantProfile& p) const { return p.value; }
  Real operator()(const FourierProfile& p) const {
    Real acc = p.offset;
    for (Real c : p.cos_coeffs) acc += std::fabs(c);
    for (Real s : p.sin_coeffs) acc += std::fabs(s);
    return acc;
  }
  Real operator()(const SampledProfile& p) const { return *std::max_element(p.samples.begin(), p.samples.end()); }
};

}  // namespace

FourierProfile FourierProfile::sinusoid(Real offset, Real amplitude, unsigned frequency) {
  if (frequency == 0) throw std::invalid_argument("sinusoid frequency must be a positive integer");
  FourierProfile p{offset, {}, std::vector<Real>(frequency, 0)};
  p.sin_coeffs[frequency - 1] = amplitude;
  return p;
}

Profile::Profile(Representation rep) : rep_(std::move(rep)) {
  if (const auto* c = std::get_if<ConstantProfile>(&rep_)) {
    if (!(c->value >= 0)) throw std::invalid_argument("constant profile must be nonnegative");
  } else if (const auto* s = std::get_if<SampledProfile>(&rep_)) {
    if (s->samples.empty()) throw std::invalid_argument("sampled profile needs at least one sample");
    for (Real v : s->samples) {
      if (!(v >= 0)) throw std::invalid_argument("sampled profile must be nonnegative");
    }
  } else {
    constexpr int grid = 4096;
    for (int i = 0; i < grid; ++i) {
      if (!((*this)(static_cast<Real>(i) / grid) >= 0)) {
        throw std::invalid_argument("Fourier profile is negative near u = " + std::to_string(double(i) / grid));
      }
    }
  }
}

Real Profile::operator()(Real u) const { return std::visit(Evaluate{u}, rep_); }

Real Profile::upper_bound() const { return std::visit(UpperBound{}, rep_); }

std::size_t Profile::kinks_per_period() const {
  if (const auto* s = std::get_if<SampledProfile>(&rep_)) return s->samples.size();
  return 0;
}

Real galileo_exponent(Real a, Real b) { return std::log(b / a) / std::log(a); }

GalileoFunction::GalileoFunction(Real a, Real b, Profile profile)
    : a_(a), b_(b), e_(0), log_a_(0), profile_(std::move(profile)) {
  if (!(a > 0) || a == 1) throw std::invalid_argument("dilation factor a must be positive and != 1");
  if (!(b > 0)) throw std::invalid_argument("integral ratio b must be positive");
  log_a_ = std::log(a);
  e_ = galileo_exponent(a, b);
  if (!(e_ > 0)) {
    throw std::invalid_argument("exponent log_a(b/a) must be positive for f to be continuous at 0 (got " +
                                std::to_string(double(e_)) + ")");
  }
}

Real GalileoFunction::operator()(Real x) const {
  if (x < 0) throw std::domain_error("Galileo functions are defined on [0, inf)");
  if (x == 0) return 0;
  return profile_(std::log(x) / log_a_) * std::pow(x, e_);
}

Real eval_f(const GalileoFunction& f, Real x) { return f(x); }

std::string to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::pass: return "pass";
    case Outcome::fail: return "fail";
    case Outcome::indeterminate: return "indeterminate";
  }
  return "unknown";
}

Integral integrate_from_zero(const std::function<Real(Real)>& f, Real X, Real log_period_base, Real exponent,
                             Real tolerance, const QuadratureOptions& options) {
  if (!(X > 0)) return {};
  const Real base = log_period_base > 1 ? log_period_base : 1 / log_period_base;
  const Real log_base = std::log(base);
  std::size_t per_period = std::max<std::size_t>(options.panels_per_period, 1);
  if (options.kinks_per_period > 0) {
    const std::size_t m = options.kinks_per_period;
    per_period = m * ((per_period + m - 1) / m);
  }
  const Real step = log_base / static_cast<Real>(per_period);  // panel width in log t

  // Remainder on [0, eps] is at most sup g * eps^{e+1} / (e+1).
  const Real tail_budget = tolerance / 100;
  const Real eps =
      std::exp(std::log(tail_budget * (exponent + 1) / std::max(options.profile_bound, Real(1e-300))) / (exponent + 1));
  const Real log_x = std::log(X);
  long j_lo = static_cast<long>(std::floor(std::min(std::log(eps), log_x - log_base) / step));
  const long j_hi = static_cast<long>(std::ceil(log_x / step));

  Integral out;
  const Real cutoff = std::exp(static_cast<Real>(j_lo) * step);
  out.error = options.profile_bound * std::pow(cutoff, exponent + 1) / (exponent + 1);
  // Each panel gets an equal share of the absolute budget, expressed as the relative
  // tolerance Boost expects; the floor keeps the request above long double roundoff.
  using GK = boost::math::quadrature::gauss_kronrod<Real, 15>;
  const Real panel_budget = tolerance / 2 / static_cast<Real>(std::max(j_hi - j_lo, 1L));
  const Real rel_floor = std::numeric_limits<Real>::epsilon() * 64;
  for (long j = j_lo; j < j_hi; ++j) {
    const Real lo = std::exp(static_cast<Real>(j) * step);
    const Real hi = std::min(X, std::exp(static_cast<Real>(j + 1) * step));
    if (!(hi > lo)) continue;
    Real err = 0, l1 = 0;
    Real value = GK::integrate(f, lo, hi, 0, 0, &err, &l1);
    if (err > panel_budget) {
      const Real rel_tol = std::max(rel_floor, panel_budget / std::max(l1, std::numeric_limits<Real>::min()));
      value = GK::integrate(f, lo, hi, options.max_depth, rel_tol, &err);
    }
    out.value += value;
    out.error += err;
  }
  out.converged = out.error <= tolerance;
  return out;
}

IntegralResidual integral_residual(const std::function<Real(Real)>& f, Real a, Real b, Real exponent, Real x,
                                   Real tol, const QuadratureOptions& options) {
  if (!(x > 0)) throw std::invalid_argument("integral relation is checked at x > 0");
  IntegralResidual out;
  out.x = x;
  const Integral lhs = integrate_from_zero(f, a * x, a, exponent, tol / 10, options);
  const Integral rhs = integrate_from_zero(f, x, a, exponent, tol / (10 * b), options);
  out.lhs = lhs.value;
  out.rhs = b * rhs.value;
  out.residual = std::fabs(out.lhs - out.rhs);
  out.error_bound = std::max(lhs.error, b * rhs.error);
  if (!lhs.converged || !rhs.converged) {
    out.outcome = Outcome::indeterminate;
  } else {
    out.outcome = out.residual <= tol ? Outcome::pass : Outcome::fail;
  }
  return out;
}

IntegralResidual verify_integral_relation(const GalileoFunction& f, Real x, Real tol) {
  QuadratureOptions options;
  options.kinks_per_period = f.profile().kinks_per_period();
  options.profile_bound = f.profile().upper_bound();
  return integral_residual([&f](Real t) { return f(t); }, f.a(), f.b(), f.exponent(), x, tol, options);
}

PointwiseReport verify_pointwise_identity(const GalileoFunction& f, const std::vector<Real>& xs, Real tol) {
  if (xs.empty()) throw std::invalid_argument("pointwise identity needs at least one sample");
  PointwiseReport report;
  for (Real x : xs) {
    if (!(x > 0)) throw std::invalid_argument("pointwise identity is checked at x > 0");
    PointwiseSample s;
    s.x = x;
    const Real rhs = f.b() * f(x);
    s.residual = std::fabs(f.a() * f(f.a() * x) - rhs);
    s.scale = std::max<Real>(1, std::fabs(rhs));
    s.pass = s.residual <= tol * s.scale;
    report.max_residual = std::max(report.max_residual, s.residual);
    report.max_scaled_residual = std::max(report.max_scaled_residual, s.residual / s.scale);
    report.pass = report.pass && s.pass;
    report.samples.push_back(s);
  }
  return report;
}

ProfileExtraction extract_profile(const std::function<Real(Real)>& f, Real a, Real b, const std::vector<Real>& grid) {
  if (grid.empty()) throw std::invalid_argument("profile extraction needs a nonempty grid");
  if (b / a == 1) throw std::invalid_argument("profile extraction needs b/a != 1");
  const Real ratio = b / a;
  auto g = [&](Real u) { return f(std::pow(a, u)) / std::pow(ratio, u); };
  ProfileExtraction out;
  out.grid = grid;
  out.values.reserve(grid.size());
  for (Real u : grid) {
    const Real here = g(u);
    out.values.push_back(here);
    out.periodicity_defect = std::max(out.periodicity_defect, std::fabs(g(u + 1) - here));
  }
  return out;
}

std::vector<Real> uniform_grid(std::size_t points) {
  std::vector<Real> grid(points);
  for (std::size_t i = 0; i < points; ++i) grid[i] = static_cast<Real>(i) / static_cast<Real>(points);
  return grid;
}

namespace {

Real parse_real(const std::string& text) {
  std::size_t used = 0;
  Real v = 0;
  try {
    v = std::stold(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw std::invalid_argument("not a number: '" + text + "'");
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) parts.push_back(item);
  return parts;
}

SampledProfile read_samples(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open profile file '" + path + "'");
  std::vector<std::pair<Real, Real>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string u, g, extra;
    if (!(fields >> u >> g) || (fields >> extra)) {
      throw std::invalid_argument(path + ":" + std::to_string(line_no) + ": expected two columns");
    }
    rows.emplace_back(parse_real(u), parse_real(g));
  }
  if (rows.empty()) throw std::invalid_argument("profile file '" + path + "' has no samples");
  const std::size_t m = rows.size();
  SampledProfile profile;
  for (std::size_t i = 0; i < m; ++i) {
    const Real expected = static_cast<Real>(i) / static_cast<Real>(m);
    if (std::fabs(rows[i].first - expected) > 1e-9) {
      throw std::invalid_argument("profile abscissae must be the uniform grid i/M in [0,1)");
    }
    profile.samples.push_back(rows[i].second);
  }
  return profile;
}

}  // namespace

Profile parse_profile(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("profile must be const:, sin: or file:");
  const std::string kind = text.substr(0, colon);
  const std::string body = text.substr(colon + 1);
  if (kind == "const") return Profile(ConstantProfile{parse_real(body)});
  if (kind == "file") return Profile(read_samples(body));
  if (kind == "sin") {
    const auto parts = split(body, ',');
    if (parts.size() != 3) throw std::invalid_argument("sin profile is sin:<offset>,<amp>,<freq>");
    const Real freq = parse_real(parts[2]);
    if (freq < 1 || freq != std::floor(freq)) {
      throw std::invalid_argument("sin frequency must be a positive integer for period 1");
    }
    return Profile(FourierProfile::sinusoid(parse_real(parts[0]), parse_real(parts[1]), static_cast<unsigned>(freq)));
  }
  throw std::invalid_argument("unknown profile kind '" + kind + "'");
}

}  // namespace galileo::continuous
