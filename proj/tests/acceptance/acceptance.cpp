// Acceptance suite: one line per criterion, nonzero exit if any criterion fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "galileo/continuous.hpp"
#include "galileo/generators.hpp"
#include "galileo/growth.hpp"
#include "galileo/oeis.hpp"
#include "galileo/polynomial.hpp"
#include "galileo/search.hpp"
#include "galileo/sequence.hpp"
#include "galileo/tree.hpp"

using namespace galileo;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

// Collects failure reasons; the first few are kept for the report line.
class Checker {
 public:
  void require(bool condition, const std::string& what) {
    if (condition) return;
    ++failures_;
    if (reasons_.size() < 3) reasons_.push_back(what);
  }
  void note(const std::string& text) { notes_.push_back(text); }

  Verdict verdict() const {
    std::string detail;
    for (const auto& n : notes_) detail += (detail.empty() ? "" : "; ") + n;
    if (failures_ > 0) {
      detail += (detail.empty() ? "" : "; ") + std::to_string(failures_) + " failed check(s): ";
      for (std::size_t i = 0; i < reasons_.size(); ++i) detail += (i ? " | " : "") + reasons_[i];
    }
    return {failures_ == 0, detail};
  }

 private:
  std::size_t failures_ = 0;
  std::vector<std::string> reasons_;
  std::vector<std::string> notes_;
};

Rational random_rational(std::mt19937_64& rng, long num_lo, long num_hi, long den_max) {
  std::uniform_int_distribution<long> num(num_lo, num_hi), den(1, den_max);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

// k in (1, 10]: k = 1 + t with t = p/q in (0, 9].
Rational random_k(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> den(1, 12);
  const long q = den(rng);
  std::uniform_int_distribution<long> num(1, 9 * q);
  Rational k(q + num(rng), q);
  k.canonicalize();
  return k;
}

FactorOracle random_oracle(std::uint64_t seed, const Rational& k) {
  return [seed, k](Index n) {
    std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + n);
    std::uniform_int_distribution<long> den(2, 16);
    const long q = den(rng);
    std::uniform_int_distribution<long> num(1, q - 1);
    Rational t(num(rng), q);
    t.canonicalize();
    const Rational b = k * t;
    return FactorPair{b, k - b};
  };
}

std::string str(const Rational& q) { return to_string(q); }

// ---------------------------------------------------------------------------

Verdict ac1() {
  Checker c;
  std::mt19937_64 rng(20250101);
  std::size_t corrupted_failing = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Rational k = random_k(rng);
    const Rational a1 = random_rational(rng, 1, 50, 20);
    const auto seq = from_splitting(a1, k, random_oracle(rng(), k), 256);
    const auto g = check_global(seq), l = check_local(seq);
    c.require(g.passed() && l.passed(), "generated prefix failed a relation (trial " + std::to_string(trial) + ")");
    c.require(g.verified_through == l.verified_through && g.verified_through == 128, "verifiable index sets differ");

    std::vector<Rational> terms = seq.terms();
    std::uniform_int_distribution<std::size_t> slot(0, terms.size() - 1);
    const std::size_t i = slot(rng);
    terms[i] += random_rational(rng, 1, 30, 7);
    const SequencePrefix bad(terms, k);
    const auto gb = check_global(bad), lb = check_local(bad);
    c.require(gb.passed() == lb.passed(), "corrupted prefix: relations disagree on pass/fail");
    c.require(gb.first_failure() == lb.first_failure(), "corrupted prefix: first failing index differs");
    if (!gb.passed()) ++corrupted_failing;
  }
  c.note("1000 generated + 1000 corrupted prefixes, N=256; corrupted rejected by both: " +
         std::to_string(corrupted_failing));
  c.require(corrupted_failing == 1000, "a corrupted prefix was accepted");
  return c.verdict();
}

// Smallest n <= limit with S_2n != k S_n for a_n = p(n), computed directly.
std::optional<long> direct_global_violation(const Polynomial& p, const Rational& k, long limit) {
  std::vector<Rational> sums{Rational(0)};
  for (long n = 1; n <= 2 * limit; ++n) sums.push_back(sums.back() + p(Rational(n)));
  for (long n = 1; n <= limit; ++n) {
    if (sums[2 * n] != k * sums[n]) return n;
  }
  return std::nullopt;
}

Verdict ac2() {
  Checker c;
  for (const Rational& C : {Rational(1), Rational(2), Rational(7, 3)}) {
    for (unsigned d = 1; d <= 8; ++d) {
      const Rational k(1UL << d);
      const auto seq = poly_family({C, d}, 4096);
      c.require(seq.k() == k && check_global(seq).passed(),
                "poly_family(" + str(C) + "," + std::to_string(d) + ") fails (G)");
      const auto r = classify_polynomial(power_difference(C, d), k);
      c.require(r.verdict == DilationVerdict::monomial && r.C == C && r.d == d,
                "classifier did not recover (" + str(C) + "," + std::to_string(d) + ")");
    }
  }
  std::mt19937_64 rng(77);
  const std::vector<Rational> scales{Rational(1), Rational(2), Rational(7, 3)};
  std::size_t rejected = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Rational C = scales[rng() % 3];
    const unsigned d = 1 + rng() % 8;
    auto coeffs = power_difference(C, d).coefficients();
    coeffs.resize(d + 1);
    std::size_t j = rng() % coeffs.size();
    if (d == 1 && j == 0) j = 1;  // a shifted constant stays in the family
    Rational delta = random_rational(rng, 1, 9, 5);
    if (rng() % 2) delta = -delta;
    coeffs[j] += delta;
    const Polynomial p(coeffs);
    const Rational k(1UL << d);
    const bool accepted = classify_polynomial(p, k).verdict == DilationVerdict::monomial;
    const auto witness = direct_global_violation(p, k, 64);
    c.require(!accepted, "perturbed polynomial accepted: " + to_string(p));
    c.require(witness.has_value(), "no (G) violation at n <= 64 for " + to_string(p));
    if (!accepted && witness) ++rejected;
  }
  c.note("24 families recovered; perturbed rejected with witness: " + std::to_string(rejected) + "/200");
  return c.verdict();
}

std::string render(const SequencePrefix& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.terms().size(); ++i) s += (i ? "," : "") + str(p.terms()[i]);
  return s + "]";
}

Verdict ac3() {
  Checker c;
  const Rational k(4);
  const auto equal = [](Index) { return FactorPair{Rational(2), Rational(2)}; };
  const auto unequal = [](Index) { return FactorPair{Rational(1), Rational(3)}; };
  const std::string fig1 = render(from_splitting(Rational(1), k, equal, 8));
  const std::string fig2 = render(from_splitting(Rational(1), k, unequal, 8));
  c.require(fig1 == "[1,3,6,6,12,12,12,12]", "figure 1 rule gave " + fig1);
  c.require(fig2 == "[1,3,3,9,3,9,9,27]", "figure 2 rule gave " + fig2);
  const Index N = Index{1} << 16;
  c.require(closed_equal_children(N) == from_splitting(Rational(1), k, equal, N),
            "3*2^floor(log2(n-1)) disagrees with the tree");
  c.require(closed_unequal_children(N) == from_splitting(Rational(1), k, unequal, N),
            "3^s2(n-1) disagrees with the tree");
  c.note(fig1 + " " + fig2 + ", closed forms agree through N=65536");
  return c.verdict();
}

Verdict ac4() {
  Checker c;
  std::mt19937_64 rng(4242);
  const Index N = 4096;
  for (int trial = 0; trial < 100; ++trial) {
    const Rational k = random_k(rng);
    const Rational a1 = random_rational(rng, 1, 40, 9);
    const auto oracle = random_oracle(rng(), k);
    const auto seq = from_splitting(a1, k, oracle, N);
    const auto extracted = extract_factors(seq);
    c.require(root_factors(seq) == FactorPair{Rational(1), k - 1}, "root factors differ");
    c.require(extracted.size() == N / 2 - 1, "extracted table has the wrong size");
    SplittingFactors table(k);
    for (Index n = 2; n <= N / 2; ++n) {
      const FactorPair expected = oracle(n);
      table.set(n, expected);
      const auto* got = extracted.find(n);
      c.require(got && *got == expected, "extract_factors differs from the oracle at node " + std::to_string(n));
    }
    for (Index n = 2; n <= N; ++n) {
      c.require(product_form(n, a1, k, table) == seq.term(n), "product form differs at n=" + std::to_string(n));
      c.require(product_form(n, a1, k, extracted) == seq.term(n), "product form (extracted) differs");
    }
  }
  c.note("100 random oracles, N=4096");
  return c.verdict();
}

Verdict ac5() {
  Checker c;
  for (std::int64_t a1 = 1; a1 <= 5; ++a1) {
    SearchSpec spec;
    spec.k = 2;
    spec.a1 = a1;
    spec.length = 32;
    const auto out = enumerate_monotone(spec);
    c.require(out.complete && out.survivors == 1 && out.emitted.size() == 1 &&
                  out.emitted[0] == std::vector<std::int64_t>(32, a1),
              "k=2, a1=" + std::to_string(a1) + " is not exactly the constant prefix");
  }
  std::string depths;
  for (const auto& row : extinction_depth(3, 8, 64)) {
    depths += (depths.empty() ? "" : ",") + std::to_string(row.a1) + "->" +
              (row.depth ? std::to_string(*row.depth) : std::string("none<=64"));
    c.require(row.complete, "extinction search incomplete for a1=" + std::to_string(row.a1));
    c.require(row.depth.has_value(), "k=3, a1=" + std::to_string(row.a1) + " has survivors at length 64");
  }
  c.note("k=2 constant only for a1=1..5; k=3 depths " + depths);
  return c.verdict();
}

Verdict ac6() {
  Checker c;
  auto run = [&c](const std::string& name, const SequencePrefix& seq) {
    const auto scale = scale_invariance_check(seq);
    c.require(scale.passed(), name + ": S_{2^r m} != k^r S_m");
    const auto report = growth_bounds_check(seq);
    c.require(report.verdict() == BoundStatus::pass, name + ": bounds " + to_string(report.verdict()));
    c.require(report.indeterminates == 0, name + ": indeterminate comparisons");
    c.require(report.max_precision_used <= 128, name + ": needed more than 128 bits");  // 0: all exact
    c.require(report.checked_through == seq.length(), name + ": not every index checked");
    return report;
  };
  const auto odd = run("odd numbers", poly_family({Rational(1), 2}, Index{1} << 16));
  c.require(odd.C1 == Rational(1, 4) && odd.C2 == 4, "odd numbers: C1, C2 are not 1/4, 4");
  run("figure 1", from_splitting(Rational(1), Rational(4), [](Index) { return FactorPair{Rational(2), Rational(2)}; },
                                 Index{1} << 16));
  for (long k = 4; k <= 8; ++k) run("tattersall " + std::to_string(k), tattersall({k}, Index{1} << 14));
  c.note("odd numbers and figure 1 at N=65536, tattersall k=4..8 at N=16384, 128-bit directed rounding");
  return c.verdict();
}

Verdict ac7() {
  using namespace galileo::continuous;
  Checker c;
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> sample(0.0, 4.0);
  SampledProfile pl;
  for (int i = 0; i < 24; ++i) pl.samples.push_back(sample(rng));
  const std::vector<std::pair<std::string, Profile>> profiles{
      {"constant", Profile(ConstantProfile{2})},
      {"2+sin", Profile(FourierProfile::sinusoid(2, 1, 1))},
      {"piecewise-linear", Profile(pl)}};
  const std::vector<std::pair<Real, Real>> params{{2, 8}, {3, 27}, {0.5L, 0.125L}};
  const std::vector<Real> xs{0.5L, 1, std::exp(Real(1)), 10, 100};
  Real worst_integral = 0, worst_pointwise = 0, worst_pointwise_abs = 0, worst_defect = 0, worst_roundtrip = 0;
  for (const auto& [name, g] : profiles) {
    for (const auto& [a, b] : params) {
      const GalileoFunction f(a, b, g);
      for (Real x : xs) {
        const auto r = verify_integral_relation(f, x, 1e-9L);
        worst_integral = std::max(worst_integral, r.residual);
        c.require(r.outcome == Outcome::pass && r.residual < 1e-9L, name + ": integral relation " + to_string(r.outcome));
      }
      const auto pw = verify_pointwise_identity(f, xs, 1e-12L);
      // Residuals are relative to max(1, |b f(x)|): values reach 1e6 here, where one
      // long double ulp is already ~1e-13, so an absolute 1e-12 is not representable.
      worst_pointwise = std::max(worst_pointwise, pw.max_scaled_residual);
      worst_pointwise_abs = std::max(worst_pointwise_abs, pw.max_residual);
      c.require(pw.pass && pw.max_scaled_residual < 1e-12L, name + ": scaled pointwise residual above 1e-12");
      const auto grid = uniform_grid(48);
      const auto ex = extract_profile([&f](Real t) { return f(t); }, a, b, grid);
      worst_defect = std::max(worst_defect, ex.periodicity_defect);
      c.require(ex.periodicity_defect < 1e-10L, name + ": periodicity defect above 1e-10");
      for (std::size_t i = 0; i < grid.size(); ++i) {
        worst_roundtrip = std::max(worst_roundtrip, std::fabs(ex.values[i] - g(grid[i])));
      }
    }
  }
  c.require(worst_roundtrip < 1e-10L, "extracted profile differs from the input profile");

  // Negative control: the sinusoid evaluated on a period of 1.1 without wrap-around.
  const Real pi = std::acos(Real(-1));
  auto broken = [pi](Real t) {
    return (2 + std::sin(2 * pi * (std::log(t) / std::log(Real(2))) / 1.1L)) * t * t;
  };
  QuadratureOptions options;
  options.profile_bound = 3;
  Real control = 0;
  for (Real x : xs) control = std::max(control, integral_residual(broken, 2, 8, 2, x, 1e-9L, options).residual);
  c.require(control > 1e-3L, "aperiodic control was not detected");

  std::ostringstream s;
  s << std::scientific << std::setprecision(2) << "max (G') residual " << double(worst_integral)
    << ", max pointwise " << double(worst_pointwise)
    << " scaled (" << double(worst_pointwise_abs) << " absolute)" << ", max defect " << double(worst_defect)
    << ", round trip " << double(worst_roundtrip) << ", control " << double(control);
  c.note(s.str());
  return c.verdict();
}

Verdict ac8() {
  Checker c;
  oeis::ClientOptions options;
  options.cache_dir = oeis::default_cache_dir();
  options.fixture_dirs = {GALILEO_FIXTURE_DIR};
  options.offline = true;
  const oeis::Client client(options);
  const oeis::MatchOptions match;

  auto indexed = [](const SequencePrefix& p, std::int64_t from) {
    IndexedTerms t{from, {}};
    t.values.assign(p.terms().begin() + (from - 1), p.terms().end());
    return t;
  };
  std::vector<std::string> found;
  // Returns the passes, or records why the candidate could not be checked.
  auto check = [&](const std::string& label, const IndexedTerms& local, const std::string& id,
                   std::optional<std::pair<int, Rational>> pinned) {
    oeis::Entry entry;
    try {
      entry = client.fetch(id).entry;
    } catch (const EnvironmentError&) {
      c.require(false, label + " vs " + id + ": no data available offline");
      return;
    }
    const auto passes = oeis::match_entry(local, entry, match);
    if (passes.empty()) {
      c.require(false, label + " vs " + id + ": no shift/scalar matches");
      return;
    }
    if (pinned) {
      const bool hit = std::any_of(passes.begin(), passes.end(), [&](const oeis::MatchResult& r) {
        return r.shift == pinned->first && r.scalar == pinned->second;
      });
      c.require(hit, label + " vs " + id + ": expected shift/scalar not among the passes");
    }
    // Report the most direct correspondence: smallest |shift|, then scalar 1.
    const auto& r = *std::min_element(passes.begin(), passes.end(), [](const auto& x, const auto& y) {
      return std::pair(std::abs(x.shift), x.scalar != 1) < std::pair(std::abs(y.shift), y.scalar != 1);
    });
    c.require(r.matched_length >= 50, label + " vs " + id + ": fewer than 50 terms");
    found.push_back(id + "(s=" + std::to_string(r.shift) + ",x" + str(r.scalar) + ",n=" +
                    std::to_string(r.matched_length) + ")");
  };

  const Index N = 600;
  check("equal children", indexed(closed_equal_children(N), 2), "A053644", std::pair{1, Rational(3)});
  check("unequal children", indexed(closed_unequal_children(N), 1), "A048883", std::pair{1, Rational(1)});
  const char* poly_ids[] = {"A000012", "A005408", "A003215", "A005917", "A022521"};
  for (unsigned d = 1; d <= 5; ++d) {
    check("poly d=" + std::to_string(d), indexed(poly_family({Rational(1), d}, N), 1), poly_ids[d - 1], std::nullopt);
  }
  const char* tattersall_ids[] = {"A005408", "A385587", "A385643"};
  for (long k = 4; k <= 6; ++k) {
    check("tattersall k=" + std::to_string(k), indexed(tattersall({k}, N), 1), tattersall_ids[k - 4], std::nullopt);
  }
  std::string list;
  for (const auto& f : found) list += (list.empty() ? "" : " ") + f;
  c.note("matched " + list);
  return c.verdict();
}

Verdict ac9() {
  Checker c;
  const Index N = 100000;
  const auto four = tattersall({4}, N);
  for (Index n = 1; n <= N; ++n) {
    c.require(four.term(n) == Rational(static_cast<unsigned long>(2 * n - 1)), "k=4 differs at n=" + std::to_string(n));
  }
  for (long k = 4; k <= 12; ++k) {
    const auto seq = tattersall({k}, N);
    for (Index n = 2; n <= N; ++n) {
      c.require(seq.term(n - 1) < seq.term(n), "k=" + std::to_string(k) + " not increasing at n=" + std::to_string(n));
    }
  }
  c.note("k=4 is 2n-1 and k=4..12 strictly increasing through n=100000");
  return c.verdict();
}

struct Criterion {
  const char* id;
  const char* title;
  double budget_seconds;
  std::function<Verdict()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "(G) <=> (L) on random tree prefixes", 5, ac1},
      {"AC2", "polynomial family and classifier", 10, ac2},
      {"AC3", "figures 1 and 2 and their closed forms", 5, ac3},
      {"AC4", "tree round trip and product form", 10, ac4},
      {"AC5", "monotone integer sequences (k=2 constant, k=3 extinct)", 60, ac5},
      {"AC6", "growth bounds with explicit constants", 60, ac6},
      {"AC7", "continuous analogue", 30, ac7},
      {"AC8", "OEIS correspondences (offline fixtures)", 5, ac8},
      {"AC9", "Tattersall: odd numbers and strict increase", 10, ac9},
  };
  int failed = 0;
  for (const auto& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criterion.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > criterion.budget_seconds) {
      v.pass = false;
      v.detail += "; over time budget";
    }
    if (!v.pass) ++failed;
    std::cout << (v.pass ? "[PASS] " : "[FAIL] ") << criterion.id << ' ' << criterion.title << " (" << std::fixed
              << std::setprecision(2) << seconds << " s / " << criterion.budget_seconds << " s): " << v.detail
              << std::endl;
  }
  std::cout << (criteria.size() - failed) << '/' << criteria.size() << " acceptance criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
