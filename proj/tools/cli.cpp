#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "galileo/continuous.hpp"
#include "galileo/generators.hpp"
#include "galileo/growth.hpp"
#include "galileo/oeis.hpp"
#include "galileo/polynomial.hpp"
#include "galileo/search.hpp"
#include "galileo/seqio.hpp"
#include "galileo/sequence.hpp"
#include "galileo/tree.hpp"

namespace galileo::cli {

namespace {

constexpr const char* kVersion = "0.1.0";

enum class Format { plain, records };

using Fields = std::vector<std::pair<std::string, std::string>>;

// Summary output: `key: value` lines (plain) or one `record=<type> key=value ...` line (records).
class Printer {
 public:
  Printer(std::ostream& out, Format format) : out_(out), format_(format) {}

  void record(const std::string& type, const Fields& fields) const {
    if (format_ == Format::plain) {
      for (const auto& [key, value] : fields) out_ << key << ": " << value << '\n';
      return;
    }
    out_ << "record=" << type;
    for (const auto& [key, value] : fields) out_ << ' ' << key << '=' << value;
    out_ << '\n';
  }

  std::ostream& stream() const { return out_; }

 private:
  std::ostream& out_;
  Format format_;
};

// Thrown by handlers for input-level problems that are the caller's fault.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string real_str(continuous::Real v) {
  std::ostringstream s;
  s << std::scientific << std::setprecision(6) << static_cast<double>(v);
  return s.str();
}

std::string bool_str(bool v) { return v ? "true" : "false"; }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto a = item.find_first_not_of(" \t");
    const auto b = item.find_last_not_of(" \t");
    if (a == std::string::npos) throw UsageError("empty entry in list '" + text + "'");
    parts.push_back(item.substr(a, b - a + 1));
  }
  return parts;
}

// `-` reads standard input.
class Input {
 public:
  Input(const std::string& path, std::istream& stdin_stream) {
    if (path == "-") {
      stream_ = &stdin_stream;
      return;
    }
    file_ = std::make_unique<std::ifstream>(path);
    if (!*file_) throw EnvironmentError("cannot open '" + path + "'");
    stream_ = file_.get();
  }
  std::istream& get() { return *stream_; }

 private:
  std::unique_ptr<std::ifstream> file_;
  std::istream* stream_ = nullptr;
};

oeis::Client make_client(bool offline, const std::vector<std::string>& fixture_dirs) {
  oeis::ClientOptions options;
  options.cache_dir = oeis::default_cache_dir();
  options.offline = offline;
  for (const auto& d : fixture_dirs) options.fixture_dirs.emplace_back(d);
  if (const char* dir = std::getenv("GALILEO_FIXTURE_DIR"); dir && *dir) options.fixture_dirs.emplace_back(dir);
  if (const char* url = std::getenv("GALILEO_OEIS_URL"); url && *url) options.base_url = url;
  return oeis::Client(std::move(options));
}

std::pair<int, int> parse_shift_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw UsageError("shift range must look like lo..hi");
  try {
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw UsageError("bad shift range '" + text + "'");
  }
}

Fields report_fields(const VerificationReport& report) {
  Fields f{{"relation", std::string(to_string(report.relation))},
           {"verified_through", std::to_string(report.verified_through)},
           {"status", report.passed() ? "pass" : "fail"}};
  if (!report.passed()) {
    f.emplace_back("first_failure", std::to_string(report.failures.front().n));
    f.emplace_back("residual", to_string(report.failures.front().value));
    f.emplace_back("failures", std::to_string(report.failures.size()));
  }
  return f;
}

// --- handlers -------------------------------------------------------------

struct GenerateArgs {
  std::string C = "1";
  unsigned d = 2;
  long tattersall_k = 4;
  std::string k = "4";
  std::string a1 = "1";
  std::string rule = "equal";
  std::string factors_file;
  std::string form = "equal";
  Index n = 16;
};

FactorOracle tree_rule(const GenerateArgs& args, const Rational& k, std::istream& in,
                       std::optional<SplittingFactors>& table) {
  if (args.rule == "equal") {
    const FactorPair pair{k / 2, k / 2};
    return [pair](Index) { return pair; };
  }
  if (args.rule == "unequal") {
    const FactorPair pair{Rational(1), k - 1};
    return [pair](Index) { return pair; };
  }
  if (args.rule == "odd") {
    if (k != 4) throw UsageError("rule 'odd' (a_n = 2n-1) requires k = 4");
    return [](Index n) {
      const Rational denom(static_cast<unsigned long>(2 * n - 1));
      return FactorPair{Rational(static_cast<unsigned long>(4 * n - 3)) / denom,
                        Rational(static_cast<unsigned long>(4 * n - 1)) / denom};
    };
  }
  if (args.rule == "file") {
    if (args.factors_file.empty()) throw UsageError("rule 'file' needs --factors-file");
    Input input(args.factors_file, in);
    table.emplace(read_factor_table(input.get(), k));
    return [&table](Index n) { return table->at(n); };
  }
  throw UsageError("unknown rule '" + args.rule + "' (equal|unequal|odd|file)");
}

int run_growth(const SequencePrefix& prefix, unsigned precision, bool per_index, const Printer& print) {
  GrowthOptions options;
  options.precision = precision;
  options.max_precision = std::max(1024u, precision * 8);
  options.keep_records = per_index;
  const GrowthReport report = growth_bounds_check(prefix, options);
  if (per_index) {
    for (const auto& rec : report.records) {
      print.record("bound", {{"n", std::to_string(rec.n)},
                             {"sum_lower", to_string(rec.sum_lower)},
                             {"sum_upper", to_string(rec.sum_upper)},
                             {"term_lower", to_string(rec.term_lower)},
                             {"term_upper", to_string(rec.term_upper)}});
    }
  }
  std::ostringstream exponent;
  exponent << std::setprecision(17) << report.exponent;
  Fields f{{"k", to_string(report.k)},
           {"d", report.integer_exponent ? std::to_string(*report.integer_exponent) : exponent.str()},
           {"C1", to_string(report.C1)},
           {"C2", to_string(report.C2)},
           {"D1", to_string(report.D1)},
           {"D1_branch", report.D1_adjusted ? "a1" : "proof"},
           {"D2", to_string(report.D2)},
           {"checked_through", std::to_string(report.checked_through)},
           {"passes", std::to_string(report.passes)},
           {"failures", std::to_string(report.failures)},
           {"indeterminate", std::to_string(report.indeterminates)},
           {"precision_bits", std::to_string(report.base_precision)},
           {"max_precision_bits", std::to_string(report.max_precision_used)},
           {"status", to_string(report.verdict())}};
  if (report.first_failure) f.emplace_back("first_failure", std::to_string(*report.first_failure));
  if (report.first_indeterminate) f.emplace_back("first_indeterminate", std::to_string(*report.first_indeterminate));
  print.record("growth", f);
  return report.verdict() == BoundStatus::pass ? ok : negative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generate, verify, decompose and search Galileo sequences (S_2n = k S_n)", "galileo"};
  app.require_subcommand(1);
  std::string format_name = "plain";
  bool quiet = false;
  app.add_option("--format", format_name, "Summary output format")->check(CLI::IsMember({"plain", "records"}));
  app.add_flag("-q,--quiet", quiet, "Suppress the version banner on stderr");

  // generate
  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Emit a sequence prefix as `index value` lines");
  generate->require_subcommand(1);
  auto* gen_poly = generate->add_subcommand("poly", "a_n = C (n^d - (n-1)^d), k = 2^d");
  gen_poly->add_option("--C", gen.C, "Positive rational scale");
  gen_poly->add_option("--d", gen.d, "Exponent d >= 1");
  gen_poly->add_option("--n", gen.n, "Prefix length")->required();
  auto* gen_tatt = generate->add_subcommand("tattersall", "Tattersall floor recursion, integer k >= 4");
  gen_tatt->add_option("--k", gen.tattersall_k, "Ratio k")->required();
  gen_tatt->add_option("--n", gen.n, "Prefix length")->required();
  auto* gen_tree = generate->add_subcommand("tree", "Propagate splitting factors down the tree");
  gen_tree->add_option("--k", gen.k, "Ratio k (rational > 1)");
  gen_tree->add_option("--a1", gen.a1, "First term (positive rational)");
  gen_tree->add_option("--rule", gen.rule, "equal | unequal | odd | file");
  gen_tree->add_option("--factors-file", gen.factors_file, "`n b c` table for --rule file");
  gen_tree->add_option("--n", gen.n, "Prefix length")->required();
  auto* gen_closed = generate->add_subcommand("closed", "Closed forms 3*2^floor(log2(n-1)) and 3^s2(n-1), k = 4");
  gen_closed->add_option("--form", gen.form, "equal | unequal")->check(CLI::IsMember({"equal", "unequal"}));
  gen_closed->add_option("--n", gen.n, "Prefix length")->required();

  // verify
  std::string verify_k, verify_file, verify_relation = "both";
  auto* verify = app.add_subcommand("verify", "Check S_2n = k S_n and a_{2n-1} + a_{2n} = k a_n exactly");
  verify->add_option("--k", verify_k, "Ratio k")->required();
  verify->add_option("--relation", verify_relation, "global | local | both")
      ->check(CLI::IsMember({"global", "local", "both"}));
  verify->add_option("file", verify_file, "Sequence file, `-` for stdin")->required();

  // factors
  std::string factors_k, factors_file;
  auto* factors = app.add_subcommand("factors", "Extract splitting factors b_n, c_n from a sequence");
  factors->add_option("--k", factors_k, "Ratio k")->required();
  factors->add_option("file", factors_file, "Sequence file, `-` for stdin")->required();

  // path
  Index path_n = 2;
  auto* path = app.add_subcommand("path", "Path from node 2 to node n in the tree m -> (2m-1, 2m)");
  path->add_option("n", path_n, "Target node")->required();

  // product
  Index product_n = 2;
  std::string product_k = "4", product_a1 = "1", product_file;
  auto* product = app.add_subcommand("product", "a_n as (k-1) a_1 times the factors along the path");
  product->add_option("n", product_n, "Index n >= 2")->required();
  product->add_option("--factors-file", product_file, "`n b c` table")->required();
  product->add_option("--k", product_k, "Ratio k");
  product->add_option("--a1", product_a1, "First term");

  // classify
  std::string classify_coeffs, classify_k;
  auto* classify = app.add_subcommand("classify", "Decide whether a_n = p(n) satisfies S_2n = k S_n");
  classify->add_option("--coeffs", classify_coeffs, "c0,c1,... of p")->required();
  classify->add_option("--k", classify_k, "Ratio k")->required();

  // growth
  std::string growth_k, growth_file;
  unsigned growth_precision = 128;
  bool growth_per_index = false;
  auto* growth = app.add_subcommand("growth", "Check the power-law bounds with explicit constants");
  growth->add_option("--k", growth_k, "Ratio k")->required();
  growth->add_option("--precision", growth_precision, "Starting MPFR precision in bits");
  growth->add_flag("--per-index", growth_per_index, "Emit one record per index");
  growth->add_option("file", growth_file, "Sequence file, `-` for stdin")->required();

  // search
  SearchSpec search_spec;
  std::int64_t search_cap = 0;
  bool no_lookahead = false;
  auto* search = app.add_subcommand("search", "Enumerate monotone integer prefixes satisfying the local identity");
  search->add_option("--k", search_spec.k, "Integer ratio k >= 2")->required();
  search->add_option("--a1", search_spec.a1, "First term")->required();
  search->add_option("--length", search_spec.length, "Prefix length N")->required();
  search->add_option("--max-survivors", search_spec.max_survivors, "Emit at most this many survivors");
  auto* cap_opt = search->add_option("--cap", search_cap, "Prune (and flag) terms above this value");
  search->add_option("--node-budget", search_spec.node_budget, "Give up after this many search nodes");
  search->add_flag("--no-lookahead", no_lookahead, "Disable the one-level feasibility prune");
  search->add_flag("--exists", search_spec.stop_at_first_survivor, "Stop at the first survivor");

  // extinction
  std::int64_t ext_k = 3, ext_a1_max = 1;
  Index ext_length = 16;
  std::int64_t ext_cap = 0;
  auto* extinction = app.add_subcommand("extinction", "Smallest length with no monotone prefix, per a_1");
  extinction->add_option("--k", ext_k, "Integer ratio k >= 2")->required();
  extinction->add_option("--a1-max", ext_a1_max, "Largest seed a_1")->required();
  extinction->add_option("--length-max", ext_length, "Largest length searched")->required();
  auto* ext_cap_opt = extinction->add_option("--cap", ext_cap, "Value cap");

  // continuous
  std::string cont_a, cont_b, cont_profile = "const:1", cont_x = "1";
  double cont_tol = 1e-9;
  auto* cont = app.add_subcommand("continuous", "Galileo functions f(x) = g(log_a x) x^{log_a(b/a)}");
  cont->require_subcommand(1);
  auto* cont_verify = cont->add_subcommand("verify", "Residuals of the integral relation and a f(ax) = b f(x)");
  cont_verify->add_option("--a", cont_a, "Dilation a > 0, a != 1")->required();
  cont_verify->add_option("--b", cont_b, "Integral ratio b > 0")->required();
  cont_verify->add_option("--profile", cont_profile, "const:<v> | sin:<offset>,<amp>,<freq> | file:<samples>");
  cont_verify->add_option("--x", cont_x, "Comma-separated sample points");
  cont_verify->add_option("--tol", cont_tol, "Tolerance");

  // oeis
  bool offline = false;
  std::vector<std::string> fixture_dirs;
  std::string fetch_id, match_file, match_candidates, match_shifts = "-2..2", match_scalars, match_k;
  std::size_t match_min = 50;
  auto* oeis_cmd = app.add_subcommand("oeis", "Fetch OEIS b-files and match sequences against them");
  oeis_cmd->require_subcommand(1);
  oeis_cmd->add_flag("--offline", offline, "Serve cache and fixtures only");
  oeis_cmd->add_option("--fixtures", fixture_dirs, "Extra directories holding bNNNNNN.txt files");
  auto* oeis_fetch = oeis_cmd->add_subcommand("fetch", "Print an entry's terms");
  oeis_fetch->add_option("id", fetch_id, "Identifier such as A005408")->required();
  auto* oeis_match = oeis_cmd->add_subcommand("match", "Compare a sequence against candidate entries");
  oeis_match->add_option("file", match_file, "Sequence file, `-` for stdin")->required();
  oeis_match->add_option("--candidates", match_candidates, "Comma-separated identifiers")->required();
  oeis_match->add_option("--shifts", match_shifts, "Shift range lo..hi");
  oeis_match->add_option("--scalars", match_scalars, "Comma-separated rational multipliers (default 1,3[,k-1])");
  oeis_match->add_option("--k", match_k, "Adds k-1 to the default scalars");
  oeis_match->add_option("--min-length", match_min, "Minimum overlap for a pass");

  std::vector<std::string> argv_storage{"galileo"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "galileo: " << e.what() << "\n" << app.help();
    return usage;
  }

  if (!quiet) err << "# galileo " << kVersion << '\n';
  const Printer print(out, format_name == "records" ? Format::records : Format::plain);

  try {
    if (generate->parsed()) {
      if (gen_poly->parsed()) {
        write_sequence(out, poly_family({parse_rational(gen.C), gen.d}, gen.n));
      } else if (gen_tatt->parsed()) {
        write_sequence(out, tattersall({gen.tattersall_k}, gen.n));
      } else if (gen_tree->parsed()) {
        const Rational k = parse_rational(gen.k);
        std::optional<SplittingFactors> table;
        const FactorOracle oracle = tree_rule(gen, k, in, table);
        write_sequence(out, from_splitting(parse_rational(gen.a1), k, oracle, gen.n));
      } else {
        write_sequence(out, gen.form == "equal" ? closed_equal_children(gen.n) : closed_unequal_children(gen.n));
      }
      return ok;
    }

    if (verify->parsed()) {
      const Rational k = parse_rational(verify_k);
      Input input(verify_file, in);
      const SequencePrefix prefix = read_sequence(input.get(), k);
      bool passed = true;
      if (verify_relation != "local") {
        const auto r = check_global(prefix);
        print.record("verify", report_fields(r));
        passed = passed && r.passed();
      }
      if (verify_relation != "global") {
        const auto r = check_local(prefix);
        print.record("verify", report_fields(r));
        passed = passed && r.passed();
      }
      return passed ? ok : negative;
    }

    if (factors->parsed()) {
      const Rational k = parse_rational(factors_k);
      Input input(factors_file, in);
      const SequencePrefix prefix = read_sequence(input.get(), k);
      const auto root = root_factors(prefix);
      out << "# root " << to_string(root.left) << ' ' << to_string(root.right) << '\n';
      write_factor_table(out, extract_factors(prefix));
      return ok;
    }

    if (path->parsed()) {
      const TreePath p = path_to(path_n);
      std::vector<std::string> nodes, moves;
      for (Index m : p.nodes()) nodes.push_back(std::to_string(m));
      for (Move mv : p.moves) moves.push_back(mv == Move::left ? "left" : "right");
      print.record("path", {{"n", std::to_string(path_n)},
                            {"nodes", join(nodes, ",")},
                            {"moves", moves.empty() ? "-" : join(moves, ",")},
                            {"length", std::to_string(moves.size())}});
      return ok;
    }

    if (product->parsed()) {
      const Rational k = parse_rational(product_k);
      Input input(product_file, in);
      const SplittingFactors table = read_factor_table(input.get(), k);
      const Rational value = product_form(product_n, parse_rational(product_a1), k, table);
      print.record("product", {{"n", std::to_string(product_n)}, {"value", to_string(value)}});
      return ok;
    }

    if (classify->parsed()) {
      const Polynomial p = parse_coefficients(classify_coeffs);
      const Rational k = parse_rational(classify_k);
      const MonomialResult result = classify_polynomial(p, k);
      Fields f{{"p", to_string(p)}, {"k", to_string(k)}, {"sum_polynomial", to_string(summation_polynomial(p))}};
      if (result.verdict == DilationVerdict::monomial) {
        f.emplace_back("verdict", "galileo");
        f.emplace_back("C", to_string(result.C));
        f.emplace_back("d", std::to_string(result.d));
      } else {
        f.emplace_back("verdict", "not-galileo");
      }
      print.record("classify", f);
      return result.verdict == DilationVerdict::monomial ? ok : negative;
    }

    if (growth->parsed()) {
      Input input(growth_file, in);
      const SequencePrefix prefix = read_sequence(input.get(), parse_rational(growth_k));
      return run_growth(prefix, growth_precision, growth_per_index, print);
    }

    if (search->parsed()) {
      if (cap_opt->count() > 0) search_spec.value_cap = search_cap;
      search_spec.lookahead = !no_lookahead;
      const SearchOutcome outcome = enumerate_monotone(search_spec);
      for (std::size_t i = 0; i < outcome.emitted.size(); ++i) {
        out << "# survivor " << (i + 1) << '\n';
        const auto& s = outcome.emitted[i];
        for (std::size_t j = 0; j < s.size(); ++j) out << (j + 1) << ' ' << s[j] << '\n';
      }
      std::vector<std::string> counts;
      for (auto c : outcome.prefixes_at_length) counts.push_back(std::to_string(c));
      print.record("search", {{"k", std::to_string(search_spec.k)},
                              {"a1", std::to_string(search_spec.a1)},
                              {"length", std::to_string(search_spec.length)},
                              {"survivors", std::to_string(outcome.survivors)},
                              {"emitted", std::to_string(outcome.emitted.size())},
                              {"extinction_depth", outcome.extinction_depth
                                                       ? std::to_string(*outcome.extinction_depth)
                                                       : "none"},
                              {"prefixes_per_length", join(counts, ",")},
                              {"complete", bool_str(outcome.complete)},
                              {"nodes", std::to_string(outcome.nodes_visited)}});
      return ok;
    }

    if (extinction->parsed()) {
      std::optional<std::int64_t> cap;
      if (ext_cap_opt->count() > 0) cap = ext_cap;
      bool complete = true;
      for (const auto& row : extinction_depth(ext_k, ext_a1_max, ext_length, cap)) {
        complete = complete && row.complete;
        print.record("extinction", {{"a1", std::to_string(row.a1)},
                                    {"depth", row.depth ? std::to_string(*row.depth)
                                                        : "none<=" + std::to_string(ext_length)},
                                    {"complete", bool_str(row.complete)}});
      }
      return ok;
    }

    if (cont->parsed()) {
      using continuous::Real;
      // a and b accept exact rationals such as 1/2; numerator and denominator are converted separately.
      const auto to_real = [](const std::string& text) {
        const Rational q = parse_rational(text);
        return static_cast<Real>(q.get_num().get_d()) / static_cast<Real>(q.get_den().get_d());
      };
      const continuous::GalileoFunction f(to_real(cont_a), to_real(cont_b), continuous::parse_profile(cont_profile));
      std::vector<Real> xs;
      for (const auto& x : split_list(cont_x)) {
        std::size_t used = 0;
        Real v = 0;
        try {
          v = std::stold(x, &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used != x.size() || used == 0) throw UsageError("bad sample point '" + x + "'");
        xs.push_back(v);
      }
      bool all_pass = true;
      const auto pointwise = continuous::verify_pointwise_identity(f, xs, static_cast<Real>(cont_tol));
      for (std::size_t i = 0; i < xs.size(); ++i) {
        const auto integral = continuous::verify_integral_relation(f, xs[i], static_cast<Real>(cont_tol));
        const auto& pw = pointwise.samples[i];
        all_pass = all_pass && integral.outcome == continuous::Outcome::pass && pw.pass;
        print.record("continuous", {{"x", real_str(xs[i])},
                                    {"integral_residual", real_str(integral.residual)},
                                    {"quadrature_error", real_str(integral.error_bound)},
                                    {"integral", continuous::to_string(integral.outcome)},
                                    {"pointwise_residual", real_str(pw.residual)},
                                    {"pointwise_scaled", real_str(pw.residual / pw.scale)},
                                    {"pointwise", pw.pass ? "pass" : "fail"}});
      }
      return all_pass ? ok : negative;
    }

    if (oeis_cmd->parsed()) {
      const oeis::Client client = make_client(offline, fixture_dirs);
      if (oeis_fetch->parsed()) {
        const auto fetched = client.fetch(fetch_id);
        out << "# " << fetched.entry.id << " source=" << oeis::to_string(fetched.source) << '\n';
        std::int64_t n = fetched.entry.offset;
        for (const auto& t : fetched.entry.terms) out << n++ << ' ' << t.get_str() << '\n';
        return ok;
      }
      Input input(match_file, in);
      const IndexedTerms local = read_indexed_terms(input.get());
      oeis::MatchOptions options;
      std::tie(options.shift_lo, options.shift_hi) = parse_shift_range(match_shifts);
      options.min_length = match_min;
      if (!match_scalars.empty()) {
        options.scalars.clear();
        for (const auto& s : split_list(match_scalars)) options.scalars.push_back(parse_rational(s));
      } else if (!match_k.empty()) {
        const Rational extra = parse_rational(match_k) - 1;
        if (extra != 1 && extra != 3) options.scalars.push_back(extra);
      }
      std::vector<std::string> ids;
      for (const auto& id : split_list(match_candidates)) ids.push_back(oeis::normalize_id(id));
      const auto report = oeis::match_sequence(local, ids, client, options);
      for (const auto& note : report.notes) out << "# " << note << '\n';
      for (const auto& r : report.passes) {
        print.record("match", {{"id", r.id},
                               {"shift", std::to_string(r.shift)},
                               {"scalar", to_string(r.scalar)},
                               {"matched_length", std::to_string(r.matched_length)},
                               {"verdict", "pass"}});
      }
      if (report.passes.empty()) print.record("match", {{"verdict", "none"}});
      if (report.passes.empty() && !report.notes.empty() && report.notes.size() == ids.size()) return environment;
      return report.passes.empty() ? negative : ok;
    }
  } catch (const EnvironmentError& e) {
    err << "galileo: " << e.what() << '\n';
    return environment;
  } catch (const UsageError& e) {
    err << "galileo: " << e.what() << '\n';
    return usage;
  } catch (const ParseError& e) {
    err << "galileo: input " << e.what() << '\n';
    return usage;
  } catch (const NodeError& e) {
    err << "galileo: " << e.what() << '\n';
    return usage;
  } catch (const std::invalid_argument& e) {
    err << "galileo: " << e.what() << '\n';
    return usage;
  } catch (const std::domain_error& e) {
    err << "galileo: " << e.what() << '\n';
    return usage;
  } catch (const std::exception& e) {
    err << "galileo: " << e.what() << '\n';
    return environment;
  }
  err << app.help();
  return usage;
}

}  // namespace galileo::cli
