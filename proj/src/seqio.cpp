#include "galileo/seqio.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace galileo {

namespace {

// Splits a data line into whitespace-separated fields; empty for blank/comment lines.
std::vector<std::string> fields_of(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r");
  if (first == std::string::npos || line[first] == '#') return {};
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string field;
  while (in >> field) out.push_back(field);
  return out;
}

std::int64_t parse_index(const std::string& text, std::size_t line_no) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw ParseError(line_no, "bad index '" + text + "'");
}

Rational parse_value(const std::string& text, std::size_t line_no) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw ParseError(line_no, e.what());
  }
}

}  // namespace

IndexedTerms read_indexed_terms(std::istream& in) {
  IndexedTerms terms;
  std::string line;
  std::size_t line_no = 0;
  bool any = false;
  while (std::getline(in, line)) {
    ++line_no;
    const auto fields = fields_of(line);
    if (fields.empty()) continue;
    if (fields.size() != 2) throw ParseError(line_no, "expected `index value`");
    const std::int64_t n = parse_index(fields[0], line_no);
    if (!any) {
      terms.first_index = n;
      any = true;
    } else if (n != terms.last_index() + 1) {
      throw ParseError(line_no, "index " + std::to_string(n) + " does not follow " + std::to_string(terms.last_index()));
    }
    terms.values.push_back(parse_value(fields[1], line_no));
  }
  return terms;
}

SequencePrefix read_sequence(std::istream& in, const Rational& k) {
  IndexedTerms terms = read_indexed_terms(in);
  if (terms.values.empty()) throw ParseError(0, "no sequence terms found");
  if (terms.first_index != 1) throw ParseError(0, "sequence must start at index 1");
  return SequencePrefix(std::move(terms.values), k);
}

void write_terms(std::ostream& out, std::int64_t first_index, const std::vector<Rational>& values) {
  std::int64_t n = first_index;
  for (const auto& v : values) out << n++ << ' ' << to_string(v) << '\n';
}

void write_sequence(std::ostream& out, const SequencePrefix& prefix) { write_terms(out, 1, prefix.terms()); }

SplittingFactors read_factor_table(std::istream& in, const Rational& k) {
  SplittingFactors factors(k);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto fields = fields_of(line);
    if (fields.empty()) continue;
    if (fields.size() != 3) throw ParseError(line_no, "expected `n b_n c_n`");
    const std::int64_t n = parse_index(fields[0], line_no);
    if (n < 2) throw ParseError(line_no, "splitting factors start at node 2");
    if (factors.contains(static_cast<Index>(n))) throw ParseError(line_no, "duplicate node " + fields[0]);
    try {
      factors.set(static_cast<Index>(n), {parse_value(fields[1], line_no), parse_value(fields[2], line_no)});
    } catch (const NodeError& e) {
      throw ParseError(line_no, e.what());
    }
  }
  return factors;
}

void write_factor_table(std::ostream& out, const SplittingFactors& factors) {
  for (const auto& [n, pair] : factors.pairs()) {
    out << n << ' ' << to_string(pair.left) << ' ' << to_string(pair.right) << '\n';
  }
}

}  // namespace galileo
