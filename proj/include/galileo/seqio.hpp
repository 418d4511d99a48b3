#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "galileo/rational.hpp"
#include "galileo/sequence.hpp"
#include "galileo/tree.hpp"

namespace galileo {

/// Consecutively indexed values, as stored in a b-file.
struct IndexedTerms {
  std::int64_t first_index = 1;
  std::vector<Rational> values;

  std::int64_t last_index() const { return first_index + static_cast<std::int64_t>(values.size()) - 1; }
  bool contains(std::int64_t n) const { return n >= first_index && n <= last_index(); }
  const Rational& at(std::int64_t n) const { return values.at(static_cast<std::size_t>(n - first_index)); }

  friend bool operator==(const IndexedTerms&, const IndexedTerms&) = default;
};

/// Reads `index value` lines. Blank lines and lines starting with `#` are
/// skipped; indices must be consecutive. Values are `p` or `p/q`.
/// Throws ParseError with the 1-based line number.
IndexedTerms read_indexed_terms(std::istream& in);

/// As read_indexed_terms, but additionally requires the indices to start at 1.
SequencePrefix read_sequence(std::istream& in, const Rational& k);

void write_terms(std::ostream& out, std::int64_t first_index, const std::vector<Rational>& values);
void write_sequence(std::ostream& out, const SequencePrefix& prefix);

/// Factor tables: one `n b_n c_n` line per node.
SplittingFactors read_factor_table(std::istream& in, const Rational& k);
void write_factor_table(std::ostream& out, const SplittingFactors& factors);

}  // namespace galileo
