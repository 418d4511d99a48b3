#pragma once

#include <map>
#include <optional>
#include <vector>

#include "galileo/error.hpp"
#include "galileo/rational.hpp"
#include "galileo/sequence.hpp"

namespace galileo {

/// (b_n, c_n): a_{2n-1} = b_n a_n and a_{2n} = c_n a_n.
struct FactorPair {
  Rational left;   // b_n
  Rational right;  // c_n

  friend bool operator==(const FactorPair&, const FactorPair&) = default;
};

/// Splitting factors for nodes n >= 2 of the tree rooted at 2.
///
/// Every stored pair is positive and sums to k. Node 1 is never stored: the
/// root relation a_2 = (k-1) a_1 is handled separately.
class SplittingFactors {
 public:
  explicit SplittingFactors(Rational k);

  /// Throws NodeError for n < 2, a non-positive factor, or b + c != k.
  void set(Index n, FactorPair pair);

  const FactorPair* find(Index n) const;
  const FactorPair& at(Index n) const;  // NodeError when missing
  bool contains(Index n) const { return pairs_.contains(n); }

  const Rational& k() const noexcept { return k_; }
  const std::map<Index, FactorPair>& pairs() const noexcept { return pairs_; }
  std::size_t size() const noexcept { return pairs_.size(); }

  friend bool operator==(const SplittingFactors&, const SplittingFactors&) = default;

 private:
  Rational k_;
  std::map<Index, FactorPair> pairs_;
};

/// Checks a pair against the splitting-factor contract; throws NodeError on violation.
void validate_factor_pair(Index n, const FactorPair& pair, const Rational& k);

enum class Move { left, right };  // left: m -> 2m-1, right: m -> 2m

/// Route from node 2 down to `end`.
struct TreePath {
  Index end = 2;
  std::vector<Move> moves;

  /// Node sequence 2 = m_0, m_1, ..., m_r = end.
  std::vector<Index> nodes() const;

  friend bool operator==(const TreePath&, const TreePath&) = default;
};

/// Parent of m >= 3 in the tree m -> (2m-1, 2m).
///
/// Children of p are 2p-1 (odd) and 2p (even). For m = 2p, (m+1)/2 floors to p;
/// for m = 2p-1, (m+1)/2 = p exactly. Hence parent(m) = floor((m+1)/2), and
/// since p >= 2 implies m >= 3, node 2 is the unique root.
constexpr Index tree_parent(Index m) noexcept { return (m + 1) / 2; }

/// Throws std::invalid_argument for n < 2.
TreePath path_to(Index n);

/// b_n = a_{2n-1}/a_n, c_n = a_{2n}/a_n for every n >= 2 with 2n <= N.
/// Rejects (NodeError) a root-relation violation (index 1) or a local-identity
/// violation at the first failing n.
SplittingFactors extract_factors(const SequencePrefix& prefix);

/// Normalized root factors (a_1/a_1, a_2/a_1) = (1, k-1); metadata only.
FactorPair root_factors(const SequencePrefix& prefix);

/// a_n = (k-1) a_1 * prod of b (left) / c (right) along path_to(n).
/// Throws NodeError naming the first path node without a factor.
Rational product_form(Index n, const Rational& a1, const Rational& k, const SplittingFactors& factors);

}  // namespace galileo
