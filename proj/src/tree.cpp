#include "galileo/tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace galileo {

void validate_factor_pair(Index n, const FactorPair& pair, const Rational& k) {
  if (n < 2) throw NodeError(n, "splitting factors are defined only for nodes n >= 2");
  if (sgn(pair.left) <= 0 || sgn(pair.right) <= 0) throw NodeError(n, "splitting factor is not positive");
  if (pair.left + pair.right != k) {
    throw NodeError(n, "splitting factors " + to_string(pair.left) + " + " + to_string(pair.right) +
                           " do not sum to k = " + to_string(k));
  }
}

SplittingFactors::SplittingFactors(Rational k) : k_(std::move(k)) {
  if (k_ <= 1) throw std::invalid_argument("ratio k must exceed 1");
}

void SplittingFactors::set(Index n, FactorPair pair) {
  validate_factor_pair(n, pair, k_);
  pairs_.insert_or_assign(n, std::move(pair));
}

const FactorPair* SplittingFactors::find(Index n) const {
  const auto it = pairs_.find(n);
  return it == pairs_.end() ? nullptr : &it->second;
}

const FactorPair& SplittingFactors::at(Index n) const {
  if (const auto* p = find(n)) return *p;
  throw NodeError(n, "no splitting factor for node");
}

std::vector<Index> TreePath::nodes() const {
  std::vector<Index> out{2};
  Index m = 2;
  for (Move mv : moves) {
    m = mv == Move::left ? 2 * m - 1 : 2 * m;
    out.push_back(m);
  }
  return out;
}

TreePath path_to(Index n) {
  if (n < 2) throw std::invalid_argument("node " + std::to_string(n) + " is outside the tree rooted at 2");
  TreePath path{n, {}};
  for (Index m = n; m > 2; m = tree_parent(m)) {
    path.moves.push_back(m % 2 == 1 ? Move::left : Move::right);
  }
  std::reverse(path.moves.begin(), path.moves.end());
  return path;
}

SplittingFactors extract_factors(const SequencePrefix& prefix) {
  const Rational& k = prefix.k();
  if (prefix.length() >= 2 && prefix.term(2) != (k - 1) * prefix.term(1)) {
    throw NodeError(1, "root relation a_2 = (k-1) a_1 violated");
  }
  if (const auto failure = check_local(prefix).first_failure()) {
    throw NodeError(*failure, "local identity a_{2n-1} + a_{2n} = k a_n violated");
  }
  SplittingFactors factors(k);
  for (Index n = 2; 2 * n <= prefix.length(); ++n) {
    const Rational& parent = prefix.term(n);
    factors.set(n, {prefix.term(2 * n - 1) / parent, prefix.term(2 * n) / parent});
  }
  return factors;
}

FactorPair root_factors(const SequencePrefix& prefix) { return {Rational(1), prefix.k() - 1}; }

Rational product_form(Index n, const Rational& a1, const Rational& k, const SplittingFactors& factors) {
  const TreePath path = path_to(n);
  Rational value = (k - 1) * a1;
  Index m = 2;
  for (Move mv : path.moves) {
    const FactorPair& pair = factors.at(m);
    value *= mv == Move::left ? pair.left : pair.right;
    m = mv == Move::left ? 2 * m - 1 : 2 * m;
  }
  return value;
}

}  // namespace galileo
