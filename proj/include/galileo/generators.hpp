#pragma once

#include <functional>

#include "galileo/rational.hpp"
#include "galileo/sequence.hpp"
#include "galileo/tree.hpp"

namespace galileo {

/// a_n = C (n^d - (n-1)^d), so S_n = C n^d and k = 2^d.
struct PolyFamilyParams {
  Rational C;
  unsigned d = 1;
};

struct TattersallParams {
  long k = 4;
};

/// Must be deterministic: the same node always yields the same pair.
using FactorOracle = std::function<FactorPair(Index)>;

SequencePrefix poly_family(const PolyFamilyParams& params, Index length);

/// a_1 = 1, a_2 = k-1, and for n >= 2:
///   a_{2n-1} = floor((k a_n - 1) / 2),  a_{2n} = floor(k a_n / 2) + 1.
/// Integer k >= 4 only; length >= 2.
SequencePrefix tattersall(const TattersallParams& params, Index length);

/// Propagates splitting factors down the tree from a_1 and a_2 = (k-1) a_1.
///
/// `factors` is called once per node n >= 2 whose left child 2n-1 is within
/// the prefix. A pair that is non-positive or does not sum to k aborts with
/// NodeError naming n.
SequencePrefix from_splitting(const Rational& a1, const Rational& k, const FactorOracle& factors, Index length);

/// Same construction from an explicit factor table.
SequencePrefix from_splitting(const Rational& a1, const SplittingFactors& factors, Index length);

/// a_1 = 1, a_n = 3 * 2^floor(log2(n-1)) for n >= 2; k = 4.
SequencePrefix closed_equal_children(Index length);

/// a_n = 3^{s_2(n-1)}; k = 4.
SequencePrefix closed_unequal_children(Index length);

/// Number of ones in the binary expansion of m.
unsigned digit_sum_base2(std::uint64_t m) noexcept;

/// floor(log2 m) for m >= 1.
unsigned floor_log2(std::uint64_t m) noexcept;

}  // namespace galileo
