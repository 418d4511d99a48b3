#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

#include "galileo/generators.hpp"
#include "galileo/sequence.hpp"

namespace galileo::testing {

inline std::vector<Rational> rationals(std::initializer_list<long> values) {
  std::vector<Rational> out;
  for (long v : values) out.emplace_back(v);
  return out;
}

inline SequencePrefix prefix(std::initializer_list<long> values, long k) {
  return SequencePrefix(rationals(values), Rational(k));
}

/// Uniform rational p/q with 1 <= p <= max_num, 1 <= q <= max_den.
inline Rational random_positive_rational(std::mt19937_64& rng, long max_num, long max_den) {
  std::uniform_int_distribution<long> num(1, max_num), den(1, max_den);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

/// A random split of k into two positive rationals: b = k * t with t in (0,1) rational.
inline FactorPair random_split(std::mt19937_64& rng, const Rational& k) {
  std::uniform_int_distribution<long> den(2, 12);
  const long q = den(rng);
  std::uniform_int_distribution<long> num(1, q - 1);
  Rational t(num(rng), q);
  t.canonicalize();
  Rational b = k * t;
  return {b, k - b};
}

/// Deterministic random oracle: the pair for node n depends only on (seed, n).
inline FactorOracle random_oracle(std::uint64_t seed, const Rational& k) {
  return [seed, k](Index n) {
    std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + n);
    return random_split(rng, k);
  };
}

}  // namespace galileo::testing
