#include "galileo/search.hpp"

#include <stdexcept>

namespace galileo {

void SearchSpec::validate() const {
  if (k < 2) throw std::invalid_argument("search needs integer k >= 2");
  if (a1 < 1) throw std::invalid_argument("search needs a_1 >= 1");
  if (length < 2) throw std::invalid_argument("search needs length >= 2");
  if (value_cap && *value_cap < a1) throw std::invalid_argument("value cap is below a_1");
}

namespace {

class MonotoneSearch {
 public:
  explicit MonotoneSearch(const SearchSpec& spec) : spec_(spec), terms_(spec.length + 1, 0) {
    out_.prefixes_at_length.assign(spec.length, 0);
  }

  SearchOutcome run() {
    terms_[1] = spec_.a1;
    out_.prefixes_at_length[0] = 1;
    std::int64_t a2 = 0;
    if (__builtin_mul_overflow(spec_.k - 1, spec_.a1, &a2) || exceeds_cap(a2)) {
      out_.cap_hit = true;
    } else {
      terms_[2] = a2;
      out_.prefixes_at_length[1] = 1;
      ++out_.nodes_visited;
      if (spec_.length == 2) {
        emit();
      } else {
        expand(2);
      }
    }
    out_.survivors = out_.prefixes_at_length.back();
    for (Index len = 1; len <= spec_.length; ++len) {
      if (out_.prefixes_at_length[len - 1] == 0) {
        out_.extinction_depth = len;
        break;
      }
    }
    out_.complete = !out_.cap_hit && !out_.budget_exhausted;
    return std::move(out_);
  }

 private:
  bool exceeds_cap(std::int64_t v) const { return spec_.value_cap && v > *spec_.value_cap; }

  void emit() {
    if (spec_.stop_at_first_survivor) out_.stopped_early = true;
    if (out_.emitted.size() < spec_.max_survivors) {
      out_.emitted.emplace_back(terms_.begin() + 1, terms_.end());
    }
  }

  // Assigns the children (2n-1, 2n) of node n and recurses into node n+1.
  void expand(Index n) {
    const Index left = 2 * n - 1;
    std::int64_t total = 0;
    if (__builtin_mul_overflow(spec_.k, terms_[n], &total)) {
      out_.cap_hit = true;
      return;
    }
    const std::int64_t lo = terms_[left - 1];
    const std::int64_t hi = total / 2;  // x <= total - x
    for (std::int64_t x = lo; x <= hi; ++x) {
      if (out_.budget_exhausted || out_.stopped_early) return;
      if (++out_.nodes_visited > spec_.node_budget) {
        out_.budget_exhausted = true;
        return;
      }
      if (exceeds_cap(x)) {
        out_.cap_hit = true;
        return;
      }
      terms_[left] = x;
      ++out_.prefixes_at_length[left - 1];
      if (left == spec_.length) {
        emit();
        continue;
      }
      const std::int64_t sibling = total - x;
      if (exceeds_cap(sibling)) {
        out_.cap_hit = true;
        continue;
      }
      terms_[left + 1] = sibling;
      ++out_.prefixes_at_length[left];
      if (left + 1 == spec_.length) {
        emit();
        continue;
      }
      if (spec_.lookahead && !next_pair_feasible(n)) continue;
      expand(n + 1);
    }
  }

  // Node n+1 needs a_{2n} <= floor(k a_{n+1} / 2); a_{n+1} is already assigned since n+1 <= 2n-1.
  bool next_pair_feasible(Index n) const {
    std::int64_t total = 0;
    if (__builtin_mul_overflow(spec_.k, terms_[n + 1], &total)) return true;
    return terms_[2 * n] <= total / 2;
  }

  const SearchSpec& spec_;
  std::vector<std::int64_t> terms_;
  SearchOutcome out_;
};

}  // namespace

SearchOutcome enumerate_monotone(const SearchSpec& spec) {
  spec.validate();
  return MonotoneSearch(spec).run();
}

std::vector<ExtinctionEntry> extinction_depth(std::int64_t k, std::int64_t a1_max, Index length_max,
                                              std::optional<std::int64_t> value_cap) {
  if (a1_max < 1) throw std::invalid_argument("a1_max must be >= 1");
  std::vector<ExtinctionEntry> table;
  for (std::int64_t a1 = 1; a1 <= a1_max; ++a1) {
    SearchSpec spec{.k = k, .a1 = a1, .length = length_max, .value_cap = value_cap, .max_survivors = 0,
                    .stop_at_first_survivor = true};
    const SearchOutcome outcome = enumerate_monotone(spec);
    table.push_back({a1, outcome.extinction_depth, outcome.complete});
  }
  return table;
}

}  // namespace galileo
