#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "galileo/rational.hpp"
#include "galileo/seqio.hpp"

namespace galileo::oeis {

/// Validates `A` followed by exactly six digits; throws std::invalid_argument otherwise.
std::string normalize_id(std::string_view id);
/// `A053644` -> `b053644.txt`.
std::string bfile_name(std::string_view id);

struct Entry {
  std::string id;
  std::int64_t offset = 0;       // index of the first term
  std::vector<Integer> terms;

  IndexedTerms as_indexed() const;
  friend bool operator==(const Entry&, const Entry&) = default;
};

/// Parses a b-file (`n a(n)` lines, `#` comments). Values must be integers.
/// Throws ParseError with the offending line number.
Entry parse_bfile(std::istream& in, std::string_view id);

struct ClientOptions {
  std::filesystem::path cache_dir;
  std::vector<std::filesystem::path> fixture_dirs;  // consulted after the cache, before the network
  bool offline = false;
  std::string base_url = "https://oeis.org";
  int timeout_seconds = 20;
};

/// $GALILEO_CACHE_DIR, else $HOME/.cache/galileo/oeis, else ./.galileo-cache.
std::filesystem::path default_cache_dir();

/// Where a fetched entry came from.
enum class Source { cache, fixture, network };
std::string to_string(Source source);

struct FetchResult {
  Entry entry;
  Source source = Source::cache;
};

/// b-file client with a write-through disk cache.
///
/// Lookup order is cache, fixtures, then `GET {base_url}/bNNNNNN.txt` unless
/// offline. Network bodies are parsed before they are cached, and cache writes
/// go through a temporary file plus rename under a per-identifier lock.
class Client {
 public:
  explicit Client(ClientOptions options);

  /// Throws std::invalid_argument (bad id, before any I/O), ParseError, or
  /// EnvironmentError (offline or network failure with a cold cache).
  FetchResult fetch(std::string_view id) const;

  const ClientOptions& options() const noexcept { return options_; }

 private:
  std::optional<FetchResult> from_disk(const std::string& id) const;
  void store(const std::string& id, const std::string& body) const;

  ClientOptions options_;
};

struct MatchOptions {
  int shift_lo = -2;
  int shift_hi = 2;
  std::vector<Rational> scalars{Rational(1), Rational(3)};
  std::size_t min_length = 50;
};

/// One (candidate, shift, scalar) comparison. Shift s compares the local term
/// at index n with scalar * candidate(n - s) over every index both sides have.
struct MatchResult {
  std::string id;
  int shift = 0;
  Rational scalar{1};
  std::size_t matched_length = 0;
  bool pass = false;

  friend bool operator==(const MatchResult&, const MatchResult&) = default;
};

/// All passing (shift, scalar) combinations of one candidate, in shift-major order.
std::vector<MatchResult> match_entry(const IndexedTerms& local, const Entry& candidate, const MatchOptions& options);

struct MatchReport {
  std::vector<MatchResult> passes;
  std::vector<std::string> notes;  // candidates that were skipped, with reasons
};

/// Fetches each candidate and collects every pass; unavailable candidates become notes.
MatchReport match_sequence(const IndexedTerms& local, const std::vector<std::string>& candidates,
                           const Client& client, const MatchOptions& options);

}  // namespace galileo::oeis
