#include "galileo/oeis.hpp"

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace galileo::oeis {

std::string normalize_id(std::string_view id) {
  bool ok = id.size() == 7 && id[0] == 'A';
  for (std::size_t i = 1; ok && i < id.size(); ++i) ok = std::isdigit(static_cast<unsigned char>(id[i])) != 0;
  if (!ok) throw std::invalid_argument("invalid OEIS identifier '" + std::string(id) + "' (expected A + 6 digits)");
  return std::string(id);
}

std::string bfile_name(std::string_view id) { return "b" + normalize_id(id).substr(1) + ".txt"; }

IndexedTerms Entry::as_indexed() const {
  IndexedTerms out{offset, {}};
  out.values.reserve(terms.size());
  for (const auto& t : terms) out.values.emplace_back(t);
  return out;
}

Entry parse_bfile(std::istream& in, std::string_view id) {
  Entry entry{normalize_id(id), 0, {}};
  // Re-scan per line so non-integer values report their own line number.
  std::string line;
  std::size_t line_no = 0;
  std::stringstream data;
  std::vector<std::size_t> line_of_row;
  while (std::getline(in, line)) {
    ++line_no;
    data << line << '\n';
    const auto first = line.find_first_not_of(" \t\r");
    if (first != std::string::npos && line[first] != '#') line_of_row.push_back(line_no);
  }
  const IndexedTerms terms = read_indexed_terms(data);
  if (terms.values.empty()) throw ParseError(line_no, "b-file for " + entry.id + " has no terms");
  entry.offset = terms.first_index;
  entry.terms.reserve(terms.values.size());
  for (std::size_t i = 0; i < terms.values.size(); ++i) {
    if (!is_integer(terms.values[i])) throw ParseError(line_of_row[i], "b-file value is not an integer");
    entry.terms.push_back(terms.values[i].get_num());
  }
  return entry;
}

std::filesystem::path default_cache_dir() {
  if (const char* dir = std::getenv("GALILEO_CACHE_DIR"); dir && *dir) return dir;
  if (const char* home = std::getenv("HOME"); home && *home) {
    return std::filesystem::path(home) / ".cache" / "galileo" / "oeis";
  }
  return ".galileo-cache";
}

std::string to_string(Source source) {
  switch (source) {
    case Source::cache: return "cache";
    case Source::fixture: return "fixture";
    case Source::network: return "network";
  }
  return "unknown";
}

namespace {

std::mutex& lock_for(const std::string& id) {
  static std::mutex registry_guard;
  static std::map<std::string, std::mutex> locks;
  std::lock_guard<std::mutex> guard(registry_guard);
  return locks[id];
}

std::optional<Entry> read_file(const std::filesystem::path& path, const std::string& id) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  return parse_bfile(in, id);
}

}  // namespace

Client::Client(ClientOptions options) : options_(std::move(options)) {
  if (options_.cache_dir.empty()) options_.cache_dir = default_cache_dir();
}

std::optional<FetchResult> Client::from_disk(const std::string& id) const {
  const std::string name = bfile_name(id);
  {
    std::lock_guard<std::mutex> guard(lock_for(id));
    if (auto entry = read_file(options_.cache_dir / name, id)) return FetchResult{std::move(*entry), Source::cache};
  }
  for (const auto& dir : options_.fixture_dirs) {
    if (auto entry = read_file(dir / name, id)) return FetchResult{std::move(*entry), Source::fixture};
  }
  return std::nullopt;
}

void Client::store(const std::string& id, const std::string& body) const {
  std::lock_guard<std::mutex> guard(lock_for(id));
  std::error_code ec;
  std::filesystem::create_directories(options_.cache_dir, ec);
  if (ec) throw EnvironmentError("cannot create cache directory " + options_.cache_dir.string() + ": " + ec.message());
  const auto target = options_.cache_dir / bfile_name(id);
  auto temp = target;
  temp += ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    out << body;
    if (!out) throw EnvironmentError("cannot write cache file " + temp.string());
  }
  std::filesystem::rename(temp, target, ec);
  if (ec) throw EnvironmentError("cannot move cache file into place: " + ec.message());
}

FetchResult Client::fetch(std::string_view raw_id) const {
  const std::string id = normalize_id(raw_id);
  if (auto hit = from_disk(id)) return std::move(*hit);
  if (options_.offline) throw EnvironmentError(id + " is not cached and offline mode is on");

  httplib::Client http(options_.base_url);
  http.set_follow_location(true);
  http.set_connection_timeout(options_.timeout_seconds, 0);
  http.set_read_timeout(options_.timeout_seconds, 0);
  const auto response = http.Get("/" + bfile_name(id));
  if (!response) {
    throw EnvironmentError("fetching " + id + " from " + options_.base_url + " failed: " +
                           httplib::to_string(response.error()));
  }
  if (response->status != 200) {
    throw EnvironmentError("fetching " + id + " returned HTTP " + std::to_string(response->status));
  }
  std::istringstream body(response->body);
  Entry entry = parse_bfile(body, id);
  store(id, response->body);
  return {std::move(entry), Source::network};
}

std::vector<MatchResult> match_entry(const IndexedTerms& local, const Entry& candidate, const MatchOptions& options) {
  if (options.shift_lo > options.shift_hi) throw std::invalid_argument("empty shift range");
  const auto max_shift = static_cast<std::size_t>(std::max(std::abs(options.shift_lo), std::abs(options.shift_hi)));
  if (local.values.size() < options.min_length + max_shift) {
    throw std::invalid_argument("need at least " + std::to_string(options.min_length + max_shift) +
                                " local terms to match");
  }
  const IndexedTerms theirs = candidate.as_indexed();
  std::vector<MatchResult> passes;
  for (int shift = options.shift_lo; shift <= options.shift_hi; ++shift) {
    for (const auto& scalar : options.scalars) {
      MatchResult result{candidate.id, shift, scalar, 0, true};
      for (std::int64_t n = local.first_index; n <= local.last_index(); ++n) {
        if (!theirs.contains(n - shift)) continue;
        if (local.at(n) != scalar * theirs.at(n - shift)) {
          result.pass = false;
          break;
        }
        ++result.matched_length;
      }
      result.pass = result.pass && result.matched_length >= options.min_length;
      if (result.pass) passes.push_back(std::move(result));
    }
  }
  return passes;
}

MatchReport match_sequence(const IndexedTerms& local, const std::vector<std::string>& candidates,
                           const Client& client, const MatchOptions& options) {
  MatchReport report;
  for (const auto& id : candidates) {
    FetchResult fetched;
    try {
      fetched = client.fetch(id);
    } catch (const EnvironmentError& e) {
      report.notes.push_back(id + ": skipped, " + e.what());
      continue;
    }
    for (auto& r : match_entry(local, fetched.entry, options)) report.passes.push_back(std::move(r));
  }
  return report;
}

}  // namespace galileo::oeis
