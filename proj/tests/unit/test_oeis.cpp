#include <doctest.h>

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>
#include <unistd.h>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "galileo/generators.hpp"
#include "galileo/oeis.hpp"

using namespace galileo;
using namespace galileo::oeis;
namespace fs = std::filesystem;

namespace {

const fs::path fixtures = GALILEO_FIXTURE_DIR;

// A fresh, empty cache directory removed on scope exit.
struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& tag) {
    path = fs::temp_directory_path() / ("galileo-test-" + tag + "-" + std::to_string(::getpid()));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

ClientOptions offline_with_fixtures(const fs::path& cache) {
  ClientOptions options;
  options.cache_dir = cache;
  options.fixture_dirs = {fixtures};
  options.offline = true;
  return options;
}

IndexedTerms indexed(const SequencePrefix& p, std::int64_t from = 1) {
  IndexedTerms t{from, {}};
  t.values.assign(p.terms().begin() + (from - 1), p.terms().end());
  return t;
}

}  // namespace

TEST_SUITE("oeis") {
  TEST_CASE("identifier syntax") {
    CHECK(normalize_id("A053644") == "A053644");
    CHECK(bfile_name("A000012") == "b000012.txt");
    for (const char* bad : {"X123", "A12345", "A1234567", "a053644", "A05364x", ""}) {
      CHECK_THROWS_AS(normalize_id(bad), std::invalid_argument);
    }
    TempDir cache("syntax");
    ClientOptions options;
    options.cache_dir = cache.path;
    options.base_url = "http://127.0.0.1:1";  // never contacted
    CHECK_THROWS_AS(Client(options).fetch("X123"), std::invalid_argument);
  }

  TEST_CASE("b-file parsing") {
    std::istringstream in("# comment\n1 1\n2 3\n3 5\n");
    const auto entry = parse_bfile(in, "A005408");
    CHECK(entry.offset == 1);
    CHECK(entry.terms.size() == 3);
    CHECK(entry.terms[2] == 5);

    auto error_line = [](const std::string& text) -> std::size_t {
      std::istringstream bad(text);
      try {
        (void)parse_bfile(bad, "A000001");
      } catch (const ParseError& e) {
        return e.line();
      }
      return 0;
    };
    CHECK(error_line("0 1\n1 1/2\n") == 2);
    CHECK(error_line("# c\n0 1\n\n2 1\n") == 4);
    CHECK(error_line("# only comments\n") == 1);
    std::istringstream big("0 123456789012345678901234567890\n");
    CHECK(parse_bfile(big, "A000001").terms[0] == Integer("123456789012345678901234567890"));
  }

  TEST_CASE("fixtures and offline mode") {
    TempDir cache("offline");
    const Client client(offline_with_fixtures(cache.path));
    const auto odd = client.fetch("A005408");
    CHECK(odd.source == Source::fixture);
    CHECK(odd.entry.offset == 0);
    for (std::size_t i = 0; i < 10; ++i) CHECK(odd.entry.terms[i] == 2 * static_cast<long>(i) + 1);
    const auto ones = client.fetch("A000012");
    for (const auto& t : ones.entry.terms) CHECK(t == 1);
    CHECK_THROWS_AS(client.fetch("A999999"), EnvironmentError);
  }

  TEST_CASE("network fetch writes through the cache") {
    httplib::Server server;
    std::atomic<int> hits{0};
    server.Get("/b000045.txt", [&](const httplib::Request&, httplib::Response& res) {
      ++hits;
      res.set_content("# Fibonacci\n0 0\n1 1\n2 1\n3 2\n4 3\n5 5\n", "text/plain");
    });
    server.Get("/b000046.txt", [&](const httplib::Request&, httplib::Response& res) {
      res.set_content("0 1\n1 x\n", "text/plain");
    });
    const int port = server.bind_to_any_port("127.0.0.1");
    REQUIRE(port > 0);
    std::thread worker([&] { server.listen_after_bind(); });
    server.wait_until_ready();

    TempDir cache("network");
    ClientOptions options;
    options.cache_dir = cache.path;
    options.base_url = "http://127.0.0.1:" + std::to_string(port);
    const Client client(options);

    const auto first = client.fetch("A000045");
    CHECK(first.source == Source::network);
    CHECK(first.entry.terms.size() == 6);
    CHECK(fs::exists(cache.path / "b000045.txt"));
    const auto second = client.fetch("A000045");
    CHECK(second.source == Source::cache);
    CHECK(second.entry == first.entry);
    CHECK(hits == 1);

    CHECK_THROWS_AS(client.fetch("A000046"), ParseError);
    CHECK_FALSE(fs::exists(cache.path / "b000046.txt"));
    CHECK_THROWS_AS(client.fetch("A000047"), EnvironmentError);  // 404

    // Offline clients see what the online one cached.
    ClientOptions offline = options;
    offline.offline = true;
    CHECK(Client(offline).fetch("A000045").entry == first.entry);

    // Concurrent fetchers of one id all agree.
    TempDir fresh("concurrent");
    options.cache_dir = fresh.path;
    const Client shared(options);
    std::vector<std::thread> threads;
    std::vector<Entry> results(8);
    for (std::size_t i = 0; i < results.size(); ++i) {
      threads.emplace_back([&, i] { results[i] = shared.fetch("A000045").entry; });
    }
    for (auto& t : threads) t.join();
    for (const auto& r : results) CHECK(r == first.entry);

    server.stop();
    worker.join();

    ClientOptions dead = options;
    dead.cache_dir = cache.path / "cold";
    dead.timeout_seconds = 2;
    CHECK_THROWS_AS(Client(dead).fetch("A000045"), EnvironmentError);
  }

  TEST_CASE("cache hits are identical to parsing") {
    TempDir cache("determinism");
    fs::copy_file(fixtures / "b048883.txt", cache.path / "b048883.txt");
    ClientOptions options = offline_with_fixtures(cache.path);
    const auto hit = Client(options).fetch("A048883");
    CHECK(hit.source == Source::cache);
    std::ifstream raw(fixtures / "b048883.txt");
    CHECK(hit.entry == parse_bfile(raw, "A048883"));
    CHECK(Client(options).fetch("A048883").entry == hit.entry);
  }

  TEST_CASE("shift polarity is pinned by the first worked example") {
    TempDir cache("pin");
    const Client client(offline_with_fixtures(cache.path));
    const auto entry = client.fetch("A053644").entry;
    const auto seq = closed_equal_children(200);
    MatchOptions options;
    const auto passes = match_entry(indexed(seq, 2), entry, options);
    REQUIRE(passes.size() == 1);
    CHECK(passes[0].shift == 1);
    CHECK(passes[0].scalar == 3);
    CHECK(passes[0].matched_length == 199);
    // a_1 = 1 is the root, not 3 * A053644(0) = 0
    CHECK(match_entry(indexed(seq), entry, options).empty());
  }

  TEST_CASE("matching is symmetric under a common shift") {
    TempDir cache("symmetry");
    const Client client(offline_with_fixtures(cache.path));
    const auto entry = client.fetch("A048883").entry;
    const auto local = indexed(closed_unequal_children(300));
    const auto base = match_entry(local, entry, {});
    REQUIRE(base.size() == 1);
    CHECK(base[0].shift == 1);
    for (std::int64_t t : {-5, 3, 17}) {
      IndexedTerms moved = local;
      moved.first_index += t;
      Entry shifted = entry;
      shifted.offset += t;
      CHECK(match_entry(moved, shifted, {}) == base);
    }
  }

  TEST_CASE("matching rules") {
    TempDir cache("rules");
    const Client client(offline_with_fixtures(cache.path));
    const auto odd = client.fetch("A005408").entry;
    MatchOptions options;
    CHECK_THROWS_AS(match_entry(indexed(poly_family({Rational(1), 2}, 51)), odd, options), std::invalid_argument);
    const auto passes = match_entry(indexed(poly_family({Rational(1), 2}, 52)), odd, options);
    REQUIRE(passes.size() == 1);
    CHECK(passes[0].shift == 1);
    CHECK(passes[0].matched_length == 52);

    options.min_length = 60;
    CHECK(match_entry(indexed(poly_family({Rational(1), 2}, 62)), odd, options).size() == 1);
    options.scalars = {Rational(1, 3)};
    CHECK(match_entry(indexed(poly_family({Rational(1, 3), 2}, 62)), odd, options).size() == 1);

    // Unavailable candidates become notes, not failures.
    const auto report = match_sequence(indexed(poly_family({Rational(1), 2}, 100)), {"A005408", "A999999"}, client, {});
    CHECK(report.passes.size() == 1);
    REQUIRE(report.notes.size() == 1);
    CHECK(report.notes[0].rfind("A999999", 0) == 0);
  }

  TEST_CASE("default cache directory honours the environment") {
    ::setenv("GALILEO_CACHE_DIR", "/tmp/galileo-env-cache", 1);
    CHECK(default_cache_dir() == fs::path("/tmp/galileo-env-cache"));
    ::unsetenv("GALILEO_CACHE_DIR");
    CHECK(default_cache_dir() != fs::path("/tmp/galileo-env-cache"));
  }
}
