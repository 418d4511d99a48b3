#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace galileo {

using Index = std::uint64_t;

/// A constraint failed at a specific sequence index or tree node.
class NodeError : public std::runtime_error {
 public:
  NodeError(Index node, const std::string& what)
      : std::runtime_error(what + " (index " + std::to_string(node) + ")"), node_(node) {}

  Index node() const noexcept { return node_; }

 private:
  Index node_;
};

/// Malformed text input; line numbers are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Network or cache failure; distinct from a definite mathematical result.
class EnvironmentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace galileo
