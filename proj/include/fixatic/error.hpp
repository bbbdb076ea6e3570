#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fixatic {

/// Malformed textual graph input. `offset()` is the byte (graph6) or line
/// (edge list) where parsing stopped.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at offset " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// An exact search or enumeration was asked to run above its size cap.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Distance-based invariants need a connected graph.
class DisconnectedGraphError : public std::invalid_argument {
 public:
  DisconnectedGraphError() : std::invalid_argument("graph is not connected") {}
};

}  // namespace fixatic
