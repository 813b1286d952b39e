#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace avgdeg {

// Operation called on a session/graph that cannot support it (e.g. vertex
// sampling on an empty graph).
class InvalidState : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Neighbor query on a degree-0 vertex.
class NoNeighborError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exact (exponential) computation refused because n exceeds the guard.
class InstanceTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed edge-list input. line() is 1-based; 0 means "whole file".
class LoadError : public std::runtime_error {
 public:
  LoadError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace avgdeg
