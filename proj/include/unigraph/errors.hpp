#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace unigraph {

/// A vertex index outside 0..n-1 of its host graph.
class InvalidVertex : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// contract_module called on a set that some outside vertex splits.
class NotAModule : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed graph6 text. offset is the 0-based byte position of the fault.
class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Malformed degree-sequence text. column is 1-based.
class SequenceParseError : public std::runtime_error {
 public:
  SequenceParseError(const std::string& what, std::size_t column)
      : std::runtime_error(what + " (column " + std::to_string(column) + ")"),
        column_(column) {}
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

/// Negative terms, non-graphic sequences where a graphic one is required.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A brute-force routine was asked to run beyond its hard vertex cap.
class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Two independent recognition routes gave different answers.
class RouteDisagreement : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class UnknownProperty : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace unigraph
