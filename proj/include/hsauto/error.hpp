#ifndef HSAUTO_ERROR_HPP
#define HSAUTO_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hsauto {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class AlphabetMismatch : public Error {
 public:
  using Error::Error;
};

/// The folded subgroup graph is missing an edge, so the subgroup has
/// infinite index. `state` and `letter` name the first missing edge found.
class InfiniteIndex : public Error {
 public:
  InfiniteIndex(const std::string& what, std::size_t state, std::size_t letter, bool outgoing)
      : Error(what), state(state), letter(letter), outgoing(outgoing) {}

  std::size_t state;
  std::size_t letter;
  bool outgoing;
};

/// An action table that is not a transitive family of permutations.
class InvalidGraph : public Error {
 public:
  using Error::Error;
};

class EmptyGenerators : public Error {
 public:
  using Error::Error;
};

class NotIrreducible : public Error {
 public:
  using Error::Error;
};

class ZeroConstantTerm : public Error {
 public:
  using Error::Error;
};

class PeriodAbsent : public Error {
 public:
  using Error::Error;
};

class InvalidPartition : public Error {
 public:
  using Error::Error;
};

class BoundExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace hsauto

#endif  // HSAUTO_ERROR_HPP
