#pragma once

#include <stdexcept>
#include <string>

namespace pointfree {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Relation table failed a poset law; carries the first violating triple.
struct PosetValidationError : Error {
  enum class Kind { NotReflexive, NotAntisymmetric, NotTransitive };
  Kind kind;
  int i = -1, j = -1, k = -1;
  PosetValidationError(Kind kind_, int i_, int j_, int k_, const std::string& what)
      : Error(what), kind(kind_), i(i_), j(j_), k(k_) {}
};

struct TooLargeError : Error {
  using Error::Error;
};

struct NotABaseError : Error {
  int element = -1;
  NotABaseError(int element_, const std::string& what) : Error(what), element(element_) {}
};

struct NotNonArchError : Error {
  using Error::Error;
};

struct NotNucleusError : Error {
  using Error::Error;
};

struct NotPrenucleusError : Error {
  using Error::Error;
};

// A non-atomic basic with no proper decomposition inside the base (surfaced,
// never silently accepted).
struct NoNontrivialDecompositionError : Error {
  int element = -1;
  NoNontrivialDecompositionError(int element_, const std::string& what)
      : Error(what), element(element_) {}
};

struct NotOpenError : Error {
  using Error::Error;
};

struct NotMaximalChainError : Error {
  using Error::Error;
};

struct PrimeMismatchError : Error {
  using Error::Error;
};

struct NotRepresentableError : Error {
  using Error::Error;
};

struct ParseError : Error {
  std::string path;
  ParseError(const std::string& path_, const std::string& what) : Error(what), path(path_) {}
};

// Bug sentinel: two independent routes to the same value disagreed.
struct CrossCheckMismatch : Error {
  using Error::Error;
};

}  // namespace pointfree
