#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace spg {

enum class Errc {
  IndexOutOfRange,
  InvalidArgument,
  CayleyShape,
  CayleyNotLatin,
  CayleyNoIdentity,
  CayleyNoInverse,
  CayleyNotAssociative,
  DisconnectedGraph,
  PrimeOrTrivialN,
  UnsupportedN,
  InexactDivision,
  DivisionByZero,
  NotPrime,
  NotComposite,
  PrimeOrder,
  ComplexRoots,
  NonSymmetric,
  NoConvergence,
  CountMismatch,
  ParseError,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Cayley-table validation failure; row/col point at the offending entry
// (or -1 when the failure is not tied to one cell).
class CayleyError : public Error {
 public:
  CayleyError(Errc code, const std::string& what, long row = -1, long col = -1)
      : Error(code, what), row_(row), col_(col) {}
  long row() const noexcept { return row_; }
  long col() const noexcept { return col_; }

 private:
  long row_;
  long col_;
};

class DisconnectedGraph : public Error {
 public:
  explicit DisconnectedGraph(std::vector<std::vector<std::size_t>> components);
  const std::vector<std::vector<std::size_t>>& components() const noexcept {
    return components_;
  }

 private:
  std::vector<std::vector<std::size_t>> components_;
};

}  // namespace spg
