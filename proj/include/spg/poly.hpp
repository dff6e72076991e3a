#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <nlohmann/json.hpp>

#include "spg/matrix.hpp"

namespace spg {

using Rational = mpq_class;

/// Dense univariate polynomial over the integers, ascending degree.
/// Trailing zero coefficients are always stripped; the zero polynomial has
/// no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial monomial(std::size_t degree, BigInt coeff = 1);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return long(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  /// Coefficient of x^k; zero beyond the degree.
  BigInt coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }
  const BigInt& leading() const;

  /// Human-readable form, e.g. "x^4 - 12x^2 - 18x - 7".
  std::string to_string() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b);
inline IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) { return poly_mul(a, b); }

Rational poly_eval(const IntPolynomial& p, const Rational& x);

/// (x+1)^k from a Pascal row.
IntPolynomial binom_power(std::size_t k);

struct ExactQuotient {
  IntPolynomial quotient;  // meaningful only when exact
  bool exact;
};

/// Long division over the rationals. exact is true iff the remainder is zero
/// and every quotient coefficient is an integer. Throws Error(DivisionByZero).
ExactQuotient poly_div_exact(const IntPolynomial& num, const IntPolynomial& den);

/// JSON array of decimal coefficient strings, ascending degree.
nlohmann::json to_json(const IntPolynomial& p);
IntPolynomial poly_from_json(const nlohmann::json& j);

/// det(xI - m) by the Faddeev-LeVerrier recurrence over exact integers.
///
/// Every division by the step index is checked for exactness and the final
/// Cayley-Hamilton residual is checked to vanish; either failure throws
/// std::logic_error since it can only come from an arithmetic bug.
///
/// The matrix product inside the recurrence splits each row of m into its
/// most frequent value times the all-ones row plus a sparse residual, which
/// makes near-complete graph matrices cost O(n^2) per step.
IntPolynomial charpoly(const IntMatrix& m);

/// Fraction-free Gaussian elimination (Bareiss) with row pivoting.
BigInt bareiss_determinant(IntMatrix m);

/// Cubic factor of the distance characteristic polynomial of P_s(Z_n):
/// x^3 + (3-n)x^2 + (3-2n-3t)x - t^2 - t(4-n) - n + 1 with t = totient(n).
IntPolynomial distance_cubic(std::uint64_t n);

/// Cubic factor of the adjacency characteristic polynomial of P_s(Z_n):
/// x^3 + (3-n)x^2 + (3-2n+t)x + (n-t-1)(t-1).
IntPolynomial adjacency_cubic(std::uint64_t n);

/// (x+1)^(n-3) * distance_cubic(n), expanded. Throws Error(PrimeOrTrivialN)
/// unless n is composite.
IntPolynomial distance_charpoly_closed(std::uint64_t n);

/// (x+1)^(n-3) * adjacency_cubic(n), expanded. For n = 2 the cubic is divided
/// by x+1 (Error(InexactDivision) if that leaves a remainder). n = 1 throws
/// Error(UnsupportedN): the formula does not describe the one-vertex graph.
IntPolynomial adjacency_charpoly_closed(std::uint64_t n);

/// x (x+1)^(p-2) (x+2-p). Throws Error(NotPrime).
IntPolynomial prime_adjacency_charpoly_closed(std::uint64_t p);

/// (x-(n-1)) (x+1)^(n-1): characteristic polynomial of K_n's adjacency and
/// distance matrices.
IntPolynomial complete_graph_poly(std::uint64_t n);

}  // namespace spg
