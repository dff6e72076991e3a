#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

namespace spg {

/// Index of a group element. The identity is always 0.
using Element = std::size_t;

struct Cyclic {
  std::size_t n;
};

/// Elements are mixed-radix tuples; the last factor varies fastest, so for
/// orders [2,3] the tuple (a,b) has index 3a+b.
struct DirectProduct {
  std::vector<std::size_t> orders;
};

/// Order 2m. Indices 0..m-1 are rotations r^i, m..2m-1 are reflections s*r^i,
/// with r^m = s^2 = e and r*s = s*r^-1.
struct Dihedral {
  std::size_t m;
};

struct CayleyTable {
  std::size_t n;
  std::vector<Element> table;  // row-major, table[a*n+b] = a*b
  std::vector<std::string> labels;  // empty or size n
};

/// A finite group given structurally or by multiplication table. Immutable.
class GroupSpec {
 public:
  using Kind = std::variant<Cyclic, DirectProduct, Dihedral, CayleyTable>;

  static GroupSpec cyclic(std::size_t n);
  static GroupSpec direct_product(std::vector<std::size_t> orders);
  static GroupSpec dihedral(std::size_t m);
  /// Validates the table (see load_cayley_table for the error contract).
  /// The identity must already sit at index 0.
  static GroupSpec cayley(std::size_t n, std::vector<Element> table,
                          std::vector<std::string> labels = {});

  std::size_t order() const noexcept { return order_; }
  const Kind& kind() const noexcept { return kind_; }
  std::string describe() const;
  /// Display label for an element: the Cayley label if present, else the index.
  std::string label(Element a) const;

 private:
  GroupSpec(Kind kind, std::size_t order) : kind_(std::move(kind)), order_(order) {}

  Kind kind_;
  std::size_t order_;
};

Element op(const GroupSpec& g, Element a, Element b);
Element inverse(const GroupSpec& g, Element a);

/// a composed with itself k times (k = 0 gives the identity), by repeated squaring.
Element power(const GroupSpec& g, Element a, std::uint64_t k);

/// Smallest k >= 1 with a^k = e, by iteration.
std::size_t element_order(const GroupSpec& g, Element a);

bool is_cyclic(const GroupSpec& g);

/// Full multiplication table as a CayleyTable-backed group.
GroupSpec to_cayley(const GroupSpec& g);

// Number theory helpers.
std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept;
std::uint64_t totient(std::uint64_t n);
bool is_prime(std::uint64_t n) noexcept;
inline bool is_composite(std::uint64_t n) noexcept { return n >= 4 && !is_prime(n); }

/// Parses {"order": n, "table": [[...]], "labels": [...]} and validates the
/// group axioms. A table whose identity is not index 0 is relabeled by
/// swapping the identity with 0.
///
/// Throws CayleyError with code CayleyShape, CayleyNotLatin, CayleyNoIdentity,
/// CayleyNoInverse or CayleyNotAssociative; row/col locate the failure.
GroupSpec load_cayley_table(const nlohmann::json& document);
GroupSpec load_cayley_file(const std::string& path);
nlohmann::json to_cayley_json(const GroupSpec& g);

/// Parses "cyclic:N", "product:A,B[,C...]", "dihedral:M" or "cayley:PATH".
/// Throws Error(ParseError) on malformed input.
GroupSpec parse_group_spec(const std::string& text);

}  // namespace spg
