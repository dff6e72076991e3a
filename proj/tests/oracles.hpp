#pragma once

// Brute-force reference computations used only by the tests. None of these
// call into the code paths they are used to check.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include <gmpxx.h>
#include <nlohmann/json.hpp>

#include "spg/matrix.hpp"
#include "spg/poly.hpp"

namespace spg::oracle {

inline std::uint64_t totient_by_gcd(std::uint64_t n) {
  std::uint64_t c = 0;
  for (std::uint64_t k = 1; k <= n; ++k) c += std::gcd(k, n) == 1;
  return c;
}

/// Edges of P_s(Z_n) by trying every exponent pair (n1, n2) in [1, n-1]^2.
inline std::set<std::pair<std::size_t, std::size_t>> cyclic_spg_edges(std::size_t n) {
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      bool adj = false;
      for (std::size_t a = 1; a < n && !adj; ++a)
        for (std::size_t b = 1; b < n && !adj; ++b) adj = (x * a) % n == (y * b) % n;
      if (adj) edges.emplace(x, y);
    }
  return edges;
}

/// Newton iteration on a monic cubic, starting from x0.
inline double newton_cubic(double a2, double a1, double a0, double x0) {
  double x = x0;
  for (int i = 0; i < 200; ++i) {
    const double f = ((x + a2) * x + a1) * x + a0;
    const double df = (3 * x + 2 * a2) * x + a1;
    const double step = f / df;
    x -= step;
    if (std::abs(step) < 1e-15 * std::max(1.0, std::abs(x))) break;
  }
  return x;
}

/// Quaternion group as a Cayley table. Elements are (sign, unit) with unit in
/// {1, i, j, k}; index = 4*sign + unit, so index 0 is +1.
inline nlohmann::json q8_document() {
  // unit products: table[u][v] = (sign flip, unit)
  const std::array<std::array<std::pair<int, int>, 4>, 4> mul{{
      {{{0, 0}, {0, 1}, {0, 2}, {0, 3}}},
      {{{0, 1}, {1, 0}, {0, 3}, {1, 2}}},
      {{{0, 2}, {1, 3}, {1, 0}, {0, 1}}},
      {{{0, 3}, {0, 2}, {1, 1}, {1, 0}}},
  }};
  const char* names[] = {"1", "i", "j", "k"};
  nlohmann::json table = nlohmann::json::array();
  std::vector<std::string> labels;
  for (int a = 0; a < 8; ++a) {
    nlohmann::json row = nlohmann::json::array();
    for (int b = 0; b < 8; ++b) {
      const auto [flip, unit] = mul[a % 4][b % 4];
      const int sign = (a / 4 + b / 4 + flip) % 2;
      row.push_back(4 * sign + unit);
    }
    table.push_back(row);
    labels.push_back(std::string(a / 4 ? "-" : "") + names[a % 4]);
  }
  return {{"order", 8}, {"table", table}, {"labels", labels}};
}

/// S3 as permutations of {0,1,2} in lexicographic order (identity first).
/// Composition (p*q)(x) = p(q(x)).
inline nlohmann::json s3_document() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  nlohmann::json table = nlohmann::json::array();
  for (const auto& a : perms) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& b : perms) {
      const std::array<int, 3> c{a[b[0]], a[b[1]], a[b[2]]};
      row.push_back(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
    table.push_back(row);
  }
  return {{"order", 6}, {"table", table}};
}

/// det(xI - m) recovered by evaluating determinants at x = 0..n with Bareiss
/// and Lagrange-interpolating over the rationals.
inline IntPolynomial charpoly_by_interpolation(const IntMatrix& m) {
  const std::size_t n = m.size();
  std::vector<mpq_class> values(n + 1);
  for (std::size_t x = 0; x <= n; ++x) {
    IntMatrix shifted(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) shifted(r, c) = (r == c ? BigInt(long(x)) : BigInt(0)) - m(r, c);
    values[x] = mpq_class(bareiss_determinant(shifted));
  }
  std::vector<mpq_class> coeffs(n + 1, 0);
  for (std::size_t i = 0; i <= n; ++i) {
    // basis polynomial prod_{j != i} (x - j) / (i - j)
    std::vector<mpq_class> basis{1};
    mpq_class denom = 1;
    for (std::size_t j = 0; j <= n; ++j) {
      if (j == i) continue;
      std::vector<mpq_class> next(basis.size() + 1, 0);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= basis[k] * long(j);
      }
      basis = std::move(next);
      denom *= long(i) - long(j);
    }
    for (std::size_t k = 0; k < basis.size(); ++k) coeffs[k] += values[i] * basis[k] / denom;
  }
  std::vector<BigInt> out;
  for (auto& c : coeffs) {
    c.canonicalize();
    out.push_back(c.get_num());
  }
  return IntPolynomial(std::move(out));
}

}  // namespace spg::oracle
