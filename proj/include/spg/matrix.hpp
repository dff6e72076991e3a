#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace spg {

using BigInt = mpz_class;

/// Dense square matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), data_(n * n) {}

  static IntMatrix identity(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

  bool is_symmetric() const;
  BigInt trace() const;

  /// P M P^T where perm[i] is the old index placed at new position i.
  IntMatrix permuted(std::span<const std::size_t> perm) const;

  /// Comma-separated rows, one line per row.
  std::string to_csv() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<BigInt> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// Dense square matrix of doubles, row-major.
struct RealMatrix {
  std::size_t n = 0;
  std::vector<double> data;

  explicit RealMatrix(std::size_t size = 0) : n(size), data(size * size, 0.0) {}
  double& operator()(std::size_t r, std::size_t c) { return data[r * n + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data[r * n + c]; }
};

RealMatrix to_real(const IntMatrix& m);

}  // namespace spg
