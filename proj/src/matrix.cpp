#include "spg/matrix.hpp"

#include "spg/error.hpp"

namespace spg {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool IntMatrix::is_symmetric() const {
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = r + 1; c < n_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

BigInt IntMatrix::trace() const {
  BigInt t = 0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

IntMatrix IntMatrix::permuted(std::span<const std::size_t> perm) const {
  if (perm.size() != n_)
    throw Error(Errc::InvalidArgument, "permutation size does not match matrix");
  std::vector<bool> used(n_, false);
  for (auto p : perm) {
    if (p >= n_ || used[p]) throw Error(Errc::InvalidArgument, "not a permutation");
    used[p] = true;
  }
  IntMatrix out(n_);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) out(r, c) = (*this)(perm[r], perm[c]);
  return out;
}

std::string IntMatrix::to_csv() const {
  std::string s;
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t c = 0; c < n_; ++c) {
      if (c) s += ',';
      s += (*this)(r, c).get_str();
    }
    s += '\n';
  }
  return s;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw Error(Errc::InvalidArgument, "matrix dimensions differ");
  IntMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const BigInt& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) mpz_addmul(out(i, j).get_mpz_t(), aik.get_mpz_t(), b(k, j).get_mpz_t());
    }
  return out;
}

RealMatrix to_real(const IntMatrix& m) {
  RealMatrix out(m.size());
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m.size(); ++c) out(r, c) = m(r, c).get_d();
  return out;
}

}  // namespace spg
