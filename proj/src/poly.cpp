#include "spg/poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "spg/error.hpp"
#include "spg/group.hpp"

namespace spg {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPolynomial IntPolynomial::monomial(std::size_t degree, BigInt coeff) {
  std::vector<BigInt> c(degree + 1);
  c[degree] = std::move(coeff);
  return IntPolynomial(std::move(c));
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

const BigInt& IntPolynomial::leading() const {
  if (coeffs_.empty()) throw Error(Errc::InvalidArgument, "zero polynomial has no leading coefficient");
  return coeffs_.back();
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const BigInt& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    const bool neg = sgn(c) < 0;
    const BigInt mag = abs(c);
    if (s.empty()) {
      if (neg) s += '-';
    } else {
      s += neg ? " - " : " + ";
    }
    if (mag != 1 || i == 0) s += mag.get_str();
    if (i >= 1) s += 'x';
    if (i >= 2) s += '^' + std::to_string(i);
  }
  return s;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
  return IntPolynomial(std::move(c));
}

IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<BigInt> c(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j)
      mpz_addmul(c[i + j].get_mpz_t(), x[i].get_mpz_t(), y[j].get_mpz_t());
  return IntPolynomial(std::move(c));
}

Rational poly_eval(const IntPolynomial& p, const Rational& x) {
  Rational acc = 0;
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + Rational(c[i]);
  acc.canonicalize();
  return acc;
}

IntPolynomial binom_power(std::size_t k) {
  std::vector<BigInt> row(k + 1);
  row[0] = 1;
  for (std::size_t i = 1; i <= k; ++i)
    for (std::size_t j = i; j >= 1; --j) row[j] += row[j - 1];
  return IntPolynomial(std::move(row));
}

ExactQuotient poly_div_exact(const IntPolynomial& num, const IntPolynomial& den) {
  if (den.is_zero()) throw Error(Errc::DivisionByZero, "division by the zero polynomial");
  if (num.degree() < den.degree()) return {IntPolynomial{}, num.is_zero()};

  std::vector<Rational> rem(num.coeffs().begin(), num.coeffs().end());
  const auto dd = std::size_t(den.degree());
  const Rational lead(den.leading());
  std::vector<Rational> q(rem.size() - dd);
  for (std::size_t i = q.size(); i-- > 0;) {
    Rational factor = rem[i + dd] / lead;
    q[i] = factor;
    if (sgn(factor) == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) rem[i + j] -= factor * Rational(den.coeffs()[j]);
  }
  bool exact = std::all_of(rem.begin(), rem.end(), [](const Rational& r) { return sgn(r) == 0; });
  std::vector<BigInt> qi;
  qi.reserve(q.size());
  for (auto& c : q) {
    c.canonicalize();
    if (c.get_den() != 1) exact = false;
    qi.push_back(c.get_num());
  }
  if (!exact) return {IntPolynomial{}, false};
  return {IntPolynomial(std::move(qi)), true};
}

nlohmann::json to_json(const IntPolynomial& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.get_str());
  return arr;
}

IntPolynomial poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw Error(Errc::ParseError, "polynomial must be a JSON array");
  std::vector<BigInt> c;
  for (const auto& v : j) {
    if (!v.is_string()) throw Error(Errc::ParseError, "coefficients must be decimal strings");
    BigInt b;
    if (b.set_str(v.get<std::string>(), 10) != 0)
      throw Error(Errc::ParseError, "bad coefficient '" + v.get<std::string>() + "'");
    c.push_back(std::move(b));
  }
  return IntPolynomial(std::move(c));
}

namespace {

// Row i of a matrix as base_i * (1,...,1) + sum of sparse corrections.
struct RowSplit {
  BigInt base;
  std::vector<std::pair<std::size_t, BigInt>> residual;
};

std::vector<RowSplit> split_rows(const IntMatrix& a) {
  const std::size_t n = a.size();
  std::vector<RowSplit> rows(n);
  std::vector<BigInt> sorted(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) sorted[j] = a(i, j);
    std::sort(sorted.begin(), sorted.end());
    std::size_t best = 0, best_len = 0;
    for (std::size_t s = 0; s < n;) {
      std::size_t e = s;
      while (e < n && sorted[e] == sorted[s]) ++e;
      if (e - s > best_len) {
        best_len = e - s;
        best = s;
      }
      s = e;
    }
    rows[i].base = sorted[best];
    for (std::size_t j = 0; j < n; ++j)
      if (a(i, j) != rows[i].base) rows[i].residual.emplace_back(j, a(i, j) - rows[i].base);
  }
  return rows;
}

void multiply_split(const std::vector<RowSplit>& rows, const IntMatrix& m, IntMatrix& out,
                    std::vector<BigInt>& colsum) {
  const std::size_t n = m.size();
  for (std::size_t j = 0; j < n; ++j) {
    colsum[j] = 0;
    for (std::size_t l = 0; l < n; ++l) colsum[j] += m(l, j);
  }
  for (std::size_t i = 0; i < n; ++i) {
    const RowSplit& row = rows[i];
    for (std::size_t j = 0; j < n; ++j)
      mpz_mul(out(i, j).get_mpz_t(), row.base.get_mpz_t(), colsum[j].get_mpz_t());
    for (const auto& [l, delta] : row.residual) {
      if (delta.fits_slong_p()) {
        const long d = delta.get_si();
        for (std::size_t j = 0; j < n; ++j) {
          if (d > 0)
            mpz_addmul_ui(out(i, j).get_mpz_t(), m(l, j).get_mpz_t(), static_cast<unsigned long>(d));
          else
            mpz_submul_ui(out(i, j).get_mpz_t(), m(l, j).get_mpz_t(), static_cast<unsigned long>(-d));
        }
      } else {
        for (std::size_t j = 0; j < n; ++j)
          mpz_addmul(out(i, j).get_mpz_t(), delta.get_mpz_t(), m(l, j).get_mpz_t());
      }
    }
  }
}

}  // namespace

IntPolynomial charpoly(const IntMatrix& a) {
  const std::size_t n = a.size();
  std::vector<BigInt> c(n + 1);
  c[n] = 1;
  if (n == 0) return IntPolynomial(std::move(c));

  const auto rows = split_rows(a);
  std::vector<BigInt> colsum(n);
  IntMatrix m = IntMatrix::identity(n);  // M_1
  IntMatrix p(n);
  BigInt tr;
  for (std::size_t k = 1; k <= n; ++k) {
    multiply_split(rows, m, p, colsum);  // A M_k
    tr = p.trace();
    if (!mpz_divisible_ui_p(tr.get_mpz_t(), k))
      throw std::logic_error("charpoly: trace not divisible by step " + std::to_string(k));
    mpz_divexact_ui(c[n - k].get_mpz_t(), tr.get_mpz_t(), k);
    c[n - k] = -c[n - k];
    if (k < n) {
      std::swap(m, p);
      for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k];
    }
  }
  // Cayley-Hamilton: A M_n + c_0 I must vanish.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const BigInt expect = i == j ? BigInt(-c[0]) : BigInt(0);
      if (p(i, j) != expect) throw std::logic_error("charpoly: Cayley-Hamilton residual is nonzero");
    }
  return IntPolynomial(std::move(c));
}

BigInt bareiss_determinant(IntMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m(k, k)) == 0) {
      std::size_t r = k + 1;
      while (r < n && sgn(m(r, k)) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(r, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

IntPolynomial distance_cubic(std::uint64_t n) {
  const BigInt nn(static_cast<unsigned long>(n));
  const BigInt t(static_cast<unsigned long>(totient(n)));
  return IntPolynomial({BigInt(-t * t - t * (4 - nn) - nn + 1), BigInt(3 - 2 * nn - 3 * t),
                        BigInt(3 - nn), BigInt(1)});
}

IntPolynomial adjacency_cubic(std::uint64_t n) {
  const BigInt nn(static_cast<unsigned long>(n));
  const BigInt t(static_cast<unsigned long>(totient(n)));
  return IntPolynomial({BigInt((nn - t - 1) * (t - 1)), BigInt(3 - 2 * nn + t), BigInt(3 - nn),
                        BigInt(1)});
}

IntPolynomial distance_charpoly_closed(std::uint64_t n) {
  if (!is_composite(n))
    throw Error(Errc::PrimeOrTrivialN,
                "distance formula needs a composite n, got " + std::to_string(n));
  return poly_mul(binom_power(n - 3), distance_cubic(n));
}

IntPolynomial adjacency_charpoly_closed(std::uint64_t n) {
  if (n < 2)
    throw Error(Errc::UnsupportedN,
                "adjacency formula does not hold for n = " + std::to_string(n));
  if (n == 2) {
    auto [q, exact] = poly_div_exact(adjacency_cubic(2), binom_power(1));
    if (!exact) throw Error(Errc::InexactDivision, "adjacency cubic for n = 2 is not divisible by x+1");
    return q;
  }
  return poly_mul(binom_power(n - 3), adjacency_cubic(n));
}

IntPolynomial prime_adjacency_charpoly_closed(std::uint64_t p) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  const IntPolynomial x{0, 1};
  const IntPolynomial shifted{2 - long(p), 1};
  return poly_mul(poly_mul(x, binom_power(p - 2)), shifted);
}

IntPolynomial complete_graph_poly(std::uint64_t n) {
  if (n == 0) return IntPolynomial{1};
  return poly_mul(IntPolynomial{1 - long(n), 1}, binom_power(n - 1));
}

}  // namespace spg
