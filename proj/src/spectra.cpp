#include "spg/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "spg/error.hpp"

namespace spg {

const char* to_string(MatrixKind kind) noexcept {
  return kind == MatrixKind::Adjacency ? "adjacency" : "distance";
}

MatrixKind matrix_kind_from_string(const std::string& s) {
  if (s == "adjacency") return MatrixKind::Adjacency;
  if (s == "distance") return MatrixKind::Distance;
  throw Error(Errc::ParseError, "matrix kind must be 'adjacency' or 'distance', got '" + s + "'");
}

const char* to_string(SpectrumSource source) noexcept {
  switch (source) {
    case SpectrumSource::DistanceNoncyclic: return "distance-noncyclic";
    case SpectrumSource::DistanceCyclicComposite: return "distance-cyclic-composite";
    case SpectrumSource::AdjacencyNoncyclic: return "adjacency-noncyclic";
    case SpectrumSource::AdjacencyCyclicPrime: return "adjacency-cyclic-prime";
    case SpectrumSource::AdjacencyCyclicComposite: return "adjacency-cyclic-composite";
  }
  return "unknown";
}

std::vector<double> ClosedFormSpectrum::expanded() const {
  std::vector<double> out;
  out.reserve(n);
  for (const auto& e : entries) out.insert(out.end(), e.multiplicity, e.value);
  return out;
}

std::array<double, 3> CubicRoots::sorted() const {
  auto r = roots;
  std::sort(r.begin(), r.end(), std::greater<>());
  return r;
}

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double checked_acos(double arg) {
  if (!std::isfinite(arg) || std::abs(arg) > 1.0 + kArccosSlack)
    throw Error(Errc::ComplexRoots,
                "arccos argument " + std::to_string(arg) + " is outside [-1, 1]");
  return std::acos(std::clamp(arg, -1.0, 1.0));
}

// (shift + 2 cos((theta + 2 pi k)/3) sqrt(disc)) / 3 for k = 0, +1, -1.
std::array<double, 3> trig_roots(double shift, double disc, double theta) {
  const double r = std::sqrt(disc);
  return {(shift + 2.0 * std::cos(theta / 3.0) * r) / 3.0,
          (shift + 2.0 * std::cos((theta + kTwoPi) / 3.0) * r) / 3.0,
          (shift + 2.0 * std::cos((theta - kTwoPi) / 3.0) * r) / 3.0};
}

ClosedFormSpectrum complete_spectrum(std::uint64_t n, MatrixKind kind, SpectrumSource source) {
  ClosedFormSpectrum s;
  s.n = n;
  s.kind = kind;
  s.source = source;
  s.entries.push_back({double(n) - 1.0, 1});
  if (n > 1) s.entries.push_back({-1.0, n - 1});
  return s;
}

ClosedFormSpectrum cubic_spectrum(std::uint64_t n, MatrixKind kind, SpectrumSource source,
                                  double theta, double disc) {
  ClosedFormSpectrum s;
  s.n = n;
  s.kind = kind;
  s.source = source;
  s.theta = theta;
  for (double r : trig_roots(double(n) - 3.0, disc, theta)) s.entries.push_back({r, 1});
  if (n > 3) s.entries.push_back({-1.0, n - 3});
  std::sort(s.entries.begin(), s.entries.end(),
            [](const Eigenvalue& a, const Eigenvalue& b) { return a.value > b.value; });
  return s;
}

double distance_disc(std::uint64_t n) {
  const double t = double(totient(n));
  return double(n) * double(n) + 9.0 * t;
}

double adjacency_disc(std::uint64_t n) {
  const double t = double(totient(n));
  return double(n) * double(n) - 3.0 * t;
}

}  // namespace

CubicRoots solve_cubic_trig(double a2, double a1, double a0) {
  const double disc = a2 * a2 - 3.0 * a1;
  const double num = -(2.0 * a2 * a2 * a2 - 9.0 * a2 * a1 + 27.0 * a0);
  if (disc <= 0.0) {
    if (disc == 0.0 && num == 0.0) {
      const double r = -a2 / 3.0;
      return {{r, r, r}, 0.0};
    }
    throw Error(Errc::ComplexRoots, "cubic does not have three real roots");
  }
  const double theta = checked_acos(num / (2.0 * std::pow(disc, 1.5)));
  return {trig_roots(-a2, disc, theta), theta};
}

double distance_theta(std::uint64_t n) {
  if (!is_composite(n)) throw Error(Errc::NotComposite, std::to_string(n) + " is not composite");
  const long double nn = n, t = totient(n);
  const long double num = 2 * nn * nn * nn + 27 * t * t + 27 * t;
  const long double disc = nn * nn + 9 * t;
  return checked_acos(double(num / (2 * std::sqrt(disc * disc * disc))));
}

double adjacency_theta(std::uint64_t n) {
  if (!is_composite(n)) throw Error(Errc::NotComposite, std::to_string(n) + " is not composite");
  const long double nn = n, t = totient(n);
  const long double num = 2 * nn * nn * nn + 27 * t * t + 27 * t - 36 * nn * t;
  const long double disc = nn * nn - 3 * t;
  return checked_acos(double(num / (2 * std::sqrt(disc * disc * disc))));
}

ClosedFormSpectrum distance_spectrum_closed(std::uint64_t n, bool cyclic) {
  if (!cyclic) return complete_spectrum(n, MatrixKind::Distance, SpectrumSource::DistanceNoncyclic);
  if (n < 2) throw Error(Errc::UnsupportedN, "distance spectrum of the trivial group is not covered");
  if (is_prime(n))
    throw Error(Errc::PrimeOrder,
                "P_s(Z_" + std::to_string(n) + ") is disconnected: prime order");
  return cubic_spectrum(n, MatrixKind::Distance, SpectrumSource::DistanceCyclicComposite,
                        distance_theta(n), distance_disc(n));
}

ClosedFormSpectrum adjacency_spectrum_closed(std::uint64_t n, bool cyclic) {
  if (!cyclic)
    return complete_spectrum(n, MatrixKind::Adjacency, SpectrumSource::AdjacencyNoncyclic);
  if (n < 2) throw Error(Errc::UnsupportedN, "adjacency spectrum of the trivial group is not covered");
  if (is_prime(n)) {
    ClosedFormSpectrum s;
    s.n = n;
    s.kind = MatrixKind::Adjacency;
    s.source = SpectrumSource::AdjacencyCyclicPrime;
    if (n == 2) {
      s.entries = {{0.0, 2}};
    } else {
      s.entries = {{double(n) - 2.0, 1}, {0.0, 1}, {-1.0, n - 2}};
    }
    return s;
  }
  return cubic_spectrum(n, MatrixKind::Adjacency, SpectrumSource::AdjacencyCyclicComposite,
                        adjacency_theta(n), adjacency_disc(n));
}

ClosedFormSpectrum distance_spectrum_closed(const GroupSpec& g) {
  return distance_spectrum_closed(g.order(), is_cyclic(g));
}

ClosedFormSpectrum adjacency_spectrum_closed(const GroupSpec& g) {
  return adjacency_spectrum_closed(g.order(), is_cyclic(g));
}

double spectral_radius_distance(std::uint64_t n) {
  if (!is_composite(n)) throw Error(Errc::NotComposite, std::to_string(n) + " is not composite");
  return trig_roots(double(n) - 3.0, distance_disc(n), distance_theta(n))[0];
}

double spectral_radius_adjacency(std::uint64_t n) {
  if (!is_composite(n)) throw Error(Errc::NotComposite, std::to_string(n) + " is not composite");
  return trig_roots(double(n) - 3.0, adjacency_disc(n), adjacency_theta(n))[0];
}

std::vector<double> symmetric_eigenvalues(RealMatrix a, double tol) {
  const std::size_t n = a.n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (a(i, j) != a(j, i))
        throw Error(Errc::NonSymmetric, "matrix is not symmetric at (" + std::to_string(i) + "," +
                                            std::to_string(j) + ")");

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * a(i, j) * a(i, j);
    return std::sqrt(s);
  };

  for (int sweep = 0;; ++sweep) {
    if (off_norm() < tol) break;
    if (sweep == kJacobiMaxSweeps)
      throw Error(Errc::NoConvergence,
                  "Jacobi did not converge in " + std::to_string(kJacobiMaxSweeps) + " sweeps");
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double h = (a(q, q) - a(p, p)) / (2.0 * apq);
        double t;
        if (std::abs(h) > 1e150) {
          t = 0.5 / h;
        } else {
          t = (h >= 0.0 ? 1.0 : -1.0) / (std::abs(h) + std::sqrt(h * h + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = a(p, k) = c * akp - s * akq;
          a(k, q) = a(q, k) = s * akp + c * akq;
        }
        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = a(q, p) = 0.0;
      }
  }

  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i);
  std::sort(eig.begin(), eig.end(), std::greater<>());
  return eig;
}

std::vector<Eigenvalue> cluster_eigenvalues(const std::vector<double>& values, double rel_tol) {
  std::vector<Eigenvalue> clusters;
  double sum = 0.0;
  double prev = 0.0;
  for (double v : values) {
    if (!clusters.empty() && std::abs(prev - v) <= rel_tol * std::max(1.0, std::abs(v))) {
      auto& c = clusters.back();
      ++c.multiplicity;
      sum += v;
      c.value = sum / double(c.multiplicity);
    } else {
      clusters.push_back({v, 1});
      sum = v;
    }
    prev = v;
  }
  return clusters;
}

SpectrumComparison compare_spectra(const ClosedFormSpectrum& closed, std::vector<double> numeric,
                                   double tol) {
  const auto expected = closed.expanded();
  if (expected.size() != numeric.size())
    throw Error(Errc::CountMismatch, "closed form has " + std::to_string(expected.size()) +
                                         " eigenvalues, numeric has " +
                                         std::to_string(numeric.size()));
  std::sort(numeric.begin(), numeric.end(), std::greater<>());

  SpectrumComparison cmp;
  for (std::size_t i = 0; i < numeric.size(); ++i)
    cmp.max_abs_deviation = std::max(cmp.max_abs_deviation, std::abs(expected[i] - numeric[i]));

  const auto clusters = cluster_eigenvalues(numeric);
  cmp.multiplicity_match = clusters.size() == closed.entries.size();
  for (std::size_t i = 0; cmp.multiplicity_match && i < clusters.size(); ++i)
    cmp.multiplicity_match = clusters[i].multiplicity == closed.entries[i].multiplicity;

  if (closed.theta) cmp.theta_in_range = *closed.theta > 0.0 && *closed.theta < std::numbers::pi / 2;
  cmp.within_tolerance = cmp.max_abs_deviation <= tol;
  return cmp;
}

nlohmann::json to_json(const ClosedFormSpectrum& s) {
  nlohmann::json eig = nlohmann::json::array();
  for (const auto& e : s.entries) eig.push_back({{"value", e.value}, {"multiplicity", e.multiplicity}});
  return {{"n", s.n},
          {"matrix", to_string(s.kind)},
          {"theta_radians", s.theta ? nlohmann::json(*s.theta) : nlohmann::json(nullptr)},
          {"eigenvalues", std::move(eig)},
          {"source", to_string(s.source)}};
}

}  // namespace spg
