#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "spg/group.hpp"
#include "spg/matrix.hpp"

namespace spg {

enum class MatrixKind { Adjacency, Distance };

const char* to_string(MatrixKind kind) noexcept;
MatrixKind matrix_kind_from_string(const std::string& s);

struct Eigenvalue {
  double value;
  std::size_t multiplicity;
  friend bool operator==(const Eigenvalue&, const Eigenvalue&) = default;
};

/// Which closed form produced a spectrum.
enum class SpectrumSource {
  DistanceNoncyclic,
  DistanceCyclicComposite,
  AdjacencyNoncyclic,
  AdjacencyCyclicPrime,
  AdjacencyCyclicComposite,
};

const char* to_string(SpectrumSource source) noexcept;

/// Eigenvalues with multiplicities, sorted descending, values distinct.
struct ClosedFormSpectrum {
  std::size_t n = 0;
  MatrixKind kind = MatrixKind::Adjacency;
  std::vector<Eigenvalue> entries;
  std::optional<double> theta;  // only for the cyclic composite cases
  SpectrumSource source = SpectrumSource::AdjacencyNoncyclic;

  /// Every eigenvalue repeated by multiplicity, descending.
  std::vector<double> expanded() const;
};

struct CubicRoots {
  std::array<double, 3> roots;  // branches k = 0, +2pi, -2pi
  double theta;

  /// Roots in descending order.
  std::array<double, 3> sorted() const;
};

/// Boundary slack allowed on the arccos argument before it counts as an error.
inline constexpr double kArccosSlack = 1e-12;

/// Roots of x^3 + a2 x^2 + a1 x + a0 by the trigonometric method:
/// x = (-a2 + 2 sqrt(D) cos((theta + 2 pi k)/3)) / 3 with D = a2^2 - 3 a1.
/// Throws Error(ComplexRoots) when the cubic does not have three real roots.
CubicRoots solve_cubic_trig(double a2, double a1, double a0);

/// Distance spectrum of P_s(G). Throws Error(PrimeOrder) for cyclic groups
/// of prime order and Error(UnsupportedN) for the trivial group.
ClosedFormSpectrum distance_spectrum_closed(const GroupSpec& g);

/// Adjacency spectrum of P_s(G). Throws Error(UnsupportedN) for the trivial group.
ClosedFormSpectrum adjacency_spectrum_closed(const GroupSpec& g);

/// Closed-form spectra depending only on the order and on cyclicity.
ClosedFormSpectrum distance_spectrum_closed(std::uint64_t n, bool cyclic);
ClosedFormSpectrum adjacency_spectrum_closed(std::uint64_t n, bool cyclic);

/// theta for the composite cyclic cases.
double distance_theta(std::uint64_t n);
double adjacency_theta(std::uint64_t n);

/// Largest closed-form eigenvalue of P_s(Z_n) for composite n; throws
/// Error(NotComposite) otherwise.
double spectral_radius_distance(std::uint64_t n);
double spectral_radius_adjacency(std::uint64_t n);

inline constexpr int kJacobiMaxSweeps = 50;

/// All eigenvalues of a symmetric matrix, descending, by cyclic Jacobi
/// rotations until the off-diagonal Frobenius norm drops below tol.
/// Throws Error(NonSymmetric) or Error(NoConvergence) after kJacobiMaxSweeps.
std::vector<double> symmetric_eigenvalues(RealMatrix m, double tol = 1e-12);

struct SpectrumComparison {
  double max_abs_deviation = 0.0;
  bool multiplicity_match = false;
  bool theta_in_range = true;  // vacuously true when the spectrum has no theta
  bool within_tolerance = false;
};

/// Relative tolerance used to cluster numeric eigenvalues into multiplicities.
inline constexpr double kClusterRelTol = 1e-6;

/// Pairs expanded closed-form values with the numeric ones in sorted order.
/// Throws Error(CountMismatch) if the totals differ.
SpectrumComparison compare_spectra(const ClosedFormSpectrum& closed,
                                   std::vector<double> numeric, double tol);

/// Groups a descending list into (value, count) clusters.
std::vector<Eigenvalue> cluster_eigenvalues(const std::vector<double>& descending,
                                            double rel_tol = kClusterRelTol);

nlohmann::json to_json(const ClosedFormSpectrum& s);

}  // namespace spg
