#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "spg/group.hpp"
#include "spg/spectra.hpp"

namespace spg {

inline constexpr double kDefaultSpectrumTol = 1e-8;

/// Outcome of every closed-form check for P_s(Z_n). Fields that do not apply
/// to n (distance checks for prime n, theta outside the composite case) are
/// empty.
struct VerificationRecord {
  std::uint64_t n = 0;
  bool composite = false;
  std::optional<bool> charpoly_distance_match;
  std::optional<bool> charpoly_adjacency_match;
  std::optional<bool> prime_charpoly_match;
  std::optional<double> spectrum_distance_max_dev;
  std::optional<double> spectrum_adjacency_max_dev;
  std::optional<bool> multiplicity_distance_match;
  std::optional<bool> multiplicity_adjacency_match;
  std::optional<double> theta_distance;
  std::optional<double> theta_adjacency;
  bool theta_in_range = true;
  std::int64_t elapsed_ms = 0;

  /// True when any check failed or a deviation exceeds tol.
  bool failed(double tol) const;

  friend bool operator==(const VerificationRecord&, const VerificationRecord&) = default;
};

struct VerificationReport {
  std::uint64_t n_min = 0;
  std::uint64_t n_max = 0;
  double tol = kDefaultSpectrumTol;
  std::vector<VerificationRecord> records;
  std::vector<std::uint64_t> failures;
  std::int64_t wall_time_ms = 0;

  bool ok() const noexcept { return failures.empty(); }
  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Runs every check for one n >= 2.
VerificationRecord verify_one(std::uint64_t n, double tol);

/// Records for n_min..n_max in order. workers > 1 fans the n values out over
/// threads; the report content does not depend on the worker count.
/// Throws Error(InvalidArgument) unless 2 <= n_min <= n_max.
VerificationReport run_verification(std::uint64_t n_min, std::uint64_t n_max, double tol,
                                    unsigned workers = 1);

nlohmann::json to_json(const VerificationRecord& r);
nlohmann::json to_json(const VerificationReport& r);
VerificationRecord record_from_json(const nlohmann::json& j);
VerificationReport report_from_json(const nlohmann::json& j);

// Documents behind the CLI subcommands.

enum class BuildFormat { Dot, Json, Csv };
BuildFormat build_format_from_string(const std::string& s);

/// Renders P_s(g) in the requested format. CSV output holds the matrix of the given kind.
std::string build_document(const GroupSpec& g, BuildFormat format, MatrixKind matrix);

/// Characteristic polynomial of the requested matrix together with the
/// closed-form polynomial that should equal it, when one applies.
/// Throws DisconnectedGraph for the distance matrix of a disconnected graph.
nlohmann::json charpoly_document(const GroupSpec& g, MatrixKind matrix);

/// Closed-form spectrum compared against the Jacobi eigenvalues.
nlohmann::json spectrum_document(const GroupSpec& g, MatrixKind matrix, double tol);

}  // namespace spg
