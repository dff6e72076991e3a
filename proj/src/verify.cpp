#include "spg/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <numbers>
#include <thread>

#include "spg/error.hpp"
#include "spg/graph.hpp"
#include "spg/poly.hpp"

namespace spg {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

bool theta_ok(const std::optional<double>& theta) {
  return !theta || (*theta > 0.0 && *theta < std::numbers::pi / 2);
}

template <class T>
nlohmann::json opt(const std::optional<T>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

template <class T>
std::optional<T> get_opt(const nlohmann::json& j, const char* key) {
  const auto& v = j.at(key);
  if (v.is_null()) return std::nullopt;
  return v.get<T>();
}

}  // namespace

bool VerificationRecord::failed(double tol) const {
  auto is_false = [](const std::optional<bool>& b) { return b && !*b; };
  auto too_big = [tol](const std::optional<double>& d) { return d && !(*d <= tol); };
  return is_false(charpoly_distance_match) || is_false(charpoly_adjacency_match) ||
         is_false(prime_charpoly_match) || is_false(multiplicity_distance_match) ||
         is_false(multiplicity_adjacency_match) || too_big(spectrum_distance_max_dev) ||
         too_big(spectrum_adjacency_max_dev) || !theta_in_range;
}

VerificationRecord verify_one(std::uint64_t n, double tol) {
  if (n < 2) throw Error(Errc::InvalidArgument, "verification needs n >= 2");
  const auto start = Clock::now();
  VerificationRecord rec;
  rec.n = n;
  rec.composite = is_composite(n);

  const auto group = GroupSpec::cyclic(n);
  const auto graph = strong_power_graph(group);

  const IntMatrix adj = adjacency_matrix(graph);
  const IntPolynomial adj_poly = charpoly(adj);
  rec.charpoly_adjacency_match = adj_poly == adjacency_charpoly_closed(n);
  if (is_prime(n)) rec.prime_charpoly_match = adj_poly == prime_adjacency_charpoly_closed(n);

  const auto adj_closed = adjacency_spectrum_closed(n, true);
  const auto adj_cmp = compare_spectra(adj_closed, symmetric_eigenvalues(to_real(adj)), tol);
  rec.spectrum_adjacency_max_dev = adj_cmp.max_abs_deviation;
  rec.multiplicity_adjacency_match = adj_cmp.multiplicity_match;
  rec.theta_adjacency = adj_closed.theta;

  if (rec.composite) {
    const IntMatrix dist = distance_matrix(graph);
    rec.charpoly_distance_match = charpoly(dist) == distance_charpoly_closed(n);
    const auto dist_closed = distance_spectrum_closed(n, true);
    const auto dist_cmp = compare_spectra(dist_closed, symmetric_eigenvalues(to_real(dist)), tol);
    rec.spectrum_distance_max_dev = dist_cmp.max_abs_deviation;
    rec.multiplicity_distance_match = dist_cmp.multiplicity_match;
    rec.theta_distance = dist_closed.theta;
  }
  rec.theta_in_range = theta_ok(rec.theta_distance) && theta_ok(rec.theta_adjacency);
  rec.elapsed_ms = ms_since(start);
  return rec;
}

VerificationReport run_verification(std::uint64_t n_min, std::uint64_t n_max, double tol,
                                    unsigned workers) {
  if (n_min < 2 || n_min > n_max)
    throw Error(Errc::InvalidArgument, "range must satisfy 2 <= min <= max, got " +
                                           std::to_string(n_min) + ".." + std::to_string(n_max));
  const auto start = Clock::now();
  VerificationReport report;
  report.n_min = n_min;
  report.n_max = n_max;
  report.tol = tol;
  const std::size_t count = n_max - n_min + 1;
  report.records.resize(count);

  workers = std::max(1u, std::min<unsigned>(workers, unsigned(count)));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) report.records[i] = verify_one(n_min + i, tol);
  } else {
    // Largest n first so the slow tail is spread across threads.
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        try {
          for (std::size_t k; (k = next.fetch_add(1)) < count;) {
            const std::size_t i = count - 1 - k;
            report.records[i] = verify_one(n_min + i, tol);
          }
        } catch (...) {
          errors[w] = std::current_exception();
          next = count;
        }
      });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  for (const auto& r : report.records)
    if (r.failed(tol)) report.failures.push_back(r.n);
  report.wall_time_ms = ms_since(start);
  return report;
}

nlohmann::json to_json(const VerificationRecord& r) {
  return {{"n", r.n},
          {"composite", r.composite},
          {"charpoly_distance_match", opt(r.charpoly_distance_match)},
          {"charpoly_adjacency_match", opt(r.charpoly_adjacency_match)},
          {"prime_charpoly_match", opt(r.prime_charpoly_match)},
          {"spectrum_distance_max_dev", opt(r.spectrum_distance_max_dev)},
          {"spectrum_adjacency_max_dev", opt(r.spectrum_adjacency_max_dev)},
          {"multiplicity_distance_match", opt(r.multiplicity_distance_match)},
          {"multiplicity_adjacency_match", opt(r.multiplicity_adjacency_match)},
          {"theta_distance", opt(r.theta_distance)},
          {"theta_adjacency", opt(r.theta_adjacency)},
          {"theta_in_range", r.theta_in_range},
          {"elapsed_ms", r.elapsed_ms}};
}

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& rec : r.records) records.push_back(to_json(rec));
  return {{"range", {{"min", r.n_min}, {"max", r.n_max}}},
          {"tol", r.tol},
          {"records", std::move(records)},
          {"summary", {{"failures", r.failures}, {"wall_time_ms", r.wall_time_ms}}}};
}

VerificationRecord record_from_json(const nlohmann::json& j) {
  VerificationRecord r;
  r.n = j.at("n").get<std::uint64_t>();
  r.composite = j.at("composite").get<bool>();
  r.charpoly_distance_match = get_opt<bool>(j, "charpoly_distance_match");
  r.charpoly_adjacency_match = get_opt<bool>(j, "charpoly_adjacency_match");
  r.prime_charpoly_match = get_opt<bool>(j, "prime_charpoly_match");
  r.spectrum_distance_max_dev = get_opt<double>(j, "spectrum_distance_max_dev");
  r.spectrum_adjacency_max_dev = get_opt<double>(j, "spectrum_adjacency_max_dev");
  r.multiplicity_distance_match = get_opt<bool>(j, "multiplicity_distance_match");
  r.multiplicity_adjacency_match = get_opt<bool>(j, "multiplicity_adjacency_match");
  r.theta_distance = get_opt<double>(j, "theta_distance");
  r.theta_adjacency = get_opt<double>(j, "theta_adjacency");
  r.theta_in_range = j.at("theta_in_range").get<bool>();
  r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
  return r;
}

VerificationReport report_from_json(const nlohmann::json& j) {
  VerificationReport r;
  r.n_min = j.at("range").at("min").get<std::uint64_t>();
  r.n_max = j.at("range").at("max").get<std::uint64_t>();
  r.tol = j.at("tol").get<double>();
  for (const auto& rec : j.at("records")) r.records.push_back(record_from_json(rec));
  r.failures = j.at("summary").at("failures").get<std::vector<std::uint64_t>>();
  r.wall_time_ms = j.at("summary").at("wall_time_ms").get<std::int64_t>();
  return r;
}

BuildFormat build_format_from_string(const std::string& s) {
  if (s == "dot") return BuildFormat::Dot;
  if (s == "json") return BuildFormat::Json;
  if (s == "csv") return BuildFormat::Csv;
  throw Error(Errc::ParseError, "format must be dot, json or csv, got '" + s + "'");
}

std::string build_document(const GroupSpec& g, BuildFormat format, MatrixKind matrix) {
  const auto graph = strong_power_graph(g);
  switch (format) {
    case BuildFormat::Dot:
      return to_dot(graph, g);
    case BuildFormat::Csv:
      return (matrix == MatrixKind::Distance ? distance_matrix(graph) : adjacency_matrix(graph))
          .to_csv();
    case BuildFormat::Json: {
      nlohmann::json vertices = nlohmann::json::array();
      for (std::size_t v = 0; v < graph.size(); ++v)
        vertices.push_back({{"index", v}, {"label", g.label(v)}});
      nlohmann::json edges = nlohmann::json::array();
      for (const auto& [u, v] : graph.edges()) edges.push_back({u, v});
      nlohmann::json doc{{"group", g.describe()},
                         {"n", graph.size()},
                         {"vertices", std::move(vertices)},
                         {"edges", std::move(edges)}};
      return doc.dump(2) + "\n";
    }
  }
  return {};
}

namespace {

nlohmann::json closed_form_entry(const char* name, const IntPolynomial& expected,
                                 const IntPolynomial& actual) {
  return {{"name", name},
          {"coefficients", to_json(expected)},
          {"polynomial", expected.to_string()},
          {"match", expected == actual}};
}

}  // namespace

nlohmann::json charpoly_document(const GroupSpec& g, MatrixKind matrix) {
  const auto graph = strong_power_graph(g);
  const IntMatrix m =
      matrix == MatrixKind::Distance ? distance_matrix(graph) : adjacency_matrix(graph);
  const IntPolynomial p = charpoly(m);
  const std::uint64_t n = g.order();
  const bool cyclic = is_cyclic(g);

  nlohmann::json doc{{"group", g.describe()},
                     {"n", n},
                     {"matrix", to_string(matrix)},
                     {"coefficients", to_json(p)},
                     {"polynomial", p.to_string()},
                     {"closed_form", nullptr}};
  if (!cyclic) {
    doc["closed_form"] = closed_form_entry("complete-graph", complete_graph_poly(n), p);
  } else if (matrix == MatrixKind::Distance) {
    if (is_composite(n))
      doc["closed_form"] = closed_form_entry("distance-cyclic-composite", distance_charpoly_closed(n), p);
  } else if (n >= 2) {
    doc["closed_form"] = closed_form_entry("adjacency-cyclic", adjacency_charpoly_closed(n), p);
    if (is_prime(n))
      doc["prime_closed_form"] = closed_form_entry("adjacency-cyclic-prime", prime_adjacency_charpoly_closed(n), p);
  }
  return doc;
}

nlohmann::json spectrum_document(const GroupSpec& g, MatrixKind matrix, double tol) {
  const auto graph = strong_power_graph(g);
  const IntMatrix m =
      matrix == MatrixKind::Distance ? distance_matrix(graph) : adjacency_matrix(graph);
  const auto closed =
      matrix == MatrixKind::Distance ? distance_spectrum_closed(g) : adjacency_spectrum_closed(g);
  const auto numeric = symmetric_eigenvalues(to_real(m));
  const auto cmp = compare_spectra(closed, numeric, tol);

  nlohmann::json doc = to_json(closed);
  doc["group"] = g.describe();
  doc["numeric_eigenvalues"] = numeric;
  doc["comparison"] = {{"max_abs_deviation", cmp.max_abs_deviation},
                       {"multiplicity_match", cmp.multiplicity_match},
                       {"theta_in_range", cmp.theta_in_range},
                       {"within_tolerance", cmp.within_tolerance},
                       {"tol", tol}};
  return doc;
}

}  // namespace spg
