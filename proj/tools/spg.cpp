// spg: strong power graphs, their characteristic polynomials and spectra.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
// 3 inapplicable input (disconnected graph, trivial group).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "spg/error.hpp"
#include "spg/group.hpp"
#include "spg/verify.hpp"

namespace {

enum ExitCode { kOk = 0, kVerifyFailed = 1, kUsage = 2, kInapplicable = 3 };

void setup_logging() {
  auto logger = spdlog::stderr_color_mt("spg");
  spdlog::set_default_logger(logger);
  spdlog::set_level(spdlog::level::warn);
  if (const char* env = std::getenv("SPG_LOG")) spdlog::set_level(spdlog::level::from_str(env));
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw spg::Error(spg::Errc::ParseError, "cannot write '" + out_path + "'");
  out << text;
  spdlog::info("wrote {}", out_path);
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos)
    throw spg::Error(spg::Errc::ParseError, "range must look like A..B, got '" + s + "'");
  try {
    std::size_t used_a = 0, used_b = 0;
    const std::string a = s.substr(0, dots), b = s.substr(dots + 2);
    const auto lo = std::stoull(a, &used_a);
    const auto hi = std::stoull(b, &used_b);
    if (used_a != a.size() || used_b != b.size() || a.front() == '-' || b.front() == '-')
      throw std::invalid_argument(s);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw spg::Error(spg::Errc::ParseError, "range must look like A..B, got '" + s + "'");
  }
}

std::string spectrum_csv(const nlohmann::json& doc) {
  std::string s = "value,multiplicity\n";
  for (const auto& e : doc["eigenvalues"])
    s += nlohmann::json(e["value"]).dump() + "," + e["multiplicity"].dump() + "\n";
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  setup_logging();

  CLI::App app{"Strong power graphs of finite groups: construction, characteristic polynomials, spectra"};
  app.require_subcommand(1);

  std::string group_text;
  std::string matrix_text = "adjacency";
  std::string format_text;
  std::string out_path;
  double tol = spg::kDefaultSpectrumTol;
  std::string range_text;
  unsigned workers = 1;

  const std::string group_help = "cyclic:N | product:A,B[,C...] | dihedral:M | cayley:PATH";
  const std::string matrix_help = "adjacency or distance";

  auto* build = app.add_subcommand("build", "Construct the strong power graph");
  build->add_option("--group", group_text, group_help)->required();
  build->add_option("--format", format_text, "dot, json or csv (matrix)")->default_val("dot");
  build->add_option("--matrix", matrix_text, "matrix written by --format csv")->default_val("adjacency");
  build->add_option("--out", out_path, "output file (default stdout)");

  auto* cpoly = app.add_subcommand("charpoly", "Exact characteristic polynomial");
  cpoly->add_option("--group", group_text, group_help)->required();
  cpoly->add_option("--matrix", matrix_text, matrix_help)->default_val("adjacency");
  cpoly->add_option("--format", format_text, "json")->default_val("json");
  cpoly->add_option("--out", out_path, "output file (default stdout)");

  auto* spec = app.add_subcommand("spectrum", "Closed-form spectrum checked against Jacobi");
  spec->add_option("--group", group_text, group_help)->required();
  spec->add_option("--matrix", matrix_text, matrix_help)->default_val("adjacency");
  spec->add_option("--format", format_text, "json or csv")->default_val("json");
  spec->add_option("--tol", tol, "max allowed |closed - numeric|");
  spec->add_option("--out", out_path, "output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Check every closed form over a range of n");
  verify->add_option("--range", range_text, "A..B with 2 <= A <= B")->required();
  verify->add_option("--tol", tol, "max allowed spectrum deviation");
  verify->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--out", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*verify) {
      const auto [lo, hi] = parse_range(range_text);
      spdlog::info("verifying n = {}..{} with {} worker(s)", lo, hi, workers);
      const auto report = spg::run_verification(lo, hi, tol, workers);
      emit(spg::to_json(report).dump(2) + "\n", out_path);
      for (auto n : report.failures) spdlog::error("verification failed for n = {}", n);
      return report.ok() ? kOk : kVerifyFailed;
    }

    const auto group = spg::parse_group_spec(group_text);
    const auto matrix = spg::matrix_kind_from_string(matrix_text);
    spdlog::debug("group {} of order {}", group.describe(), group.order());

    if (*build) {
      emit(spg::build_document(group, spg::build_format_from_string(format_text), matrix), out_path);
    } else if (*cpoly) {
      if (format_text != "json") throw spg::Error(spg::Errc::ParseError, "charpoly supports --format json only");
      const auto doc = spg::charpoly_document(group, matrix);
      emit(doc.dump(2) + "\n", out_path);
    } else if (*spec) {
      if (format_text != "json" && format_text != "csv")
        throw spg::Error(spg::Errc::ParseError, "spectrum supports --format json or csv");
      const auto doc = spg::spectrum_document(group, matrix, tol);
      emit(format_text == "csv" ? spectrum_csv(doc) : doc.dump(2) + "\n", out_path);
      if (!doc["comparison"]["within_tolerance"].get<bool>())
        spdlog::warn("closed form and numeric spectra differ by {}", doc["comparison"]["max_abs_deviation"].dump());
    }
    return kOk;
  } catch (const spg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case spg::Errc::DisconnectedGraph:
      case spg::Errc::PrimeOrder:
      case spg::Errc::UnsupportedN:
        return kInapplicable;
      default:
        return kUsage;
    }
  }
}
