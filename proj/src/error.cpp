#include "spg/error.hpp"

namespace spg {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::CayleyShape: return "CayleyShape";
    case Errc::CayleyNotLatin: return "CayleyNotLatin";
    case Errc::CayleyNoIdentity: return "CayleyNoIdentity";
    case Errc::CayleyNoInverse: return "CayleyNoInverse";
    case Errc::CayleyNotAssociative: return "CayleyNotAssociative";
    case Errc::DisconnectedGraph: return "DisconnectedGraph";
    case Errc::PrimeOrTrivialN: return "PrimeOrTrivialN";
    case Errc::UnsupportedN: return "UnsupportedN";
    case Errc::InexactDivision: return "InexactDivision";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NotPrime: return "NotPrime";
    case Errc::NotComposite: return "NotComposite";
    case Errc::PrimeOrder: return "PrimeOrder";
    case Errc::ComplexRoots: return "ComplexRoots";
    case Errc::NonSymmetric: return "NonSymmetric";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::CountMismatch: return "CountMismatch";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

std::string describe(const std::vector<std::vector<std::size_t>>& comps) {
  std::string s = "graph is disconnected: " + std::to_string(comps.size()) +
                  " components";
  for (const auto& c : comps) {
    s += " {";
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ',';
      if (i == 8 && c.size() > 9) {
        s += "...";
        break;
      }
      s += std::to_string(c[i]);
    }
    s += '}';
  }
  return s;
}

}  // namespace

DisconnectedGraph::DisconnectedGraph(
    std::vector<std::vector<std::size_t>> components)
    : Error(Errc::DisconnectedGraph, describe(components)),
      components_(std::move(components)) {}

}  // namespace spg
