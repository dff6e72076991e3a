#include "spg/group.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

#include "spg/error.hpp"

namespace spg {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string cell(std::size_t r, std::size_t c) {
  return "(" + std::to_string(r) + "," + std::to_string(c) + ")";
}

void check_latin(std::size_t n, const std::vector<Element>& t) {
  std::vector<long> seen(n);
  for (std::size_t r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), -1);
    for (std::size_t c = 0; c < n; ++c) {
      const Element v = t[r * n + c];
      if (v >= n)
        throw CayleyError(Errc::CayleyShape,
                          "entry out of range at " + cell(r, c), long(r), long(c));
      if (seen[v] >= 0)
        throw CayleyError(Errc::CayleyNotLatin,
                          "not a Latin square: row " + std::to_string(r) +
                              " repeats " + std::to_string(v) + " at " + cell(r, c),
                          long(r), long(c));
      seen[v] = long(c);
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), -1);
    for (std::size_t r = 0; r < n; ++r) {
      const Element v = t[r * n + c];
      if (seen[v] >= 0)
        throw CayleyError(Errc::CayleyNotLatin,
                          "not a Latin square: column " + std::to_string(c) +
                              " repeats " + std::to_string(v) + " at " + cell(r, c),
                          long(r), long(c));
      seen[v] = long(r);
    }
  }
}

// Checks every group axiom on a table whose identity is expected at index 0.
void validate_table(std::size_t n, const std::vector<Element>& t) {
  if (n == 0) throw CayleyError(Errc::CayleyShape, "group order must be positive");
  if (t.size() != n * n)
    throw CayleyError(Errc::CayleyShape, "table must have order*order entries");
  check_latin(n, t);

  for (std::size_t x = 0; x < n; ++x) {
    if (t[x] != x)
      throw CayleyError(Errc::CayleyNoIdentity,
                        "index 0 is not a left identity at " + cell(0, x), 0, long(x));
    if (t[x * n] != x)
      throw CayleyError(Errc::CayleyNoIdentity,
                        "index 0 is not a right identity at " + cell(x, 0), long(x), 0);
  }

  for (std::size_t x = 0; x < n; ++x) {
    bool found = false;
    for (std::size_t y = 0; y < n && !found; ++y)
      found = t[x * n + y] == 0 && t[y * n + x] == 0;
    if (!found)
      throw CayleyError(Errc::CayleyNoInverse,
                        "element " + std::to_string(x) + " has no two-sided inverse",
                        long(x), -1);
  }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Element ab = t[a * n + b];
      for (std::size_t c = 0; c < n; ++c) {
        if (t[ab * n + c] != t[a * n + t[b * n + c]])
          throw CayleyError(Errc::CayleyNotAssociative,
                            "associativity fails for (" + std::to_string(a) + "," +
                                std::to_string(b) + "," + std::to_string(c) + ")",
                            long(a), long(b));
      }
    }
}

std::size_t parse_positive(const std::string& s, const std::string& ctx) {
  std::size_t v = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (s.empty() || ec != std::errc() || ptr != last)
    throw Error(Errc::ParseError, "expected a positive integer in " + ctx + ", got '" + s + "'");
  if (v == 0) throw Error(Errc::ParseError, "order must be positive in " + ctx);
  return v;
}

}  // namespace

GroupSpec GroupSpec::cyclic(std::size_t n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "cyclic group order must be positive");
  return GroupSpec(Cyclic{n}, n);
}

GroupSpec GroupSpec::direct_product(std::vector<std::size_t> orders) {
  if (orders.empty())
    throw Error(Errc::InvalidArgument, "direct product needs at least one factor");
  std::size_t n = 1;
  for (auto o : orders) {
    if (o == 0) throw Error(Errc::InvalidArgument, "factor orders must be positive");
    n *= o;
  }
  return GroupSpec(DirectProduct{std::move(orders)}, n);
}

GroupSpec GroupSpec::dihedral(std::size_t m) {
  if (m == 0) throw Error(Errc::InvalidArgument, "dihedral parameter must be positive");
  return GroupSpec(Dihedral{m}, 2 * m);
}

GroupSpec GroupSpec::cayley(std::size_t n, std::vector<Element> table,
                            std::vector<std::string> labels) {
  validate_table(n, table);
  if (!labels.empty() && labels.size() != n)
    throw CayleyError(Errc::CayleyShape, "labels must have one entry per element");
  return GroupSpec(CayleyTable{n, std::move(table), std::move(labels)}, n);
}

std::string GroupSpec::describe() const {
  return std::visit(
      overloaded{
          [](const Cyclic& c) { return "cyclic:" + std::to_string(c.n); },
          [](const DirectProduct& p) {
            std::string s = "product:";
            for (std::size_t i = 0; i < p.orders.size(); ++i) {
              if (i) s += ',';
              s += std::to_string(p.orders[i]);
            }
            return s;
          },
          [](const Dihedral& d) { return "dihedral:" + std::to_string(d.m); },
          [](const CayleyTable& t) { return "cayley(order " + std::to_string(t.n) + ")"; },
      },
      kind_);
}

std::string GroupSpec::label(Element a) const {
  if (const auto* t = std::get_if<CayleyTable>(&kind_); t && !t->labels.empty())
    return t->labels.at(a);
  return std::to_string(a);
}

Element op(const GroupSpec& g, Element a, Element b) {
  const std::size_t n = g.order();
  if (a >= n || b >= n)
    throw Error(Errc::IndexOutOfRange, "element index out of range for group of order " +
                                           std::to_string(n));
  return std::visit(
      overloaded{
          [&](const Cyclic& c) -> Element { return (a + b) % c.n; },
          [&](const DirectProduct& p) -> Element {
            Element result = 0, stride = 1, x = a, y = b;
            for (auto it = p.orders.rbegin(); it != p.orders.rend(); ++it) {
              const std::size_t o = *it;
              result += ((x % o + y % o) % o) * stride;
              x /= o;
              y /= o;
              stride *= o;
            }
            return result;
          },
          [&](const Dihedral& d) -> Element {
            const std::size_t m = d.m;
            const bool ra = a < m, rb = b < m;
            const std::size_t i = a % m, j = b % m;
            if (ra && rb) return (i + j) % m;              // r^i r^j
            if (ra) return m + (j + m - i) % m;            // r^i s r^j = s r^(j-i)
            if (rb) return m + (i + j) % m;                // s r^i r^j
            return (j + m - i) % m;                        // s r^i s r^j = r^(j-i)
          },
          [&](const CayleyTable& t) -> Element { return t.table[a * t.n + b]; },
      },
      g.kind());
}

Element power(const GroupSpec& g, Element a, std::uint64_t k) {
  if (a >= g.order())
    throw Error(Errc::IndexOutOfRange, "element index out of range");
  Element result = 0;
  Element base = a;
  while (k > 0) {
    if (k & 1u) result = op(g, result, base);
    k >>= 1;
    if (k) base = op(g, base, base);
  }
  return result;
}

std::size_t element_order(const GroupSpec& g, Element a) {
  if (a >= g.order())
    throw Error(Errc::IndexOutOfRange, "element index out of range");
  std::size_t k = 1;
  for (Element x = a; x != 0; x = op(g, x, a)) ++k;
  return k;
}

Element inverse(const GroupSpec& g, Element a) {
  return power(g, a, element_order(g, a) - 1);
}

bool is_cyclic(const GroupSpec& g) {
  const std::size_t n = g.order();
  for (Element a = 0; a < n; ++a)
    if (element_order(g, a) == n) return true;
  return false;
}

GroupSpec to_cayley(const GroupSpec& g) {
  const std::size_t n = g.order();
  std::vector<Element> t(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) t[a * n + b] = op(g, a, b);
  std::vector<std::string> labels;
  if (const auto* c = std::get_if<CayleyTable>(&g.kind())) labels = c->labels;
  return GroupSpec::cayley(n, std::move(t), std::move(labels));
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept { return std::gcd(a, b); }

std::uint64_t totient(std::uint64_t n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "totient is undefined for 0");
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

GroupSpec load_cayley_table(const nlohmann::json& doc) {
  if (!doc.is_object()) throw CayleyError(Errc::CayleyShape, "document must be a JSON object");
  if (!doc.contains("order") || !doc["order"].is_number_integer() || doc["order"].get<long long>() <= 0)
    throw CayleyError(Errc::CayleyShape, "\"order\" must be a positive integer");
  const std::size_t n = doc["order"].get<std::size_t>();
  if (!doc.contains("table") || !doc["table"].is_array() || doc["table"].size() != n)
    throw CayleyError(Errc::CayleyShape,
                      "\"table\" must be an array of " + std::to_string(n) + " rows");

  std::vector<Element> t(n * n);
  const auto& rows = doc["table"];
  for (std::size_t r = 0; r < n; ++r) {
    if (!rows[r].is_array() || rows[r].size() != n)
      throw CayleyError(Errc::CayleyShape,
                        "row " + std::to_string(r) + " must have " + std::to_string(n) + " entries",
                        long(r), -1);
    for (std::size_t c = 0; c < n; ++c) {
      const auto& v = rows[r][c];
      if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<long long>() >= (long long)n)
        throw CayleyError(Errc::CayleyShape, "entry out of range at " + cell(r, c), long(r), long(c));
      t[r * n + c] = v.get<Element>();
    }
  }

  std::vector<std::string> labels;
  if (doc.contains("labels") && !doc["labels"].is_null()) {
    const auto& l = doc["labels"];
    if (!l.is_array() || l.size() != n)
      throw CayleyError(Errc::CayleyShape, "\"labels\" must be an array of " + std::to_string(n) + " strings");
    for (const auto& s : l) {
      if (!s.is_string()) throw CayleyError(Errc::CayleyShape, "labels must be strings");
      labels.push_back(s.get<std::string>());
    }
  }

  // Coordinates in Latin-square errors refer to the table as written.
  check_latin(n, t);
  std::optional<Element> identity;
  for (Element e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) ok = t[e * n + x] == x && t[x * n + e] == x;
    if (ok) identity = e;
  }
  if (!identity) throw CayleyError(Errc::CayleyNoIdentity, "table has no two-sided identity");

  if (*identity != 0) {
    const Element e = *identity;
    auto swap_label = [e](Element x) -> Element { return x == e ? 0 : (x == 0 ? e : x); };
    std::vector<Element> relabeled(n * n);
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        relabeled[swap_label(a) * n + swap_label(b)] = swap_label(t[a * n + b]);
    t = std::move(relabeled);
    if (!labels.empty()) std::swap(labels[0], labels[e]);
  }
  return GroupSpec::cayley(n, std::move(t), std::move(labels));
}

GroupSpec load_cayley_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open Cayley table file '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::ParseError, "invalid JSON in '" + path + "': " + e.what());
  }
  return load_cayley_table(doc);
}

nlohmann::json to_cayley_json(const GroupSpec& g) {
  const std::size_t n = g.order();
  nlohmann::json rows = nlohmann::json::array();
  for (Element a = 0; a < n; ++a) {
    nlohmann::json row = nlohmann::json::array();
    for (Element b = 0; b < n; ++b) row.push_back(op(g, a, b));
    rows.push_back(std::move(row));
  }
  nlohmann::json doc{{"order", n}, {"table", std::move(rows)}};
  if (const auto* c = std::get_if<CayleyTable>(&g.kind()); c && !c->labels.empty())
    doc["labels"] = c->labels;
  return doc;
}

GroupSpec parse_group_spec(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw Error(Errc::ParseError, "group spec must look like kind:args, got '" + text + "'");
  const std::string kind = text.substr(0, colon);
  const std::string args = text.substr(colon + 1);

  if (kind == "cyclic") return GroupSpec::cyclic(parse_positive(args, text));
  if (kind == "dihedral") return GroupSpec::dihedral(parse_positive(args, text));
  if (kind == "product") {
    std::vector<std::size_t> orders;
    std::stringstream ss(args);
    std::string part;
    while (std::getline(ss, part, ',')) orders.push_back(parse_positive(part, text));
    if (orders.size() < 2 || args.back() == ',')
      throw Error(Errc::ParseError, "product needs at least two comma-separated orders");
    return GroupSpec::direct_product(std::move(orders));
  }
  if (kind == "cayley") {
    if (args.empty()) throw Error(Errc::ParseError, "cayley: needs a file path");
    return load_cayley_file(args);
  }
  throw Error(Errc::ParseError, "unknown group kind '" + kind + "'");
}

}  // namespace spg
