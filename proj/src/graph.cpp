#include "spg/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>

#include "spg/error.hpp"

namespace spg {

bool BitSet::intersects(const BitSet& other) const {
  const std::size_t w = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < w; ++i)
    if (words_[i] & other.words_[i]) return true;
  return false;
}

std::size_t BitSet::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += std::size_t(std::popcount(w));
  return c;
}

SimpleGraph SimpleGraph::complete(std::size_t n) {
  SimpleGraph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

void SimpleGraph::add_edge(std::size_t u, std::size_t v) {
  if (u >= size() || v >= size()) throw Error(Errc::IndexOutOfRange, "vertex out of range");
  if (u == v) throw Error(Errc::InvalidArgument, "self-loops are not allowed");
  rows_[u].set(v);
  rows_[v].set(u);
}

std::vector<std::size_t> SimpleGraph::neighbors(std::size_t v) const {
  const BitSet& row = rows_.at(v);
  std::vector<std::size_t> out;
  for (std::size_t u = 0; u < size(); ++u)
    if (row.test(u)) out.push_back(u);
  return out;
}

std::size_t SimpleGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& r : rows_) twice += r.count();
  return twice / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> SimpleGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < size(); ++u)
    for (std::size_t v = u + 1; v < size(); ++v)
      if (rows_[u].test(v)) out.emplace_back(u, v);
  return out;
}

SimpleGraph strong_power_graph(const GroupSpec& g) {
  const std::size_t n = g.order();
  std::vector<BitSet> powers(n, BitSet(n));
  for (Element a = 0; a < n; ++a) {
    Element x = a;
    for (std::size_t k = 1; k < n; ++k) {
      powers[a].set(x);
      x = op(g, x, a);
    }
  }
  SimpleGraph graph(n);
  for (Element a = 0; a < n; ++a)
    for (Element b = a + 1; b < n; ++b)
      if (powers[a].intersects(powers[b])) graph.add_edge(a, b);
  return graph;
}

SimpleGraph strong_power_graph_structural(const GroupSpec& g) {
  const std::size_t n = g.order();
  if (!is_cyclic(g)) return SimpleGraph::complete(n);
  SimpleGraph graph(n);
  for (Element a = 1; a < n; ++a)
    for (Element b = a + 1; b < n; ++b) graph.add_edge(a, b);
  for (Element a = 1; a < n; ++a)
    if (element_order(g, a) != n) graph.add_edge(0, a);
  return graph;
}

namespace {

std::vector<std::size_t> bfs(const SimpleGraph& graph, std::size_t source) {
  constexpr auto unseen = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(graph.size(), unseen);
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t v = 0; v < graph.size(); ++v) {
      if (dist[v] == unseen && graph.adjacent(u, v)) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

void require_connected(const SimpleGraph& graph) {
  auto comps = connected_components(graph);
  if (comps.size() > 1) throw DisconnectedGraph(std::move(comps));
}

}  // namespace

std::vector<std::vector<std::size_t>> connected_components(const SimpleGraph& graph) {
  const std::size_t n = graph.size();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<std::size_t>> comps;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp;
    const auto dist = bfs(graph, s);
    for (std::size_t v = 0; v < n; ++v)
      if (dist[v] != std::numeric_limits<std::size_t>::max()) {
        seen[v] = true;
        comp.push_back(v);
      }
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const SimpleGraph& graph) { return connected_components(graph).size() <= 1; }

bool is_complete(const SimpleGraph& graph) {
  const std::size_t n = graph.size();
  return graph.edge_count() == n * (n - (n > 0)) / 2;
}

std::vector<std::size_t> neighbors(const SimpleGraph& graph, std::size_t v) {
  return graph.neighbors(v);
}

IntMatrix distance_matrix(const SimpleGraph& graph) {
  require_connected(graph);
  const std::size_t n = graph.size();
  IntMatrix d(n);
  for (std::size_t s = 0; s < n; ++s) {
    const auto dist = bfs(graph, s);
    for (std::size_t v = 0; v < n; ++v) d(s, v) = static_cast<unsigned long>(dist[v]);
  }
  return d;
}

IntMatrix adjacency_matrix(const SimpleGraph& graph) {
  const std::size_t n = graph.size();
  IntMatrix a(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (graph.adjacent(u, v)) a(u, v) = 1;
  return a;
}

std::size_t diameter(const SimpleGraph& graph) {
  require_connected(graph);
  std::size_t best = 0;
  for (std::size_t s = 0; s < graph.size(); ++s) {
    const auto dist = bfs(graph, s);
    best = std::max(best, *std::max_element(dist.begin(), dist.end()));
  }
  return best;
}

std::vector<std::size_t> identity_last_layout(const SimpleGraph& graph) {
  const std::size_t n = graph.size();
  std::vector<std::size_t> perm;
  if (n == 0) return perm;
  perm.reserve(n);
  for (std::size_t v = 1; v < n; ++v)
    if (graph.adjacent(0, v)) perm.push_back(v);
  for (std::size_t v = 1; v < n; ++v)
    if (!graph.adjacent(0, v)) perm.push_back(v);
  perm.push_back(0);
  return perm;
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}

}  // namespace

std::string to_dot(const SimpleGraph& graph, const GroupSpec& g) {
  std::string s = "graph strong_power_graph {\n";
  s += "  // " + g.describe() + ", " + std::to_string(graph.size()) + " vertices, " +
       std::to_string(graph.edge_count()) + " edges\n";
  for (std::size_t v = 0; v < graph.size(); ++v)
    s += "  " + std::to_string(v) + " [label=\"" + dot_escape(g.label(v)) + "\"];\n";
  for (const auto& [u, v] : graph.edges())
    s += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  s += "}\n";
  return s;
}

}  // namespace spg
