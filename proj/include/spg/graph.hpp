#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "spg/group.hpp"
#include "spg/matrix.hpp"

namespace spg {

/// Fixed-size bit set with word-level intersection tests.
class BitSet {
 public:
  BitSet() = default;
  explicit BitSet(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  std::size_t size() const noexcept { return bits_; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  bool intersects(const BitSet& other) const;
  std::size_t count() const;

  friend bool operator==(const BitSet&, const BitSet&) = default;

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Undirected loop-free graph on vertices 0..n-1.
class SimpleGraph {
 public:
  explicit SimpleGraph(std::size_t n = 0) : rows_(n, BitSet(n)) {}

  static SimpleGraph complete(std::size_t n);

  std::size_t size() const noexcept { return rows_.size(); }
  /// Self-loops are rejected with Error(InvalidArgument).
  void add_edge(std::size_t u, std::size_t v);
  bool adjacent(std::size_t u, std::size_t v) const { return rows_.at(u).test(v); }
  std::vector<std::size_t> neighbors(std::size_t v) const;
  std::size_t degree(std::size_t v) const { return rows_.at(v).count(); }
  std::size_t edge_count() const;
  /// Edges as (u, v) with u < v, lexicographic.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  std::vector<BitSet> rows_;
};

/// Adjacency by definition: distinct x, y are joined iff
/// {x^k : 1 <= k < n} and {y^k : 1 <= k < n} intersect.
SimpleGraph strong_power_graph(const GroupSpec& g);

/// Same graph from the structural characterization: complete when g is not
/// cyclic; otherwise all non-identity elements are pairwise adjacent and the
/// identity is joined to exactly the non-generators.
SimpleGraph strong_power_graph_structural(const GroupSpec& g);

/// Vertex sets of the connected components, each sorted, ordered by their
/// smallest vertex.
std::vector<std::vector<std::size_t>> connected_components(const SimpleGraph& graph);
bool is_connected(const SimpleGraph& graph);
bool is_complete(const SimpleGraph& graph);
std::vector<std::size_t> neighbors(const SimpleGraph& graph, std::size_t v);

/// All-pairs BFS distances. Throws DisconnectedGraph listing the components.
IntMatrix distance_matrix(const SimpleGraph& graph);
IntMatrix adjacency_matrix(const SimpleGraph& graph);
/// Throws DisconnectedGraph.
std::size_t diameter(const SimpleGraph& graph);

/// Vertex order that lists the identity's neighbours, then the remaining
/// non-identity vertices, then the identity last. perm[i] is the vertex
/// shown at position i; use with IntMatrix::permuted for display.
std::vector<std::size_t> identity_last_layout(const SimpleGraph& graph);

/// Graphviz DOT with vertices labelled by the group's element labels.
std::string to_dot(const SimpleGraph& graph, const GroupSpec& g);

}  // namespace spg
