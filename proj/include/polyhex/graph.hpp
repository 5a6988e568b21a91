#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace polyhex {

using VertexId = std::uint32_t;

/// Undirected edge stored canonically with u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  friend auto operator<=>(const Edge &, const Edge &) = default;
};

/**
 * Immutable undirected simple graph.
 *
 * Vertices are the dense ids 0..vertex_count()-1. Edges are kept once, in
 * canonical (low, high) form and sorted lexicographically, so iteration order
 * is deterministic. Adjacency is stored in compressed rows and degrees are
 * available in O(1).
 *
 * Construct through make_graph(), which validates the input.
 */
class Graph {
public:
  Graph() = default;

  std::size_t vertex_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const { return edges_.size(); }

  std::span<const Edge> edges() const { return edges_; }

  /// Throws VertexOutOfRange for v >= vertex_count().
  std::size_t degree(VertexId v) const;

  /// Sorted neighbour ids of v. Throws VertexOutOfRange.
  std::span<const VertexId> neighbors(VertexId v) const;

  std::size_t min_degree() const;
  std::size_t max_degree() const;

private:
  friend Graph make_graph(std::size_t, std::span<const std::pair<VertexId, VertexId>>);

  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<VertexId> adjacency_;

  void check_vertex(VertexId v) const;
};

/**
 * Build a validated graph from an edge list.
 *
 * Each pair may be given in either orientation. Throws SelfLoop,
 * DuplicateEdge or VertexOutOfRange; the message names the offending edge.
 */
Graph make_graph(std::size_t vertex_count,
                 std::span<const std::pair<VertexId, VertexId>> edges);

inline std::size_t degree(const Graph &g, VertexId v) { return g.degree(v); }

/// True when the graph has a single connected component. The empty graph counts as connected.
bool is_connected(const Graph &g);

/// Unordered degree pair, always lo <= hi.
struct DegreePair {
  std::uint32_t lo = 0;
  std::uint32_t hi = 0;

  static DegreePair of(std::uint32_t a, std::uint32_t b) {
    return a <= b ? DegreePair{a, b} : DegreePair{b, a};
  }

  friend auto operator<=>(const DegreePair &, const DegreePair &) = default;
};

/// Edge counts keyed by the degree pair of their endpoints.
class EdgePartition {
public:
  using Classes = std::map<DegreePair, std::uint64_t>;

  EdgePartition() = default;
  EdgePartition(std::initializer_list<std::pair<const DegreePair, std::uint64_t>> init);

  /// Adds count edges to the class (a, b). Zero counts are not stored.
  void add(std::uint32_t a, std::uint32_t b, std::uint64_t count = 1);

  std::uint64_t count(std::uint32_t a, std::uint32_t b) const;
  std::uint64_t total() const;
  const Classes &classes() const { return classes_; }
  bool empty() const { return classes_.empty(); }

  friend bool operator==(const EdgePartition &, const EdgePartition &) = default;

private:
  Classes classes_;
};

EdgePartition edge_partition(const Graph &g);

} // namespace polyhex
