#include "polyhex/graph.hpp"

#include "polyhex/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace polyhex {

namespace {

std::string edge_text(VertexId a, VertexId b) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

} // namespace

void Graph::check_vertex(VertexId v) const {
  if (v >= vertex_count())
    throw VertexOutOfRange("vertex " + std::to_string(v) + " out of range for graph with " +
                           std::to_string(vertex_count()) + " vertices");
}

std::size_t Graph::degree(VertexId v) const {
  check_vertex(v);
  return offsets_[v + 1] - offsets_[v];
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
  check_vertex(v);
  return std::span<const VertexId>(adjacency_).subspan(offsets_[v], offsets_[v + 1] - offsets_[v]);
}

std::size_t Graph::min_degree() const {
  std::size_t best = 0;
  for (std::size_t v = 0; v < vertex_count(); ++v) {
    std::size_t d = offsets_[v + 1] - offsets_[v];
    if (v == 0 || d < best)
      best = d;
  }
  return best;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (std::size_t v = 0; v < vertex_count(); ++v)
    best = std::max(best, offsets_[v + 1] - offsets_[v]);
  return best;
}

Graph make_graph(std::size_t vertex_count,
                 std::span<const std::pair<VertexId, VertexId>> edges) {
  Graph g;
  g.edges_.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a >= vertex_count || b >= vertex_count)
      throw VertexOutOfRange("edge " + edge_text(a, b) + " references a vertex outside 0.." +
                             std::to_string(vertex_count) + ")");
    if (a == b)
      throw SelfLoop("edge " + edge_text(a, b) + " is a self-loop");
    g.edges_.push_back(a < b ? Edge{a, b} : Edge{b, a});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
  if (dup != g.edges_.end())
    throw DuplicateEdge("edge " + edge_text(dup->u, dup->v) + " appears more than once");

  std::vector<std::size_t> deg(vertex_count, 0);
  for (const Edge &e : g.edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  g.offsets_.assign(vertex_count + 1, 0);
  std::partial_sum(deg.begin(), deg.end(), g.offsets_.begin() + 1);

  // Lexicographic edge order leaves every adjacency row sorted.
  g.adjacency_.resize(2 * g.edges_.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const Edge &e : g.edges_) {
    g.adjacency_[cursor[e.u]++] = e.v;
    g.adjacency_[cursor[e.v]++] = e.u;
  }
  return g;
}

bool is_connected(const Graph &g) {
  const std::size_t n = g.vertex_count();
  if (n == 0)
    return true;
  std::vector<bool> seen(n, false);
  std::vector<VertexId> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

EdgePartition::EdgePartition(
    std::initializer_list<std::pair<const DegreePair, std::uint64_t>> init) {
  for (const auto &[pair, count] : init)
    add(pair.lo, pair.hi, count);
}

void EdgePartition::add(std::uint32_t a, std::uint32_t b, std::uint64_t count) {
  if (a == 0 || b == 0)
    throw Error("degree pair (" + std::to_string(a) + ", " + std::to_string(b) +
                ") has a zero degree");
  if (count == 0)
    return;
  classes_[DegreePair::of(a, b)] += count;
}

std::uint64_t EdgePartition::count(std::uint32_t a, std::uint32_t b) const {
  auto it = classes_.find(DegreePair::of(a, b));
  return it == classes_.end() ? 0 : it->second;
}

std::uint64_t EdgePartition::total() const {
  std::uint64_t sum = 0;
  for (const auto &[_, c] : classes_)
    sum += c;
  return sum;
}

EdgePartition edge_partition(const Graph &g) {
  EdgePartition p;
  for (const Edge &e : g.edges())
    p.add(static_cast<std::uint32_t>(g.degree(e.u)), static_cast<std::uint32_t>(g.degree(e.v)));
  return p;
}

} // namespace polyhex
