#include "polyhex/nanotube.hpp"

#include "polyhex/error.hpp"

#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace polyhex {

std::string_view kind_name(TubeKind kind) {
  return kind == TubeKind::Armchair ? "armchair" : "zigzag";
}

std::optional<TubeKind> parse_tube_kind(std::string_view name) {
  if (name == "armchair")
    return TubeKind::Armchair;
  if (name == "zigzag")
    return TubeKind::Zigzag;
  return std::nullopt;
}

void validate(const NanotubeSpec &spec) {
  if (spec.m < 2)
    throw InvalidSpec("m must be ≥ 2 (got " + std::to_string(spec.m) + ")");
  if (spec.n < 1)
    throw InvalidSpec("n must be ≥ 1 (got " + std::to_string(spec.n) + ")");
  // Every count formula involves 3mn; keep it well inside 64 bits.
  constexpr std::int64_t limit = std::int64_t{1} << 40;
  if (spec.m > limit / spec.n)
    throw InvalidSpec("m·n must be ≤ 2^40 (got m = " + std::to_string(spec.m) +
                      ", n = " + std::to_string(spec.n) + ")");
}

std::int64_t row_count(const NanotubeSpec &spec) {
  return spec.kind == TubeKind::Armchair ? spec.n + 2 : spec.n + 1;
}

std::int64_t row_width(const NanotubeSpec &spec) { return 2 * spec.m; }

VertexId vertex_id(const NanotubeSpec &spec, std::int64_t row, std::int64_t column) {
  return static_cast<VertexId>(row * row_width(spec) + column);
}

LatticePosition lattice_position(const NanotubeSpec &spec, VertexId v) {
  const std::int64_t w = row_width(spec);
  return {static_cast<std::int64_t>(v) / w, static_cast<std::int64_t>(v) % w};
}

std::uint64_t expected_vertex_count(const NanotubeSpec &spec) {
  validate(spec);
  const auto m = static_cast<std::uint64_t>(spec.m);
  const auto n = static_cast<std::uint64_t>(spec.n);
  return spec.kind == TubeKind::Armchair ? 2 * m * (n + 2) : 2 * m * n + 2 * m;
}

std::uint64_t expected_edge_count(const NanotubeSpec &spec) {
  validate(spec);
  const auto m = static_cast<std::uint64_t>(spec.m);
  const auto n = static_cast<std::uint64_t>(spec.n);
  return spec.kind == TubeKind::Armchair ? 3 * m * n + 4 * m : 3 * m * n + 2 * m;
}

EdgePartition nanotube_partition(const NanotubeSpec &spec) {
  validate(spec);
  const auto m = static_cast<std::uint64_t>(spec.m);
  const auto n = static_cast<std::uint64_t>(spec.n);
  EdgePartition p;
  if (spec.kind == TubeKind::Armchair)
    p.add(2, 2, 2 * m);
  p.add(2, 3, 4 * m);
  p.add(3, 3, 3 * m * n - 2 * m);
  return p;
}

Graph build_nanotube(const NanotubeSpec &spec) {
  validate(spec);
  const std::uint64_t vertices = expected_vertex_count(spec);
  if (vertices > std::numeric_limits<VertexId>::max())
    throw InvalidSpec("tube has " + std::to_string(vertices) +
                      " vertices, more than a 32-bit vertex id can address");

  const std::int64_t width = row_width(spec);
  const std::int64_t rows = row_count(spec);
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(expected_edge_count(spec));
  auto id = [&](std::int64_t r, std::int64_t c) { return vertex_id(spec, r, c); };

  if (spec.kind == TubeKind::Zigzag) {
    for (std::int64_t r = 0; r < rows; ++r) {
      for (std::int64_t c = 0; c < width; ++c)
        edges.emplace_back(id(r, c), id(r, (c + 1) % width));
      if (r + 1 < rows)
        for (std::int64_t c = r % 2; c < width; c += 2)
          edges.emplace_back(id(r, c), id(r + 1, c));
    }
  } else {
    for (std::int64_t r = 0; r < rows; ++r) {
      if (r + 1 < rows)
        for (std::int64_t c = 0; c < width; ++c)
          edges.emplace_back(id(r, c), id(r + 1, c));
      for (std::int64_t i = 0; i < spec.m; ++i) {
        if (r % 2 == 0)
          edges.emplace_back(id(r, 2 * i), id(r, 2 * i + 1));
        else
          edges.emplace_back(id(r, 2 * i + 1), id(r, (2 * i + 2) % width));
      }
    }
  }
  return make_graph(vertices, edges);
}

} // namespace polyhex
