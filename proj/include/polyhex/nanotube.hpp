#pragma once

#include "polyhex/graph.hpp"

#include <cstdint>
#include <optional>
#include <string_view>

namespace polyhex {

enum class TubeKind { Armchair, Zigzag };

std::string_view kind_name(TubeKind kind);
/// Parses "armchair" or "zigzag".
std::optional<TubeKind> parse_tube_kind(std::string_view name);

/// Polyhex nanotube parameters: m hexagons around the circumference, n rows.
struct NanotubeSpec {
  TubeKind kind = TubeKind::Armchair;
  std::int64_t m = 2;
  std::int64_t n = 1;

  friend auto operator<=>(const NanotubeSpec &, const NanotubeSpec &) = default;
};

/// Throws InvalidSpec naming the violated bound (m >= 2, n >= 1).
void validate(const NanotubeSpec &spec);

/**
 * Lattice layout shared by both kinds.
 *
 * Vertices sit in rows of 2m, addressed as (row, column) with
 * id = row * 2m + column.
 *
 * Zigzag (TUZC6): rows 0..n. Each row is a 2m-cycle; between rows r and r+1
 * the vertical edges join (r, c)-(r+1, c) for every c with c = r (mod 2).
 *
 * Armchair (TUAC6): rows 0..n+1. Every column has vertical edges
 * (r, c)-(r+1, c). Within an even row the pairs (2i, 2i+1) are joined,
 * within an odd row the pairs (2i+1, 2i+2 mod 2m).
 *
 * Both tubes have open ends.
 */
std::int64_t row_count(const NanotubeSpec &spec);
std::int64_t row_width(const NanotubeSpec &spec);
VertexId vertex_id(const NanotubeSpec &spec, std::int64_t row, std::int64_t column);

struct LatticePosition {
  std::int64_t row = 0;
  std::int64_t column = 0;
};
LatticePosition lattice_position(const NanotubeSpec &spec, VertexId v);

/// Builds TUAC6[m, n] or TUZC6[m, n]. Throws InvalidSpec.
Graph build_nanotube(const NanotubeSpec &spec);

// Count formulas for the constructed tubes.
std::uint64_t expected_vertex_count(const NanotubeSpec &spec);
std::uint64_t expected_edge_count(const NanotubeSpec &spec);

/**
 * Degree partition of the tube without building it.
 *
 * Armchair: {(2,2): 2m, (2,3): 4m, (3,3): 3mn - 2m}
 * Zigzag:   {(2,3): 4m, (3,3): 3mn - 2m}
 */
EdgePartition nanotube_partition(const NanotubeSpec &spec);

} // namespace polyhex
