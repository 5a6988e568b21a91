#pragma once

#include "polyhex/graph.hpp"
#include "polyhex/rational.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace polyhex {

/// Value of a topological index. `approx` always holds; `exact` only for rational-valued indices.
struct IndexValue {
  std::optional<Rational> exact;
  double approx = 0.0;

  static IndexValue from_exact(const Rational &r) { return {r, r.to_double()}; }
  static IndexValue from_approx(double x) { return {std::nullopt, x}; }
};

enum class IndexKind { Randic, Abc, Azi };

std::string_view index_name(IndexKind kind);
/// Parses "randic", "abc" or "azi". Returns nullopt for anything else.
std::optional<IndexKind> parse_index_kind(std::string_view name);

/**
 * Symmetric per-edge term of a degree-based index, f(d_u, d_v).
 *
 * The term may throw UndefinedTerm for degree pairs where it has no value.
 */
struct EdgeFunction {
  std::string name;
  std::function<IndexValue(std::uint32_t, std::uint32_t)> term;
};

EdgeFunction edge_function(IndexKind kind);

/// (d_u d_v / (d_u + d_v - 2))^3, exactly. Throws UndefinedTerm when d_u + d_v == 2.
Rational azi_term(std::uint32_t du, std::uint32_t dv);
/// 1 / sqrt(d_u d_v)
double randic_term(std::uint32_t du, std::uint32_t dv);
/// sqrt((d_u + d_v - 2) / (d_u d_v))
double abc_term(std::uint32_t du, std::uint32_t dv);

// Edgewise sums over g.edges() in canonical order.
IndexValue azi(const Graph &g);
IndexValue randic(const Graph &g);
IndexValue abc(const Graph &g);
IndexValue edgewise_index(const Graph &g, const EdgeFunction &f);
IndexValue edgewise_index(const Graph &g, IndexKind kind);

/**
 * Sum of count * f(lo, hi) over the partition's classes, in class order.
 *
 * The result is exact when every term is exact. Throws UndefinedTerm naming
 * the class when f is not defined on it.
 */
IndexValue index_from_partition(const EdgePartition &p, const EdgeFunction &f);
IndexValue index_from_partition(const EdgePartition &p, IndexKind kind);

} // namespace polyhex
