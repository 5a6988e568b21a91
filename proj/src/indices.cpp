#include "polyhex/indices.hpp"

#include "polyhex/error.hpp"

#include <cmath>

namespace polyhex {

namespace {

std::string pair_text(std::uint32_t a, std::uint32_t b) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

// Exact while every term is exact; the float sum is always kept.
class Accumulator {
public:
  void add(const IndexValue &term, std::uint64_t count) {
    if (exact_ && term.exact)
      *exact_ += *term.exact * Rational(static_cast<std::int64_t>(count));
    else
      exact_.reset();
    approx_ += term.approx * static_cast<double>(count);
  }

  IndexValue result() const {
    if (exact_)
      return IndexValue::from_exact(*exact_);
    return IndexValue::from_approx(approx_);
  }

private:
  std::optional<Rational> exact_ = Rational(0);
  double approx_ = 0.0;
};

} // namespace

std::string_view index_name(IndexKind kind) {
  switch (kind) {
  case IndexKind::Randic:
    return "randic";
  case IndexKind::Abc:
    return "abc";
  case IndexKind::Azi:
    return "azi";
  }
  return "unknown";
}

std::optional<IndexKind> parse_index_kind(std::string_view name) {
  for (IndexKind k : {IndexKind::Randic, IndexKind::Abc, IndexKind::Azi})
    if (index_name(k) == name)
      return k;
  return std::nullopt;
}

Rational azi_term(std::uint32_t du, std::uint32_t dv) {
  if (du == 0 || dv == 0)
    throw UndefinedTerm("AZI term undefined for zero degree in pair " + pair_text(du, dv));
  if (du + dv == 2)
    throw UndefinedTerm("AZI term undefined for degree pair " + pair_text(du, dv) +
                        ": d_u + d_v - 2 = 0");
  Rational base(static_cast<std::int64_t>(du) * dv, static_cast<std::int64_t>(du) + dv - 2);
  return pow(base, 3);
}

double randic_term(std::uint32_t du, std::uint32_t dv) {
  if (du == 0 || dv == 0)
    throw UndefinedTerm("Randic term undefined for degree pair " + pair_text(du, dv));
  return 1.0 / std::sqrt(static_cast<double>(du) * dv);
}

double abc_term(std::uint32_t du, std::uint32_t dv) {
  if (du == 0 || dv == 0)
    throw UndefinedTerm("ABC term undefined for degree pair " + pair_text(du, dv));
  return std::sqrt((static_cast<double>(du) + dv - 2.0) / (static_cast<double>(du) * dv));
}

EdgeFunction edge_function(IndexKind kind) {
  switch (kind) {
  case IndexKind::Randic:
    return {"randic", [](std::uint32_t a, std::uint32_t b) {
              return IndexValue::from_approx(randic_term(a, b));
            }};
  case IndexKind::Abc:
    return {"abc", [](std::uint32_t a, std::uint32_t b) {
              return IndexValue::from_approx(abc_term(a, b));
            }};
  case IndexKind::Azi:
    return {"azi", [](std::uint32_t a, std::uint32_t b) {
              return IndexValue::from_exact(azi_term(a, b));
            }};
  }
  throw Error("unknown index kind");
}

IndexValue edgewise_index(const Graph &g, const EdgeFunction &f) {
  Accumulator acc;
  for (const Edge &e : g.edges()) {
    auto du = static_cast<std::uint32_t>(g.degree(e.u));
    auto dv = static_cast<std::uint32_t>(g.degree(e.v));
    try {
      acc.add(f.term(du, dv), 1);
    } catch (const UndefinedTerm &ex) {
      throw UndefinedTerm(std::string(ex.what()) + " at edge " + pair_text(e.u, e.v));
    }
  }
  return acc.result();
}

IndexValue edgewise_index(const Graph &g, IndexKind kind) {
  return edgewise_index(g, edge_function(kind));
}

IndexValue azi(const Graph &g) { return edgewise_index(g, IndexKind::Azi); }
IndexValue randic(const Graph &g) { return edgewise_index(g, IndexKind::Randic); }
IndexValue abc(const Graph &g) { return edgewise_index(g, IndexKind::Abc); }

IndexValue index_from_partition(const EdgePartition &p, const EdgeFunction &f) {
  Accumulator acc;
  for (const auto &[pair, count] : p.classes()) {
    try {
      acc.add(f.term(pair.lo, pair.hi), count);
    } catch (const UndefinedTerm &ex) {
      throw UndefinedTerm(std::string(ex.what()) + " in class " + pair_text(pair.lo, pair.hi));
    }
  }
  return acc.result();
}

IndexValue index_from_partition(const EdgePartition &p, IndexKind kind) {
  return index_from_partition(p, edge_function(kind));
}

} // namespace polyhex
