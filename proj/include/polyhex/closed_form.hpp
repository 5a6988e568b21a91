#pragma once

#include "polyhex/indices.hpp"
#include "polyhex/nanotube.hpp"
#include "polyhex/rational.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace polyhex {

enum class Provenance { PaperStated, PaperProof, OracleFitted };

std::string_view provenance_name(Provenance p);

/// Index of a nanotube family written as a * m * n + b * m.
struct ClosedForm {
  Rational a;
  Rational b;
  TubeKind kind = TubeKind::Armchair;
  std::string index_name = "azi";
  Provenance provenance = Provenance::PaperStated;
};

/**
 * The four published AZI closed forms, in the order armchair stated,
 * armchair proof, zigzag stated, zigzag proof. They are kept verbatim even
 * though none of them matches the edgewise sum.
 */
std::vector<ClosedForm> paper_forms();

/// Exact a*m*n + b*m. Throws InvalidSpec unless m >= 2 and n >= 1.
Rational evaluate(const ClosedForm &f, std::int64_t m, std::int64_t n);

struct GridPoint {
  std::int64_t m = 0;
  std::int64_t n = 0;

  friend auto operator<=>(const GridPoint &, const GridPoint &) = default;
};

/// Returns the index value of the tube at a grid point.
using IndexOracle = std::function<IndexValue(const NanotubeSpec &)>;

/// Builds the tube and sums the index edge by edge.
IndexOracle edgewise_oracle(IndexKind kind);

/**
 * Solves value(m, n) = a*m*n + b*m exactly over the given samples.
 *
 * The first two linearly independent rows determine (a, b); every other
 * sample must then match exactly. Throws SingularSystem when no independent
 * pair exists and InconsistentSamples when a sample disagrees or an oracle
 * value is not an exact rational.
 */
ClosedForm fit_closed_form(TubeKind kind, std::string_view index_name,
                           const std::vector<GridPoint> &samples, const IndexOracle &oracle);

/// Fit against the edgewise oracle of the named index.
ClosedForm fit_closed_form(TubeKind kind, IndexKind index, const std::vector<GridPoint> &samples);

/// Sample grid {(2,1), (2,2), (3,1), (3,2)}.
std::vector<GridPoint> default_fit_samples();

struct IntRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  bool empty() const { return lo > hi; }
  std::int64_t size() const { return empty() ? 0 : hi - lo + 1; }
};

enum class Verdict { Consistent, Inconsistent };

struct Discrepancy {
  std::int64_t m = 0;
  std::int64_t n = 0;
  Rational form_value;
  Rational oracle_value;
  Rational difference; // form_value - oracle_value
};

struct FormCheck {
  ClosedForm form;
  std::vector<Discrepancy> points; // sorted by (m, n)
  Verdict verdict = Verdict::Consistent;

  std::size_t mismatch_count() const;
};

struct DiscrepancyReport {
  IntRange m_range;
  IntRange n_range;
  std::vector<FormCheck> checks;

  /// Consistent iff every PaperStated form is consistent.
  Verdict paper_verdict() const;
};

/**
 * Checks every paper form of the requested kinds, plus the oracle-fitted
 * form for each kind, against the edgewise AZI on every grid point.
 * Grid points are evaluated on up to `jobs` threads; the report order is
 * fixed (kind, provenance, m, n) regardless.
 */
DiscrepancyReport verify_paper_forms(IntRange m_range, IntRange n_range,
                                     const std::vector<TubeKind> &kinds = {TubeKind::Armchair,
                                                                           TubeKind::Zigzag},
                                     unsigned jobs = 1);

} // namespace polyhex
