#include "polyhex/closed_form.hpp"

#include "polyhex/error.hpp"
#include "polyhex/parallel.hpp"

#include <optional>
#include <string>

namespace polyhex {

std::string_view provenance_name(Provenance p) {
  switch (p) {
  case Provenance::PaperStated:
    return "paper_stated";
  case Provenance::PaperProof:
    return "paper_proof";
  case Provenance::OracleFitted:
    return "oracle_fitted";
  }
  return "unknown";
}

std::vector<ClosedForm> paper_forms() {
  const Rational a(2187, 64);
  return {
      {a, Rational(-573, 64), TubeKind::Armchair, "azi", Provenance::PaperStated},
      {a, Rational(-807, 32), TubeKind::Armchair, "azi", Provenance::PaperProof},
      {a, Rational(-597, 64), TubeKind::Zigzag, "azi", Provenance::PaperStated},
      {a, Rational(-434, 64), TubeKind::Zigzag, "azi", Provenance::PaperProof},
  };
}

Rational evaluate(const ClosedForm &f, std::int64_t m, std::int64_t n) {
  if (m < 2)
    throw InvalidSpec("m must be ≥ 2 (got " + std::to_string(m) + ")");
  if (n < 1)
    throw InvalidSpec("n must be ≥ 1 (got " + std::to_string(n) + ")");
  return f.a * Rational(m) * Rational(n) + f.b * Rational(m);
}

IndexOracle edgewise_oracle(IndexKind kind) {
  return [kind](const NanotubeSpec &spec) { return edgewise_index(build_nanotube(spec), kind); };
}

std::vector<GridPoint> default_fit_samples() { return {{2, 1}, {2, 2}, {3, 1}, {3, 2}}; }

ClosedForm fit_closed_form(TubeKind kind, std::string_view index_name,
                           const std::vector<GridPoint> &samples, const IndexOracle &oracle) {
  struct Row {
    Rational mn, m, value;
  };
  std::vector<Row> rows;
  rows.reserve(samples.size());
  for (const GridPoint &p : samples) {
    IndexValue v = oracle(NanotubeSpec{kind, p.m, p.n});
    if (!v.exact)
      throw InconsistentSamples(std::string(index_name) + " at (" + std::to_string(p.m) + ", " +
                                std::to_string(p.n) +
                                ") has no exact rational value; no rational a*mn + b*m fits it");
    rows.push_back({Rational(p.m) * Rational(p.n), Rational(p.m), *v.exact});
  }

  std::optional<ClosedForm> fitted;
  for (std::size_t i = 0; i < rows.size() && !fitted; ++i) {
    for (std::size_t j = i + 1; j < rows.size() && !fitted; ++j) {
      Rational det = rows[i].mn * rows[j].m - rows[j].mn * rows[i].m;
      if (det == Rational(0))
        continue;
      Rational a = (rows[i].value * rows[j].m - rows[j].value * rows[i].m) / det;
      Rational b = (rows[i].mn * rows[j].value - rows[j].mn * rows[i].value) / det;
      fitted = ClosedForm{a, b, kind, std::string(index_name), Provenance::OracleFitted};
    }
  }
  if (!fitted)
    throw SingularSystem("samples do not contain two linearly independent (mn, m) rows");

  for (std::size_t i = 0; i < rows.size(); ++i) {
    Rational predicted = fitted->a * rows[i].mn + fitted->b * rows[i].m;
    if (predicted != rows[i].value)
      throw InconsistentSamples("sample (" + std::to_string(samples[i].m) + ", " +
                                std::to_string(samples[i].n) + ") has value " +
                                rows[i].value.str() + " but the fit predicts " + predicted.str());
  }
  return *fitted;
}

ClosedForm fit_closed_form(TubeKind kind, IndexKind index, const std::vector<GridPoint> &samples) {
  return fit_closed_form(kind, index_name(index), samples, edgewise_oracle(index));
}

std::size_t FormCheck::mismatch_count() const {
  std::size_t count = 0;
  for (const Discrepancy &d : points)
    if (d.difference != Rational(0))
      ++count;
  return count;
}

Verdict DiscrepancyReport::paper_verdict() const {
  for (const FormCheck &c : checks)
    if (c.form.provenance == Provenance::PaperStated && c.verdict == Verdict::Inconsistent)
      return Verdict::Inconsistent;
  return Verdict::Consistent;
}

DiscrepancyReport verify_paper_forms(IntRange m_range, IntRange n_range,
                                     const std::vector<TubeKind> &kinds, unsigned jobs) {
  if (m_range.empty() || n_range.empty())
    throw InvalidSpec("empty range");
  if (m_range.lo < 2)
    throw InvalidSpec("m must be ≥ 2 (got " + std::to_string(m_range.lo) + ")");
  if (n_range.lo < 1)
    throw InvalidSpec("n must be ≥ 1 (got " + std::to_string(n_range.lo) + ")");

  std::vector<GridPoint> grid;
  for (std::int64_t m = m_range.lo; m <= m_range.hi; ++m)
    for (std::int64_t n = n_range.lo; n <= n_range.hi; ++n)
      grid.push_back({m, n});

  DiscrepancyReport report{m_range, n_range, {}};
  const IndexOracle oracle = edgewise_oracle(IndexKind::Azi);
  const std::vector<ClosedForm> published = paper_forms();

  for (TubeKind kind : kinds) {
    std::vector<Rational> truth(grid.size());
    parallel_for(grid.size(), jobs, [&](std::size_t i) {
      truth[i] = *oracle(NanotubeSpec{kind, grid[i].m, grid[i].n}).exact;
    });

    std::vector<ClosedForm> forms;
    for (const ClosedForm &f : published)
      if (f.kind == kind)
        forms.push_back(f);
    forms.push_back(fit_closed_form(kind, "azi", default_fit_samples(), oracle));

    for (const ClosedForm &f : forms) {
      FormCheck check{f, {}, Verdict::Consistent};
      check.points.reserve(grid.size());
      for (std::size_t i = 0; i < grid.size(); ++i) {
        Rational value = evaluate(f, grid[i].m, grid[i].n);
        Rational diff = value - truth[i];
        if (diff != Rational(0))
          check.verdict = Verdict::Inconsistent;
        check.points.push_back({grid[i].m, grid[i].n, value, truth[i], diff});
      }
      report.checks.push_back(std::move(check));
    }
  }
  return report;
}

} // namespace polyhex
