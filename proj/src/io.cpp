#include "polyhex/io.hpp"

#include <cstdio>
#include <ostream>

namespace polyhex {

OutputRecord make_output_record(const NanotubeSpec &spec, const std::vector<IndexKind> &indices) {
  const Graph g = build_nanotube(spec);
  OutputRecord record{spec, g.vertex_count(), g.edge_count(), edge_partition(g), {}};
  for (IndexKind kind : indices)
    record.indices.emplace_back(kind, index_from_partition(record.partition, kind));
  return record;
}

std::string format_float(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

Json rational_json(const Rational &r) {
  return Json{{"num", r.num()}, {"den", r.den()}, {"decimal", r.decimal()}};
}

Json index_value_json(const IndexValue &v) {
  if (v.exact)
    return rational_json(*v.exact);
  return Json{{"decimal", format_float(v.approx)}};
}

Json partition_json(const EdgePartition &p) {
  Json classes = Json::array();
  for (const auto &[pair, count] : p.classes())
    classes.push_back(Json{{"degrees", {pair.lo, pair.hi}}, {"count", count}});
  return classes;
}

Json graph_json(const NanotubeSpec &spec, const Graph &g) {
  Json edges = Json::array();
  for (const Edge &e : g.edges())
    edges.push_back({e.u, e.v});
  return Json{{"kind", kind_name(spec.kind)}, {"m", spec.m},          {"n", spec.n},
              {"vertex_count", g.vertex_count()}, {"edge_count", g.edge_count()},
              {"edges", std::move(edges)}};
}

Json output_record_json(const OutputRecord &record) {
  Json indices = Json::object();
  for (const auto &[kind, value] : record.indices)
    indices[std::string(index_name(kind))] = index_value_json(value);
  return Json{{"kind", kind_name(record.spec.kind)},
              {"m", record.spec.m},
              {"n", record.spec.n},
              {"vertex_count", record.vertex_count},
              {"edge_count", record.edge_count},
              {"partition", partition_json(record.partition)},
              {"indices", std::move(indices)}};
}

Json report_json(const DiscrepancyReport &report) {
  Json forms = Json::array();
  for (const FormCheck &check : report.checks) {
    Json points = Json::array();
    for (const Discrepancy &d : check.points)
      points.push_back(Json{{"m", d.m},
                            {"n", d.n},
                            {"form_value", rational_json(d.form_value)},
                            {"oracle_value", rational_json(d.oracle_value)},
                            {"difference", rational_json(d.difference)}});
    forms.push_back(
        Json{{"kind", kind_name(check.form.kind)},
             {"index", check.form.index_name},
             {"provenance", provenance_name(check.form.provenance)},
             {"a", rational_json(check.form.a)},
             {"b", rational_json(check.form.b)},
             {"verdict", check.verdict == Verdict::Consistent ? "consistent" : "inconsistent"},
             {"point_count", check.points.size()},
             {"mismatch_count", check.mismatch_count()},
             {"points", std::move(points)}});
  }
  return Json{
      {"m_range", {report.m_range.lo, report.m_range.hi}},
      {"n_range", {report.n_range.lo, report.n_range.hi}},
      {"paper_verdict",
       report.paper_verdict() == Verdict::Consistent ? "consistent" : "inconsistent"},
      {"forms", std::move(forms)}};
}

void write_dot(std::ostream &os, const NanotubeSpec &spec, const Graph &g) {
  auto name = [&](VertexId v) {
    LatticePosition p = lattice_position(spec, v);
    return "\"" + std::to_string(p.row) + "_" + std::to_string(p.column) + "\"";
  };
  os << "graph \"" << (spec.kind == TubeKind::Armchair ? "TUAC6" : "TUZC6") << "[" << spec.m
     << "," << spec.n << "]\" {\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    os << "  " << name(v) << ";\n";
  for (const Edge &e : g.edges())
    os << "  " << name(e.u) << " -- " << name(e.v) << ";\n";
  os << "}\n";
}

std::string sweep_row(const OutputRecord &record) {
  std::string azi_num, azi_den, azi, randic, abc;
  for (const auto &[kind, value] : record.indices) {
    switch (kind) {
    case IndexKind::Azi:
      azi_num = std::to_string(value.exact->num());
      azi_den = std::to_string(value.exact->den());
      azi = value.exact->decimal();
      break;
    case IndexKind::Randic:
      randic = format_float(value.approx);
      break;
    case IndexKind::Abc:
      abc = format_float(value.approx);
      break;
    }
  }
  std::string row;
  for (const std::string &cell :
       {std::string(kind_name(record.spec.kind)), std::to_string(record.spec.m),
        std::to_string(record.spec.n), std::to_string(record.vertex_count),
        std::to_string(record.edge_count), azi_num, azi_den, azi, randic, abc}) {
    if (!row.empty())
      row += ',';
    row += cell;
  }
  return row;
}

} // namespace polyhex
