#pragma once

#include "polyhex/closed_form.hpp"
#include "polyhex/graph.hpp"
#include "polyhex/indices.hpp"
#include "polyhex/nanotube.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace polyhex {

using Json = nlohmann::ordered_json;

/// Summary of one tube: counts, degree partition and the requested indices.
struct OutputRecord {
  NanotubeSpec spec;
  std::uint64_t vertex_count = 0;
  std::uint64_t edge_count = 0;
  EdgePartition partition;
  std::vector<std::pair<IndexKind, IndexValue>> indices;
};

/// Builds the tube, partitions it and evaluates each index from the partition.
OutputRecord make_output_record(const NanotubeSpec &spec, const std::vector<IndexKind> &indices);

/// Ordered list of classes: [{"degrees": [lo, hi], "count": c}, ...]
Json partition_json(const EdgePartition &p);
/// {"num", "den", "decimal"} for exact values, {"decimal"} otherwise.
Json index_value_json(const IndexValue &v);
Json rational_json(const Rational &r);

Json graph_json(const NanotubeSpec &spec, const Graph &g);
Json output_record_json(const OutputRecord &record);
Json report_json(const DiscrepancyReport &report);

/// Undirected DOT; nodes are named "row_column".
void write_dot(std::ostream &os, const NanotubeSpec &spec, const Graph &g);

/// 15 significant digits.
std::string format_float(double x);

inline constexpr const char *kSweepHeader = "kind,m,n,vertices,edges,azi_num,azi_den,azi,randic,abc";

/// One CSV line (no newline) in kSweepHeader column order; absent indices leave empty cells.
std::string sweep_row(const OutputRecord &record);

} // namespace polyhex
