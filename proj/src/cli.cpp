#include "polyhex/cli.hpp"

#include "polyhex/error.hpp"
#include "polyhex/io.hpp"
#include "polyhex/parallel.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>
#include <thread>

namespace polyhex::cli {

namespace {

std::int64_t parse_int(std::string_view text, std::string_view what) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw InvalidSpec("invalid " + std::string(what) + " '" + std::string(text) + "'");
  return value;
}

std::vector<TubeKind> kinds_from(const std::string &kind) {
  if (kind == "both")
    return {TubeKind::Armchair, TubeKind::Zigzag};
  return {*parse_tube_kind(kind)};
}

std::vector<IndexKind> indices_from(const std::vector<std::string> &names) {
  std::vector<IndexKind> out;
  for (const std::string &name : names) {
    if (name == "all")
      return {IndexKind::Azi, IndexKind::Randic, IndexKind::Abc};
    auto kind = parse_index_kind(name);
    if (!kind)
      throw InvalidSpec("unknown index '" + name + "'");
    if (std::find(out.begin(), out.end(), *kind) == out.end())
      out.push_back(*kind);
  }
  return out;
}

unsigned default_jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

struct Options {
  std::string kind;
  std::int64_t m = 0;
  std::int64_t n = 0;
  std::string format = "json";
  std::string index = "all";
  std::vector<std::string> indices{"all"};
  std::string m_range = "2:12";
  std::string n_range = "1:12";
  std::string out_path;
  unsigned jobs = default_jobs();
};

int cmd_build(const Options &o, std::ostream &out) {
  NanotubeSpec spec{*parse_tube_kind(o.kind), o.m, o.n};
  Graph g = build_nanotube(spec);
  if (o.format == "dot")
    write_dot(out, spec, g);
  else
    out << graph_json(spec, g).dump() << '\n';
  return kSuccess;
}

int cmd_index(const Options &o, std::ostream &out) {
  NanotubeSpec spec{*parse_tube_kind(o.kind), o.m, o.n};
  OutputRecord record = make_output_record(spec, indices_from({o.index}));
  out << output_record_json(record).dump(2) << '\n';
  return kSuccess;
}

int cmd_verify(const Options &o, std::ostream &out, std::ostream &err) {
  IntRange m_range = parse_range(o.m_range);
  IntRange n_range = parse_range(o.n_range);
  DiscrepancyReport report = verify_paper_forms(m_range, n_range, kinds_from(o.kind), o.jobs);
  out << report_json(report).dump(2) << '\n';
  for (const FormCheck &c : report.checks)
    err << kind_name(c.form.kind) << ' ' << provenance_name(c.form.provenance) << ": b = "
        << c.form.b << ", " << c.mismatch_count() << '/' << c.points.size() << " mismatches\n";
  return report.paper_verdict() == Verdict::Consistent ? kSuccess : kInconsistent;
}

int cmd_sweep(const Options &o, std::ostream &err) {
  IntRange m_range = parse_range(o.m_range);
  IntRange n_range = parse_range(o.n_range);
  std::vector<IndexKind> indices = indices_from(o.indices);

  std::vector<NanotubeSpec> grid;
  for (TubeKind kind : kinds_from(o.kind))
    for (std::int64_t m = m_range.lo; m <= m_range.hi; ++m)
      for (std::int64_t n = n_range.lo; n <= n_range.hi; ++n)
        grid.push_back({kind, m, n});
  for (const NanotubeSpec &spec : grid)
    validate(spec);

  std::vector<std::string> rows(grid.size());
  parallel_for(grid.size(), o.jobs,
               [&](std::size_t i) { rows[i] = sweep_row(make_output_record(grid[i], indices)); });

  std::ofstream file(o.out_path, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "error: cannot open '" << o.out_path << "' for writing\n";
    return kUsage;
  }
  file << kSweepHeader << '\n';
  for (const std::string &row : rows)
    file << row << '\n';
  file.close();
  if (!file) {
    err << "error: failed writing '" << o.out_path << "'\n";
    return kUsage;
  }
  err << "wrote " << rows.size() << " rows to " << o.out_path << '\n';
  return kSuccess;
}

} // namespace

IntRange parse_range(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw InvalidSpec("range '" + std::string(text) + "' must have the form lo:hi");
  IntRange r{parse_int(text.substr(0, colon), "range bound"),
             parse_int(text.substr(colon + 1), "range bound")};
  if (r.empty())
    throw InvalidSpec("empty range '" + std::string(text) + "'");
  return r;
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Polyhex nanotube graphs and degree-based topological indices", "polyhex"};
  app.require_subcommand(1);
  Options o;

  const std::vector<std::string> tube_kinds{"armchair", "zigzag"};
  const std::vector<std::string> any_kind{"armchair", "zigzag", "both"};
  auto add_tube = [&](CLI::App *sub) {
    sub->add_option("--kind", o.kind, "armchair or zigzag")->required()->check(CLI::IsMember(tube_kinds));
    sub->add_option("--m", o.m, "hexagons around the circumference (m >= 2)")->required();
    sub->add_option("--n", o.n, "rows (n >= 1)")->required();
  };
  auto add_grid = [&](CLI::App *sub) {
    sub->add_option("--m-range", o.m_range, "inclusive lo:hi range of m")->capture_default_str();
    sub->add_option("--n-range", o.n_range, "inclusive lo:hi range of n")->capture_default_str();
    sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  };

  CLI::App *build = app.add_subcommand("build", "emit the nanotube graph as DOT or JSON");
  add_tube(build);
  build->add_option("--format", o.format, "dot or json")
      ->capture_default_str()
      ->check(CLI::IsMember({"dot", "json"}));

  CLI::App *index = app.add_subcommand("index", "compute topological indices of one tube");
  add_tube(index);
  index->add_option("--index", o.index, "azi, randic, abc or all")
      ->capture_default_str()
      ->check(CLI::IsMember({"azi", "randic", "abc", "all"}));

  CLI::App *verify = app.add_subcommand("verify", "check published AZI closed forms against the edgewise sum");
  o.kind = "both";
  verify->add_option("--kind", o.kind, "armchair, zigzag or both")
      ->capture_default_str()
      ->check(CLI::IsMember(any_kind));
  add_grid(verify);

  CLI::App *sweep = app.add_subcommand("sweep", "write index values over a grid to CSV");
  sweep->add_option("--kind", o.kind, "armchair, zigzag or both")
      ->capture_default_str()
      ->check(CLI::IsMember(any_kind));
  add_grid(sweep);
  sweep->add_option("--indices", o.indices, "comma-separated subset of azi,randic,abc or all")
      ->delimiter(',')
      ->check(CLI::IsMember({"azi", "randic", "abc", "all"}));
  sweep->add_option("--out", o.out_path, "output CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (build->parsed())
      return cmd_build(o, out);
    if (index->parsed())
      return cmd_index(o, out);
    if (verify->parsed())
      return cmd_verify(o, out, err);
    return cmd_sweep(o, err);
  } catch (const InvalidSpec &e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

} // namespace polyhex::cli
