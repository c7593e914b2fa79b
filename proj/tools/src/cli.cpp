#include "bigen/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <exception>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <thread>
#include <vector>

#include "bigen/bigen.hpp"

namespace bigen::cli {
namespace fs = std::filesystem;
namespace {

struct FormatFlags {
  std::string format = "whitespace:1";
  std::string columns = "uv";
  bool extra_columns = false;
  std::optional<NodeIndex> n_u;
  std::optional<NodeIndex> n_v;

  EdgeListFormat edge_format() const {
    EdgeListFormat fmt;
    const auto colon = format.find(':');
    const std::string delim = format.substr(0, colon);
    if (delim == "whitespace" || delim == "ws") {
      fmt.delimiter = Delimiter::Whitespace;
    } else if (delim == "comma" || delim == "csv") {
      fmt.delimiter = Delimiter::Comma;
    } else {
      throw std::invalid_argument("unknown delimiter '" + delim + "' in --format (use whitespace or comma)");
    }
    if (colon != std::string::npos) {
      const std::string base = format.substr(colon + 1);
      if (base != "0" && base != "1") throw std::invalid_argument("index base in --format must be 0 or 1");
      fmt.index_base = base == "0" ? 0 : 1;
    }
    if (columns == "vu") {
      fmt.columns = ColumnOrder::VFirst;
    } else if (columns != "uv") {
      throw std::invalid_argument("--columns must be uv or vu");
    }
    fmt.ignore_extra_columns = extra_columns;
    return fmt;
  }

  SizeOverride sizes() const { return {n_u, n_v}; }
};

struct OutputFlags {
  std::string out_dir = ".";
  std::string side_labels = "u,v";
  bool profiles = false;
  bool binned = false;
  unsigned threads = 0;

  std::pair<std::string, std::string> sides() const {
    const auto comma = side_labels.find(',');
    if (comma == std::string::npos || comma == 0 || comma + 1 == side_labels.size()) {
      throw std::invalid_argument("--side-labels expects two names separated by a comma");
    }
    return {side_labels.substr(0, comma), side_labels.substr(comma + 1)};
  }
};

void add_format_flags(CLI::App* cmd, FormatFlags& f) {
  cmd->add_option("--format", f.format, "Edge list delimiter and index base, e.g. whitespace:1 or comma:0")
      ->capture_default_str();
  cmd->add_option("--columns", f.columns, "Column order of edge list lines (uv or vu)")->capture_default_str();
  cmd->add_flag("--extra-columns", f.extra_columns, "Ignore columns after the first two (weights, timestamps)");
  cmd->add_option("--n-u", f.n_u, "Force the U partition size");
  cmd->add_option("--n-v", f.n_v, "Force the V partition size");
}

void add_output_flags(CLI::App* cmd, OutputFlags& o) {
  cmd->add_option("--out-dir", o.out_dir, "Directory for written artifacts")->capture_default_str();
  cmd->add_option("--side-labels", o.side_labels, "Names of the two partitions used in file names")
      ->capture_default_str();
  cmd->add_flag("--profiles", o.profiles, "Write per-degree metamorphosis coefficients");
  cmd->add_flag("--binned", o.binned, "Write log-binned degree distributions and coefficient series");
  cmd->add_option("--threads", o.threads, "Worker threads (0 picks the hardware count)");
}

std::ofstream open_output(const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error(path.string() + ": cannot open for writing");
  return out;
}

void finish(std::ofstream& out, const fs::path& path) {
  out.flush();
  if (!out) throw std::runtime_error(path.string() + ": write failed");
}

template <typename Fn>
void write_file(const fs::path& path, Fn&& body) {
  auto out = open_output(path);
  body(out);
  finish(out, path);
}

DegreeTarget load_degrees(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(path.string() + ": cannot open for reading");
  try {
    return read_degrees(in);
  } catch (const std::exception& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

DegreeProfiles load_profile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(path.string() + ": cannot open for reading");
  try {
    return read_profile(in);
  } catch (const std::exception& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

std::string default_label(const std::string& path) { return fs::path(path).stem().string(); }

// Writes the summary plus whichever optional artifacts were requested.
GraphSummary measure_and_write(const BipartiteGraph& g, const std::string& label, const OutputFlags& o,
                               const MetricsOptions& opts) {
  const fs::path dir = o.out_dir;
  GraphSummary summary;
  if (o.profiles || o.binned) {
    const auto profile = measure_metamorphosis(g, opts);
    summary = summarize(g, profile);
    if (o.profiles) {
      write_file(dir / (label + ".profile.tsv"), [&](std::ostream& out) { write_profile(out, profile.degree_c); });
      write_file(dir / (label + ".degrees.tsv"), [&](std::ostream& out) { write_degrees(out, g.degrees()); });
    }
    if (o.binned) {
      const auto [su, sv] = o.sides();
      const auto put = [&](const std::string& name, const BinnedSeries& s) {
        write_file(dir / (label + "." + name + ".tsv"), [&](std::ostream& out) { write_binned(out, s); });
      };
      put("degree." + su, binned_degree_distribution(g, Side::U));
      put("degree." + sv, binned_degree_distribution(g, Side::V));
      put("meta." + su, binned_coefficients(profile.degree_c.u));
      put("meta." + sv, binned_coefficients(profile.degree_c.v));
    }
  } else {
    summary = summarize(g, opts);
  }
  write_file(dir / (label + ".summary.tsv"), [&](std::ostream& out) {
    write_summary(out, std::span(&summary, 1), std::span(&label, 1));
  });
  return summary;
}

void ensure_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw std::runtime_error(dir + ": " + ec.message());
}

// ---- measure ----

struct MeasureArgs {
  std::string input;
  std::string label;
  FormatFlags format;
  OutputFlags output;
};

int do_measure(const MeasureArgs& a, std::ostream& out, std::ostream& err) {
  ensure_dir(a.output.out_dir);
  const auto loaded = load_graph(a.input, a.format.edge_format(), a.format.sizes());
  if (loaded.duplicates) err << a.input << ": collapsed " << loaded.duplicates << " duplicate pairs\n";
  const std::string label = a.label.empty() ? default_label(a.input) : a.label;
  const auto summary = measure_and_write(loaded.graph, label, a.output, {.threads = a.output.threads});
  write_summary(out, std::span(&summary, 1), std::span(&label, 1));
  return 0;
}

// ---- generate ----

enum class Mode { ChungLu, Bter };

struct GenerateArgs {
  std::string graph;
  std::string degrees;
  std::string profile;
  std::string label;
  std::uint64_t seed = 1;
  std::uint32_t trials = 1;
  FormatFlags format;
  OutputFlags output;
};

void write_aggregate(std::ostream& out, std::span<const GraphSummary> rows) {
  out << "# stat\tn_u\tn_v\tedges\tcaterpillars\tbutterflies\tmetamorphosis\n";
  if (rows.empty()) return;
  const auto column = [&](auto field) {
    std::vector<double> v;
    for (const auto& r : rows) v.push_back(field(r));
    return v;
  };
  const std::vector<std::vector<double>> cols{
      column([](const GraphSummary& r) { return static_cast<double>(r.n_u); }),
      column([](const GraphSummary& r) { return static_cast<double>(r.n_v); }),
      column([](const GraphSummary& r) { return static_cast<double>(r.edges); }),
      column([](const GraphSummary& r) { return to_double(r.caterpillars); }),
      column([](const GraphSummary& r) { return to_double(r.butterflies); }),
      column([](const GraphSummary& r) { return r.metamorphosis; }),
  };
  out << "mean";
  for (const auto& c : cols) {
    double sum = 0.0;
    for (double x : c) sum += x;
    out << '\t' << format_sci3(sum / static_cast<double>(c.size()));
  }
  out << "\nmin";
  for (const auto& c : cols) out << '\t' << format_sci3(*std::min_element(c.begin(), c.end()));
  out << "\nmax";
  for (const auto& c : cols) out << '\t' << format_sci3(*std::max_element(c.begin(), c.end()));
  out << '\n';
}

int do_generate(Mode mode, const GenerateArgs& a, std::ostream& out) {
  if (a.graph.empty() == a.degrees.empty()) {
    throw std::invalid_argument("give exactly one of --graph or --degrees");
  }
  if (a.trials == 0) throw std::invalid_argument("--trials must be at least 1");
  const auto fmt = a.format.edge_format();

  DegreeTarget targets;
  DegreeProfiles profile;
  if (!a.graph.empty()) {
    const auto loaded = load_graph(a.graph, fmt, a.format.sizes());
    targets = loaded.graph.degrees();
    if (mode == Mode::Bter) {
      profile = a.profile.empty() ? metamorphosis_per_degree(loaded.graph, {.threads = a.output.threads})
                                  : load_profile(a.profile);
    }
  } else {
    targets = load_degrees(a.degrees);
    if (mode == Mode::Bter) {
      if (a.profile.empty()) throw std::invalid_argument("generate-bter from --degrees also needs --profile");
      profile = load_profile(a.profile);
    }
  }
  targets.require_balanced();
  ensure_dir(a.output.out_dir);

  const std::string label = a.label.empty() ? (mode == Mode::ChungLu ? "cl" : "bter") : a.label;
  std::vector<GraphSummary> summaries(a.trials);
  std::vector<std::string> labels(a.trials);
  std::vector<std::exception_ptr> failures(a.trials);
  std::atomic<std::uint32_t> next{0};

  const auto worker = [&] {
    for (std::uint32_t t; (t = next.fetch_add(1)) < a.trials;) {
      try {
        const GeneratorConfig cfg{.seed = a.seed + t, .trials = 1};
        const BipartiteGraph g = mode == Mode::ChungLu
                                     ? fast_bipartite_cl(targets, cfg).graph
                                     : bipartite_bter(targets, profile.u, profile.v, cfg).graph_in_input_order();
        labels[t] = label + ".t" + std::to_string(t);
        const fs::path path = fs::path(a.output.out_dir) / (labels[t] + ".edges");
        write_file(path, [&](std::ostream& o) { write_edge_list(o, g, fmt); });
        summaries[t] = measure_and_write(g, labels[t], a.output, {.threads = 1});
      } catch (...) {
        failures[t] = std::current_exception();
      }
    }
  };
  const unsigned hw = a.output.threads ? a.output.threads : std::max(1u, std::thread::hardware_concurrency());
  const unsigned workers = std::min<unsigned>(hw, a.trials);
  std::vector<std::jthread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  pool.clear();
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }

  const fs::path dir = a.output.out_dir;
  write_file(dir / (label + ".trials.tsv"), [&](std::ostream& o) { write_summary(o, summaries, labels); });
  write_file(dir / (label + ".aggregate.tsv"), [&](std::ostream& o) { write_aggregate(o, summaries); });
  write_summary(out, summaries, labels);
  write_aggregate(out, summaries);
  return 0;
}

// ---- compare ----

struct CompareArgs {
  std::vector<std::string> inputs;
  std::vector<std::string> labels;
  std::string name = "compare";
  FormatFlags format;
  OutputFlags output;
};

int do_compare(const CompareArgs& a, std::ostream& out) {
  if (a.inputs.size() < 2) throw std::invalid_argument("compare needs an original and at least one other graph");
  if (!a.labels.empty() && a.labels.size() != a.inputs.size()) {
    throw std::invalid_argument("--labels must name every input");
  }
  ensure_dir(a.output.out_dir);
  const auto fmt = a.format.edge_format();
  const auto [su, sv] = a.output.sides();

  std::vector<GraphSummary> rows;
  std::vector<std::string> labels;
  // series name -> per-input binned values
  std::vector<std::pair<std::string, std::vector<BinnedSeries>>> series{
      {"degree." + su, {}}, {"degree." + sv, {}}, {"meta." + su, {}}, {"meta." + sv, {}}};
  for (std::size_t k = 0; k < a.inputs.size(); ++k) {
    const auto g = load_graph(a.inputs[k], fmt, a.format.sizes()).graph;
    const auto profile = measure_metamorphosis(g, {.threads = a.output.threads});
    rows.push_back(summarize(g, profile));
    labels.push_back(a.labels.empty() ? default_label(a.inputs[k]) : a.labels[k]);
    series[0].second.push_back(binned_degree_distribution(g, Side::U));
    series[1].second.push_back(binned_degree_distribution(g, Side::V));
    series[2].second.push_back(binned_coefficients(profile.degree_c.u));
    series[3].second.push_back(binned_coefficients(profile.degree_c.v));
  }

  const fs::path dir = a.output.out_dir;
  write_file(dir / (a.name + ".summary.tsv"), [&](std::ostream& o) { write_summary(o, rows, labels); });
  write_file(dir / (a.name + ".binned.tsv"), [&](std::ostream& o) {
    o << "# series\tbin_lower";
    for (const auto& l : labels) o << '\t' << l;
    for (std::size_t k = 1; k < labels.size(); ++k) o << "\tdelta_" << labels[k];
    o << '\n';
    for (const auto& [name, per_input] : series) {
      std::size_t bins = 0;
      for (const auto& s : per_input) bins = std::max(bins, s.size());
      // Bins past a series' end hold no nodes.
      const auto mean_at = [&](std::size_t input, std::size_t b) {
        return b < per_input[input].size() ? per_input[input][b].mean : 0.0;
      };
      for (std::size_t b = 0; b < bins; ++b) {
        o << name << '\t' << (Degree{1} << b);
        for (std::size_t k = 0; k < per_input.size(); ++k) o << '\t' << format_real(mean_at(k, b));
        for (std::size_t k = 1; k < per_input.size(); ++k) o << '\t' << format_real(mean_at(k, b) - mean_at(0, b));
        o << '\n';
      }
    }
  });
  write_summary(out, rows, labels);
  return 0;
}

// ---- oracle-check ----

struct OracleArgs {
  std::uint32_t graphs = 200;
  std::uint64_t seed = 1;
  NodeIndex max_nodes = 30;
  unsigned threads = 0;
};

int do_oracle_check(const OracleArgs& a, std::ostream& out, std::ostream& err) {
  if (a.max_nodes < 1) throw std::invalid_argument("--max-nodes must be positive");
  std::uint32_t mismatches = 0;
  UniformStream rng(a.seed);
  for (std::uint32_t k = 0; k < a.graphs; ++k) {
    const auto pick = [&](NodeIndex hi) { return 1 + static_cast<NodeIndex>(rng.next() * hi); };
    const NodeIndex nu = pick(a.max_nodes);
    const NodeIndex nv = pick(a.max_nodes);
    const double p = 0.05 + 0.45 * rng.next();
    std::vector<Edge> pairs;
    for (NodeIndex i = 0; i < nu; ++i) {
      for (NodeIndex j = 0; j < nv; ++j) {
        if (rng.next() < p) pairs.push_back({i, j});
      }
    }
    const auto g = BipartiteGraph::from_edge_list(pairs, nu, nv).graph;
    const auto oracle = butterfly_oracle(g);
    const MetricsOptions opts{.threads = a.threads};
    const bool ok = count_butterflies(g, opts) == oracle.total && butterflies_per_edge(g, opts) == oracle.per_edge;
    if (!ok) {
      ++mismatches;
      err << "mismatch on instance " << k << " (" << nu << " x " << nv << ", p=" << format_real(p) << ")\n";
    }
  }
  out << "oracle-check: " << a.graphs << " graphs, " << mismatches << " mismatches\n";
  return mismatches == 0 ? 0 : 1;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Measure and generate bipartite graphs", "bigen"};
  app.require_subcommand(1);

  MeasureArgs measure;
  auto* m = app.add_subcommand("measure", "Count caterpillars, butterflies and metamorphosis of an edge list");
  m->add_option("input", measure.input, "Edge list file")->required();
  m->add_option("--label", measure.label, "Row label and file prefix (default: input file stem)");
  add_format_flags(m, measure.format);
  add_output_flags(m, measure.output);

  GenerateArgs gen_cl, gen_bter;
  auto* cl = app.add_subcommand("generate-cl", "Generate fast bipartite Chung-Lu graphs");
  auto* bt = app.add_subcommand("generate-bter", "Generate bipartite BTER graphs");
  for (auto [cmd, g] : {std::pair{cl, &gen_cl}, std::pair{bt, &gen_bter}}) {
    cmd->add_option("--graph", g->graph, "Edge list whose degrees (and profiles) are the target");
    cmd->add_option("--degrees", g->degrees, "Degree file (side, node, degree) giving the target");
    cmd->add_option("--label", g->label, "File prefix for outputs");
    cmd->add_option("--seed", g->seed, "Seed of trial 0; trial t uses seed + t")->capture_default_str();
    cmd->add_option("--trials", g->trials, "Number of independent graphs")->capture_default_str();
    add_format_flags(cmd, g->format);
    add_output_flags(cmd, g->output);
  }
  bt->add_option("--profile", gen_bter.profile, "Per-degree coefficient file (default: measured from --graph)");

  CompareArgs compare;
  auto* c = app.add_subcommand("compare", "Summaries and binned series of an original graph next to others");
  c->add_option("inputs", compare.inputs, "Original edge list followed by the graphs to compare")->required();
  c->add_option("--labels", compare.labels, "Row labels, one per input")->delimiter(',');
  c->add_option("--name", compare.name, "File prefix for outputs")->capture_default_str();
  add_format_flags(c, compare.format);
  add_output_flags(c, compare.output);

  OracleArgs oracle;
  auto* o = app.add_subcommand("oracle-check", "Check butterfly counting against brute-force enumeration");
  o->add_option("--graphs", oracle.graphs, "Number of random instances")->capture_default_str();
  o->add_option("--seed", oracle.seed, "Seed for the instances")->capture_default_str();
  o->add_option("--max-nodes", oracle.max_nodes, "Largest partition size")->capture_default_str();
  o->add_option("--threads", oracle.threads, "Counting threads (0 picks the hardware count)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (m->parsed()) return do_measure(measure, out, err);
    if (cl->parsed()) return do_generate(Mode::ChungLu, gen_cl, out);
    if (bt->parsed()) return do_generate(Mode::Bter, gen_bter, out);
    if (c->parsed()) return do_compare(compare, out);
    return do_oracle_check(oracle, out, err);
  } catch (const std::exception& e) {
    err << "bigen: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace bigen::cli
