#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "bigen/binning.hpp"
#include "bigen/graph.hpp"
#include "bigen/metrics.hpp"

namespace bigen {

enum class Delimiter : std::uint8_t { Whitespace, Comma };
enum class ColumnOrder : std::uint8_t { UFirst, VFirst };

/// Text edge-list layout: one "u v" pair per line.
struct EdgeListFormat {
  Delimiter delimiter = Delimiter::Whitespace;
  int index_base = 1;
  std::string comment_prefixes = "#%";
  ColumnOrder columns = ColumnOrder::UFirst;
  /// Accept lines with more than two tokens (weights, timestamps) and use
  /// the first two. Off by default: a third token is a format error.
  bool ignore_extra_columns = false;
};

/// Malformed input; `line()` is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::uint64_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::uint64_t line() const noexcept { return line_; }

 private:
  std::uint64_t line_;
};

struct EdgeListData {
  std::vector<Edge> pairs;
  NodeIndex n_u = 0;
  NodeIndex n_v = 0;
};

struct SizeOverride {
  std::optional<NodeIndex> n_u;
  std::optional<NodeIndex> n_v;
};

/// Streams an edge list. Partition sizes are max index + 1 unless given in
/// `sizes` or in a "bipartite <n_u> <n_v> <m>" comment line (the header
/// write_edge_list emits); an index outside a declared size is a ParseError.
EdgeListData read_edge_list(std::istream& in, const EdgeListFormat& fmt, const SizeOverride& sizes = {});

/// Writes the size comment and every edge in edge-id order.
void write_edge_list(std::ostream& out, const BipartiteGraph& g, const EdgeListFormat& fmt);

struct LoadedGraph {
  BipartiteGraph graph;
  std::uint64_t duplicates = 0;
};

/// Reads and builds a graph from a file; errors carry the path.
LoadedGraph load_graph(const std::filesystem::path& path, const EdgeListFormat& fmt, const SizeOverride& sizes = {});

void save_graph(const std::filesystem::path& path, const BipartiteGraph& g, const EdgeListFormat& fmt);

/// Three significant digits, exponent without sign padding: 1.24e6, 2.28e-1.
std::string format_sci3(double value);

/// Shortest representation that parses back to the same double; integral
/// values keep a trailing ".0".
std::string format_real(double value);

double parse_real(const std::string& text);

/// Summary rows: label, n_u, n_v, m, caterpillars, butterflies, metamorphosis,
/// tab separated, after one '#' header line.
std::string format_summary_row(const std::string& label, const GraphSummary& s);
void write_summary(std::ostream& out, std::span<const GraphSummary> rows, std::span<const std::string> labels);

/// Degreewise profile rows: side (u|v), degree, coefficient, class size.
void write_profile(std::ostream& out, const DegreeProfiles& profiles);
DegreeProfiles read_profile(std::istream& in);

/// Binned rows: bin lower bound, mean.
void write_binned(std::ostream& out, const BinnedSeries& series);

/// Target degree rows: side (u|v), node index (0-based), degree. Every node
/// of each side must be listed exactly once.
void write_degrees(std::ostream& out, const DegreeTarget& targets);
DegreeTarget read_degrees(std::istream& in);

}  // namespace bigen
