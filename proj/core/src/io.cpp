#include "bigen/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <string_view>

namespace bigen {
namespace {

constexpr std::string_view kSizeTag = "bipartite";

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_whitespace(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t k = 0;
  while (k < s.size()) {
    while (k < s.size() && (s[k] == ' ' || s[k] == '\t' || s[k] == '\r')) ++k;
    if (k == s.size()) break;
    const std::size_t start = k;
    while (k < s.size() && s[k] != ' ' && s[k] != '\t' && s[k] != '\r') ++k;
    out.push_back(s.substr(start, k - start));
  }
  return out;
}

std::vector<std::string_view> split_comma(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto comma = s.find(',', start);
    out.push_back(trim(s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

template <typename T>
bool parse_unsigned(std::string_view token, T& value) {
  if (token.empty()) return false;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  return ec == std::errc{} && ptr == token.data() + token.size();
}

std::uint64_t parse_unsigned_or_throw(std::string_view token, std::uint64_t line, const char* what) {
  std::uint64_t value = 0;
  if (!parse_unsigned(token, value)) {
    throw ParseError(line, std::string("expected a non-negative integer ") + what + ", got '" + std::string(token) + "'");
  }
  return value;
}

// "bipartite <n_u> <n_v> <m>" inside a comment line.
std::optional<std::pair<NodeIndex, NodeIndex>> size_comment(std::string_view body) {
  const auto tokens = split_whitespace(body);
  if (tokens.size() != 4 || tokens[0] != kSizeTag) return std::nullopt;
  NodeIndex nu = 0;
  NodeIndex nv = 0;
  std::uint64_t m = 0;
  if (!parse_unsigned(tokens[1], nu) || !parse_unsigned(tokens[2], nv) || !parse_unsigned(tokens[3], m)) {
    return std::nullopt;
  }
  return std::pair{nu, nv};
}

NodeIndex to_index(std::string_view token, int base, std::uint64_t line) {
  std::uint64_t raw = 0;
  if (!parse_unsigned(token, raw)) {
    throw ParseError(line, "expected a non-negative integer node index, got '" + std::string(token) + "'");
  }
  if (raw < static_cast<std::uint64_t>(base)) {
    throw ParseError(line, "index " + std::to_string(raw) + " is below the index base " + std::to_string(base));
  }
  const std::uint64_t idx = raw - static_cast<std::uint64_t>(base);
  if (idx >= std::numeric_limits<NodeIndex>::max()) {
    throw ParseError(line, "index " + std::to_string(raw) + " does not fit 32-bit node ids");
  }
  return static_cast<NodeIndex>(idx);
}

char side_letter(Side s) { return s == Side::U ? 'u' : 'v'; }

Side parse_side(std::string_view token, std::uint64_t line) {
  if (token == "u") return Side::U;
  if (token == "v") return Side::V;
  throw ParseError(line, "expected side 'u' or 'v', got '" + std::string(token) + "'");
}

bool is_comment_or_blank(std::string_view line) {
  const auto t = trim(line);
  return t.empty() || t.front() == '#';
}

}  // namespace

EdgeListData read_edge_list(std::istream& in, const EdgeListFormat& fmt, const SizeOverride& sizes) {
  if (fmt.index_base != 0 && fmt.index_base != 1) throw std::invalid_argument("index base must be 0 or 1");

  EdgeListData data;
  std::optional<NodeIndex> limit_u = sizes.n_u;
  std::optional<NodeIndex> limit_v = sizes.n_v;
  std::uint64_t seen_u = 0;
  std::uint64_t seen_v = 0;

  std::string raw;
  std::uint64_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty()) continue;
    if (fmt.comment_prefixes.find(line.front()) != std::string::npos) {
      if (auto declared = size_comment(line.substr(1))) {
        if (!limit_u) limit_u = declared->first;
        if (!limit_v) limit_v = declared->second;
      }
      continue;
    }

    const auto tokens = fmt.delimiter == Delimiter::Comma ? split_comma(line) : split_whitespace(line);
    if (tokens.size() < 2 || (tokens.size() > 2 && !fmt.ignore_extra_columns)) {
      throw ParseError(line_no, "expected 2 tokens, found " + std::to_string(tokens.size()));
    }
    NodeIndex a = to_index(tokens[0], fmt.index_base, line_no);
    NodeIndex b = to_index(tokens[1], fmt.index_base, line_no);
    if (fmt.columns == ColumnOrder::VFirst) std::swap(a, b);
    if (limit_u && a >= *limit_u) {
      throw ParseError(line_no, "partition-1 index " + std::string(tokens[0]) + " exceeds declared size " +
                                    std::to_string(*limit_u));
    }
    if (limit_v && b >= *limit_v) {
      throw ParseError(line_no, "partition-2 index " + std::string(tokens[1]) + " exceeds declared size " +
                                    std::to_string(*limit_v));
    }
    seen_u = std::max<std::uint64_t>(seen_u, std::uint64_t{a} + 1);
    seen_v = std::max<std::uint64_t>(seen_v, std::uint64_t{b} + 1);
    data.pairs.push_back({a, b});
  }
  if (in.bad()) throw std::runtime_error("read error after line " + std::to_string(line_no));

  data.n_u = limit_u ? *limit_u : static_cast<NodeIndex>(seen_u);
  data.n_v = limit_v ? *limit_v : static_cast<NodeIndex>(seen_v);
  return data;
}

void write_edge_list(std::ostream& out, const BipartiteGraph& g, const EdgeListFormat& fmt) {
  const char comment = fmt.comment_prefixes.empty() ? '#' : fmt.comment_prefixes.front();
  const char sep = fmt.delimiter == Delimiter::Comma ? ',' : ' ';
  const auto base = static_cast<std::uint64_t>(fmt.index_base);
  out << comment << ' ' << kSizeTag << ' ' << g.n_u() << ' ' << g.n_v() << ' ' << g.num_edges() << '\n';
  std::string line;
  for (NodeIndex i = 0; i < g.n_u(); ++i) {
    for (NodeIndex j : g.neighbors_u(i)) {
      std::uint64_t first = i + base;
      std::uint64_t second = j + base;
      if (fmt.columns == ColumnOrder::VFirst) std::swap(first, second);
      line = std::to_string(first);
      line += sep;
      line += std::to_string(second);
      line += '\n';
      out << line;
    }
  }
}

LoadedGraph load_graph(const std::filesystem::path& path, const EdgeListFormat& fmt, const SizeOverride& sizes) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path.string() + ": cannot open for reading");
  try {
    EdgeListData data = read_edge_list(in, fmt, sizes);
    auto built = BipartiteGraph::from_edge_list(data.pairs, data.n_u, data.n_v);
    return {std::move(built.graph), built.duplicates};
  } catch (const std::exception& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

void save_graph(const std::filesystem::path& path, const BipartiteGraph& g, const EdgeListFormat& fmt) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error(path.string() + ": cannot open for writing");
  write_edge_list(out, g, fmt);
  if (!out) throw std::runtime_error(path.string() + ": write failed");
}

std::string format_sci3(double value) {
  if (value == 0.0 || !std::isfinite(value)) return value == 0.0 ? "0.00e0" : std::to_string(value);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2e", value);
  std::string_view s(buf);
  const auto e = s.find('e');
  int exponent = 0;
  std::from_chars(s.data() + e + 1 + (s[e + 1] == '+' ? 1 : 0), s.data() + s.size(), exponent);
  return std::string(s.substr(0, e)) + "e" + std::to_string(exponent);
}

std::string format_real(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  std::string s(buf, ptr);
  if (std::isfinite(value) && s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

double parse_real(const std::string& text) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::invalid_argument("not a real number: '" + text + "'");
  }
  return value;
}

std::string format_summary_row(const std::string& label, const GraphSummary& s) {
  std::string row = label;
  for (const std::string& field :
       {std::to_string(s.n_u), std::to_string(s.n_v), std::to_string(s.edges), to_string(s.caterpillars),
        to_string(s.butterflies), format_sci3(s.metamorphosis)}) {
    row += '\t';
    row += field;
  }
  return row;
}

void write_summary(std::ostream& out, std::span<const GraphSummary> rows, std::span<const std::string> labels) {
  if (rows.size() != labels.size()) throw std::invalid_argument("one label required per summary row");
  out << "# label\tn_u\tn_v\tedges\tcaterpillars\tbutterflies\tmetamorphosis\n";
  for (std::size_t k = 0; k < rows.size(); ++k) out << format_summary_row(labels[k], rows[k]) << '\n';
}

void write_profile(std::ostream& out, const DegreeProfiles& profiles) {
  out << "# side\tdegree\tcoefficient\tclass_size\n";
  for (Side s : {Side::U, Side::V}) {
    for (const auto& [d, entry] : profiles.side(s)) {
      out << side_letter(s) << '\t' << d << '\t' << format_real(entry.coefficient) << '\t' << entry.class_size
          << '\n';
    }
  }
}

DegreeProfiles read_profile(std::istream& in) {
  DegreeProfiles profiles;
  std::string raw;
  std::uint64_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (is_comment_or_blank(raw)) continue;
    const auto tokens = split_whitespace(raw);
    if (tokens.size() != 4) throw ParseError(line_no, "expected 4 profile fields, found " + std::to_string(tokens.size()));
    const Side side = parse_side(tokens[0], line_no);
    const Degree d = parse_unsigned_or_throw(tokens[1], line_no, "degree");
    double c = 0.0;
    try {
      c = parse_real(std::string(tokens[2]));
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
    const std::uint64_t size = parse_unsigned_or_throw(tokens[3], line_no, "class size");
    auto& target = side == Side::U ? profiles.u : profiles.v;
    if (!target.emplace(d, DegreeCoefficient{c, size}).second) {
      throw ParseError(line_no, "degree " + std::to_string(d) + " listed twice");
    }
  }
  return profiles;
}

void write_binned(std::ostream& out, const BinnedSeries& series) {
  out << "# bin_lower\tmean\n";
  for (const Bin& b : series) out << b.lower << '\t' << format_real(b.mean) << '\n';
}

void write_degrees(std::ostream& out, const DegreeTarget& targets) {
  out << "# side\tnode\tdegree\n";
  for (std::size_t k = 0; k < targets.du.size(); ++k) out << "u\t" << k << '\t' << targets.du[k] << '\n';
  for (std::size_t k = 0; k < targets.dv.size(); ++k) out << "v\t" << k << '\t' << targets.dv[k] << '\n';
}

DegreeTarget read_degrees(std::istream& in) {
  std::vector<std::optional<Degree>> du;
  std::vector<std::optional<Degree>> dv;
  std::string raw;
  std::uint64_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (is_comment_or_blank(raw)) continue;
    const auto tokens = split_whitespace(raw);
    if (tokens.size() != 3) throw ParseError(line_no, "expected 3 degree fields, found " + std::to_string(tokens.size()));
    const Side side = parse_side(tokens[0], line_no);
    const std::uint64_t node = parse_unsigned_or_throw(tokens[1], line_no, "node index");
    const Degree d = parse_unsigned_or_throw(tokens[2], line_no, "degree");
    if (node >= std::numeric_limits<NodeIndex>::max()) throw ParseError(line_no, "node index does not fit 32 bits");
    auto& target = side == Side::U ? du : dv;
    if (target.size() <= node) target.resize(node + 1);
    if (target[node]) throw ParseError(line_no, "node " + std::to_string(node) + " listed twice");
    target[node] = d;
  }
  DegreeTarget out;
  const auto flatten = [](const std::vector<std::optional<Degree>>& src, std::vector<Degree>& dst, char side) {
    dst.reserve(src.size());
    for (std::size_t k = 0; k < src.size(); ++k) {
      if (!src[k]) throw std::runtime_error(std::string("degree file is missing node ") + std::to_string(k) + " of side " + side);
      dst.push_back(*src[k]);
    }
  };
  flatten(du, out.du, 'u');
  flatten(dv, out.dv, 'v');
  return out;
}

}  // namespace bigen
