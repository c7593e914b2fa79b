#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>

#include "bigen/cli.hpp"
#include "bigen/io.hpp"
#include "support/test_graphs.hpp"

using namespace bigen;
namespace fs = std::filesystem;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

class TempDir {
 public:
  explicit TempDir(const std::string& name) : path_(fs::temp_directory_path() / ("bigen_cli_" + name)) {
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string operator/(const std::string& leaf) const { return (path_ / leaf).string(); }
  std::string str() const { return path_.string(); }

 private:
  fs::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

void put(const std::string& path, const std::string& text) { std::ofstream(path, std::ios::binary) << text; }

}  // namespace

TEST_CASE("measure K22") {
  TempDir dir("measure");
  put(dir / "k22.txt", "1 1\n1 2\n2 1\n2 2\n");
  const auto r = run({"measure", dir / "k22.txt", "--out-dir", dir.str(), "--profiles", "--binned",
                      "--side-labels", "author,paper"});
  CHECK(r.status == 0);
  CHECK(r.out.find("k22\t2\t2\t4\t4\t1\t1.00e0\n") != std::string::npos);
  CHECK(slurp(dir / "k22.summary.tsv") == r.out);
  CHECK(slurp(dir / "k22.profile.tsv").find("u\t2\t1.0\t2\n") != std::string::npos);
  CHECK(fs::exists(dir / "k22.degree.author.tsv"));

  // Measured degrees and profile feed generation directly.
  const auto gen = run({"generate-bter", "--degrees", dir / "k22.degrees.tsv", "--profile", dir / "k22.profile.tsv",
                        "--out-dir", dir.str()});
  CHECK(gen.status == 0);
  CHECK(gen.out.find("bter.t0\t2\t2\t4\t4\t1\t1.00e0") != std::string::npos);
  CHECK(slurp(dir / "k22.meta.paper.tsv") == "# bin_lower\tmean\n1\t0.0\n2\t0.5\n");
}

TEST_CASE("measure empty file") {
  TempDir dir("empty");
  put(dir / "empty.txt", "");
  const auto r = run({"measure", dir / "empty.txt", "--out-dir", dir.str()});
  CHECK(r.status == 0);
  CHECK(r.out.ends_with("empty\t0\t0\t0\t0\t0\t0.00e0\n"));
}

TEST_CASE("missing and malformed inputs fail with path context") {
  TempDir dir("missing");
  const auto r = run({"measure", dir / "nope.txt", "--out-dir", dir.str()});
  CHECK(r.status != 0);
  CHECK(r.err.find("nope.txt") != std::string::npos);

  put(dir / "bad.txt", "1 1\n1 x\n");
  const auto bad = run({"measure", dir / "bad.txt", "--out-dir", dir.str()});
  CHECK(bad.status != 0);
  CHECK(bad.err.find("line 2") != std::string::npos);

  const auto cmp = run({"compare", dir / "bad.txt", dir / "gone.txt", "--out-dir", dir.str()});
  CHECK(cmp.status != 0);
}

TEST_CASE("generate-cl rejects unbalanced degree targets") {
  TempDir dir("unbalanced");
  std::ofstream(dir / "deg.tsv") << "u\t0\t2\nu\t1\t1\nv\t0\t1\n";
  const auto r = run({"generate-cl", "--degrees", dir / "deg.tsv", "--out-dir", dir.str()});
  CHECK(r.status != 0);
  CHECK(r.err.find('3') != std::string::npos);
  CHECK(r.err.find('1') != std::string::npos);
}

TEST_CASE("generation is byte-identical for a fixed seed") {
  TempDir a("det_a"), b("det_b");
  const auto g = testing::random_skewed(80, 60, 400, 5);
  std::ofstream src(a / "src.txt");
  write_edge_list(src, g, {});
  src.close();
  fs::copy_file(a / "src.txt", b / "src.txt");

  for (const std::string mode : {"generate-cl", "generate-bter"}) {
    const auto ra = run({mode, "--graph", a / "src.txt", "--trials", "3", "--seed", "11", "--out-dir", a.str(),
                         "--profiles", "--threads", "3"});
    const auto rb = run({mode, "--graph", b / "src.txt", "--trials", "3", "--seed", "11", "--out-dir", b.str(),
                         "--profiles", "--threads", "1"});
    REQUIRE(ra.status == 0);
    REQUIRE(rb.status == 0);
    CHECK(ra.out == rb.out);
    const std::string label = mode == "generate-cl" ? "cl" : "bter";
    for (int t = 0; t < 3; ++t) {
      const std::string edges = label + ".t" + std::to_string(t) + ".edges";
      CHECK(fs::exists(a / edges));
      CHECK(slurp(a / edges) == slurp(b / edges));
    }
    CHECK(slurp(a / (label + ".t0.edges")) != slurp(a / (label + ".t1.edges")));
    CHECK(slurp(a / (label + ".aggregate.tsv")) == slurp(b / (label + ".aggregate.tsv")));
  }
}

TEST_CASE("trial t uses seed plus t") {
  TempDir dir("seeds");
  put(dir / "src.txt", "1 1\n1 2\n2 1\n3 3\n3 2\n");
  REQUIRE(run({"generate-cl", "--graph", dir / "src.txt", "--trials", "2", "--seed", "4", "--label", "x",
               "--out-dir", dir.str()})
              .status == 0);
  REQUIRE(run({"generate-cl", "--graph", dir / "src.txt", "--seed", "5", "--label", "y", "--out-dir", dir.str()})
              .status == 0);
  CHECK(slurp(dir / "x.t1.edges") == slurp(dir / "y.t0.edges"));
}

TEST_CASE("bter from degree and profile files") {
  TempDir dir("bter_files");
  std::ofstream(dir / "deg.tsv") << "u\t0\t4\nu\t1\t4\nu\t2\t4\nu\t3\t4\nv\t0\t4\nv\t1\t4\nv\t2\t4\nv\t3\t4\n";
  std::ofstream(dir / "prof.tsv") << "u\t4\t1.0\t4\nv\t4\t1.0\t4\n";
  const auto r = run({"generate-bter", "--degrees", dir / "deg.tsv", "--profile", dir / "prof.tsv", "--out-dir",
                      dir.str(), "--format", "comma:0"});
  REQUIRE(r.status == 0);
  // A unit profile on a 4-regular 4 x 4 target realizes K44 exactly.
  CHECK(r.out.find("bter.t0\t4\t4\t16\t144\t36\t1.00e0") != std::string::npos);
  CHECK(slurp(dir / "bter.t0.edges").find("0,0\n") != std::string::npos);

  const auto no_profile = run({"generate-bter", "--degrees", dir / "deg.tsv", "--out-dir", dir.str()});
  CHECK(no_profile.status != 0);
}

TEST_CASE("compare of a graph with itself has zero deltas") {
  TempDir dir("compare");
  const auto g = testing::random_skewed(50, 40, 300, 2);
  std::ofstream src(dir / "g.txt");
  write_edge_list(src, g, {});
  src.close();
  const auto r = run({"compare", dir / "g.txt", dir / "g.txt", "--labels", "orig,copy", "--out-dir", dir.str()});
  REQUIRE(r.status == 0);
  std::istringstream rows(slurp(dir / "compare.binned.tsv"));
  std::string line;
  std::getline(rows, line);
  CHECK(line == "# series\tbin_lower\torig\tcopy\tdelta_copy");
  int data_rows = 0;
  while (std::getline(rows, line)) {
    ++data_rows;
    CHECK(line.ends_with("\t0.0"));
  }
  CHECK(data_rows > 4);
  CHECK(r.out.find("orig\t") != std::string::npos);
  CHECK(r.out.find("copy\t") != std::string::npos);
}

TEST_CASE("oracle-check") {
  const auto r = run({"oracle-check", "--graphs", "25", "--max-nodes", "12"});
  CHECK(r.status == 0);
  CHECK(r.out == "oracle-check: 25 graphs, 0 mismatches\n");
}

TEST_CASE("argument errors") {
  CHECK(run({}).status != 0);
  CHECK(run({"measure"}).status != 0);
  CHECK(run({"measure", "x", "--format", "tab"}).status != 0);
  CHECK(run({"generate-cl"}).status != 0);
}
