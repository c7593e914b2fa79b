#include <doctest.h>

#include <stdexcept>

#include "bigen/binning.hpp"
#include "support/test_graphs.hpp"

using namespace bigen;

TEST_CASE("log binning includes zeros") {
  CHECK(log_bin({{1, 10.0}}) == BinnedSeries{{1, 10.0}});

  const auto b = log_bin({{4, 6.0}, {5, 0.0}, {6, 0.0}, {7, 2.0}});
  REQUIRE(b.size() == 3);
  CHECK(b[0] == Bin{1, 0.0});
  CHECK(b[1] == Bin{2, 0.0});
  CHECK(b[2] == Bin{4, 2.0});

  const auto sparse = log_bin({{8, 4.0}});
  REQUIRE(sparse.size() == 4);
  CHECK(sparse.back() == Bin{8, 0.5});

  CHECK(log_bin({}).empty());
  CHECK_THROWS_AS(log_bin({{0, 1.0}}), std::invalid_argument);
}

TEST_CASE("bin bounds are increasing powers of two up to the max key") {
  const auto b = log_bin({{1, 1.0}, {1000, 3.0}});
  REQUIRE(b.size() == 10);
  for (std::size_t k = 0; k < b.size(); ++k) CHECK(b[k].lower == Degree{1} << k);
  CHECK(b.back().mean == doctest::Approx(3.0 / 512.0));
}

TEST_CASE("binned degree distribution drops isolated nodes") {
  const auto g = testing::make_graph({{0, 0}, {0, 1}, {1, 0}}, 4, 2);
  // U degrees: 2, 1, 0, 0
  const auto b = binned_degree_distribution(g, Side::U);
  REQUIRE(b.size() == 2);
  CHECK(b[0] == Bin{1, 1.0});
  CHECK(b[1] == Bin{2, 0.5});
}

TEST_CASE("binned coefficients treat absent degrees as zero") {
  DegreeProfile p{{2, {0.5, 3}}, {5, {0.25, 1}}};
  const auto b = binned_coefficients(p);
  REQUIRE(b.size() == 3);
  CHECK(b[1] == Bin{2, 0.25});
  CHECK(b[2] == Bin{4, 0.0625});
}
