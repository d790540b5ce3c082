#include <doctest.h>

#include "pullback/verify.hpp"

using namespace pullback;

TEST_CASE("continued fractions of square roots") {
  CHECK(verify::sqrt_continued_fraction(2, 5) == std::vector<std::uint64_t>{1, 2, 2, 2, 2});
  CHECK(verify::sqrt_continued_fraction(7, 6) == std::vector<std::uint64_t>{2, 1, 1, 1, 4, 1});
  CHECK(verify::sqrt_continued_fraction(9, 5) == std::vector<std::uint64_t>{3});
  CHECK(verify::sqrt_continued_fraction(2, 0).empty());
}

TEST_CASE("convergent numerators") {
  const auto p = verify::convergent_numerators(verify::sqrt_continued_fraction(2, 8));
  REQUIRE(p.size() == 8);
  const std::vector<Count> expected{1, 3, 7, 17, 41, 99, 239, 577};
  CHECK(p == expected);
  CHECK(verify::convergent_numerators({}).empty());
}

TEST_CASE("harness is clean on small grids") {
  for (int max_n : {0, 1, 4}) {
    verify::Options options;
    options.max_n = max_n;
    const auto report = verify::run(options);
    CAPTURE(max_n);
    CHECK(report.clean());
    CHECK(report.max_n == max_n);
    // n choices of m and n^2 of (k, l) for each street length
    const int side = max_n * (max_n + 1) / 2;
    CHECK(report.cells.size() == static_cast<std::size_t>(side * side));
    for (const auto& cell : report.cells) {
      CHECK(cell.brute == cell.perm);
      CHECK(cell.perm == cell.recursive);
    }
    CHECK_FALSE(report.checks.empty());
  }
}

TEST_CASE("injected fault is detected") {
  verify::Options options;
  options.max_n = 4;
  options.inject_fault = true;
  const auto report = verify::run(options);
  CHECK_FALSE(report.clean());
  CHECK(report.disagreements.size() >= 1);
}
