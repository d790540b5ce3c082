#include <doctest.h>

#include <vector>

#include "pullback/parking.hpp"

using namespace pullback;

TEST_CASE("figure example parks every car") {
  const std::vector<int> prefs{3, 2, 3, 1};
  const auto r = simulate(prefs, Params{4, 5, 1, 2});
  REQUIRE(r.ok());
  CHECK(r.offending_car == 0);
  // Car 3 finds 3 taken, backs to 2 (taken), then pulls forward to 4.
  CHECK(*r.outcome == OutcomeWord{4, 2, 1, 3, 0});
  REQUIRE(r.traces.size() == 4);
  CHECK(r.traces[2].backward_checked == std::vector<int>{2});
  CHECK(r.traces[2].forward_checked == std::vector<int>{4});
  CHECK(r.traces[2].parked_at == 4);
  CHECK(is_pullback_pf(prefs, Params{4, 5, 1, 2}));
}

TEST_CASE("car 4 fails when it reaches the street start and the forward spots are full") {
  const std::vector<int> prefs{3, 2, 2, 1};
  const auto r = simulate(prefs, Params{4, 5, 1, 2});
  CHECK(r.status == ParkStatus::Failed);
  CHECK(r.offending_car == 4);
  CHECK_FALSE(r.outcome.has_value());
  REQUIRE(r.traces.size() == 4);
  CHECK(r.traces[3].backward_checked.empty());
  CHECK(r.traces[3].forward_checked == std::vector<int>{2, 3});
  CHECK_FALSE(r.traces[3].parked_at.has_value());
}

TEST_CASE("interval rule rejects (1,1,1) with l = 1") {
  const auto r = simulate(std::vector<int>{1, 1, 1}, Params{3, 3, 0, 1});
  CHECK(r.status == ParkStatus::Failed);
  CHECK(r.offending_car == 3);
}

TEST_CASE("classical outcomes") {
  const Params classical{8, 8, 0, 7};
  CHECK(*simulate(std::vector<int>{1, 1, 1, 2, 4, 4, 5, 7}, classical).outcome == OutcomeWord{1, 2, 3, 4, 5, 6, 7, 8});
  CHECK(*simulate(std::vector<int>{7, 1, 5, 2, 4, 1, 4, 1}, classical).outcome == OutcomeWord{2, 4, 6, 5, 3, 7, 1, 8});
  CHECK(is_pullback_pf(std::vector<int>{1, 4, 3, 2}, Params{4, 4, 0, 3}));
  CHECK_FALSE(is_pullback_pf(std::vector<int>{1, 4, 4}, Params{3, 4, 0, 3}));
}

TEST_CASE("backward scan is nearest first") {
  // Spots 2 and 3 are taken; car 3 prefers 3, checks 2 then 1.
  const auto r = simulate(std::vector<int>{3, 2, 3}, Params{3, 5, 2, 0});
  REQUIRE(r.ok());
  CHECK(r.traces[2].backward_checked == std::vector<int>{2, 1});
  CHECK(r.traces[2].parked_at == 1);
}

TEST_CASE("failure stops processing") {
  const auto r = simulate(std::vector<int>{1, 1, 2, 2}, Params{4, 4, 0, 0});
  CHECK(r.offending_car == 2);
  CHECK(r.traces.size() == 2);
}

TEST_CASE("empty preference list succeeds with an empty street") {
  const auto r = simulate(std::vector<int>{}, Params{0, 3, 1, 1});
  REQUIRE(r.ok());
  CHECK(*r.outcome == OutcomeWord{0, 0, 0});
}

TEST_CASE("malformed preference lists are input errors") {
  CHECK_THROWS_AS(simulate(std::vector<int>{1, 2}, Params{3, 3, 0, 2}), InputError);
  CHECK_THROWS_AS(simulate(std::vector<int>{0, 1}, Params{2, 3, 0, 2}), InputError);
  CHECK_THROWS_AS(simulate(std::vector<int>{4, 1}, Params{2, 3, 0, 2}), InputError);
  CHECK_THROWS_AS(simulate(std::vector<int>{1}, Params{1, 3, -1, 2}), InputError);
  CHECK_THROWS_AS(simulate_contained(std::vector<int>{3}, 1, 2, 1, 1), InputError);
}

TEST_CASE("allowances beyond the street behave like n-1") {
  const std::vector<int> prefs{2, 2, 2};
  CHECK(*simulate(prefs, Params{3, 3, 50, 50}).outcome == *simulate(prefs, Params{3, 3, 2, 2}).outcome);
}

TEST_CASE("contained rule") {
  SUBCASE("backing into spot 0 is a violation") {
    const auto r = simulate_contained(std::vector<int>{1, 1}, 2, 2, 1, 1);
    CHECK(r.status == ParkStatus::ContainmentViolation);
    CHECK(r.offending_car == 2);
    CHECK(r.traces[1].backward_checked == std::vector<int>{0});
    CHECK(r.traces[1].parked_at == 0);
    CHECK_FALSE(is_contained_pf(std::vector<int>{1, 1}, 2, 2, 1, 1));
  }
  SUBCASE("backing into spot 1 is fine") {
    const auto r = simulate_contained(std::vector<int>{2, 2}, 2, 2, 1, 1);
    REQUIRE(r.ok());
    CHECK(*r.outcome == OutcomeWord{2, 1});
    CHECK(is_contained_pf(std::vector<int>{1, 2}, 2, 2, 1, 1));
  }
  SUBCASE("k = 0 never reaches spot 0") {
    for (int a = 1; a <= 3; ++a) {
      for (int b = 1; b <= 3; ++b) {
        for (int c = 1; c <= 3; ++c) {
          const auto r = simulate_contained(std::vector<int>{a, b, c}, 3, 3, 0, 2);
          CHECK(r.status != ParkStatus::ContainmentViolation);
          CHECK(r.ok() == is_pullback_pf(std::vector<int>{a, b, c}, Params{3, 3, 0, 2}));
        }
      }
    }
  }
  SUBCASE("a single car always parks") {
    for (int p = 1; p <= 4; ++p) CHECK(is_contained_pf(std::vector<int>{p}, 1, 4, 3, 0));
  }
}

TEST_CASE("street park and unpark restore state") {
  Street street(4, 1, 1);
  const auto first = street.park(1, 2);
  REQUIRE(first.status == ParkStatus::Success);
  const auto second = street.park(2, 2);
  CHECK(second.spot == 1);
  street.unpark(second.spot);
  CHECK(street.outcome() == OutcomeWord{0, 1, 0, 0});
  CHECK(street.park(3, 1).spot == 1);
}
