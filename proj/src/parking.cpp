#include "pullback/parking.hpp"

#include <algorithm>

namespace pullback {

std::string to_string(ParkStatus s) {
  switch (s) {
    case ParkStatus::Success:
      return "success";
    case ParkStatus::Failed:
      return "failed";
    case ParkStatus::ContainmentViolation:
      return "containment_violation";
  }
  return "unknown";
}

Street::Street(int spots, int k, int l, bool contained)
    : spots_(spots),
      back_(std::min(k, std::max(spots, 0))),
      forward_(std::min(l, std::max(spots, 0))),
      contained_(contained),
      occupant_(static_cast<std::size_t>(std::max(spots, 0)) + 1, 0) {
  if (spots < 0 || k < 0 || l < 0) throw InputError("street parameters must be nonnegative");
}

Placement Street::park(int car, int preferred, CarTrace* trace) {
  if (trace != nullptr) {
    trace->car = car;
    trace->preferred = preferred;
  }
  auto take = [&](int spot) {
    occupant_[static_cast<std::size_t>(spot)] = car;
    if (trace != nullptr) trace->parked_at = spot;
    return Placement{ParkStatus::Success, spot};
  };

  if (occupant(preferred) == 0) return take(preferred);

  // Backward scan, nearest first; stops at the start of the street.
  const int lowest = contained_ ? 0 : 1;
  for (int step = 1; step <= back_; ++step) {
    const int spot = preferred - step;
    if (spot < lowest) break;
    if (trace != nullptr) trace->backward_checked.push_back(spot);
    if (spot == 0) {
      if (trace != nullptr) trace->parked_at = 0;
      return Placement{ParkStatus::ContainmentViolation, 0};
    }
    if (occupant(spot) == 0) return take(spot);
  }

  for (int step = 1; step <= forward_; ++step) {
    const int spot = preferred + step;
    if (spot > spots_) break;
    if (trace != nullptr) trace->forward_checked.push_back(spot);
    if (occupant(spot) == 0) return take(spot);
  }
  return Placement{ParkStatus::Failed, 0};
}

OutcomeWord Street::outcome() const { return OutcomeWord(occupant_.begin() + 1, occupant_.end()); }

namespace {

void check_preferences(std::span<const int> prefs, int cars, int spots) {
  if (static_cast<long long>(prefs.size()) != cars) {
    throw InputError("preference list has " + std::to_string(prefs.size()) + " entries, expected " +
                     std::to_string(cars));
  }
  for (std::size_t i = 0; i < prefs.size(); ++i) {
    if (prefs[i] < 1 || prefs[i] > spots) {
      throw InputError("preference of car " + std::to_string(i + 1) + " is " + std::to_string(prefs[i]) +
                       ", outside 1.." + std::to_string(spots));
    }
  }
}

SimulationResult run(std::span<const int> prefs, Street street) {
  SimulationResult result;
  result.traces.reserve(prefs.size());
  for (std::size_t i = 0; i < prefs.size(); ++i) {
    const int car = static_cast<int>(i) + 1;
    CarTrace& trace = result.traces.emplace_back();
    const Placement placed = street.park(car, prefs[i], &trace);
    if (placed.status != ParkStatus::Success) {
      result.status = placed.status;
      result.offending_car = car;
      return result;
    }
  }
  result.outcome = street.outcome();
  return result;
}

}  // namespace

SimulationResult simulate(std::span<const int> prefs, const Params& params) {
  validate(params);
  check_preferences(prefs, params.m, params.n);
  return run(prefs, Street(params.n, params.k, params.l));
}

bool is_pullback_pf(std::span<const int> prefs, const Params& params) { return simulate(prefs, params).ok(); }

SimulationResult simulate_contained(std::span<const int> prefs, int cars, int spots, int k, int l) {
  validate(Params{cars, spots, k, l});
  check_preferences(prefs, cars, spots);
  return run(prefs, Street(spots, k, l, /*contained=*/true));
}

bool is_contained_pf(std::span<const int> prefs, int cars, int spots, int k, int l) {
  return simulate_contained(prefs, cars, spots, k, l).ok();
}

}  // namespace pullback
