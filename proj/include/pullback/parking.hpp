#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pullback/types.hpp"

namespace pullback {

enum class ParkStatus {
  Success,
  Failed,                // car exhausted both scans
  ContainmentViolation,  // car backed into the virtual spot 0
};

std::string to_string(ParkStatus s);

/// Step-by-step record of one car's attempt.
struct CarTrace {
  int car = 0;
  int preferred = 0;
  std::vector<int> backward_checked;  // nearest first
  std::vector<int> forward_checked;
  /// Final spot; 0 on a containment violation; empty when the car failed.
  std::optional<int> parked_at;
};

struct SimulationResult {
  ParkStatus status = ParkStatus::Success;
  /// Label of the car that failed or violated containment; 0 on success.
  int offending_car = 0;
  std::vector<CarTrace> traces;
  /// Present iff status == Success.
  std::optional<OutcomeWord> outcome;

  [[nodiscard]] bool ok() const { return status == ParkStatus::Success; }
};

/// Where a single car ended up.
struct Placement {
  ParkStatus status = ParkStatus::Success;
  int spot = 0;
};

/// A one-way street under the (k,l)-pullback rule.
///
/// Spots are numbered 1..n. A contained street also has a vacant spot 0
/// that the backward scan can reach but that no car may take. Cars are
/// parked incrementally, and park/unpark pairs let enumerators backtrack
/// without rebuilding the street.
class Street {
 public:
  Street(int spots, int k, int l, bool contained = false);

  /// Parks `car` preferring `preferred` (1..n). On Failed or
  /// ContainmentViolation the street is left unchanged.
  Placement park(int car, int preferred, CarTrace* trace = nullptr);

  /// Vacates a spot previously returned by a successful park().
  void unpark(int spot) { occupant_[static_cast<std::size_t>(spot)] = 0; }

  [[nodiscard]] int spots() const { return spots_; }
  [[nodiscard]] int occupant(int spot) const { return occupant_[static_cast<std::size_t>(spot)]; }

  /// Occupants of spots 1..n.
  [[nodiscard]] OutcomeWord outcome() const;

 private:
  int spots_;
  int back_;
  int forward_;
  bool contained_;
  std::vector<int> occupant_;  // index 0 is the virtual spot
};

/// Runs the (k,l)-pullback rule for cars 1..m in order. Processing stops at
/// the first car that cannot park. Throws InputError when the list length
/// differs from params.m or an entry lies outside 1..n.
SimulationResult simulate(std::span<const int> prefs, const Params& params);

bool is_pullback_pf(std::span<const int> prefs, const Params& params);

/// Same rule on a street with an extra vacant spot 0 in front of spots 1..b.
/// Success requires every car to park in 1..b; backing into spot 0 is a
/// containment violation.
SimulationResult simulate_contained(std::span<const int> prefs, int cars, int spots, int k, int l);

bool is_contained_pf(std::span<const int> prefs, int cars, int spots, int k, int l);

}  // namespace pullback
