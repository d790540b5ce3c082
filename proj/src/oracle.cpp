#include "pullback/oracle.hpp"

#include <algorithm>
#include <limits>
#include <thread>

#include "pullback/parking.hpp"

namespace pullback::oracle {

std::uint64_t search_space(int cars, int spots) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 1;
  for (int i = 0; i < cars; ++i) {
    if (spots != 0 && total > kMax / static_cast<std::uint64_t>(spots)) return kMax;
    total *= static_cast<std::uint64_t>(spots);
  }
  return total;
}

namespace {

void guard(int cars, int spots, const EnumerationLimits& limits) {
  const auto size = search_space(cars, spots);
  if (size > limits.ceiling) {
    throw ResourceLimitError("enumerating " + std::to_string(spots) + "^" + std::to_string(cars) +
                             " preference lists exceeds the ceiling of " + std::to_string(limits.ceiling) +
                             "; raise the ceiling or use another method");
  }
}

enum class Order { Any, WeaklyIncreasing };

// Depth-first walk over preference lists. `leaf` is called with the street
// after all cars have parked.
template <typename Leaf>
class Walker {
 public:
  Walker(int cars, int spots, int k, int l, bool contained, Order order, Leaf& leaf)
      : cars_(cars), spots_(spots), order_(order), street_(spots, k, l, contained), leaf_(leaf) {}

  void run_from(int first_pref) {
    if (cars_ == 0) {
      leaf_(street_);
      return;
    }
    descend(1, first_pref);
  }

 private:
  void descend(int car, int pref) {
    const Placement placed = street_.park(car, pref);
    if (placed.status != ParkStatus::Success) return;
    if (car == cars_) {
      leaf_(street_);
    } else {
      const int lo = order_ == Order::WeaklyIncreasing ? pref : 1;
      for (int next = lo; next <= spots_; ++next) descend(car + 1, next);
    }
    street_.unpark(placed.spot);
  }

  int cars_;
  int spots_;
  Order order_;
  Street street_;
  Leaf& leaf_;
};

struct Tally {
  std::uint64_t count = 0;
  void operator()(const Street&) { ++count; }
};

struct Histogram {
  FiberHistogram fibers;
  void operator()(const Street& street) { fibers[street.outcome()] += 1; }
};

// Runs one Walker per worker. Worker w owns first preferences w+1, w+1+jobs, ...
template <typename Leaf>
std::vector<Leaf> partitioned(int cars, int spots, int k, int l, bool contained, Order order, unsigned jobs) {
  if (cars == 0 || spots == 0) {
    std::vector<Leaf> single(1);
    if (cars == 0) Walker<Leaf>(cars, spots, k, l, contained, order, single[0]).run_from(0);
    return single;
  }
  const unsigned workers = std::clamp<unsigned>(jobs, 1U, static_cast<unsigned>(spots));
  std::vector<Leaf> leaves(workers);
  auto work = [&](unsigned w) {
    Walker<Leaf> walker(cars, spots, k, l, contained, order, leaves[w]);
    for (int first = static_cast<int>(w) + 1; first <= spots; first += static_cast<int>(workers)) {
      walker.run_from(first);
    }
  };
  if (workers == 1) {
    work(0);
    return leaves;
  }
  std::vector<std::jthread> threads;
  threads.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) threads.emplace_back(work, w);
  threads.clear();
  return leaves;
}

Count sum_tallies(const std::vector<Tally>& tallies) {
  Count total = 0;
  for (const auto& t : tallies) total += t.count;
  return total;
}

}  // namespace

Count count_by_enumeration(const Params& params, const EnumerationLimits& limits) {
  validate(params);
  if (params.m > params.n) return 0;
  guard(params.m, params.n, limits);
  return sum_tallies(
      partitioned<Tally>(params.m, params.n, params.k, params.l, false, Order::Any, limits.jobs));
}

Count count_contained_by_enumeration(int cars, int spots, int k, int l, const EnumerationLimits& limits) {
  validate(Params{cars, spots, k, l});
  if (cars > spots) return 0;
  guard(cars, spots, limits);
  return sum_tallies(partitioned<Tally>(cars, spots, k, l, true, Order::Any, limits.jobs));
}

FiberHistogram fiber_histogram(const Params& params, const EnumerationLimits& limits) {
  validate(params);
  if (params.m > params.n) return {};
  guard(params.m, params.n, limits);
  auto parts = partitioned<Histogram>(params.m, params.n, params.k, params.l, false, Order::Any, limits.jobs);
  FiberHistogram merged = std::move(parts.front().fibers);
  for (std::size_t i = 1; i < parts.size(); ++i) {
    for (auto& [word, count] : parts[i].fibers) merged[word] += count;
  }
  return merged;
}

Count fiber_by_enumeration(const Params& params, std::span<const int> word) {
  validate(params);
  if (static_cast<int>(word.size()) != params.n) {
    throw InputError("outcome word must have " + std::to_string(params.n) + " entries");
  }
  std::vector<int> target(static_cast<std::size_t>(params.m) + 1, 0);  // car -> spot
  for (std::size_t i = 0; i < word.size(); ++i) {
    const int car = word[i];
    if (car < 0 || car > params.m || (car > 0 && target[static_cast<std::size_t>(car)] != 0)) {
      throw InputError("invalid outcome word " + format_word({word.begin(), word.end()}));
    }
    if (car > 0) target[static_cast<std::size_t>(car)] = static_cast<int>(i) + 1;
  }
  if (std::count(target.begin() + 1, target.end(), 0) != 0) {
    throw InputError("outcome word must place every car 1.." + std::to_string(params.m));
  }

  Street street(params.n, params.k, params.l);
  std::uint64_t matches = 0;
  auto descend = [&](auto&& self, int car) -> void {
    if (car > params.m) {
      ++matches;
      return;
    }
    for (int pref = 1; pref <= params.n; ++pref) {
      const Placement placed = street.park(car, pref);
      if (placed.status != ParkStatus::Success) continue;
      if (placed.spot == target[static_cast<std::size_t>(car)]) self(self, car + 1);
      street.unpark(placed.spot);
    }
  };
  descend(descend, 1);
  return matches;
}

Count count_weakly_increasing(const Params& params, const EnumerationLimits& limits) {
  validate(params);
  if (params.m > params.n) return 0;
  guard(params.m, params.n, limits);
  return sum_tallies(
      partitioned<Tally>(params.m, params.n, params.k, params.l, false, Order::WeaklyIncreasing, limits.jobs));
}

}  // namespace pullback::oracle
