#pragma once

#include <algorithm>
#include <span>
#include <utility>
#include <vector>

#include "pullback/types.hpp"

// Counting through permutations.
//
// Every parking function is determined by its outcome word, and the number of
// preference lists producing a given word factors into a per-spot product of
// preference counts B + F + 1. Summing that product over all words gives the
// total. Spot arguments are 1-based, matching the street numbering.
namespace pullback::perm {

/// Length of the run of occupied spots immediately right of `spot` whose cars
/// all arrived earlier (0 < label < word[spot]). Requires word[spot] > 0.
int right_run(std::span<const int> word, int spot);

/// Mirror image of right_run, scanning toward the start of the street.
int left_run(std::span<const int> word, int spot);

/// Preferences to the right of `spot` from which the car backs into it.
int b_count(std::span<const int> word, int spot, int k);

/// Preferences to the left of `spot` from which the car pulls forward into it.
///
///   0                          if the spot is vacant or left_run = 0
///   min(spot-1, l)             if the left run reaches the start of the street
///   max(min(left_run-k, l), 0) otherwise
int f_count(std::span<const int> word, int spot, int k, int l);

/// b_count + f_count + 1 for a car; 1 for a vacant spot.
int pref_count(std::span<const int> word, int spot, int k, int l);

/// Signature shared by pref_count and test doubles of it.
using PrefCountFn = int (*)(std::span<const int>, int, int, int);

/// Number of (k,l)-pullback parking functions with this outcome.
/// Throws InputError unless the word holds labels 1..m once each and zeros elsewhere.
Count fiber_size(std::span<const int> word, int k, int l);

/// Sum of fiber_size over every outcome word with m cars on n spots.
/// Throws ResourceLimitError when n!/(n-m)! exceeds limits.ceiling.
Count total_count(const Params& params, const EnumerationLimits& limits = {});

/// total_count with a substitute per-spot preference count.
Count total_count_with(const Params& params, PrefCountFn pref, const EnumerationLimits& limits = {});

/// Classical fiber size: product over i of the longest run sigma_j..sigma_i
/// with every entry <= sigma_i. Requires a permutation of 1..n.
Count classical_fiber_size(std::span<const int> perm);

/// Fiber of a contained outcome word 0 pi_1 ... pi_t. The leading 0 is a
/// permanently vacant spot in front of the street; interior zeros are vacant
/// spots too. Positive labels must be distinct but may come from any set.
Count contained_fiber_size(std::span<const int> word, int k, int l);

/// |C_{t,t}(k,l)|: contained_fiber_size summed over all orders of t cars.
Count contained_count_square(int t, int k, int l, const EnumerationLimits& limits = {});

/// |C_{a,b}(k,l)|: contained_fiber_size summed over every word made of a
/// leading 0 followed by an arrangement of b-a zeros and cars 1..a.
/// Returns 0 when a > b and 1 when a = 0.
Count contained_count(int cars, int spots, int k, int l, const EnumerationLimits& limits = {});

/// total_count with l = n-1.
Count knaples_count(int m, int n, int k, const EnumerationLimits& limits = {});

/// total_count with k = l = 1.
Count vacillating_count(int m, int n, const EnumerationLimits& limits = {});

/// Number of words with `cars` labels on `spots` positions: spots!/(spots-cars)!.
Count word_count(int cars, int spots);

/// Occupied spots split into maximal runs of consecutive spots.
struct Subinterval {
  std::vector<int> spots;  // consecutive, ascending
  std::vector<int> cars;   // labels parked there, ascending
};

/// Maximal runs S_1..S_j of the occupied set with their car sets T_1..T_j.
std::vector<Subinterval> subintervals(std::span<const int> word);

/// Visits every arrangement of {0^(spots-cars)} u {1..cars} in lexicographic order.
template <typename Visit>
void for_each_outcome(int cars, int spots, Visit&& visit) {
  if (cars < 0 || spots < 0 || cars > spots) return;
  OutcomeWord word(static_cast<std::size_t>(spots), 0);
  for (int c = 1; c <= cars; ++c) word[static_cast<std::size_t>(spots - cars + c - 1)] = c;
  do {
    visit(std::as_const(word));
  } while (std::next_permutation(word.begin(), word.end()));
}

}  // namespace pullback::perm
