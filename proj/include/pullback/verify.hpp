#pragma once

#include <string>
#include <vector>

#include "pullback/types.hpp"

namespace pullback::verify {

/// Partial quotients a_0; a_1, a_2, ... of sqrt(radicand), from the integer
/// recurrence for quadratic surds. A perfect square yields a single term.
std::vector<std::uint64_t> sqrt_continued_fraction(std::uint64_t radicand, std::size_t terms);

/// Numerators p_0, p_1, ... of the convergents of [a_0; a_1, a_2, ...].
std::vector<Count> convergent_numerators(const std::vector<std::uint64_t>& quotients);

struct Options {
  /// Grid covers 1 <= m <= n <= max_n and 0 <= k, l <= n-1.
  int max_n = 6;
  EnumerationLimits limits;
  /// Swap the two branches of F in the permutation route, so a healthy
  /// harness must report disagreements.
  bool inject_fault = false;
};

struct Cell {
  Params params;
  Count brute;
  Count perm;
  Count recursive;
};

struct Disagreement {
  std::string check;
  Params params;
  std::string detail;
};

struct Timing {
  std::string method;
  double seconds = 0.0;
};

struct Report {
  int max_n = 0;
  std::vector<Cell> cells;
  std::vector<std::string> checks;  // every identity that ran
  std::vector<Disagreement> disagreements;
  std::vector<Timing> timings;

  [[nodiscard]] bool clean() const { return disagreements.empty(); }
};

/// Three-way equality on the grid plus the specialization identities:
/// classical closed form, published k-Naples recursion, contained counts,
/// weakly increasing sequences.
Report run(const Options& options);

}  // namespace pullback::verify
