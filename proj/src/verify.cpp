#include "pullback/verify.hpp"

#include <chrono>
#include <cmath>
#include <span>

#include "pullback/oracle.hpp"
#include "pullback/perm_count.hpp"
#include "pullback/recursion.hpp"

namespace pullback::verify {

std::vector<std::uint64_t> sqrt_continued_fraction(std::uint64_t radicand, std::size_t terms) {
  std::vector<std::uint64_t> out;
  if (terms == 0) return out;
  auto a0 = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(radicand)));
  while (a0 * a0 > radicand) --a0;
  while ((a0 + 1) * (a0 + 1) <= radicand) ++a0;
  out.push_back(a0);
  if (a0 * a0 == radicand) return out;
  // sqrt(N) = [a0; a1, ...] with m' = d a - m, d' = (N - m'^2) / d, a' = (a0 + m') / d'.
  std::uint64_t m = 0;
  std::uint64_t d = 1;
  std::uint64_t a = a0;
  while (out.size() < terms) {
    m = d * a - m;
    d = (radicand - m * m) / d;
    a = (a0 + m) / d;
    out.push_back(a);
  }
  return out;
}

std::vector<Count> convergent_numerators(const std::vector<std::uint64_t>& quotients) {
  std::vector<Count> out;
  Count before = 1;  // p_{-1}
  Count current = 0;
  bool first = true;
  for (auto q : quotients) {
    Count next = first ? Count(q) : Count(q) * current + before;
    if (!first) before = current;
    current = next;
    first = false;
    out.push_back(current);
  }
  return out;
}

namespace {

// F with its two nonzero branches exchanged; used to prove the harness can fail.
int swapped_f_pref(std::span<const int> word, int spot, int k, int l) {
  const std::size_t idx = static_cast<std::size_t>(spot - 1);
  if (word[idx] <= 0) return 1;
  const int left = perm::left_run(word, spot);
  int forward = 0;
  if (left > 0) {
    forward = static_cast<std::size_t>(left) == idx ? std::max(std::min(left - k, l), 0) : std::min(spot - 1, l);
  }
  return perm::b_count(word, spot, k) + forward + 1;
}

class Clock {
 public:
  explicit Clock(double& sink) : sink_(sink), start_(std::chrono::steady_clock::now()) {}
  ~Clock() { sink_ += std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }
  Clock(const Clock&) = delete;
  Clock& operator=(const Clock&) = delete;

 private:
  double& sink_;
  std::chrono::steady_clock::time_point start_;
};

void expect(Report& report, const std::string& check, const Params& p, const Count& got, const Count& want,
            const std::string& what) {
  if (got != want) {
    report.disagreements.push_back({check, p, what + ": got " + to_string(got) + ", expected " + to_string(want)});
  }
}

}  // namespace

Report run(const Options& options) {
  Report report;
  report.max_n = options.max_n;
  double brute_time = 0;
  double perm_time = 0;
  double recursive_time = 0;
  const auto& limits = options.limits;
  const perm::PrefCountFn pref = options.inject_fault ? &swapped_f_pref : &perm::pref_count;

  report.checks.push_back("three-way equality brute = perm = recursive");
  for (int n = 1; n <= options.max_n; ++n) {
    for (int m = 1; m <= n; ++m) {
      for (int k = 0; k <= n - 1; ++k) {
        for (int l = 0; l <= n - 1; ++l) {
          Cell cell{Params{m, n, k, l}, 0, 0, 0};
          {
            Clock c(brute_time);
            cell.brute = oracle::count_by_enumeration(cell.params, limits);
          }
          {
            Clock c(perm_time);
            cell.perm = perm::total_count_with(cell.params, pref, limits);
          }
          {
            Clock c(recursive_time);
            cell.recursive = recursion::pf_count_recursive(cell.params);
          }
          expect(report, "three-way", cell.params, cell.perm, cell.brute, "perm vs brute");
          expect(report, "three-way", cell.params, cell.recursive, cell.brute, "recursive vs brute");
          report.cells.push_back(std::move(cell));
        }
      }
    }
  }

  report.checks.push_back("classical closed form (n+1-m)(n+1)^(m-1)");
  for (const auto& cell : report.cells) {
    const auto& p = cell.params;
    if (p.k != 0 || p.l != p.n - 1) continue;
    expect(report, "classical", p, cell.brute, recursion::classical_closed_form(p.m, p.n), "closed form");
  }

  report.checks.push_back("k-Naples recursion vs published recursion");
  for (int n = 1; n <= options.max_n; ++n) {
    for (int k = 0; k <= n - 1; ++k) {
      expect(report, "k-naples", Params{n, n, k, n - 1}, recursion::knaples_count_recursive(n, n, k),
             recursion::knaples_published(n, k), "recursive vs published");
    }
  }

  report.checks.push_back("contained counts: (n+1)^(n-1) at l=n-1, oracle, k=0 reduction");
  for (int b = 0; b <= options.max_n; ++b) {
    for (int a = 0; a <= b; ++a) {
      for (int k = 0; k <= std::max(b - 1, 0); ++k) {
        for (int l = 0; l <= std::max(b - 1, 0); ++l) {
          const Params p{a, b, k, l};
          const Count counted = perm::contained_count(a, b, k, l, limits);
          expect(report, "contained", p, counted, oracle::count_contained_by_enumeration(a, b, k, l, limits),
                 "contained vs oracle");
          if (k == 0) expect(report, "contained", p, counted, perm::total_count(p, limits), "k=0 reduction");
          if (a == b && b >= 1 && l == b - 1) {
            expect(report, "contained", p, counted, boost::multiprecision::pow(Count(b + 1), static_cast<unsigned>(b - 1)),
                   "(n+1)^(n-1)");
          }
        }
      }
    }
  }

  report.checks.push_back("weakly increasing: 2^(n-1) at (k,l)=(0,1), sqrt(2) numerators at (1,1)");
  const auto numerators = convergent_numerators(sqrt_continued_fraction(2, static_cast<std::size_t>(options.max_n)));
  for (int n = 1; n <= options.max_n; ++n) {
    const Params unit{n, n, 0, 1};
    expect(report, "weakly-increasing", unit, oracle::count_weakly_increasing(unit, limits), Count(1) << (n - 1),
           "2^(n-1)");
    const Params vacillating{n, n, 1, 1};
    expect(report, "weakly-increasing", vacillating, oracle::count_weakly_increasing(vacillating, limits),
           numerators[static_cast<std::size_t>(n - 1)], "sqrt(2) convergent numerator");
  }

  report.timings = {{"brute", brute_time}, {"perm", perm_time}, {"recursive", recursive_time}};
  return report;
}

}  // namespace pullback::verify
