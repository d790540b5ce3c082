// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "pullback/oracle.hpp"
#include "pullback/parking.hpp"
#include "pullback/perm_count.hpp"
#include "pullback/recursion.hpp"
#include "pullback/verify.hpp"

using namespace pullback;
using boost::multiprecision::pow;

namespace {

// Collects the first few failures of a criterion.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    if (failures_.size() < 5) failures_.push_back(what);
    ++failed_;
  }
  template <typename A, typename B>
  void equal(const A& got, const B& want, const std::string& what) {
    std::ostringstream detail;
    detail << what << ": got " << got << ", want " << want;
    expect(got == want, detail.str());
  }
  [[nodiscard]] bool ok() const { return failed_ == 0; }
  [[nodiscard]] std::string summary() const {
    std::ostringstream s;
    s << checks_ << " checks";
    if (failed_ > 0) s << ", " << failed_ << " failed";
    for (const auto& f : failures_) s << "\n      " << f;
    return s.str();
  }

 private:
  long checks_ = 0;
  long failed_ = 0;
  std::vector<std::string> failures_;
};

std::string label(const Params& p) { return to_string(p); }

void classical_closed_form(Tally& t) {
  for (int n = 1; n <= 7; ++n) {
    for (int m = 1; m <= n; ++m) {
      const Params p{m, n, 0, n - 1};
      const Count want = Count(n + 1 - m) * pow(Count(n + 1), static_cast<unsigned>(m - 1));
      t.equal(oracle::count_by_enumeration(p), want, "brute " + label(p));
      t.equal(perm::total_count(p), want, "perm " + label(p));
      t.equal(recursion::pf_count_recursive(p), want, "recursive " + label(p));
    }
  }
}

void worked_examples(Tally& t) {
  const Params p{4, 5, 1, 2};
  t.expect(is_pullback_pf(std::vector<int>{3, 2, 3, 1}, p), "(3,2,3,1) accepted");
  t.expect(!is_pullback_pf(std::vector<int>{3, 2, 2, 1}, p), "(3,2,2,1) rejected");

  const Params classical{8, 8, 0, 7};
  const auto first = simulate(std::vector<int>{1, 1, 1, 2, 4, 4, 5, 7}, classical);
  const auto second = simulate(std::vector<int>{7, 1, 5, 2, 4, 1, 4, 1}, classical);
  t.expect(first.ok() && *first.outcome == OutcomeWord{1, 2, 3, 4, 5, 6, 7, 8}, "outcome 12345678");
  t.expect(second.ok() && *second.outcome == OutcomeWord{2, 4, 6, 5, 3, 7, 1, 8}, "outcome 24653718");

  const std::vector<int> word{0, 8, 1, 3, 4, 0, 0, 5, 6, 7, 2};
  const std::vector<int> want{1, 1, 1, 2, 1, 1, 3, 2};
  for (int car = 1; car <= 8; ++car) {
    const int spot = static_cast<int>(std::find(word.begin(), word.end(), car) - word.begin()) + 1;
    t.equal(perm::pref_count(word, spot, 1, 2), want[static_cast<std::size_t>(car - 1)], "pref count of car " + std::to_string(car));
  }
  t.equal(perm::fiber_size(word, 1, 2), 12, "fiber size");
  t.equal(oracle::fiber_by_enumeration(Params{8, 11, 1, 2}, word), 12, "enumerated fiber size");
}

void three_way(Tally& t) {
  verify::Options options;
  options.max_n = 6;
  options.limits.jobs = 1;
  const auto report = verify::run(options);
  t.equal(report.cells.size(), std::size_t{441}, "grid cells");
  for (const auto& cell : report.cells) {
    t.expect(cell.brute == cell.perm && cell.perm == cell.recursive, "three-way " + label(cell.params));
  }
  for (const auto& d : report.disagreements) t.expect(false, d.check + " " + label(d.params) + ": " + d.detail);
}

void knaples(Tally& t) {
  for (int n = 1; n <= 7; ++n) {
    for (int k = 0; k < n; ++k) {
      t.equal(recursion::knaples_count_recursive(n, n, k), recursion::knaples_published(n, k),
              "n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
  }
}

void contained(Tally& t) {
  for (int n = 1; n <= 6; ++n) {
    for (int k = 0; k < n; ++k) {
      t.equal(perm::contained_count(n, n, k, n - 1), pow(Count(n + 1), static_cast<unsigned>(n - 1)),
              "square " + label(Params{n, n, k, n - 1}));
    }
  }
  for (int b = 1; b <= 6; ++b) {
    for (int a = 1; a <= b; ++a) {
      for (int k = 0; k < b; ++k) {
        for (int l = 0; l < b; ++l) {
          const Params p{a, b, k, l};
          const Count c = perm::contained_count(a, b, k, l);
          t.equal(c, oracle::count_contained_by_enumeration(a, b, k, l), "oracle " + label(p));
          if (k == 0) t.equal(c, perm::total_count(p), "k = 0 reduction " + label(p));
        }
      }
    }
  }
}

void weakly_increasing(Tally& t) {
  for (int n = 1; n <= 8; ++n) {
    t.equal(oracle::count_weakly_increasing(Params{n, n, 0, 1}), Count(1) << (n - 1), "(0,1) n=" + std::to_string(n));
  }
  const auto numerators = verify::convergent_numerators(verify::sqrt_continued_fraction(2, 6));
  for (int n = 1; n <= 6; ++n) {
    t.equal(oracle::count_weakly_increasing(Params{n, n, 1, 1}), numerators[static_cast<std::size_t>(n - 1)],
            "(1,1) n=" + std::to_string(n));
  }
}

// Reference rule: try the spots of `order(p)` in turn.
template <typename Order>
bool parks_all(const std::vector<int>& prefs, int n, Order order) {
  std::vector<bool> taken(static_cast<std::size_t>(n + 1), false);
  for (int p : prefs) {
    bool parked = false;
    for (int s : order(p)) {
      if (s >= 1 && s <= n && !taken[static_cast<std::size_t>(s)]) {
        taken[static_cast<std::size_t>(s)] = parked = true;
        break;
      }
    }
    if (!parked) return false;
  }
  return true;
}

void properties(Tally& t) {
  // Monotonicity, clamp invariance and histogram totals on the grid.
  for (int n = 1; n <= 6; ++n) {
    for (int m = 1; m <= n; ++m) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          const Params p{m, n, k, l};
          const Count c = recursion::pf_count_recursive(p);
          if (k + 1 < n) t.expect(c <= recursion::pf_count_recursive(Params{m, n, k + 1, l}), "monotone in k " + label(p));
          if (l + 1 < n) t.expect(c <= recursion::pf_count_recursive(Params{m, n, k, l + 1}), "monotone in l " + label(p));
          if (n <= 5) {
            Count total = 0;
            for (const auto& [w, f] : oracle::fiber_histogram(p)) total += f;
            t.equal(total, c, "histogram total " + label(p));
          }
        }
        t.equal(perm::total_count(Params{m, n, n + 4, 3 * n}), perm::total_count(Params{m, n, n - 1, n - 1}),
                "clamp " + label(Params{m, n, n + 4, 3 * n}));
      }
    }
  }

  // Per-list specialization equivalences on random lists.
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 20000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 9);
    const int m = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
    const int k = static_cast<int>(rng() % static_cast<unsigned>(n));
    const int l = static_cast<int>(rng() % static_cast<unsigned>(n));
    std::vector<int> prefs(static_cast<std::size_t>(m));
    for (int& p : prefs) p = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
    const std::string what = format_word(prefs) + " on " + std::to_string(n);

    std::vector<int> sorted = prefs;
    std::sort(sorted.begin(), sorted.end());
    bool classical = true;
    for (int i = 0; i < m; ++i) classical = classical && sorted[static_cast<std::size_t>(i)] <= n - m + i + 1;
    t.expect(is_pullback_pf(prefs, Params{m, n, 0, n - 1}) == classical, "classical " + what);

    const bool naples = parks_all(prefs, n, [&](int p) {
      std::vector<int> order{p};
      for (int j = 1; j <= k; ++j) order.push_back(p - j);
      for (int s = p + 1; s <= n; ++s) order.push_back(s);
      return order;
    });
    t.expect(is_pullback_pf(prefs, Params{m, n, k, n - 1}) == naples, "k-Naples " + what);

    const bool interval = parks_all(prefs, n, [&](int p) {
      std::vector<int> order;
      for (int s = p; s <= p + l; ++s) order.push_back(s);
      return order;
    });
    t.expect(is_pullback_pf(prefs, Params{m, n, 0, l}) == interval, "interval " + what);

    const bool vacillating = parks_all(prefs, n, [](int p) { return std::vector<int>{p, p - 1, p + 1}; });
    t.expect(is_pullback_pf(prefs, Params{m, n, 1, 1}) == vacillating, "vacillating " + what);
  }

  // Random three-way agreement inside the enumeration ceiling.
  const EnumerationLimits limits{20'000'000, 4};
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const int m = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
    const Params p{m, n, static_cast<int>(rng() % static_cast<unsigned>(n)), static_cast<int>(rng() % static_cast<unsigned>(n))};
    if (oracle::search_space(m, n) > limits.ceiling) continue;
    const Count brute = oracle::count_by_enumeration(p, limits);
    t.equal(perm::total_count(p), brute, "perm " + label(p));
    t.equal(recursion::pf_count_recursive(p), brute, "recursive " + label(p));
  }

  // Determinism under parallelism.
  const Params p{7, 7, 2, 3};
  const Count sequential = oracle::count_by_enumeration(p);
  for (unsigned jobs : {2U, 4U, 7U}) {
    t.equal(oracle::count_by_enumeration(p, EnumerationLimits{EnumerationLimits::kDefaultCeiling, jobs}), sequential,
            "jobs=" + std::to_string(jobs));
  }
}

// No large numeric tables exist to reproduce; the criterion holds when every
// identity above holds, so it is checked as the conjunction of criteria 1-7.
bool statement_holds(const std::vector<bool>& earlier) {
  return std::all_of(earlier.begin(), earlier.end(), [](bool b) { return b; });
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    void (*body)(Tally&);
  };
  const Criterion criteria[] = {
      {"classical closed form, all methods, m <= n <= 7", classical_closed_form},
      {"worked examples", worked_examples},
      {"three-way method equality, n <= 6", three_way},
      {"k-Naples recursion vs published recursion, n <= 7", knaples},
      {"contained identities", contained},
      {"weakly increasing sequences", weakly_increasing},
      {"property suite", properties},
  };

  std::vector<bool> results;
  int index = 1;
  for (const auto& c : criteria) {
    Tally tally;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(tally);
    } catch (const std::exception& e) {
      tally.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    results.push_back(tally.ok());
    char time[32];
    std::snprintf(time, sizeof time, "%.2fs", seconds);
    std::cout << (tally.ok() ? "[PASS] " : "[FAIL] ") << "AC" << index++ << " " << c.name << " (" << tally.summary()
              << ", " << time << ")\n";
  }
  const bool statement = statement_holds(results);
  std::cout << (statement ? "[PASS] " : "[FAIL] ") << "AC8 desk-scale reproducibility rests on AC1-AC7\n";
  results.push_back(statement);

  return std::all_of(results.begin(), results.end(), [](bool b) { return b; }) ? 0 : 1;
}
