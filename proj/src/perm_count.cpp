#include "pullback/perm_count.hpp"

#include <limits>
#include <set>

namespace pullback::perm {

namespace {

// Unchecked statistics on 0-based indices.
int run_right(std::span<const int> word, std::size_t idx) {
  const int car = word[idx];
  int run = 0;
  for (std::size_t t = idx + 1; t < word.size() && word[t] > 0 && word[t] < car; ++t) ++run;
  return run;
}

int run_left(std::span<const int> word, std::size_t idx) {
  const int car = word[idx];
  int run = 0;
  for (std::size_t t = idx; t > 0 && word[t - 1] > 0 && word[t - 1] < car; --t) ++run;
  return run;
}

int backward_prefs(std::span<const int> word, std::size_t idx, int k) {
  if (word[idx] <= 0) return 0;
  return std::min(run_right(word, idx), k);
}

int forward_prefs(std::span<const int> word, std::size_t idx, int k, int l) {
  if (word[idx] <= 0) return 0;
  const int left = run_left(word, idx);
  if (left == 0) return 0;
  // Every spot to the left is taken: the backward scan hits the street start.
  if (static_cast<std::size_t>(left) == idx) return std::min(left, l);
  return std::max(std::min(left - k, l), 0);
}

int prefs_at(std::span<const int> word, std::size_t idx, int k, int l) {
  if (word[idx] <= 0) return 1;
  return backward_prefs(word, idx, k) + forward_prefs(word, idx, k, l) + 1;
}

int unchecked_pref(std::span<const int> word, int spot, int k, int l) {
  return prefs_at(word, static_cast<std::size_t>(spot - 1), k, l);
}

std::size_t checked_index(std::span<const int> word, int spot) {
  if (spot < 1 || static_cast<std::size_t>(spot) > word.size()) {
    throw InputError("spot " + std::to_string(spot) + " outside 1.." + std::to_string(word.size()));
  }
  return static_cast<std::size_t>(spot - 1);
}

std::size_t occupied_index(std::span<const int> word, int spot) {
  const auto idx = checked_index(word, spot);
  if (word[idx] <= 0) throw InputError("spot " + std::to_string(spot) + " is vacant");
  return idx;
}

void check_allowances(int k, int l) {
  if (k < 0 || l < 0) throw InputError("k and l must be nonnegative");
}

// Product of small positive factors, kept in a machine word until it overflows.
class Product {
 public:
  void times(std::uint64_t factor) {
    if (!big_) {
      std::uint64_t next = 0;
      if (!__builtin_mul_overflow(small_, factor, &next)) {
        small_ = next;
        return;
      }
      big_ = true;
      value_ = small_;
    }
    value_ *= factor;
  }
  void add_to(Count& total) const {
    if (big_) {
      total += value_;
    } else {
      total += small_;
    }
  }

 private:
  std::uint64_t small_ = 1;
  bool big_ = false;
  Count value_;
};

void validate_outcome(std::span<const int> word) {
  std::size_t cars = 0;
  for (int v : word) {
    if (v < 0) throw InputError("outcome word entries must be nonnegative");
    if (v > 0) ++cars;
  }
  std::vector<bool> seen(cars + 1, false);
  for (int v : word) {
    if (v == 0) continue;
    if (static_cast<std::size_t>(v) > cars || seen[static_cast<std::size_t>(v)]) {
      throw InputError("outcome word " + format_word({word.begin(), word.end()}) + " must hold labels 1.." +
                       std::to_string(cars) + " exactly once");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

void validate_contained(std::span<const int> word) {
  if (word.empty() || word.front() != 0) throw InputError("contained outcome word must start with 0");
  std::set<int> labels;
  for (int v : word) {
    if (v < 0) throw InputError("contained outcome word entries must be nonnegative");
    if (v > 0 && !labels.insert(v).second) throw InputError("contained outcome word repeats a car label");
  }
}

void guard_words(int cars, int spots, const EnumerationLimits& limits) {
  if (word_count(cars, spots) > limits.ceiling) {
    throw ResourceLimitError("enumerating " + to_string(word_count(cars, spots)) +
                             " outcome words exceeds the ceiling of " + std::to_string(limits.ceiling));
  }
}

}  // namespace

int right_run(std::span<const int> word, int spot) { return run_right(word, occupied_index(word, spot)); }

int left_run(std::span<const int> word, int spot) { return run_left(word, occupied_index(word, spot)); }

int b_count(std::span<const int> word, int spot, int k) {
  check_allowances(k, 0);
  return backward_prefs(word, checked_index(word, spot), k);
}

int f_count(std::span<const int> word, int spot, int k, int l) {
  check_allowances(k, l);
  return forward_prefs(word, checked_index(word, spot), k, l);
}

int pref_count(std::span<const int> word, int spot, int k, int l) {
  check_allowances(k, l);
  return prefs_at(word, checked_index(word, spot), k, l);
}

Count fiber_size(std::span<const int> word, int k, int l) {
  check_allowances(k, l);
  validate_outcome(word);
  Product product;
  for (std::size_t i = 0; i < word.size(); ++i) product.times(static_cast<std::uint64_t>(prefs_at(word, i, k, l)));
  Count out = 0;
  product.add_to(out);
  return out;
}

Count word_count(int cars, int spots) {
  if (cars < 0 || spots < 0 || cars > spots) return 0;
  Count out = 1;
  for (int i = spots - cars + 1; i <= spots; ++i) out *= i;
  return out;
}

Count total_count_with(const Params& params, PrefCountFn pref, const EnumerationLimits& limits) {
  validate(params);
  if (params.m > params.n) return 0;
  guard_words(params.m, params.n, limits);
  Count total = 0;
  for_each_outcome(params.m, params.n, [&](const OutcomeWord& word) {
    Product product;
    for (int spot = 1; spot <= params.n; ++spot) {
      product.times(static_cast<std::uint64_t>(pref(word, spot, params.k, params.l)));
    }
    product.add_to(total);
  });
  return total;
}

Count total_count(const Params& params, const EnumerationLimits& limits) {
  return total_count_with(params, &unchecked_pref, limits);
}

Count classical_fiber_size(std::span<const int> perm) {
  validate_outcome(perm);
  if (std::find(perm.begin(), perm.end(), 0) != perm.end()) {
    throw InputError("classical fiber size needs a permutation without vacant spots");
  }
  Count out = 1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    std::size_t run = 1;
    while (run <= i && perm[i - run] <= perm[i]) ++run;
    out *= run;
  }
  return out;
}

Count contained_fiber_size(std::span<const int> word, int k, int l) {
  check_allowances(k, l);
  validate_contained(word);
  // With the leading 0 in place no left run can reach the street start, so
  // the ordinary per-spot count already takes the contained branch of F.
  Product product;
  for (std::size_t i = 1; i < word.size(); ++i) product.times(static_cast<std::uint64_t>(prefs_at(word, i, k, l)));
  Count out = 0;
  product.add_to(out);
  return out;
}

Count contained_count(int cars, int spots, int k, int l, const EnumerationLimits& limits) {
  validate(Params{cars, spots, k, l});
  if (cars > spots) return 0;
  if (cars == 0) return 1;
  guard_words(cars, spots, limits);
  std::vector<int> word(static_cast<std::size_t>(spots) + 1, 0);
  for (int c = 1; c <= cars; ++c) word[static_cast<std::size_t>(spots - cars + c)] = c;
  Count total = 0;
  do {
    Product product;
    for (std::size_t i = 1; i < word.size(); ++i) product.times(static_cast<std::uint64_t>(prefs_at(word, i, k, l)));
    product.add_to(total);
  } while (std::next_permutation(word.begin() + 1, word.end()));
  return total;
}

Count contained_count_square(int t, int k, int l, const EnumerationLimits& limits) {
  return contained_count(t, t, k, l, limits);
}

Count knaples_count(int m, int n, int k, const EnumerationLimits& limits) {
  return total_count(Params{m, n, k, std::max(n - 1, 0)}, limits);
}

Count vacillating_count(int m, int n, const EnumerationLimits& limits) {
  return total_count(Params{m, n, 1, 1}, limits);
}

std::vector<Subinterval> subintervals(std::span<const int> word) {
  std::vector<Subinterval> out;
  bool in_run = false;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i] <= 0) {
      in_run = false;
      continue;
    }
    if (!in_run) out.emplace_back();
    in_run = true;
    out.back().spots.push_back(static_cast<int>(i) + 1);
    out.back().cars.push_back(word[i]);
  }
  for (auto& run : out) std::sort(run.cars.begin(), run.cars.end());
  return out;
}

}  // namespace pullback::perm
