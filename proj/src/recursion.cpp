#include "pullback/recursion.hpp"

#include <algorithm>
#include <limits>
#include <mutex>

#include "pullback/perm_count.hpp"

namespace pullback::recursion {

namespace {

// Pascal rows, grown on demand and shared across threads.
class PascalTable {
 public:
  Count get(int n, int r) {
    if (n < 0 || r < 0 || r > n) return 0;
    {
      std::shared_lock lock(mutex_);
      if (static_cast<std::size_t>(n) < rows_.size()) return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(r)];
    }
    std::unique_lock lock(mutex_);
    while (rows_.size() <= static_cast<std::size_t>(n)) {
      std::vector<Count> next(rows_.size() + 1, 1);
      if (!rows_.empty()) {
        const auto& prev = rows_.back();
        for (std::size_t j = 1; j < prev.size(); ++j) next[j] = prev[j - 1] + prev[j];
      }
      rows_.push_back(std::move(next));
    }
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(r)];
  }

 private:
  std::shared_mutex mutex_;
  std::vector<std::vector<Count>> rows_;
};

PascalTable& pascal() {
  static PascalTable table;
  return table;
}

RecursiveCounter& shared_counter() {
  static RecursiveCounter counter;
  return counter;
}

}  // namespace

Count binomial(int n, int r) { return pascal().get(n, r); }

MemoKey MemoKey::canonical(MemoKind kind, int a, int b, int k, int l) {
  const int cap = std::max(b - 1, 0);
  return MemoKey{kind, a, b, std::min(k, cap), std::min(l, cap)};
}

Count TermBreakdown::total() const {
  Count sum = 0;
  for (const auto& r : rows) sum += r.total();
  return sum;
}

RecursiveCounter::RecursiveCounter() : RecursiveCounter(Options{}) {}

RecursiveCounter::RecursiveCounter(Options options) : options_(options) {}

std::size_t RecursiveCounter::memo_size() const {
  std::shared_lock lock(mutex_);
  return memo_.size();
}

void RecursiveCounter::clear() {
  std::unique_lock lock(mutex_);
  memo_.clear();
}

template <typename Compute>
Count RecursiveCounter::memoized(const MemoKey& key, Compute&& compute) {
  if (!options_.memoize) return compute();
  {
    std::shared_lock lock(mutex_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }
  // Computed without the lock: evaluation recurses into this table.
  Count value = compute();
  std::unique_lock lock(mutex_);
  if (options_.max_entries != 0 && memo_.size() >= options_.max_entries) memo_.clear();
  memo_.emplace(key, value);
  return value;
}

Count RecursiveCounter::pf_count(int m, int n, int k, int l) {
  validate(Params{m, n, k, l});
  return pf_or_zero(m, n, k, l);
}

Count RecursiveCounter::contained(int a, int b, int k, int l) {
  validate(Params{a, b, k, l});
  return contained_or_zero(a, b, k, l);
}

Count RecursiveCounter::pf_or_zero(int a, int b, int k, int l) {
  if (a < 0 || b < 0 || a > b) return 0;
  if (a == 0) return 1;
  const auto key = MemoKey::canonical(MemoKind::Pf, a, b, k, l);
  return memoized(key, [&] { return evaluate_pf(a, b, k, l); });
}

Count RecursiveCounter::contained_or_zero(int a, int b, int k, int l) {
  if (a < 0 || b < 0 || a > b) return 0;
  if (a == 0) return 1;
  // Without backing up nobody reaches spot 0, so the contained street is an
  // ordinary one and stays inside the recursion.
  if (k == 0) return pf_or_zero(a, b, 0, l);
  const auto key = MemoKey::canonical(MemoKind::Contained, a, b, k, l);
  return memoized(key, [&] { return perm::contained_count(a, b, key.k, key.l, options_.limits); });
}

TermRow RecursiveCounter::row(int m, int n, int k, int l, int i) {
  TermRow out;
  out.spot = i;

  // Subcase: backs into i from a full block i+1..n.
  if (const int back = std::min(k, n - i); back > 0) {
    out.x = binomial(m - 1, n - i) * pf_or_zero(m - 1 - n + i, i - 1, k, l) *
            contained_or_zero(n - i, n - i, k, l) * back;
  }
  // Subcase: pulls forward into i from a full block 1..i-1.
  if (const int forward = std::min(i - 1, l); forward > 0) {
    out.y = binomial(m - 1, i - 1) * pf_or_zero(i - 1, i - 1, k, l) * contained_or_zero(m - i, n - i, k, l) *
            forward;
  }

  for (int x = 0; x <= m - 1; ++x) {
    const Count choose_left = binomial(m - 1, x);
    if (choose_left == 0) continue;
    const Count left = pf_or_zero(x, i - 1, k, l);

    if (left != 0) {
      // Parks at its preference.
      out.z += choose_left * left * contained_or_zero(m - 1 - x, n - i, k, l);

      // Backs into i from R cars at i+1..i+R; spot i+R+1 stays empty.
      for (int run = 1; run <= n - i - 1; ++run) {
        const int back = std::min(run, k);
        if (back == 0) continue;
        const Count rest = contained_or_zero(m - 1 - x - run, n - run - i - 1, k, l);
        if (rest == 0) continue;
        out.v += choose_left * left * binomial(m - 1 - x, run) * contained_or_zero(run, run, k, l) * rest * back;
      }
    }

    // Pulls forward into i from R cars at i-R..i-1; spot i-R-1 stays empty.
    for (int run = k + 1; run <= i - 2; ++run) {
      const int forward = std::min(run - k, l);
      if (forward <= 0) continue;
      const Count far_left = pf_or_zero(x, i - run - 2, k, l);
      if (far_left == 0) continue;
      const Count right = contained_or_zero(m - 1 - x - run, n - i, k, l);
      if (right == 0) continue;
      out.w += choose_left * far_left * binomial(m - 1 - x, run) * contained_or_zero(run, run, k, l) * right *
               forward;
    }
  }
  return out;
}

Count RecursiveCounter::evaluate_pf(int m, int n, int k, int l) {
  Count total = 0;
  for (int i = 1; i <= n; ++i) total += row(m, n, k, l, i).total();
  return total;
}

TermBreakdown RecursiveCounter::term_breakdown(const Params& params) {
  validate(params);
  if (params.m < 1 || params.m > params.n) {
    throw InputError("term breakdown requires 1 <= m <= n, got " + to_string(params));
  }
  TermBreakdown out{params, {}};
  for (int i = 1; i <= params.n; ++i) out.rows.push_back(row(params.m, params.n, params.k, params.l, i));
  return out;
}

Count pf_count_recursive(const Params& params) {
  return shared_counter().pf_count(params.m, params.n, params.k, params.l);
}

TermBreakdown term_breakdown(const Params& params) { return shared_counter().term_breakdown(params); }

Count knaples_count_recursive(int m, int n, int k) {
  return pf_count_recursive(Params{m, n, k, std::max(n - 1, 0)});
}

Count knaples_published(int length, int k) {
  if (length < 0 || k < 0) throw InputError("length and k must be nonnegative");
  std::vector<Count> counts{1};  // |PF_0(k)|
  for (int next = 1; next <= length; ++next) {
    const int n = next - 1;
    Count sum = 0;
    for (int i = 0; i <= n; ++i) {
      const int reach = std::min(i + 1 + k, n + 1);
      const int exponent = n - i - 1;
      // (n-i+1)^(n-i-1) has base 1 when the exponent is -1.
      const Count trees = exponent < 0 ? Count(1) : boost::multiprecision::pow(Count(n - i + 1), static_cast<unsigned>(exponent));
      sum += binomial(n, i) * reach * counts[static_cast<std::size_t>(i)] * trees;
    }
    counts.push_back(std::move(sum));
  }
  return counts.back();
}

Count classical_closed_form(int m, int n) {
  if (m < 1 || m > n) throw InputError("closed form requires 1 <= m <= n");
  return Count(n + 1 - m) * boost::multiprecision::pow(Count(n + 1), static_cast<unsigned>(m - 1));
}

}  // namespace pullback::recursion
