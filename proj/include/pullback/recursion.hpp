#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <shared_mutex>
#include <vector>

#include "pullback/types.hpp"

// Recursive count of pullback parking functions.
//
// The street is split at the spot i where the last car parks:
//   Z  the last car preferred i and parked there;
//   X  it backed into i from a full block reaching the end of the street;
//   V  it backed into i from a block of R cars followed by a vacancy;
//   Y  it pulled forward into i from a full block starting at spot 1;
//   W  it pulled forward into i from a block of R cars preceded by a vacancy.
// Regions left of a vacancy are ordinary instances on a shorter street,
// regions right of one are contained instances.
namespace pullback::recursion {

enum class MemoKind { Pf, Contained };

/// Memo table key. k and l are clamped to max(b-1, 0), beyond which they
/// no longer change the count.
struct MemoKey {
  MemoKind kind = MemoKind::Pf;
  int a = 0;
  int b = 0;
  int k = 0;
  int l = 0;

  static MemoKey canonical(MemoKind kind, int a, int b, int k, int l);
  friend auto operator<=>(const MemoKey&, const MemoKey&) = default;
};

/// Contributions of each case when the last car parks at `spot`.
struct TermRow {
  int spot = 0;
  Count x;  // X(i)
  Count y;  // Y(i)
  Count z;  // sum over x of Z(i,x)
  Count v;  // sum over x, R of V(i,x,R)
  Count w;  // sum over x, R of W(i,x,R)

  [[nodiscard]] Count total() const { return x + y + z + v + w; }
};

struct TermBreakdown {
  Params params;
  std::vector<TermRow> rows;

  [[nodiscard]] Count total() const;
};

class RecursiveCounter {
 public:
  struct Options {
    bool memoize = true;
    /// The table is cleared whenever it would grow past this many entries; 0 means unbounded.
    std::size_t max_entries = 0;
    /// Guard on the exhaustive contained sums (single-threaded). Contained
    /// counts with k = 0 are ordinary counts and never enumerate.
    EnumerationLimits limits{EnumerationLimits::kDefaultCeiling, 1};
  };

  RecursiveCounter();
  explicit RecursiveCounter(Options options);

  /// |PF_{m,n}(k,l)|: 1 when m = 0, 0 when m > n.
  Count pf_count(int m, int n, int k, int l);

  /// |C_{a,b}(k,l)|: an ordinary count when k = 0, otherwise perm::contained_count.
  Count contained(int a, int b, int k, int l);

  /// Per-spot case totals; their sum equals pf_count. Requires 1 <= m <= n.
  TermBreakdown term_breakdown(const Params& params);

  [[nodiscard]] std::size_t memo_size() const;
  void clear();

 private:
  Count evaluate_pf(int m, int n, int k, int l);
  TermRow row(int m, int n, int k, int l, int spot);
  Count pf_or_zero(int a, int b, int k, int l);
  Count contained_or_zero(int a, int b, int k, int l);

  template <typename Compute>
  Count memoized(const MemoKey& key, Compute&& compute);

  Options options_;
  mutable std::shared_mutex mutex_;
  std::map<MemoKey, Count> memo_;
};

/// pf_count on a process-wide counter shared by every caller.
Count pf_count_recursive(const Params& params);

TermBreakdown term_breakdown(const Params& params);

/// Recursive count with l = n-1.
Count knaples_count_recursive(int m, int n, int k);

/// |PF_L(k)| for length L from the published k-Naples recursion
///   |PF_{n+1}(k)| = sum_{i=0}^{n} C(n,i) min(i+1+k, n+1) |PF_i(k)| (n-i+1)^(n-i-1),
/// with |PF_0(k)| = 1. Does not use RecursiveCounter.
Count knaples_published(int length, int k);

/// (n+1-m)(n+1)^(m-1). Requires 1 <= m <= n.
Count classical_closed_form(int m, int n);

/// Exact binomial coefficient; 0 when r < 0, n < 0 or r > n.
Count binomial(int n, int r);

}  // namespace pullback::recursion
