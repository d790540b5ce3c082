#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace pullback {

/// Exact nonnegative count of unbounded magnitude.
using Count = boost::multiprecision::cpp_int;

inline std::string to_string(const Count& c) { return c.str(); }

/// Malformed input (bad preference list, invalid word, negative parameter).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an exhaustive computation would exceed its configured ceiling.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parking instance: m cars, n spots, backward allowance k, forward allowance l.
///
/// k and l may exceed the street; any value >= n-1 behaves as n-1.
struct Params {
  int m = 0;
  int n = 0;
  int k = 0;
  int l = 0;

  /// Same instance with k and l reduced to at most max(n-1, 0).
  [[nodiscard]] Params clamped() const;

  friend bool operator==(const Params&, const Params&) = default;
  friend auto operator<=>(const Params&, const Params&) = default;
};

/// Throws InputError unless every field is nonnegative.
void validate(const Params& p);

std::string to_string(const Params& p);

/// Preferred spots a_1..a_m, each in 1..n.
using PreferenceList = std::vector<int>;

/// Occupant of each spot 1..n (stored at index spot-1); 0 marks a vacant spot.
using OutcomeWord = std::vector<int>;

/// Comma-separated rendering, e.g. "0,8,1,3".
std::string format_word(const std::vector<int>& word);

/// Inverse of format_word. Throws InputError on anything but comma-separated integers.
std::vector<int> parse_word(const std::string& text);

/// Limits shared by every exhaustive enumeration.
struct EnumerationLimits {
  static constexpr std::uint64_t kDefaultCeiling = 100'000'000;

  /// Largest number of candidates (lists or words) an enumeration may visit.
  std::uint64_t ceiling = kDefaultCeiling;
  /// Worker threads; results are identical for every value.
  unsigned jobs = 1;
};

}  // namespace pullback
