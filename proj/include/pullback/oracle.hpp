#pragma once

#include <map>
#include <span>

#include "pullback/types.hpp"

// Brute-force ground truth: exhaustive enumeration of preference lists.
//
// Lists are visited in lexicographic order by depth-first search, parking
// one car per level on a shared Street. Once a prefix fails every extension
// fails too, so the subtree is skipped. Work may be split across threads by
// the first car's preference; partial results are merged by exact addition.
namespace pullback::oracle {

/// Outcome word -> number of preference lists producing it.
using FiberHistogram = std::map<OutcomeWord, Count>;

/// |PF_{m,n}(k,l)| by enumerating [n]^m. Returns 0 when m > n.
/// Throws ResourceLimitError when n^m exceeds limits.ceiling.
Count count_by_enumeration(const Params& params, const EnumerationLimits& limits = {});

/// |C_{a,b}(k,l)| by enumerating [b]^a on a street with a virtual spot 0.
Count count_contained_by_enumeration(int cars, int spots, int k, int l, const EnumerationLimits& limits = {});

/// Groups every successful list by its outcome word.
FiberHistogram fiber_histogram(const Params& params, const EnumerationLimits& limits = {});

/// Number of preference lists whose outcome is `word`, by enumeration that
/// abandons a prefix as soon as a car parks anywhere other than where the
/// word puts it. Cheap even when the full histogram would be huge.
Count fiber_by_enumeration(const Params& params, std::span<const int> word);

/// Counts parking functions with a_1 <= a_2 <= ... <= a_m.
Count count_weakly_increasing(const Params& params, const EnumerationLimits& limits = {});

/// Number of candidates an enumeration of [spots]^cars visits, saturating.
std::uint64_t search_space(int cars, int spots);

}  // namespace pullback::oracle
