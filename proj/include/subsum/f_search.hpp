#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "subsum/cardinal.hpp"
#include "subsum/finite_enum.hpp"

namespace subsum {

/// Bounds for the integer-sequence search. Unset members are unbounded; at
/// least two of the three must be finite.
struct SearchBounds {
  std::optional<int> max_length;
  std::optional<int> max_term;
  std::optional<int> max_sum;

  void validate() const;
  // All three bounds, with unbounded members tightened from the finite ones.
  int effective_length() const;
  int effective_term() const;
  int effective_sum() const;
};

/// A finite integer sequence certifying that a range set is attainable,
/// together with its full profile.
struct Witness {
  std::vector<int> sequence;  // nondecreasing positive integers
  RangeSet range;
  std::map<int, std::uint64_t> profile;  // subsum -> count

  bool operator<(const Witness& o) const { return sequence < o.sequence; }
};

inline constexpr std::uint64_t kDefaultCandidateCeiling = 50'000'000;

/// Exact number of nondecreasing tuples within the bounds.
std::uint64_t count_candidates(const SearchBounds& bounds);

/// Range of every nondecreasing positive-integer tuple within bounds, keeping
/// the lexicographically smallest witness per range. Deterministic for every
/// thread count (threads <= 0 reads SUBSUM_THREADS, default 1).
/// Throws ResourceLimitError when the candidate count exceeds the ceiling.
std::map<RangeSet, Witness> search_ranges(
    const SearchBounds& bounds, int threads = 1,
    std::uint64_t candidate_ceiling = kDefaultCandidateCeiling);

/// Certified non-membership in F: true iff A = M\{1} is nonempty,
/// k = min A >= 4, and max A <= C(k, floor(k/2)) - 1.
bool binomial_exclusion(const RangeSet& m);

}  // namespace subsum
