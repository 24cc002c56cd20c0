#pragma once

#include <map>
#include <vector>

#include "subsum/cardinal.hpp"
#include "subsum/rational.hpp"

namespace subsum {

/// Raised when an input exceeds a configured resource limit.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Nonempty multiset of positive rational terms; order irrelevant.
struct FiniteSequence {
  std::vector<Rational> terms;

  FiniteSequence() = default;
  explicit FiniteSequence(std::vector<Rational> t);

  Rational total() const;
};

/// Exact multiplicity of every achievable subsum, including 0 -> 1 (empty sum).
/// Counts sum to 2^(number of terms).
using CardinalProfile = std::map<Rational, Int>;

inline constexpr int kDefaultEnumLimit = 30;

/// Exact cardinal profile by dynamic programming over the multiset.
/// Throws ResourceLimitError when the sequence is longer than max_len.
CardinalProfile profile(const FiniteSequence& seq, int max_len = kDefaultEnumLimit);

/// The set of multiplicities attained; always contains 1.
RangeSet range_of(const FiniteSequence& seq, int max_len = kDefaultEnumLimit);

RangeSet range_of_profile(const CardinalProfile& prof);

/// Minimum gap between consecutive distinct subsums of seq.
/// Requires at least two distinct subsums.
Rational min_gap(const FiniteSequence& seq, int max_len = kDefaultEnumLimit);

}  // namespace subsum
