#pragma once

#include "subsum/cardinal.hpp"
#include "subsum/sequence_spec.hpp"

namespace subsum {

inline constexpr int kDefaultPrefixLimit = 20;

/// Exact cardinal-function value f(x) for a spec with a Geometric tail.
/// Returns Finite(0) for x outside the achievement set.
CardinalValue point_count(const SequenceSpec& spec, const Rational& x);

/// Exact finite range of the cardinal function of a Geometric-tail spec over
/// all real x. Never samples: interval contributions are derived symbolically
/// from dyadic shift-class sizes.
RangeSet range_exact(const SequenceSpec& spec, int max_prefix = kDefaultPrefixLimit);

/// All 2^|prefix| subset sums of the prefix, as a multiset (unsorted,
/// subset-mask order).
std::vector<Rational> prefix_shifts(const SequenceSpec& spec);

/// Key identifying the class of s modulo c*D (D = dyadic rationals): two
/// shifts share a key iff their difference divided by c is dyadic.
std::pair<Int, Int> shift_class_key(const Rational& s, const Rational& c);

}  // namespace subsum
