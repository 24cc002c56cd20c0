#pragma once

#include <set>

#include "subsum/cardinal.hpp"
#include "subsum/sequence_spec.hpp"

namespace subsum {

enum class Classification { Finite, IntervalFilling, UnionOfIntervals, Cantorval };

std::string classification_name(Classification c);

/// Kakeya analysis of a spec in canonical (nonincreasing, prefix-first on
/// ties) order. strict_set holds the indices n with x_n < r_n and
/// violation_set those with x_n > r_n; for specs with an infinite tail both
/// are restricted to the merged region covering the prefix, beyond which a
/// geometric tail satisfies x_n = r_n identically.
struct KakeyaReport {
  std::vector<Rational> canonical_order;  // merged view over the prefix region
  std::set<int> strict_set;               // 1-based
  std::set<int> violation_set;            // 1-based
  Classification classification = Classification::Finite;
  Int interval_count = 0;  // 1 for IntervalFilling, 2^|violation_set| for Union
};

/// First n terms of the canonical merged order.
std::vector<Rational> canonical_terms(const SequenceSpec& spec, int n);

/// Exact tail remainder r_n over the canonical order; n = 0 gives the total.
Rational tail_sum_at(const SequenceSpec& spec, int n);

KakeyaReport analyze(const SequenceSpec& spec);

/// A machine-checkable constraint on a range set, tagged with the statement
/// it comes from so a violation names its source statement.
struct Constraint {
  enum class Kind {
    Contains,       // value must be a member
    LowerBoundMax,  // max of the range >= value
    UpperBoundMax,  // max of the range <= value
    MemberOf,       // range is one of the listed sets
    NotPair,        // range is not {1,m} with m >= 3
    NotSet,         // range differs from the given set
    GapDoublesMax,  // if 3..m all absent (and range != {1,2}) then max >= 2m
    NoThreeMaxSeven,  // 3 absent and range != {1,2} forces max >= 7
    NoFourMaxSeven,   // 4 absent and max >= 5 forces max >= 7
  };

  Kind kind;
  Int value = 0;                 // Contains / bounds / NotPair is parameterless
  std::vector<RangeSet> sets;    // MemberOf alternatives or the NotSet target
  std::string anchor;            // verbatim quote locating the source statement

  bool check(const RangeSet& m) const;
  std::string str() const;
};

/// Constraints that the exact range of an interval-filling Geometric-tail
/// spec must satisfy; for non-interval-filling specs only the applicable
/// subset is emitted.
std::vector<Constraint> implied_constraints(const SequenceSpec& spec);

}  // namespace subsum
