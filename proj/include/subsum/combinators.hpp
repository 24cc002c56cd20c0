#pragma once

#include "subsum/sequence_spec.hpp"
#include "subsum/tail_engine.hpp"

namespace subsum {

/// The y-prepend operation: spec with one extra term y. Requires y > 0.
SequenceSpec adjoin(const Rational& y, const SequenceSpec& spec);

/// Adjoins the total sum of the spec as a new term. For Geometric-tail specs
/// the resulting range is rng(spec) with 2 added.
SequenceSpec adjoin_total_sum(const SequenceSpec& spec);

/// Prepends a*head to the spec, with a the smallest power of two whose scaled
/// minimum achievement-set gap exceeds the spec's total sum. The resulting
/// range is the elementwise product of the head's range and the spec's range.
SequenceSpec scale_concat(const FiniteSequence& head, const SequenceSpec& spec);

/// True iff adjoining y leaves the exact range unchanged. Geometric tails
/// only; GN specs are rejected (no full-range engine for them).
bool cis_contains(const SequenceSpec& spec, const Rational& y,
                  int max_prefix = kDefaultPrefixLimit);

}  // namespace subsum
