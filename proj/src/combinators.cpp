#include "subsum/combinators.hpp"

namespace subsum {

SequenceSpec adjoin(const Rational& y, const SequenceSpec& spec) {
  if (y <= 0) throw std::invalid_argument("adjoin: term must be positive");
  SequenceSpec out = spec;
  out.prefix.push_back(y);
  return out;
}

SequenceSpec adjoin_total_sum(const SequenceSpec& spec) {
  return adjoin(spec.total_sum(), spec);
}

SequenceSpec scale_concat(const FiniteSequence& head, const SequenceSpec& spec) {
  Rational delta = min_gap(head);
  Rational x = spec.total_sum();
  // Smallest power of two a with a*delta > x; powers of two keep the scaled
  // head compatible with the dyadic shift-class analysis.
  Rational a = 1;
  while (a * delta <= x) a *= 2;
  while (a > 1 && (a / 2) * delta > x) a /= 2;
  SequenceSpec out = spec;
  for (const Rational& t : head.terms) out.prefix.push_back(a * t);
  return out;
}

bool cis_contains(const SequenceSpec& spec, const Rational& y, int max_prefix) {
  if (spec.tail != SequenceSpec::TailKind::Geometric)
    throw std::invalid_argument("cis_contains: Geometric-tail specs only");
  if (y <= 0) throw std::invalid_argument("cis_contains: y must be positive");
  return range_exact(adjoin(y, spec), max_prefix) == range_exact(spec, max_prefix);
}

}  // namespace subsum
