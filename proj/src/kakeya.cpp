#include "subsum/kakeya.hpp"

#include <algorithm>

namespace subsum {

std::string classification_name(Classification c) {
  switch (c) {
    case Classification::Finite: return "finite";
    case Classification::IntervalFilling: return "interval_filling";
    case Classification::UnionOfIntervals: return "union_of_intervals";
    case Classification::Cantorval: return "cantorval";
  }
  return "?";
}

std::vector<Rational> canonical_terms(const SequenceSpec& spec, int n) {
  std::vector<Rational> sorted = spec.prefix;
  std::stable_sort(sorted.begin(), sorted.end(), std::greater<Rational>());
  std::vector<Rational> out;
  out.reserve(n);
  size_t pi = 0;
  int ti = 1;
  bool has_tail = spec.tail != SequenceSpec::TailKind::None;
  while (static_cast<int>(out.size()) < n) {
    if (pi < sorted.size() && (!has_tail || sorted[pi] >= spec.tail_term(ti))) {
      out.push_back(sorted[pi++]);
    } else if (has_tail) {
      out.push_back(spec.tail_term(ti++));
    } else {
      break;  // finite sequence exhausted
    }
  }
  return out;
}

Rational tail_sum_at(const SequenceSpec& spec, int n) {
  if (n < 0) throw std::invalid_argument("tail_sum_at: negative index");
  Rational r = spec.total_sum();
  for (const Rational& x : canonical_terms(spec, n)) r -= x;
  return r;
}

KakeyaReport analyze(const SequenceSpec& spec) {
  spec.validate();
  KakeyaReport rep;

  // Region of interest: everything up to the last prefix term in canonical
  // order, plus two tail terms of slack so prefix/tail duplicates are visible.
  int region = static_cast<int>(spec.prefix.size());
  if (spec.tail != SequenceSpec::TailKind::None && !spec.prefix.empty()) {
    Rational smallest = *std::min_element(spec.prefix.begin(), spec.prefix.end());
    int t = 1;
    while (spec.tail_term(t) >= smallest) ++t;
    region = static_cast<int>(spec.prefix.size()) + t + 1;
  }
  if (region == 0) region = 1;  // bare tail: one representative term
  rep.canonical_order = canonical_terms(spec, region);

  Rational remaining = spec.total_sum();
  for (size_t i = 0; i < rep.canonical_order.size(); ++i) {
    remaining -= rep.canonical_order[i];
    int idx = static_cast<int>(i) + 1;
    if (rep.canonical_order[i] < remaining) rep.strict_set.insert(idx);
    if (rep.canonical_order[i] > remaining) rep.violation_set.insert(idx);
  }

  switch (spec.tail) {
    case SequenceSpec::TailKind::None:
      rep.classification = Classification::Finite;
      // The last term always exceeds the empty remainder; that is not a
      // Kakeya violation for a finite sequence.
      rep.violation_set.erase(static_cast<int>(rep.canonical_order.size()));
      break;
    case SequenceSpec::TailKind::GN:
      rep.classification = Classification::Cantorval;
      break;
    case SequenceSpec::TailKind::Geometric:
      if (rep.violation_set.empty()) {
        rep.classification = Classification::IntervalFilling;
        rep.interval_count = 1;
      } else {
        rep.classification = Classification::UnionOfIntervals;
        rep.interval_count = Int(1) << rep.violation_set.size();
      }
      break;
  }
  return rep;
}

bool Constraint::check(const RangeSet& m) const {
  if (m.symbolic()) return true;  // the laws below govern bounded ranges only
  Int mx = m.finites.empty() ? Int(0) : m.max_finite();
  switch (kind) {
    case Kind::Contains:
      return m.contains(value);
    case Kind::LowerBoundMax:
      return mx >= value;
    case Kind::UpperBoundMax:
      return mx <= value;
    case Kind::MemberOf:
      for (const RangeSet& s : sets)
        if (m == s) return true;
      return false;
    case Kind::NotPair:
      return !(m.finites.size() == 2 && m.contains(1) && mx >= 3);
    case Kind::NotSet:
      return m != sets.at(0);
    case Kind::GapDoublesMax: {
      if (m == RangeSet{1, 2} || m.contains(3)) return true;
      auto it = m.finites.lower_bound(Int(3));
      if (it == m.finites.end()) return true;  // nothing >= 3 present
      return mx >= 2 * (*it - 1);
    }
    case Kind::NoThreeMaxSeven:
      if (m == RangeSet{1, 2} || m.contains(3)) return true;
      return mx >= 7;
    case Kind::NoFourMaxSeven:
      if (m.contains(4) || mx < 5) return true;
      return mx >= 7;
  }
  return true;
}

std::string Constraint::str() const {
  switch (kind) {
    case Kind::Contains: return "contains(" + value.str() + ")";
    case Kind::LowerBoundMax: return "max>=" + value.str();
    case Kind::UpperBoundMax: return "max<=" + value.str();
    case Kind::MemberOf: {
      std::string s = "member_of(";
      for (size_t i = 0; i < sets.size(); ++i) s += (i ? "," : "") + sets[i].str();
      return s + ")";
    }
    case Kind::NotPair: return "not_of_form{1,m>=3}";
    case Kind::NotSet: return "not_equal" + sets.at(0).str();
    case Kind::GapDoublesMax: return "gap_doubles_max";
    case Kind::NoThreeMaxSeven: return "no_three_implies_max>=7";
    case Kind::NoFourMaxSeven: return "no_four_implies_max>=7";
  }
  return "?";
}

std::vector<Constraint> implied_constraints(const SequenceSpec& spec) {
  KakeyaReport rep = analyze(spec);
  std::vector<Constraint> out;
  if (rep.classification != Classification::IntervalFilling) {
    if (spec.tail == SequenceSpec::TailKind::Geometric)
      out.push_back({Constraint::Kind::Contains, 1, {}, "1 in M for each M in R"});
    return out;
  }

  size_t k = rep.strict_set.size();
  out.push_back({Constraint::Kind::Contains, 2, {}, "2 in rng(f)"});
  out.push_back({Constraint::Kind::UpperBoundMax, Int(1) << (k + 1), {},
                 "max rng(f) <= 2^{k+1}"});
  if (k >= 1)
    out.push_back({Constraint::Kind::LowerBoundMax, 3, {}, "max rng(f) >= 3"});
  if (k == 1)
    out.push_back({Constraint::Kind::MemberOf, 0,
                   {RangeSet{1, 2, 3}, RangeSet{1, 2, 3, 4}},
                   "either {1,2,3} or {1,2,3,4}"});
  out.push_back({Constraint::Kind::NotPair, 0, {}, "{1,m} not in I_1 for m >= 3"});
  out.push_back({Constraint::Kind::NotSet, 0, {RangeSet{1, 2, 4}},
                 "{1,2,4} in I minus I_1"});
  out.push_back({Constraint::Kind::GapDoublesMax, 0, {}, "max M >= 2m"});
  out.push_back({Constraint::Kind::NoThreeMaxSeven, 0, {}, "3 not in M implies max M >= 7"});
  out.push_back({Constraint::Kind::NoFourMaxSeven, 0, {},
                 "4 not in M and max M >= 5 implies max M >= 7"});

  // Repeated term forces a fourfold point.
  const auto& xs = rep.canonical_order;
  for (size_t i = 0; i + 1 < xs.size(); ++i) {
    if (xs[i] == xs[i + 1]) {
      out.push_back({Constraint::Kind::LowerBoundMax, 4, {},
                     "x_k = x_{k+1} implies max rng(f) >= 4"});
      break;
    }
  }

  // Two strict inequalities with room to spare: x_m < r_m and x_k + x_m < r_k.
  bool two_strict = false;
  for (int m : rep.strict_set) {
    for (int kk = 1; kk < m && !two_strict; ++kk) {
      if (xs[kk - 1] + xs[m - 1] < tail_sum_at(spec, kk)) two_strict = true;
    }
    if (two_strict) break;
  }
  if (two_strict)
    out.push_back({Constraint::Kind::LowerBoundMax, 4, {},
                   "x_m < r_m and x_k + x_m < r_k imply max rng(f) >= 4"});

  return out;
}

}  // namespace subsum
