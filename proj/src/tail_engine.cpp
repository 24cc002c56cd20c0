#include "subsum/tail_engine.hpp"

#include <algorithm>
#include <map>

namespace subsum {

namespace {

void require_geometric(const SequenceSpec& spec) {
  if (spec.tail != SequenceSpec::TailKind::Geometric)
    throw std::invalid_argument("tail engine requires a Geometric tail");
}

// Cardinal function of the bare tail (c/2^n): 1 at the endpoints {0,c},
// 2 at interior points with dyadic offset, 1 at interior non-dyadic points,
// 0 outside [0,c].
Int tail_count(const Rational& t, const Rational& c) {
  if (t < 0 || t > c) return 0;
  if (t == 0 || t == c) return 1;
  return is_dyadic(t, c) ? 2 : 1;
}

}  // namespace

std::vector<Rational> prefix_shifts(const SequenceSpec& spec) {
  std::vector<Rational> shifts{Rational(0)};
  shifts.reserve(size_t(1) << spec.prefix.size());
  for (const Rational& p : spec.prefix) {
    size_t n = shifts.size();
    for (size_t i = 0; i < n; ++i) shifts.push_back(shifts[i] + p);
  }
  return shifts;
}

CardinalValue point_count(const SequenceSpec& spec, const Rational& x) {
  require_geometric(spec);
  const Rational& c = spec.tail_param;
  Int total = 0;
  for (const Rational& s : prefix_shifts(spec)) total += tail_count(x - s, c);
  return CardinalValue::finite(total);
}

std::pair<Int, Int> shift_class_key(const Rational& s, const Rational& c) {
  Rational u = s / c;
  Int q = den(u);
  // Split q = 2^a * m with m odd.
  int a = 0;
  Int m = q;
  while ((m & 1) == 0) {
    m >>= 1;
    ++a;
  }
  if (m == 1) return {Int(1), Int(0)};
  // Residue of u modulo the dyadics: p * (2^-a) mod m, with 2^-1 = (m+1)/2.
  Int p = num(u) % m;
  if (p < 0) p += m;
  Int inv2 = (m + 1) / 2;
  Int inv = boost::multiprecision::powm(inv2, Int(a), m);
  return {m, (p * inv) % m};
}

RangeSet range_exact(const SequenceSpec& spec, int max_prefix) {
  require_geometric(spec);
  if (static_cast<int>(spec.prefix.size()) > max_prefix)
    throw ResourceLimitError("range_exact: prefix length " + std::to_string(spec.prefix.size()) +
                             " exceeds limit " + std::to_string(max_prefix));
  const Rational& c = spec.tail_param;
  std::vector<Rational> shifts = prefix_shifts(spec);

  std::vector<Rational> breakpoints;
  breakpoints.reserve(2 * shifts.size());
  for (const Rational& s : shifts) {
    breakpoints.push_back(s);
    breakpoints.push_back(s + c);
  }
  std::sort(breakpoints.begin(), breakpoints.end());
  breakpoints.erase(std::unique(breakpoints.begin(), breakpoints.end()), breakpoints.end());

  RangeSet out;
  // Every breakpoint is some shift or shift+c, hence a point of the set.
  for (const Rational& b : breakpoints) out.finites.insert(point_count(spec, b).value());

  // Open intervals between consecutive breakpoints. The active shift multiset
  // is constant on each; its value N is attained off every dyadic-offset
  // class, and N + n_j at the (dense) class-j dyadic-offset points.
  for (size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    Rational mid = (breakpoints[i] + breakpoints[i + 1]) / 2;
    std::map<std::pair<Int, Int>, Int> classes;
    Int active = 0;
    for (const Rational& s : shifts) {
      if (s < mid && mid < s + c) {
        ++active;
        ++classes[shift_class_key(s, c)];
      }
    }
    if (active == 0) continue;  // gap: no points of the set in this interval
    out.finites.insert(active);
    for (const auto& [key, size] : classes) out.finites.insert(active + size);
  }
  return out;
}

}  // namespace subsum
