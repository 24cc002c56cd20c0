#include "subsum/finite_enum.hpp"

#include <numeric>

namespace subsum {

FiniteSequence::FiniteSequence(std::vector<Rational> t) : terms(std::move(t)) {
  if (terms.empty()) throw std::invalid_argument("FiniteSequence: empty");
  for (const Rational& x : terms)
    if (x <= 0) throw std::invalid_argument("FiniteSequence: terms must be positive");
}

Rational FiniteSequence::total() const {
  Rational s = 0;
  for (const Rational& x : terms) s += x;
  return s;
}

CardinalProfile profile(const FiniteSequence& seq, int max_len) {
  if (seq.terms.empty()) throw std::invalid_argument("profile: empty sequence");
  if (static_cast<int>(seq.terms.size()) > max_len)
    throw ResourceLimitError("profile: sequence length " + std::to_string(seq.terms.size()) +
                             " exceeds limit " + std::to_string(max_len));

  // Scale to integers by the common denominator; the DP state space is then
  // bounded by the scaled total sum.
  Int lcm = 1;
  for (const Rational& x : seq.terms) lcm = boost::multiprecision::lcm(lcm, den(x));
  std::vector<Int> scaled;
  scaled.reserve(seq.terms.size());
  for (const Rational& x : seq.terms) scaled.push_back(num(x) * (lcm / den(x)));

  std::map<Int, Int> counts;
  counts[0] = 1;
  for (const Int& t : scaled) {
    std::map<Int, Int> next = counts;
    for (const auto& [s, c] : counts) next[s + t] += c;
    counts.swap(next);
  }

  CardinalProfile out;
  for (const auto& [s, c] : counts) out.emplace(Rational(s, lcm), c);
  return out;
}

RangeSet range_of_profile(const CardinalProfile& prof) {
  RangeSet r;
  for (const auto& [sum, count] : prof) r.finites.insert(count);
  return r;
}

RangeSet range_of(const FiniteSequence& seq, int max_len) {
  return range_of_profile(profile(seq, max_len));
}

Rational min_gap(const FiniteSequence& seq, int max_len) {
  CardinalProfile prof = profile(seq, max_len);
  if (prof.size() < 2) throw std::invalid_argument("min_gap: fewer than two distinct subsums");
  Rational best = 0;
  auto it = prof.begin();
  Rational prev = it->first;
  for (++it; it != prof.end(); ++it) {
    Rational gap = it->first - prev;
    if (best == 0 || gap < best) best = gap;
    prev = it->first;
  }
  return best;
}

}  // namespace subsum
