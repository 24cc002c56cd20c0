#include "subsum/cardinal.hpp"

#include <algorithm>

namespace subsum {

CardinalValue CardinalValue::operator+(const CardinalValue& o) const {
  if (kind_ == Kind::Continuum || o.kind_ == Kind::Continuum) return continuum();
  if (kind_ == Kind::Omega || o.kind_ == Kind::Omega) return omega();
  return finite(n_ + o.n_);
}

bool CardinalValue::operator<(const CardinalValue& o) const {
  if (kind_ != o.kind_) return static_cast<int>(kind_) < static_cast<int>(o.kind_);
  return n_ < o.n_;
}

std::string CardinalValue::str() const {
  switch (kind_) {
    case Kind::Omega: return "omega";
    case Kind::Continuum: return "continuum";
    default: return n_.str();
  }
}

Int RangeSet::max_finite() const {
  if (finites.empty()) throw std::invalid_argument("RangeSet has no finite members");
  return *finites.rbegin();
}

bool RangeSet::operator<(const RangeSet& o) const {
  if (finites != o.finites) return finites < o.finites;
  if (has_omega != o.has_omega) return !has_omega;
  return !has_continuum && o.has_continuum;
}

std::string RangeSet::str() const {
  std::string out = "{";
  bool first = true;
  for (const Int& n : finites) {
    if (!first) out += ",";
    out += n.str();
    first = false;
  }
  if (has_omega) {
    if (!first) out += ",";
    out += "omega";
    first = false;
  }
  if (has_continuum) {
    if (!first) out += ",";
    out += "continuum";
  }
  return out + "}";
}

RangeSet product_range(const RangeSet& m, const RangeSet& l) {
  RangeSet out;
  for (const Int& a : m.finites)
    for (const Int& b : l.finites) out.finites.insert(a * b);
  // Absorption: Finite*Omega = Omega*Omega = Omega; Continuum absorbs everything.
  bool m_any = !m.finites.empty() || m.has_omega;
  bool l_any = !l.finites.empty() || l.has_omega;
  out.has_omega = (m.has_omega && l_any) || (l.has_omega && m_any);
  bool m_nonempty = !m.empty();
  bool l_nonempty = !l.empty();
  out.has_continuum = (m.has_continuum && l_nonempty) || (l.has_continuum && m_nonempty);
  return out;
}

namespace {

// Elementwise product of two integer sets.
std::set<Int> set_product(const std::set<Int>& a, const std::set<Int>& b) {
  std::set<Int> out;
  for (const Int& x : a)
    for (const Int& y : b) out.insert(x * y);
  return out;
}

}  // namespace

bool is_prime_set(const RangeSet& m) {
  if (m.symbolic())
    throw std::invalid_argument("is_prime_set: symbolic flags unsupported");
  const std::set<Int>& M = m.finites;
  if (!M.count(1)) throw std::invalid_argument("is_prime_set: 1 must be a member");
  if (M.size() <= 1) return true;

  // Any factorization M = A*B with 1 in both factors has A,B subsets of M.
  // For a fixed A, the maximal admissible B is {b in M | A*b subset of M};
  // a factorization with factor A exists iff A * Bmax = M.
  std::vector<Int> elems(M.begin(), M.end());
  size_t k = elems.size();
  for (size_t mask = 1; mask < (size_t(1) << k); ++mask) {
    if (!(mask & 1)) continue;  // A must contain elems[0] == 1
    std::set<Int> A;
    for (size_t i = 0; i < k; ++i)
      if (mask & (size_t(1) << i)) A.insert(elems[i]);
    if (A.size() < 2) continue;
    std::set<Int> B;
    for (const Int& b : M) {
      bool ok = true;
      for (const Int& a : A)
        if (!M.count(a * b)) { ok = false; break; }
      if (ok) B.insert(b);
    }
    if (B.size() < 2) continue;
    if (set_product(A, B) == M) return false;
  }
  return true;
}

}  // namespace subsum
