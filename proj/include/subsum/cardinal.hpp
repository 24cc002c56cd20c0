#pragma once

#include <set>
#include <string>
#include <vector>

#include "subsum/rational.hpp"

namespace subsum {

/// A multiplicity: a nonnegative integer, omega, or continuum.
/// Ordering: Finite(a) < Finite(b) iff a < b; every finite value < Omega < Continuum.
class CardinalValue {
 public:
  enum class Kind { Finite, Omega, Continuum };

  CardinalValue() : kind_(Kind::Finite), n_(0) {}
  static CardinalValue finite(Int n) { return CardinalValue(Kind::Finite, std::move(n)); }
  static CardinalValue omega() { return CardinalValue(Kind::Omega, 0); }
  static CardinalValue continuum() { return CardinalValue(Kind::Continuum, 0); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  const Int& value() const { return n_; }

  /// Absorbing addition: any infinite summand dominates, Continuum beats Omega.
  CardinalValue operator+(const CardinalValue& o) const;
  bool operator==(const CardinalValue& o) const { return kind_ == o.kind_ && n_ == o.n_; }
  bool operator!=(const CardinalValue& o) const { return !(*this == o); }
  bool operator<(const CardinalValue& o) const;

  std::string str() const;

 private:
  CardinalValue(Kind k, Int n) : kind_(k), n_(std::move(n)) {}
  Kind kind_;
  Int n_;
};

/// A finite set of positive integer multiplicities plus symbolic flags for
/// omega and continuum; the value of rng(f).
struct RangeSet {
  std::set<Int> finites;
  bool has_omega = false;
  bool has_continuum = false;

  RangeSet() = default;
  RangeSet(std::initializer_list<int> xs) {
    for (int x : xs) finites.insert(Int(x));
  }

  bool empty() const { return finites.empty() && !has_omega && !has_continuum; }
  bool symbolic() const { return has_omega || has_continuum; }
  Int max_finite() const;  // throws if finites empty
  bool contains(const Int& n) const { return finites.count(n) != 0; }

  bool operator==(const RangeSet& o) const {
    return finites == o.finites && has_omega == o.has_omega && has_continuum == o.has_continuum;
  }
  bool operator!=(const RangeSet& o) const { return !(*this == o); }
  bool operator<(const RangeSet& o) const;

  /// "{1,2,4}", with "ω" and "𝔠" appended when the flags are set.
  std::string str() const;
};

/// Elementwise products of two range sets. Symbolic absorption:
/// finite*omega = omega, anything*continuum = continuum, omega*omega = omega.
RangeSet product_range(const RangeSet& m, const RangeSet& l);

/// True iff every factorization M = A*B over integer sets containing 1 forces
/// A = {1} or B = {1}. Throws on symbolic flags.
bool is_prime_set(const RangeSet& m);

}  // namespace subsum
