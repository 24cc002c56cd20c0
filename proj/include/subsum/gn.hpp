#pragma once

#include <string>
#include <vector>

#include "subsum/cardinal.hpp"
#include "subsum/sequence_spec.hpp"

namespace subsum {

inline constexpr int kDefaultAutomatonLimit = 100000;

/// An eventually periodic digit string over {0,2,3,5}; an empty period means
/// an all-zero tail. Its value is the exact rational sum of a_n/4^n.
struct DigitString {
  std::vector<int> preperiod;
  std::vector<int> period;

  void validate() const;
  Rational value() const;
  /// The n-th digit, 1-based, resolving the periodic structure.
  int digit_at(int n) const;

  /// "235:(05)" notation: preperiod digits, then the period in parentheses.
  std::string str() const;
  static DigitString parse(const std::string& text);
};

/// Exact number of digit strings (a_n) over {0,2,3,5} with sum a_n/4^n = x,
/// which equals the number of subsum representations of x in (3,2;1/4).
/// Computed on the pruned remainder automaton; returns Finite(0) outside
/// [0,5/3], and Omega/Continuum when the path census is infinite.
CardinalValue gn_count(const Rational& x, int max_states = kDefaultAutomatonLimit);

/// The digit strings counted by gn_count when their number is finite and at
/// most max_list; throws ResourceLimitError otherwise.
std::vector<DigitString> gn_representations(const Rational& x, int max_list = 16,
                                            int max_states = kDefaultAutomatonLimit);

/// Sum of gn_count((x - sigma)/scale) over all prefix subset shifts sigma of
/// a GN-tail spec; infinite summands absorb.
CardinalValue gn_prefix_count(const SequenceSpec& spec, const Rational& x,
                              int max_states = kDefaultAutomatonLimit);

struct PatternVerdict {
  bool equal_values = false;
  bool matches_pattern = false;
  /// The located n_0 < n_1 < ... within the scanned window.
  std::vector<int> markers;
};

/// Double-representation pattern for the Guthrie-Nymann digit system: a and b
/// agree before n_0, (a,b) = (2,3) at n_0, then blocks with a-b = 3 (digits
/// a in {3,5}) and b-a = 3 (digits a in {0,2}) alternate, separated by the
/// markers (5,0) and (0,5). Decided over the eventually-periodic structure.
PatternVerdict pattern_check(const DigitString& a, const DigitString& b);

}  // namespace subsum
