#pragma once

#include <vector>

#include "subsum/finite_enum.hpp"

namespace subsum {

/// A finite sequence whose entries are rational combinations of abstract,
/// rationally independent basis symbols b_1,...,b_s.
struct SymbolicSequence {
  int basis_size = 0;
  std::vector<std::vector<Rational>> entries;  // coordinate vectors, length s

  void validate() const;  // nonempty, entry sizes match, no zero entry

  /// JSON round-trip: {"basis": 2, "entries": [["1","0"],["0","1"]]}.
  std::string to_json() const;
  static SymbolicSequence from_json(const std::string& text);
};

/// Range of the cardinal function computed by exact subset-sum enumeration
/// over coordinate vectors; the oracle rationalize is verified against.
RangeSet symbolic_range(const SymbolicSequence& seq, int max_len = kDefaultEnumLimit);

/// The base K = ceil(2 + 2*D*sum of |coordinates|) used by rationalize, with
/// D the common denominator of all coordinates.
Int rationalize_base(const SymbolicSequence& seq);

/// Maps each entry through phi: sum z_j b_j -> sum z_j K^j and clears
/// denominators, producing positive integers with the same cardinal-function
/// range. Entries with non-positive phi-image are rejected; the computed K is
/// re-verified against symbolic_range rather than trusted.
FiniteSequence rationalize(const SymbolicSequence& seq, int max_len = kDefaultEnumLimit);

}  // namespace subsum
