#pragma once

#include <cstdint>
#include <string>

#include "subsum/f_search.hpp"
#include "subsum/finite_enum.hpp"
#include "subsum/gn.hpp"
#include "subsum/tail_engine.hpp"

namespace subsum {

/// Resource limits shared by the engines, overridable from a flat
/// key = value config file.
struct Limits {
  int max_prefix_len = kDefaultPrefixLimit;
  std::uint64_t max_search_candidates = kDefaultCandidateCeiling;
  int max_automaton_states = kDefaultAutomatonLimit;
  int max_enum_len = kDefaultEnumLimit;
};

/// Parses a config file of `key = value` lines (# starts a comment; blank
/// lines ignored). Unknown keys are rejected.
Limits load_limits(const std::string& path);

}  // namespace subsum
