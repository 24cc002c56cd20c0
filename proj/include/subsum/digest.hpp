#pragma once

#include <string>
#include <string_view>

namespace subsum {

/// 64-bit FNV-1a digest as 16 lowercase hex characters; used to stamp reports
/// with the exact input they were produced from.
std::string fnv1a_hex(std::string_view data);

}  // namespace subsum
