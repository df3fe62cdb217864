#pragma once

#include "flaghom/weyl.hpp"

#include <string>

namespace flaghom {

// Binary group cache.  Layout (little-endian):
//   "WGC1" | version u16 | type u8 (ASCII letter) | rank u8 | count u64
//   count records of: word length u8, letters u8... (0-based generators),
//                     right-descent mask u16, left-descent mask u16
//   trailing u64 FNV-1a checksum of every preceding byte.
// Matrices and multiplication tables are reconstructed from the words on
// load; stored descent masks double as an integrity check.
void write_group_cache(const WeylGroup& W, const std::string& path);

WeylGroup read_group_cache(const std::string& path,
                           uint64_t max_elements = WeylGroup::kDefaultBudget);

} // namespace flaghom
