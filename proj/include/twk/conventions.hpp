#pragma once

// Frozen sign and normalization conventions. Their hash goes into the CLI
// version string, so outputs can be matched to the conventions that made them.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace twk {

/// (name, convention) pairs in a fixed order.
const std::vector<std::pair<std::string, std::string>>& convention_registry();

/// 64-bit FNV-1a over "name=value\n" lines of the registry.
std::uint64_t convention_hash();

/// 16 lowercase hex digits.
std::string convention_hash_hex();

}  // namespace twk
