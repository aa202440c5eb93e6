#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gw {

/// FNV-1a 64-bit digest, rendered as 16 hex digits. Used for manifest
/// input digests and cache integrity checks.
std::uint64_t fnv1a64(std::string_view data);
std::string fnv1a64_hex(std::string_view data);

/// Parity of a permutation of 0..n-1: +1 even, -1 odd.
int permutation_parity(const std::vector<int>& p);

} // namespace gw
