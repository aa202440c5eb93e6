#pragma once

#include <gmpxx.h>

#include <string>

namespace gw {

using Rat = mpq_class;
using Int = mpz_class;

/// Renders a rational as "num/den" with den > 0, always including "/1".
std::string rat_to_string(const Rat& r);

/// Parses "num", "num/den" or "-num/den". Throws input_error on anything
/// else (including den == 0).
Rat rat_from_string(const std::string& s);

} // namespace gw
