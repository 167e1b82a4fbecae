#pragma once

#include <gmpxx.h>

#include <string>

namespace hha {

// Exact arbitrary-precision rational. All arithmetic in the library is exact;
// no floating point anywhere.
using Rat = mpq_class;

// Parses "p", "-p/q", "p/q". Throws std::invalid_argument on malformed input
// or zero denominator. The result is canonicalized.
Rat rat_parse(const std::string& s);

// Canonical "p/q" string ("p" when q == 1).
std::string rat_str(const Rat& r);

}  // namespace hha
