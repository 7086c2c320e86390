#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace convkit {

// Exact arithmetic everywhere in the lattice module; no rounding.
using Rat = mpq_class;

// Parse "p/q" or "p" (optional sign, q > 0 after canonicalization).
Rat parse_rat(const std::string& s);
std::string rat_str(const Rat& r);

// r^k for k >= 0.
Rat rat_pow(const Rat& r, long k);

using QVec = std::vector<Rat>;

}  // namespace convkit
