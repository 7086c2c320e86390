#pragma once

#include <string>

#include "convkit/seqterm.hpp"

namespace convkit {

// Carrier Q(sqrt 2): pairs (a, b) standing for a + b*sqrt(2); b == 0 marks the
// rational points. A sequence converges iff it converges in the usual sense
// and some tail consists of rationals only or of irrationals only.
//
// The rules satisfy (N1) and (N2) but the alternating braid of a rational and
// an irrational null sequence violates (N3).

struct TaggedLineReport {
    bool n1_ok = false;
    bool n2_ok = false;
    bool n3_fails = false;
    long cases = 0;
    std::string detail;

    bool passed() const { return n1_ok && n2_ok && n3_fails; }
};

// Terms use CarrierTag::QVec with dim = 2 as the (a, b) coordinate pair.
bool tagged_converges(const TermPtr& t, const QVec& limit);

TaggedLineReport tagged_line_demo();

}  // namespace convkit
