#pragma once

#include <span>

#include "convkit/decide.hpp"
#include "convkit/seqterm.hpp"

namespace convkit {

struct RationalMatrix {
    int rows = 0, cols = 0;
    std::vector<Rat> a;  // row-major

    RationalMatrix() = default;
    RationalMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

    Rat& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    const Rat& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

    static RationalMatrix identity(int n);
};

QVec mat_apply(const RationalMatrix& t, const QVec& x);
RationalMatrix mat_abs(const RationalMatrix& t);

// Linear image of a closed-form term: payloads are mapped through T exactly.
TermPtr apply(const RationalMatrix& t, const TermPtr& term);

// Interval-image witness: T[-e, e] is contained in [-|T|e, |T|e].
struct OperatorBoundWitness {
    RationalMatrix abs_t;
    QVec image_bound;  // |T| e
};
OperatorBoundWitness is_order_bounded_operator(const RationalMatrix& t, const QVec& e);

// Checks the witness by mapping every vertex of [-e, e] through T.
bool interval_image_within(const RationalMatrix& t, const QVec& e, const QVec& bound);

// x_k ->u 0 implies T x_k ->u 0 across the corpus.
LatticeReport ru_continuity_check(const RationalMatrix& t, std::span<const TermPtr> corpus);

}  // namespace convkit
