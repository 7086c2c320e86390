#include "convkit/operators.hpp"

#include <stdexcept>

namespace convkit {

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix t(n, n);
    for (int i = 0; i < n; ++i) t.at(i, i) = 1;
    return t;
}

QVec mat_apply(const RationalMatrix& t, const QVec& x) {
    if (static_cast<int>(x.size()) != t.cols) throw std::invalid_argument("shape mismatch");
    QVec y(t.rows, Rat(0));
    for (int i = 0; i < t.rows; ++i)
        for (int j = 0; j < t.cols; ++j) y[i] += t.at(i, j) * x[j];
    return y;
}

RationalMatrix mat_abs(const RationalMatrix& t) {
    RationalMatrix u(t.rows, t.cols);
    for (std::size_t i = 0; i < t.a.size(); ++i) u.a[i] = abs(t.a[i]);
    return u;
}

TermPtr apply(const RationalMatrix& t, const TermPtr& term) {
    if (!term) throw std::invalid_argument("null term");
    if (term->carrier != CarrierTag::QVec)
        throw std::domain_error("UnsupportedDescriptor: operators act on QVec terms");
    if (term->dim != t.cols && !term->children.empty()) {
        // dimensionality is validated on the payload leaves below
    }
    switch (term->kind) {
        case SeqTerm::Kind::Const:
            return t_const(CarrierTag::QVec, mat_apply(t, term->v));
        case SeqTerm::Kind::Geom:
            return t_geom(CarrierTag::QVec, mat_apply(t, term->v), term->r);
        case SeqTerm::Kind::Harmonic:
            return t_harmonic(CarrierTag::QVec, mat_apply(t, term->v));
        case SeqTerm::Kind::Sum: {
            std::vector<TermPtr> kids;
            for (const auto& ch : term->children) kids.push_back(apply(t, ch));
            return t_sum(std::move(kids));
        }
        case SeqTerm::Kind::Shift:
            return t_shift(apply(t, term->children[0]), term->k0);
        case SeqTerm::Kind::Braid: {
            std::vector<TermPtr> kids;
            for (const auto& ch : term->children) kids.push_back(apply(t, ch));
            return t_braid(term->period, term->selector, std::move(kids));
        }
        default:
            throw std::domain_error("UnsupportedDescriptor: operators act on QVec terms");
    }
}

OperatorBoundWitness is_order_bounded_operator(const RationalMatrix& t, const QVec& e) {
    for (const Rat& c : e)
        if (c < 0) throw std::domain_error("e must be nonnegative");
    OperatorBoundWitness w;
    w.abs_t = mat_abs(t);
    w.image_bound = mat_apply(w.abs_t, e);
    return w;
}

bool interval_image_within(const RationalMatrix& t, const QVec& e, const QVec& bound) {
    int n = t.cols;
    if (static_cast<int>(e.size()) != n) throw std::invalid_argument("shape mismatch");
    // T is linear, so the image of [-e,e] is the convex hull of vertex images.
    for (long mask = 0; mask < (1L << n); ++mask) {
        QVec v(n);
        for (int j = 0; j < n; ++j) v[j] = (mask >> j & 1) ? e[j] : -e[j];
        QVec img = mat_apply(t, v);
        if (!qv_leq(qv_abs(img), bound)) return false;
    }
    return true;
}

LatticeReport ru_continuity_check(const RationalMatrix& t, std::span<const TermPtr> corpus) {
    LatticeReport rep{"ru-continuity", 0, 0, ""};
    for (const TermPtr& term : corpus) {
        if (!term || term->carrier != CarrierTag::QVec || term->dim != t.cols) continue;
        RuResult in = ru_limit(term);
        if (in.status != Status::Limit) continue;
        ++rep.cases;
        RuResult out = ru_limit(apply(t, term));
        if (out.status != Status::Limit || out.limit != mat_apply(t, in.limit)) {
            ++rep.failures;
            if (rep.witness.empty()) rep.witness = "image term lost ru convergence";
            continue;
        }
        // Certificate: |T(x_k - L)| <= |T| |x_k - L| <= |T| e pointwise, so the
        // scaled input regulator carries over; verify at sample indices.
        QVec te = mat_apply(mat_abs(t), in.e);
        TermPtr image = apply(t, term);
        for (long k : {1L, 2L, 5L, 10L, 100L, 1000L}) {
            QVec d = qv_abs(qv_sub(eval_term(image, k), out.limit));
            QVec lhs = qv_abs(qv_sub(eval_term(term, k), in.limit));
            if (!qv_leq(d, mat_apply(mat_abs(t), lhs)) || !qv_leq(d, te)) {
                ++rep.failures;
                if (rep.witness.empty()) rep.witness = "regulator domination failed";
                break;
            }
        }
    }
    return rep;
}

}  // namespace convkit
