#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "convkit/operators.hpp"
#include "convkit/suites.hpp"

using namespace convkit;

namespace {

QVec qv(std::vector<long> v) {
    QVec out;
    for (long x : v) out.emplace_back(x);
    return out;
}

RationalMatrix shear() {
    RationalMatrix t(2, 2);
    t.at(0, 0) = 1;
    t.at(0, 1) = 1;
    t.at(1, 0) = 0;
    t.at(1, 1) = 1;
    return t;
}

}  // namespace

TEST_CASE("matrix basics") {
    RationalMatrix id = RationalMatrix::identity(3);
    CHECK(mat_apply(id, qv({1, -2, 3})) == qv({1, -2, 3}));
    RationalMatrix t = shear();
    CHECK(mat_apply(t, qv({2, 5})) == qv({7, 5}));
    RationalMatrix n(2, 2);
    n.at(0, 0) = -1;
    n.at(1, 1) = Rat(1, 2);
    RationalMatrix an = mat_abs(n);
    CHECK(an.at(0, 0) == 1);
    CHECK(an.at(1, 1) == Rat(1, 2));
    CHECK_THROWS_AS(mat_apply(t, qv({1, 2, 3})), std::invalid_argument);
}

TEST_CASE("linear image of a term evaluates pointwise") {
    RationalMatrix t = shear();
    auto corpus = qvec_corpus_dim(40, 2, 11);
    for (const TermPtr& term : corpus) {
        TermPtr img = convkit::apply(t, term);
        for (long k = 1; k <= 25; ++k)
            CHECK(eval_term(img, k) == mat_apply(t, eval_term(term, k)));
    }
    // Linearity: T(x + y) = Tx + Ty on terms.
    TermPtr a = corpus[0], b = corpus[1];
    TermPtr sum_img = convkit::apply(t, t_sum({a, b}));
    TermPtr img_sum = t_sum({convkit::apply(t, a), convkit::apply(t, b)});
    for (long k = 1; k <= 25; ++k) CHECK(eval_term(sum_img, k) == eval_term(img_sum, k));

    CHECK_THROWS_AS(convkit::apply(t, t_unit_vectors(Ambient::linf)), std::domain_error);
    CHECK_THROWS_AS(convkit::apply(t, t_harmonic(CarrierTag::QVec, qv({1, 2, 3}))),
                    std::invalid_argument);
}

TEST_CASE("order bounded operator witness") {
    RationalMatrix t = shear();
    OperatorBoundWitness w = is_order_bounded_operator(t, qv({1, 1}));
    CHECK(w.image_bound == qv({2, 1}));
    CHECK(interval_image_within(t, qv({1, 1}), w.image_bound));
    // A strictly smaller bound is refuted by some vertex of [-e, e].
    CHECK(!interval_image_within(t, qv({1, 1}), QVec{Rat(3, 2), Rat(1)}));

    RationalMatrix m(2, 2);
    m.at(0, 0) = Rat(-1, 2);
    m.at(0, 1) = 2;
    m.at(1, 0) = 1;
    m.at(1, 1) = -3;
    OperatorBoundWitness wm = is_order_bounded_operator(m, qv({2, 1}));
    CHECK(wm.image_bound == qv({3, 5}));
    CHECK(interval_image_within(m, qv({2, 1}), wm.image_bound));
}

TEST_CASE("relative-uniform continuity across the corpus") {
    auto corpus = qvec_corpus_dim(50, 2, 12);
    for (const RationalMatrix& t : random_matrices(8, 2, 13)) {
        LatticeReport rep = ru_continuity_check(t, corpus);
        CHECK(rep.passed());
        CHECK(rep.cases > 0);
    }
    LatticeReport rep = ru_continuity_check(shear(), corpus);
    CHECK(rep.passed());
}
