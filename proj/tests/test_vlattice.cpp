#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "convkit/decide.hpp"
#include "convkit/lattice.hpp"
#include "convkit/seqterm.hpp"
#include "convkit/suites.hpp"

using namespace convkit;

namespace {

QVec qv(std::vector<long> v) {
    QVec out;
    for (long x : v) out.emplace_back(x);
    return out;
}

Rat form_at(const CoordForms& cf, int coord, long k) {
    const ClassSeq& c = cf.coord[coord];
    return eval_form(c.cls[(k - 1) % c.period], k);
}

}  // namespace

TEST_CASE("coordinatewise lattice operations") {
    QVec x = qv({1, -1}), y = qv({0, 3});
    CHECK(qv_sup(x, y) == qv({1, 3}));
    CHECK(qv_inf(x, y) == qv({0, -1}));
    CHECK(qv_abs(x) == qv({1, 1}));
    CHECK(qv_pos(x) == qv({1, 0}));
    CHECK(qv_neg(x) == qv({0, 1}));
    CHECK(qv_sub(qv_pos(x), qv_neg(x)) == x);
    CHECK(qv_add(qv_pos(x), qv_neg(x)) == qv_abs(x));
    CHECK(qv_leq(qv_inf(x, y), x));
    CHECK(qv_leq(x, qv_sup(x, y)));
    CHECK(qv_scale(Rat(1, 2), qv({2, -4})) == qv({1, -2}));
    CHECK(qv_zero(2) == qv({0, 0}));
    CHECK(qv_ones(2) == qv({1, 1}));
}

TEST_CASE("lattice inequalities on random vectors") {
    auto rats = random_samples_01(60, 7);
    auto vec = [&](int i) { return QVec{rats[i] - Rat(1, 2), rats[i + 1], rats[i + 2] * 3}; };
    for (int i = 0; i + 5 < 60; i += 3) {
        QVec x = vec(i), y = vec(i + 3);
        // Reverse triangle and Birkhoff inequalities.
        CHECK(qv_leq(qv_abs(qv_sub(qv_abs(x), qv_abs(y))), qv_abs(qv_sub(x, y))));
        QVec z = qv({1, 0, -1});
        CHECK(qv_leq(qv_abs(qv_sub(qv_sup(x, z), qv_sup(y, z))), qv_abs(qv_sub(x, y))));
        CHECK(qv_add(qv_sup(x, y), qv_inf(x, y)) == qv_add(x, y));
    }
}

TEST_CASE("e-norm with ideal membership") {
    CHECK(*e_norm(qv({1, -2}), qv({1, 1})) == 2);
    CHECK(*e_norm(qv({0, 0}), qv({1, 1})) == 0);
    CHECK(*e_norm(qv({3, 1}), QVec{Rat(1, 2), Rat(1)}) == 6);
    CHECK(!e_norm(qv({1, 0}), qv({0, 1})).has_value());  // outside the ideal
    CHECK_THROWS_AS(e_norm(qv({1, 0}), qv({-1, 1})), std::domain_error);
}

TEST_CASE("lexicographic plane operations") {
    LexVec x{-1, 5};
    CHECK(lex_abs(x) == LexVec{1, -5});
    CHECK(lex_lt(LexVec{0, 100}, LexVec{1, -100}));
    CHECK(lex_lt(LexVec{1, 2}, LexVec{1, 3}));
    CHECK(!lex_lt(x, x));
    CHECK(lex_leq(x, x));
    CHECK(lex_sup(LexVec{0, 2}, LexVec{0, 5}) == LexVec{0, 5});
    CHECK(lex_sup(LexVec{1, -9}, LexVec{0, 5}) == LexVec{1, -9});
    CHECK(lex_inf(LexVec{1, -9}, LexVec{0, 5}) == LexVec{0, 5});
    CHECK(lex_pos(x) == LexVec{0, 0});
    CHECK(lex_neg_part(x) == LexVec{1, -5});
}

TEST_CASE("finitely supported sequences") {
    FinSeq a = fs_unit(3, Ambient::linf);
    CHECK(a.at(3) == 1);
    CHECK(a.at(4) == 0);
    FinSeq b;
    b.ambient = Ambient::linf;
    b.set(3, Rat(-2));
    b.set(5, Rat(1));
    CHECK(fs_sup(a, b).at(3) == 1);
    CHECK(fs_inf(a, b).at(3) == -2);
    CHECK(fs_abs(b).at(3) == 2);
    CHECK(fs_sub(a, b).at(3) == 3);
    CHECK(fs_leq(b, fs_abs(b)));
    CHECK(*e_norm(b, fs_abs(b)) == 1);
    CHECK(!e_norm(b, a).has_value());  // support escapes e
    b.set(5, Rat(0));  // setting zero erases the entry
    CHECK(b.entries.size() == 1);
    CHECK(*e_norm(b, a) == 2);
}

TEST_CASE("term evaluation semantics") {
    TermPtr g = t_geom(CarrierTag::QVec, qv({4, -8}), Rat(1, 2));
    CHECK(eval_term(g, 1) == qv({2, -4}));
    CHECK(eval_term(g, 3) == QVec{Rat(1, 2), Rat(-1)});
    TermPtr h = t_harmonic(CarrierTag::QVec, qv({6}));
    CHECK(eval_term(h, 3) == QVec{Rat(2)});
    TermPtr s = t_sum({g, t_const(CarrierTag::QVec, qv({1, 1}))});
    CHECK(eval_term(s, 1) == qv({3, -3}));
    TermPtr sh = t_shift(h, 2);
    CHECK(eval_term(sh, 1) == eval_term(h, 3));
    TermPtr br = t_braid(2, {0, 1}, {h, t_const(CarrierTag::QVec, qv({0}))});
    CHECK(eval_term(br, 1) == eval_term(h, 1));   // class 0 picks child 0
    CHECK(eval_term(br, 2) == qv({0}));           // class 1 picks child 1
    CHECK(eval_term(br, 3) == eval_term(h, 3));
    CHECK(eval_term(t_scale(Rat(-2), h), 2) == qv({-6}));

    CHECK_THROWS_AS(t_geom(CarrierTag::QVec, qv({1}), Rat(1)), std::invalid_argument);
    CHECK_THROWS_AS(t_geom(CarrierTag::QVec, qv({1}), Rat(-1, 2)), std::invalid_argument);
    CHECK_THROWS_AS(t_shift(h, -1), std::invalid_argument);
    CHECK_THROWS_AS(t_braid(2, {0}, {h, h}), std::invalid_argument);
    CHECK_THROWS_AS(t_braid(2, {0, 2}, {h, h}), std::invalid_argument);
    CHECK_THROWS_AS(eval_term(h, 0), std::domain_error);
    CHECK_THROWS_AS(eval_term(t_unit_vectors(Ambient::linf), 1), std::domain_error);

    FinSeq e2 = eval_term_finseq(t_unit_vectors(Ambient::c0), 2);
    CHECK(e2 == fs_unit(2, Ambient::c0));
}

TEST_CASE("closed-form compilation agrees with direct evaluation") {
    auto corpus = qvec_corpus(100, 3, 1);
    REQUIRE(corpus.size() == 100);
    for (const TermPtr& t : corpus) {
        CoordForms cf = compile_term(t);
        REQUIRE(cf.dim == t->dim);
        for (long k = 1; k <= 60; ++k) {
            QVec x = eval_term(t, k);
            for (int i = 0; i < cf.dim; ++i) CHECK(form_at(cf, i, k) == x[i]);
        }
    }
}

TEST_CASE("order limit with a verifiable dominating envelope") {
    TermPtr t = t_sum({t_geom(CarrierTag::QVec, qv({4, 0}), Rat(1, 2)),
                       t_harmonic(CarrierTag::QVec, qv({0, -3})),
                       t_const(CarrierTag::QVec, qv({1, 2}))});
    OResult o = o_limit(t);
    REQUIRE(o.status == Status::Limit);
    CHECK(o.limit == qv({1, 2}));
    for (long k = 1; k <= 200; ++k) {
        QVec d = qv_abs(qv_sub(eval_term(t, k), o.limit));
        for (int i = 0; i < 2; ++i) {
            CHECK(d[i] <= form_envelope(o.witness[i], k));
            CHECK(form_envelope(o.witness[i], k + 1) <= form_envelope(o.witness[i], k));
        }
    }
    // The envelope really decays to zero.
    for (int i = 0; i < 2; ++i)
        CHECK(form_envelope(o.witness[i], 1000000L) < Rat(1, 1000));
}

TEST_CASE("divergent oscillation has no limit on any route") {
    TermPtr t = t_braid(2, {0, 1},
                        {t_const(CarrierTag::QVec, qv({0})),
                         t_const(CarrierTag::QVec, qv({1}))});
    CHECK(o_limit(t).status == Status::NoLimit);
    CHECK(o_limit_limsup(t).status == Status::NoLimit);
    CHECK(ru_limit(t).status == Status::NoLimit);
    CHECK(mackey_limit(t).status == Status::NoLimit);
    CHECK(!is_order_cauchy(t));
    // ... yet it is order bounded.
    BoundResult b = term_order_bounded(t);
    CHECK(b.status == Status::Limit);
    for (long k = 1; k <= 16; ++k) CHECK(qv_leq(qv_abs(eval_term(t, k)), b.u));
}

TEST_CASE("convergence routes agree on the random corpus") {
    auto corpus = qvec_corpus(100, 3, 2);
    for (const TermPtr& t : corpus) {
        OResult o = o_limit(t);
        OResult ls = o_limit_limsup(t);
        RuResult ru = ru_limit(t);
        MackeyResult mk = mackey_limit(t);
        CHECK(o.status == ls.status);
        CHECK(o.status == ru.status);
        CHECK(o.status == mk.status);
        CHECK(is_order_cauchy(t) == (o.status == Status::Limit));
        if (o.status != Status::Limit) continue;
        CHECK(o.limit == ls.limit);
        CHECK(o.limit == ru.limit);
        CHECK(o.limit == mk.limit);
        // ru regulator dominates the whole deviation sequence; mackey bound
        // absorbs it outright.
        for (long k = 1; k <= 40; ++k) {
            QVec d = qv_abs(qv_sub(eval_term(t, k), o.limit));
            CHECK(qv_leq(d, ru.e));
            CHECK(qv_leq(d, mk.bound));
        }
        // eps-tails: past the envelope threshold the deviation sits below eps*e.
        for (int i = 0; i < t->dim; ++i) {
            Rat eps(1, 37);
            if (ru.e[i] == 0) continue;
            auto k0 = envelope_threshold(o.witness[i], eps * ru.e[i]);
            REQUIRE(k0.has_value());
            for (long k : {*k0, *k0 + 1, *k0 + 13}) {
                Rat d = abs(eval_term(t, k)[i] - o.limit[i]);
                CHECK(d <= eps * ru.e[i]);
            }
        }
    }
}

TEST_CASE("translation invariance of order limits") {
    auto corpus = qvec_corpus_dim(40, 2, 3);
    QVec c = qv({7, -2});
    for (const TermPtr& t : corpus) {
        TermPtr shifted = t_sum({t, t_const(CarrierTag::QVec, c)});
        OResult a = o_limit(t), b = o_limit(shifted);
        CHECK(a.status == b.status);
        if (a.status == Status::Limit) CHECK(qv_add(a.limit, c) == b.limit);
    }
}

TEST_CASE("sign decision with exact witnesses") {
    TermPtr pos = t_harmonic(CarrierTag::QVec, qv({1}));
    CHECK(always_nonneg(pos).verdict == Decision::Yes);

    // 1/k - 100 (1/2)^k starts negative.
    TermPtr neg_now = t_sum({pos, t_geom(CarrierTag::QVec, qv({-100}), Rat(1, 2))});
    Decision d1 = always_nonneg(neg_now);
    CHECK(d1.verdict == Decision::No);
    CHECK(d1.witness_k == 1);
    CHECK(eval_term(neg_now, d1.witness_k)[0] < 0);

    // 4 (1/2)^k - 1/k only turns negative at k = 5.
    TermPtr late = t_sum({t_geom(CarrierTag::QVec, qv({4}), Rat(1, 2)),
                          t_harmonic(CarrierTag::QVec, qv({-1}))});
    Decision d2 = always_nonneg(late);
    CHECK(d2.verdict == Decision::No);
    CHECK(d2.witness_k == 5);
    for (long k = 1; k < 5; ++k) CHECK(eval_term(late, k)[0] >= 0);
    CHECK(eval_term(late, 5)[0] < 0);

    // 1/k - (1/2)^k stays nonnegative: harmonic decay dominates eventually and
    // the scanned prefix is clean.
    TermPtr tight = t_sum({pos, t_geom(CarrierTag::QVec, qv({-1}), Rat(1, 2))});
    CHECK(always_nonneg(tight).verdict == Decision::Yes);

    // Nonzero limit: 1 - 1/k never dips below zero; -1 + 1/k always does.
    CHECK(always_nonneg(t_sum({t_const(CarrierTag::QVec, qv({1})),
                               t_harmonic(CarrierTag::QVec, qv({-1}))}))
              .verdict == Decision::Yes);
    Decision d3 = always_nonneg(t_sum({t_const(CarrierTag::QVec, qv({-1})),
                                       t_harmonic(CarrierTag::QVec, qv({1}))}));
    CHECK(d3.verdict == Decision::No);
    CHECK(eval_term(t_sum({t_const(CarrierTag::QVec, qv({-1})),
                           t_harmonic(CarrierTag::QVec, qv({1}))}),
                    d3.witness_k)[0] < 0);

    // Sign decisions are confirmed by brute evaluation on the corpus prefix.
    for (const TermPtr& t : qvec_corpus(60, 2, 4)) {
        Decision d = always_nonneg(t);
        if (d.verdict == Decision::No) {
            QVec x = eval_term(t, d.witness_k);
            bool neg = false;
            for (const Rat& v : x) neg = neg || v < 0;
            CHECK(neg);
        } else if (d.verdict == Decision::Yes) {
            for (long k = 1; k <= 80; ++k)
                CHECK(qv_leq(qv_zero(t->dim), eval_term(t, k)));
        }
    }
}

TEST_CASE("monotone order bounded terms are order Cauchy") {
    // 1 - 1/k increases to 1.
    TermPtr inc = t_sum({t_const(CarrierTag::QVec, qv({1})),
                         t_harmonic(CarrierTag::QVec, qv({-1}))});
    MonotoneReport r1 = monotone_cauchy_check(inc);
    CHECK(r1.increasing);
    CHECK(!r1.decreasing);
    CHECK(r1.bounded);
    CHECK(r1.hypotheses_hold);
    CHECK(r1.cauchy);
    for (long k = 1; k <= 32; ++k) CHECK(qv_leq(qv_abs(eval_term(inc, k)), r1.bound));

    // (1/2)^k decreases.
    MonotoneReport r2 = monotone_cauchy_check(t_geom(CarrierTag::QVec, qv({1}), Rat(1, 2)));
    CHECK(r2.decreasing);
    CHECK(r2.hypotheses_hold);
    CHECK(r2.cauchy);

    // An oscillating braid fails the hypotheses.
    TermPtr osc = t_braid(2, {0, 1},
                          {t_const(CarrierTag::QVec, qv({0})),
                           t_const(CarrierTag::QVec, qv({1}))});
    MonotoneReport r3 = monotone_cauchy_check(osc);
    CHECK(!r3.hypotheses_hold);
    CHECK(!r3.increasing);
    CHECK(!r3.decreasing);
}

TEST_CASE("lexicographic plane separates order and relative-uniform limits") {
    // (1/k, 0): squeezing it in the lex order hits the missing-infimum wall,
    // but e = (1,0) regulates it to zero.
    TermPtr first = t_harmonic(CarrierTag::LexR2, qv({1, 0}));
    CHECK(o_limit(first).status == Status::NoLimit);
    RuResult ru = ru_limit(first);
    REQUIRE(ru.status == Status::Limit);
    CHECK(ru.limit == qv({0, 0}));
    CHECK(ru.e == qv({1, 0}));
    MackeyResult mk = mackey_limit(first);
    CHECK(mk.status == Status::Limit);
    CHECK(mk.limit == qv({0, 0}));

    // ru-limits are not unique: (0, b) also works for any b, since for
    // eps = 1/10 the deviation sits below eps*(1,0) once k > 10.
    for (long k = 11; k <= 30; ++k) {
        QVec x = eval_term(first, k);
        for (const Rat& b : {Rat(0), Rat(5), Rat(-3)})
            CHECK(lex_leq(lex_abs(LexVec{x[0], x[1] - b}), LexVec{Rat(1, 10), 0}));
    }

    // (0, 1/k) converges in order to (0,0): the dominating pairs (0, 1/k)
    // decrease with infimum zero.
    TermPtr second = t_harmonic(CarrierTag::LexR2, qv({0, 1}));
    OResult o2 = o_limit(second);
    REQUIRE(o2.status == Status::Limit);
    CHECK(o2.limit == qv({0, 0}));
    for (long k = 1; k <= 20; ++k) {
        QVec x = eval_term(second, k);
        CHECK(lex_leq(lex_abs(LexVec{x[0], x[1]}), LexVec{0, form_envelope(o2.witness[1], k)}));
    }

    // Geometric decay in the dominant coordinate is just as stuck.
    CHECK(o_limit(t_geom(CarrierTag::LexR2, qv({1, 0}), Rat(1, 2))).status == Status::NoLimit);
    // Constants converge to themselves.
    OResult oc = o_limit(t_const(CarrierTag::LexR2, qv({3, 5})));
    CHECK(oc.status == Status::Limit);
    CHECK(oc.limit == qv({3, 5}));
}

TEST_CASE("unit vector sequences by ambient space") {
    TermPtr linf = t_unit_vectors(Ambient::linf);
    CHECK(o_limit(linf).status == Status::Limit);
    CHECK(ru_limit(linf).status == Status::NoLimit);
    BoundResult bl = term_order_bounded(linf);
    CHECK(bl.status == Status::Limit);
    CHECK(bl.ambient_ones);

    TermPtr c0 = t_unit_vectors(Ambient::c0);
    CHECK(o_limit(c0).status == Status::NoLimit);
    CHECK(ru_limit(c0).status == Status::NoLimit);
    CHECK(term_order_bounded(c0).status == Status::NoLimit);
    CHECK(mackey_limit(c0).status == Status::NoLimit);
}

TEST_CASE("order neighborhoods as box regions") {
    // Open unit square around its center.
    Box open;
    open.lo = {Rat(0), Rat(0)};
    open.hi = {Rat(1), Rat(1)};
    open.lo_closed = {false, false};
    open.hi_closed = {false, false};
    BoxRegion sq{2, {open}};
    CHECK(region_contains(sq, QVec{Rat(1, 2), Rat(1, 2)}));
    CHECK(order_neighborhood(sq, QVec{Rat(1, 2), Rat(1, 2)}));
    // At a boundary point no cube fits.
    CHECK(!order_neighborhood(sq, QVec{Rat(1, 2), Rat(1)}));

    // Closed square: still no cube at the corner.
    Box closed = open;
    closed.lo_closed = {true, true};
    closed.hi_closed = {true, true};
    CHECK(!order_neighborhood(BoxRegion{2, {closed}}, QVec{Rat(1), Rat(1)}));

    // The whole plane is a neighborhood of everything.
    Box all;
    all.lo = {std::nullopt, std::nullopt};
    all.hi = {std::nullopt, std::nullopt};
    all.lo_closed = {false, false};
    all.hi_closed = {false, false};
    CHECK(order_neighborhood(BoxRegion{2, {all}}, QVec{Rat(-100), Rat(3, 7)}));

    // Two closed half-planes split at x = 1/2 jointly cover a cube there,
    // though neither alone does.
    Box left = all, right = all;
    left.hi[0] = Rat(1, 2);
    left.hi_closed[0] = true;
    right.lo[0] = Rat(1, 2);
    right.lo_closed[0] = true;
    BoxRegion split{2, {left, right}};
    CHECK(!order_neighborhood(BoxRegion{2, {left}}, QVec{Rat(1, 2), Rat(0)}));
    CHECK(order_neighborhood(split, QVec{Rat(1, 2), Rat(0)}));
}

TEST_CASE("order intervals are convex and order closed") {
    auto corpus = qvec_corpus_dim(80, 2, 5);
    // Guarantee at least one term provably inside the interval.
    corpus.push_back(t_geom(CarrierTag::QVec, qv({1, 1}), Rat(1, 2)));
    LatticeReport rep = order_interval_properties(qv({-1, -1}), qv({1, 2}), corpus);
    CHECK(rep.passed());
    CHECK(rep.cases > 25);  // convexity grid plus at least one in-interval term
    CHECK_THROWS_AS(order_interval_properties(qv({1, 0}), qv({0, 1}), corpus),
                    std::domain_error);
}

TEST_CASE("order convergence collapses to the product topology in finite dimension") {
    auto corpus = qvec_corpus(120, 3, 6);
    LatticeReport rep = order_topology_equiv_check(corpus);
    CHECK(rep.passed());
    CHECK(rep.cases == 120);
}

TEST_CASE("strong units and the Archimedean property") {
    UnitResult q = strong_unit_check(CarrierTag::QVec, 3);
    CHECK(q.has_unit);
    CHECK(q.unit == qv_ones(3));
    CHECK(q.archimedean);

    UnitResult lex = strong_unit_check(CarrierTag::LexR2, 2);
    CHECK(lex.has_unit);
    CHECK(lex.unit == qv({1, 0}));
    CHECK(!lex.archimedean);

    CHECK(!strong_unit_check(CarrierTag::FinSeqC0, 0).has_unit);
    CHECK(!strong_unit_check(CarrierTag::FinSeqLinf, 0).has_unit);
    CHECK(strong_unit_check(CarrierTag::StepFn, 0).has_unit);

    ArchWitness w = archimedean_witness(CarrierTag::LexR2);
    REQUIRE(w.non_archimedean);
    CHECK(lex_lt(LexVec{0, 0}, w.x));
    for (long n = 1; n <= 1000000; n *= 10)
        CHECK(lex_leq(LexVec{w.x.a * n, w.x.b * n}, w.u));
    CHECK(!archimedean_witness(CarrierTag::QVec).non_archimedean);
}

TEST_CASE("finite sets are order bounded with the computed bound") {
    std::vector<QVec> xs{qv({1, -3}), qv({-2, 2}), qv({0, 0})};
    QVec u = finite_set_bound(xs);
    CHECK(u == qv({2, 3}));
    for (const QVec& x : xs) CHECK(qv_leq(qv_abs(x), u));
    std::vector<QVec> none;
    CHECK_THROWS_AS(finite_set_bound(none), std::invalid_argument);
}

TEST_CASE("envelope thresholds") {
    ScalarForm f;
    f.harms[0] = 1;  // 1/k
    auto k0 = envelope_threshold(f, Rat(1, 10));
    REQUIRE(k0.has_value());
    CHECK(form_envelope(f, *k0) < Rat(1, 10));
    CHECK(!envelope_threshold(f, Rat(0)).has_value());
    ScalarForm stuck;  // constant envelope 0 < bound always works
    CHECK(envelope_threshold(stuck, Rat(1, 2)).has_value());
}
