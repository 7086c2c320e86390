#include "convkit/suites.hpp"

#include <chrono>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "convkit/taggedline.hpp"
#include "convkit/typewriter.hpp"

namespace convkit {

namespace {

using Clock = std::chrono::steady_clock;

struct Timer {
    Clock::time_point start = Clock::now();
    double seconds() const {
        return std::chrono::duration<double>(Clock::now() - start).count();
    }
};

void note_fail(SuiteReport& r, const std::string& w) {
    ++r.fail;
    if (r.witness.empty()) r.witness = w;
}

void check(SuiteReport& r, bool ok, const std::string& w) {
    if (ok)
        ++r.pass;
    else
        note_fail(r, w);
}

Rat random_rat(std::mt19937_64& rng, int num_range, int max_den) {
    std::uniform_int_distribution<int> num(-num_range, num_range);
    std::uniform_int_distribution<int> den(1, max_den);
    Rat r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

}  // namespace

std::vector<ConvSpace> random_spaces(int count, int max_n, unsigned long seed) {
    std::mt19937_64 rng(seed);
    std::vector<ConvSpace> out;
    std::uniform_int_distribution<int> size(1, max_n);
    for (int i = 0; i < count; ++i) {
        int n = size(rng);
        std::vector<PointSet> v;
        for (int x = 0; x < n; ++x) {
            PointSet s = PointSet::single(n, x);
            for (int y = 0; y < n; ++y)
                if (y != x && (rng() & 1)) s.add(y);
            v.push_back(s);
        }
        out.emplace_back(n, std::move(v));
    }
    return out;
}

namespace {

TermPtr random_term(std::mt19937_64& rng, int dim, int depth) {
    static const std::vector<Rat> rates{Rat(0), Rat(1, 4), Rat(1, 3), Rat(1, 2),
                                        Rat(2, 3), Rat(3, 4), Rat(7, 8)};
    std::uniform_int_distribution<int> leaf(0, 2);
    std::uniform_int_distribution<int> node(0, depth > 0 ? 5 : 2);
    QVec v(dim);
    for (Rat& c : v) c = random_rat(rng, 5, 4);
    switch (node(rng)) {
        case 0:
            return t_const(CarrierTag::QVec, v);
        case 1:
            return t_geom(CarrierTag::QVec, v, rates[rng() % rates.size()]);
        case 2:
            return t_harmonic(CarrierTag::QVec, v);
        case 3: {
            std::vector<TermPtr> kids;
            int k = 2 + static_cast<int>(rng() % 2);
            for (int i = 0; i < k; ++i) kids.push_back(random_term(rng, dim, depth - 1));
            return t_sum(std::move(kids));
        }
        case 4:
            return t_shift(random_term(rng, dim, depth - 1), static_cast<long>(rng() % 5));
        default: {
            int period = 2 + static_cast<int>(rng() % 3);
            int nkids = 2 + static_cast<int>(rng() % 2);
            std::vector<TermPtr> kids;
            for (int i = 0; i < nkids; ++i) kids.push_back(random_term(rng, dim, depth - 1));
            std::vector<int> sel(period);
            for (int& s : sel) s = static_cast<int>(rng() % nkids);
            return t_braid(period, std::move(sel), std::move(kids));
        }
    }
}

}  // namespace

std::vector<TermPtr> qvec_corpus(int count, int max_dim, unsigned long seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dims(1, max_dim);
    std::vector<TermPtr> out;
    for (int i = 0; i < count; ++i) out.push_back(random_term(rng, dims(rng), 2));
    return out;
}

std::vector<TermPtr> qvec_corpus_dim(int count, int dim, unsigned long seed) {
    std::mt19937_64 rng(seed);
    std::vector<TermPtr> out;
    for (int i = 0; i < count; ++i) out.push_back(random_term(rng, dim, 2));
    return out;
}

std::vector<RationalMatrix> random_matrices(int count, int dim, unsigned long seed) {
    std::mt19937_64 rng(seed);
    std::vector<RationalMatrix> out;
    for (int i = 0; i < count; ++i) {
        RationalMatrix t(dim, dim);
        for (Rat& e : t.a) e = random_rat(rng, 3, 3);
        out.push_back(std::move(t));
    }
    return out;
}

std::vector<Rat> random_samples_01(int count, unsigned long seed) {
    std::mt19937_64 rng(seed);
    std::vector<Rat> out;
    std::uniform_int_distribution<int> den(64, 1024);
    while (static_cast<int>(out.size()) < count) {
        int d = den(rng);
        int n = static_cast<int>(rng() % d);
        Rat r(n, d);
        r.canonicalize();
        out.push_back(std::move(r));
    }
    return out;
}

SuiteReport suite_axioms() {
    Timer timer;
    SuiteReport rep{"axioms"};

    // Braids are space-independent; collect kernel triples once.
    struct BraidCase {
        PointSet kx, ky, kb;
    };
    std::vector<BraidCase> braids;
    for (const DirectedIndex& idx : all_directed_indices(3)) {
        std::vector<Net> nets;
        std::vector<int> vals(idx.size(), 0);
        while (true) {
            nets.emplace_back(idx, vals, 3);
            int i = idx.size() - 1;
            while (i >= 0 && ++vals[i] == 3) vals[i--] = 0;
            if (i < 0) break;
        }
        for (const Net& x : nets)
            for (const Net& y : nets) {
                PointSet kx = tail_filter(x).kernel;
                PointSet ky = tail_filter(y).kernel;
                for (long bits = 0; bits < (1L << idx.size()); ++bits) {
                    Selector sel(idx.size());
                    for (int i = 0; i < idx.size(); ++i)
                        sel[i] = (bits >> i & 1) ? Pick::Second : Pick::First;
                    braids.push_back({kx, ky, tail_filter(braid(x, y, sel)).kernel});
                }
            }
    }
    // Quasi-subnet pairs at index <= 2 (kernel inclusion).
    std::vector<std::pair<PointSet, PointSet>> qpairs;
    {
        std::vector<Net> pool = all_nets(3, 2);
        for (const Net& x : pool)
            for (const Net& y : pool)
                if (is_quasi_subnet(y, x))
                    qpairs.push_back({tail_filter(x).kernel, tail_filter(y).kernel});
    }

    enumerate_structures(3, [&](const ConvSpace& s) {
        // N1: every constant net converges to its value.
        for (int x = 0; x < 3; ++x)
            check(rep, converges_net(s, Net::constant(DirectedIndex::chain(2), x, 3), x),
                  "constant net fails to converge (N1)");
        // N2: quasi-subnets keep the limits.
        for (const auto& [kx, ky] : qpairs)
            for (int p = 0; p < 3; ++p) {
                if (!kx.subset_of(s.V(p))) continue;
                check(rep, ky.subset_of(s.V(p)), "quasi-subnet lost a limit (N2)");
            }
        // N3: braids of co-convergent nets converge.
        for (const BraidCase& b : braids)
            for (int p = 0; p < 3; ++p) {
                if (!b.kx.subset_of(s.V(p)) || !b.ky.subset_of(s.V(p))) continue;
                check(rep, b.kb.subset_of(s.V(p)), "braid of convergent nets diverges (N3)");
            }
    });
    rep.seconds = timer.seconds();
    return rep;
}

SuiteReport suite_bas(int spaces, int max_n, unsigned long seed) {
    Timer timer;
    SuiteReport rep{"bas"};
    rep.seed = seed;
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);

    for (const ConvSpace& s : random_spaces(spaces, max_n, seed)) {
        int n = s.size();
        std::vector<PointSet> closed, open;
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
            PointSet a(n, bits);
            // (2) A subset of closure(A).
            check(rep, a.subset_of(closure(s, a)), "set escapes its closure");
            // (3) open iff complement closed.
            check(rep, is_open(s, a) == is_closed(s, a.complement()),
                  "open/closed complement duality failed");
            if (is_closed(s, a)) closed.push_back(a);
            if (is_open(s, a)) open.push_back(a);
        }
        // (4)/(5) closures under intersections and finite unions.
        for (const PointSet& a : closed)
            for (const PointSet& b : closed) {
                check(rep, is_closed(s, a & b), "intersection of closed sets not closed");
                check(rep, is_closed(s, a | b), "union of two closed sets not closed");
            }
        // (6)/(7) opens under unions and finite intersections.
        for (const PointSet& a : open)
            for (const PointSet& b : open) {
                check(rep, is_open(s, a | b), "union of open sets not open");
                check(rep, is_open(s, a & b), "intersection of two open sets not open");
            }
        // Arbitrary collections: random subsets of the closed/open families.
        for (int trial = 0; trial < 4; ++trial) {
            PointSet ci = PointSet::full(n), ou = PointSet::empty(n);
            for (const PointSet& a : closed)
                if (rng() & 1) ci = ci & a;
            for (const PointSet& a : open)
                if (rng() & 1) ou = ou | a;
            check(rep, is_closed(s, ci), "intersection of a closed family not closed");
            check(rep, is_open(s, ou), "union of an open family not open");
        }
        // (1) composition of continuous maps, sampled against a second space.
        ConvSpace t = random_spaces(1, max_n, rng())[0];
        ConvSpace u = random_spaces(1, max_n, rng())[0];
        for (int trial = 0; trial < 20; ++trial) {
            PointMap f{{}, t.size()}, g{{}, u.size()};
            for (int i = 0; i < s.size(); ++i)
                f.map.push_back(static_cast<int>(rng() % t.size()));
            for (int i = 0; i < t.size(); ++i)
                g.map.push_back(static_cast<int>(rng() % u.size()));
            if (!is_continuous(f, s, t) || !is_continuous(g, t, u)) continue;
            PointMap gf{{}, u.size()};
            for (int i = 0; i < s.size(); ++i) gf.map.push_back(g(f(i)));
            check(rep, is_continuous(gf, s, u), "composition of continuous maps discontinuous");
        }
    }
    rep.seconds = timer.seconds();
    return rep;
}

SuiteReport suite_roundtrip(int size, int max_index) {
    Timer timer;
    SuiteReport rep{"roundtrip"};
    enumerate_structures(size, [&](const ConvSpace& s) {
        VerifyReport r = roundtrip_check(s, max_index);
        rep.pass += r.cases - r.failures;
        if (r.failures) note_fail(rep, r.witness);
    });
    // Canonical net of a tail family reproduces the tail filter.
    for (const Net& net : all_nets(size, max_index)) {
        FilterBase base{size, tail_family(net)};
        Net canon = net_from_filter_base(base);
        bool families_match = tail_family(canon) == base.sets;
        check(rep, families_match && tail_filter(canon) == tail_filter(net),
              "canonical net of a tail family lost the tail filter");
    }
    rep.seconds = timer.seconds();
    return rep;
}

SuiteReport suite_mixing() {
    Timer timer;
    SuiteReport rep{"mixing"};
    MixingBounds bounds;
    enumerate_structures(3, [&](const ConvSpace& s) {
        VerifyReport r = verify_mixing_theorem(s, bounds);
        rep.pass += r.cases - r.failures;
        if (r.failures) note_fail(rep, r.witness);
    });
    rep.seconds = timer.seconds();
    return rep;
}

SuiteReport suite_iterated_limit(unsigned long seed) {
    Timer timer;
    SuiteReport rep{"iterated-limit"};
    rep.seed = seed;
    IteratedLimitBounds bounds;
    bounds.seed = seed;
    bounds.samples = 100;
    enumerate_structures(3, [&](const ConvSpace& s) {
        VerifyReport r = verify_iterated_limit(s, bounds);
        check(rep, r.passed() == is_topological(s),
              "bounded iterated-limit verdict disagrees with is_topological");
    });
    // The canonical non-topological example must produce a failing reaction.
    ConvSpace ex(3, {PointSet(3, 0b001), PointSet(3, 0b011), PointSet(3, 0b110)});
    VerifyReport r = verify_iterated_limit(ex, bounds);
    check(rep, !r.passed() && !r.witness.empty(),
          "missing reaction witness on the non-topological 3-point space");
    rep.seconds = timer.seconds();
    return rep;
}

namespace {

// Certificate re-verification for one convergent QVec term.
bool verify_o_certificate(SuiteReport& rep, const TermPtr& t, const OResult& o) {
    std::vector<long> ks{1, 2, 3, 4, 5, 6, 7, 8, 16, 32, 100, 1000};
    for (long k : ks) {
        QVec x = eval_term(t, k);
        for (int i = 0; i < t->dim; ++i) {
            Rat u = form_envelope(o.witness[i], k);
            Rat u_next = form_envelope(o.witness[i], k + 1);
            if (abs(x[i] - o.limit[i]) > u || u_next > u) {
                note_fail(rep, "dominating envelope certificate failed");
                return false;
            }
        }
    }
    return true;
}

}  // namespace

SuiteReport suite_vl_corpus(int terms, unsigned long seed) {
    Timer timer;
    SuiteReport rep{"vl-corpus"};
    rep.seed = seed;
    for (const TermPtr& t : qvec_corpus(terms, 6, seed)) {
        OResult o = o_limit(t);
        OResult ls = o_limit_limsup(t);
        RuResult ru = ru_limit(t);
        MackeyResult mk = mackey_limit(t);
        bool cauchy = is_order_cauchy(t);
        bool exists = o.status == Status::Limit;
        bool agree = (ls.status == Status::Limit) == exists &&
                     (ru.status == Status::Limit) == exists &&
                     (mk.status == Status::Limit) == exists && cauchy == exists;
        if (exists)
            agree = agree && ls.limit == o.limit && ru.limit == o.limit && mk.limit == o.limit;
        if (!agree) {
            note_fail(rep, "order/ru/Mackey/Cauchy disagreement");
            continue;
        }
        if (exists) {
            if (!verify_o_certificate(rep, t, o)) continue;
            // ru regulator: |x_k - L| <= e everywhere and the eps-tail
            // threshold exists for a small eps.
            bool ru_ok = true;
            for (long k : {1L, 2L, 10L, 100L}) {
                QVec d = qv_abs(qv_sub(eval_term(t, k), o.limit));
                if (!qv_leq(d, ru.e)) ru_ok = false;
            }
            for (int i = 0; i < t->dim && ru_ok; ++i)
                if (ru.e[i] > 0 &&
                    !envelope_threshold(o.witness[i], ru.e[i] / 100).has_value())
                    ru_ok = false;
            // Mackey interval absorbs the tails.
            for (long k : {1L, 2L, 10L, 100L}) {
                QVec d = qv_abs(qv_sub(eval_term(t, k), mk.limit));
                if (!qv_leq(d, mk.bound)) ru_ok = false;
            }
            check(rep, ru_ok, "ru/Mackey certificate failed");
        } else {
            // Oracle for divergence: two residue classes settle on different
            // constants of some coordinate.
            CoordForms cf = compile_term(t);
            bool witnessed = false;
            for (const ClassSeq& c : cf.coord) {
                Rat lo = c.cls[0].a0, hi = c.cls[0].a0;
                for (const ScalarForm& f : c.cls) {
                    lo = std::min(lo, f.a0);
                    hi = std::max(hi, f.a0);
                }
                if (lo == hi) continue;
                witnessed = true;
                break;
            }
            check(rep, witnessed, "divergent term without an oscillation witness");
        }
        // Order bound witness covers sampled values.
        BoundResult b = term_order_bounded(t);
        bool bounded_ok = b.status == Status::Limit;
        for (long k : {1L, 3L, 17L, 257L})
            if (bounded_ok && !qv_leq(qv_abs(eval_term(t, k)), b.u)) bounded_ok = false;
        check(rep, bounded_ok, "order bound witness violated");
    }
    rep.seconds = timer.seconds();
    return rep;
}

SuiteReport suite_lex() {
    Timer timer;
    SuiteReport rep{"lex"};
    auto L = CarrierTag::LexR2;
    TermPtr h10 = t_harmonic(L, {Rat(1), Rat(0)});
    TermPtr h01 = t_harmonic(L, {Rat(0), Rat(1)});
    check(rep, o_limit(h10).status == Status::NoLimit,
          "(1/k, 0) must have no order limit in the lexicographic plane");
    OResult o = o_limit(h01);
    check(rep, o.status == Status::Limit && o.limit == QVec{Rat(0), Rat(0)},
          "(0, 1/k) must o-converge to (0,0)");
    // But (1/k, 0) does ru-converge: the plane is not Archimedean.
    check(rep, ru_limit(h10).status == Status::Limit,
          "(1/k, 0) must ru-converge with regulator (1,0)");
    ArchWitness aw = archimedean_witness(L);
    bool aw_ok = aw.non_archimedean && aw.x == LexVec{0, 1} && aw.u == LexVec{1, 0};
    // 0 < x and n*x <= u, verified per n and symbolically (x.a == 0 < u.a).
    aw_ok = aw_ok && lex_lt(LexVec{0, 0}, aw.x) && aw.x.a == 0 && aw.u.a > 0;
    for (long n = 1; aw_ok && n <= 1000; ++n)
        if (!lex_leq(LexVec{aw.x.a * n, aw.x.b * n}, aw.u)) aw_ok = false;
    check(rep, aw_ok, "Archimedean witness ((0,1),(1,0)) failed");
    UnitResult su = strong_unit_check(L, 2);
    check(rep, su.has_unit && su.unit == QVec{Rat(1), Rat(0)} && !su.archimedean,
          "lexicographic strong unit must be (1,0) with the Archimedean flag off");
    rep.seconds = timer.seconds();
    return rep;
}

SuiteReport suite_typewriter(long horizon, int samples, const std::string& subseq,
                             unsigned long seed) {
    Timer timer;
    SuiteReport rep{"typewriter"};
    rep.seed = seed;
    if (subseq != "pow2") throw std::invalid_argument("unknown subsequence rule: " + subseq);
    AeReport ae = ae_sample_report(random_samples_01(samples, seed), horizon);
    check(rep, ae.measures_ok, "measure of some A_n differs from 1/n");
    check(rep, ae.subsequence_mass < 2, "power-of-two subsequence mass reached 2");
    for (const SampleTrace& tr : ae.traces) {
        long hits = tr.hits_below_100 + tr.hits_from_100;
        check(rep, hits >= 5 && tr.hits_from_100 >= 1,
              "a sample recurred fewer than 5 times or never beyond n = 100");
        check(rep, tr.subseq_exit < ae.subsequence.back(),
              "a sample failed to exit the subsequence within the horizon");
    }
    rep.seconds = timer.seconds();
    return rep;
}

SuiteReport suite_tagged_line() {
    Timer timer;
    SuiteReport rep{"tagged-line"};
    TaggedLineReport r = tagged_line_demo();
    check(rep, r.n1_ok, "N1 failed on the tagged line");
    check(rep, r.n2_ok, "N2 failed on sampled quasi-subnets of the tagged line");
    check(rep, r.n3_fails, "the alternating braid unexpectedly converged (N3)");
    rep.pass += r.cases - 3 < 0 ? 0 : r.cases - 3;
    rep.seconds = timer.seconds();
    return rep;
}

SuiteReport suite_operators(int matrices, int terms, unsigned long seed) {
    Timer timer;
    SuiteReport rep{"operators"};
    rep.seed = seed;
    std::mt19937_64 rng(seed + 1);
    for (int dim : {2, 3}) {
        std::vector<TermPtr> corpus = qvec_corpus_dim(terms, dim, seed + dim);
        for (const RationalMatrix& t : random_matrices(matrices / 2, dim, seed + 10 * dim)) {
            QVec e(dim);
            for (Rat& c : e) c = abs(random_rat(rng, 4, 3));
            OperatorBoundWitness w = is_order_bounded_operator(t, e);
            check(rep, interval_image_within(t, e, w.image_bound),
                  "interval image escaped the |T| bound");
            LatticeReport rc = ru_continuity_check(t, corpus);
            rep.pass += rc.cases - rc.failures;
            if (rc.failures) note_fail(rep, rc.witness);
        }
    }
    rep.seconds = timer.seconds();
    return rep;
}

SuiteReport run_suite(const std::string& name, unsigned long seed) {
    if (name == "axioms") return suite_axioms();
    if (name == "bas") return suite_bas(200, 6, seed);
    if (name == "roundtrip") return suite_roundtrip(3, 3);
    if (name == "mixing") return suite_mixing();
    if (name == "iterated-limit") return suite_iterated_limit(seed);
    if (name == "vl-corpus") return suite_vl_corpus(100, seed);
    if (name == "lex") return suite_lex();
    if (name == "typewriter") return suite_typewriter(10000, 100, "pow2", seed);
    if (name == "tagged-line") return suite_tagged_line();
    if (name == "operators") return suite_operators(20, 50, seed);
    throw std::invalid_argument("unknown suite: " + name);
}

std::string format_report(const SuiteReport& r) {
    std::ostringstream os;
    os << "suite " << r.name << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << r.pass
       << " passed, " << r.fail << " failed, " << r.skip << " skipped; seed " << r.seed
       << "; " << r.seconds << "s)";
    if (!r.witness.empty()) os << "\n  witness: " << r.witness;
    return os.str();
}

}  // namespace convkit
