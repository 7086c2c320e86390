#include "convkit/decide.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace convkit {

namespace {

constexpr long kSearchCap = 1L << 20;

// Absolute-coefficient envelope form: a0 = 0, coefficients summed across all
// residue classes, so it dominates |x_k - a0_class| for every k and is
// decreasing to zero.
ScalarForm abs_envelope(const ClassSeq& c) {
    ScalarForm w;
    for (const auto& f : c.cls) {
        for (const auto& [rate, coef] : f.geoms) w.geoms[rate] += abs(coef);
        for (const auto& [s, coef] : f.harms) w.harms[s] += abs(coef);
    }
    return w;
}

// All residue-class constants of one coordinate.
std::vector<Rat> class_constants(const ClassSeq& c) {
    std::vector<Rat> out;
    for (const auto& f : c.cls) out.push_back(f.a0);
    return out;
}

bool all_equal(const std::vector<Rat>& v) {
    for (const Rat& r : v)
        if (r != v[0]) return false;
    return true;
}

int sgn(const Rat& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

}  // namespace

std::optional<long> envelope_threshold(const ScalarForm& envelope, const Rat& bound) {
    if (bound <= 0) return std::nullopt;
    for (long k = 1; k <= kSearchCap; k *= 2)
        if (form_envelope(envelope, k) < bound) return k;
    return std::nullopt;
}

OResult o_limit(const TermPtr& t) {
    if (!t) throw std::invalid_argument("null term");
    switch (t->carrier) {
        case CarrierTag::QVec: {
            CoordForms cf = compile_term(t);
            OResult res;
            res.status = Status::Limit;
            for (const ClassSeq& c : cf.coord) {
                auto consts = class_constants(c);
                if (!all_equal(consts)) return OResult{Status::NoLimit, {}, {}};
                res.limit.push_back(consts[0]);
                res.witness.push_back(abs_envelope(c));
            }
            return res;
        }
        case CarrierTag::LexR2: {
            // In the lexicographic plane a dominating net decreasing to zero
            // is eventually of the form (0, w_k); order convergence forces
            // the first coordinate to be eventually exactly the limit's.
            CoordForms cf = compile_term(t);
            for (const ScalarForm& f : cf.coord[0].cls)
                if (!f.is_constant()) return OResult{Status::NoLimit, {}, {}};
            auto c0 = class_constants(cf.coord[0]);
            auto c1 = class_constants(cf.coord[1]);
            if (!all_equal(c0) || !all_equal(c1)) return OResult{Status::NoLimit, {}, {}};
            OResult res;
            res.status = Status::Limit;
            res.limit = {c0[0], c1[0]};
            res.witness = {ScalarForm{}, abs_envelope(cf.coord[1])};
            return res;
        }
        case CarrierTag::FinSeqLinf:
            // e_k <= 1_{k >= m} pointwise for k >= m; the tail indicators
            // decrease to zero, so the unit vectors are o-null.
            return OResult{Status::Limit, {}, {}};
        case CarrierTag::FinSeqC0:
            // Not even order bounded, so no order limit.
            return OResult{Status::NoLimit, {}, {}};
        default:
            return OResult{Status::Undecided, {}, {}};
    }
}

OResult o_limit_limsup(const TermPtr& t) {
    if (!t || t->carrier != CarrierTag::QVec)
        throw std::domain_error("UnsupportedDescriptor: limsup route needs a QVec term");
    CoordForms cf = compile_term(t);
    OResult res;
    res.status = Status::Limit;
    for (const ClassSeq& c : cf.coord) {
        auto consts = class_constants(c);
        // Tail-sup envelope decreases to max a0, tail-inf increases to min a0.
        Rat hi = *std::max_element(consts.begin(), consts.end());
        Rat lo = *std::min_element(consts.begin(), consts.end());
        if (hi != lo) return OResult{Status::NoLimit, {}, {}};
        res.limit.push_back(hi);
        res.witness.push_back(abs_envelope(c));
    }
    return res;
}

RuResult ru_limit(const TermPtr& t) {
    if (!t) throw std::invalid_argument("null term");
    switch (t->carrier) {
        case CarrierTag::QVec: {
            OResult o = o_limit(t);
            if (o.status != Status::Limit) return RuResult{o.status, {}, {}};
            // e = envelope at k = 1 dominates every |x_k - L|; since the
            // envelope decreases to 0, each eps-tail condition holds.
            RuResult res;
            res.status = Status::Limit;
            res.limit = o.limit;
            for (const ScalarForm& w : o.witness) res.e.push_back(form_envelope(w, 1));
            return res;
        }
        case CarrierTag::LexR2: {
            // |d_k| <= eps*(1,0) asks only that the first coordinate of the
            // difference is eventually below eps; regulator e = (1,0).
            // (ru-limits are not unique here: the carrier is not Archimedean.
            // The second coordinate returned is the canonical representative.)
            CoordForms cf = compile_term(t);
            auto c0 = class_constants(cf.coord[0]);
            if (!all_equal(c0)) return RuResult{Status::NoLimit, {}, {}};
            auto c1 = class_constants(cf.coord[1]);
            RuResult res;
            res.status = Status::Limit;
            res.limit = {c0[0], all_equal(c1) ? c1[0] : Rat(0)};
            res.e = {Rat(1), Rat(0)};
            return res;
        }
        case CarrierTag::FinSeqLinf:
        case CarrierTag::FinSeqC0:
            // No single positive e dominates eps-scaled unit-vector tails:
            // ||e_k||_e >= 1/||e||_inf whenever e dominates at all.
            return RuResult{Status::NoLimit, {}, {}};
        default:
            return RuResult{Status::Undecided, {}, {}};
    }
}

MackeyResult mackey_limit(const TermPtr& t) {
    if (!t) throw std::invalid_argument("null term");
    switch (t->carrier) {
        case CarrierTag::QVec: {
            CoordForms cf = compile_term(t);
            // Candidate limit from the residue-class constants.
            QVec lim;
            for (const ClassSeq& c : cf.coord) {
                auto consts = class_constants(c);
                if (!all_equal(consts)) return MackeyResult{Status::NoLimit, {}, {}};
                lim.push_back(consts[0]);
            }
            // Absorbing interval bound: scanned prefix plus the tail envelope.
            MackeyResult res;
            res.status = Status::Limit;
            res.limit = lim;
            for (std::size_t i = 0; i < cf.coord.size(); ++i) {
                ScalarForm env = abs_envelope(cf.coord[i]);
                Rat b = form_envelope(env, 1);
                for (long k = 1; k <= 64; ++k)
                    b = std::max(b, Rat(abs(eval_term(t, k)[i] - lim[i])));
                res.bound.push_back(b + 1);
                // eps-tail witness: envelope drops below eps*bound for each eps.
                if (!envelope_threshold(env, res.bound.back() / 1000) && !env.is_constant())
                    return MackeyResult{Status::Undecided, {}, {}};
            }
            return res;
        }
        case CarrierTag::LexR2: {
            RuResult ru = ru_limit(t);
            MackeyResult res;
            res.status = ru.status;
            res.limit = ru.limit;
            if (ru.status == Status::Limit) res.bound = {Rat(1), Rat(0)};
            return res;
        }
        case CarrierTag::FinSeqLinf:
        case CarrierTag::FinSeqC0:
            return MackeyResult{Status::NoLimit, {}, {}};
        default:
            return MackeyResult{Status::Undecided, {}, {}};
    }
}

bool is_order_cauchy(const TermPtr& t) {
    if (!t || t->carrier != CarrierTag::QVec)
        throw std::domain_error("UnsupportedDescriptor: Cauchy check needs a QVec term");
    CoordForms cf = compile_term(t);
    // sup_{j,k >= m} |x_j - x_k| decreases to the spread of the class
    // constants; it vanishes iff they agree per coordinate.
    for (const ClassSeq& c : cf.coord)
        if (!all_equal(class_constants(c))) return false;
    return true;
}

namespace {

// Coefficients of P(k) = sum_j c_j * prod_{i != j} (k + s_i), the numerator
// of the harmonic part over the common denominator Q(k) = prod_i (k + s_i).
std::vector<Rat> harmonic_numerator(const std::map<long, Rat>& harms) {
    std::vector<Rat> acc{Rat(0)};
    for (const auto& [s_j, c_j] : harms) {
        std::vector<Rat> p{c_j};
        for (const auto& [s_i, c_i] : harms) {
            (void)c_i;
            if (s_i == s_j) continue;
            // p *= (k + s_i)
            std::vector<Rat> q(p.size() + 1, Rat(0));
            for (std::size_t d = 0; d < p.size(); ++d) {
                q[d] += p[d] * s_i;
                q[d + 1] += p[d];
            }
            p = std::move(q);
        }
        if (p.size() > acc.size()) acc.resize(p.size(), Rat(0));
        for (std::size_t d = 0; d < p.size(); ++d) acc[d] += p[d];
    }
    while (!acc.empty() && acc.back() == 0) acc.pop_back();
    return acc;
}

long first_class_point_above(long n, long kmin, long period) {
    if (n <= kmin) return kmin;
    return kmin + ((n - kmin + period - 1) / period) * period;
}

}  // namespace

Decision class_nonneg(const ScalarForm& f, long kmin, long period) {
    ScalarForm env = f;
    env.a0 = 0;  // form_envelope ignores a0 anyway

    if (f.a0 != 0) {
        auto nOpt = envelope_threshold(env, abs(f.a0));
        if (!nOpt) return Decision{Decision::Undecided, 0};
        long n = *nOpt;
        if (f.a0 < 0) {
            // Beyond n the envelope cannot lift the value back to zero.
            for (long k = kmin; k < n; k += period)
                if (eval_form(f, k) < 0) return Decision{Decision::No, k};
            return Decision{Decision::No, first_class_point_above(n, kmin, period)};
        }
        for (long k = kmin; k <= n; k += period)
            if (eval_form(f, k) < 0) return Decision{Decision::No, k};
        return Decision{Decision::Yes, 0};
    }

    // Limit zero: the eventual sign is decided by the dominant decay part.
    std::vector<Rat> P = harmonic_numerator(f.harms);
    bool has_harm = !P.empty();
    bool has_geom = !f.geoms.empty();
    if (!has_harm && !has_geom) return Decision{Decision::Yes, 0};

    int sign;
    long horizon;
    if (has_harm) {
        long d = static_cast<long>(P.size()) - 1;
        Rat lead = P[d];
        sign = sgn(lead);
        Rat b(1);
        for (long i = 0; i < d; ++i) b = std::max(b, Rat(1 + abs(P[i] / lead)));
        // For k >= 2dB: |P(k)| >= |lead| k^d / 2 with the sign of the lead.
        long k1 = 1;
        Rat need = 2 * d * b;
        while (Rat(k1) < need && k1 <= kSearchCap) k1 *= 2;
        if (k1 > kSearchCap) return Decision{Decision::Undecided, 0};
        horizon = k1;
        if (has_geom) {
            Rat rstar = f.geoms.rbegin()->first;
            Rat c = 0;
            for (const auto& [rate, coef] : f.geoms) {
                (void)rate;
                c += abs(coef);
            }
            long m = static_cast<long>(f.harms.size());
            long smax = f.harms.rbegin()->first;
            // k2: the geometric majorant 2C (k+smax)^m r*^k decreases beyond it.
            long k2 = k1;
            while (k2 <= kSearchCap &&
                   !(rstar * rat_pow(Rat(k2 + 1 + smax, k2 + smax), m) < 1))
                k2 *= 2;
            if (k2 > kSearchCap) return Decision{Decision::Undecided, 0};
            // N: polynomial lower bound beats the geometric majorant; the two
            // sides are monotone past k2, so the gap persists.
            long n = k2;
            while (n <= kSearchCap &&
                   !(abs(lead) * rat_pow(Rat(n), d) >
                     2 * c * rat_pow(Rat(n + smax), m) * rat_pow(rstar, n)))
                n *= 2;
            if (n > kSearchCap) return Decision{Decision::Undecided, 0};
            horizon = n;
        }
    } else {
        // Pure geometric: factor out the largest rate.
        Rat rstar = f.geoms.rbegin()->first;
        Rat cstar = f.geoms.rbegin()->second;
        sign = sgn(cstar);
        long n = 1;
        while (n <= kSearchCap) {
            Rat rest = 0;
            for (const auto& [rate, coef] : f.geoms)
                if (rate != rstar) rest += abs(coef) * rat_pow(rate, n);
            if (abs(cstar) * rat_pow(rstar, n) > rest) break;
            n *= 2;
        }
        if (n > kSearchCap) return Decision{Decision::Undecided, 0};
        horizon = n;
    }

    for (long k = kmin; k <= horizon; k += period)
        if (eval_form(f, k) < 0) return Decision{Decision::No, k};
    if (sign < 0)
        return Decision{Decision::No, first_class_point_above(horizon + 1, kmin, period)};
    return Decision{Decision::Yes, 0};
}

Decision always_nonneg(const TermPtr& t) {
    if (!t || (t->carrier != CarrierTag::QVec && t->carrier != CarrierTag::LexR2))
        return Decision{Decision::Undecided, 0};
    if (t->carrier == CarrierTag::LexR2) return Decision{Decision::Undecided, 0};
    CoordForms cf = compile_term(t);
    for (const ClassSeq& c : cf.coord)
        for (int cls = 0; cls < c.period; ++cls) {
            Decision d = class_nonneg(c.cls[cls], cls + 1, c.period);
            if (d.verdict != Decision::Yes) return d;
        }
    return Decision{Decision::Yes, 0};
}

MonotoneReport monotone_cauchy_check(const TermPtr& t) {
    if (!t || t->carrier != CarrierTag::QVec)
        throw std::domain_error("UnsupportedDescriptor: monotonicity check needs a QVec term");
    MonotoneReport rep;
    TermPtr diff = t_sum({t_shift(t, 1), t_scale(-1, t)});
    Decision inc = always_nonneg(diff);
    Decision dec = always_nonneg(t_scale(-1, diff));
    rep.increasing = inc.verdict == Decision::Yes;
    rep.decreasing = dec.verdict == Decision::Yes;
    BoundResult b = term_order_bounded(t);
    rep.bounded = b.status == Status::Limit;
    if (rep.bounded) rep.bound = b.u;
    rep.hypotheses_hold = (rep.increasing || rep.decreasing) && rep.bounded;
    if (rep.hypotheses_hold) {
        rep.cauchy = is_order_cauchy(t);
        rep.detail = rep.cauchy ? "monotone order bounded term is order Cauchy"
                                : "monotone order bounded term failed the Cauchy check";
    } else {
        std::ostringstream os;
        os << "hypotheses not established:";
        if (!rep.increasing && !rep.decreasing) os << " not monotone";
        if (!rep.bounded) os << " not order bounded";
        rep.detail = os.str();
    }
    return rep;
}

BoundResult term_order_bounded(const TermPtr& t) {
    if (!t) throw std::invalid_argument("null term");
    switch (t->carrier) {
        case CarrierTag::QVec: {
            CoordForms cf = compile_term(t);
            BoundResult res;
            res.status = Status::Limit;
            for (const ClassSeq& c : cf.coord) {
                Rat u = 0;
                for (int cls = 0; cls < c.period; ++cls) {
                    const ScalarForm& f = c.cls[cls];
                    u = std::max(u, Rat(abs(f.a0) + form_envelope(f, cls + 1)));
                }
                res.u.push_back(u);
            }
            return res;
        }
        case CarrierTag::LexR2: {
            // (M+1, 0) lex-dominates anything whose first coordinate is
            // bounded by M in absolute value.
            CoordForms cf = compile_term(t);
            Rat m = 0;
            for (int cls = 0; cls < cf.coord[0].period; ++cls) {
                const ScalarForm& f = cf.coord[0].cls[cls];
                m = std::max(m, Rat(abs(f.a0) + form_envelope(f, cls + 1)));
            }
            BoundResult res;
            res.status = Status::Limit;
            res.u = {m + 1, Rat(0)};
            return res;
        }
        case CarrierTag::FinSeqLinf: {
            BoundResult res;
            res.status = Status::Limit;
            res.ambient_ones = true;
            return res;
        }
        case CarrierTag::FinSeqC0:
            // Any c0 bound u has u_k < 1/2 eventually, so it misses e_k.
            return BoundResult{Status::NoLimit, {}, false};
        case CarrierTag::StepFn:
            // Indicator-valued terms are dominated by the constant-one step.
            return BoundResult{Status::Limit, {Rat(1)}, false};
    }
    return BoundResult{Status::Undecided, {}, false};
}

QVec finite_set_bound(std::span<const QVec> xs) {
    if (xs.empty()) throw std::invalid_argument("empty set");
    QVec u = qv_abs(xs[0]);
    for (std::size_t i = 1; i < xs.size(); ++i) u = qv_sup(u, qv_abs(xs[i]));
    return u;
}

bool box_contains(const Box& b, const QVec& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (b.lo[i]) {
            if (p[i] < *b.lo[i]) return false;
            if (p[i] == *b.lo[i] && !b.lo_closed[i]) return false;
        }
        if (b.hi[i]) {
            if (p[i] > *b.hi[i]) return false;
            if (p[i] == *b.hi[i] && !b.hi_closed[i]) return false;
        }
    }
    return true;
}

bool region_contains(const BoxRegion& r, const QVec& p) {
    for (const Box& b : r.boxes)
        if (box_contains(b, p)) return true;
    return false;
}

bool order_neighborhood(const BoxRegion& u, const QVec& x) {
    int n = u.dim;
    if (static_cast<int>(x.size()) != n) throw std::invalid_argument("dimension mismatch");
    for (const Box& b : u.boxes)
        if (static_cast<int>(b.lo.size()) != n || static_cast<int>(b.hi.size()) != n ||
            static_cast<int>(b.lo_closed.size()) != n ||
            static_cast<int>(b.hi_closed.size()) != n)
            throw std::invalid_argument("malformed region");

    // Below half the smallest positive face margin, the arrangement of box
    // faces relative to the cube [x-d, x+d] is combinatorially stable, so one
    // test value of d decides all smaller ones.
    Rat delta = 1;
    bool found = false;
    for (const Box& b : u.boxes)
        for (int i = 0; i < n; ++i)
            for (const auto& bound : {b.lo[i], b.hi[i]}) {
                if (!bound) continue;
                Rat m = abs(*bound - x[i]);
                if (m > 0 && (!found || m < delta * 2)) {
                    delta = m / 2;
                    found = true;
                }
            }

    // Exact cube-coverage check: sample one point per cell of the face
    // arrangement restricted to the cube (criticals and midpoints).
    std::vector<std::vector<Rat>> samples(n);
    for (int i = 0; i < n; ++i) {
        std::set<Rat> crit{x[i] - delta, x[i] + delta};
        for (const Box& b : u.boxes)
            for (const auto& bound : {b.lo[i], b.hi[i]})
                if (bound && *bound >= x[i] - delta && *bound <= x[i] + delta)
                    crit.insert(*bound);
        Rat prev;
        bool first = true;
        for (const Rat& c : crit) {
            if (!first) samples[i].push_back((prev + c) / 2);
            samples[i].push_back(c);
            prev = c;
            first = false;
        }
    }
    std::vector<std::size_t> pos(n, 0);
    while (true) {
        QVec p(n);
        for (int i = 0; i < n; ++i) p[i] = samples[i][pos[i]];
        if (!region_contains(u, p)) return false;
        int i = n - 1;
        while (i >= 0 && ++pos[i] == samples[i].size()) pos[i--] = 0;
        if (i < 0) break;
    }
    return true;
}

LatticeReport order_interval_properties(const QVec& a, const QVec& b,
                                        std::span<const TermPtr> corpus) {
    if (!qv_leq(a, b)) throw std::domain_error("interval requires a <= b");
    LatticeReport rep{"order-interval", 0, 0, ""};
    int n = static_cast<int>(a.size());

    // Convexity on rational samples: midpoints of interval points stay inside.
    std::vector<QVec> pts{a, b, qv_scale(Rat(1, 2), qv_add(a, b)),
                          qv_add(qv_scale(Rat(3, 4), a), qv_scale(Rat(1, 4), b)),
                          qv_add(qv_scale(Rat(1, 4), a), qv_scale(Rat(3, 4), b))};
    for (const QVec& p : pts)
        for (const QVec& q : pts) {
            QVec mid = qv_scale(Rat(1, 2), qv_add(p, q));
            ++rep.cases;
            if (!(qv_leq(a, mid) && qv_leq(mid, b))) {
                ++rep.failures;
                if (rep.witness.empty()) rep.witness = "midpoint escaped the interval";
            }
        }

    // Order closedness: terms living inside [a,b] have their o-limits inside.
    for (const TermPtr& t : corpus) {
        if (!t || t->carrier != CarrierTag::QVec || t->dim != n) continue;
        Decision above = always_nonneg(t_sum({t, t_const(CarrierTag::QVec, qv_scale(-1, a))}));
        Decision below = always_nonneg(t_sum({t_const(CarrierTag::QVec, b), t_scale(-1, t)}));
        if (above.verdict != Decision::Yes || below.verdict != Decision::Yes) continue;
        OResult o = o_limit(t);
        if (o.status != Status::Limit) continue;
        ++rep.cases;
        if (!(qv_leq(a, o.limit) && qv_leq(o.limit, b))) {
            ++rep.failures;
            if (rep.witness.empty()) rep.witness = "in-interval term with o-limit outside";
        }
    }
    return rep;
}

LatticeReport order_topology_equiv_check(std::span<const TermPtr> corpus) {
    LatticeReport rep{"order-topology-equivalence", 0, 0, ""};
    for (const TermPtr& t : corpus) {
        if (!t || t->carrier != CarrierTag::QVec) continue;
        ++rep.cases;
        OResult o = o_limit(t);
        // Coordinatewise (product-topology) limit, decided per coordinate.
        CoordForms cf = compile_term(t);
        bool coordwise = true;
        QVec coord_lim;
        for (const ClassSeq& c : cf.coord) {
            auto consts = class_constants(c);
            if (!all_equal(consts)) {
                coordwise = false;
                break;
            }
            coord_lim.push_back(consts[0]);
        }
        bool ok = coordwise == (o.status == Status::Limit) &&
                  (!coordwise || coord_lim == o.limit);
        if (!ok) {
            ++rep.failures;
            if (rep.witness.empty()) rep.witness = "o-limit and coordinatewise limit disagree";
        }
    }
    return rep;
}

UnitResult strong_unit_check(CarrierTag c, int dim) {
    switch (c) {
        case CarrierTag::QVec:
            return UnitResult{true, qv_ones(dim), true};
        case CarrierTag::LexR2:
            // (1,0) dominates every pair after scaling, but (0,1) escapes the
            // Archimedean property against it.
            return UnitResult{true, {Rat(1), Rat(0)}, false};
        case CarrierTag::FinSeqC0:
        case CarrierTag::FinSeqLinf:
            // No finitely supported bound dominates all unit vectors.
            return UnitResult{false, {}, true};
        case CarrierTag::StepFn:
            return UnitResult{true, {Rat(1)}, true};
    }
    return UnitResult{false, {}, true};
}

ArchWitness archimedean_witness(CarrierTag c) {
    if (c == CarrierTag::LexR2)
        return ArchWitness{true, LexVec{0, 1}, LexVec{1, 0}};
    return ArchWitness{false, {}, {}};
}

}  // namespace convkit
