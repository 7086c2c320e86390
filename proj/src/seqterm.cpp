#include "convkit/seqterm.hpp"

#include <numeric>
#include <stdexcept>

#include "convkit/typewriter.hpp"

namespace convkit {

namespace {

int payload_dim(CarrierTag c, const QVec& v) {
    switch (c) {
        case CarrierTag::QVec:
            if (v.empty()) throw std::invalid_argument("empty payload");
            return static_cast<int>(v.size());
        case CarrierTag::LexR2:
            if (v.size() != 2) throw std::invalid_argument("lex payload must be a pair");
            return 2;
        default:
            throw std::invalid_argument("coordinate payload on a non-coordinate carrier");
    }
}

void check_family(const std::vector<TermPtr>& ts) {
    if (ts.empty()) throw std::invalid_argument("empty term family");
    for (const auto& t : ts) {
        if (!t) throw std::invalid_argument("null term");
        if (t->carrier != ts[0]->carrier || t->dim != ts[0]->dim)
            throw std::invalid_argument("carrier mismatch in term family");
    }
}

}  // namespace

TermPtr t_const(CarrierTag c, QVec v) {
    auto t = std::make_shared<SeqTerm>();
    t->kind = SeqTerm::Kind::Const;
    t->carrier = c;
    t->dim = payload_dim(c, v);
    t->v = std::move(v);
    return t;
}

TermPtr t_geom(CarrierTag c, QVec v, Rat rate) {
    if (rate < 0 || rate >= 1) throw std::invalid_argument("geometric rate must be in [0,1)");
    auto t = std::make_shared<SeqTerm>();
    t->kind = SeqTerm::Kind::Geom;
    t->carrier = c;
    t->dim = payload_dim(c, v);
    t->v = std::move(v);
    t->r = std::move(rate);
    return t;
}

TermPtr t_harmonic(CarrierTag c, QVec v) {
    auto t = std::make_shared<SeqTerm>();
    t->kind = SeqTerm::Kind::Harmonic;
    t->carrier = c;
    t->dim = payload_dim(c, v);
    t->v = std::move(v);
    return t;
}

TermPtr t_sum(std::vector<TermPtr> ts) {
    check_family(ts);
    auto t = std::make_shared<SeqTerm>();
    t->kind = SeqTerm::Kind::Sum;
    t->carrier = ts[0]->carrier;
    t->dim = ts[0]->dim;
    t->children = std::move(ts);
    return t;
}

TermPtr t_shift(TermPtr inner, long k0) {
    if (!inner) throw std::invalid_argument("null term");
    if (k0 < 0) throw std::invalid_argument("shift offset must be >= 0");
    auto t = std::make_shared<SeqTerm>();
    t->kind = SeqTerm::Kind::Shift;
    t->carrier = inner->carrier;
    t->dim = inner->dim;
    t->k0 = k0;
    t->children = {std::move(inner)};
    return t;
}

TermPtr t_braid(int period, std::vector<int> selector, std::vector<TermPtr> ts) {
    check_family(ts);
    if (period < 1 || static_cast<int>(selector.size()) != period)
        throw std::invalid_argument("braid selector length must equal the period");
    for (int s : selector)
        if (s < 0 || s >= static_cast<int>(ts.size()))
            throw std::invalid_argument("braid selector index out of range");
    auto t = std::make_shared<SeqTerm>();
    t->kind = SeqTerm::Kind::Braid;
    t->carrier = ts[0]->carrier;
    t->dim = ts[0]->dim;
    t->period = period;
    t->selector = std::move(selector);
    t->children = std::move(ts);
    return t;
}

TermPtr t_unit_vectors(Ambient a) {
    auto t = std::make_shared<SeqTerm>();
    t->kind = SeqTerm::Kind::UnitVectors;
    t->carrier = a == Ambient::c0 ? CarrierTag::FinSeqC0 : CarrierTag::FinSeqLinf;
    return t;
}

TermPtr t_typewriter() {
    auto t = std::make_shared<SeqTerm>();
    t->kind = SeqTerm::Kind::Typewriter;
    t->carrier = CarrierTag::StepFn;
    return t;
}

TermPtr t_scale(const Rat& c, const TermPtr& t) {
    if (!t) throw std::invalid_argument("null term");
    switch (t->kind) {
        case SeqTerm::Kind::Const:
            return t_const(t->carrier, qv_scale(c, t->v));
        case SeqTerm::Kind::Geom:
            return t_geom(t->carrier, qv_scale(c, t->v), t->r);
        case SeqTerm::Kind::Harmonic:
            return t_harmonic(t->carrier, qv_scale(c, t->v));
        case SeqTerm::Kind::Sum: {
            std::vector<TermPtr> kids;
            for (const auto& ch : t->children) kids.push_back(t_scale(c, ch));
            return t_sum(std::move(kids));
        }
        case SeqTerm::Kind::Shift:
            return t_shift(t_scale(c, t->children[0]), t->k0);
        case SeqTerm::Kind::Braid: {
            std::vector<TermPtr> kids;
            for (const auto& ch : t->children) kids.push_back(t_scale(c, ch));
            return t_braid(t->period, t->selector, std::move(kids));
        }
        default:
            throw std::domain_error("UnsupportedDescriptor: cannot scale this term");
    }
}

QVec eval_term(const TermPtr& t, long k) {
    if (!t) throw std::invalid_argument("null term");
    if (k < 1) throw std::domain_error("sequence index must be >= 1");
    switch (t->kind) {
        case SeqTerm::Kind::Const:
            return t->v;
        case SeqTerm::Kind::Geom:
            return qv_scale(rat_pow(t->r, k), t->v);
        case SeqTerm::Kind::Harmonic:
            return qv_scale(Rat(1, static_cast<unsigned long>(k)), t->v);
        case SeqTerm::Kind::Sum: {
            QVec acc = eval_term(t->children[0], k);
            for (std::size_t i = 1; i < t->children.size(); ++i)
                acc = qv_add(acc, eval_term(t->children[i], k));
            return acc;
        }
        case SeqTerm::Kind::Shift:
            return eval_term(t->children[0], k + t->k0);
        case SeqTerm::Kind::Braid:
            return eval_term(t->children[t->selector[(k - 1) % t->period]], k);
        default:
            throw std::domain_error("UnsupportedDescriptor: term has no coordinate values");
    }
}

FinSeq eval_term_finseq(const TermPtr& t, long k) {
    if (!t) throw std::invalid_argument("null term");
    if (k < 1) throw std::domain_error("sequence index must be >= 1");
    switch (t->kind) {
        case SeqTerm::Kind::UnitVectors:
            return fs_unit(k, t->carrier == CarrierTag::FinSeqC0 ? Ambient::c0 : Ambient::linf);
        case SeqTerm::Kind::Shift:
            return eval_term_finseq(t->children[0], k + t->k0);
        case SeqTerm::Kind::Braid:
            return eval_term_finseq(t->children[t->selector[(k - 1) % t->period]], k);
        default:
            throw std::domain_error("UnsupportedDescriptor: not a sequence-space term");
    }
}

StepFn eval_term_stepfn(const TermPtr& t, long k) {
    if (!t) throw std::invalid_argument("null term");
    if (k < 1) throw std::domain_error("sequence index must be >= 1");
    switch (t->kind) {
        case SeqTerm::Kind::Typewriter:
            return typewriter_set(k);
        case SeqTerm::Kind::Shift:
            return eval_term_stepfn(t->children[0], k + t->k0);
        case SeqTerm::Kind::Braid:
            return eval_term_stepfn(t->children[t->selector[(k - 1) % t->period]], k);
        default:
            throw std::domain_error("UnsupportedDescriptor: not a step-function term");
    }
}

Rat eval_form(const ScalarForm& f, long k) {
    Rat v = f.a0;
    for (const auto& [rate, coef] : f.geoms) v += coef * rat_pow(rate, k);
    for (const auto& [s, coef] : f.harms) v += coef / Rat(static_cast<unsigned long>(k + s));
    return v;
}

Rat form_envelope(const ScalarForm& f, long k) {
    Rat v = 0;
    for (const auto& [rate, coef] : f.geoms) v += abs(coef) * rat_pow(rate, k);
    for (const auto& [s, coef] : f.harms) v += abs(coef) / Rat(static_cast<unsigned long>(k + s));
    return v;
}

namespace {

void form_add(ScalarForm& into, const ScalarForm& f) {
    into.a0 += f.a0;
    for (const auto& [rate, coef] : f.geoms) {
        Rat& c = into.geoms[rate];
        c += coef;
        if (c == 0) into.geoms.erase(rate);
    }
    for (const auto& [s, coef] : f.harms) {
        Rat& c = into.harms[s];
        c += coef;
        if (c == 0) into.harms.erase(s);
    }
}

ScalarForm form_shift(const ScalarForm& f, long k0) {
    ScalarForm out;
    out.a0 = f.a0;
    for (const auto& [rate, coef] : f.geoms) {
        Rat c = coef * rat_pow(rate, k0);
        if (c != 0) out.geoms[rate] = c;
    }
    for (const auto& [s, coef] : f.harms) out.harms[s + k0] = coef;
    return out;
}

ClassSeq expand_period(const ClassSeq& c, int period) {
    if (c.period == period) return c;
    ClassSeq out;
    out.period = period;
    for (int i = 0; i < period; ++i) out.cls.push_back(c.cls[i % c.period]);
    return out;
}

}  // namespace

CoordForms compile_term(const TermPtr& t) {
    if (!t) throw std::invalid_argument("null term");
    CoordForms out;
    out.dim = t->dim;
    switch (t->kind) {
        case SeqTerm::Kind::Const:
            for (int i = 0; i < t->dim; ++i) {
                ClassSeq c{1, {ScalarForm{}}};
                c.cls[0].a0 = t->v[i];
                out.coord.push_back(std::move(c));
            }
            return out;
        case SeqTerm::Kind::Geom:
            for (int i = 0; i < t->dim; ++i) {
                ClassSeq c{1, {ScalarForm{}}};
                if (t->r != 0 && t->v[i] != 0) c.cls[0].geoms[t->r] = t->v[i];
                out.coord.push_back(std::move(c));
            }
            return out;
        case SeqTerm::Kind::Harmonic:
            for (int i = 0; i < t->dim; ++i) {
                ClassSeq c{1, {ScalarForm{}}};
                if (t->v[i] != 0) c.cls[0].harms[0] = t->v[i];
                out.coord.push_back(std::move(c));
            }
            return out;
        case SeqTerm::Kind::Sum: {
            std::vector<CoordForms> kids;
            for (const auto& ch : t->children) kids.push_back(compile_term(ch));
            for (int i = 0; i < t->dim; ++i) {
                int period = 1;
                for (const auto& kf : kids) period = std::lcm(period, kf.coord[i].period);
                ClassSeq acc;
                acc.period = period;
                acc.cls.assign(period, ScalarForm{});
                for (const auto& kf : kids) {
                    ClassSeq e = expand_period(kf.coord[i], period);
                    for (int c = 0; c < period; ++c) form_add(acc.cls[c], e.cls[c]);
                }
                out.coord.push_back(std::move(acc));
            }
            return out;
        }
        case SeqTerm::Kind::Shift: {
            CoordForms inner = compile_term(t->children[0]);
            for (int i = 0; i < t->dim; ++i) {
                const ClassSeq& in = inner.coord[i];
                ClassSeq acc;
                acc.period = in.period;
                for (int c = 0; c < in.period; ++c)
                    acc.cls.push_back(form_shift(in.cls[(c + t->k0) % in.period], t->k0));
                out.coord.push_back(std::move(acc));
            }
            return out;
        }
        case SeqTerm::Kind::Braid: {
            std::vector<CoordForms> kids;
            for (const auto& ch : t->children) kids.push_back(compile_term(ch));
            for (int i = 0; i < t->dim; ++i) {
                int period = t->period;
                for (const auto& kf : kids) period = std::lcm(period, kf.coord[i].period);
                ClassSeq acc;
                acc.period = period;
                for (int c = 0; c < period; ++c) {
                    const ClassSeq& child = kids[t->selector[c % t->period]].coord[i];
                    acc.cls.push_back(child.cls[c % child.period]);
                }
                out.coord.push_back(std::move(acc));
            }
            return out;
        }
        default:
            throw std::domain_error("UnsupportedDescriptor: no coordinate closed form");
    }
}

}  // namespace convkit
