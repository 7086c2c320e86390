#pragma once

#include <map>
#include <memory>
#include <vector>

#include "convkit/lattice.hpp"
#include "convkit/rational.hpp"

namespace convkit {

enum class CarrierTag { QVec, LexR2, FinSeqC0, FinSeqLinf, StepFn };

// Closed-form sequence descriptor. Deciders are exact on this language and
// answer Undecided outside it.
struct SeqTerm;
using TermPtr = std::shared_ptr<const SeqTerm>;

struct SeqTerm {
    enum class Kind { Const, Geom, Harmonic, Sum, Shift, Braid, UnitVectors, Typewriter };

    Kind kind;
    CarrierTag carrier;
    int dim = 0;  // coordinate count (QVec: n, LexR2: 2, otherwise 0)

    QVec v;                          // Const / Geom / Harmonic payload
    Rat r;                           // Geom rate, 0 <= r < 1
    long k0 = 0;                     // Shift offset, >= 0
    int period = 0;                  // Braid period
    std::vector<int> selector;       // Braid: length = period, child indices
    std::vector<TermPtr> children;   // Sum / Shift / Braid
};

TermPtr t_const(CarrierTag c, QVec v);
TermPtr t_geom(CarrierTag c, QVec v, Rat rate);
TermPtr t_harmonic(CarrierTag c, QVec v);
TermPtr t_sum(std::vector<TermPtr> ts);
TermPtr t_shift(TermPtr t, long k0);
TermPtr t_braid(int period, std::vector<int> selector, std::vector<TermPtr> ts);
TermPtr t_unit_vectors(Ambient a);
TermPtr t_typewriter();

// Linear images (used by Sum-of-negation style constructions and operators).
TermPtr t_scale(const Rat& c, const TermPtr& t);

// x_k for coordinate carriers (QVec, LexR2); k >= 1.
QVec eval_term(const TermPtr& t, long k);
FinSeq eval_term_finseq(const TermPtr& t, long k);
StepFn eval_term_stepfn(const TermPtr& t, long k);

// --- Exact normal form --------------------------------------------------------
// Per coordinate and per residue class c = (k-1) mod period, the sequence is
//   a0 + sum_r coef_r * r^k + sum_s coef_s / (k+s).

struct ScalarForm {
    Rat a0;
    std::map<Rat, Rat> geoms;   // rate (0 < rate < 1) -> coefficient
    std::map<long, Rat> harms;  // shift s >= 0 -> coefficient of 1/(k+s)

    bool is_constant() const { return geoms.empty() && harms.empty(); }
    bool operator==(const ScalarForm& o) const {
        return a0 == o.a0 && geoms == o.geoms && harms == o.harms;
    }
};

Rat eval_form(const ScalarForm& f, long k);
// Decreasing bound for |f(k) - a0|, valid for all k >= 1.
Rat form_envelope(const ScalarForm& f, long k);

struct ClassSeq {
    int period = 1;
    std::vector<ScalarForm> cls;  // indexed by (k-1) mod period
};

struct CoordForms {
    int dim = 0;
    std::vector<ClassSeq> coord;
};

// Exact compilation; throws UnsupportedDescriptor-style std::domain_error for
// UnitVectors / Typewriter terms (those have dedicated deciders).
CoordForms compile_term(const TermPtr& t);

}  // namespace convkit
