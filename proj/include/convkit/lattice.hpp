#pragma once

#include <map>
#include <optional>
#include <vector>

#include "convkit/rational.hpp"

namespace convkit {

// --- QVec(n): coordinatewise order -----------------------------------------

QVec qv_sup(const QVec& x, const QVec& y);
QVec qv_inf(const QVec& x, const QVec& y);
QVec qv_abs(const QVec& x);
QVec qv_pos(const QVec& x);
QVec qv_neg(const QVec& x);
QVec qv_add(const QVec& x, const QVec& y);
QVec qv_sub(const QVec& x, const QVec& y);
QVec qv_scale(const Rat& c, const QVec& x);
bool qv_leq(const QVec& x, const QVec& y);  // coordinatewise
QVec qv_zero(int n);
QVec qv_ones(int n);

// inf{lambda >= 0 : |x| <= lambda e}; nullopt = x outside the ideal of e.
std::optional<Rat> e_norm(const QVec& x, const QVec& e);

// --- LexR2: R^2 with the lexicographic order --------------------------------

struct LexVec {
    Rat a, b;  // a is the dominant coordinate

    bool operator==(const LexVec& o) const { return a == o.a && b == o.b; }
};

bool lex_lt(const LexVec& x, const LexVec& y);
bool lex_leq(const LexVec& x, const LexVec& y);
LexVec lex_sup(const LexVec& x, const LexVec& y);
LexVec lex_inf(const LexVec& x, const LexVec& y);
LexVec lex_abs(const LexVec& x);
LexVec lex_pos(const LexVec& x);
LexVec lex_neg_part(const LexVec& x);

// --- Finitely supported sequences with an ambient flag -----------------------

enum class Ambient { c0, linf };

struct FinSeq {
    std::map<long, Rat> entries;  // index (>= 1) -> nonzero value
    Ambient ambient = Ambient::linf;

    Rat at(long k) const;
    void set(long k, const Rat& v);  // erases zeros
    bool operator==(const FinSeq& o) const {
        return entries == o.entries && ambient == o.ambient;
    }
};

FinSeq fs_sup(const FinSeq& x, const FinSeq& y);
FinSeq fs_inf(const FinSeq& x, const FinSeq& y);
FinSeq fs_abs(const FinSeq& x);
FinSeq fs_sub(const FinSeq& x, const FinSeq& y);
bool fs_leq(const FinSeq& x, const FinSeq& y);
FinSeq fs_unit(long k, Ambient a);

// e-norm against a finitely supported e >= 0; the ambient constant-one bound
// is handled separately by the deciders.
std::optional<Rat> e_norm(const FinSeq& x, const FinSeq& e);

// --- Rational step functions on [0,1), right-open pieces, 0 elsewhere --------

struct StepFn {
    struct Piece {
        Rat lo, hi;  // [lo, hi), 0 <= lo < hi <= 1
        Rat value;
    };
    std::vector<Piece> pieces;  // strictly increasing, non-overlapping, nonzero values

    Rat at(const Rat& t) const;  // t in [0,1)
};

StepFn step_normalize(std::vector<StepFn::Piece> pieces);  // sort/merge/validate
StepFn step_sup(const StepFn& x, const StepFn& y);
StepFn step_inf(const StepFn& x, const StepFn& y);
StepFn step_abs(const StepFn& x);
bool step_leq(const StepFn& x, const StepFn& y);
Rat step_measure_support(const StepFn& x);
Rat step_integral(const StepFn& x);

}  // namespace convkit
