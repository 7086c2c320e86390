#include "convkit/lattice.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace convkit {

namespace {

void check_dims(const QVec& x, const QVec& y) {
    if (x.size() != y.size()) throw std::invalid_argument("dimension mismatch");
}

}  // namespace

QVec qv_sup(const QVec& x, const QVec& y) {
    check_dims(x, y);
    QVec z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = std::max(x[i], y[i]);
    return z;
}

QVec qv_inf(const QVec& x, const QVec& y) {
    check_dims(x, y);
    QVec z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = std::min(x[i], y[i]);
    return z;
}

QVec qv_abs(const QVec& x) {
    QVec z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = abs(x[i]);
    return z;
}

QVec qv_pos(const QVec& x) { return qv_sup(x, qv_zero(static_cast<int>(x.size()))); }

QVec qv_neg(const QVec& x) { return qv_pos(qv_scale(-1, x)); }

QVec qv_add(const QVec& x, const QVec& y) {
    check_dims(x, y);
    QVec z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] + y[i];
    return z;
}

QVec qv_sub(const QVec& x, const QVec& y) {
    check_dims(x, y);
    QVec z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] - y[i];
    return z;
}

QVec qv_scale(const Rat& c, const QVec& x) {
    QVec z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = c * x[i];
    return z;
}

bool qv_leq(const QVec& x, const QVec& y) {
    check_dims(x, y);
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] > y[i]) return false;
    return true;
}

QVec qv_zero(int n) { return QVec(n, Rat(0)); }

QVec qv_ones(int n) { return QVec(n, Rat(1)); }

std::optional<Rat> e_norm(const QVec& x, const QVec& e) {
    check_dims(x, e);
    for (const Rat& c : e)
        if (c < 0) throw std::domain_error("e must be nonnegative");
    Rat lam = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (e[i] == 0) {
            if (x[i] != 0) return std::nullopt;
            continue;
        }
        lam = std::max(lam, Rat(abs(x[i]) / e[i]));
    }
    return lam;
}

bool lex_lt(const LexVec& x, const LexVec& y) {
    return x.a < y.a || (x.a == y.a && x.b < y.b);
}

bool lex_leq(const LexVec& x, const LexVec& y) { return x == y || lex_lt(x, y); }

LexVec lex_sup(const LexVec& x, const LexVec& y) { return lex_lt(x, y) ? y : x; }

LexVec lex_inf(const LexVec& x, const LexVec& y) { return lex_lt(x, y) ? x : y; }

LexVec lex_abs(const LexVec& x) {
    LexVec zero{0, 0};
    return lex_lt(x, zero) ? LexVec{-x.a, -x.b} : x;
}

LexVec lex_pos(const LexVec& x) { return lex_sup(x, LexVec{0, 0}); }

LexVec lex_neg_part(const LexVec& x) { return lex_pos(LexVec{-x.a, -x.b}); }

Rat FinSeq::at(long k) const {
    auto it = entries.find(k);
    return it == entries.end() ? Rat(0) : it->second;
}

void FinSeq::set(long k, const Rat& v) {
    if (k < 1) throw std::invalid_argument("sequence index must be >= 1");
    if (v == 0)
        entries.erase(k);
    else
        entries[k] = v;
}

namespace {

FinSeq fs_pointwise(const FinSeq& x, const FinSeq& y, Rat (*op)(const Rat&, const Rat&)) {
    if (x.ambient != y.ambient) throw std::invalid_argument("ambient mismatch");
    FinSeq z;
    z.ambient = x.ambient;
    std::set<long> keys;
    for (const auto& [k, _] : x.entries) keys.insert(k);
    for (const auto& [k, _] : y.entries) keys.insert(k);
    for (long k : keys) z.set(k, op(x.at(k), y.at(k)));
    return z;
}

}  // namespace

FinSeq fs_sup(const FinSeq& x, const FinSeq& y) {
    return fs_pointwise(x, y, +[](const Rat& a, const Rat& b) { return std::max(a, b); });
}

FinSeq fs_inf(const FinSeq& x, const FinSeq& y) {
    return fs_pointwise(x, y, +[](const Rat& a, const Rat& b) { return std::min(a, b); });
}

FinSeq fs_abs(const FinSeq& x) {
    FinSeq z;
    z.ambient = x.ambient;
    for (const auto& [k, v] : x.entries) z.set(k, abs(v));
    return z;
}

FinSeq fs_sub(const FinSeq& x, const FinSeq& y) {
    return fs_pointwise(x, y, +[](const Rat& a, const Rat& b) { return Rat(a - b); });
}

bool fs_leq(const FinSeq& x, const FinSeq& y) {
    if (x.ambient != y.ambient) throw std::invalid_argument("ambient mismatch");
    for (const auto& [k, v] : x.entries)
        if (v > y.at(k)) return false;
    for (const auto& [k, v] : y.entries)
        if (x.at(k) > v) return false;
    return true;
}

FinSeq fs_unit(long k, Ambient a) {
    FinSeq z;
    z.ambient = a;
    z.set(k, 1);
    return z;
}

std::optional<Rat> e_norm(const FinSeq& x, const FinSeq& e) {
    if (x.ambient != e.ambient) throw std::invalid_argument("ambient mismatch");
    for (const auto& [_, v] : e.entries)
        if (v < 0) throw std::domain_error("e must be nonnegative");
    Rat lam = 0;
    for (const auto& [k, v] : x.entries) {
        Rat ek = e.at(k);
        if (ek == 0) return std::nullopt;
        lam = std::max(lam, Rat(abs(v) / ek));
    }
    return lam;
}

StepFn step_normalize(std::vector<StepFn::Piece> pieces) {
    std::vector<StepFn::Piece> kept;
    for (auto& p : pieces) {
        if (p.lo < 0 || p.hi > 1 || !(p.lo < p.hi))
            throw std::invalid_argument("step piece bounds must satisfy 0 <= lo < hi <= 1");
        if (p.value != 0) kept.push_back(std::move(p));
    }
    std::sort(kept.begin(), kept.end(),
              [](const StepFn::Piece& a, const StepFn::Piece& b) { return a.lo < b.lo; });
    for (std::size_t i = 1; i < kept.size(); ++i)
        if (kept[i].lo < kept[i - 1].hi) throw std::invalid_argument("overlapping step pieces");
    // Merge adjacent equal-valued pieces.
    std::vector<StepFn::Piece> merged;
    for (auto& p : kept) {
        if (!merged.empty() && merged.back().hi == p.lo && merged.back().value == p.value)
            merged.back().hi = p.hi;
        else
            merged.push_back(std::move(p));
    }
    return StepFn{std::move(merged)};
}

Rat StepFn::at(const Rat& t) const {
    if (t < 0 || t >= 1) throw std::domain_error("argument outside [0,1)");
    for (const auto& p : pieces)
        if (p.lo <= t && t < p.hi) return p.value;
    return 0;
}

namespace {

StepFn step_pointwise(const StepFn& x, const StepFn& y, Rat (*op)(const Rat&, const Rat&)) {
    std::set<Rat> cuts{Rat(0), Rat(1)};
    for (const auto& p : x.pieces) {
        cuts.insert(p.lo);
        cuts.insert(p.hi);
    }
    for (const auto& p : y.pieces) {
        cuts.insert(p.lo);
        cuts.insert(p.hi);
    }
    std::vector<StepFn::Piece> out;
    auto it = cuts.begin();
    Rat lo = *it++;
    for (; it != cuts.end(); ++it) {
        Rat hi = *it;
        Rat v = op(x.at(lo), y.at(lo));
        if (v != 0) out.push_back({lo, hi, v});
        lo = hi;
    }
    return step_normalize(std::move(out));
}

}  // namespace

StepFn step_sup(const StepFn& x, const StepFn& y) {
    return step_pointwise(x, y, +[](const Rat& a, const Rat& b) { return std::max(a, b); });
}

StepFn step_inf(const StepFn& x, const StepFn& y) {
    return step_pointwise(x, y, +[](const Rat& a, const Rat& b) { return std::min(a, b); });
}

StepFn step_abs(const StepFn& x) {
    std::vector<StepFn::Piece> out;
    for (auto p : x.pieces) {
        p.value = abs(p.value);
        out.push_back(p);
    }
    return step_normalize(std::move(out));
}

bool step_leq(const StepFn& x, const StepFn& y) {
    std::set<Rat> cuts{Rat(0)};
    for (const auto& p : x.pieces) {
        cuts.insert(p.lo);
        cuts.insert(p.hi);
    }
    for (const auto& p : y.pieces) {
        cuts.insert(p.lo);
        cuts.insert(p.hi);
    }
    for (const Rat& c : cuts) {
        if (c >= 1) continue;
        if (x.at(c) > y.at(c)) return false;
    }
    return true;
}

Rat step_measure_support(const StepFn& x) {
    Rat m = 0;
    for (const auto& p : x.pieces) m += p.hi - p.lo;
    return m;
}

Rat step_integral(const StepFn& x) {
    Rat m = 0;
    for (const auto& p : x.pieces) m += (p.hi - p.lo) * p.value;
    return m;
}

}  // namespace convkit
