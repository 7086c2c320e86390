#include "convkit/typewriter.hpp"

#include <stdexcept>

namespace convkit {

namespace {

Rat frac(const Rat& x) {
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return x - Rat(fl);
}

// Wrapped interval [a, a + 1/n) mod 1 with a in [0,1); one or two pieces.
std::vector<StepFn::Piece> wrap_pieces(const Rat& a, const Rat& len) {
    Rat b = a + len;
    if (b <= 1) return {{a, b, Rat(1)}};
    std::vector<StepFn::Piece> out;
    if (a < 1) out.push_back({a, Rat(1), Rat(1)});
    out.push_back({Rat(0), b - 1, Rat(1)});
    return out;
}

}  // namespace

StepFn typewriter_set(long n) {
    if (n < 1) throw std::domain_error("typewriter index must be >= 1");
    Rat s = 0;  // s_{n-1}
    for (long k = 1; k < n; ++k) s += Rat(1, static_cast<unsigned long>(k));
    return step_normalize(wrap_pieces(frac(s), Rat(1, static_cast<unsigned long>(n))));
}

AeReport ae_sample_report(const std::vector<Rat>& samples, long horizon) {
    for (const Rat& t : samples)
        if (t < 0 || t >= 1) throw std::domain_error("samples must lie in [0,1)");

    AeReport rep;
    rep.horizon = horizon;
    rep.measures_ok = true;
    for (const Rat& t : samples) rep.traces.push_back(SampleTrace{t});

    rep.subsequence_mass = 0;
    for (long nk = 1; nk <= horizon; nk *= 2) {
        rep.subsequence.push_back(nk);
        rep.subsequence_mass += Rat(1, static_cast<unsigned long>(nk));
    }

    Rat s = 0;  // running harmonic sum s_{n-1}
    std::size_t next_sub = 0;
    for (long n = 1; n <= horizon; ++n) {
        Rat a = frac(s);
        Rat len(1, static_cast<unsigned long>(n));
        Rat b = a + len;  // possibly past 1; membership handles the wrap
        bool is_sub = next_sub < rep.subsequence.size() && rep.subsequence[next_sub] == n;
        if (is_sub) ++next_sub;

        Rat measure = 0;
        for (const auto& p : wrap_pieces(a, len)) measure += p.hi - p.lo;
        if (measure != len) rep.measures_ok = false;

        for (SampleTrace& tr : rep.traces) {
            const Rat& t = tr.sample;
            bool hit = b <= 1 ? (a <= t && t < b) : (t >= a || t < b - 1);
            if (!hit) continue;
            if (n < 100)
                ++tr.hits_below_100;
            else
                ++tr.hits_from_100;
            tr.last_hit = n;
            if (is_sub) {
                ++tr.subseq_hits;
                tr.subseq_exit = n;
            }
        }
        s += len;
    }
    return rep;
}

}  // namespace convkit
