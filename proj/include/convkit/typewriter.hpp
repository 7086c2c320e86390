#pragma once

#include <vector>

#include "convkit/lattice.hpp"
#include "convkit/rational.hpp"

namespace convkit {

// Indicator of the n-th harmonic interval wrapped mod 1:
// [s_{n-1} mod 1, s_n mod 1) with s_n = sum_{k<=n} 1/k; one or two pieces,
// support measure exactly 1/n.
StepFn typewriter_set(long n);

struct SampleTrace {
    Rat sample;
    long hits_below_100 = 0;   // #{n <= N : sample in A_n, n < 100}
    long hits_from_100 = 0;    // #{n <= N : sample in A_n, n >= 100}
    long last_hit = 0;         // largest n <= N with sample in A_n
    long subseq_hits = 0;      // hits along the subsequence
    long subseq_exit = 0;      // last subsequence index k with sample in A_{n_k} (0 = never)
};

struct AeReport {
    long horizon = 0;
    std::vector<long> subsequence;  // n_k values within the horizon
    Rat subsequence_mass;           // exact sum of 1/n_k
    std::vector<SampleTrace> traces;
    bool measures_ok = false;       // measure(A_n) == 1/n for all n <= horizon
};

// Evidence for the typewriter behavior: every sample recurs under the full
// sequence, while the summable power-of-two subsequence is exited permanently.
AeReport ae_sample_report(const std::vector<Rat>& samples, long horizon);

}  // namespace convkit
