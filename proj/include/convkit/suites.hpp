#pragma once

#include <string>
#include <vector>

#include "convkit/convspace.hpp"
#include "convkit/decide.hpp"
#include "convkit/operators.hpp"
#include "convkit/seqterm.hpp"

namespace convkit {

struct SuiteReport {
    std::string name;
    long pass = 0, fail = 0, skip = 0;
    std::string witness;
    unsigned long seed = 0;
    double seconds = 0;

    long total() const { return pass + fail + skip; }
    bool passed() const { return fail == 0; }
};

// Deterministic corpora.
std::vector<ConvSpace> random_spaces(int count, int max_n, unsigned long seed);
std::vector<TermPtr> qvec_corpus(int count, int max_dim, unsigned long seed);
std::vector<TermPtr> qvec_corpus_dim(int count, int dim, unsigned long seed);
std::vector<RationalMatrix> random_matrices(int count, int dim, unsigned long seed);
std::vector<Rat> random_samples_01(int count, unsigned long seed);

// Verification suites (defaults match the documented bounds).
SuiteReport suite_axioms();                                 // N1-N3, all 3-point spaces
SuiteReport suite_bas(int spaces, int max_n, unsigned long seed);
SuiteReport suite_roundtrip(int size, int max_index);
SuiteReport suite_mixing();
SuiteReport suite_iterated_limit(unsigned long seed);
SuiteReport suite_vl_corpus(int terms, unsigned long seed);
SuiteReport suite_lex();
SuiteReport suite_typewriter(long horizon, int samples, const std::string& subseq,
                             unsigned long seed);
SuiteReport suite_tagged_line();
SuiteReport suite_operators(int matrices, int terms, unsigned long seed);

SuiteReport run_suite(const std::string& name, unsigned long seed);  // default bounds

std::string format_report(const SuiteReport& r);

}  // namespace convkit
