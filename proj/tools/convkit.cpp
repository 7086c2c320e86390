#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "convkit/io.hpp"
#include "convkit/suites.hpp"
#include "convkit/typewriter.hpp"

using namespace convkit;

namespace {

void write_out(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    f << text;
}

int cmd_enumerate(int size, bool classify, const std::string& out) {
    if (size < 1 || size > 5) {
        std::cerr << "enumerate: --size must be between 1 and 5\n";
        return 2;
    }
    std::ostringstream os;
    if (classify) {
        long id = 0;
        enumerate_structures(size, [&](const ConvSpace& s) {
            os << "# space " << id++ << (is_topological(s) ? " topological" : "")
               << (is_hausdorff(s) ? " hausdorff" : "") << "\n"
               << emit_space(s);
        });
    }
    EnumerationSummary sum = enumerate_summary(size);
    os << "n=" << size << " total=" << sum.total << " topological=" << sum.topological
       << " hausdorff=" << sum.hausdorff << "\n";
    write_out(out, os.str());
    return 0;
}

int cmd_verify(const std::string& suite, unsigned long seed, const std::string& out) {
    SuiteReport rep = run_suite(suite, seed);
    write_out(out, format_report(rep) + "\n");
    return rep.passed() ? 0 : 1;
}

int cmd_typewriter(long terms, int samples, const std::string& subseq, unsigned long seed,
                   const std::string& out) {
    std::ostringstream os;
    AeReport ae = ae_sample_report(random_samples_01(samples, seed), terms);
    os << "horizon " << terms << "; measures " << (ae.measures_ok ? "exact 1/n" : "MISMATCH")
       << "\nsubsequence (" << subseq << "):";
    for (long nk : ae.subsequence) os << " " << nk;
    os << "\nsubsequence mass " << rat_str(ae.subsequence_mass) << "\n";
    for (const SampleTrace& tr : ae.traces)
        os << "sample " << rat_str(tr.sample) << ": hits<100 " << tr.hits_below_100
           << ", hits>=100 " << tr.hits_from_100 << ", last hit " << tr.last_hit
           << ", subsequence hits " << tr.subseq_hits << " (last at " << tr.subseq_exit
           << ")\n";
    write_out(out, os.str());
    bool ok = ae.measures_ok && ae.subsequence_mass < 2;
    for (const SampleTrace& tr : ae.traces)
        ok = ok && tr.subseq_exit < (ae.subsequence.empty() ? 1 : ae.subsequence.back());
    return ok ? 0 : 1;
}

int cmd_roundtrip(int size, int bounds_index, const std::string& out) {
    SuiteReport rep = suite_roundtrip(size, bounds_index);
    write_out(out, format_report(rep) + "\n");
    return rep.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite convergence-structure and vector-lattice toolkit"};
    app.require_subcommand(1);

    int size = 3;
    unsigned long seed = 0;
    int bounds_index = 3, bounds_family = 3;
    long terms = 10000;
    int samples = 100;
    std::string subseq = "pow2";
    std::string out;
    bool classify = false;
    std::string suite;

    auto* enumerate = app.add_subcommand("enumerate", "count canonical structures on n points");
    enumerate->add_option("--size", size, "carrier size (1..5)");
    enumerate->add_flag("--classify", classify, "emit every space");
    enumerate->add_option("--out", out, "output path");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite,
                       "axioms|bas|roundtrip|mixing|iterated-limit|vl-corpus|lex|typewriter|"
                       "tagged-line|operators")
        ->required();
    verify->add_option("--seed", seed, "PRNG seed for random corpora");
    verify->add_option("--bounds-index", bounds_index, "index-size bound");
    verify->add_option("--bounds-family", bounds_family, "family-size bound");
    verify->add_option("--out", out, "output path");

    auto* typewriter = app.add_subcommand("typewriter", "harmonic indicator recurrence report");
    typewriter->add_option("--terms", terms, "horizon N");
    typewriter->add_option("--samples", samples, "sample count");
    typewriter->add_option("--subseq", subseq, "subsequence rule (pow2)");
    typewriter->add_option("--seed", seed, "PRNG seed");
    typewriter->add_option("--out", out, "output path");

    auto* roundtrip = app.add_subcommand("roundtrip", "net<->filter translation identity");
    roundtrip->add_option("--size", size, "carrier size");
    roundtrip->add_option("--bounds-index", bounds_index, "index-size bound");
    roundtrip->add_option("--out", out, "output path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (enumerate->parsed()) return cmd_enumerate(size, classify, out);
        if (verify->parsed()) return cmd_verify(suite, seed, out);
        if (typewriter->parsed()) return cmd_typewriter(terms, samples, subseq, seed, out);
        if (roundtrip->parsed()) return cmd_roundtrip(size, bounds_index, out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
