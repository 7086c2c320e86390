#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "convkit/filter.hpp"
#include "convkit/net.hpp"
#include "convkit/pointset.hpp"

namespace convkit {

// User-declared convergences prior to axiom closure: (kernel, point) pairs.
struct RawConvergence {
    int carrier_size = 0;
    std::vector<std::pair<PointSet, int>> pairs;
};

// Canonical finite convergence structure: a kernel K converges to x iff
// K is nonempty and K \subseteq V[x]. The axioms force x in V[x].
class ConvSpace {
public:
    ConvSpace() = default;
    ConvSpace(int carrier, std::vector<PointSet> v);

    int size() const { return n_; }
    const PointSet& V(int x) const { return v_[x]; }
    const std::vector<PointSet>& V() const { return v_; }

    bool operator==(const ConvSpace& o) const { return n_ == o.n_ && v_ == o.v_; }

    static ConvSpace discrete(int n);
    static ConvSpace indiscrete(int n);

private:
    int n_ = 0;
    std::vector<PointSet> v_;
};

enum class FromRawMode { Verify, Complete };

// Diagnostic for verify-mode failures: which axiom broke and a witness.
struct AxiomViolation {
    std::string axiom;  // "F1", "F2" or "F3"
    int point = -1;
    PointSet witness;
    std::string message;
};

struct FromRawResult {
    std::optional<ConvSpace> space;
    std::optional<AxiomViolation> violation;
};

FromRawResult from_raw(const RawConvergence& r, FromRawMode mode);

bool converges_filter(const ConvSpace& s, const PrincipalFilter& f, int x);
bool converges_net(const ConvSpace& s, const Net& n, int x);

PointSet closure(const ConvSpace& s, const PointSet& a);
bool is_closed(const ConvSpace& s, const PointSet& a);
bool is_open(const ConvSpace& s, const PointSet& a);
bool is_dense(const ConvSpace& s, const PointSet& a);
PrincipalFilter neighborhood_filter(const ConvSpace& s, int x);

ConvSpace topological_modification(const ConvSpace& s);
bool is_topological(const ConvSpace& s);
bool is_hausdorff(const ConvSpace& s);

// Vacuously true on finite carriers (every ultrafilter [z] converges to z);
// exposed for API symmetry.
bool is_compact(const ConvSpace& s);
bool is_compact_subset(const ConvSpace& s, const PointSet& a);

// Total point map between carriers of two spaces.
struct PointMap {
    std::vector<int> map;  // domain point -> codomain point
    int target_size = 0;

    int operator()(int x) const { return map[x]; }
};

bool is_continuous(const PointMap& f, const ConvSpace& s, const ConvSpace& t);

// Weakest structure on a carrier of size n making every map continuous;
// empty family yields the indiscrete space.
ConvSpace initial_structure(int n, std::span<const std::pair<PointMap, ConvSpace>> maps);

// Subspace on Y (nonempty); points are relabeled to 0..|Y|-1 in order.
ConvSpace subspace(const ConvSpace& s, const PointSet& y);

// Product space; point ids are mixed-radix ranks of coordinate tuples
// (last factor varies fastest).
ConvSpace product(std::span<const ConvSpace> factors);
std::vector<int> product_rank_to_tuple(std::span<const ConvSpace> factors, int rank);

// Continuous convergence structure on C(S, T); carrier points are the
// continuous maps in lexicographic order of their value tables.
struct ContinuousConvergence {
    ConvSpace space;
    std::vector<std::vector<int>> maps;  // carrier point -> value table
};
ContinuousConvergence continuous_convergence_space(const ConvSpace& s, const ConvSpace& t);

// Bounded-verification reports.
struct VerifyReport {
    std::string name;
    long cases = 0;
    long failures = 0;
    std::string witness;  // description of the first failure, if any

    bool passed() const { return failures == 0; }
};

struct MixingBounds {
    int max_family = 3;    // nets per family
    int max_index = 2;     // member index size
};

// Theorem check: every mixing of a family of nets co-convergent to x
// converges to x (finite spaces are pretopological, so this must pass).
VerifyReport verify_mixing_theorem(const ConvSpace& s, const MixingBounds& bounds);

struct IteratedLimitBounds {
    int max_outer = 3;      // |J|
    int max_index = 3;      // member index size
    long samples = 400;     // random samples per |J| >= 2
    unsigned long seed = 0;
};

// Bounded search for iterated-limit violations; verdict (no violation found)
// should equal is_topological within adequate bounds. |J| = 1 is exhaustive
// over the member-net pool, larger J are sampled.
VerifyReport verify_iterated_limit(const ConvSpace& s, const IteratedLimitBounds& bounds);

// Net<->filter translation roundtrip certificate: re-deriving V from
// net convergence (via tail filters of all nets up to the index bound)
// must reproduce V exactly.
VerifyReport roundtrip_check(const ConvSpace& s, int max_index_size);

// Exhaustive enumeration of canonical structures on n points,
// lexicographic over the V-bitmask tuple; (2^(n-1))^n spaces.
struct EnumerationSummary {
    long total = 0;
    long topological = 0;
    long hausdorff = 0;
};
void enumerate_structures(int n, const std::function<void(const ConvSpace&)>& yield);
EnumerationSummary enumerate_summary(int n);

// All valid directed index sets on at most max_size labeled elements.
std::vector<DirectedIndex> all_directed_indices(int max_size);
// All nets into a carrier of the given size, over those indices.
std::vector<Net> all_nets(int carrier_size, int max_index_size);

}  // namespace convkit
