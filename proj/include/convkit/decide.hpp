#pragma once

#include <optional>
#include <span>
#include <string>

#include "convkit/seqterm.hpp"

namespace convkit {

enum class Status { Limit, NoLimit, Undecided };

// Limit plus a per-coordinate dominating envelope u_k (a0 = 0, nonnegative
// coefficients, so u is decreasing to 0 and |x_k - L| <= u(k) for all k).
struct OResult {
    Status status = Status::Undecided;
    QVec limit;
    std::vector<ScalarForm> witness;
};

// Order limit. QVec/LexR2 via the closed form; UnitVectors via the ambient
// rule (0 in linf, none in c0); StepFn terms are not decided here.
OResult o_limit(const TermPtr& t);

// Tail-sup/tail-inf envelope route; QVec only, must agree with o_limit.
OResult o_limit_limsup(const TermPtr& t);

struct RuResult {
    Status status = Status::Undecided;
    QVec limit;
    QVec e;  // regulator: |x_k - L| <= eps*e eventually, for every eps > 0
};
RuResult ru_limit(const TermPtr& t);

// Mackey route: a single order interval B = [-bound, bound] absorbing the
// eps-tails. Decided without consulting ru_limit.
struct MackeyResult {
    Status status = Status::Undecided;
    QVec limit;
    QVec bound;
};
MackeyResult mackey_limit(const TermPtr& t);

bool is_order_cauchy(const TermPtr& t);

// Exact sign decision for "x_k >= 0 for every k >= 1" (coordinatewise).
struct Decision {
    enum V { Yes, No, Undecided } verdict = Undecided;
    long witness_k = 0;  // violating index when verdict == No
};
Decision always_nonneg(const TermPtr& t);
Decision class_nonneg(const ScalarForm& f, long kmin, long period);

struct MonotoneReport {
    bool increasing = false;
    bool decreasing = false;
    bool bounded = false;
    bool hypotheses_hold = false;
    bool cauchy = false;
    QVec bound;
    std::string detail;
};
// Monotone + order bounded => order Cauchy, checked from the closed form.
MonotoneReport monotone_cauchy_check(const TermPtr& t);

struct BoundResult {
    Status status = Status::Undecided;  // Limit = bounded with witness
    QVec u;
    bool ambient_ones = false;  // linf unit-vector bound is the constant-one sequence
};
BoundResult term_order_bounded(const TermPtr& t);
QVec finite_set_bound(std::span<const QVec> xs);

// Least k0 with envelope(k) < bound for all k >= k0 (envelope decreasing);
// nullopt if the search exceeds the cap.
std::optional<long> envelope_threshold(const ScalarForm& envelope, const Rat& bound);

// --- Order neighborhoods in QVec(n) ------------------------------------------

struct Box {
    // nullopt bound = unbounded on that side.
    std::vector<std::optional<Rat>> lo, hi;
    std::vector<bool> lo_closed, hi_closed;
};
struct BoxRegion {
    int dim = 0;
    std::vector<Box> boxes;
};
bool box_contains(const Box& b, const QVec& p);
bool region_contains(const BoxRegion& r, const QVec& p);
// True iff [x - d*1, x + d*1] lies in the region for some rational d > 0.
bool order_neighborhood(const BoxRegion& u, const QVec& x);

struct LatticeReport {
    std::string name;
    long cases = 0;
    long failures = 0;
    std::string witness;

    bool passed() const { return failures == 0; }
};

// [a,b] is convex and order closed, exercised over the supplied corpus.
LatticeReport order_interval_properties(const QVec& a, const QVec& b,
                                        std::span<const TermPtr> corpus);
// Finite-dimensional collapse: o-limit exists iff the coordinatewise limit
// does, with equal values.
LatticeReport order_topology_equiv_check(std::span<const TermPtr> corpus);

struct UnitResult {
    bool has_unit = false;
    QVec unit;  // coordinates (QVec: all-ones; LexR2: (1,0))
    bool archimedean = true;
};
UnitResult strong_unit_check(CarrierTag c, int dim);

struct ArchWitness {
    bool non_archimedean = false;
    LexVec x, u;  // 0 < x <= (1/n) u for every n
};
ArchWitness archimedean_witness(CarrierTag c);

}  // namespace convkit
