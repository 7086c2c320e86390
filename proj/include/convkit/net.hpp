#pragma once

#include <span>
#include <utility>
#include <vector>

#include "convkit/directed.hpp"
#include "convkit/filter.hpp"
#include "convkit/pointset.hpp"

namespace convkit {

// A net: a valuation from a finite directed index set into a finite carrier.
struct Net {
    DirectedIndex index;
    std::vector<int> values;
    int carrier_size = 0;

    Net() = default;
    Net(DirectedIndex idx, std::vector<int> vals, int carrier);

    static Net constant(const DirectedIndex& idx, int value, int carrier) {
        return Net(idx, std::vector<int>(idx.size(), value), carrier);
    }

    int value(int a) const { return values[a]; }
};

// {x_alpha : alpha >= a0}; nonempty since a0 >= a0.
PointSet tail_set(const Net& n, int a0);

// All tail sets, deduplicated.
std::vector<PointSet> tail_family(const Net& n);

// Principal filter generated by the tail sets; its kernel is the minimal tail
// (the tail at an element above all others).
PrincipalFilter tail_filter(const Net& n);

// Every tail of x contains a tail of y.
bool is_quasi_subnet(const Net& y, const Net& x);
bool is_tail_equivalent(const Net& x, const Net& y);
bool is_strongly_tail_equivalent(const Net& x, const Net& y);

// Subnet repairing a quasi-subnet up to tail equivalence: the net over
// C = {(alpha, beta) : x_alpha = y_beta} with the product order, valued by x,
// together with the monotone cofinal index map into x's index.
struct SubnetWitness {
    Net net;
    std::vector<int> index_map;  // element of C -> alpha in x's index
};
SubnetWitness subnet_witness(const Net& x, const Net& y);

// Both nets re-indexed over the product A x B with the componentwise order;
// each output is strongly tail equivalent to its input.
std::pair<Net, Net> common_reindex(const Net& x, const Net& y);

// For a net increasing w.r.t. the supplied carrier partial order: the net
// indexed by the reverse-inclusion-ordered family of tail sets, valued at the
// least element of each tail set.
Net canonical_monotone(const Net& x, const Relation& carrier_le);

enum class Pick { First, Second };
using Selector = std::vector<Pick>;

Net braid(const Net& x, const Net& y, const Selector& s);

// Mixing of two nets: index {(alpha, beta, z) : z in {x_alpha, y_beta}}
// ordered by the first two components.
Net mix2(const Net& x, const Net& y);

// Mixing of a finite family: index (prod_j A_j) x J with the product preorder
// on the first component only.
Net mix_family(std::span<const Net> nets);

// Matryoshka along an increasing chain of index elements: index
// {(n, alpha) : alpha >= chain[n]} preordered by the first component.
Net matryoshka(const Net& x, const std::vector<int>& chain);

// Reaction of a directed J with a J-indexed family: same elements as the
// mixing but ordered by the product order on the first component and J's
// order on the second.
Net reaction(const DirectedIndex& J, std::span<const Net> nets);

// Canonical net whose tail filter base is B: index {(A, x) : x in A in B}
// with (A, x) <= (B, y) iff B is a subset of A, valued by the point.
Net net_from_filter_base(const FilterBase& b);

}  // namespace convkit
