#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "convkit/pointset.hpp"

namespace convkit {

// Every filter on a finite carrier is principal, so a filter is stored by its
// kernel (the intersection of all members); the members are exactly the
// supersets of the kernel.
struct PrincipalFilter {
    int carrier_size = 0;
    PointSet kernel;

    PrincipalFilter() = default;
    PrincipalFilter(int carrier, PointSet k) : carrier_size(carrier), kernel(k) {
        if (k.is_empty()) throw std::invalid_argument("filter kernel must be nonempty");
        if (k.carrier() != carrier) throw std::invalid_argument("kernel carrier mismatch");
    }

    bool contains(const PointSet& a) const { return kernel.subset_of(a); }
    bool operator==(const PrincipalFilter& o) const {
        return carrier_size == o.carrier_size && kernel == o.kernel;
    }
};

// A finite family of nonempty sets, directed under reverse inclusion.
struct FilterBase {
    int carrier_size = 0;
    std::vector<PointSet> sets;

    bool is_valid() const {
        if (sets.empty()) return false;
        for (const auto& a : sets) {
            if (a.is_empty() || a.carrier() != carrier_size) return false;
        }
        for (const auto& a : sets)
            for (const auto& b : sets) {
                bool found = false;
                for (const auto& c : sets)
                    if (c.subset_of(a & b)) {
                        found = true;
                        break;
                    }
                if (!found) return false;
            }
        return true;
    }
};

inline void require_same_carrier(const PrincipalFilter& f, const PrincipalFilter& g) {
    if (f.carrier_size != g.carrier_size)
        throw std::invalid_argument("filter carrier mismatch");
}

// Kernel of the generated filter is the least member of the base.
inline PrincipalFilter filter_from_base(const FilterBase& b) {
    if (!b.is_valid()) throw std::domain_error("not a filter base");
    PointSet least = b.sets.front();
    for (const auto& s : b.sets)
        if (s.subset_of(least)) least = s;
    for (const auto& s : b.sets)
        if (!least.subset_of(s)) throw std::domain_error("not a filter base");
    return PrincipalFilter(b.carrier_size, least);
}

inline PrincipalFilter principal(int carrier, int x) {
    return PrincipalFilter(carrier, PointSet::single(carrier, x));
}

// On a finite carrier the ultrafilters are exactly the point filters.
inline bool is_ultrafilter(const PrincipalFilter& f) { return f.kernel.count() == 1; }

// Filter containment F \subseteq G, i.e. kernel(G) \subseteq kernel(F).
inline bool leq(const PrincipalFilter& f, const PrincipalFilter& g) {
    require_same_carrier(f, g);
    return g.kernel.subset_of(f.kernel);
}

// F \cap G, the infimum of the two filters.
inline PrincipalFilter meet(const PrincipalFilter& f, const PrincipalFilter& g) {
    require_same_carrier(f, g);
    return PrincipalFilter(f.carrier_size, f.kernel | g.kernel);
}

// Image filter under a total point map into a carrier of size `target_size`.
inline PrincipalFilter image_filter(const std::vector<int>& f, int target_size,
                                    const PrincipalFilter& F) {
    if (static_cast<int>(f.size()) != F.carrier_size)
        throw std::invalid_argument("point map is not total on the carrier");
    PointSet img = PointSet::empty(target_size);
    for (int x : F.kernel.points()) {
        if (f[x] < 0 || f[x] >= target_size)
            throw std::invalid_argument("point map leaves the target carrier");
        img.add(f[x]);
    }
    return PrincipalFilter(target_size, img);
}

}  // namespace convkit
