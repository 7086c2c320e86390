#include "convkit/net.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace convkit {

namespace {

void require_same_net_carrier(const Net& a, const Net& b) {
    if (a.carrier_size != b.carrier_size)
        throw std::invalid_argument("net carrier mismatch");
}

}  // namespace

Net::Net(DirectedIndex idx, std::vector<int> vals, int carrier)
    : index(std::move(idx)), values(std::move(vals)), carrier_size(carrier) {
    if (!index.is_valid()) throw std::invalid_argument("index set is not directed");
    if (static_cast<int>(values.size()) != index.size())
        throw std::invalid_argument("valuation is not total on the index");
    if (carrier_size <= 0 || carrier_size > PointSet::kMaxCarrier)
        throw std::invalid_argument("carrier size out of range");
    for (int v : values)
        if (v < 0 || v >= carrier_size)
            throw std::invalid_argument("net value outside the carrier");
}

PointSet tail_set(const Net& n, int a0) {
    if (a0 < 0 || a0 >= n.index.size())
        throw std::invalid_argument("invalid index element");
    PointSet t = PointSet::empty(n.carrier_size);
    for (int a = 0; a < n.index.size(); ++a)
        if (n.index.le(a0, a)) t.add(n.values[a]);
    return t;
}

std::vector<PointSet> tail_family(const Net& n) {
    std::vector<PointSet> fam;
    for (int a = 0; a < n.index.size(); ++a) {
        PointSet t = tail_set(n, a);
        if (std::find(fam.begin(), fam.end(), t) == fam.end()) fam.push_back(t);
    }
    return fam;
}

PrincipalFilter tail_filter(const Net& n) {
    int t = n.index.top();
    if (t < 0) throw std::logic_error("directed index without a top element");
    return PrincipalFilter(n.carrier_size, tail_set(n, t));
}

bool is_quasi_subnet(const Net& y, const Net& x) {
    require_same_net_carrier(y, x);
    for (int a0 = 0; a0 < x.index.size(); ++a0) {
        PointSet tx = tail_set(x, a0);
        bool found = false;
        for (int b0 = 0; b0 < y.index.size() && !found; ++b0)
            if (tail_set(y, b0).subset_of(tx)) found = true;
        if (!found) return false;
    }
    return true;
}

bool is_tail_equivalent(const Net& x, const Net& y) {
    return is_quasi_subnet(x, y) && is_quasi_subnet(y, x);
}

bool is_strongly_tail_equivalent(const Net& x, const Net& y) {
    require_same_net_carrier(x, y);
    auto fx = tail_family(x);
    auto fy = tail_family(y);
    std::sort(fx.begin(), fx.end());
    std::sort(fy.begin(), fy.end());
    return fx == fy;
}

SubnetWitness subnet_witness(const Net& x, const Net& y) {
    require_same_net_carrier(x, y);
    if (!is_quasi_subnet(y, x))
        throw std::domain_error("subnet_witness requires y to be a quasi-subnet of x");

    std::vector<std::pair<int, int>> elems;  // (alpha, beta) with x_alpha == y_beta
    for (int a = 0; a < x.index.size(); ++a)
        for (int b = 0; b < y.index.size(); ++b)
            if (x.values[a] == y.values[b]) elems.emplace_back(a, b);
    int m = static_cast<int>(elems.size());

    Relation rel(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (x.index.le(elems[i].first, elems[j].first) &&
                y.index.le(elems[i].second, elems[j].second))
                rel.set(i, j);

    std::vector<int> vals(m), index_map(m);
    for (int i = 0; i < m; ++i) {
        vals[i] = x.values[elems[i].first];
        index_map[i] = elems[i].first;
    }
    return SubnetWitness{Net(DirectedIndex(rel), std::move(vals), x.carrier_size),
                         std::move(index_map)};
}

std::pair<Net, Net> common_reindex(const Net& x, const Net& y) {
    require_same_net_carrier(x, y);
    int na = x.index.size(), nb = y.index.size();
    int m = na * nb;
    Relation rel(m);
    auto id = [nb](int a, int b) { return a * nb + b; };
    for (int a1 = 0; a1 < na; ++a1)
        for (int b1 = 0; b1 < nb; ++b1)
            for (int a2 = 0; a2 < na; ++a2)
                for (int b2 = 0; b2 < nb; ++b2)
                    if (x.index.le(a1, a2) && y.index.le(b1, b2))
                        rel.set(id(a1, b1), id(a2, b2));
    DirectedIndex idx{rel};
    std::vector<int> vx(m), vy(m);
    for (int a = 0; a < na; ++a)
        for (int b = 0; b < nb; ++b) {
            vx[id(a, b)] = x.values[a];
            vy[id(a, b)] = y.values[b];
        }
    return {Net(idx, std::move(vx), x.carrier_size), Net(idx, std::move(vy), y.carrier_size)};
}

Net canonical_monotone(const Net& x, const Relation& carrier_le) {
    if (carrier_le.n != x.carrier_size)
        throw std::invalid_argument("carrier order size mismatch");
    for (int a = 0; a < x.index.size(); ++a)
        for (int b = 0; b < x.index.size(); ++b)
            if (x.index.le(a, b) && !carrier_le.le(x.values[a], x.values[b]))
                throw std::domain_error("net is not increasing");

    auto tails = tail_family(x);
    int m = static_cast<int>(tails.size());
    Relation rel(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (tails[j].subset_of(tails[i])) rel.set(i, j);  // reverse inclusion

    std::vector<int> vals(m);
    for (int i = 0; i < m; ++i) {
        int least = -1;
        for (int p : tails[i].points()) {
            bool below_all = true;
            for (int q : tails[i].points())
                if (!carrier_le.le(p, q)) below_all = false;
            if (below_all) {
                least = p;
                break;
            }
        }
        if (least < 0)
            throw std::logic_error("tail set of an increasing net has no least element");
        vals[i] = least;
    }
    return Net(DirectedIndex(rel), std::move(vals), x.carrier_size);
}

Net braid(const Net& x, const Net& y, const Selector& s) {
    require_same_net_carrier(x, y);
    if (!(x.index == y.index)) throw std::invalid_argument("braiding requires a shared index");
    if (static_cast<int>(s.size()) != x.index.size())
        throw std::invalid_argument("selector is not total on the index");
    std::vector<int> vals(x.index.size());
    for (int a = 0; a < x.index.size(); ++a)
        vals[a] = s[a] == Pick::First ? x.values[a] : y.values[a];
    return Net(x.index, std::move(vals), x.carrier_size);
}

Net mix2(const Net& x, const Net& y) {
    require_same_net_carrier(x, y);
    std::vector<std::pair<std::pair<int, int>, int>> elems;  // ((alpha, beta), z)
    for (int a = 0; a < x.index.size(); ++a)
        for (int b = 0; b < y.index.size(); ++b) {
            elems.push_back({{a, b}, x.values[a]});
            if (y.values[b] != x.values[a]) elems.push_back({{a, b}, y.values[b]});
        }
    int m = static_cast<int>(elems.size());
    Relation rel(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (x.index.le(elems[i].first.first, elems[j].first.first) &&
                y.index.le(elems[i].first.second, elems[j].first.second))
                rel.set(i, j);
    std::vector<int> vals(m);
    for (int i = 0; i < m; ++i) vals[i] = elems[i].second;
    return Net(DirectedIndex(rel), std::move(vals), x.carrier_size);
}

namespace {

// Shared element layout for mix_family and reaction: tuples over the product
// of the member index sets paired with a member id; element id is
// tuple_rank * count + j under mixed-radix tuple ranking.
struct FamilyIndex {
    std::vector<int> sizes;
    long tuples = 1;
    int count = 0;

    explicit FamilyIndex(std::span<const Net> nets) {
        if (nets.empty()) throw std::invalid_argument("empty net family");
        count = static_cast<int>(nets.size());
        for (const Net& n : nets) {
            sizes.push_back(n.index.size());
            tuples *= n.index.size();
        }
    }

    std::vector<int> tuple(long rank) const {
        std::vector<int> t(sizes.size());
        for (int j = static_cast<int>(sizes.size()) - 1; j >= 0; --j) {
            t[j] = static_cast<int>(rank % sizes[j]);
            rank /= sizes[j];
        }
        return t;
    }
};

}  // namespace

Net mix_family(std::span<const Net> nets) {
    FamilyIndex fam(nets);
    for (const Net& n : nets) require_same_net_carrier(n, nets[0]);

    long m = fam.tuples * fam.count;
    Relation rel(static_cast<int>(m));
    std::vector<std::vector<int>> tuples(fam.tuples);
    for (long r = 0; r < fam.tuples; ++r) tuples[r] = fam.tuple(r);

    for (long r1 = 0; r1 < fam.tuples; ++r1)
        for (long r2 = 0; r2 < fam.tuples; ++r2) {
            bool le = true;
            for (int j = 0; j < fam.count && le; ++j)
                if (!nets[j].index.le(tuples[r1][j], tuples[r2][j])) le = false;
            if (!le) continue;
            for (int j1 = 0; j1 < fam.count; ++j1)
                for (int j2 = 0; j2 < fam.count; ++j2)
                    rel.set(static_cast<int>(r1 * fam.count + j1),
                            static_cast<int>(r2 * fam.count + j2));
        }

    std::vector<int> vals(m);
    for (long r = 0; r < fam.tuples; ++r)
        for (int j = 0; j < fam.count; ++j)
            vals[r * fam.count + j] = nets[j].values[tuples[r][j]];
    return Net(DirectedIndex(rel), std::move(vals), nets[0].carrier_size);
}

Net matryoshka(const Net& x, const std::vector<int>& chain) {
    if (chain.empty()) throw std::invalid_argument("empty matryoshka chain");
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        if (!x.index.le(chain[i], chain[i + 1]))
            throw std::domain_error("matryoshka chain is not increasing");

    std::vector<std::pair<int, int>> elems;  // (n, alpha) with alpha >= chain[n]
    for (int n = 0; n < static_cast<int>(chain.size()); ++n) {
        if (chain[n] < 0 || chain[n] >= x.index.size())
            throw std::invalid_argument("chain element outside the index");
        for (int a = 0; a < x.index.size(); ++a)
            if (x.index.le(chain[n], a)) elems.emplace_back(n, a);
    }
    int m = static_cast<int>(elems.size());
    Relation rel(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (elems[i].first <= elems[j].first) rel.set(i, j);
    std::vector<int> vals(m);
    for (int i = 0; i < m; ++i) vals[i] = x.values[elems[i].second];
    return Net(DirectedIndex(rel), std::move(vals), x.carrier_size);
}

Net reaction(const DirectedIndex& J, std::span<const Net> nets) {
    if (J.size() != static_cast<int>(nets.size()))
        throw std::invalid_argument("family size does not match J");
    if (!J.is_valid()) throw std::invalid_argument("J is not directed");
    FamilyIndex fam(nets);
    for (const Net& n : nets) require_same_net_carrier(n, nets[0]);

    long m = fam.tuples * fam.count;
    Relation rel(static_cast<int>(m));
    std::vector<std::vector<int>> tuples(fam.tuples);
    for (long r = 0; r < fam.tuples; ++r) tuples[r] = fam.tuple(r);

    for (long r1 = 0; r1 < fam.tuples; ++r1)
        for (long r2 = 0; r2 < fam.tuples; ++r2) {
            bool le = true;
            for (int j = 0; j < fam.count && le; ++j)
                if (!nets[j].index.le(tuples[r1][j], tuples[r2][j])) le = false;
            if (!le) continue;
            for (int j1 = 0; j1 < fam.count; ++j1)
                for (int j2 = 0; j2 < fam.count; ++j2)
                    if (J.le(j1, j2))
                        rel.set(static_cast<int>(r1 * fam.count + j1),
                                static_cast<int>(r2 * fam.count + j2));
        }

    std::vector<int> vals(m);
    for (long r = 0; r < fam.tuples; ++r)
        for (int j = 0; j < fam.count; ++j)
            vals[r * fam.count + j] = nets[j].values[tuples[r][j]];
    return Net(DirectedIndex(rel), std::move(vals), nets[0].carrier_size);
}

Net net_from_filter_base(const FilterBase& b) {
    if (!b.is_valid()) throw std::domain_error("not a filter base");
    std::vector<std::pair<int, int>> elems;  // (set id, point)
    for (int s = 0; s < static_cast<int>(b.sets.size()); ++s)
        for (int x : b.sets[s].points()) elems.emplace_back(s, x);
    int m = static_cast<int>(elems.size());
    Relation rel(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (b.sets[elems[j].first].subset_of(b.sets[elems[i].first])) rel.set(i, j);
    std::vector<int> vals(m);
    for (int i = 0; i < m; ++i) vals[i] = elems[i].second;
    return Net(DirectedIndex(rel), std::move(vals), b.carrier_size);
}

}  // namespace convkit
