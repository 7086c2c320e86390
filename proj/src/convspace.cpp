#include "convkit/convspace.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace convkit {

namespace {

std::string set_str(const PointSet& s) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int p : s.points()) {
        if (!first) os << ',';
        os << p;
        first = false;
    }
    os << '}';
    return os.str();
}

}  // namespace

ConvSpace::ConvSpace(int carrier, std::vector<PointSet> v) : n_(carrier), v_(std::move(v)) {
    if (n_ <= 0 || n_ > PointSet::kMaxCarrier)
        throw std::invalid_argument("carrier size out of range");
    if (static_cast<int>(v_.size()) != n_)
        throw std::invalid_argument("V must assign a kernel bound to every point");
    for (int x = 0; x < n_; ++x) {
        if (v_[x].carrier() != n_) throw std::invalid_argument("V entry carrier mismatch");
        if (!v_[x].contains(x))
            throw std::invalid_argument("x must belong to V[x]");
    }
}

ConvSpace ConvSpace::discrete(int n) {
    std::vector<PointSet> v;
    for (int x = 0; x < n; ++x) v.push_back(PointSet::single(n, x));
    return ConvSpace(n, std::move(v));
}

ConvSpace ConvSpace::indiscrete(int n) {
    return ConvSpace(n, std::vector<PointSet>(n, PointSet::full(n)));
}

FromRawResult from_raw(const RawConvergence& r, FromRawMode mode) {
    int n = r.carrier_size;
    for (const auto& [k, x] : r.pairs) {
        if (x < 0 || x >= n) throw std::invalid_argument("declared point outside carrier");
        if (k.carrier() != n || k.is_empty())
            throw std::invalid_argument("declared kernel must be a nonempty carrier subset");
    }

    if (mode == FromRawMode::Complete) {
        std::vector<PointSet> v;
        for (int x = 0; x < n; ++x) v.push_back(PointSet::single(n, x));
        for (const auto& [k, x] : r.pairs) v[x] = v[x] | k;
        return {ConvSpace(n, std::move(v)), std::nullopt};
    }

    // Verify mode: per point, the declared kernels must contain {x} (F1), be
    // closed under nonempty subsets (F2: smaller kernel = larger filter) and
    // under pairwise unions (F3: meet of filters).
    std::vector<std::vector<PointSet>> declared(n);
    for (const auto& [k, x] : r.pairs) declared[x].push_back(k);
    for (int x = 0; x < n; ++x) {
        auto& d = declared[x];
        std::sort(d.begin(), d.end());
        d.erase(std::unique(d.begin(), d.end()), d.end());
        auto has = [&](const PointSet& s) {
            return std::binary_search(d.begin(), d.end(), s);
        };
        if (!has(PointSet::single(n, x))) {
            return {std::nullopt,
                    AxiomViolation{"F1", x, PointSet::single(n, x),
                                   "the point filter [x] is not declared convergent to x"}};
        }
        for (const auto& a : d)
            for (const auto& b : d) {
                PointSet u = a | b;
                if (!has(u))
                    return {std::nullopt,
                            AxiomViolation{"F3", x, u,
                                           "meet of two convergent filters (kernel union " +
                                               set_str(u) + ") is not declared"}};
            }
        for (const auto& a : d) {
            std::uint64_t bits = a.bits();
            for (std::uint64_t sub = (bits - 1) & bits; sub; sub = (sub - 1) & bits) {
                PointSet g(n, sub);
                if (!has(g))
                    return {std::nullopt,
                            AxiomViolation{"F2", x, g,
                                           "finer filter (kernel " + set_str(g) +
                                               ") is not declared convergent"}};
            }
        }
    }
    std::vector<PointSet> v;
    for (int x = 0; x < n; ++x) {
        PointSet u = PointSet::single(n, x);
        for (const auto& k : declared[x]) u = u | k;
        v.push_back(u);
    }
    return {ConvSpace(n, std::move(v)), std::nullopt};
}

bool converges_filter(const ConvSpace& s, const PrincipalFilter& f, int x) {
    if (f.carrier_size != s.size()) throw std::invalid_argument("carrier mismatch");
    if (x < 0 || x >= s.size()) throw std::invalid_argument("point outside carrier");
    return f.kernel.subset_of(s.V(x));
}

bool converges_net(const ConvSpace& s, const Net& n, int x) {
    return converges_filter(s, tail_filter(n), x);
}

PointSet closure(const ConvSpace& s, const PointSet& a) {
    PointSet out = PointSet::empty(s.size());
    for (int x = 0; x < s.size(); ++x)
        if (s.V(x).intersects(a)) out.add(x);
    return out;
}

bool is_closed(const ConvSpace& s, const PointSet& a) { return closure(s, a) == a; }

bool is_open(const ConvSpace& s, const PointSet& a) {
    for (int x : a.points())
        if (!s.V(x).subset_of(a)) return false;
    return true;
}

bool is_dense(const ConvSpace& s, const PointSet& a) {
    return closure(s, a) == PointSet::full(s.size());
}

PrincipalFilter neighborhood_filter(const ConvSpace& s, int x) {
    return PrincipalFilter(s.size(), s.V(x));
}

ConvSpace topological_modification(const ConvSpace& s) {
    // V'[x] = the smallest open set containing x = reachability closure of x
    // under y -> V[y].
    std::vector<PointSet> v;
    for (int x = 0; x < s.size(); ++x) {
        PointSet reach = PointSet::single(s.size(), x);
        bool grew = true;
        while (grew) {
            grew = false;
            PointSet next = reach;
            for (int y : reach.points()) next = next | s.V(y);
            if (next != reach) {
                reach = next;
                grew = true;
            }
        }
        v.push_back(reach);
    }
    return ConvSpace(s.size(), std::move(v));
}

bool is_topological(const ConvSpace& s) {
    for (int x = 0; x < s.size(); ++x)
        for (int y : s.V(x).points())
            if (!s.V(y).subset_of(s.V(x))) return false;
    return true;
}

bool is_hausdorff(const ConvSpace& s) {
    for (int x = 0; x < s.size(); ++x)
        for (int y = x + 1; y < s.size(); ++y)
            if (s.V(x).intersects(s.V(y))) return false;
    return true;
}

bool is_compact(const ConvSpace& s) {
    for (int z = 0; z < s.size(); ++z) {
        bool converges = false;
        for (int x = 0; x < s.size() && !converges; ++x)
            if (s.V(x).contains(z)) converges = true;
        if (!converges) return false;  // unreachable: [z] -> z always
    }
    return true;
}

bool is_compact_subset(const ConvSpace& s, const PointSet& a) {
    if (a.is_empty()) return true;
    return is_compact(subspace(s, a));
}

bool is_continuous(const PointMap& f, const ConvSpace& s, const ConvSpace& t) {
    if (static_cast<int>(f.map.size()) != s.size() || f.target_size != t.size())
        throw std::invalid_argument("point map carrier mismatch");
    for (int x = 0; x < s.size(); ++x) {
        for (int y : s.V(x).points())
            if (!t.V(f(x)).contains(f(y))) return false;
    }
    return true;
}

ConvSpace initial_structure(int n, std::span<const std::pair<PointMap, ConvSpace>> maps) {
    std::vector<PointSet> v(n, PointSet::full(n));
    for (const auto& [f, t] : maps) {
        if (static_cast<int>(f.map.size()) != n || f.target_size != t.size())
            throw std::invalid_argument("point map carrier mismatch");
        for (int x = 0; x < n; ++x) {
            PointSet pre = PointSet::empty(n);
            for (int y = 0; y < n; ++y)
                if (t.V(f(x)).contains(f(y))) pre.add(y);
            v[x] = v[x] & pre;
        }
    }
    for (int x = 0; x < n; ++x) v[x].add(x);
    return ConvSpace(n, std::move(v));
}

ConvSpace subspace(const ConvSpace& s, const PointSet& y) {
    if (y.is_empty()) throw std::domain_error("subspace carrier must be nonempty");
    auto pts = y.points();
    int m = static_cast<int>(pts.size());
    std::vector<int> rank(s.size(), -1);
    for (int i = 0; i < m; ++i) rank[pts[i]] = i;
    std::vector<PointSet> v;
    for (int i = 0; i < m; ++i) {
        PointSet vi = PointSet::empty(m);
        for (int p : (s.V(pts[i]) & y).points()) vi.add(rank[p]);
        v.push_back(vi);
    }
    return ConvSpace(m, std::move(v));
}

ConvSpace product(std::span<const ConvSpace> factors) {
    if (factors.empty()) throw std::invalid_argument("empty product");
    long n = 1;
    for (const auto& f : factors) n *= f.size();
    if (n > PointSet::kMaxCarrier) throw std::invalid_argument("product carrier too large");
    int total = static_cast<int>(n);
    std::vector<PointSet> v;
    for (int rank = 0; rank < total; ++rank) {
        auto tup = product_rank_to_tuple(factors, rank);
        PointSet vx = PointSet::empty(total);
        // All tuples with every coordinate in its factor's V-set.
        std::vector<std::vector<int>> choices;
        for (std::size_t i = 0; i < factors.size(); ++i)
            choices.push_back(factors[i].V(tup[i]).points());
        std::vector<std::size_t> pos(factors.size(), 0);
        while (true) {
            int r = 0;
            for (std::size_t i = 0; i < factors.size(); ++i)
                r = r * factors[i].size() + choices[i][pos[i]];
            vx.add(r);
            std::size_t i = factors.size();
            while (i > 0) {
                --i;
                if (++pos[i] < choices[i].size()) break;
                pos[i] = 0;
                if (i == 0) {
                    i = factors.size() + 1;
                    break;
                }
            }
            if (i == factors.size() + 1) break;
        }
        v.push_back(vx);
    }
    return ConvSpace(total, std::move(v));
}

std::vector<int> product_rank_to_tuple(std::span<const ConvSpace> factors, int rank) {
    std::vector<int> tup(factors.size());
    for (int i = static_cast<int>(factors.size()) - 1; i >= 0; --i) {
        tup[i] = rank % factors[i].size();
        rank /= factors[i].size();
    }
    return tup;
}

ContinuousConvergence continuous_convergence_space(const ConvSpace& s, const ConvSpace& t) {
    long total = 1;
    for (int i = 0; i < s.size(); ++i) {
        total *= t.size();
        if (total > 1 << 20) throw std::invalid_argument("map space too large");
    }
    std::vector<std::vector<int>> maps;
    std::vector<int> f(s.size(), 0);
    while (true) {
        PointMap pm{f, t.size()};
        if (is_continuous(pm, s, t)) maps.push_back(f);
        int i = s.size() - 1;
        while (i >= 0 && ++f[i] == t.size()) f[i--] = 0;
        if (i < 0) break;
    }
    int m = static_cast<int>(maps.size());
    if (m > PointSet::kMaxCarrier)
        throw std::invalid_argument("continuous-map carrier too large");
    std::vector<PointSet> v(m, PointSet::empty(m));
    for (int fi = 0; fi < m; ++fi)
        for (int gi = 0; gi < m; ++gi) {
            bool ok = true;
            for (int x = 0; x < s.size() && ok; ++x)
                for (int y : s.V(x).points())
                    if (!t.V(maps[fi][x]).contains(maps[gi][y])) {
                        ok = false;
                        break;
                    }
            if (ok) v[fi].add(gi);
        }
    return ContinuousConvergence{ConvSpace(m, std::move(v)), std::move(maps)};
}

std::vector<DirectedIndex> all_directed_indices(int max_size) {
    std::vector<DirectedIndex> out;
    for (int n = 1; n <= max_size; ++n) {
        int off = n * n - n;
        for (long bits = 0; bits < (1L << off); ++bits) {
            Relation r(n);
            int b = 0;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    if (i == j)
                        r.set(i, j);
                    else if (bits >> b++ & 1)
                        r.set(i, j);
                }
            DirectedIndex d(r);
            if (d.is_valid()) out.push_back(d);
        }
    }
    return out;
}

std::vector<Net> all_nets(int carrier_size, int max_index_size) {
    std::vector<Net> out;
    for (const auto& idx : all_directed_indices(max_index_size)) {
        std::vector<int> vals(idx.size(), 0);
        while (true) {
            out.emplace_back(idx, vals, carrier_size);
            int i = idx.size() - 1;
            while (i >= 0 && ++vals[i] == carrier_size) vals[i--] = 0;
            if (i < 0) break;
        }
    }
    return out;
}

namespace {

// Mixings are independent of the space being verified; cache them per
// (carrier, bounds) so the exhaustive theorem check stays cheap across the
// full enumeration of spaces.
struct MixCase {
    std::vector<PointSet> member_kernels;
    PointSet mix_kernel;
};

const std::vector<MixCase>& mixing_cases(int carrier, const MixingBounds& bounds) {
    static std::map<std::tuple<int, int, int>, std::vector<MixCase>> cache;
    auto key = std::make_tuple(carrier, bounds.max_family, bounds.max_index);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    std::vector<Net> pool = all_nets(carrier, bounds.max_index);
    std::vector<MixCase> cases;
    int p = static_cast<int>(pool.size());
    std::vector<int> pick;
    // Multisets of size 1..max_family over the pool.
    std::function<void(int, int)> rec = [&](int start, int remaining) {
        if (!pick.empty()) {
            std::vector<Net> fam;
            MixCase mc;
            for (int id : pick) {
                fam.push_back(pool[id]);
                mc.member_kernels.push_back(tail_filter(pool[id]).kernel);
            }
            mc.mix_kernel = tail_filter(mix_family(fam)).kernel;
            cases.push_back(std::move(mc));
        }
        if (remaining == 0) return;
        for (int id = start; id < p; ++id) {
            pick.push_back(id);
            rec(id, remaining - 1);
            pick.pop_back();
        }
    };
    rec(0, bounds.max_family);
    return cache.emplace(key, std::move(cases)).first->second;
}

}  // namespace

VerifyReport verify_mixing_theorem(const ConvSpace& s, const MixingBounds& bounds) {
    VerifyReport rep{"mixing-theorem", 0, 0, ""};
    for (const MixCase& mc : mixing_cases(s.size(), bounds)) {
        // Tail-filter lemma: kernel of the mixing = union of member kernels.
        PointSet u = PointSet::empty(s.size());
        for (const auto& k : mc.member_kernels) u = u | k;
        ++rep.cases;
        if (!(mc.mix_kernel == u)) {
            ++rep.failures;
            if (rep.witness.empty())
                rep.witness = "mixing kernel " + set_str(mc.mix_kernel) +
                              " differs from member-kernel union " + set_str(u);
            continue;
        }
        for (int x = 0; x < s.size(); ++x) {
            bool all = true;
            for (const auto& k : mc.member_kernels)
                if (!k.subset_of(s.V(x))) {
                    all = false;
                    break;
                }
            if (!all) continue;
            ++rep.cases;
            if (!mc.mix_kernel.subset_of(s.V(x))) {
                ++rep.failures;
                if (rep.witness.empty())
                    rep.witness = "family co-convergent to " + std::to_string(x) +
                                  " has non-convergent mixing kernel " + set_str(mc.mix_kernel);
            }
        }
    }
    return rep;
}

namespace {

struct PoolEntry {
    Net net;
    PointSet kernel;
};

const std::vector<PoolEntry>& net_pool(int carrier, int max_index) {
    static std::map<std::pair<int, int>, std::vector<PoolEntry>> cache;
    auto key = std::make_pair(carrier, max_index);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<PoolEntry> pool;
    for (Net& n : all_nets(carrier, max_index)) {
        PointSet k = tail_filter(n).kernel;
        pool.push_back(PoolEntry{std::move(n), k});
    }
    return cache.emplace(key, std::move(pool)).first->second;
}

struct ReactionCase {
    std::vector<PointSet> member_kernels;  // per j in J
    PointSet reaction_kernel;
};

// Reactions depend only on (J, member nets), not on the space; samples are
// seeded, so the same cases recur across the enumeration and can be cached.
const ReactionCase& reaction_case(int carrier, int ji, const DirectedIndex& J,
                                  const std::vector<int>& members, int max_index) {
    static std::map<std::tuple<int, int, int, std::vector<int>>, ReactionCase> cache;
    auto key = std::make_tuple(carrier, max_index, ji, members);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    const auto& pool = net_pool(carrier, max_index);
    std::vector<Net> fam;
    ReactionCase rc;
    for (int id : members) {
        fam.push_back(pool[id].net);
        rc.member_kernels.push_back(pool[id].kernel);
    }
    rc.reaction_kernel = tail_filter(reaction(J, fam)).kernel;
    return cache.emplace(key, std::move(rc)).first->second;
}

}  // namespace

VerifyReport verify_iterated_limit(const ConvSpace& s, const IteratedLimitBounds& bounds) {
    VerifyReport rep{"iterated-limit", 0, 0, ""};
    const auto& pool = net_pool(s.size(), bounds.max_index);
    auto outers = all_directed_indices(bounds.max_outer);

    auto check_case = [&](const DirectedIndex& J, int ji, const std::vector<int>& members) {
        const ReactionCase& rc = reaction_case(s.size(), ji, J, members, bounds.max_index);
        // Inner limits per member.
        std::vector<std::vector<int>> limits(members.size());
        for (std::size_t j = 0; j < members.size(); ++j) {
            for (int x = 0; x < s.size(); ++x)
                if (rc.member_kernels[j].subset_of(s.V(x))) limits[j].push_back(x);
            if (limits[j].empty()) return;  // RHS undefined
        }
        // Every choice of inner limits forms a net over J; every limit of
        // that net is an iterated limit the reaction must attain.
        std::vector<std::size_t> pos(members.size(), 0);
        while (true) {
            PointSet outer_kernel = PointSet::empty(s.size());
            int t = J.top();
            for (int j = 0; j < J.size(); ++j)
                if (J.le(t, j)) outer_kernel.add(limits[j][pos[j]]);
            for (int y = 0; y < s.size(); ++y) {
                if (!outer_kernel.subset_of(s.V(y))) continue;
                ++rep.cases;
                if (!rc.reaction_kernel.subset_of(s.V(y))) {
                    ++rep.failures;
                    if (rep.witness.empty()) {
                        std::ostringstream os;
                        os << "iterated limit " << y << " exists but reaction kernel "
                           << set_str(rc.reaction_kernel) << " does not converge to it"
                           << " (|J|=" << J.size() << ")";
                        rep.witness = os.str();
                    }
                }
            }
            std::size_t i = members.size();
            bool done = true;
            while (i > 0) {
                --i;
                if (++pos[i] < limits[i].size()) {
                    done = false;
                    break;
                }
                pos[i] = 0;
            }
            if (done) break;
        }
    };

    std::mt19937_64 rng(bounds.seed);
    for (int ji = 0; ji < static_cast<int>(outers.size()); ++ji) {
        const DirectedIndex& J = outers[ji];
        if (J.size() == 1) {
            for (int id = 0; id < static_cast<int>(pool.size()); ++id)
                check_case(J, ji, {id});
        } else {
            std::uniform_int_distribution<int> pick(0, static_cast<int>(pool.size()) - 1);
            for (long t = 0; t < bounds.samples; ++t) {
                std::vector<int> members(J.size());
                for (int& m : members) m = pick(rng);
                check_case(J, ji, members);
            }
        }
    }
    return rep;
}

VerifyReport roundtrip_check(const ConvSpace& s, int max_index_size) {
    VerifyReport rep{"net-filter-roundtrip", 0, 0, ""};
    int n = s.size();

    // Filter -> net -> filter: every nonempty kernel K, realized as the
    // canonical net of the base {K}, converges to x exactly when [K] does.
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
        PointSet k(n, bits);
        Net nk = net_from_filter_base(FilterBase{n, {k}});
        PrincipalFilter tf = tail_filter(nk);
        ++rep.cases;
        if (!(tf.kernel == k)) {
            ++rep.failures;
            if (rep.witness.empty())
                rep.witness = "canonical net of base " + set_str(k) +
                              " has tail kernel " + set_str(tf.kernel);
            continue;
        }
        for (int x = 0; x < n; ++x) {
            ++rep.cases;
            bool via_net = converges_net(s, nk, x);
            bool via_filter = converges_filter(s, PrincipalFilter(n, k), x);
            if (via_net != via_filter) {
                ++rep.failures;
                if (rep.witness.empty())
                    rep.witness = "net/filter disagreement at kernel " + set_str(k) +
                                  ", point " + std::to_string(x);
            }
        }
    }

    // Net -> filter: V reconstructed from net convergence over the bounded
    // pool must reproduce V exactly.
    std::vector<PointSet> rebuilt(n, PointSet::empty(n));
    for (int x = 0; x < n; ++x) rebuilt[x].add(x);
    for (const PoolEntry& e : net_pool(n, max_index_size))
        for (int x = 0; x < n; ++x)
            if (converges_net(s, e.net, x)) rebuilt[x] = rebuilt[x] | e.kernel;
    for (int x = 0; x < n; ++x) {
        ++rep.cases;
        if (!(rebuilt[x] == s.V(x))) {
            ++rep.failures;
            if (rep.witness.empty())
                rep.witness = "rebuilt V[" + std::to_string(x) + "] = " + set_str(rebuilt[x]) +
                              " differs from " + set_str(s.V(x));
        }
    }
    return rep;
}

void enumerate_structures(int n, const std::function<void(const ConvSpace&)>& yield) {
    if (n < 1 || n > 5) throw std::invalid_argument("enumeration supports 1 <= n <= 5");
    // Per point, admissible V-masks in increasing numeric order.
    std::vector<std::vector<std::uint64_t>> choices(n);
    for (int x = 0; x < n; ++x)
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits)
            if (bits >> x & 1) choices[x].push_back(bits);
    std::vector<std::size_t> pos(n, 0);
    while (true) {
        std::vector<PointSet> v;
        for (int x = 0; x < n; ++x) v.emplace_back(n, choices[x][pos[x]]);
        yield(ConvSpace(n, std::move(v)));
        int i = n - 1;
        while (i >= 0 && ++pos[i] == choices[i].size()) pos[i--] = 0;
        if (i < 0) break;
    }
}

EnumerationSummary enumerate_summary(int n) {
    EnumerationSummary sum;
    enumerate_structures(n, [&](const ConvSpace& s) {
        ++sum.total;
        if (is_topological(s)) ++sum.topological;
        if (is_hausdorff(s)) ++sum.hausdorff;
    });
    return sum;
}

}  // namespace convkit
