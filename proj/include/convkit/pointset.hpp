#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

namespace convkit {

// Subset of a finite carrier {0, ..., n-1}, n <= 64, stored as a bitmask.
class PointSet {
public:
    static constexpr int kMaxCarrier = 64;

    PointSet() = default;
    PointSet(int carrier, std::uint64_t bits) : n_(carrier), bits_(bits & mask(carrier)) {
        assert(carrier >= 0 && carrier <= kMaxCarrier);
    }

    static PointSet empty(int carrier) { return PointSet(carrier, 0); }
    static PointSet full(int carrier) { return PointSet(carrier, mask(carrier)); }
    static PointSet single(int carrier, int x) {
        assert(x >= 0 && x < carrier);
        return PointSet(carrier, std::uint64_t{1} << x);
    }

    int carrier() const { return n_; }
    std::uint64_t bits() const { return bits_; }
    bool contains(int x) const { return x >= 0 && x < n_ && (bits_ >> x & 1); }
    bool is_empty() const { return bits_ == 0; }
    int count() const { return __builtin_popcountll(bits_); }

    void add(int x) {
        assert(x >= 0 && x < n_);
        bits_ |= std::uint64_t{1} << x;
    }
    void remove(int x) {
        assert(x >= 0 && x < n_);
        bits_ &= ~(std::uint64_t{1} << x);
    }

    bool subset_of(const PointSet& o) const { return (bits_ & ~o.bits_) == 0; }
    bool intersects(const PointSet& o) const { return (bits_ & o.bits_) != 0; }

    PointSet operator|(const PointSet& o) const { return PointSet(n_, bits_ | o.bits_); }
    PointSet operator&(const PointSet& o) const { return PointSet(n_, bits_ & o.bits_); }
    PointSet operator-(const PointSet& o) const { return PointSet(n_, bits_ & ~o.bits_); }
    PointSet complement() const { return PointSet(n_, ~bits_); }

    bool operator==(const PointSet& o) const { return n_ == o.n_ && bits_ == o.bits_; }
    bool operator!=(const PointSet& o) const { return !(*this == o); }
    bool operator<(const PointSet& o) const {
        return n_ != o.n_ ? n_ < o.n_ : bits_ < o.bits_;
    }

    std::vector<int> points() const {
        std::vector<int> out;
        for (int x = 0; x < n_; ++x)
            if (bits_ >> x & 1) out.push_back(x);
        return out;
    }

private:
    static std::uint64_t mask(int n) {
        return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    }

    int n_ = 0;
    std::uint64_t bits_ = 0;
};

}  // namespace convkit
