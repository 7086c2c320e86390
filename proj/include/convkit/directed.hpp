#pragma once

#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace convkit {

// Binary relation on {0, ..., n-1}; le(i, j) reads "i <= j". Rows are packed
// into 64-bit words so products of desk-scale index sets stay cheap to
// validate; carriers are capped elsewhere at 64 points.
struct Relation {
    int n = 0;
    int words = 0;                   // words per row
    std::vector<std::uint64_t> m;    // row-major packed bits

    Relation() = default;
    explicit Relation(int size)
        : n(size), words((size + 63) / 64), m(static_cast<std::size_t>(size) * words, 0) {
        if (size < 0) throw std::invalid_argument("relation size out of range");
    }

    bool le(int i, int j) const {
        assert(i >= 0 && i < n && j >= 0 && j < n);
        return m[static_cast<std::size_t>(i) * words + j / 64] >> (j % 64) & 1;
    }
    void set(int i, int j, bool v = true) {
        assert(i >= 0 && i < n && j >= 0 && j < n);
        std::uint64_t& w = m[static_cast<std::size_t>(i) * words + j / 64];
        if (v)
            w |= std::uint64_t{1} << (j % 64);
        else
            w &= ~(std::uint64_t{1} << (j % 64));
    }

    const std::uint64_t* row(int i) const { return &m[static_cast<std::size_t>(i) * words]; }

    bool is_reflexive() const {
        for (int i = 0; i < n; ++i)
            if (!le(i, i)) return false;
        return true;
    }
    bool is_transitive() const {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (le(i, j)) {
                    const std::uint64_t *ri = row(i), *rj = row(j);
                    for (int w = 0; w < words; ++w)
                        if (rj[w] & ~ri[w]) return false;
                }
        return true;
    }

    bool operator==(const Relation& o) const { return n == o.n && m == o.m; }
};

// A finite pre-ordered index set. Directedness (every two elements have a
// common upper bound) is a separate check so that malformed examples can be
// represented and rejected explicitly.
class DirectedIndex {
public:
    DirectedIndex() = default;

    explicit DirectedIndex(Relation rel) : rel_(std::move(rel)) {}

    explicit DirectedIndex(const std::vector<std::vector<bool>>& le) {
        int n = static_cast<int>(le.size());
        rel_ = Relation(n);
        for (int i = 0; i < n; ++i) {
            if (static_cast<int>(le[i].size()) != n)
                throw std::invalid_argument("relation matrix is not square");
            for (int j = 0; j < n; ++j)
                if (le[i][j]) rel_.set(i, j);
        }
    }

    // Total order 0 <= 1 <= ... <= n-1.
    static DirectedIndex chain(int n) {
        Relation r(n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) r.set(i, j);
        return DirectedIndex(r);
    }

    static DirectedIndex singleton() { return chain(1); }

    int size() const { return rel_.n; }
    bool le(int i, int j) const { return rel_.le(i, j); }
    const Relation& relation() const { return rel_; }

    bool is_directed() const {
        for (int i = 0; i < rel_.n; ++i)
            for (int j = i; j < rel_.n; ++j) {
                const std::uint64_t *ri = rel_.row(i), *rj = rel_.row(j);
                bool found = false;
                for (int w = 0; w < rel_.words && !found; ++w)
                    if (ri[w] & rj[w]) found = true;
                if (!found) return false;
            }
        return true;
    }

    bool is_valid() const {
        return rel_.n > 0 && rel_.is_reflexive() && rel_.is_transitive() && is_directed();
    }

    // Least id among elements above every other element; -1 if there is none
    // (a valid finite directed index always has one).
    int top() const {
        for (int t = 0; t < rel_.n; ++t) {
            bool above_all = true;
            for (int i = 0; i < rel_.n && above_all; ++i)
                if (!rel_.le(i, t)) above_all = false;
            if (above_all) return t;
        }
        return -1;
    }

    bool operator==(const DirectedIndex& o) const { return rel_ == o.rel_; }

private:
    Relation rel_;
};

inline bool validate_directed(const DirectedIndex& d) { return d.is_valid(); }

}  // namespace convkit
