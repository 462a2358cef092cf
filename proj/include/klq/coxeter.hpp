#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace klq {

// Largest supported rank (E8). Elements and roots are fixed-size so they
// can be hashed and compared as flat arrays.
inline constexpr int kMaxRank = 8;

struct CoxeterSpec {
    char family = 'A'; // 'A', 'D' or 'E'
    int rank = 1;

    // "A3", "D4", "E6"; throws on anything outside the finite
    // simply-laced families
    static CoxeterSpec parse(std::string_view s);
    std::string str() const { return family + std::to_string(rank); }
};

// Integer matrix acting on the root lattice in the simple-root basis.
// Unused entries beyond rank are zero, so flat comparison and hashing of
// the whole array are canonical.
class Element {
public:
    Element() { a_.fill(0); }
    static Element identity(int n) {
        Element e;
        e.n_ = n;
        for (int i = 0; i < n; ++i) e.at(i, i) = 1;
        return e;
    }

    int rank() const { return n_; }
    int& at(int i, int j) { return a_[static_cast<size_t>(i) * kMaxRank + j]; }
    int at(int i, int j) const { return a_[static_cast<size_t>(i) * kMaxRank + j]; }

    bool is_identity() const {
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                if (at(i, j) != (i == j ? 1 : 0)) return false;
        return true;
    }

    friend bool operator==(const Element& a, const Element& b) {
        return a.n_ == b.n_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }
    // canonical sort key: flattened matrix, lexicographic
    friend bool operator<(const Element& a, const Element& b) { return a.a_ < b.a_; }

    struct Hash {
        size_t operator()(const Element& e) const {
            uint64_t h = 1469598103934665603ull;
            for (int v : e.a_) {
                h ^= static_cast<uint64_t>(static_cast<uint32_t>(v));
                h *= 1099511628211ull;
            }
            return static_cast<size_t>(h);
        }
    };

private:
    int n_ = 0;
    std::array<int, kMaxRank * kMaxRank> a_{};
};

// Root-lattice vector in the simple-root basis.
struct Root {
    int n = 0;
    std::array<int, kMaxRank> c{};

    int& operator[](int i) { return c[static_cast<size_t>(i)]; }
    int operator[](int i) const { return c[static_cast<size_t>(i)]; }

    bool is_positive() const {
        bool nonzero = false;
        for (int i = 0; i < n; ++i) {
            if (c[static_cast<size_t>(i)] < 0) return false;
            if (c[static_cast<size_t>(i)] > 0) nonzero = true;
        }
        return nonzero;
    }
    bool is_negative() const {
        bool nonzero = false;
        for (int i = 0; i < n; ++i) {
            if (c[static_cast<size_t>(i)] > 0) return false;
            if (c[static_cast<size_t>(i)] < 0) nonzero = true;
        }
        return nonzero;
    }
    std::vector<int> to_vector() const { return std::vector<int>(c.begin(), c.begin() + n); }

    friend bool operator==(const Root& a, const Root& b) { return a.n == b.n && a.c == b.c; }
    friend bool operator!=(const Root& a, const Root& b) { return !(a == b); }
    friend bool operator<(const Root& a, const Root& b) { return a.c < b.c; }

    struct Hash {
        size_t operator()(const Root& r) const {
            uint64_t h = 1469598103934665603ull;
            for (int v : r.c) {
                h ^= static_cast<uint64_t>(static_cast<uint32_t>(v));
                h *= 1099511628211ull;
            }
            return static_cast<size_t>(h);
        }
    };
};

// Root dominance: a < b iff b - a is nonnegative and nonzero.
bool root_dominance_less(const Root& a, const Root& b);

// A finite simply-laced Coxeter system: Cartan data, generator matrices,
// the full set of positive roots and the root <-> reflection bijection.
// Immutable after construction; safe for concurrent reads.
class CoxeterSystem {
public:
    static CoxeterSystem build(const CoxeterSpec& spec);
    static CoxeterSystem build(std::string_view spec_str) {
        return build(CoxeterSpec::parse(spec_str));
    }

    const CoxeterSpec& spec() const { return spec_; }
    int rank() const { return spec_.rank; }
    int cartan(int i, int j) const {
        return cartan_[static_cast<size_t>(i) * kMaxRank + j];
    }
    unsigned long long group_order() const;

    Element identity() const { return Element::identity(rank()); }
    const Element& generator(int s) const { return generators_[static_cast<size_t>(s)]; }

    Element multiply(const Element& a, const Element& b) const;
    Element inverse(const Element& a) const;

    int num_positive_roots() const { return static_cast<int>(positive_roots_.size()); }
    const Root& positive_root(int t) const { return positive_roots_[static_cast<size_t>(t)]; }
    const std::vector<Root>& positive_roots() const { return positive_roots_; }
    const Element& reflection(int t) const { return reflections_[static_cast<size_t>(t)]; }
    // -1 when the element is not a reflection
    int reflection_index(const Element& e) const;
    // -1 when the vector is not a positive root
    int root_index(const Root& r) const;
    // index of the simple root alpha_s
    int simple_root_index(int s) const { return simple_root_index_[static_cast<size_t>(s)]; }

    Root apply(const Element& w, const Root& a) const;

    // number of positive roots sent to negative roots
    int length(const Element& w) const;
    // w t < w, i.e. w(alpha_t) is negative
    bool is_right_descent(const Element& w, int t) const;
    // w s < w for the simple generator s
    bool is_right_descent_gen(const Element& w, int s) const;
    // D(w) = { t in T : wt < w } as sorted reflection indices
    std::vector<int> descent_set(const Element& w) const;
    // A(w) = T \ D(w)
    std::vector<int> ascent_set(const Element& w) const;

    // "2 1 3 2", "2,1,3,2" or "e"; 1-based generator indices, the word
    // need not be reduced
    Element parse_word(std::string_view word) const;
    // canonical reduced word, 0-based generator indices
    std::vector<int> reduced_word(const Element& w) const;
    // canonical reduced word rendered with 1-based indices, "e" for identity
    std::string word_str(const Element& w) const;

private:
    CoxeterSpec spec_;
    std::array<int, kMaxRank * kMaxRank> cartan_{};
    std::vector<Element> generators_;
    std::vector<Root> positive_roots_; // sorted lexicographically
    std::vector<Element> reflections_; // aligned with positive_roots_
    std::array<int, kMaxRank> simple_root_index_{};
    std::unordered_map<Element, int, Element::Hash> reflection_index_;
    std::unordered_map<Root, int, Root::Hash> root_index_;
};

} // namespace klq
