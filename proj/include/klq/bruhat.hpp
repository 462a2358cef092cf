#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "klq/coxeter.hpp"

namespace klq {

// Bruhat-order queries for one Coxeter system.
//
// For groups with at most `table_limit` elements the whole group is
// enumerated once and the order is stored as per-element ancestor bit
// rows; after construction every query is read-only and thread-safe.
// Larger groups fall back to the memoized lifting recursion, which keeps
// mutable state: give each worker its own instance in that mode.
class Bruhat {
public:
    explicit Bruhat(const CoxeterSystem& sys, unsigned long long table_limit = 2000);

    const CoxeterSystem& system() const { return *sys_; }
    bool has_table() const { return has_table_; }

    bool leq(const Element& x, const Element& y);
    bool less(const Element& x, const Element& y) { return !(x == y) && leq(x, y); }

    // all z with x <= z <= y, sorted by (length, matrix key); empty when
    // x is not below y
    std::vector<Element> interval(const Element& x, const Element& y);
    std::vector<Element> atoms(const Element& x, const Element& y);
    std::vector<Element> coatoms(const Element& x, const Element& y);
    // at^T = x^{-1} z over atoms z, coat^T = z^{-1} y over coatoms z,
    // as sorted reflection indices
    std::vector<int> atoms_refl(const Element& x, const Element& y);
    std::vector<int> coatoms_refl(const Element& x, const Element& y);

    // table mode only: the full group sorted by (length, matrix key)
    const std::vector<Element>& elements() const;
    int length_of(size_t id) const { return lengths_[id]; }

private:
    size_t table_id(const Element& e) const;
    bool table_leq(size_t xi, size_t yi) const {
        const size_t words = (table_.size() + 63) / 64;
        return (leq_bits_[yi * words + xi / 64] >> (xi % 64)) & 1ull;
    }
    bool leq_rec(uint32_t xi, uint32_t yi);
    uint32_t intern(const Element& e);
    std::vector<Element> downset(const Element& y);

    const CoxeterSystem* sys_;
    bool has_table_ = false;

    // table mode
    std::vector<Element> table_; // sorted by (length, key)
    std::vector<int> lengths_;
    std::unordered_map<Element, uint32_t, Element::Hash> index_;
    std::vector<uint64_t> leq_bits_; // row y: bitset over ids of {x : x <= y}

    // recursion mode
    std::vector<Element> pool_;
    std::vector<int> pool_len_;
    std::unordered_map<Element, uint32_t, Element::Hash> pool_index_;
    std::unordered_map<uint64_t, bool> memo_;
};

} // namespace klq
