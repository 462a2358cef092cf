#include "klq/bruhat.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace klq {

Bruhat::Bruhat(const CoxeterSystem& sys, unsigned long long table_limit) : sys_(&sys) {
    if (sys.group_order() > table_limit) return;

    // enumerate the full group from the identity
    std::deque<Element> queue{sys.identity()};
    std::unordered_map<Element, uint32_t, Element::Hash> seen;
    seen.emplace(sys.identity(), 0);
    table_.push_back(sys.identity());
    while (!queue.empty()) {
        Element w = queue.front();
        queue.pop_front();
        for (int s = 0; s < sys.rank(); ++s) {
            Element ws = sys.multiply(w, sys.generator(s));
            if (seen.emplace(ws, 0).second) {
                table_.push_back(ws);
                queue.push_back(ws);
            }
        }
    }
    if (table_.size() != sys.group_order())
        throw std::logic_error("group enumeration does not match the order formula");

    std::sort(table_.begin(), table_.end(), [&](const Element& a, const Element& b) {
        int la = sys.length(a), lb = sys.length(b);
        return la != lb ? la < lb : a < b;
    });
    const size_t n = table_.size();
    lengths_.resize(n);
    for (size_t i = 0; i < n; ++i) {
        lengths_[i] = sys.length(table_[i]);
        index_.emplace(table_[i], static_cast<uint32_t>(i));
    }

    // right multiplication table by generators
    std::vector<uint32_t> rmult(n * static_cast<size_t>(sys.rank()));
    for (size_t i = 0; i < n; ++i)
        for (int s = 0; s < sys.rank(); ++s)
            rmult[i * sys.rank() + s] = index_.at(sys.multiply(table_[i], sys.generator(s)));

    // ancestor rows in increasing length via the lifting recursion:
    // u <= w  iff  (us < u ? us <= ws : u <= ws) for any descent s of w
    const size_t words = (n + 63) / 64;
    leq_bits_.assign(n * words, 0);
    auto set_bit = [&](size_t row, size_t bit) {
        leq_bits_[row * words + bit / 64] |= 1ull << (bit % 64);
    };
    set_bit(0, 0); // identity row
    for (size_t w = 1; w < n; ++w) {
        int s = -1;
        for (int i = 0; i < sys.rank(); ++i)
            if (sys.is_right_descent_gen(table_[w], i)) { s = i; break; }
        const size_t ws = rmult[w * sys.rank() + s];
        for (size_t u = 0; u <= w; ++u) {
            if (u == w || lengths_[u] >= lengths_[w]) continue;
            const size_t us = rmult[u * sys.rank() + s];
            const size_t probe = (lengths_[us] < lengths_[u]) ? us : u;
            if (table_leq(probe, ws)) set_bit(w, u);
        }
        set_bit(w, w);
    }
    has_table_ = true;
}

size_t Bruhat::table_id(const Element& e) const {
    auto it = index_.find(e);
    if (it == index_.end()) throw std::invalid_argument("element does not belong to this group");
    return it->second;
}

const std::vector<Element>& Bruhat::elements() const {
    if (!has_table_) throw std::logic_error("full enumeration is only available in table mode");
    return table_;
}

uint32_t Bruhat::intern(const Element& e) {
    auto it = pool_index_.find(e);
    if (it != pool_index_.end()) return it->second;
    uint32_t id = static_cast<uint32_t>(pool_.size());
    pool_.push_back(e);
    pool_len_.push_back(sys_->length(e));
    pool_index_.emplace(e, id);
    return id;
}

bool Bruhat::leq_rec(uint32_t xi, uint32_t yi) {
    if (xi == yi) return true;
    if (pool_len_[xi] >= pool_len_[yi]) return false;
    const uint64_t key = (static_cast<uint64_t>(xi) << 32) | yi;
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    int s = -1;
    for (int i = 0; i < sys_->rank(); ++i)
        if (sys_->is_right_descent_gen(pool_[yi], i)) { s = i; break; }
    const Element ys = sys_->multiply(pool_[yi], sys_->generator(s));
    const Element xs = sys_->multiply(pool_[xi], sys_->generator(s));
    const uint32_t ysi = intern(ys);
    const bool r = sys_->is_right_descent_gen(pool_[xi], s) ? leq_rec(intern(xs), ysi)
                                                            : leq_rec(xi, ysi);
    memo_.emplace(key, r);
    return r;
}

bool Bruhat::leq(const Element& x, const Element& y) {
    if (has_table_) return table_leq(table_id(x), table_id(y));
    return leq_rec(intern(x), intern(y));
}

std::vector<Element> Bruhat::downset(const Element& y) {
    // BFS along right-descent reflection steps reaches exactly {z : z <= y}
    std::vector<Element> out;
    std::unordered_map<Element, bool, Element::Hash> seen;
    std::deque<Element> queue{y};
    seen.emplace(y, true);
    while (!queue.empty()) {
        Element z = queue.front();
        queue.pop_front();
        out.push_back(z);
        for (int t = 0; t < sys_->num_positive_roots(); ++t) {
            if (!sys_->is_right_descent(z, t)) continue;
            Element zt = sys_->multiply(z, sys_->reflection(t));
            if (seen.emplace(zt, true).second) queue.push_back(zt);
        }
    }
    return out;
}

std::vector<Element> Bruhat::interval(const Element& x, const Element& y) {
    std::vector<Element> out;
    if (!leq(x, y)) return out;
    if (has_table_) {
        const size_t yi = table_id(y), xi = table_id(x);
        for (size_t z = xi; z <= yi; ++z)
            if (table_leq(z, yi) && table_leq(xi, z)) out.push_back(table_[z]);
        return out; // table order is already (length, key)
    }
    for (const Element& z : downset(y))
        if (leq(x, z)) out.push_back(z);
    std::sort(out.begin(), out.end(), [&](const Element& a, const Element& b) {
        int la = sys_->length(a), lb = sys_->length(b);
        return la != lb ? la < lb : a < b;
    });
    return out;
}

std::vector<Element> Bruhat::atoms(const Element& x, const Element& y) {
    std::vector<Element> out;
    const int lx = sys_->length(x);
    for (const Element& z : interval(x, y))
        if (sys_->length(z) == lx + 1) out.push_back(z);
    return out;
}

std::vector<Element> Bruhat::coatoms(const Element& x, const Element& y) {
    std::vector<Element> out;
    const int ly = sys_->length(y);
    for (const Element& z : interval(x, y))
        if (sys_->length(z) == ly - 1) out.push_back(z);
    return out;
}

std::vector<int> Bruhat::atoms_refl(const Element& x, const Element& y) {
    std::vector<int> out;
    const Element xinv = sys_->inverse(x);
    for (const Element& z : atoms(x, y)) {
        int t = sys_->reflection_index(sys_->multiply(xinv, z));
        if (t < 0) throw std::logic_error("atom is not a reflection step from x");
        out.push_back(t);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> Bruhat::coatoms_refl(const Element& x, const Element& y) {
    std::vector<int> out;
    for (const Element& z : coatoms(x, y)) {
        int t = sys_->reflection_index(sys_->multiply(sys_->inverse(z), y));
        if (t < 0) throw std::logic_error("coatom is not a reflection step to y");
        out.push_back(t);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace klq
