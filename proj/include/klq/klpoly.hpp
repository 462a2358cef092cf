#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "klq/bruhat.hpp"
#include "klq/coxeter.hpp"
#include "klq/poly.hpp"

namespace klq {

// Memoized R- and Kazhdan-Lusztig polynomial computation over one Coxeter
// system. Holds mutable memo tables: results are pure functions of the
// inputs, so contexts can be freely confined to one worker each.
class KLContext {
public:
    // which simple descent the R-recursion picks; the result is
    // independent of the choice, which the tests exercise
    enum class DescentPick { Smallest, Largest };

    KLContext(const CoxeterSystem& sys, Bruhat& order, DescentPick pick = DescentPick::Smallest)
        : sys_(&sys), order_(&order), pick_(pick) {}

    const CoxeterSystem& system() const { return *sys_; }
    Bruhat& order() { return *order_; }

    // R_{x,y}: monic of degree l(y)-l(x); zero when x is not below y
    Poly r_polynomial(const Element& x, const Element& y);
    // P_{x,y}: computed per fixed y by one descending pass over [x,y]
    Poly kl_polynomial(const Element& x, const Element& y);

    // negated subleading coefficient of R_{x,y}; 0 unless x < y
    Int d_coefficient(const Element& x, const Element& y);
    // coefficient of q in P_{x,y}
    Int q_coefficient(const Element& x, const Element& y);

    // verifies the three-case descent recursion for d on the triple
    // (x, y, s); s is a 0-based simple generator index with ys < y
    bool check_d_recursion(const Element& x, const Element& y, int s);

private:
    uint32_t intern(const Element& e);
    Poly r_rec(uint32_t xi, uint32_t yi);

    const CoxeterSystem* sys_;
    Bruhat* order_;
    DescentPick pick_;
    std::vector<Element> pool_;
    std::vector<int> pool_len_;
    std::unordered_map<Element, uint32_t, Element::Hash> pool_index_;
    std::unordered_map<uint64_t, Poly> r_memo_;
    std::unordered_map<uint64_t, Poly> p_memo_;
};

} // namespace klq
