#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "klq/bruhat.hpp"
#include "klq/coxeter.hpp"
#include "klq/errors.hpp"
#include "klq/klpoly.hpp"

namespace klq {

// AD(x,y) = { t in T : xt > x and yt < y } as sorted reflection indices.
// Nonempty whenever x < y.
std::vector<int> ad_set(const CoxeterSystem& sys, Bruhat& order, const Element& x,
                        const Element& y);

struct MinimalReflectionReport {
    std::vector<int> ad;      // all of AD(x,y)
    std::vector<int> minimal; // dominance-minimal members, sorted by root
    int chosen = -1;          // lexicographically smallest root among minimal
};

MinimalReflectionReport minimal_reflections(const CoxeterSystem& sys, Bruhat& order,
                                            const Element& x, const Element& y);

bool is_minimal_reflection(const CoxeterSystem& sys, Bruhat& order, const Element& x,
                           const Element& y, int t);

// Generalised lifting: x <= yt <. y, x <. xt <= y and the exact identity
// R_{x,y} = (q-1) R_{x,yt} + q R_{xt,yt}. Throws when t is not minimal.
bool verify_glt(KLContext& kl, const Element& x, const Element& y, int t);

// d_{x,y} = d_{x,yt} + 1 if xt is not below yt, else d_{x,yt}
bool check_drect(KLContext& kl, const Element& x, const Element& y, int t);

// Maximal chain x = z_0 <. z_1 <. ... <. z_{l(y)-l(x)-1} = yt with
// z_i t >. z_i and z_i t in [x,y] for all i. Existence is a theorem in
// simply-laced type, so an exhausted search raises TheoremViolation.
std::vector<Element> ladder_chain(const CoxeterSystem& sys, Bruhat& order, const Element& x,
                                  const Element& y, int t);

// Independent re-check of every chain invariant; never trusts the search.
bool validate_ladder_chain(const CoxeterSystem& sys, Bruhat& order, const Element& x,
                           const Element& y, int t, const std::vector<Element>& chain);

// There is r in at^T union coat^T with r not dominance-below t.
// Precondition l(y) - l(x) >= 2.
bool check_onenotsmaller(const CoxeterSystem& sys, Bruhat& order, const Element& x,
                         const Element& y, int t);

// Some atom z has t minimal for (z,y), or some coatom w has t minimal
// for (x,w). Precondition l(y) - l(x) >= 2.
bool check_newmin(const CoxeterSystem& sys, Bruhat& order, const Element& x, const Element& y,
                  int t);

// Type-A strengthening: r in coat^T and r' in at^T, each not
// dominance-below t. nullopt when the system is not of type A or the
// length gap is below 2.
std::optional<bool> check_typeA_strengthening(const CoxeterSystem& sys, Bruhat& order,
                                              const Element& x, const Element& y, int t);

// Diamond-generating witness of size d_{x,y}, built by the
// minimal-reflection induction: recurse into [x, yt] and append the edge
// (x, xt) exactly when xt is not below yt. Returned as vertex pairs; the
// caller maps them onto interval-graph edges and must verify the closure.
std::vector<std::pair<Element, Element>> generating_pairs(const CoxeterSystem& sys, Bruhat& order,
                                                          const Element& x, const Element& y);

} // namespace klq
