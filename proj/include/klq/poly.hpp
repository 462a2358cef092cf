#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "klq/bigint.hpp"

namespace klq {

// Dense univariate polynomial in q with exact integer coefficients.
// coeffs_[i] is the coefficient of q^i; no trailing zeros are stored,
// so the zero polynomial is the empty vector and deg = coeffs_.size()-1.
class Poly {
public:
    Poly() = default;
    explicit Poly(Int constant) {
        if (constant != 0) coeffs_.push_back(std::move(constant));
    }
    Poly(std::initializer_list<long long> cs) {
        for (long long c : cs) coeffs_.push_back(Int(c));
        normalize();
    }
    static Poly from_coeffs(std::vector<Int> cs) {
        Poly p;
        p.coeffs_ = std::move(cs);
        p.normalize();
        return p;
    }
    // the monomial q^k
    static Poly monomial(int k, Int c = Int(1)) {
        Poly p;
        if (c != 0) {
            p.coeffs_.assign(static_cast<size_t>(k) + 1, Int(0));
            p.coeffs_.back() = std::move(c);
        }
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }
    // -1 for the zero polynomial
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Int coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Int(0);
        return coeffs_[static_cast<size_t>(i)];
    }
    const std::vector<Int>& coeffs() const { return coeffs_; }

    bool is_monic_of_degree(int d) const {
        return degree() == d && (d < 0 ? false : coeffs_.back() == 1);
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r;
        r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), Int(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i) r.coeffs_[i] += a.coeffs_[i];
        for (size_t i = 0; i < b.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
        r.normalize();
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        Poly r;
        r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), Int(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i) r.coeffs_[i] += a.coeffs_[i];
        for (size_t i = 0; i < b.coeffs_.size(); ++i) r.coeffs_[i] -= b.coeffs_[i];
        r.normalize();
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        Poly r;
        r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i)
            for (size_t j = 0; j < b.coeffs_.size(); ++j)
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        r.normalize();
        return r;
    }
    friend Poly operator*(const Int& c, const Poly& p) {
        if (c == 0) return Poly();
        Poly r = p;
        for (auto& x : r.coeffs_) x *= c;
        return r;
    }
    Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
    Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // q^ell * p(1/q), valid when deg(p) <= ell
    Poly reversed(int ell) const;

    // "1 + q - 2q^2"; "0" for the zero polynomial
    std::string str() const;

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<Int> coeffs_;
};

// q and q-1 come up constantly in the recursions
inline Poly poly_q() { return Poly::monomial(1); }
inline Poly poly_q_minus_1() { return Poly{-1, 1}; }

} // namespace klq
