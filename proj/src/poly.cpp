#include "klq/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace klq {

Poly Poly::reversed(int ell) const {
    if (degree() > ell)
        throw std::invalid_argument("Poly::reversed: degree exceeds ell");
    std::vector<Int> cs(static_cast<size_t>(ell) + 1, Int(0));
    for (int i = 0; i <= degree(); ++i)
        cs[static_cast<size_t>(ell - i)] = coeff(i);
    return from_coeffs(std::move(cs));
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= degree(); ++i) {
        Int c = coeff(i);
        if (c == 0) continue;
        bool neg = c < 0;
        Int a = neg ? Int(-c) : c;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (i == 0) {
            os << a.str();
        } else {
            if (a != 1) os << a.str();
            os << "q";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

} // namespace klq
