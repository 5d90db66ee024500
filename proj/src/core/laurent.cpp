#include "laurent.hpp"

namespace qcv {

namespace {

// pseudo-remainder of a by b (both primitive ordinary polynomials, deg a >= deg b)
LaurentZ pseudo_rem(LaurentZ a, const LaurentZ& b) {
    const long db = b.hi();
    const Int lb = b.coeff(db);
    while (!a.is_zero() && a.hi() >= db) {
        Int la = a.coeff(a.hi());
        long sh = a.hi() - db;
        a = a.scaled(lb) - b.scaled(la).shifted(sh);
    }
    return a;
}

} // namespace

LaurentZ laurent_gcd(LaurentZ a, LaurentZ b) {
    a = primitive_part(a);
    b = primitive_part(b);
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.hi() < b.hi()) std::swap(a, b);
    while (!b.is_zero()) {
        LaurentZ r = primitive_part(pseudo_rem(a, b));
        a = b;
        b = r;
    }
    return a;
}

} // namespace qcv
