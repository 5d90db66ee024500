#ifndef QCV_INTS_HPP
#define QCV_INTS_HPP

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcv {

using Int = mpz_class;
using Rat = mpq_class;

// Raised when a structure constant that should lie in Z[q,q^-1,pi] does not.
struct IntegralityError : std::runtime_error {
    explicit IntegralityError(const std::string& what) : std::runtime_error(what) {}
};

// Raised on violated operation preconditions (maps to usage errors at the API).
struct PreconditionError : std::invalid_argument {
    explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

inline Int int_pow(Int base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int int_binomial(long n, long k) {
    if (k < 0) return 0;
    if (n >= 0 && k > n) return 0;
    if (n < 0) {
        // binom(n,k) = (-1)^k binom(k-n-1, k)
        Int r = int_binomial(k - n - 1, k);
        return (k % 2 == 0) ? r : Int(-r);
    }
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline Int int_factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// (-1)^e for possibly negative e
inline int parity_sign(long e) { return (e % 2 == 0) ? 1 : -1; }

// sign^e with sign in {+1,-1}
inline int sign_pow(int sign, long e) { return sign == 1 ? 1 : parity_sign(e); }

// binom(n,2) = n(n-1)/2, valid for all integers n
inline long choose2(long n) { return n * (n - 1) / 2; }

inline long lcm_long(long a, long b) {
    Int l = lcm(Int(a), Int(b));
    return l.get_si();
}

inline long gcd_long(long a, long b) {
    Int g = gcd(Int(a), Int(b));
    return g.get_si();
}

} // namespace qcv

#endif
