#ifndef QCV_QPI_HPP
#define QCV_QPI_HPP

#include "scalars.hpp"

namespace qcv {
namespace qpi {

// [a]_{q,pi} = ((pi q)^a - q^{-a}) / (pi q - q^{-1}); exact for every a in Z.
PiLaurent integer(long a);

// [n]!_{q,pi}
PiLaurent factorial(long n);

// binom(a, n)_{q,pi} = prod_{i=1..n} [a+1-i] / [n]!; exact Laurent for all a in Z, n >= 0.
PiLaurent binomial(long a, long n);

// binom(a, n)_{q_i, pi_i} where q_i = q^d, pi_i = pi^d
PiLaurent binomial_scaled(long a, long n, long d);

// [a]_v for an auxiliary variable v, as an ordinary Laurent polynomial in v
LaurentZ v_integer(long a);
LaurentZ v_binomial(long a, long n);

// specialized values binom(a,n) at q = q_val, pi = pi_val (+-1); always computed
// by evaluating the generic binomial, never by dividing specialized factorials.
Cyc binomial_at(const RootContext& ctx, long a, long n, const Cyc& q_val, int pi_val);

// binom(a,n)_{q~_i, pi_i} with d = d_i
Cyc binomial_spec(const RootContext& ctx, long a, long n, long d);
// [n]!_{q~_i, pi_i}
Cyc factorial_spec(const RootContext& ctx, long n, long d);
// [a]_{q~_i, pi_i}
Cyc integer_spec(const RootContext& ctx, long a, long d);

} // namespace qpi
} // namespace qcv

#endif
