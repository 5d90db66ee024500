#include "scalars.hpp"

#include <sstream>

namespace qcv {

std::pair<LaurentQ, LaurentQ> PiLaurent::pi_basis_coordinates() const {
    LaurentQ p, m;
    plus_.for_terms([&](long e, const Int& c) { p += LaurentQ::monomial(Rat(c), e); });
    minus_.for_terms([&](long e, const Int& c) { m += LaurentQ::monomial(Rat(c), e); });
    LaurentQ half = LaurentQ::monomial(Rat(1, 2), 0);
    return {half * (p + m), half * (p - m)};
}

RootContext::RootContext(long ell, EllPrimeChoice choice, int pi_sign)
    : ell_(ell), pi_sign_(pi_sign) {
    if (ell < 1) throw PreconditionError("RootContext: ell >= 1 required");
    if (pi_sign != 1 && pi_sign != -1)
        throw PreconditionError("RootContext: pi_sign must be +1 or -1");
    const bool odd = (ell % 2 != 0);
    switch (choice) {
        case EllPrimeChoice::Default: ell_prime_ = 2 * ell; break;
        case EllPrimeChoice::TwoEll: ell_prime_ = 2 * ell; break;
        case EllPrimeChoice::Ell:
            if (!odd)
                throw PreconditionError(
                    "RootContext: ell' = ell is only legal for odd ell");
            ell_prime_ = ell;
            break;
    }
    ell_tilde_ = odd ? 2 * ell : ell;
    N_ = static_cast<unsigned long>(lcm_long(ell_prime_, 4));
    field_ = CycField::get(N_);
    epsilon_ = field_->zeta_power(static_cast<long>(N_ / static_cast<unsigned long>(ell_prime_)));
    sqrt_pi_ = (pi_sign_ == 1) ? field_->one() : field_->zeta_power(static_cast<long>(N_ / 4));
    q_tilde_ = sqrt_pi_ * epsilon_;
    v_ = sqrt_pi_ * q_tilde_;

    // eq:order sanity: v^{2l} = 1 and v^{2t} != 1 for 0 < t < l
    const Cyc one = field_->one();
    if (v_.pow(2 * ell_) != one)
        throw std::logic_error("RootContext: v^{2ell} != 1");
    for (long t = 1; t < ell_; ++t)
        if (v_.pow(2 * t) == one)
            throw std::logic_error("RootContext: v^{2t} = 1 for 0 < t < ell");

    qt_order_ = q_tilde_.order();
    qt_pow_.reserve(qt_order_);
    Cyc x = one;
    for (unsigned long k = 0; k < qt_order_; ++k) {
        qt_pow_.push_back(x);
        x *= q_tilde_;
    }
}

Cyc RootContext::q_tilde_pow(long e) const {
    long m = e % static_cast<long>(qt_order_);
    if (m < 0) m += static_cast<long>(qt_order_);
    return qt_pow_[static_cast<size_t>(m)];
}

Cyc RootContext::pi_q_pow(long a, long b) const {
    Cyc r = q_tilde_pow(b);
    return pi_pow(a) == 1 ? r : -r;
}

Cyc RootContext::specialize(const PiLaurent& x) const {
    return evaluate(x.component(pi_sign_), q_tilde_);
}

Cyc RootContext::evaluate(const LaurentZ& p, const Cyc& g) const {
    unsigned long o = (g == q_tilde_) ? qt_order_ : g.order();
    if (o == 0) throw PreconditionError("RootContext::evaluate: not a root of unity");
    std::vector<Int> bucket(o, Int(0));
    p.for_terms([&](long e, const Int& c) {
        long m = e % static_cast<long>(o);
        if (m < 0) m += static_cast<long>(o);
        bucket[static_cast<size_t>(m)] += c;
    });
    Cyc acc = field_->zero();
    Cyc gp = field_->one();
    for (unsigned long k = 0; k < o; ++k) {
        if (bucket[k] != 0) acc += gp.scaled(Rat(bucket[k]));
        if (k + 1 < o) gp *= g;
    }
    return acc;
}

Cyc RootContext::specialize_scaled(const PiLaurent& x, long d) const {
    int pi_i = pi_pow(d);
    return evaluate(x.component(pi_i), q_tilde_pow(d));
}

std::string RootContext::describe() const {
    std::ostringstream os;
    os << "ell=" << ell_ << " ell'=" << ell_prime_ << " pi=" << (pi_sign_ > 0 ? "+1" : "-1")
       << " N=" << N_;
    return os.str();
}

} // namespace qcv
