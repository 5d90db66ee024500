#ifndef QCV_SCALARS_HPP
#define QCV_SCALARS_HPP

#include "cyclotomic.hpp"

namespace qcv {

// An element of Z[q^{+-1}][pi]/(pi^2-1), stored by its two evaluations:
// plus_part = f|_{pi=1}, minus_part = f|_{pi=-1}. Sums and products of
// integral elements stay integral in each component.
class PiLaurent {
  public:
    PiLaurent() = default;
    PiLaurent(long c) : plus_(c), minus_(c) {}
    PiLaurent(LaurentZ plus, LaurentZ minus)
        : plus_(std::move(plus)), minus_(std::move(minus)) {}

    static PiLaurent q_power(long e) {
        return PiLaurent(LaurentZ::q_power(e), LaurentZ::q_power(e));
    }
    static PiLaurent pi() { return PiLaurent(LaurentZ(1), LaurentZ(-1)); }
    // pi^a q^b
    static PiLaurent pi_q(long a, long b) {
        LaurentZ m = LaurentZ::q_power(b);
        return PiLaurent(m, a % 2 == 0 ? m : -m);
    }

    const LaurentZ& plus_part() const { return plus_; }
    const LaurentZ& minus_part() const { return minus_; }
    const LaurentZ& component(int pi_sign) const { return pi_sign == 1 ? plus_ : minus_; }

    bool is_zero() const { return plus_.is_zero() && minus_.is_zero(); }

    friend bool operator==(const PiLaurent& a, const PiLaurent& b) {
        return a.plus_ == b.plus_ && a.minus_ == b.minus_;
    }
    friend bool operator!=(const PiLaurent& a, const PiLaurent& b) { return !(a == b); }

    PiLaurent operator-() const { return PiLaurent(-plus_, -minus_); }
    friend PiLaurent operator+(const PiLaurent& a, const PiLaurent& b) {
        return PiLaurent(a.plus_ + b.plus_, a.minus_ + b.minus_);
    }
    friend PiLaurent operator-(const PiLaurent& a, const PiLaurent& b) {
        return PiLaurent(a.plus_ - b.plus_, a.minus_ - b.minus_);
    }
    friend PiLaurent operator*(const PiLaurent& a, const PiLaurent& b) {
        return PiLaurent(a.plus_ * b.plus_, a.minus_ * b.minus_);
    }
    PiLaurent& operator+=(const PiLaurent& b) { *this = *this + b; return *this; }
    PiLaurent& operator-=(const PiLaurent& b) { *this = *this - b; return *this; }
    PiLaurent& operator*=(const PiLaurent& b) { *this = *this * b; return *this; }

    // exact division; nullopt if either component fails
    std::optional<PiLaurent> divided_exact(const PiLaurent& d) const {
        auto p = plus_.divided_exact(d.plus_);
        if (!p) return std::nullopt;
        auto m = minus_.divided_exact(d.minus_);
        if (!m) return std::nullopt;
        return PiLaurent(*p, *m);
    }

    // q -> q^k, pi -> pi^k. For even k both components use the plus evaluation.
    PiLaurent substituted(long d) const {
        LaurentZ p = plus_.substituted_power(d);
        LaurentZ m = (d % 2 == 0) ? p : minus_.substituted_power(d);
        return PiLaurent(p, m);
    }

    // coordinates over the basis {1, pi}: f = half(plus+minus) + half(plus-minus) pi.
    // Requires plus == minus mod 2 coefficientwise (always true for integral sums
    // of pi^a q^b monomials).
    std::pair<LaurentQ, LaurentQ> pi_basis_coordinates() const;

    friend std::ostream& operator<<(std::ostream& os, const PiLaurent& x) {
        return os << "(pi=+1: " << x.plus_ << " | pi=-1: " << x.minus_ << ")";
    }

  private:
    LaurentZ plus_, minus_;
};

enum class EllPrimeChoice { Default, Ell, TwoEll };

// Everything derived from the choice of ell: the cyclotomic field Q(zeta_N)
// with N = lcm(ell', 4), the distinguished root of unity q~ = sqrt(pi) eps,
// and v = sqrt(pi) q~.
class RootContext {
  public:
    RootContext(long ell, EllPrimeChoice choice, int pi_sign);

    long ell() const { return ell_; }
    long ell_prime() const { return ell_prime_; }
    int pi_sign() const { return pi_sign_; }
    unsigned long conductor() const { return N_; }
    // smallest positive ltilde with q~^{2 ltilde} = 1: 2*ell for odd ell, ell for even
    long ell_tilde() const { return ell_tilde_; }

    std::shared_ptr<const CycField> field() const { return field_; }
    const Cyc& epsilon() const { return epsilon_; }
    const Cyc& sqrt_pi() const { return sqrt_pi_; }
    const Cyc& q_tilde() const { return q_tilde_; }
    const Cyc& v() const { return v_; }

    Cyc q_tilde_pow(long e) const;               // q~^e (cached power table)
    Cyc pi_q_pow(long a, long b) const;          // pi^a q~^b
    int pi_pow(long a) const { return sign_pow(pi_sign_, a); }

    // the specialization homomorphism phi: pick the pi_sign component, q -> q~
    Cyc specialize(const PiLaurent& x) const;
    // evaluate an integer Laurent polynomial at a root of unity g (collapses
    // exponents modulo the order of g first)
    Cyc evaluate(const LaurentZ& p, const Cyc& g) const;
    // component of x at pi = pi_sign^d evaluated at q = q~^d  (i.e. q->q_i, pi->pi_i)
    Cyc specialize_scaled(const PiLaurent& x, long d) const;

    std::string describe() const;

  private:
    long ell_, ell_prime_, ell_tilde_;
    int pi_sign_;
    unsigned long N_;
    std::shared_ptr<const CycField> field_;
    Cyc epsilon_, sqrt_pi_, q_tilde_, v_;
    std::vector<Cyc> qt_pow_; // q~^0 .. q~^{ord-1}
    unsigned long qt_order_ = 0;
};

} // namespace qcv

#endif
