#ifndef QCV_CYCLOTOMIC_HPP
#define QCV_CYCLOTOMIC_HPP

#include "laurent.hpp"
#include <memory>
#include <ostream>
#include <vector>

namespace qcv {

// m-th cyclotomic polynomial Phi_m over Z, as an ordinary polynomial in q.
LaurentZ cyclotomic_polynomial(unsigned long m);

class Cyc;

// The field Q(zeta_N), represented as Q[x]/(Phi_N). All arithmetic is exact.
class CycField : public std::enable_shared_from_this<CycField> {
  public:
    static std::shared_ptr<const CycField> get(unsigned long N);

    unsigned long conductor() const { return N_; }
    size_t degree() const { return deg_; }

    Cyc zero() const;
    Cyc one() const;
    Cyc rational(const Rat& r) const;
    // zeta_N^e for any integer e
    Cyc zeta_power(long e) const;

    friend class Cyc;
    friend Cyc operator*(const Cyc& a, const Cyc& b);

  private:
    explicit CycField(unsigned long N);

    unsigned long N_;
    size_t deg_;
    std::vector<Rat> phi_;                      // monic Phi_N, coefficients 0..deg
    std::vector<std::vector<Rat>> xpow_;        // x^k mod Phi_N for k = 0..2deg-2
    std::vector<std::vector<Rat>> zeta_;        // zeta^e for e = 0..N-1 (reduced)
};

// An element of Q(zeta_N).
class Cyc {
  public:
    Cyc() = default; // unusable until assigned from a field

    bool is_zero() const;
    bool is_one() const { return *this == field_->one(); }
    bool is_rational(Rat* value = nullptr) const;

    friend bool operator==(const Cyc& a, const Cyc& b);
    friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

    Cyc operator-() const;
    friend Cyc operator+(const Cyc& a, const Cyc& b);
    friend Cyc operator-(const Cyc& a, const Cyc& b);
    friend Cyc operator*(const Cyc& a, const Cyc& b);
    Cyc& operator+=(const Cyc& b) { *this = *this + b; return *this; }
    Cyc& operator-=(const Cyc& b) { *this = *this - b; return *this; }
    Cyc& operator*=(const Cyc& b) { *this = *this * b; return *this; }

    Cyc inverse() const;
    Cyc pow(long e) const;

    Cyc scaled(const Rat& r) const;
    Cyc scaled_by(const Int& c) const { return scaled(Rat(c)); }
    Cyc scaled_by(const Rat& c) const { return scaled(c); }

    // multiplicative order; 0 if not a root of unity
    unsigned long order() const;

    std::shared_ptr<const CycField> field() const { return field_; }
    const std::vector<Rat>& coords() const { return c_; }

    friend std::ostream& operator<<(std::ostream& os, const Cyc& x);
    friend class CycField;

  private:
    Cyc(std::shared_ptr<const CycField> f, std::vector<Rat> c)
        : field_(std::move(f)), c_(std::move(c)) {}

    std::shared_ptr<const CycField> field_;
    std::vector<Rat> c_; // coordinates in the power basis 1, zeta, ..., zeta^{deg-1}
};

} // namespace qcv

#endif
