#ifndef QCV_LAURENT_HPP
#define QCV_LAURENT_HPP

#include "ints.hpp"
#include <algorithm>
#include <optional>
#include <ostream>

namespace qcv {

// Dense Laurent polynomial in one variable q. Canonical form: empty coefficient
// vector encodes 0; otherwise both end coefficients are nonzero.
template <class C>
class Laurent {
  public:
    Laurent() = default;
    Laurent(const C& c) { // constant
        if (c != 0) { lo_ = 0; c_.push_back(c); }
    }
    Laurent(long v) : Laurent(C(v)) {}

    static Laurent monomial(const C& c, long e) {
        Laurent r;
        if (c != 0) { r.lo_ = e; r.c_.push_back(c); }
        return r;
    }
    static Laurent q_power(long e) { return monomial(C(1), e); }

    bool is_zero() const { return c_.empty(); }
    long lo() const { return lo_; }
    long hi() const { return lo_ + static_cast<long>(c_.size()) - 1; }
    size_t terms() const {
        size_t n = 0;
        for (const auto& c : c_) if (c != 0) ++n;
        return n;
    }

    const C coeff(long e) const {
        if (is_zero() || e < lo_ || e > hi()) return C(0);
        return c_[static_cast<size_t>(e - lo_)];
    }

    bool is_monomial() const { return c_.size() == 1; }
    bool is_one() const { return c_.size() == 1 && lo_ == 0 && c_[0] == 1; }

    // unit monomial +-q^e
    bool is_unit_monomial() const {
        return c_.size() == 1 && (c_[0] == 1 || c_[0] == -1);
    }

    friend bool operator==(const Laurent& a, const Laurent& b) {
        return a.lo_ == b.lo_ && a.c_ == b.c_ || (a.is_zero() && b.is_zero());
    }
    friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

    Laurent operator-() const {
        Laurent r(*this);
        for (auto& c : r.c_) c = -c;
        return r;
    }

    friend Laurent operator+(const Laurent& a, const Laurent& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        long lo = std::min(a.lo_, b.lo_), hi = std::max(a.hi(), b.hi());
        Laurent r;
        r.lo_ = lo;
        r.c_.assign(static_cast<size_t>(hi - lo + 1), C(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r.c_[a.lo_ - lo + i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r.c_[b.lo_ - lo + i] += b.c_[i];
        r.trim();
        return r;
    }
    friend Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }

    Laurent& operator+=(const Laurent& b) { *this = *this + b; return *this; }
    Laurent& operator-=(const Laurent& b) { *this = *this - b; return *this; }

    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        if (a.is_zero() || b.is_zero()) return Laurent();
        Laurent r;
        r.lo_ = a.lo_ + b.lo_;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, C(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) {
                if (b.c_[j] == 0) continue;
                r.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        r.trim();
        return r;
    }
    Laurent& operator*=(const Laurent& b) { *this = *this * b; return *this; }

    Laurent scaled(const C& c) const {
        if (c == 0) return Laurent();
        Laurent r(*this);
        for (auto& x : r.c_) x *= c;
        return r;
    }

    Laurent shifted(long e) const { // * q^e
        Laurent r(*this);
        if (!r.is_zero()) r.lo_ += e;
        return r;
    }

    // substitute q -> q^k (k != 0; negative k reverses)
    Laurent substituted_power(long k) const {
        if (is_zero()) return Laurent();
        Laurent r;
        if (k > 0) {
            r.lo_ = lo_ * k;
            r.c_.assign((c_.size() - 1) * static_cast<size_t>(k) + 1, C(0));
            for (size_t i = 0; i < c_.size(); ++i) r.c_[i * k] = c_[i];
        } else if (k < 0) {
            long m = -k;
            r.lo_ = hi() * k;
            r.c_.assign((c_.size() - 1) * static_cast<size_t>(m) + 1, C(0));
            for (size_t i = 0; i < c_.size(); ++i)
                r.c_[(c_.size() - 1 - i) * m] = c_[i];
        } else {
            throw PreconditionError("substituted_power: k must be nonzero");
        }
        r.trim();
        return r;
    }

    // Exact division; returns std::nullopt when the division is not exact.
    std::optional<Laurent> divided_exact(const Laurent& d) const {
        if (d.is_zero()) throw PreconditionError("division by zero Laurent polynomial");
        if (is_zero()) return Laurent();
        Laurent rem(*this);
        Laurent quot;
        quot.lo_ = lo_ - d.lo_;
        quot.c_.assign(c_.size() >= d.c_.size() ? c_.size() - d.c_.size() + 1 : 0, C(0));
        if (quot.c_.empty()) return std::nullopt;
        const C& dl = d.c_.back();
        while (!rem.is_zero() && rem.c_.size() >= d.c_.size()) {
            C c = exact_coeff_div(rem.c_.back(), dl);
            if (c == 0 && rem.c_.back() != 0) return std::nullopt;
            long e = rem.hi() - d.hi();
            long qi = e - quot.lo_;
            if (qi < 0 || qi >= static_cast<long>(quot.c_.size())) return std::nullopt;
            quot.c_[static_cast<size_t>(qi)] = c;
            rem = rem - d.scaled(c).shifted(e);
        }
        if (!rem.is_zero()) return std::nullopt;
        quot.trim();
        return quot;
    }

    // gcd of the coefficients (Int instantiation only); 0 for the zero polynomial
    Int content() const {
        Int g = 0;
        for (const auto& c : c_) g = gcd(g, Int(c));
        return g;
    }

    void divide_content(const Int& g) {
        if (g == 0 || g == 1) return;
        for (auto& c : c_) c /= g;
    }

    // evaluate with F(power) supplying images of q^e; T must support +, *
    template <class T, class PowFn>
    T evaluate(const T& zero, PowFn&& pw) const {
        T acc = zero;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            acc = acc + pw(lo_ + static_cast<long>(i)).scaled_by(c_[i]);
        }
        return acc;
    }

    template <class Fn>
    void for_terms(Fn&& fn) const {
        for (size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != 0) fn(lo_ + static_cast<long>(i), c_[i]);
    }

    friend std::ostream& operator<<(std::ostream& os, const Laurent& p) {
        if (p.is_zero()) return os << "0";
        bool first = true;
        for (long e = p.hi(); e >= p.lo_; --e) {
            const C c = p.coeff(e);
            if (c == 0) continue;
            if (!first) os << (c > 0 ? " + " : " - ");
            else if (c < 0) os << "-";
            C a = c > 0 ? c : C(-c);
            first = false;
            if (a != 1 || e == 0) os << a;
            if (e != 0) {
                if (a != 1) os << "*";
                os << "q";
                if (e != 1) os << "^" << e;
            }
        }
        return os;
    }

  private:
    static C exact_coeff_div(const C& a, const C& b);

    void trim() {
        size_t begin = 0, end = c_.size();
        while (end > begin && c_[end - 1] == 0) --end;
        while (begin < end && c_[begin] == 0) ++begin;
        if (begin == end) { c_.clear(); lo_ = 0; return; }
        if (begin > 0) c_.erase(c_.begin(), c_.begin() + static_cast<long>(begin));
        c_.resize(end - begin);
        lo_ += static_cast<long>(begin);
    }

    long lo_ = 0;
    std::vector<C> c_;
};

template <>
inline Int Laurent<Int>::exact_coeff_div(const Int& a, const Int& b) {
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) return 0;
    return q;
}

template <>
inline Rat Laurent<Rat>::exact_coeff_div(const Rat& a, const Rat& b) {
    return a / b;
}

using LaurentZ = Laurent<Int>;
using LaurentQ = Laurent<Rat>;

// gcd over Z[q^{+-1}] up to units, via primitive polynomial remainder sequence.
LaurentZ laurent_gcd(LaurentZ a, LaurentZ b);

inline LaurentZ primitive_part(LaurentZ p) {
    Int g = p.content();
    if (g > 1) p.divide_content(g);
    if (!p.is_zero()) p = p.shifted(-p.lo());
    return p;
}

} // namespace qcv

#endif
