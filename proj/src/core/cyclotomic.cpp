#include "cyclotomic.hpp"

#include <map>
#include <mutex>

namespace qcv {

LaurentZ cyclotomic_polynomial(unsigned long m) {
    static std::map<unsigned long, LaurentZ> cache;
    static std::mutex mtx;
    if (m == 0) throw PreconditionError("cyclotomic_polynomial: m >= 1 required");
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;

    // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d
    LaurentZ num = LaurentZ::q_power(static_cast<long>(m)) - LaurentZ(1);
    for (unsigned long d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        auto dit = cache.find(d);
        LaurentZ phid;
        if (dit != cache.end()) phid = dit->second;
        else {
            // fill recursively outside the lock-free path; recursion depth is tiny
            LaurentZ numd = LaurentZ::q_power(static_cast<long>(d)) - LaurentZ(1);
            for (unsigned long e = 1; e < d; ++e) {
                if (d % e != 0) continue;
                numd = *numd.divided_exact(cache.at(e));
            }
            cache[d] = numd;
            phid = numd;
        }
        num = *num.divided_exact(phid);
    }
    cache[m] = num;
    return num;
}

std::shared_ptr<const CycField> CycField::get(unsigned long N) {
    static std::map<unsigned long, std::shared_ptr<const CycField>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;
    auto f = std::shared_ptr<const CycField>(new CycField(N));
    cache[N] = f;
    return f;
}

CycField::CycField(unsigned long N) : N_(N) {
    LaurentZ phi = cyclotomic_polynomial(N);
    deg_ = static_cast<size_t>(phi.hi());
    phi_.assign(deg_ + 1, Rat(0));
    phi.for_terms([&](long e, const Int& c) { phi_[static_cast<size_t>(e)] = Rat(c); });

    // x^k mod Phi for k = 0 .. 2deg-2
    xpow_.assign(2 * deg_ - 1 > 0 ? 2 * deg_ - 1 : 1, std::vector<Rat>(deg_, Rat(0)));
    for (size_t k = 0; k < deg_; ++k) xpow_[k][k] = 1;
    for (size_t k = deg_; k + 1 <= 2 * deg_ - 1; ++k) {
        // x^k = x * x^{k-1}, then reduce the overflow coefficient
        std::vector<Rat> v(deg_ + 1, Rat(0));
        for (size_t i = 0; i < deg_; ++i) v[i + 1] = xpow_[k - 1][i];
        Rat top = v[deg_];
        std::vector<Rat> red(deg_, Rat(0));
        for (size_t i = 0; i < deg_; ++i) red[i] = v[i] - top * phi_[i];
        xpow_[k] = std::move(red);
    }

    zeta_.assign(N_, std::vector<Rat>(deg_, Rat(0)));
    // zeta^e: reduce x^e by repeated multiplication
    std::vector<Rat> cur(deg_, Rat(0));
    cur[0] = 1;
    zeta_[0] = cur;
    for (unsigned long e = 1; e < N_; ++e) {
        std::vector<Rat> nxt(deg_ + 1, Rat(0));
        for (size_t i = 0; i < deg_; ++i) nxt[i + 1] = cur[i];
        Rat top = nxt[deg_];
        std::vector<Rat> red(deg_, Rat(0));
        for (size_t i = 0; i < deg_; ++i) red[i] = nxt[i] - top * phi_[i];
        cur = std::move(red);
        zeta_[e] = cur;
    }
}

Cyc CycField::zero() const {
    return Cyc(shared_from_this(), std::vector<Rat>(deg_, Rat(0)));
}

Cyc CycField::one() const { return rational(Rat(1)); }

Cyc CycField::rational(const Rat& r) const {
    std::vector<Rat> c(deg_, Rat(0));
    c[0] = r;
    return Cyc(shared_from_this(), std::move(c));
}

Cyc CycField::zeta_power(long e) const {
    long m = e % static_cast<long>(N_);
    if (m < 0) m += static_cast<long>(N_);
    return Cyc(shared_from_this(), zeta_[static_cast<size_t>(m)]);
}

bool Cyc::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool Cyc::is_rational(Rat* value) const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    if (value) *value = c_.empty() ? Rat(0) : c_[0];
    return true;
}

bool operator==(const Cyc& a, const Cyc& b) {
    if (a.field_->conductor() != b.field_->conductor())
        throw PreconditionError("Cyc comparison across different fields");
    return a.c_ == b.c_;
}

Cyc Cyc::operator-() const {
    std::vector<Rat> c(c_);
    for (auto& x : c) x = -x;
    return Cyc(field_, std::move(c));
}

Cyc operator+(const Cyc& a, const Cyc& b) {
    std::vector<Rat> c(a.c_);
    for (size_t i = 0; i < c.size(); ++i) c[i] += b.c_[i];
    return Cyc(a.field_, std::move(c));
}

Cyc operator-(const Cyc& a, const Cyc& b) {
    std::vector<Rat> c(a.c_);
    for (size_t i = 0; i < c.size(); ++i) c[i] -= b.c_[i];
    return Cyc(a.field_, std::move(c));
}

Cyc operator*(const Cyc& a, const Cyc& b) {
    const size_t d = a.field_->degree();
    std::vector<Rat> raw(2 * d - 1 > 0 ? 2 * d - 1 : 1, Rat(0));
    for (size_t i = 0; i < d; ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < d; ++j) {
            if (b.c_[j] == 0) continue;
            raw[i + j] += a.c_[i] * b.c_[j];
        }
    }
    std::vector<Rat> c(d, Rat(0));
    for (size_t k = 0; k < raw.size(); ++k) {
        if (raw[k] == 0) continue;
        const auto& row = a.field_->xpow_[k];
        for (size_t i = 0; i < d; ++i)
            if (row[i] != 0) c[i] += raw[k] * row[i];
    }
    return Cyc(a.field_, std::move(c));
}

Cyc Cyc::scaled(const Rat& r) const {
    std::vector<Rat> c(c_);
    for (auto& x : c) x *= r;
    return Cyc(field_, std::move(c));
}

Cyc Cyc::inverse() const {
    // extended Euclid in Q[x] for gcd(this, Phi) = 1
    const size_t d = field_->degree();
    std::vector<Rat> r0(field_->phi_), r1(c_);
    r1.resize(d + 1, Rat(0));
    std::vector<Rat> s0(d + 1, Rat(0)), s1(d + 1, Rat(0));
    s1[0] = 1; // s0 = 0 tracks Phi, s1 = 1 tracks this
    auto deg_of = [](const std::vector<Rat>& v) -> long {
        for (long i = static_cast<long>(v.size()) - 1; i >= 0; --i)
            if (v[static_cast<size_t>(i)] != 0) return i;
        return -1;
    };
    long d0 = deg_of(r0), d1 = deg_of(r1);
    if (d1 < 0) throw PreconditionError("Cyc::inverse of zero");
    while (d1 > 0) {
        // r0 = q*r1 + r; update
        while (d0 >= d1) {
            Rat f = r0[static_cast<size_t>(d0)] / r1[static_cast<size_t>(d1)];
            long sh = d0 - d1;
            for (long i = 0; i <= d1; ++i)
                r0[static_cast<size_t>(i + sh)] -= f * r1[static_cast<size_t>(i)];
            for (size_t i = 0; i + static_cast<size_t>(sh) < s0.size(); ++i)
                s0[i + static_cast<size_t>(sh)] -= f * s1[i];
            d0 = deg_of(r0);
            if (d0 < 0) break;
        }
        std::swap(r0, r1);
        std::swap(s0, s1);
        std::swap(d0, d1);
        if (d1 < 0) break;
    }
    if (d1 != 0) throw PreconditionError("Cyc::inverse: element not invertible");
    Rat lead = r1[0];
    std::vector<Rat> inv(d, Rat(0));
    for (size_t i = 0; i < d && i < s1.size(); ++i) inv[i] = s1[i] / lead;
    // s1 may have degree >= d in pathological cases; reduce properly
    for (size_t k = d; k < s1.size(); ++k) {
        if (s1[k] == 0) continue;
        const auto& row = field_->xpow_[k];
        for (size_t i = 0; i < d; ++i) inv[i] += (s1[k] / lead) * row[i];
    }
    return Cyc(field_, std::move(inv));
}

Cyc Cyc::pow(long e) const {
    if (e == 0) return field_->one();
    Cyc base = e > 0 ? *this : inverse();
    unsigned long n = static_cast<unsigned long>(e > 0 ? e : -e);
    Cyc acc = field_->one();
    while (n) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

unsigned long Cyc::order() const {
    Cyc x = *this;
    const Cyc one = field_->one();
    for (unsigned long k = 1; k <= 2 * field_->conductor(); ++k) {
        if (x == one) return k;
        x *= *this;
    }
    return 0;
}

std::ostream& operator<<(std::ostream& os, const Cyc& x) {
    bool first = true;
    for (size_t i = 0; i < x.c_.size(); ++i) {
        if (x.c_[i] == 0) continue;
        if (!first) os << " + ";
        os << x.c_[i];
        if (i > 0) os << "*z^" << i;
        first = false;
    }
    if (first) os << "0";
    return os;
}

} // namespace qcv
