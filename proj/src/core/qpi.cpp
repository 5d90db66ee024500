#include "qpi.hpp"

#include <map>
#include <mutex>

namespace qcv {
namespace qpi {

namespace {

LaurentZ component_integer(long a, int sigma) {
    // ((sigma q)^a - q^{-a}) / (sigma q - q^{-1}) in Z[q^{+-1}]
    LaurentZ num = LaurentZ::monomial(Int(sign_pow(sigma, a)), a) - LaurentZ::q_power(-a);
    LaurentZ den = LaurentZ::monomial(Int(sigma), 1) - LaurentZ::q_power(-1);
    auto q = num.divided_exact(den);
    if (!q) throw std::logic_error("qpi::integer: defining quotient not exact");
    return *q;
}

} // namespace

PiLaurent integer(long a) {
    static std::map<long, PiLaurent> cache;
    static std::mutex mtx;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(a);
        if (it != cache.end()) return it->second;
    }
    PiLaurent r(component_integer(a, 1), component_integer(a, -1));
    std::lock_guard<std::mutex> lock(mtx);
    return cache.emplace(a, std::move(r)).first->second;
}

PiLaurent factorial(long n) {
    static std::map<long, PiLaurent> cache;
    static std::mutex mtx;
    if (n < 0) throw PreconditionError("qpi::factorial: n >= 0 required");
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    PiLaurent acc(1);
    for (long k = 1; k <= n; ++k) acc *= integer(k);
    std::lock_guard<std::mutex> lock(mtx);
    return cache.emplace(n, std::move(acc)).first->second;
}

PiLaurent binomial(long a, long n) {
    static std::map<std::pair<long, long>, PiLaurent> cache;
    static std::mutex mtx;
    if (n < 0) throw PreconditionError("qpi::binomial: n >= 0 required");
    if (n == 0) return PiLaurent(1);
    const auto key = std::make_pair(a, n);
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    PiLaurent num(1);
    for (long i = 1; i <= n; ++i) num *= integer(a + 1 - i);
    auto q = num.divided_exact(factorial(n));
    if (!q) throw std::logic_error("qpi::binomial: quotient not exact");
    std::lock_guard<std::mutex> lock(mtx);
    return cache.emplace(key, std::move(*q)).first->second;
}

PiLaurent binomial_scaled(long a, long n, long d) {
    return binomial(a, n).substituted(d);
}

LaurentZ v_integer(long a) {
    LaurentZ num = LaurentZ::q_power(a) - LaurentZ::q_power(-a);
    LaurentZ den = LaurentZ::q_power(1) - LaurentZ::q_power(-1);
    auto q = num.divided_exact(den);
    if (!q) throw std::logic_error("qpi::v_integer: quotient not exact");
    return *q;
}

LaurentZ v_binomial(long a, long n) {
    if (n < 0) throw PreconditionError("qpi::v_binomial: n >= 0 required");
    LaurentZ num(1), den(1);
    for (long i = 1; i <= n; ++i) {
        num *= v_integer(a + 1 - i);
        den *= v_integer(i);
    }
    auto q = num.divided_exact(den);
    if (!q) throw std::logic_error("qpi::v_binomial: quotient not exact");
    return *q;
}

Cyc binomial_at(const RootContext& ctx, long a, long n, const Cyc& q_val, int pi_val) {
    return ctx.evaluate(binomial(a, n).component(pi_val), q_val);
}

Cyc binomial_spec(const RootContext& ctx, long a, long n, long d) {
    return ctx.specialize_scaled(binomial(a, n), d);
}

Cyc factorial_spec(const RootContext& ctx, long n, long d) {
    return ctx.specialize_scaled(factorial(n), d);
}

Cyc integer_spec(const RootContext& ctx, long a, long d) {
    return ctx.specialize_scaled(integer(a), d);
}

} // namespace qpi
} // namespace qcv
