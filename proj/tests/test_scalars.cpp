#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/qpi.hpp"

using namespace qcv;

TEST_CASE("laurent arithmetic basics") {
    LaurentZ a = LaurentZ::q_power(2) + LaurentZ::monomial(Int(3), -1);
    LaurentZ b = LaurentZ::q_power(1) - LaurentZ(1);
    CHECK(a * b == LaurentZ::q_power(3) - LaurentZ::q_power(2)
                       + LaurentZ::monomial(Int(3), 0) - LaurentZ::monomial(Int(3), -1));
    CHECK((a - a).is_zero());
    auto d = (a * b).divided_exact(b);
    REQUIRE(d.has_value());
    CHECK(*d == a);
    CHECK(!(a * b + LaurentZ(1)).divided_exact(b).has_value());
    CHECK(a.substituted_power(-1) == LaurentZ::q_power(-2) + LaurentZ::monomial(Int(3), 1));
}

TEST_CASE("laurent gcd") {
    LaurentZ a = (LaurentZ::q_power(1) - 1) * (LaurentZ::q_power(2) + 1).scaled(Int(6));
    LaurentZ b = (LaurentZ::q_power(1) - 1) * (LaurentZ::q_power(1) + 1).scaled(Int(4));
    LaurentZ g = laurent_gcd(a, b);
    CHECK(a.divided_exact(g).has_value());
    CHECK(g == LaurentZ::q_power(1) - 1);
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == LaurentZ::q_power(1) - 1);
    CHECK(cyclotomic_polynomial(4) == LaurentZ::q_power(2) + 1);
    CHECK(cyclotomic_polynomial(6) == LaurentZ::q_power(2) - LaurentZ::q_power(1) + 1);
    // prod_{d | 12} Phi_d = x^12 - 1
    LaurentZ prod(1);
    for (unsigned long d : {1ul, 2ul, 3ul, 4ul, 6ul, 12ul}) prod *= cyclotomic_polynomial(d);
    CHECK(prod == LaurentZ::q_power(12) - 1);
}

TEST_CASE("cyclotomic field arithmetic") {
    auto F = CycField::get(12);
    Cyc z = F->zeta_power(1);
    CHECK(z.pow(12) == F->one());
    CHECK(z.pow(6) == -F->one());
    CHECK(z.order() == 12);
    Cyc x = z + F->rational(Rat(2, 3));
    CHECK(x * x.inverse() == F->one());
    // exactness round trip: (k x)/k = x
    CHECK(x.scaled(Rat(7)).scaled(Rat(1, 7)) == x);
}

TEST_CASE("root context invariants (eq:order)") {
    for (long ell = 1; ell <= 8; ++ell) {
        for (int pi : {1, -1}) {
            RootContext ctx(ell, EllPrimeChoice::Default, pi);
            CHECK(ctx.v() == (pi == 1 ? ctx.epsilon() : -ctx.epsilon()));
            CHECK(ctx.q_tilde() == ctx.sqrt_pi() * ctx.epsilon());
            if (ell % 2 == 1) {
                RootContext c2(ell, EllPrimeChoice::Ell, pi);
                CHECK(c2.ell_prime() == ell);
            }
        }
    }
    CHECK_THROWS_AS(RootContext(4, EllPrimeChoice::Ell, 1), PreconditionError);
}

TEST_CASE("make_root_context spec examples") {
    // ell=3 default -> ell'=6, pi=+1: v = eps, v^6=1, v^2 != 1, v^4 != 1
    RootContext a(3, EllPrimeChoice::Default, 1);
    CHECK(a.ell_prime() == 6);
    CHECK(a.v() == a.epsilon());
    CHECK(a.v().pow(6) == a.field()->one());
    CHECK(a.v().pow(2) != a.field()->one());
    CHECK(a.v().pow(4) != a.field()->one());
    // ell=1: v = 1
    RootContext b(1, EllPrimeChoice::Ell, 1);
    CHECK(b.v() == b.field()->one());
    // ell=3, pi=-1: v = -eps, exact powers in Q(zeta_12)
    RootContext c(3, EllPrimeChoice::Default, -1);
    CHECK(c.v() == -c.epsilon());
    CHECK(c.v().pow(6) == c.field()->one());
    CHECK(c.v().pow(2) != c.field()->one());
    CHECK(c.v().pow(4) != c.field()->one());
    CHECK(c.sqrt_pi() * c.sqrt_pi() == -c.field()->one());
}

TEST_CASE("specialize is a ring homomorphism") {
    // x = q + pi q^{-1} at ell=2 (ell'=4, pi=+1): eps + eps^{-1} = 0
    RootContext ctx(2, EllPrimeChoice::Default, 1);
    PiLaurent x = PiLaurent::q_power(1) + PiLaurent::pi() * PiLaurent::q_power(-1);
    CHECK(ctx.specialize(x).is_zero());
    CHECK(ctx.specialize(PiLaurent(1)) == ctx.field()->one());
    RootContext m(5, EllPrimeChoice::Default, -1);
    CHECK(m.specialize(PiLaurent::pi()) == -m.field()->one());

    // random-ish additivity/multiplicativity sweep, all contexts ell <= 8
    std::vector<PiLaurent> samples;
    for (long i = 0; i < 6; ++i) {
        PiLaurent s = PiLaurent::pi_q(i, -i) + PiLaurent::pi_q(i + 1, 2 * i - 3);
        samples.push_back(s * s + PiLaurent(i));
    }
    for (long ell = 1; ell <= 8; ++ell) {
        for (int pi : {1, -1}) {
            RootContext c(ell, EllPrimeChoice::Default, pi);
            for (size_t i = 0; i < samples.size(); ++i) {
                for (size_t j = i; j < samples.size(); ++j) {
                    CHECK(c.specialize(samples[i] * samples[j])
                          == c.specialize(samples[i]) * c.specialize(samples[j]));
                    CHECK(c.specialize(samples[i] + samples[j])
                          == c.specialize(samples[i]) + c.specialize(samples[j]));
                }
            }
        }
    }
}

TEST_CASE("(pi q~^2)^(2 ell) = 1 in every context") {
    for (long ell = 1; ell <= 8; ++ell) {
        for (int pi : {1, -1}) {
            for (auto choice : {EllPrimeChoice::Default, EllPrimeChoice::Ell}) {
                if (choice == EllPrimeChoice::Ell && ell % 2 == 0) continue;
                RootContext c(ell, choice, pi);
                Cyc w = c.q_tilde() * c.q_tilde();
                if (pi == -1) w = -w;
                CHECK(w.pow(2 * ell) == c.field()->one());
            }
        }
    }
}
