#include "cyclodet/ortho.hpp"

#include "cyclodet/errors.hpp"
#include <doctest.h>

#include <vector>

using namespace cyclodet;

namespace {

const Rational kHalf(1, 2);

// Term-by-term evaluation of the Wilson sum at X = x^2, no incremental
// ratios: every Pochhammer is recomputed from scratch.
Cyclotomic direct_wilson_value(int n, const Cyclotomic& a1, const Cyclotomic& a2,
                               const Cyclotomic& a3, const Cyclotomic& a4,
                               const Cyclotomic& X) {
    const Cyclotomic s = a1 + a2 + a3 + a4;
    Cyclotomic sum;
    for (int k = 0; k <= n; ++k) {
        Cyclotomic quad = 1;
        for (int j = 0; j < k; ++j) {
            const Cyclotomic aj = a1 + Cyclotomic(j);
            quad *= aj * aj + X;
        }
        Cyclotomic term = pochhammer(Cyclotomic(-n), k) * pochhammer(s + Cyclotomic(n - 1), k) * quad;
        term /= pochhammer(a1 + a2, k) * pochhammer(a1 + a3, k) * pochhammer(a1 + a4, k) *
                Cyclotomic(rat_factorial(k));
        sum += term;
    }
    return pochhammer(a1 + a2, n) * pochhammer(a1 + a3, n) * pochhammer(a1 + a4, n) * sum;
}

Cyclotomic direct_cdh_value(int n, const Cyclotomic& a1, const Cyclotomic& a2,
                            const Cyclotomic& a3, const Cyclotomic& X) {
    Cyclotomic sum;
    for (int k = 0; k <= n; ++k) {
        Cyclotomic quad = 1;
        for (int j = 0; j < k; ++j) {
            const Cyclotomic aj = a1 + Cyclotomic(j);
            quad *= aj * aj + X;
        }
        Cyclotomic term = pochhammer(Cyclotomic(-n), k) * quad;
        term /= pochhammer(a1 + a2, k) * pochhammer(a1 + a3, k) * Cyclotomic(rat_factorial(k));
        sum += term;
    }
    return pochhammer(a1 + a2, n) * pochhammer(a1 + a3, n) * sum;
}

Cyclotomic direct_mp_value(int n, const Rational& lambda, int phase, const Cyclotomic& x0) {
    const Rational two_lambda(2 * lambda);
    const Cyclotomic w = Cyclotomic(1) - Cyclotomic::zeta(-2L * phase);
    Cyclotomic sum;
    for (int k = 0; k <= n; ++k) {
        Cyclotomic lin = 1;
        for (int l = 0; l < k; ++l) lin *= Cyclotomic(Rational(lambda + l)) + Cyclotomic::i() * x0;
        Cyclotomic term = pochhammer(Cyclotomic(Rational(-n)), k) * lin * w.pow(k);
        term /= Cyclotomic(pochhammer(two_lambda, k)) * Cyclotomic(rat_factorial(k));
        sum += term;
    }
    return Cyclotomic(Rational(pochhammer(two_lambda, n) / rat_factorial(n))) *
           Cyclotomic::zeta(static_cast<long>(n) * phase) * sum;
}

// (pen) and (pon): the interleaved norms for the weight split by cosh.
Cyclotomic h0_even(int n, const Rational& b) {
    Rational v = rat_factorial(n) * pochhammer(Rational(b / 2), n) *
                 pochhammer(Rational(b / 2), 3 * n) * pochhammer(Rational(b + 1), 3 * n);
    v /= rat_pow(3, 6 * n) * pochhammer(Rational(b / 2), 2 * n) *
         pochhammer(Rational(b / 2 + 1), 2 * n);
    return Cyclotomic(v);
}

Cyclotomic h0_odd(int n, const Rational& b) {
    Rational v = Rational(b * (b + 4)) / 4;
    v *= rat_factorial(n) * pochhammer(Rational(b / 2 + 1), n) *
         pochhammer(Rational(b / 2 + 3), 3 * n) * pochhammer(Rational(b + 1), 3 * n);
    v /= rat_pow(3, 6 * n + 3) * pochhammer(Rational(b / 2 + 1), 2 * n) *
         pochhammer(Rational(b / 2 + 2), 2 * n);
    return Cyclotomic(v);
}

// Monic interleaved family for that weight, as polynomials in x.
Poly p0_poly(int k, const Rational& b) {
    const int n = k / 2;
    const Cyclotomic b6 = Cyclotomic(Rational(b / 6));
    const Cyclotomic third = Cyclotomic::ratio(1, 3);
    if (k % 2 == 0) {
        Poly w = wilson(n, Cyclotomic(0), b6, b6 + third, b6 + third + third);
        Cyclotomic scale = pochhammer(Cyclotomic(Rational(b / 2)) + Cyclotomic(n), n).inverse();
        if (n % 2) scale = -scale;
        return (w * scale).compose_square();
    }
    Poly w = wilson(n, Cyclotomic(1), b6, b6 + third, b6 + third + third);
    Cyclotomic scale = pochhammer(Cyclotomic(Rational(b / 2)) + Cyclotomic(n + 1), n).inverse();
    if (n % 2) scale = -scale;
    return (w * scale).compose_square().times_var(1);
}

} // namespace

TEST_CASE("wilson basics") {
    Poly w0 = wilson(0, Cyclotomic(0), Cyclotomic(1), Cyclotomic(2), Cyclotomic(3));
    CHECK(w0 == Poly::constant(Var::XSq, Cyclotomic(1)));

    // W_1(X; 0,1,1,1) = 1 - 3X
    Poly w1 = wilson(1, Cyclotomic(0), Cyclotomic(1), Cyclotomic(1), Cyclotomic(1));
    CHECK(w1.degree() == 1);
    CHECK(w1.var() == Var::XSq);
    CHECK(w1.eval(Cyclotomic(4)) == Cyclotomic(-11));
    CHECK(w1.eval(Cyclotomic(4)) ==
          direct_wilson_value(1, Cyclotomic(0), Cyclotomic(1), Cyclotomic(1), Cyclotomic(1),
                              Cyclotomic(4)));
}

TEST_CASE("wilson leading coefficient is (-1)^n (s+n-1)_n") {
    // parameters (0, b/6, b/6+1/3, b/6+2/3) at b = 2
    const Cyclotomic a1(0), a2 = Cyclotomic::ratio(1, 3), a3 = Cyclotomic::ratio(2, 3), a4(1);
    const Cyclotomic s = a1 + a2 + a3 + a4;
    for (int n = 0; n <= 8; ++n) {
        Poly w = wilson(n, a1, a2, a3, a4);
        CHECK(w.degree() == n);
        Cyclotomic lead = pochhammer(s + Cyclotomic(n - 1), n);
        if (n % 2) lead = -lead;
        CHECK(w.leading() == lead);
    }
}

TEST_CASE("wilson matches the direct sum on generic arguments") {
    struct Params {
        Rational a1, a2, a3, a4;
    };
    const Params grid[] = {
        {Rational(1, 5), Rational(1, 3), Rational(1, 2), Rational(2)},
        {Rational(0), Rational(1, 3), Rational(2, 3), Rational(1)},
        {Rational(-1, 7), Rational(3, 4), Rational(5, 3), Rational(1, 2)},
    };
    const Cyclotomic points[] = {Cyclotomic(4), Cyclotomic::ratio(-2, 3)};
    for (const auto& g : grid) {
        const Cyclotomic a1(g.a1), a2(g.a2), a3(g.a3), a4(g.a4);
        for (int n = 1; n <= 5; ++n) {
            Poly w = wilson(n, a1, a2, a3, a4);
            for (const Cyclotomic& X : points)
                CHECK(w.eval(X) == direct_wilson_value(n, a1, a2, a3, a4, X));
        }
    }
}

TEST_CASE("wilson norm closed form") {
    CHECK(wilson_norm(0, Cyclotomic(0), Cyclotomic::ratio(1, 3), Cyclotomic::ratio(2, 3),
                      Cyclotomic(1)) == Cyclotomic(1));

    // The interleaved norms: h_{2n} = h^W_n(0, b/6, b/6+1/3, b/6+2/3) / ((b/2+n)_n)^2
    // and h_{2n+1} = [b(b+4)/108] h^W_n(1, ...) / ((b/2+n+1)_n)^2.
    for (const Rational& b : {Rational(2), Rational(7, 3)}) {
        const Cyclotomic b6 = Cyclotomic(Rational(b / 6));
        const Cyclotomic third = Cyclotomic::ratio(1, 3);
        for (int n = 0; n <= 3; ++n) {
            Cyclotomic den = pochhammer(Cyclotomic(Rational(b / 2)) + Cyclotomic(n), n);
            Cyclotomic lhs = wilson_norm(n, Cyclotomic(0), b6, b6 + third, b6 + third + third) /
                             (den * den);
            CHECK(lhs == h0_even(n, b));

            Cyclotomic deno = pochhammer(Cyclotomic(Rational(b / 2)) + Cyclotomic(n + 1), n);
            Cyclotomic pref = Cyclotomic(Rational(b * (b + 4) / 108));
            Cyclotomic lhso = pref *
                              wilson_norm(n, Cyclotomic(1), b6, b6 + third, b6 + third + third) /
                              (deno * deno);
            CHECK(lhso == h0_odd(n, b));
        }
    }
}

TEST_CASE("continuous dual Hahn basics") {
    CHECK(cdh(0, Cyclotomic(0), Cyclotomic(kHalf), Cyclotomic(1)) ==
          Poly::constant(Var::XSq, Cyclotomic(1)));

    const Cyclotomic a1(0), a2(kHalf), a3(1);
    for (int n = 0; n <= 8; ++n) {
        Poly s = cdh(n, a1, a2, a3);
        CHECK(s.degree() == n);
        CHECK(s.leading() == (n % 2 ? Cyclotomic(-1) : Cyclotomic(1)));
    }

    CHECK(cdh(2, a1, a2, a3).eval(Cyclotomic(1)) == direct_cdh_value(2, a1, a2, a3, Cyclotomic(1)));

    // h_2 = 2! (1/2)_2 (1)_2 (3/2)_2 = 45/4
    CHECK(cdh_norm(2, a1, a2, a3) == Cyclotomic(Rational(45, 4)));
    CHECK(cdh_norm(2, a1, a2, a3) ==
          Cyclotomic(rat_factorial(2)) * pochhammer(a1 + a2, 2) * pochhammer(a1 + a3, 2) *
              pochhammer(a2 + a3, 2));
}

TEST_CASE("meixner-pollaczek basics") {
    CHECK(mp(0, Rational(1), 8) == Poly::constant(Var::X, Cyclotomic(1)));
    CHECK(mp_norm(3, Rational(1)) == Cyclotomic(4));

    // leading coefficient (2 sin phi)^n / n! at phi = pi/2 +- pi/6, lambda = 3/2
    const Rational lam(3, 2);
    for (int phase : {8, 4}) {
        for (int n = 0; n <= 8; ++n) {
            Poly p = mp(n, lam, phase);
            CHECK(p.degree() == n);
            CHECK(p.leading() == two_sin(phase).pow(n) / Cyclotomic(rat_factorial(n)));
        }
    }

    // direct sum oracle at a rational point
    const Cyclotomic x0 = Cyclotomic::ratio(2, 3);
    for (int n = 0; n <= 5; ++n)
        CHECK(mp(n, lam, 8).eval(x0) == direct_mp_value(n, lam, 8, x0));
}

TEST_CASE("rescaled MP polynomials are monic") {
    // (n!/3^{3n/2}) P_n^{(b/2)}(3x, pi/2 +- pi/6) at b = 3
    const Rational lam(3, 2);
    for (int phase : {8, 4}) {
        for (int n = 0; n <= 8; ++n) {
            Poly p = mp(n, lam, phase).scale_arg(Cyclotomic(3));
            p *= Cyclotomic(rat_factorial(n)) * Cyclotomic::sqrt3_pow(-3L * n);
            CHECK(p.degree() == n);
            CHECK(p.leading() == Cyclotomic(1));
        }
    }
}

TEST_CASE("MP connection identity") {
    CHECK(mp_connection_check(0, Rational(1), 2));
    for (const Rational& lam : {Rational(1, 2), Rational(1), Rational(3, 2)}) {
        for (int phase : {2, 3}) {
            for (int n = 0; n <= 10; ++n) CHECK(mp_connection_check(n, lam, phase));
        }
    }
}

TEST_CASE("askey-wilson basics") {
    const Cyclotomic a1 = Cyclotomic::ratio(2, 3), a2 = Cyclotomic::ratio(1, 3),
                     a3 = Cyclotomic::ratio(1, 2), a4 = Cyclotomic::ratio(1, 5),
                     q = Cyclotomic::ratio(1, 3);
    CHECK(askey_wilson(0, a1, a2, a3, a4, q) == LaurentPoly(Cyclotomic(1)));

    const Cyclotomic A = a1 * a2 * a3 * a4;
    for (int n = 0; n <= 6; ++n) {
        LaurentPoly p = askey_wilson(n, a1, a2, a3, a4, q);
        CHECK(p.max_exp() == n);
        CHECK(p.min_exp() == -n);
        CHECK(p == p.invert_z());
        CHECK(p.coeff(n) == q_pochhammer(A * q.pow(n - 1), q, n));
    }
}

TEST_CASE("askey-wilson agrees with the basic hypergeometric kernel") {
    const Cyclotomic a1(1), a2 = Cyclotomic::ratio(1, 3), a3 = Cyclotomic::ratio(1, 2),
                     a4 = Cyclotomic::ratio(1, 5), q = Cyclotomic::ratio(2, 5);
    const Cyclotomic A = a1 * a2 * a3 * a4;
    const Cyclotomic z0(2);
    for (int n = 0; n <= 5; ++n) {
        QHypSpec spec;
        spec.num = {q.pow(-n), A * q.pow(n - 1), a1 * z0, a1 / z0};
        spec.den = {a1 * a2, a1 * a3, a1 * a4};
        spec.q = q;
        spec.z = q;
        spec.termination = n;
        Cyclotomic expected = q_pochhammer(a1 * a2, q, n) * q_pochhammer(a1 * a3, q, n) *
                              q_pochhammer(a1 * a4, q, n) * a1.pow(-n) * qhyp_terminating(spec);
        CHECK(askey_wilson(n, a1, a2, a3, a4, q).eval_field(z0) == expected);
    }
}

TEST_CASE("pastro laurent polynomials") {
    const Cyclotomic om = Cyclotomic::omega();
    const Cyclotomic b = Cyclotomic::ratio(1, 3), q = Cyclotomic::ratio(1, 2);

    auto [p0, c0] = pastro(0, om, b, q);
    CHECK(p0 == LaurentPoly(Cyclotomic(1)));
    CHECK(c0 == Cyclotomic(1));

    for (int n = 0; n <= 8; ++n) {
        auto [p, C] = pastro(n, om, b, q);
        if (n % 2 == 0) CHECK(C == Cyclotomic(1));
        CHECK(!C.is_zero());
        LaurentPoly monic = p * C.inverse();
        CHECK(monic.is_monic_laurent(n));
    }
}

TEST_CASE("pastro matches the basic hypergeometric kernel") {
    const Cyclotomic om = Cyclotomic::omega();
    const Cyclotomic b = Cyclotomic::ratio(1, 3), q = Cyclotomic::ratio(1, 2);
    const Cyclotomic z0(2);
    for (int n = 0; n <= 5; ++n) {
        QHypSpec spec;
        spec.num = {q.pow(-n), b / om};
        spec.den = {q.pow(1 - n) / (om * b)};
        spec.q = q;
        spec.z = q * z0 / b;
        spec.termination = n;
        Cyclotomic expected = qhyp_terminating(spec);
        CHECK(pastro(n, om, b, q).first.eval_field(z0) * z0.pow(n / 2) == expected);
    }
}

TEST_CASE("pastro norm and pairing degenerate values") {
    const Cyclotomic om = Cyclotomic::omega();
    const Cyclotomic b = Cyclotomic::ratio(1, 3), q = Cyclotomic::ratio(1, 2);
    CHECK(pastro_norm(0, om, b, q) == Cyclotomic(1));
    CHECK(pastro_pairing(0, 0, om, om * om, b, q) == Cyclotomic(1));
}

TEST_CASE("interleaved circle family") {
    const Cyclotomic b = Cyclotomic::ratio(1, 3), q = Cyclotomic::ratio(1, 2);

    auto [p0, h0] = laurent_p0(0, b, q);
    CHECK(p0 == LaurentPoly(Cyclotomic(1)));
    CHECK(h0 == Cyclotomic(1));

    for (int k = 0; k <= 6; ++k) {
        auto [p, h] = laurent_p0(k, b, q);
        CHECK(p.is_monic_laurent(k));
        CHECK(!h.is_zero());
    }

    // even indexes are symmetric, odd ones satisfy p(1/z) = -p(z)/z
    for (int k = 0; k <= 7; ++k) {
        LaurentPoly p = laurent_p0(k, b, q).first;
        if (k % 2 == 0) {
            CHECK(p == p.invert_z());
        } else {
            CHECK(p.invert_z() == -(p.shifted(-1)));
            CHECK(p.eval_field(Cyclotomic(1)).is_zero());
        }
    }
}

TEST_CASE("even family collapses to a single term at x = ib/6") {
    // p0_{2n}(ib/6) = (-1)^n (b/6)_n (b/3+1/3)_n (b/3+2/3)_n / (b/2+n)_n, b = 2
    const Rational b(2);
    const Cyclotomic a = Cyclotomic::i() * Cyclotomic(Rational(b / 6));
    for (int n = 0; n <= 4; ++n) {
        Cyclotomic lhs = p0_poly(2 * n, b).eval(a);
        Cyclotomic rhs = pochhammer(Cyclotomic(Rational(b / 6)), n) *
                         pochhammer(Cyclotomic(Rational(b / 3 + Rational(1, 3))), n) *
                         pochhammer(Cyclotomic(Rational(b / 3 + Rational(2, 3))), n) /
                         pochhammer(Cyclotomic(Rational(b / 2)) + Cyclotomic(n), n);
        if (n % 2) rhs = -rhs;
        CHECK(lhs == rhs);
    }
}

TEST_CASE("christoffel transform, simplest case") {
    std::vector<Poly> p = {Poly::constant(Var::X, Cyclotomic(1)),
                           Poly(Var::X, {Cyclotomic(0), Cyclotomic(1)})};
    std::vector<Cyclotomic> h = {Cyclotomic(5)};
    auto [pt, ht] = christoffel(p, h, Cyclotomic(1));
    REQUIRE(pt.size() == 1);
    CHECK(pt[0] == Poly::constant(Var::X, Cyclotomic(1)));
    CHECK(ht[0] == Cyclotomic(-5));

    std::vector<Poly> bad = {Poly(Var::X, {Cyclotomic(-1), Cyclotomic(1)}),
                             Poly(Var::X, {Cyclotomic(0), Cyclotomic(0), Cyclotomic(1)})};
    CHECK_THROWS_AS(christoffel(bad, h, Cyclotomic(1)), ZeroAtNode);
}

TEST_CASE("christoffel at ib/6 reproduces the shifted-weight norms") {
    const Rational b(2);
    std::vector<Poly> p;
    std::vector<Cyclotomic> h;
    for (int k = 0; k <= 4; ++k) {
        p.push_back(p0_poly(k, b));
        CHECK(p.back().degree() == k);
        CHECK(p.back().leading() == Cyclotomic(1));
    }
    for (int k = 0; k <= 3; ++k)
        h.push_back(k % 2 ? h0_odd(k / 2, b) : h0_even(k / 2, b));

    const Cyclotomic a = Cyclotomic::i() * Cyclotomic(Rational(b / 6));
    auto [pt, ht] = christoffel(p, h, a);
    REQUIRE(ht.size() == 4);

    const Cyclotomic mult = Cyclotomic(3) * Cyclotomic::i();
    for (int k = 0; k <= 3; ++k) {
        Cyclotomic expected;
        if (k % 2 == 0) {
            int n = k / 2;
            Rational v = Rational(b / 2) * rat_factorial(n) * pochhammer(Rational(b / 2 + 1), n) *
                         pochhammer(Rational(b / 2 + 1), 3 * n) * pochhammer(Rational(b + 1), 3 * n);
            Rational den = rat_pow(3, 6 * n) * pochhammer(Rational(b / 2 + 1), 2 * n) *
                           pochhammer(Rational(b / 2 + 1), 2 * n);
            expected = Cyclotomic(Rational(v / den));
        } else {
            int n = k / 2;
            Rational v = Rational(b * (b + 1) * (b + 4)) / 2;
            v *= rat_factorial(n) * pochhammer(Rational(b / 2 + 1), n) *
                 pochhammer(Rational(b / 2 + 3), 3 * n) * pochhammer(Rational(b + 3), 3 * n);
            Rational den = rat_pow(3, 6 * n + 4) * pochhammer(Rational(b / 2 + 2), 2 * n) *
                           pochhammer(Rational(b / 2 + 2), 2 * n);
            expected = Cyclotomic(Rational(v / den));
        }
        CHECK(mult * ht[static_cast<std::size_t>(k)] == expected);
        // the transformed family stays monic
        CHECK(pt[static_cast<std::size_t>(k)].leading() == Cyclotomic(1));
        CHECK(pt[static_cast<std::size_t>(k)].degree() == k);
    }
}
