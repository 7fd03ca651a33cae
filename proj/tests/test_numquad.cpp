#include "cyclodet/numquad.hpp"

#include "cyclodet/errors.hpp"
#include <doctest.h>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

using namespace cyclodet;

namespace {

using cdbl = std::complex<double>;

const double kPi = 3.141592653589793238462643383279502884;

Rational rat(long num, long den) { return Rational(Rational(num) / Rational(den)); }

WeightSpec row(int k, int l, int delta, int epsilon, double b) {
    WeightSpec s;
    s.k = k;
    s.l = l;
    s.delta = delta;
    s.epsilon = epsilon;
    s.b = b;
    return s;
}

const std::vector<WeightSpec> nine_rows(double b) {
    return {row(1, 3, 0, 0, b), row(1, 3, 0, 1, b), row(1, 3, 1, 1, b),
            row(1, 3, 1, 0, b), row(1, 2, 0, 0, b), row(1, 2, 1, 1, b),
            row(1, 2, 1, 0, b), row(2, 3, 1, 1, b), row(2, 3, 1, 0, b)};
}

} // namespace

TEST_CASE("log gamma hits the classical values") {
    CHECK(std::abs(gamma_abs2(0.5, 0.0) - kPi) < 1.0e-12);
    CHECK(std::abs(gamma_fn(cdbl(5.0, 0.0)) - 24.0) < 1.0e-10);
    CHECK(std::abs(gamma_fn(cdbl(0.5, 0.0)) - std::sqrt(kPi)) < 1.0e-13);
    // Gamma(1/2 + ix) Gamma(1/2 - ix) = pi / cosh(pi x)
    for (double x : {0.4, 1.3, 2.9}) {
        CHECK(std::abs(gamma_abs2(0.5, x) - kPi / std::cosh(kPi * x)) <
              1.0e-12 * gamma_abs2(0.5, x) + 1.0e-15);
    }
}

TEST_CASE("log gamma satisfies the duplication formula") {
    for (double x : {0.3, 1.7}) {
        const cdbl lhs = std::sqrt(2.0 * kPi) * gamma_fn(cdbl(2.0 * x, 0.0));
        const cdbl rhs = std::pow(2.0, 2.0 * x - 0.5) * gamma_fn(cdbl(x, 0.0)) *
                         gamma_fn(cdbl(x + 0.5, 0.0));
        CHECK(std::abs(lhs - rhs) / std::abs(lhs) < 1.0e-10);
    }
    // and the triplication formula, off the real axis for good measure
    for (cdbl z : {cdbl(0.4, 0.0), cdbl(0.7, 1.1)}) {
        const cdbl lhs = 2.0 * kPi * gamma_fn(3.0 * z);
        const cdbl rhs = std::pow(cdbl(3.0, 0.0), 3.0 * z - 0.5) * gamma_fn(z) *
                         gamma_fn(z + 1.0 / 3.0) * gamma_fn(z + 2.0 / 3.0);
        CHECK(std::abs(lhs - rhs) / std::abs(lhs) < 1.0e-10);
    }
}

TEST_CASE("log gamma refuses nonpositive integers") {
    CHECK_THROWS_AS(log_gamma(cdbl(0.0, 0.0)), PoleError);
    CHECK_THROWS_AS(log_gamma(cdbl(-1.0, 0.0)), PoleError);
    CHECK_THROWS_AS(log_gamma(cdbl(-7.0, 0.0)), PoleError);
    CHECK_NOTHROW(log_gamma(cdbl(-0.5, 0.0)));
    CHECK_NOTHROW(log_gamma(cdbl(-3.0, 0.2)));
}

TEST_CASE("weight rows split as w0 = w1 + w-1") {
    const std::vector<double> xs = {0.1, 0.7, 2.3, -1.3};
    for (double b : {2.0, 0.7}) {
        for (const WeightSpec& s : nine_rows(b)) {
            CAPTURE(s.k);
            CAPTURE(s.l);
            CAPTURE(s.delta);
            CAPTURE(s.epsilon);
            CHECK(check_weight_split(s, xs));
        }
    }
    CHECK(check_weight_split(row(1, 3, 0, 0, 2.0), {0.1, 0.7, 2.3}));
    CHECK(check_weight_split(row(1, 3, 1, 0, 2.0), {0.1, 0.7, 2.3}));
}

TEST_CASE("weight template rejects parameters off the table") {
    CHECK_THROWS_AS(weight_front(row(3, 3, 0, 0, 2.0)), std::invalid_argument);
    CHECK_THROWS_AS(weight_front(row(1, 2, 0, 1, 2.0)), std::invalid_argument);
    CHECK_THROWS_AS(weight_front(row(1, 3, 0, 0, -1.0)), std::invalid_argument);
    WeightSpec bad = row(1, 3, 0, 0, 2.0);
    bad.sign = 2;
    CHECK_THROWS_AS(weight_side(bad, 0.5), std::invalid_argument);
}

TEST_CASE("the cosh weight rewrites as a normalized Wilson weight") {
    CHECK(check_wilson_rewrite(2.0, 0.5));
    for (double x : {0.1, 1.2, 3.4}) {
        CHECK(check_wilson_rewrite(2.0, x));
        CHECK(check_wilson_rewrite(0.8, x));
    }
}

TEST_CASE("both cosh rows carry total mass one") {
    const QuadResult a = weight_mass(row(1, 3, 0, 0, 2.0), 1.0e-10);
    CHECK(std::abs(a.value - 1.0) < 1.0e-8);
    CHECK(std::abs(a.value.imag()) < 1.0e-12);
    const QuadResult h = weight_mass(row(1, 2, 0, 0, 2.0), 1.0e-10);
    CHECK(std::abs(h.value - 1.0) < 1.0e-8);
    const QuadResult f = weight_mass(row(1, 2, 0, 0, 0.7), 1.0e-10);
    CHECK(std::abs(f.value - 1.0) < 1.0e-8);
    CHECK_THROWS_AS(weight_mass(row(1, 3, 1, 0, 2.0), 1.0e-10), std::invalid_argument);
}

TEST_CASE("integrate_line guards its inputs") {
    const auto f = [](double x) { return cdbl(std::exp(-x * x), 0.0); };
    DecayHint none;
    CHECK_THROWS_AS(integrate_line(f, none, 1.0e-10), std::invalid_argument);
    DecayHint feeble;
    feeble.rate = 0.01;
    CHECK_THROWS_AS(integrate_line(f, feeble, 1.0e-12), NoConvergence);
    DecayHint fine;
    fine.rate = 1.0;
    CHECK_THROWS_AS(integrate_line(f, fine, -1.0), std::invalid_argument);
    const QuadResult g = integrate_line(f, fine, 1.0e-10);
    CHECK(std::abs(g.value - std::sqrt(kPi)) < 1.0e-10);
}

TEST_CASE("wilson pairings at the a1 = 0 corner match the closed norms") {
    const double a[4] = {0.0, 1.0 / 3.0, 2.0 / 3.0, 1.0};
    for (int m = 0; m <= 3; ++m) {
        for (int n = m; n <= 3; ++n) {
            const QuadResult r = wilson_pairing(m, n, a[0], a[1], a[2], a[3]);
            const double want = m == n ? wilson_h(n, a[0], a[1], a[2], a[3]) : 0.0;
            const double scale =
                std::max(wilson_h(m, a[0], a[1], a[2], a[3]), wilson_h(n, a[0], a[1], a[2], a[3]));
            CAPTURE(m);
            CAPTURE(n);
            CHECK(std::abs(r.value - want) / scale < 1.0e-7);
            CHECK(std::abs(r.value.imag()) < 1.0e-12);
        }
    }
    // the spec'd cross integral, against the h1 scale
    const QuadResult cross = wilson_pairing(0, 1, a[0], a[1], a[2], a[3]);
    CHECK(std::abs(cross.value) < 1.0e-8 * wilson_h(1, a[0], a[1], a[2], a[3]));
}

TEST_CASE("wilson pairings at a generic positive point") {
    for (int m = 0; m <= 3; ++m) {
        for (int n = m; n <= 3; ++n) {
            const QuadResult r = wilson_pairing(m, n, 0.5, 0.6, 0.7, 0.8);
            const double want = m == n ? wilson_h(n, 0.5, 0.6, 0.7, 0.8) : 0.0;
            const double scale =
                std::max(wilson_h(m, 0.5, 0.6, 0.7, 0.8), wilson_h(n, 0.5, 0.6, 0.7, 0.8));
            CHECK(std::abs(r.value - want) / scale < 1.0e-7);
        }
    }
}

TEST_CASE("dual hahn pairings match the closed norms") {
    // the (1,2,0,0) instance at b = 2 has parameters (0, 1/2, 1)
    const double edge[3] = {0.0, 0.5, 1.0};
    const double generic[3] = {0.4, 0.7, 1.1};
    for (const double* a : {edge, generic}) {
        for (int m = 0; m <= 3; ++m) {
            for (int n = m; n <= 3; ++n) {
                const QuadResult r = cdh_pairing(m, n, a[0], a[1], a[2]);
                const double want = m == n ? cdh_h(n, a[0], a[1], a[2]) : 0.0;
                const double scale = std::max(cdh_h(m, a[0], a[1], a[2]), cdh_h(n, a[0], a[1], a[2]));
                CAPTURE(m);
                CAPTURE(n);
                CHECK(std::abs(r.value - want) / scale < 1.0e-7);
            }
        }
    }
}

TEST_CASE("meixner-pollaczek pairings match the closed norms") {
    const double phi = 2.0 * kPi / 3.0;
    const QuadResult two = mp_pairing(2, 2, 1.0, phi);
    CHECK(std::abs(two.value - 3.0) < 1.0e-8);
    for (int m = 0; m <= 3; ++m) {
        for (int n = m; n <= 3; ++n) {
            const QuadResult r = mp_pairing(m, n, 1.0, phi);
            const double want = m == n ? mp_h(n, 1.0) : 0.0;
            const double scale = std::max(mp_h(m, 1.0), mp_h(n, 1.0));
            CHECK(std::abs(r.value - want) / scale < 1.0e-7);
        }
    }
    const QuadResult q = mp_pairing(3, 3, 1.5, kPi / 4.0);
    CHECK(std::abs(q.value - mp_h(3, 1.5)) / mp_h(3, 1.5) < 1.0e-7);
    CHECK_THROWS_AS(mp_pairing(0, 0, 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(mp_pairing(0, 0, -1.0, 0.5), std::invalid_argument);
}

TEST_CASE("askey-wilson pairings at the a1 = 1 corner match the closed norms") {
    const cdbl a1(1.0, 0.0), a2(0.3, 0.0), a3(0.2, 0.0), a4(0.1, 0.0), q(0.4, 0.0);
    const QuadResult cross = aw_pairing(0, 1, a1, a2, a3, a4, q);
    CHECK(std::abs(cross.value) < 1.0e-8 * std::abs(aw_h(1, a1, a2, a3, a4, q)));
    for (int m = 0; m <= 3; ++m) {
        for (int n = m; n <= 3; ++n) {
            const QuadResult r = aw_pairing(m, n, a1, a2, a3, a4, q);
            const cdbl want = m == n ? aw_h(n, a1, a2, a3, a4, q) : cdbl(0.0, 0.0);
            const double scale = std::max(std::abs(aw_h(m, a1, a2, a3, a4, q)),
                                          std::abs(aw_h(n, a1, a2, a3, a4, q)));
            CAPTURE(m);
            CAPTURE(n);
            CHECK(std::abs(r.value - want) / scale < 1.0e-7);
        }
    }
}

TEST_CASE("askey-wilson pairings at a generic interior point") {
    const cdbl a1(0.5, 0.0), a2(0.3, 0.0), a3(-0.2, 0.0), a4(0.1, 0.0), q(0.3, 0.0);
    for (int m = 0; m <= 2; ++m) {
        for (int n = m; n <= 2; ++n) {
            const QuadResult r = aw_pairing(m, n, a1, a2, a3, a4, q);
            const cdbl want = m == n ? aw_h(n, a1, a2, a3, a4, q) : cdbl(0.0, 0.0);
            const double scale = std::max(std::abs(aw_h(m, a1, a2, a3, a4, q)),
                                          std::abs(aw_h(n, a1, a2, a3, a4, q)));
            CHECK(std::abs(r.value - want) / scale < 1.0e-7);
        }
    }
}

TEST_CASE("infinite q-factorials truncate where double precision ends") {
    CHECK(std::abs(qpoch_inf(cdbl(0.0, 0.0), cdbl(0.5, 0.0)) - 1.0) == 0.0);
    const cdbl a(0.7, 0.2), q(0.6, -0.1);
    CHECK(std::abs(qpoch_inf(a, q) - qpoch_fin(a, q, 300)) < 1.0e-15);
    CHECK_THROWS_AS(qpoch_inf(cdbl(0.5, 0.0), cdbl(1.0, 0.0)), std::domain_error);
}

TEST_CASE("double-precision families agree with the exact constructions") {
    const Cyclotomic third = Cyclotomic::ratio(1, 3);
    for (int n = 0; n <= 4; ++n) {
        const Poly w = wilson(n, Cyclotomic(0), third, third * 2, Cyclotomic(1));
        const Poly s = cdh(n, Cyclotomic(0), Cyclotomic::ratio(1, 2), Cyclotomic(1));
        for (double y : {0.25, 2.0}) {
            const cdbl we = poly_eval_c(w, cdbl(y, 0.0));
            CHECK(std::abs(we - wilson_eval(n, y, 0.0, 1.0 / 3.0, 2.0 / 3.0, 1.0)) <
                  1.0e-10 * (1.0 + std::abs(we)));
            const cdbl se = poly_eval_c(s, cdbl(y, 0.0));
            CHECK(std::abs(se - cdh_eval(n, y, 0.0, 0.5, 1.0)) < 1.0e-10 * (1.0 + std::abs(se)));
        }
        const LaurentPoly p = askey_wilson(n, Cyclotomic(1), Cyclotomic::ratio(3, 10),
                                           Cyclotomic::ratio(1, 5), Cyclotomic::ratio(1, 10),
                                           Cyclotomic::ratio(2, 5));
        for (double th : {0.3, 2.1}) {
            const cdbl z = std::polar(1.0, th);
            const cdbl pe = p.eval(z);
            const cdbl pd = aw_eval(n, z, cdbl(1.0, 0.0), cdbl(0.3, 0.0), cdbl(0.2, 0.0),
                                    cdbl(0.1, 0.0), cdbl(0.4, 0.0));
            CHECK(std::abs(pe - pd) < 1.0e-10 * (1.0 + std::abs(pe)));
        }
    }
    // closed norms against the exact norm formulas
    for (int n = 0; n <= 4; ++n) {
        const cdbl hw =
            wilson_norm(n, Cyclotomic(0), third, third * 2, Cyclotomic(1)).to_complex();
        CHECK(std::abs(hw - wilson_h(n, 0.0, 1.0 / 3.0, 2.0 / 3.0, 1.0)) <
              1.0e-10 * std::abs(hw));
        const cdbl hs =
            cdh_norm(n, Cyclotomic(0), Cyclotomic::ratio(1, 2), Cyclotomic(1)).to_complex();
        CHECK(std::abs(hs - cdh_h(n, 0.0, 0.5, 1.0)) < 1.0e-10 * std::abs(hs));
        const cdbl hm = Cyclotomic(mp_norm(n, rat(3, 2))).to_complex();
        CHECK(std::abs(hm - mp_h(n, 1.5)) < 1.0e-12 * std::abs(hm));
    }
}

TEST_CASE("exact meixner-pollaczek coefficients embed onto the double path") {
    // e^{i phi} = zeta^8 is phi = 2 pi / 3
    const double phi = 2.0 * kPi / 3.0;
    for (int n = 0; n <= 6; ++n) {
        for (const Rational& lam : {Rational(1), rat(1, 2), rat(3, 2)}) {
            const Poly p = mp(n, lam, 8);
            for (double x : {0.3, 1.7, -2.2, 0.05}) {
                const cdbl exact = poly_eval_c(p, cdbl(x, 0.0));
                const cdbl direct = mp_eval(n, cdbl(x, 0.0), lam.get_d(), phi);
                CAPTURE(n);
                CAPTURE(x);
                CHECK(std::abs(exact - direct) < 1.0e-10 * (1.0 + std::abs(exact)));
            }
        }
    }
}

TEST_CASE("shifted meixner-pollaczek pairings match the lemma displays") {
    const double phi = kPi / 6.0;
    // diagonal (rmo) value at m = n = 2
    const auto [same, cross] = check_mml(1.0, 3.0, phi, 2, 2);
    const cdbl diag = std::exp(cdbl(0.0, phi)) * 2.0 * 6.0 /
                      std::pow(6.0 * std::cos(phi), 4.0);
    CHECK(std::abs(same.value - diag) < 1.0e-8);
    CHECK(same.est_error < 1.0e-8);
    // (rme) value at m = n = 1: the 2F1 argument 1/(4 sin^2 phi) is 1
    const auto [d1, x1] = check_mml(1.0, 3.0, phi, 1, 1);
    const cdbl off = std::exp(cdbl(0.0, -phi)) *
                     std::pow(-std::tan(phi) / 3.0, 2.0) * 2.0 * 2.0 * 1.5;
    CHECK(std::abs(x1.value - off) < 1.0e-8);
    CHECK(x1.est_error < 1.0e-8);
    CHECK(d1.est_error < 1.0e-8);
    // orthogonality off the diagonal
    const auto [z01, c01] = check_mml(1.0, 3.0, phi, 0, 1);
    CHECK(std::abs(z01.value) < 1.0e-8);
    CHECK(c01.est_error < 1.0e-8);
    // a second parameter point, all entries m, n <= 3
    for (int m = 0; m <= 3; ++m) {
        for (int n = m; n <= 3; ++n) {
            const auto [s2, c2] = check_mml(0.7, 2.0, kPi / 4.0, m, n);
            CAPTURE(m);
            CAPTURE(n);
            CHECK(s2.est_error < 1.0e-8);
            CHECK(c2.est_error < 1.0e-8);
        }
    }
    CHECK_THROWS_AS(check_mml(1.0, 3.0, kPi / 2.0, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(check_mml(-1.0, 3.0, 0.1, 0, 0), std::invalid_argument);
}

TEST_CASE("the interleaved laurent family is orthogonal under the circle pairing") {
    const Rational b = rat(3, 10);
    const Rational q = rat(2, 5);
    const Cyclotomic bf(b), qf(q);
    for (int m = 0; m <= 3; ++m) {
        for (int n = m; n <= 3; ++n) {
            const QuadResult r = all_pairing(m, n, b, q);
            const cdbl want = m == n ? laurent_p0(n, bf, qf).second.to_complex() : cdbl(0, 0);
            const double scale = std::max(std::abs(laurent_p0(m, bf, qf).second.to_complex()),
                                          std::abs(laurent_p0(n, bf, qf).second.to_complex()));
            CAPTURE(m);
            CAPTURE(n);
            CHECK(std::abs(r.value - want) / scale < 1.0e-7);
        }
    }
    CHECK_THROWS_AS(all_pairing(0, 0, Rational(2), rat(2, 5)), std::invalid_argument);
    CHECK_THROWS_AS(all_pairing(0, 0, rat(3, 10), Rational(0)), std::invalid_argument);
}

TEST_CASE("the circle pairing splits through the two measures") {
    // <f,g>_0 = (1-w)(1-b w^2)/(3(1+b)) mu_{w,b}(fg)
    //         + (1-w^2)(1-b w)/(3(1+b)) mu_{w^2,b}(fg)
    const Rational b = rat(3, 10);
    const Rational q = rat(2, 5);
    const Cyclotomic bf(b), qf(q);
    const Cyclotomic w = Cyclotomic::omega();
    const cdbl wc = w.to_complex();
    const double bd = b.get_d(), qd = q.get_d();
    for (int m = 0; m <= 2; ++m) {
        for (int n = m; n <= 2; ++n) {
            const LaurentPoly fg = laurent_p0(m, bf, qf).first * laurent_p0(n, bf, qf).first;
            const cdbl c1 =
                ((Cyclotomic(1) - w) * (Cyclotomic(1) - bf * w * w)).to_complex() /
                (3.0 * (1.0 + bd));
            const cdbl c2 =
                ((Cyclotomic(1) - w * w) * (Cyclotomic(1) - bf * w)).to_complex() /
                (3.0 * (1.0 + bd));
            const cdbl split = c1 * mu_pairing(fg, wc, bd, qd).value +
                               c2 * mu_pairing(fg, wc * wc, bd, qd).value;
            const cdbl whole = all_pairing(m, n, b, q).value;
            CAPTURE(m);
            CAPTURE(n);
            CHECK(std::abs(whole - split) < 1.0e-9);
        }
    }
}

TEST_CASE("the biorthogonal pairing matches its closed form") {
    const Cyclotomic w = Cyclotomic::omega();
    const Cyclotomic b = Cyclotomic(rat(3, 10));
    const Cyclotomic q = Cyclotomic(rat(1, 2));
    // both sides are mu_{c,b}(1)
    const QuadResult base = check_sp(w, b, w * w, q, 0, 0);
    CHECK(base.est_error < 1.0e-8);
    // the displayed 4phi3 form at m = 1, n = 2
    const QuadResult mid = check_sp(w, b, w * w, q, 1, 2);
    CHECK(mid.est_error < 1.0e-7);
    for (int m = 0; m <= 2; ++m) {
        for (int n = 0; n <= 2; ++n) {
            const QuadResult r = check_sp(w, b, w * w, q, m, n);
            CAPTURE(m);
            CAPTURE(n);
            CHECK(r.est_error < 1.0e-7);
        }
    }
}

TEST_CASE("at c = a the biorthogonal pairing collapses to the norms") {
    const Cyclotomic w = Cyclotomic::omega();
    const Cyclotomic b = Cyclotomic(rat(3, 10));
    const Cyclotomic q = Cyclotomic(rat(1, 2));
    for (int m = 0; m <= 3; ++m) {
        for (int n = 0; n <= 3; ++n) {
            const QuadResult r = check_sp(w, b, w, q, m, n);
            CAPTURE(m);
            CAPTURE(n);
            if (m == n) {
                CHECK(r.est_error < 1.0e-8);
            } else {
                CHECK(std::abs(r.value) < 1.0e-8);
            }
        }
    }
    CHECK_THROWS_AS(check_sp(w, Cyclotomic(2), w, q, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(check_sp(Cyclotomic(rat(1, 2)), b, w, q, 0, 0), std::invalid_argument);
}

TEST_CASE("refined quadrature stays inside the reported error estimate") {
    const double a[4] = {0.0, 1.0 / 3.0, 2.0 / 3.0, 1.0};
    const QuadResult w1 = wilson_pairing(1, 1, a[0], a[1], a[2], a[3], 1.0e-9);
    const QuadResult w2 = wilson_pairing(1, 1, a[0], a[1], a[2], a[3], 1.0e-11);
    CHECK(std::abs(w1.value - w2.value) <= w1.est_error + w2.est_error);
    const QuadResult m1 = weight_mass(row(1, 2, 0, 0, 0.7), 1.0e-8);
    const QuadResult m2 = weight_mass(row(1, 2, 0, 0, 0.7), 1.0e-10);
    CHECK(std::abs(m1.value - m2.value) <= m1.est_error + m2.est_error);
    const cdbl a1(1.0, 0.0), a2(0.3, 0.0), a3(0.2, 0.0), a4(0.1, 0.0), q(0.4, 0.0);
    const QuadResult c1 = aw_pairing(1, 1, a1, a2, a3, a4, q, 256);
    const QuadResult c2 = aw_pairing(1, 1, a1, a2, a3, a4, q, 512);
    CHECK(std::abs(c1.value - c2.value) <= c1.est_error + c2.est_error);
}
