#include "doctest.h"

#include "cyclodet/cyclotomic.hpp"
#include "test_util.hpp"

#include <cmath>
#include <complex>

using namespace cyclodet;

namespace {
double cdist(std::complex<double> a, std::complex<double> b) { return std::abs(a - b); }
} // namespace

TEST_CASE("defining relations of the named constants") {
    const Cyclotomic w = Cyclotomic::omega();
    CHECK(w * w * w == Cyclotomic(1));
    CHECK(w * w + w + 1 == Cyclotomic(0));
    CHECK(w + w * w == Cyclotomic(-1));
    CHECK(Cyclotomic::i() * Cyclotomic::i() == Cyclotomic(-1));
    CHECK(Cyclotomic::sqrt2() * Cyclotomic::sqrt2() == Cyclotomic(2));
    CHECK(Cyclotomic::sqrt3() * Cyclotomic::sqrt3() == Cyclotomic(3));
    // zeta satisfies its minimal polynomial x^8 - x^4 + 1
    const Cyclotomic z = Cyclotomic::zeta(1);
    CHECK(z.pow(8) - z.pow(4) + 1 == Cyclotomic(0));
    // e^{i pi/3} = zeta^4 is a primitive 6th root
    CHECK(Cyclotomic::zeta(4).pow(6) == Cyclotomic(1));
    CHECK(Cyclotomic::zeta(4).pow(3) == Cyclotomic(-1));
    // omega = zeta^8 and e^{i pi/6} = zeta^2 agree with the power table
    CHECK(Cyclotomic::zeta(8) == Cyclotomic::omega());
    CHECK(Cyclotomic::zeta(2) * Cyclotomic::zeta(2) * Cyclotomic::zeta(2) == Cyclotomic::i());
}

TEST_CASE("zeta powers wrap and invert") {
    CHECK(Cyclotomic::zeta(24) == Cyclotomic(1));
    CHECK(Cyclotomic::zeta(-5) == Cyclotomic::zeta(19));
    CHECK(Cyclotomic::zeta(7) * Cyclotomic::zeta(17) == Cyclotomic(1));
    CHECK(Cyclotomic::zeta(5).pow(-3) == Cyclotomic::zeta(-15));
}

TEST_CASE("inversion examples") {
    CHECK(Cyclotomic(2).inverse() == Cyclotomic::ratio(1, 2));
    CHECK(Cyclotomic::omega().inverse() == Cyclotomic::omega() * Cyclotomic::omega());
    const Cyclotomic one_plus_i = Cyclotomic(1) + Cyclotomic::i();
    CHECK(one_plus_i.inverse() == (Cyclotomic(1) - Cyclotomic::i()) * Cyclotomic::ratio(1, 2));
    CHECK_THROWS_AS(Cyclotomic(0).inverse(), std::domain_error);
}

TEST_CASE("half integer powers of 2 and 3") {
    CHECK(Cyclotomic::sqrt2_pow(0) == Cyclotomic(1));
    CHECK(Cyclotomic::sqrt2_pow(2) == Cyclotomic(2));
    CHECK(Cyclotomic::sqrt3_pow(4) == Cyclotomic(9));
    for (long e = -7; e <= 7; ++e) {
        CHECK(Cyclotomic::sqrt2_pow(e) == Cyclotomic::sqrt2().pow(e));
        CHECK(Cyclotomic::sqrt3_pow(e) == Cyclotomic::sqrt3().pow(e));
    }
}

TEST_CASE("conjugation examples and properties") {
    CHECK(Cyclotomic::i().conjugate() == -Cyclotomic::i());
    CHECK(Cyclotomic::omega().conjugate() == Cyclotomic::omega() * Cyclotomic::omega());
    CHECK(Cyclotomic::sqrt2().conjugate() == Cyclotomic::sqrt2());
    CHECK(Cyclotomic::sqrt3().conjugate() == Cyclotomic::sqrt3());

    std::mt19937_64 rng(2024);
    for (int t = 0; t < 50; ++t) {
        const Cyclotomic x = testutil::rand_element(rng), y = testutil::rand_element(rng);
        CHECK(x.conjugate().conjugate() == x);
        CHECK((x * y).conjugate() == x.conjugate() * y.conjugate());
        CHECK((x + y).conjugate() == x.conjugate() + y.conjugate());
    }
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 40; ++t) {
        const Cyclotomic a = testutil::rand_element(rng);
        const Cyclotomic b = testutil::rand_element(rng);
        const Cyclotomic c = testutil::rand_element(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
        CHECK(a - a == Cyclotomic(0));
    }
}

TEST_CASE("every nonzero element has an exact inverse") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 40; ++t) {
        const Cyclotomic x = testutil::rand_nonzero_element(rng);
        CHECK(x * x.inverse() == Cyclotomic(1));
        CHECK(x.pow(-2) == (x * x).inverse());
    }
}

TEST_CASE("embedding into complex doubles") {
    CHECK(cdist(Cyclotomic::i().to_complex(), {0.0, 1.0}) < 1e-15);
    CHECK(cdist(Cyclotomic::sqrt3().to_complex(), {std::sqrt(3.0), 0.0}) < 1e-12);
    CHECK(cdist(Cyclotomic::omega().to_complex(), std::polar(1.0, 2 * M_PI / 3)) < 1e-12);

    std::mt19937_64 rng(99);
    for (int t = 0; t < 40; ++t) {
        const Cyclotomic x = testutil::rand_element(rng), y = testutil::rand_element(rng);
        const auto xy = (x * y).to_complex();
        const auto xc = x.to_complex() * y.to_complex();
        const double scale = std::max(1.0, std::abs(xy));
        CHECK(cdist(xy, xc) / scale < 1e-12);
    }
}

TEST_CASE("rational detection") {
    CHECK(Cyclotomic::ratio(3, 4).is_rational());
    CHECK(Cyclotomic::ratio(3, 4).rational_part() == Rational(3, 4));
    CHECK(!Cyclotomic::i().is_rational());
    CHECK((Cyclotomic::sqrt2() * Cyclotomic::sqrt2()).rational_part() == 2);
    CHECK_THROWS_AS(Cyclotomic::i().rational_part(), std::logic_error);
}
