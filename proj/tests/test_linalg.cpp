#include "doctest.h"

#include "cyclodet/hyper.hpp"
#include "cyclodet/linalg.hpp"
#include "test_util.hpp"

using namespace cyclodet;

namespace {

// Brute-force oracle: cofactor expansion along the first row.
Cyclotomic cofactor_det(const ExactMatrix& m) {
    const int n = m.size();
    if (n == 1) return m.at(0, 0);
    Cyclotomic sum(0);
    for (int c = 0; c < n; ++c) {
        if (m.at(0, c).is_zero()) continue;
        ExactMatrix sub(n - 1);
        for (int r = 1; r < n; ++r)
            for (int cc = 0, k = 0; cc < n; ++cc) {
                if (cc == c) continue;
                sub.at(r - 1, k++) = m.at(r, cc);
            }
        const Cyclotomic t = m.at(0, c) * cofactor_det(sub);
        if (c % 2)
            sum -= t;
        else
            sum += t;
    }
    return sum;
}

ExactMatrix rand_matrix(std::mt19937_64& rng, int n) {
    ExactMatrix m(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m.at(r, c) = testutil::rand_element(rng, 2);
    return m;
}

} // namespace

TEST_CASE("determinant basics") {
    CHECK(determinant(ExactMatrix::identity(5)) == Cyclotomic(1));

    ExactMatrix m(2);
    m.at(0, 0) = 2;
    m.at(0, 1) = 1;
    m.at(1, 0) = 1;
    m.at(1, 1) = 3;
    CHECK(determinant(m) == Cyclotomic(5));
    CHECK(cofactor_det(m) == Cyclotomic(5));

    ExactMatrix eq(3);
    for (int c = 0; c < 3; ++c) {
        eq.at(0, c) = Cyclotomic::omega() + Cyclotomic(c);
        eq.at(1, c) = eq.at(0, c);
        eq.at(2, c) = Cyclotomic::i() * Cyclotomic(c);
    }
    CHECK(determinant(eq) == Cyclotomic(0));
}

TEST_CASE("determinant matches cofactor expansion for N <= 4") {
    std::mt19937_64 rng(101);
    for (int n = 1; n <= 4; ++n)
        for (int t = 0; t < 8; ++t) {
            const ExactMatrix m = rand_matrix(rng, n);
            CHECK(determinant(m) == cofactor_det(m));
        }
}

TEST_CASE("row swaps flip the sign") {
    std::mt19937_64 rng(102);
    const ExactMatrix m = rand_matrix(rng, 4);
    CHECK(determinant(m.swap_rows(1, 3)) == -determinant(m));
    CHECK(determinant(m.swap_rows(0, 1)) == -determinant(m));
}

TEST_CASE("row and column scaling scale the determinant") {
    CHECK(determinant(ExactMatrix::identity(2).scale_row(0, Cyclotomic(3))) == Cyclotomic(3));

    std::mt19937_64 rng(103);
    const ExactMatrix m = rand_matrix(rng, 4);
    const Cyclotomic base = determinant(m);

    ExactMatrix scaled = m;
    Cyclotomic factor(1);
    for (int c = 0; c < 4; ++c) {
        const Cyclotomic s = testutil::rand_nonzero_element(rng, 2);
        scaled = scaled.scale_col(c, s);
        factor *= s;
    }
    CHECK(determinant(scaled) == factor * base);
    CHECK(determinant(m.scale_row(2, Cyclotomic::omega())) == Cyclotomic::omega() * base);
}

TEST_CASE("determinant is linear in each row") {
    std::mt19937_64 rng(104);
    for (int t = 0; t < 5; ++t) {
        ExactMatrix a = rand_matrix(rng, 3), b = a, sum = a;
        for (int c = 0; c < 3; ++c) {
            b.at(1, c) = testutil::rand_element(rng, 2);
            sum.at(1, c) = a.at(1, c) + b.at(1, c);
        }
        CHECK(determinant(sum) == determinant(a) + determinant(b));
    }
}

TEST_CASE("singular matrices give an exact zero") {
    // row2 = row0 + omega * row1
    ExactMatrix m(3);
    std::mt19937_64 rng(105);
    for (int c = 0; c < 3; ++c) {
        m.at(0, c) = testutil::rand_element(rng, 2);
        m.at(1, c) = testutil::rand_element(rng, 2);
        m.at(2, c) = m.at(0, c) + Cyclotomic::omega() * m.at(1, c);
    }
    CHECK(determinant(m) == Cyclotomic(0));
}
