#include "doctest.h"

#include "cyclodet/asmtool.hpp"

#include <algorithm>
#include <stdexcept>

using namespace cyclodet;

TEST_CASE("closed-form counts") {
    const long expected[] = {1, 2, 7, 42, 429, 7436, 218348, 10850216};
    for (int N = 1; N <= 8; ++N)
        CHECK(asm_count_formula(N) == expected[N - 1]);
    CHECK(asm_count_formula(10) == Integer("129534272700"));
    CHECK_THROWS_AS(asm_count_formula(0), std::invalid_argument);
}

TEST_CASE("enumeration agrees with the formula up to the cap") {
    for (int N = 1; N <= 5; ++N)
        CHECK(asm_enumerate(N) == asm_count_formula(N));
    CHECK_THROWS_AS(asm_enumerate(6), BudgetError);
    CHECK_THROWS_AS(asm_enumerate(0), std::invalid_argument);
}

TEST_CASE("sampled matrices satisfy the defining constraints") {
    for (int N = 1; N <= 3; ++N) {
        std::vector<ASMatrix> ms = asm_sample_matrices(N);
        CHECK(Integer(static_cast<long>(ms.size())) == asm_count_formula(N));
        for (const ASMatrix& m : ms)
            CHECK(asm_matrix_valid(m));
    }
    std::vector<ASMatrix> threes = asm_sample_matrices(3);
    int with_minus = 0;
    for (const ASMatrix& m : threes)
        if (std::count(m.e.begin(), m.e.end(), -1) > 0)
            ++with_minus;
    CHECK(with_minus == 1);
    CHECK_THROWS_AS(asm_sample_matrices(4), BudgetError);
}

TEST_CASE("validity check rejects near misses") {
    ASMatrix perm;
    perm.n = 2;
    perm.e = {0, 1, 1, 0};
    CHECK(asm_matrix_valid(perm));

    ASMatrix double_row;
    double_row.n = 2;
    double_row.e = {1, 1, 0, 0};
    CHECK(!asm_matrix_valid(double_row));

    ASMatrix leading_minus;
    leading_minus.n = 2;
    leading_minus.e = {-1, 1, 1, 0};
    CHECK(!asm_matrix_valid(leading_minus));

    ASMatrix big_entry;
    big_entry.n = 1;
    big_entry.e = {2};
    CHECK(!asm_matrix_valid(big_entry));

    ASMatrix ragged;
    ragged.n = 2;
    ragged.e = {1, 0, 0};
    CHECK(!asm_matrix_valid(ragged));
}

TEST_CASE("three independent counts coincide") {
    const long expected[] = {1, 2, 7, 42, 429};
    for (int N = 1; N <= 5; ++N) {
        AsmCrosscheck r = asm_crosscheck(N);
        CHECK(r.N == N);
        CHECK(r.enumerated == expected[N - 1]);
        CHECK(r.formula == expected[N - 1]);
        CHECK(r.determinant == expected[N - 1]);
    }
    CHECK_THROWS_AS(asm_crosscheck(6), BudgetError);
}
