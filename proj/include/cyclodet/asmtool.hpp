#pragma once

#include "cyclodet/errors.hpp"
#include "cyclodet/rational.hpp"

#include <vector>

namespace cyclodet {

// Square matrix with entries in {-1, 0, 1}, row-major.
struct ASMatrix {
    int n = 0;
    std::vector<int> e;

    int at(int r, int c) const { return e[static_cast<std::size_t>(r) * static_cast<std::size_t>(n) + static_cast<std::size_t>(c)]; }
};

// True when every row and column sums to 1 and every row and column partial
// sum lies in {0, 1}.
bool asm_matrix_valid(const ASMatrix& m);

// 1! 4! 7! ... (3N-2)! / (N! (N+1)! ... (2N-1)!), evaluated in integer
// arithmetic with the division checked for exactness (IntegralityError if a
// bug ever makes it inexact).
Integer asm_count_formula(int N);

// Backtracking count over rows, carrying the vector of column partial sums,
// each kept in {0, 1}. Capped at N <= 5 (BudgetError beyond).
Integer asm_enumerate(int N);

// The full list of matrices for N <= 3 (1, 2 and 7 of them), in enumeration
// order; BudgetError beyond.
std::vector<ASMatrix> asm_sample_matrices(int N);

struct AsmCrosscheck {
    int N = 0;
    Integer enumerated;
    Integer formula;
    Integer determinant;
};

// Runs all three computations and requires them to agree; MismatchError
// names the disagreeing pair. The determinant value must be a nonnegative
// integer in the field (IntegralityError otherwise). Capped at N <= 5.
AsmCrosscheck asm_crosscheck(int N);

} // namespace cyclodet
