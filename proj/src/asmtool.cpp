#include "cyclodet/asmtool.hpp"

#include "cyclodet/catalog.hpp"

#include <stdexcept>
#include <string>

namespace cyclodet {

namespace {

constexpr int enumeration_cap = 5;

bool partial_sums_unit(const std::vector<int>& v) {
    int p = 0;
    for (int x : v) {
        p += x;
        if (p != 0 && p != 1)
            return false;
    }
    return p == 1;
}

// Valid next column-sum states from `state` with one more row placed: the
// new state differs by a row vector whose entries and prefix sums stay in
// {0, 1} ranges required of an alternating sign matrix row.
template <typename Visit>
void for_each_next_state(const std::vector<int>& state, const Visit& visit) {
    const int n = static_cast<int>(state.size());
    std::vector<int> next(state.size(), 0);
    const int total = 1 << n;
    for (int mask = 0; mask < total; ++mask) {
        int prefix = 0;
        bool ok = true;
        for (int j = 0; j < n && ok; ++j) {
            next[static_cast<std::size_t>(j)] = (mask >> j) & 1;
            prefix += next[static_cast<std::size_t>(j)] - state[static_cast<std::size_t>(j)];
            if (prefix != 0 && prefix != 1)
                ok = false;
        }
        if (ok && prefix == 1)
            visit(next);
    }
}

long count_from(const std::vector<int>& state, int rows_left) {
    if (rows_left == 0)
        return 1;
    long total = 0;
    for_each_next_state(state, [&](const std::vector<int>& next) { total += count_from(next, rows_left - 1); });
    return total;
}

void collect_from(const std::vector<int>& state, int rows_left, std::vector<int>& rows, int n,
                  std::vector<ASMatrix>& out) {
    if (rows_left == 0) {
        ASMatrix m;
        m.n = n;
        m.e = rows;
        out.push_back(std::move(m));
        return;
    }
    for_each_next_state(state, [&](const std::vector<int>& next) {
        const std::size_t base = rows.size();
        for (int j = 0; j < n; ++j)
            rows.push_back(next[static_cast<std::size_t>(j)] - state[static_cast<std::size_t>(j)]);
        collect_from(next, rows_left - 1, rows, n, out);
        rows.resize(base);
    });
}

} // namespace

bool asm_matrix_valid(const ASMatrix& m) {
    if (m.n < 1 || m.e.size() != static_cast<std::size_t>(m.n) * static_cast<std::size_t>(m.n))
        return false;
    for (int r = 0; r < m.n; ++r) {
        std::vector<int> row(static_cast<std::size_t>(m.n));
        for (int c = 0; c < m.n; ++c) {
            int x = m.at(r, c);
            if (x < -1 || x > 1)
                return false;
            row[static_cast<std::size_t>(c)] = x;
        }
        if (!partial_sums_unit(row))
            return false;
    }
    for (int c = 0; c < m.n; ++c) {
        std::vector<int> col(static_cast<std::size_t>(m.n));
        for (int r = 0; r < m.n; ++r)
            col[static_cast<std::size_t>(r)] = m.at(r, c);
        if (!partial_sums_unit(col))
            return false;
    }
    return true;
}

Integer asm_count_formula(int N) {
    if (N < 1)
        throw std::invalid_argument("N must be positive");
    Integer num(1), den(1);
    for (int j = 0; j < N; ++j) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(3 * j + 1));
        num *= f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(N + j));
        den *= f;
    }
    if (num % den != 0)
        throw IntegralityError("alternating sign matrix count formula did not divide exactly at N = "
                               + std::to_string(N));
    return Integer(num / den);
}

Integer asm_enumerate(int N) {
    if (N < 1)
        throw std::invalid_argument("N must be positive");
    if (N > enumeration_cap)
        throw BudgetError("enumeration capped at N <= " + std::to_string(enumeration_cap));
    std::vector<int> empty(static_cast<std::size_t>(N), 0);
    return Integer(count_from(empty, N));
}

std::vector<ASMatrix> asm_sample_matrices(int N) {
    if (N < 1)
        throw std::invalid_argument("N must be positive");
    if (N > 3)
        throw BudgetError("sample matrices kept only for N <= 3");
    std::vector<ASMatrix> out;
    std::vector<int> empty(static_cast<std::size_t>(N), 0);
    std::vector<int> rows;
    rows.reserve(static_cast<std::size_t>(N) * static_cast<std::size_t>(N));
    collect_from(empty, N, rows, N, out);
    return out;
}

AsmCrosscheck asm_crosscheck(int N) {
    AsmCrosscheck r;
    r.N = N;
    r.enumerated = asm_enumerate(N);
    r.formula = asm_count_formula(N);
    const Cyclotomic d = asm_det(N);
    if (!d.is_rational() || d.rational_part().get_den() != 1 || d.rational_part() < 0)
        throw IntegralityError("determinant value is not a nonnegative integer at N = " + std::to_string(N));
    r.determinant = d.rational_part().get_num();
    if (r.enumerated != r.formula)
        throw MismatchError("enumeration " + r.enumerated.get_str() + " != formula " + r.formula.get_str()
                            + " at N = " + std::to_string(N));
    if (r.formula != r.determinant)
        throw MismatchError("formula " + r.formula.get_str() + " != determinant " + r.determinant.get_str()
                            + " at N = " + std::to_string(N));
    return r;
}

} // namespace cyclodet
