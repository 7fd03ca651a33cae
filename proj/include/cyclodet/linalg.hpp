#pragma once

#include "cyclodet/cyclotomic.hpp"

#include <functional>
#include <vector>

namespace cyclodet {

// Dense square matrix over the cyclotomic field, 0-based row-major.
class ExactMatrix {
public:
    explicit ExactMatrix(int n) : n_(n), e_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {}

    static ExactMatrix identity(int n);
    static ExactMatrix build(int n, const std::function<Cyclotomic(int, int)>& entry);

    int size() const { return n_; }
    Cyclotomic& at(int m, int n) { return e_[static_cast<std::size_t>(m) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(n)]; }
    const Cyclotomic& at(int m, int n) const {
        return e_[static_cast<std::size_t>(m) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(n)];
    }

    // Scaled copies; the determinant scales by c.
    ExactMatrix scale_row(int m, const Cyclotomic& c) const;
    ExactMatrix scale_col(int n, const Cyclotomic& c) const;
    ExactMatrix swap_rows(int a, int b) const;

    friend bool operator==(const ExactMatrix& x, const ExactMatrix& y) { return x.n_ == y.n_ && x.e_ == y.e_; }

private:
    int n_;
    std::vector<Cyclotomic> e_;
};

// Exact determinant: Gaussian elimination with field division, pivot on the
// first nonzero entry of each column, sign tracked across row swaps.
// Singular matrices give an exact zero.
Cyclotomic determinant(ExactMatrix m);

} // namespace cyclodet
