#include "cyclodet/linalg.hpp"

#include <utility>

namespace cyclodet {

ExactMatrix ExactMatrix::identity(int n) {
    ExactMatrix m(n);
    for (int j = 0; j < n; ++j) m.at(j, j) = 1;
    return m;
}

ExactMatrix ExactMatrix::build(int n, const std::function<Cyclotomic(int, int)>& entry) {
    ExactMatrix out(n);
    for (int m = 0; m < n; ++m)
        for (int c = 0; c < n; ++c) out.at(m, c) = entry(m, c);
    return out;
}

ExactMatrix ExactMatrix::scale_row(int m, const Cyclotomic& c) const {
    ExactMatrix out = *this;
    for (int j = 0; j < n_; ++j) out.at(m, j) *= c;
    return out;
}

ExactMatrix ExactMatrix::scale_col(int n, const Cyclotomic& c) const {
    ExactMatrix out = *this;
    for (int j = 0; j < n_; ++j) out.at(j, n) *= c;
    return out;
}

ExactMatrix ExactMatrix::swap_rows(int a, int b) const {
    ExactMatrix out = *this;
    for (int j = 0; j < n_; ++j) std::swap(out.at(a, j), out.at(b, j));
    return out;
}

Cyclotomic determinant(ExactMatrix m) {
    const int n = m.size();
    bool negate = false;
    Cyclotomic det(1);
    for (int col = 0; col < n; ++col) {
        int p = col;
        while (p < n && m.at(p, col).is_zero()) ++p;
        if (p == n) return Cyclotomic(0);
        if (p != col) {
            for (int j = col; j < n; ++j) std::swap(m.at(p, j), m.at(col, j));
            negate = !negate;
        }
        const Cyclotomic inv = m.at(col, col).inverse();
        det *= m.at(col, col);
        for (int r = col + 1; r < n; ++r) {
            if (m.at(r, col).is_zero()) continue;
            const Cyclotomic f = m.at(r, col) * inv;
            for (int j = col + 1; j < n; ++j) m.at(r, j) -= f * m.at(col, j);
            m.at(r, col) = Cyclotomic(0);
        }
    }
    return negate ? -det : det;
}

} // namespace cyclodet
