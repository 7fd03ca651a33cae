#include "cyclodet/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace cyclodet {

std::string var_name(Var v) {
    switch (v) {
    case Var::X: return "x";
    case Var::XSq: return "x^2";
    case Var::Z: return "z";
    }
    return "?";
}

Poly::Poly(Var v, std::vector<Cyclotomic> coeffs) : var_(v), c_(std::move(coeffs)) {
    trim();
}

Poly Poly::constant(Var v, const Cyclotomic& c) {
    Poly p(v);
    if (!c.is_zero()) p.c_.push_back(c);
    return p;
}

Poly Poly::monomial(Var v, int deg, const Cyclotomic& c) {
    Poly p(v);
    if (deg < 0) throw std::logic_error("monomial degree must be nonnegative");
    if (!c.is_zero()) {
        p.c_.assign(static_cast<std::size_t>(deg) + 1, Cyclotomic());
        p.c_.back() = c;
    }
    return p;
}

Cyclotomic Poly::coeff(int k) const {
    if (k < 0 || k > degree()) return Cyclotomic();
    return c_[static_cast<std::size_t>(k)];
}

Cyclotomic Poly::leading() const {
    return c_.empty() ? Cyclotomic() : c_.back();
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Var Poly::join(const Poly& a, const Poly& b) {
    if (a.is_constant()) return b.is_constant() ? a.var_ : b.var_;
    if (b.is_constant()) return a.var_;
    if (a.var_ != b.var_)
        throw std::logic_error("polynomial variable mismatch: " + var_name(a.var_) +
                               " vs " + var_name(b.var_));
    return a.var_;
}

Poly& Poly::operator+=(const Poly& o) {
    var_ = join(*this, o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    var_ = join(*this, o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Poly& o) {
    var_ = join(*this, o);
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<Cyclotomic> out(c_.size() + o.c_.size() - 1);
    for (std::size_t a = 0; a < c_.size(); ++a) {
        if (c_[a].is_zero()) continue;
        for (std::size_t b = 0; b < o.c_.size(); ++b) {
            if (o.c_[b].is_zero()) continue;
            out[a + b] += c_[a] * o.c_[b];
        }
    }
    c_ = std::move(out);
    trim();
    return *this;
}

Poly& Poly::operator*=(const Cyclotomic& s) {
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

Poly Poly::operator-() const {
    Poly p(*this);
    for (auto& c : p.c_) c = -c;
    return p;
}

bool operator==(const Poly& a, const Poly& b) {
    if (a.c_ != b.c_) return false;
    if (!a.is_constant() && !b.is_constant() && a.var_ != b.var_) return false;
    return true;
}

Cyclotomic Poly::eval(const Cyclotomic& x) const {
    Cyclotomic v;
    for (std::size_t k = c_.size(); k-- > 0;) v = v * x + c_[k];
    return v;
}

Poly Poly::times_var(int k) const {
    if (k < 0) throw std::logic_error("times_var needs a nonnegative shift");
    if (c_.empty() || k == 0) return *this;
    Poly p(var_);
    p.c_.assign(static_cast<std::size_t>(k), Cyclotomic());
    p.c_.insert(p.c_.end(), c_.begin(), c_.end());
    return p;
}

Poly Poly::scale_arg(const Cyclotomic& c) const {
    Poly p(*this);
    Cyclotomic f = 1;
    for (std::size_t k = 1; k < p.c_.size(); ++k) {
        f *= c;
        p.c_[k] *= f;
    }
    p.trim();
    return p;
}

Poly Poly::affine_arg(const Cyclotomic& alpha, const Cyclotomic& beta) const {
    Poly lin(var_, {beta, alpha});
    Poly out(var_);
    for (std::size_t k = c_.size(); k-- > 0;) {
        out *= lin;
        out += Poly::constant(var_, c_[k]);
    }
    return out;
}

Poly Poly::compose_square() const {
    if (var_ != Var::XSq)
        throw std::logic_error("compose_square expects an x^2-tagged polynomial");
    Poly p(Var::X);
    if (c_.empty()) return p;
    p.c_.assign(2 * c_.size() - 1, Cyclotomic());
    for (std::size_t k = 0; k < c_.size(); ++k) p.c_[2 * k] = c_[k];
    return p;
}

Poly Poly::divide_linear(const Cyclotomic& a, Cyclotomic* remainder) const {
    Poly q(var_);
    if (c_.empty()) {
        if (remainder) *remainder = Cyclotomic();
        return q;
    }
    q.c_.assign(c_.size() - 1, Cyclotomic());
    Cyclotomic carry;
    for (std::size_t k = c_.size(); k-- > 0;) {
        carry = c_[k] + a * carry;
        if (k > 0) q.c_[k - 1] = carry;
    }
    if (remainder) *remainder = carry;
    q.trim();
    return q;
}

std::string Poly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (k) os << " + ";
        os << c_[k].str() << "*" << var_name(var_) << "^" << k;
    }
    return os.str();
}

LaurentPoly::LaurentPoly(const Cyclotomic& c) {
    add_term(0, c);
}

LaurentPoly::LaurentPoly(long v) : LaurentPoly(Cyclotomic(v)) {}
LaurentPoly::LaurentPoly(int v) : LaurentPoly(Cyclotomic(v)) {}

LaurentPoly LaurentPoly::term(int e, const Cyclotomic& c) {
    LaurentPoly p;
    p.add_term(e, c);
    return p;
}

void LaurentPoly::add_term(int e, const Cyclotomic& c) {
    if (c.is_zero()) return;
    auto it = t_.find(e);
    if (it == t_.end()) {
        t_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
}

Cyclotomic LaurentPoly::coeff(int e) const {
    auto it = t_.find(e);
    return it == t_.end() ? Cyclotomic() : it->second;
}

int LaurentPoly::min_exp() const {
    if (t_.empty()) throw std::logic_error("min_exp of zero Laurent polynomial");
    return t_.begin()->first;
}

int LaurentPoly::max_exp() const {
    if (t_.empty()) throw std::logic_error("max_exp of zero Laurent polynomial");
    return t_.rbegin()->first;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.t_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.t_) add_term(e, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    LaurentPoly out;
    for (const auto& [ea, ca] : t_)
        for (const auto& [eb, cb] : o.t_) out.add_term(ea + eb, ca * cb);
    t_ = std::move(out.t_);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Cyclotomic& s) {
    if (s.is_zero()) {
        t_.clear();
        return *this;
    }
    for (auto& [e, c] : t_) c *= s;
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p(*this);
    for (auto& [e, c] : p.t_) c = -c;
    return p;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly p;
    for (const auto& [e, c] : t_) p.t_.emplace(e + k, c);
    return p;
}

LaurentPoly LaurentPoly::invert_z() const {
    LaurentPoly p;
    for (const auto& [e, c] : t_) p.t_.emplace(-e, c);
    return p;
}

int laurent_step_exponent(int k) {
    if (k < 0) throw std::logic_error("laurent_step_exponent needs k >= 0");
    if (k == 0) return 0;
    return k % 2 ? (k + 1) / 2 : -k / 2;
}

bool LaurentPoly::is_monic_laurent(int k) const {
    if (k < 0) return false;
    if (coeff(laurent_step_exponent(k)) != Cyclotomic(1)) return false;
    // Allowed support: exponents -[k/2] .. [(k+1)/2].
    int lo = -(k / 2), hi = (k + 1) / 2;
    for (const auto& [e, c] : t_) {
        (void)c;
        if (e < lo || e > hi) return false;
    }
    return true;
}

Cyclotomic LaurentPoly::eval_field(const Cyclotomic& z) const {
    Cyclotomic v;
    Cyclotomic zinv;
    bool have_inv = false;
    for (const auto& [e, c] : t_) {
        if (e >= 0) {
            v += c * z.pow(e);
        } else {
            if (!have_inv) {
                zinv = z.inverse();
                have_inv = true;
            }
            v += c * zinv.pow(-e);
        }
    }
    return v;
}

std::complex<double> LaurentPoly::eval(const std::complex<double>& z) const {
    std::complex<double> v;
    for (const auto& [e, c] : t_) v += c.to_complex() * std::pow(z, e);
    return v;
}

std::string LaurentPoly::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : t_) {
        if (!first) os << " + ";
        first = false;
        os << c.str() << "*z^" << e;
    }
    return os.str();
}

} // namespace cyclodet
