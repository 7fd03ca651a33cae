#include "cyclodet/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace cyclodet {

std::string rat_str(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::optional<Rational> rat_parse(const std::string& s) {
    auto is_int = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    std::string num = s, den = "1";
    if (auto pos = s.find('/'); pos != std::string::npos) {
        num = s.substr(0, pos);
        den = s.substr(pos + 1);
    }
    if (!is_int(num) || !is_int(den)) return std::nullopt;
    if (num[0] == '+') num.erase(0, 1); // GMP does not take a leading plus
    if (den[0] == '+') den.erase(0, 1);
    Rational r;
    if (mpq_set_str(r.get_mpq_t(), (num + "/" + den).c_str(), 10) != 0) return std::nullopt;
    if (r.get_den() == 0) return std::nullopt;
    r.canonicalize();
    return r;
}

Rational rat_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (base == 0) {
        if (e < 0) throw std::domain_error("rat_pow: 0 to a negative power");
        return Rational(0);
    }
    Rational b = e < 0 ? Rational(base.get_den(), base.get_num()) : base;
    if (e < 0) b.canonicalize();
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    Rational acc(1);
    while (k) {
        if (k & 1) acc *= b;
        b *= b;
        k >>= 1;
    }
    return acc;
}

Rational rat_factorial(int n) {
    if (n < 0) throw std::domain_error("rat_factorial: negative argument");
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(f);
}

} // namespace cyclodet
