#include "CLI11.hpp"

#include "cyclodet/asmtool.hpp"
#include "cyclodet/numquad.hpp"
#include "cyclodet/qseries.hpp"
#include "cyclodet/report.hpp"

#include <atomic>
#include <cctype>
#include <cmath>
#include <complex>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

using namespace cyclodet;

constexpr double kPi = 3.141592653589793238462643383279502884;

struct Range {
    int lo = 1;
    int hi = 1;
};

std::optional<Range> parse_range(const std::string& s) {
    auto to_int = [](const std::string& t) -> std::optional<int> {
        if (t.empty() || t.size() > 4) return std::nullopt;
        for (char ch : t)
            if (!std::isdigit(static_cast<unsigned char>(ch))) return std::nullopt;
        return std::stoi(t);
    };
    Range r;
    if (auto pos = s.find(".."); pos != std::string::npos) {
        auto a = to_int(s.substr(0, pos));
        auto b = to_int(s.substr(pos + 2));
        if (!a || !b) return std::nullopt;
        r.lo = *a;
        r.hi = *b;
    } else {
        auto v = to_int(s);
        if (!v) return std::nullopt;
        r.lo = r.hi = *v;
    }
    if (r.lo < 1 || r.hi < r.lo || r.hi > 99) return std::nullopt;
    return r;
}

// Parses a rational flag, falling back to `dflt` when the flag was left
// empty; reports and fails before any computation on malformed input.
std::optional<Rational> rat_flag(const std::string& given, const std::string& dflt,
                                 const std::string& name) {
    const std::string& s = given.empty() ? dflt : given;
    std::optional<Rational> r = rat_parse(s);
    if (!r) std::cerr << "bad rational for --" << name << ": \"" << s << "\"\n";
    return r;
}

int with_sink(const std::string& path, const std::function<int(std::ostream&)>& body) {
    if (path.empty()) return body(std::cout);
    std::ofstream os(path);
    if (!os) {
        std::cerr << "cannot open output file " << path << "\n";
        return 2;
    }
    return body(os);
}

std::string params_str(const std::map<std::string, std::string>& p) {
    std::string s;
    for (const auto& [k, v] : p) {
        if (!s.empty()) s += ' ';
        s += k + "=" + v;
    }
    return s.empty() ? "-" : s;
}

std::string describe(const TheoremCase& c) {
    std::string s = case_name(c.id) + " N=" + std::to_string(c.N);
    switch (c.id) {
    case CaseId::binom_ad: return s + " x=" + rat_str(c.x);
    case CaseId::q_qt: return s + " q=" + rat_str(c.q) + " b=" + rat_str(c.b);
    case CaseId::asm_zd: return s;
    default: return s + " b=" + rat_str(c.b);
    }
}

void print_table(std::ostream& os, const std::vector<VerifyReport>& rs) {
    const std::vector<std::string> head = {"CASE", "N", "PARAMS", "EQUAL", "ELAPSED_MS"};
    std::vector<std::vector<std::string>> rows;
    rows.push_back(head);
    for (const VerifyReport& r : rs)
        rows.push_back({r.case_id, std::to_string(r.N), params_str(r.params),
                        r.equal ? "true" : "false", std::to_string(r.elapsed_ms)});
    std::vector<std::size_t> w(head.size(), 0);
    for (const auto& row : rows)
        for (std::size_t c = 0; c < w.size(); ++c) w[c] = std::max(w[c], row[c].size());
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < w.size(); ++c) {
            os << std::left << std::setw(static_cast<int>(w[c])) << row[c];
            os << (c + 1 == w.size() ? "\n" : "  ");
        }
    }
}

int emit_reports(const std::string& out_path, const std::string& format,
                 const std::vector<VerifyReport>& rs) {
    const int code = with_sink(out_path, [&](std::ostream& os) {
        if (format == "json")
            os << reports_jsonl(rs);
        else
            print_table(os, rs);
        return 0;
    });
    if (code != 0) return code;
    for (const VerifyReport& r : rs)
        if (!r.equal) return 1;
    return 0;
}

// Fixed-size pool; results land at their job index, so output order is the
// generation order no matter which worker finishes first.
std::vector<VerifyReport> run_cases(const std::vector<TheoremCase>& jobs, int nthreads,
                                    std::vector<std::string>& errors) {
    std::vector<VerifyReport> out(jobs.size());
    errors.assign(jobs.size(), std::string());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= jobs.size()) break;
            try {
                out[i] = verify(jobs[i]);
            } catch (const std::exception& e) {
                errors[i] = describe(jobs[i]) + ": " + e.what();
            }
        }
    };
    const int n = std::max(1, std::min<int>(nthreads, static_cast<int>(jobs.size())));
    if (n <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) pool.emplace_back(work);
        for (std::thread& t : pool) t.join();
    }
    return out;
}

int finish_cases(const std::vector<TheoremCase>& jobs, int nthreads,
                 const std::string& out_path, const std::string& format) {
    std::vector<std::string> errors;
    std::vector<VerifyReport> rs = run_cases(jobs, nthreads, errors);
    for (const std::string& e : errors)
        if (!e.empty()) {
            std::cerr << e << "\n";
            return 2;
        }
    return emit_reports(out_path, format, rs);
}

int do_verify(const std::string& case_str, const std::string& n_str, const std::string& b_str,
              const std::string& x_str, const std::string& q_str, std::uint64_t seed, int nthreads,
              const std::string& out_path, const std::string& format) {
    CaseId id;
    try {
        id = case_from_name(case_str);
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    const std::optional<Range> range = parse_range(n_str);
    if (!range) {
        std::cerr << "bad --n range \"" << n_str << "\" (want N or lo..hi)\n";
        return 2;
    }
    const std::optional<Rational> b = rat_flag(b_str, id == CaseId::q_qt ? "1/5" : "2", "b");
    const std::optional<Rational> x = rat_flag(x_str, "1", "x");
    const std::optional<Rational> q = rat_flag(q_str, "1/3", "q");
    if (!b || !x || !q) return 2;

    std::vector<TheoremCase> jobs;
    for (int N = range->lo; N <= range->hi; ++N) {
        TheoremCase c;
        c.id = id;
        c.N = N;
        c.b = *b;
        c.x = *x;
        c.q = *q;
        c.seed = seed;
        jobs.push_back(c);
    }
    return finish_cases(jobs, nthreads, out_path, format);
}

int do_verify_all(std::uint64_t seed, int qt_count, int nthreads, const std::string& out_path,
                  const std::string& format) {
    std::vector<TheoremCase> jobs;
    auto push = [&jobs](CaseId id, int N, const Rational& b, const Rational& x,
                        const Rational& q) {
        TheoremCase c;
        c.id = id;
        c.N = N;
        c.b = b;
        c.x = x;
        c.q = q;
        jobs.push_back(c);
    };
    const Rational zero(0);
    const std::vector<Rational> at_bs = {Rational(1), Rational(2), Rational(5, 2), Rational(7),
                                         Rational(13, 3)};
    const std::vector<Rational> std_bs = {Rational(1), Rational(2), Rational(7, 2)};
    const std::vector<Rational> ad_xs = {Rational(1), Rational(1, 2), Rational(7, 5)};
    std::size_t qt_splice = 0;
    for (CaseId id : all_cases()) {
        switch (id) {
        case CaseId::andrews_at:
            for (int N = 1; N <= 8; ++N)
                for (const Rational& b : at_bs) push(id, N, b, zero, zero);
            break;
        case CaseId::binom_ad:
            for (int N = 1; N <= 6; ++N)
                for (const Rational& x : ad_xs) push(id, N, zero, x, zero);
            break;
        case CaseId::cekz_ct:
        case CaseId::cekz_ct2:
        case CaseId::half_hdt:
        case CaseId::half_ht:
        case CaseId::third_yt:
            for (int N = 1; N <= 8; ++N)
                for (const Rational& b : std_bs) push(id, N, b, zero, zero);
            break;
        case CaseId::cekz_ct3:
        case CaseId::half_xt:
        case CaseId::third_tdc:
            for (int N = 1; N <= 9; ++N)
                for (const Rational& b : std_bs) push(id, N, b, zero, zero);
            break;
        case CaseId::q_qt:
            qt_splice = jobs.size();
            break;
        case CaseId::asm_zd:
            for (int N = 1; N <= 6; ++N) push(id, N, zero, zero, zero);
            break;
        }
    }
    std::vector<std::string> errors;
    std::vector<VerifyReport> rs = run_cases(jobs, nthreads, errors);
    for (const std::string& e : errors)
        if (!e.empty()) {
            std::cerr << e << "\n";
            return 2;
        }
    std::vector<VerifyReport> qt;
    try {
        for (int N = 1; N <= 5; ++N) {
            std::vector<VerifyReport> part = verify_qt_random(N, qt_count, seed);
            qt.insert(qt.end(), part.begin(), part.end());
        }
    } catch (const std::exception& e) {
        std::cerr << "q_qt sampling: " << e.what() << "\n";
        return 2;
    }
    rs.insert(rs.begin() + static_cast<std::ptrdiff_t>(qt_splice), qt.begin(), qt.end());
    return emit_reports(out_path, format, rs);
}

int do_qt_random(int N, int count, std::uint64_t seed, const std::string& out_path,
                 const std::string& format) {
    std::vector<VerifyReport> rs;
    try {
        rs = verify_qt_random(N, count, seed);
    } catch (const std::exception& e) {
        std::cerr << "q_qt N=" << N << " seed=" << seed << ": " << e.what() << "\n";
        return 2;
    }
    return emit_reports(out_path, format, rs);
}

struct CheckRow {
    std::string check;
    std::map<std::string, std::string> params;
    bool ok = false;
};

int emit_checks(const std::string& out_path, const std::string& format,
                const std::vector<CheckRow>& rows) {
    const int code = with_sink(out_path, [&](std::ostream& os) {
        if (format == "json") {
            for (const CheckRow& r : rows) {
                Json j;
                j["check"] = r.check;
                Json p = Json::object();
                for (const auto& [k, v] : r.params) p[k] = v;
                j["params"] = p;
                j["ok"] = r.ok;
                os << j.dump() << "\n";
            }
            return 0;
        }
        std::vector<std::vector<std::string>> table;
        table.push_back({"CHECK", "PARAMS", "OK"});
        for (const CheckRow& r : rows)
            table.push_back({r.check, params_str(r.params), r.ok ? "true" : "false"});
        std::vector<std::size_t> w(3, 0);
        for (const auto& row : table)
            for (std::size_t c = 0; c < 3; ++c) w[c] = std::max(w[c], row[c].size());
        for (const auto& row : table) {
            for (std::size_t c = 0; c < 3; ++c) {
                os << std::left << std::setw(static_cast<int>(w[c])) << row[c];
                os << (c == 2 ? "\n" : "  ");
            }
        }
        return 0;
    });
    if (code != 0) return code;
    for (const CheckRow& r : rows)
        if (!r.ok) return 1;
    return 0;
}

const std::vector<std::pair<std::string, GfdFamily>>& gfd_families() {
    static const std::vector<std::pair<std::string, GfdFamily>> fams = {
        {"andrews", GfdFamily::andrews}, {"cekz1", GfdFamily::cekz1},
        {"cekz2", GfdFamily::cekz2},     {"half1", GfdFamily::half1},
        {"half_i", GfdFamily::half_i},   {"third_zeta", GfdFamily::third_zeta},
    };
    return fams;
}

const std::vector<std::pair<std::string, OfdFamily>>& ofd_families() {
    static const std::vector<std::pair<std::string, OfdFamily>> fams = {
        {"cekz3", OfdFamily::cekz3},
        {"half_neg", OfdFamily::half_neg},
        {"third_neg", OfdFamily::third_neg},
    };
    return fams;
}

template <class Fam>
int do_scaffold(const std::string& check, const std::vector<std::pair<std::string, Fam>>& table,
                const std::function<bool(Fam, int, const Rational&)>& run,
                const std::string& family_str, const std::string& n_str, const std::string& b_str,
                const std::string& out_path, const std::string& format) {
    const std::optional<Range> range = parse_range(n_str);
    if (!range) {
        std::cerr << "bad --n range \"" << n_str << "\"\n";
        return 2;
    }
    const std::optional<Rational> b = rat_flag(b_str, "2", "b");
    if (!b) return 2;
    std::vector<std::pair<std::string, Fam>> picked;
    if (family_str == "all") {
        picked = table;
    } else {
        for (const auto& [name, fam] : table)
            if (name == family_str) picked.push_back({name, fam});
        if (picked.empty()) {
            std::cerr << "unknown --family \"" << family_str << "\" for " << check << "\n";
            return 2;
        }
    }
    std::vector<CheckRow> rows;
    for (const auto& [name, fam] : picked)
        for (int N = range->lo; N <= range->hi; ++N) {
            CheckRow row;
            row.check = check;
            row.params = {{"family", name}, {"N", std::to_string(N)}, {"b", rat_str(*b)}};
            try {
                row.ok = run(fam, N, *b);
            } catch (const std::exception& e) {
                std::cerr << check << " " << name << " N=" << N << " b=" << rat_str(*b) << ": "
                          << e.what() << "\n";
                return 2;
            }
            rows.push_back(row);
        }
    return emit_checks(out_path, format, rows);
}

int do_series(int k, int k_exp, const std::string& out_path, const std::string& format) {
    if (k < 1 || k_exp < 1) {
        std::cerr << "truncation orders must be >= 1\n";
        return 2;
    }
    std::vector<CheckRow> rows;
    rows.push_back({"quintuple_split", {{"order", std::to_string(k)}}, wq_check(k)});
    rows.push_back({"laurent_expansions", {{"order", std::to_string(k_exp)}},
                    laurent_expansions_check(k_exp)});
    return emit_checks(out_path, format, rows);
}

int do_asm(int n, const std::string& out_path, const std::string& format) {
    std::vector<CheckRow> rows;
    for (int N = 1; N <= n; ++N) {
        CheckRow row;
        row.check = "asm_crosscheck";
        try {
            AsmCrosscheck c = asm_crosscheck(N);
            row.params = {{"N", std::to_string(N)},
                          {"enumerated", c.enumerated.get_str()},
                          {"formula", c.formula.get_str()},
                          {"determinant", c.determinant.get_str()}};
            row.ok = true;
        } catch (const MismatchError& e) {
            row.params = {{"N", std::to_string(N)}, {"error", e.what()}};
            row.ok = false;
        } catch (const std::exception& e) {
            std::cerr << "asm N=" << N << ": " << e.what() << "\n";
            return 2;
        }
        rows.push_back(row);
    }
    return emit_checks(out_path, format, rows);
}

std::string err_str(double err) {
    std::ostringstream os;
    os << std::scientific << std::setprecision(2) << err;
    return os.str();
}

// Numeric corroboration suite: each entry is the worst deviation across an
// (m, n) grid, measured against the matching closed form and compared to
// tol. Parameter points include the a1 = 0 and a1 = 1 boundary cases.
int do_quad(int grid, double tol, const std::string& out_path, const std::string& format) {
    if (grid < 0 || grid > 6 || !(tol > 0)) {
        std::cerr << "quad wants 0 <= --grid <= 6 and --tol > 0\n";
        return 2;
    }
    std::vector<CheckRow> rows;
    auto add = [&rows, tol](const std::string& name, const std::string& point, double err) {
        rows.push_back({name, {{"at", point}, {"err", err_str(err)}, {"tol", err_str(tol)}},
                        err < tol});
    };
    auto guarded = [&rows](const std::string& name, const std::function<void()>& body) {
        try {
            body();
        } catch (const std::exception& e) {
            rows.push_back({name, {{"error", e.what()}}, false});
        }
    };

    guarded("wilson_orthogonality", [&] {
        auto run = [&](const std::string& point, double a1, double a2, double a3, double a4) {
            double worst = 0.0;
            for (int m = 0; m <= grid; ++m)
                for (int n = 0; n <= grid; ++n) {
                    const QuadResult r = wilson_pairing(m, n, a1, a2, a3, a4);
                    const double hm = wilson_h(m, a1, a2, a3, a4);
                    const double hn = wilson_h(n, a1, a2, a3, a4);
                    const std::complex<double> want(m == n ? hn : 0.0, 0.0);
                    worst = std::max(worst, std::abs(r.value - want) / std::max(hm, hn));
                }
            add("wilson_orthogonality", point, worst);
        };
        run("a=(0,1/3,2/3,1)", 0.0, 1.0 / 3.0, 2.0 / 3.0, 1.0);
        run("a=(0.5,0.6,0.7,0.8)", 0.5, 0.6, 0.7, 0.8);
    });

    guarded("dual_hahn_orthogonality", [&] {
        auto run = [&](const std::string& point, double a1, double a2, double a3) {
            double worst = 0.0;
            for (int m = 0; m <= grid; ++m)
                for (int n = 0; n <= grid; ++n) {
                    const QuadResult r = cdh_pairing(m, n, a1, a2, a3);
                    const double hm = cdh_h(m, a1, a2, a3);
                    const double hn = cdh_h(n, a1, a2, a3);
                    const std::complex<double> want(m == n ? hn : 0.0, 0.0);
                    worst = std::max(worst, std::abs(r.value - want) / std::max(hm, hn));
                }
            add("dual_hahn_orthogonality", point, worst);
        };
        run("a=(0,1/2,1)", 0.0, 0.5, 1.0);
        run("a=(0.4,0.7,1.1)", 0.4, 0.7, 1.1);
    });

    guarded("meixner_pollaczek_orthogonality", [&] {
        const double lambda = 1.0, phi = 2.0 * kPi / 3.0;
        double worst = 0.0;
        for (int m = 0; m <= grid; ++m)
            for (int n = 0; n <= grid; ++n) {
                const QuadResult r = mp_pairing(m, n, lambda, phi);
                const double hm = mp_h(m, lambda);
                const double hn = mp_h(n, lambda);
                const std::complex<double> want(m == n ? hn : 0.0, 0.0);
                worst = std::max(worst, std::abs(r.value - want) / std::max(hm, hn));
            }
        add("meixner_pollaczek_orthogonality", "lambda=1 phi=2pi/3", worst);
    });

    guarded("askey_wilson_orthogonality", [&] {
        auto run = [&](const std::string& point, std::complex<double> a1,
                       std::complex<double> a2, std::complex<double> a3, std::complex<double> a4,
                       std::complex<double> q) {
            double worst = 0.0;
            for (int m = 0; m <= grid; ++m)
                for (int n = 0; n <= grid; ++n) {
                    const QuadResult r = aw_pairing(m, n, a1, a2, a3, a4, q);
                    const double hm = std::abs(aw_h(m, a1, a2, a3, a4, q));
                    const double hn = std::abs(aw_h(n, a1, a2, a3, a4, q));
                    const std::complex<double> want =
                        m == n ? aw_h(n, a1, a2, a3, a4, q) : std::complex<double>(0.0, 0.0);
                    worst = std::max(worst, std::abs(r.value - want) / std::max(hm, hn));
                }
            add("askey_wilson_orthogonality", point, worst);
        };
        run("a=(1,0.3,0.2,0.1) q=0.4", 1.0, 0.3, 0.2, 0.1, 0.4);
        run("a=(0.5,0.3,-0.2,0.1) q=0.3", 0.5, 0.3, -0.2, 0.1, 0.3);
    });

    guarded("weight_split", [&] {
        const std::vector<double> xs = {0.1, 0.7, 2.3, -1.3};
        double worst = 0.0;
        for (double b : {2.0, 0.7})
            for (const WeightSpec& base :
                 {WeightSpec{1, 3, 0, 0, 0, 1}, WeightSpec{1, 3, 0, 1, 0, 1},
                  WeightSpec{1, 3, 1, 1, 0, 1}, WeightSpec{1, 3, 1, 0, 0, 1},
                  WeightSpec{1, 2, 0, 0, 0, 1}, WeightSpec{1, 2, 1, 1, 0, 1},
                  WeightSpec{1, 2, 1, 0, 0, 1}, WeightSpec{2, 3, 1, 1, 0, 1},
                  WeightSpec{2, 3, 1, 0, 0, 1}}) {
                WeightSpec s = base;
                s.b = b;
                for (double x : xs) {
                    WeightSpec plus = s, minus = s;
                    plus.sign = 1;
                    minus.sign = -1;
                    const std::complex<double> w0 = weight_even(s, x);
                    const std::complex<double> sum = weight_side(plus, x) + weight_side(minus, x);
                    worst = std::max(worst, std::abs(w0 - sum) / std::abs(w0));
                }
            }
        add("weight_split", "nine rows, b in {2, 7/10}", worst);
    });

    guarded("weight_rewrite", [&] {
        double worst = 0.0;
        for (double b : {2.0, 0.8})
            for (double x : {0.1, 0.5, 1.2, 3.4})
                worst = std::max(worst, check_wilson_rewrite(b, x) ? 0.0 : 1.0);
        add("weight_rewrite", "cosh row as product of four gamma factors", worst);
    });

    guarded("weight_mass", [&] {
        double worst = 0.0;
        for (const auto& [k, l, b] : {std::tuple<int, int, double>{1, 3, 2.0},
                                      std::tuple<int, int, double>{1, 2, 0.7}}) {
            WeightSpec s;
            s.k = k;
            s.l = l;
            s.delta = 0;
            s.epsilon = 0;
            s.b = b;
            const QuadResult r = weight_mass(s);
            worst = std::max(worst, std::abs(r.value - std::complex<double>(1.0, 0.0)));
        }
        add("weight_mass", "cosh rows (1,3) and (1,2)", worst);
    });

    guarded("shifted_mp_pairing", [&] {
        double worst = 0.0;
        for (int m = 0; m <= grid; ++m)
            for (int n = 0; n <= grid; ++n) {
                const auto [same, cross] = check_mml(1.0, 3.0, kPi / 6.0, m, n);
                worst = std::max({worst, same.est_error, cross.est_error});
            }
        add("shifted_mp_pairing", "b=1 t=3 phi=pi/6", worst);
    });

    guarded("laurent_circle_norms", [&] {
        const Rational b(3, 10), q(2, 5);
        double worst = 0.0;
        for (int m = 0; m <= grid; ++m)
            for (int n = 0; n <= grid; ++n) {
                const QuadResult r = all_pairing(m, n, b, q);
                const std::complex<double> hm = laurent_p0(m, Cyclotomic(b), Cyclotomic(q))
                                                    .second.to_complex();
                const std::complex<double> hn = laurent_p0(n, Cyclotomic(b), Cyclotomic(q))
                                                    .second.to_complex();
                const std::complex<double> want = m == n ? hn : std::complex<double>(0.0, 0.0);
                worst = std::max(worst,
                                 std::abs(r.value - want) / std::max(std::abs(hm), std::abs(hn)));
            }
        add("laurent_circle_norms", "b=3/10 q=2/5", worst);
    });

    guarded("biorthogonal_pairing", [&] {
        const Cyclotomic om = Cyclotomic::omega();
        const Cyclotomic b = Cyclotomic::ratio(3, 10), q = Cyclotomic::ratio(1, 2);
        double worst = 0.0;
        for (int m = 0; m <= grid; ++m)
            for (int n = 0; n <= grid; ++n)
                worst = std::max(worst, check_sp(om, b, om * om, q, m, n).est_error);
        add("biorthogonal_pairing", "a=omega c=omega^2 b=3/10 q=1/2", worst);
        double collapse = 0.0;
        for (int m = 0; m <= grid; ++m)
            for (int n = 0; n <= grid; ++n)
                collapse = std::max(collapse, check_sp(om, b, om, q, m, n).est_error);
        add("biorthogonal_collapse", "c=a norms", collapse);
    });

    return emit_checks(out_path, format, rows);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact and numeric checks for the determinant catalog"};
    app.require_subcommand(1);

    std::string all_names;
    for (CaseId id : all_cases()) {
        if (!all_names.empty()) all_names += ", ";
        all_names += case_name(id);
    }

    // verify
    auto* sc_verify = app.add_subcommand("verify", "one identity over an N range");
    std::string v_case, v_n = "1..6", v_b, v_x, v_q, v_fmt = "text", v_out;
    std::uint64_t v_seed = 0;
    int v_jobs = 1;
    sc_verify->add_option("--case", v_case, "one of: " + all_names)->required();
    sc_verify->add_option("--n", v_n, "N or lo..hi")->capture_default_str();
    sc_verify->add_option("--b", v_b, "rational b, \"num/den\"");
    sc_verify->add_option("--x", v_x, "rational x, \"num/den\" (binom_ad)");
    sc_verify->add_option("--q", v_q, "rational q, \"num/den\" (q_qt)");
    sc_verify->add_option("--seed", v_seed, "carried into reports")->capture_default_str();
    sc_verify->add_option("--jobs", v_jobs, "worker threads")->capture_default_str();
    sc_verify->add_option("--format", v_fmt, "text or json")->capture_default_str();
    sc_verify->add_option("--out", v_out, "output path (default stdout)");

    // verify-all
    auto* sc_all = app.add_subcommand("verify-all", "the whole default grid");
    std::string a_fmt = "text", a_out;
    std::uint64_t a_seed = 0;
    int a_jobs = 1, a_count = 20;
    sc_all->add_option("--seed", a_seed, "seed for the q_qt sample")->capture_default_str();
    sc_all->add_option("--qt-count", a_count, "points per N for q_qt")->capture_default_str();
    sc_all->add_option("--jobs", a_jobs, "worker threads")->capture_default_str();
    sc_all->add_option("--format", a_fmt, "text or json")->capture_default_str();
    sc_all->add_option("--out", a_out, "output path (default stdout)");

    // qt-random
    auto* sc_qt = app.add_subcommand("qt-random", "seeded random points for q_qt");
    std::string q_fmt = "text", q_out;
    std::uint64_t q_seed = 0;
    int q_n = 3, q_count = 20;
    sc_qt->add_option("--n", q_n, "matrix size, 1..6")->capture_default_str();
    sc_qt->add_option("--count", q_count, "points to sample")->capture_default_str();
    sc_qt->add_option("--seed", q_seed, "sample seed")->capture_default_str();
    sc_qt->add_option("--format", q_fmt, "text or json")->capture_default_str();
    sc_qt->add_option("--out", q_out, "output path (default stdout)");

    // gfd
    auto* sc_gfd = app.add_subcommand("gfd", "diagonal scaffold identity per family");
    std::string g_family = "all", g_n = "1..6", g_b, g_fmt = "text", g_out;
    std::string gfd_names = "all";
    for (const auto& entry : gfd_families()) gfd_names += ", " + entry.first;
    sc_gfd->add_option("--family", g_family, gfd_names)->capture_default_str();
    sc_gfd->add_option("--n", g_n, "N or lo..hi")->capture_default_str();
    sc_gfd->add_option("--b", g_b, "rational b, \"num/den\" (default 2)");
    sc_gfd->add_option("--format", g_fmt, "text or json")->capture_default_str();
    sc_gfd->add_option("--out", g_out, "output path (default stdout)");

    // ofd
    auto* sc_ofd = app.add_subcommand("ofd", "antidiagonal scaffold identity per family");
    std::string o_family = "all", o_n = "1..8", o_b, o_fmt = "text", o_out;
    std::string ofd_names = "all";
    for (const auto& entry : ofd_families()) ofd_names += ", " + entry.first;
    sc_ofd->add_option("--family", o_family, ofd_names)->capture_default_str();
    sc_ofd->add_option("--n", o_n, "N or lo..hi")->capture_default_str();
    sc_ofd->add_option("--b", o_b, "rational b, \"num/den\" (default 2)");
    sc_ofd->add_option("--format", o_fmt, "text or json")->capture_default_str();
    sc_ofd->add_option("--out", o_out, "output path (default stdout)");

    // series
    auto* sc_series = app.add_subcommand("series", "truncated q-series identities");
    std::string s_fmt = "text", s_out;
    int s_k = 30, s_k_exp = 20;
    sc_series->add_option("--k", s_k, "order for the quintuple split")->capture_default_str();
    sc_series->add_option("--k-exp", s_k_exp, "order for the bilateral expansions")
        ->capture_default_str();
    sc_series->add_option("--format", s_fmt, "text or json")->capture_default_str();
    sc_series->add_option("--out", s_out, "output path (default stdout)");

    // quad
    auto* sc_quad = app.add_subcommand("quad", "numeric corroboration of the integral identities");
    std::string u_fmt = "text", u_out;
    int u_grid = 3;
    double u_tol = 1.0e-7;
    sc_quad->add_option("--grid", u_grid, "check m, n up to this degree")->capture_default_str();
    sc_quad->add_option("--tol", u_tol, "acceptance tolerance")->capture_default_str();
    sc_quad->add_option("--format", u_fmt, "text or json")->capture_default_str();
    sc_quad->add_option("--out", u_out, "output path (default stdout)");

    // asm
    auto* sc_asm = app.add_subcommand("asm", "count alternating sign matrices three ways");
    std::string m_fmt = "text", m_out;
    int m_n = 5;
    sc_asm->add_option("--n", m_n, "check sizes 1..n (n <= 5)")->capture_default_str();
    sc_asm->add_option("--format", m_fmt, "text or json")->capture_default_str();
    sc_asm->add_option("--out", m_out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    auto check_format = [](const std::string& f) {
        if (f != "text" && f != "json") {
            std::cerr << "unknown --format \"" << f << "\" (want text or json)\n";
            return false;
        }
        return true;
    };
    auto check_jobs = [](int j) {
        if (j < 1 || j > 64) {
            std::cerr << "--jobs must lie in 1..64\n";
            return false;
        }
        return true;
    };

    try {
        if (sc_verify->parsed()) {
            if (!check_format(v_fmt) || !check_jobs(v_jobs)) return 2;
            return do_verify(v_case, v_n, v_b, v_x, v_q, v_seed, v_jobs, v_out, v_fmt);
        }
        if (sc_all->parsed()) {
            if (!check_format(a_fmt) || !check_jobs(a_jobs)) return 2;
            if (a_count < 1 || a_count > 1000) {
                std::cerr << "--qt-count must lie in 1..1000\n";
                return 2;
            }
            return do_verify_all(a_seed, a_count, a_jobs, a_out, a_fmt);
        }
        if (sc_qt->parsed()) {
            if (!check_format(q_fmt)) return 2;
            if (q_count < 1 || q_count > 1000) {
                std::cerr << "--count must lie in 1..1000\n";
                return 2;
            }
            return do_qt_random(q_n, q_count, q_seed, q_out, q_fmt);
        }
        if (sc_gfd->parsed()) {
            if (!check_format(g_fmt)) return 2;
            return do_scaffold<GfdFamily>("gfd", gfd_families(), gfd_scaffold_check, g_family,
                                          g_n, g_b, g_out, g_fmt);
        }
        if (sc_ofd->parsed()) {
            if (!check_format(o_fmt)) return 2;
            return do_scaffold<OfdFamily>("ofd", ofd_families(), ofd_scaffold_check, o_family,
                                          o_n, o_b, o_out, o_fmt);
        }
        if (sc_series->parsed()) {
            if (!check_format(s_fmt)) return 2;
            return do_series(s_k, s_k_exp, s_out, s_fmt);
        }
        if (sc_quad->parsed()) {
            if (!check_format(u_fmt)) return 2;
            return do_quad(u_grid, u_tol, u_out, u_fmt);
        }
        if (sc_asm->parsed()) {
            if (!check_format(m_fmt)) return 2;
            if (m_n < 1) {
                std::cerr << "--n must be >= 1\n";
                return 2;
            }
            return do_asm(m_n, m_out, m_fmt);
        }
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 2;
}
