#pragma once

#include "cyclodet/cyclotomic.hpp"
#include "cyclodet/errors.hpp"
#include "cyclodet/linalg.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace cyclodet {

enum class CaseId {
    andrews_at,
    binom_ad,
    cekz_ct,
    cekz_ct2,
    cekz_ct3,
    half_hdt,
    half_ht,
    half_xt,
    third_yt,
    third_tdc,
    q_qt,
    asm_zd,
};

const std::vector<CaseId>& all_cases();
std::string case_name(CaseId id);
// Throws std::invalid_argument on an unknown name.
CaseId case_from_name(const std::string& name);

// One determinant identity instance. Which parameters matter depends on id:
// b for the Pochhammer-kernel cases, x for binom_ad, (q, b) for q_qt, none
// for asm_zd. seed is carried through to reports by the random qt driver.
struct TheoremCase {
    CaseId id = CaseId::andrews_at;
    int N = 1;
    Rational b = 0;
    Rational x = 0;
    Rational q = 0;
    std::uint64_t seed = 0;
};

struct VerifyReport {
    std::string case_id;
    int N = 0;
    std::map<std::string, std::string> params;
    Cyclotomic lhs;
    Cyclotomic rhs;
    bool equal = false;
    long long elapsed_ms = 0;
};

// The matrix under the determinant, with exact field entries. Throws
// ApplicabilityError naming the vanishing factor when the parameters sit on
// a pole of an entry.
ExactMatrix lhs_matrix(const TheoremCase& c);

// The closed-form product side. Products whose upper limit is negative are
// empty; the sign-alternating cases return exact 0 for odd N.
Cyclotomic rhs_value(const TheoremCase& c);

// equal == (determinant(lhs_matrix(c)) == rhs_value(c)), computed exactly.
VerifyReport verify(const TheoremCase& c);

// Seeded sample of `count` rational points (q, b), 0 < |q|, |b| < 1, each
// rejected and redrawn while any listed denominator factor vanishes; throws
// SampleExhausted if a point cannot be found within a fixed number of draws.
// Requires 1 <= N <= 6.
std::vector<VerifyReport> verify_qt_random(int N, int count, std::uint64_t seed);

enum class GfdFamily { andrews, cekz1, cekz2, half1, half_i, third_zeta };
enum class OfdFamily { cekz3, half_neg, third_neg };

// Builds the pre-scaling determinant from the displayed closed forms for
// h_m^{(1)} and <p_m^{(1)}, p_n^{(1)}>_{-1}, checks it equals the product of
// the h_n^{(0)}, then checks that row/column scaling carries the matrix
// entrywise onto the published determinant for the same family.
bool gfd_scaffold_check(GfdFamily family, int N, const Rational& b);

// Same scaffold with the sign-flipped mixed pairing: determinant must be
// (-1)^{N/2} (c_0 ... c_{(N-2)/2})^2 for even N and exactly 0 for odd N.
bool ofd_scaffold_check(OfdFamily family, int N, const Rational& b);

// det(-omega delta_{mn} + zeta^4 binom(m+n, n)), an exact rational value
// counting fixed-size alternating sign matrices.
Cyclotomic asm_det(int N);

} // namespace cyclodet
