#pragma once
#include <optional>
#include <string>
#include <vector>

#include "charvar/abelian.hpp"
#include "charvar/poly.hpp"

namespace charvar {

/* The four linear families of complex/compact groups whose free-group
 * character varieties this module knows closed forms for. */
enum class Family { GL, SL, U, SU };

Family parse_family(const std::string& name); // "gl", "sl", "u", "su"
std::string family_name(Family fam);

/* Pieces of the reduced rational form of the SU(2) Poincare series:
 *   f = [(1+t)^r (1+t^2) - (1-t)^r (1-t^2)] / 2   (the halving is exact)
 *   h = (1+t^3)^r
 *   q = t^2 f - h
 * and the series itself is 1 + t + t q / (1 - t^4). */
struct PoincareParts {
    IntPolynomial f, h, q;
};

PoincareParts poincare_su2_parts(long r);

enum class PoincareMethod { Rational, Series, Both };

/* Poincare polynomial of the rank-r SU(2) character variety.  Rational:
 * exact division of the reduced form.  Series: sum of the two binomial
 * families with geometric factors.  Both: compute both, throw InternalError
 * if they disagree. */
IntPolynomial poincare_su2(long r, PoincareMethod method = PoincareMethod::Both);

struct DegreeTop {
    long degree = 0; // 3r - 3
    Int top;         // always 1
};

/* Degree and top coefficient law, valid for r >= 3 (below that the
 * polynomial is the constant 1 and the law is vacuous). */
DegreeTop degree_and_top(long r);

/* One failed symmetry position: b_k != b_{m-k}. */
struct DualityMismatch {
    long k = 0;
    Int b_k, b_mk;
};

struct DualityReport {
    long m = 0; // formal dimension 3r - 3
    std::vector<DualityMismatch> mismatches;
    bool symmetric() const { return mismatches.empty(); }
};

/* Betti-number symmetry check on poincare_su2(r): records every k <= m/2
 * with b_k != b_{m-k}.  Empty exactly when r = 3 (within r >= 3). */
DualityReport duality_check(long r);

struct HomotopyAnswer {
    enum class Kind { GROUP, FINITE_UNKNOWN, OUT_OF_RANGE };
    Kind kind = Kind::OUT_OF_RANGE;
    std::optional<FgAbelianGroup> group;
    std::string range_note;

    static HomotopyAnswer of_group(FgAbelianGroup g, std::string note = "");
    static HomotopyAnswer finite_unknown(std::string note);
    static HomotopyAnswer out_of_range(std::string note);
    std::string to_string() const;
};

/* Fundamental group of the full character variety: free part of the family's
 * abelianization, one copy per generator. */
FgAbelianGroup pi1_charvar(Family fam, long n, long r);

/* Fundamental group of the locus of irreducible representations.  Only valid
 * when r >= 3, or r >= 2 with n >= 3; outside that window the answer is
 * OUT_OF_RANGE rather than a guess. */
HomotopyAnswer pi1_irr(Family fam, long n, long r);

/* Homotopy groups of the irreducible locus in the stability window
 * 1 < k < 2(r-1)(n-1) - 1, assuming (r-1)(n-1) >= 2. */
HomotopyAnswer pi_k_irr(Family fam, long n, long r, long k);

/* Second homotopy group of the full character variety: trivial for all four
 * families. */
FgAbelianGroup pi2_full(Family fam, long n, long r);

struct CodimBounds {
    long r = 0, n = 0;
    Int reducible_lower_complex; // (r-1)(n-1)
    Int reducible_lower_real;    // 2(r-1)(n-1)
    /* Complex codimension of the singular locus; present in the range
     * (r>=2, n>=3) or (r>=3, n>=2), plus the two small special cases. */
    std::optional<Int> singular;

    /* Lower bound on the real codimension of the reducible locus for a
     * general reductive group, from caller-supplied complex dimensions of the
     * group and of its largest proper parabolic. */
    Int general_bound(const Int& dim_g, const Int& dim_pmax) const;
};

CodimBounds codim_bounds(Family fam, long n, long r);

} // namespace charvar
