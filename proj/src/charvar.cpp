#include "charvar/charvar.hpp"

#include <sstream>

#include "charvar/errors.hpp"

namespace charvar {

Family parse_family(const std::string& name) {
    if (name == "gl") return Family::GL;
    if (name == "sl") return Family::SL;
    if (name == "u") return Family::U;
    if (name == "su") return Family::SU;
    throw UnsupportedFamily("unsupported family '" + name + "' (expected gl, sl, u, su)");
}

std::string family_name(Family fam) {
    switch (fam) {
        case Family::GL: return "gl";
        case Family::SL: return "sl";
        case Family::U: return "u";
        case Family::SU: return "su";
    }
    throw InternalError("bad family enum");
}

static void check_nr(long n, long r) {
    if (n < 1 || r < 1) throw DomainError("need n >= 1 and r >= 1");
}

PoincareParts poincare_su2_parts(long r) {
    if (r < 1) throw DomainError("poincare_su2_parts: need r >= 1");
    IntPolynomial one_plus_t({1, 1});
    IntPolynomial one_minus_t({1, -1});
    IntPolynomial one_plus_t2({1, 0, 1});
    IntPolynomial one_minus_t2({1, 0, -1});
    PoincareParts parts;
    parts.f = (one_plus_t.pow(r) * one_plus_t2 - one_minus_t.pow(r) * one_minus_t2)
                  .divide_exact(Int(2));
    parts.h = IntPolynomial({1, 0, 0, 1}).pow(r);
    parts.q = parts.f.shifted(2) - parts.h;
    return parts;
}

static IntPolynomial poincare_su2_rational(long r) {
    PoincareParts parts = poincare_su2_parts(r);
    IntPolynomial one_minus_t4({1, 0, 0, 0, -1});
    IntPolynomial tail = parts.q.shifted(1).divide_exact(one_minus_t4);
    return IntPolynomial({1, 1}) + tail;
}

static IntPolynomial poincare_su2_series(long r) {
    IntPolynomial p = IntPolynomial::constant(1);
    auto geometric = [](long k) { // 1 + t^4 + ... + t^{4(k-1)}
        std::vector<Int> c(std::size_t(4 * (k - 1)) + 1);
        for (long j = 0; j < k; ++j) c[std::size_t(4 * j)] = 1;
        return IntPolynomial(std::move(c));
    };
    for (long k = 1; 2 * k + 1 <= r; ++k)
        p = p + geometric(k).shifted(2 * k + 4) * binomial(r, 2 * k + 1);
    for (long k = 1; 2 * k + 2 <= r; ++k)
        p = p + geometric(k).shifted(2 * k + 7) * binomial(r, 2 * k + 2);
    return p;
}

IntPolynomial poincare_su2(long r, PoincareMethod method) {
    if (r < 1) throw DomainError("poincare_su2: need r >= 1");
    switch (method) {
        case PoincareMethod::Rational: return poincare_su2_rational(r);
        case PoincareMethod::Series: return poincare_su2_series(r);
        case PoincareMethod::Both: {
            IntPolynomial a = poincare_su2_rational(r);
            IntPolynomial b = poincare_su2_series(r);
            if (!(a == b))
                throw InternalError("poincare_su2: rational and series forms disagree at r = " +
                                    std::to_string(r));
            return a;
        }
    }
    throw InternalError("bad method enum");
}

DegreeTop degree_and_top(long r) {
    if (r < 3) throw DomainError("degree_and_top: the degree law needs r >= 3");
    IntPolynomial p = poincare_su2(r);
    DegreeTop out{3 * r - 3, 1};
    if (p.degree() != out.degree || p.coeff(out.degree) != out.top)
        throw InternalError("degree_and_top: computed polynomial violates the degree law");
    return out;
}

DualityReport duality_check(long r) {
    if (r < 3) throw DomainError("duality_check: need r >= 3");
    IntPolynomial p = poincare_su2(r);
    DualityReport report;
    report.m = 3 * r - 3;
    for (long k = 0; 2 * k <= report.m; ++k) {
        Int a = p.coeff(k), b = p.coeff(report.m - k);
        if (a != b) report.mismatches.push_back({k, a, b});
    }
    return report;
}

HomotopyAnswer HomotopyAnswer::of_group(FgAbelianGroup g, std::string note) {
    HomotopyAnswer a;
    a.kind = Kind::GROUP;
    a.group = std::move(g);
    a.range_note = std::move(note);
    return a;
}

HomotopyAnswer HomotopyAnswer::finite_unknown(std::string note) {
    HomotopyAnswer a;
    a.kind = Kind::FINITE_UNKNOWN;
    a.range_note = std::move(note);
    return a;
}

HomotopyAnswer HomotopyAnswer::out_of_range(std::string note) {
    HomotopyAnswer a;
    a.kind = Kind::OUT_OF_RANGE;
    a.range_note = std::move(note);
    return a;
}

std::string HomotopyAnswer::to_string() const {
    std::ostringstream out;
    switch (kind) {
        case Kind::GROUP: out << group->to_string(); break;
        case Kind::FINITE_UNKNOWN: out << "finite (not determined by the closed forms)"; break;
        case Kind::OUT_OF_RANGE: out << "out of range"; break;
    }
    if (!range_note.empty()) out << " [" << range_note << "]";
    return out.str();
}

static bool has_central_circle(Family fam) { return fam == Family::GL || fam == Family::U; }

FgAbelianGroup pi1_charvar(Family fam, long n, long r) {
    check_nr(n, r);
    return has_central_circle(fam) ? FgAbelianGroup::free_abelian(int(r))
                                   : FgAbelianGroup::trivial();
}

HomotopyAnswer pi1_irr(Family fam, long n, long r) {
    check_nr(n, r);
    if (!(r >= 3 || (r >= 2 && n >= 3)))
        return HomotopyAnswer::out_of_range(
            "needs r >= 3, or r >= 2 with n >= 3; below that the irreducible locus "
            "is too small to control");
    return HomotopyAnswer::of_group(pi1_charvar(fam, n, r));
}

HomotopyAnswer pi_k_irr(Family fam, long n, long r, long k) {
    check_nr(n, r);
    long s = (r - 1) * (n - 1);
    std::ostringstream window;
    window << "window 1 < k < " << 2 * s - 1 << " from (r-1)(n-1) = " << s;
    std::string note = window.str();
    if (has_central_circle(fam))
        note += "; agrees with the determinant-one family in this range";
    if (s < 2)
        return HomotopyAnswer::out_of_range("needs (r-1)(n-1) >= 2, got " + std::to_string(s));
    if (k <= 1 || k >= 2 * s - 1) return HomotopyAnswer::out_of_range(note);

    if (k == 2) return HomotopyAnswer::of_group(FgAbelianGroup::cyclic(Int(n)), note);
    if (k < 2 * n) {
        if (k % 2 == 1) return HomotopyAnswer::of_group(FgAbelianGroup::free_abelian(int(r)), note);
        return HomotopyAnswer::of_group(FgAbelianGroup::free_abelian(1), note);
    }
    if (k == 2 * n) {
        FgAbelianGroup g;
        g.free_rank = 1;
        g.invariant_factors.assign(std::size_t(r), factorial(n));
        return HomotopyAnswer::of_group(std::move(g), note);
    }
    return HomotopyAnswer::finite_unknown("2n < k < 2(r-1)(n-1) - 1; " + note);
}

FgAbelianGroup pi2_full(Family fam, long n, long r) {
    check_nr(n, r);
    (void)fam;
    return FgAbelianGroup::trivial();
}

Int CodimBounds::general_bound(const Int& dim_g, const Int& dim_pmax) const {
    return Int(r - 1) * (dim_g - dim_pmax);
}

CodimBounds codim_bounds(Family fam, long n, long r) {
    check_nr(n, r);
    CodimBounds out;
    out.r = r;
    out.n = n;
    out.reducible_lower_complex = Int(r - 1) * (n - 1);
    out.reducible_lower_real = 2 * out.reducible_lower_complex;
    if ((r >= 2 && n >= 3) || (r >= 3 && n >= 2)) {
        out.singular = Int(2) * (n - 1) * (r - 1) - 1;
    } else if (n == 2 && r == 2) {
        // Small cases fall outside the formula and are known individually.
        if (fam == Family::GL) out.singular = 5;
        if (fam == Family::SL) out.singular = 3;
    }
    return out;
}

} // namespace charvar
