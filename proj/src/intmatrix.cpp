#include "charvar/intmatrix.hpp"

#include <algorithm>

#include "charvar/errors.hpp"

namespace charvar {

using boost::multiprecision::abs;

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::mul(const IntMatrix& other) const {
    if (cols_ != other.rows_) throw InternalError("matrix product shape mismatch");
    IntMatrix out(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& x = at(i, k);
            if (x == 0) continue;
            for (int j = 0; j < other.cols_; ++j) out.at(i, j) += x * other.at(k, j);
        }
    return out;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

void IntMatrix::swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::add_row_multiple(int dst, int src, const Int& q) {
    for (int c = 0; c < cols_; ++c) at(dst, c) += q * at(src, c);
}

void IntMatrix::add_col_multiple(int dst, int src, const Int& q) {
    for (int r = 0; r < rows_; ++r) at(r, dst) += q * at(r, src);
}

void IntMatrix::negate_row(int i) {
    for (int c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntMatrix::negate_col(int j) {
    for (int r = 0; r < rows_; ++r) at(r, j) = -at(r, j);
}

std::vector<Int> SnfResult::diagonal() const {
    std::vector<Int> out;
    const int n = std::min(d.rows(), d.cols());
    for (int i = 0; i < n; ++i) out.push_back(d.at(i, i));
    return out;
}

int SnfResult::rank() const {
    int r = 0;
    for (const auto& x : diagonal())
        if (x != 0) ++r;
    return r;
}

/* g = x*a + y*b with g = gcd(a, b) >= 0. */
static Int egcd(const Int& a, const Int& b, Int& x, Int& y) {
    Int r0 = a, r1 = b, x0 = 1, x1 = 0, y0 = 0, y1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;
        r0 -= q * r1;
        x0 -= q * x1;
        y0 -= q * y1;
        std::swap(r0, r1);
        std::swap(x0, x1);
        std::swap(y0, y1);
    }
    if (r0 < 0) {
        r0 = -r0;
        x0 = -x0;
        y0 = -y0;
    }
    x = x0;
    y = y0;
    return r0;
}

/* (row i1, row i2) <- (x*i1 + y*i2, z*i1 + w*i2); the caller picks a
 * unimodular coefficient block. */
static void combine_rows(IntMatrix& m, int i1, int i2, const Int& x, const Int& y, const Int& z,
                         const Int& w) {
    for (int c = 0; c < m.cols(); ++c) {
        Int a = m.at(i1, c), b = m.at(i2, c);
        m.at(i1, c) = x * a + y * b;
        m.at(i2, c) = z * a + w * b;
    }
}

static void combine_cols(IntMatrix& m, int j1, int j2, const Int& x, const Int& y, const Int& z,
                         const Int& w) {
    for (int r = 0; r < m.rows(); ++r) {
        Int a = m.at(r, j1), b = m.at(r, j2);
        m.at(r, j1) = x * a + y * b;
        m.at(r, j2) = z * a + w * b;
    }
}

SnfResult smith_normal_form(const IntMatrix& m) {
    SnfResult r{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols())};
    IntMatrix &d = r.d, &u = r.u, &v = r.v;
    const int tmax = std::min(m.rows(), m.cols());
    int t = 0;
    while (t < tmax) {
        /* Smallest absolute nonzero entry in the remaining block; ties go to
         * the smallest (row, col). */
        int pr = -1, pc = -1;
        for (int i = t; i < d.rows(); ++i)
            for (int j = t; j < d.cols(); ++j) {
                const Int& x = d.at(i, j);
                if (x == 0) continue;
                if (pr < 0 || abs(x) < abs(d.at(pr, pc))) {
                    pr = i;
                    pc = j;
                }
            }
        if (pr < 0) break;
        d.swap_rows(t, pr);
        u.swap_rows(t, pr);
        d.swap_cols(t, pc);
        v.swap_cols(t, pc);

        /* Each gcd step replaces the pivot by a proper divisor, so the
         * alternation below settles after at most log(pivot) rounds.  A round
         * whose row pass never mixes column t back in leaves both the pivot
         * row and column clear. */
        bool col_dirty = true;
        while (col_dirty) {
            col_dirty = false;
            for (int i = t + 1; i < d.rows(); ++i) {
                const Int b = d.at(i, t);
                if (b == 0) continue;
                const Int a = d.at(t, t);
                if (b % a == 0) {
                    Int q = b / a;
                    d.add_row_multiple(i, t, -q);
                    u.add_row_multiple(i, t, -q);
                } else {
                    Int x, y;
                    Int g = egcd(a, b, x, y);
                    combine_rows(d, t, i, x, y, -b / g, a / g);
                    combine_rows(u, t, i, x, y, -b / g, a / g);
                }
            }
            for (int j = t + 1; j < d.cols(); ++j) {
                const Int b = d.at(t, j);
                if (b == 0) continue;
                const Int a = d.at(t, t);
                if (b % a == 0) {
                    Int q = b / a;
                    d.add_col_multiple(j, t, -q);
                    v.add_col_multiple(j, t, -q);
                } else {
                    Int x, y;
                    Int g = egcd(a, b, x, y);
                    combine_cols(d, t, j, x, y, -b / g, a / g);
                    combine_cols(v, t, j, x, y, -b / g, a / g);
                    col_dirty = true;
                }
            }
        }

        bool divides_rest = true;
        for (int i = t + 1; i < d.rows() && divides_rest; ++i)
            for (int j = t + 1; j < d.cols(); ++j)
                if (d.at(i, j) % d.at(t, t) != 0) {
                    d.add_row_multiple(t, i, 1);
                    u.add_row_multiple(t, i, 1);
                    divides_rest = false;
                    break;
                }
        if (divides_rest) ++t;
    }
    for (int i = 0; i < tmax; ++i)
        if (d.at(i, i) < 0) {
            d.negate_row(i);
            u.negate_row(i);
        }
    return r;
}

Int determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw InternalError("determinant of non-square matrix");
    const int n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            int swap = -1;
            for (int i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) {
                    swap = i;
                    break;
                }
            if (swap < 0) return 0;
            a.swap_rows(k, swap);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

} // namespace charvar
