#include "ihz/intmat.hpp"

#include <algorithm>

namespace ihz {

namespace {

// g = s*a + t*b with g >= 0. extgcd(0,0) = (0,0,0).
struct ExtGcd {
    Int g, s, t;
};

ExtGcd extgcd(Int a, Int b) {
    Int s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    Int r0 = a, r1 = b;
    while (r1 != 0) {
        Int q = r0 / r1; // truncated division is fine: invariants kept exactly
        Int r2 = r0 - q * r1;
        Int s2 = s0 - q * s1;
        Int t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
        t0 = t1; t1 = t2;
    }
    if (r0 < 0) {
        r0 = -r0; s0 = -s0; t0 = -t0;
    }
    return {r0, s0, t0};
}

// Index of the last nonzero entry of column j, or nullopt.
std::optional<size_t> last_nonzero_row(const MatZ& a, size_t j) {
    for (size_t i = a.rows(); i-- > 0;)
        if (a.at(i, j) != 0)
            return i;
    return std::nullopt;
}

// Floor division, exact for the HNF reduction step.
Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

} // namespace

std::optional<HnfProfile> is_hnf(const MatZ& a) {
    HnfProfile p;
    size_t j = 0;
    while (j < a.cols() && !last_nonzero_row(a, j))
        ++j;
    p.r = j;
    std::optional<size_t> prev;
    for (; j < a.cols(); ++j) {
        auto f = last_nonzero_row(a, j);
        if (!f)
            return std::nullopt; // zero column after a nonzero one
        if (prev && *f <= *prev)
            return std::nullopt; // pivot rows must strictly increase
        prev = *f;
        p.pivot_rows.push_back(*f);
    }
    // Triangularity: each pivot row is clear left of its column.
    for (size_t i = 0; i < p.pivot_rows.size(); ++i)
        for (size_t k = 0; k < p.r + i; ++k)
            if (a.at(p.pivot_rows[i], k) != 0)
                return std::nullopt;
    return p;
}

bool is_canonical_hnf(const MatZ& a) {
    auto p = is_hnf(a);
    if (!p)
        return false;
    for (size_t i = 0; i < p->pivot_rows.size(); ++i) {
        size_t piv_col = p->r + i;
        size_t piv_row = p->pivot_rows[i];
        const Int& piv = a.at(piv_row, piv_col);
        if (piv <= 0)
            return false;
        for (size_t j = piv_col + 1; j < a.cols(); ++j) {
            const Int& x = a.at(piv_row, j);
            if (x < 0 || x >= piv)
                return false;
        }
    }
    return true;
}

HnfResult hnf(const MatZ& a) {
    const size_t m = a.rows(), n = a.cols();
    MatZ h = a;
    MatZ u = MatZ::identity(n);

    auto col_combine = [&](MatZ& mat, size_t dst, size_t src, const Int& cd, const Int& cs,
                           const Int& dd, const Int& ds) {
        // (dst, src) <- (cd*dst + cs*src, dd*dst + ds*src), applied to mat.
        for (size_t i = 0; i < mat.rows(); ++i) {
            Int x = mat.at(i, dst), y = mat.at(i, src);
            mat.at(i, dst) = cd * x + cs * y;
            mat.at(i, src) = dd * x + ds * y;
        }
    };
    auto col_addmul = [&](MatZ& mat, size_t dst, size_t src, const Int& k) {
        if (k == 0)
            return;
        for (size_t i = 0; i < mat.rows(); ++i)
            mat.at(i, dst) += k * mat.at(i, src);
    };
    auto col_negate = [&](MatZ& mat, size_t j) {
        for (size_t i = 0; i < mat.rows(); ++i)
            mat.at(i, j) = -mat.at(i, j);
    };

    size_t active = n; // columns [0, active) still unassigned
    std::vector<size_t> pivot_rows_rev;
    for (size_t row = m; row-- > 0 && active > 0;) {
        size_t c = active - 1;
        // Fold the whole active row into column c by gcd combinations.
        for (size_t j = c; j-- > 0;) {
            if (h.at(row, j) == 0)
                continue;
            Int x = h.at(row, c), y = h.at(row, j);
            auto [g, s, t] = extgcd(x, y);
            // det of [[s, -y/g], [t, x/g]] = (s*x + t*y)/g = 1
            Int yr = y / g, xr = x / g;
            col_combine(h, c, j, s, t, -yr, xr);
            col_combine(u, c, j, s, t, -yr, xr);
        }
        if (h.at(row, c) == 0)
            continue; // row already clear, no pivot here
        if (h.at(row, c) < 0) {
            col_negate(h, c);
            col_negate(u, c);
        }
        // Reduce this pivot row across the already-fixed columns.
        const Int& piv = h.at(row, c);
        for (size_t j = c + 1; j < n; ++j) {
            Int q = floor_div(h.at(row, j), piv);
            col_addmul(h, j, c, -q);
            col_addmul(u, j, c, -q);
        }
        pivot_rows_rev.push_back(row);
        --active;
    }

    HnfResult res{std::move(h), std::move(u), active, {}};
    res.pivot_rows.assign(pivot_rows_rev.rbegin(), pivot_rows_rev.rend());
    return res;
}

MatZ kernel_basis(const MatZ& a) {
    HnfResult hr = hnf(a);
    MatZ k = submatrix_cols(hr.u, 0, hr.r);
    for (size_t j = 0; j < k.cols(); ++j)
        for (size_t i = 0; i < k.rows(); ++i) {
            if (k.at(i, j) == 0)
                continue;
            if (k.at(i, j) < 0)
                for (size_t ii = 0; ii < k.rows(); ++ii)
                    k.at(ii, j) = -k.at(ii, j);
            break;
        }
    return k;
}

Int det(const MatZ& a) {
    if (a.rows() != a.cols())
        throw DomainError("determinant of non-square " + a.shape_str() + " matrix");
    const size_t n = a.rows();
    if (n == 0)
        return 1;
    MatZ w = a;
    Int prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (w.at(k, k) == 0) {
            size_t p = k + 1;
            while (p < n && w.at(p, k) == 0)
                ++p;
            if (p == n)
                return 0;
            for (size_t j = 0; j < n; ++j)
                std::swap(w.at(k, j), w.at(p, j));
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                w.at(i, j) = (w.at(k, k) * w.at(i, j) - w.at(i, k) * w.at(k, j)) / prev;
            w.at(i, k) = 0;
        }
        prev = w.at(k, k);
    }
    Int d = w.at(n - 1, n - 1);
    return sign < 0 ? Int(-d) : d;
}

bool is_unimodular(const MatZ& u) {
    if (u.rows() != u.cols())
        return false;
    Int d = det(u);
    return d == 1 || d == -1;
}

std::optional<std::vector<Int>> solve_z(const MatZ& a, const std::vector<Int>& b) {
    if (b.size() != a.rows())
        throw DimensionError("right-hand side of length " + std::to_string(b.size()) +
                             " for " + a.shape_str() + " system");
    HnfResult hr = hnf(a);
    const size_t n = a.cols();
    std::vector<Int> y(n, 0);
    // Pivot rows strictly increase with the column index, so each pivot
    // row constrains exactly one still-unknown coordinate when processed
    // from the last column backwards.
    for (size_t idx = hr.pivot_rows.size(); idx-- > 0;) {
        size_t col = hr.r + idx;
        size_t row = hr.pivot_rows[idx];
        Int rhs = b[row];
        for (size_t j = col + 1; j < n; ++j)
            rhs -= hr.h.at(row, j) * y[j];
        const Int& piv = hr.h.at(row, col);
        if (rhs % piv != 0)
            return std::nullopt;
        y[col] = rhs / piv;
    }
    // Rows outside the pivot image must agree too.
    if (matvec(hr.h, y) != b)
        return std::nullopt;
    return matvec(hr.u, y);
}

std::pair<MatZ, MatZ> pullback(const MatZ& f, const MatZ& g) {
    if (f.rows() != g.rows())
        throw DimensionError("pullback legs target different objects: " + f.shape_str() +
                             " vs " + g.shape_str());
    MatZ k = kernel_basis(hstack(f, -g));
    MatZ p = submatrix_rows(k, 0, f.cols());
    MatZ q = submatrix_rows(k, f.cols(), g.cols());
    return {std::move(p), std::move(q)};
}

std::pair<MatZ, MatZ> pushout(const MatZ& f, const MatZ& g) {
    if (f.cols() != g.cols())
        throw DimensionError("pushout legs start from different objects: " + f.shape_str() +
                             " vs " + g.shape_str());
    auto [p, q] = pullback(f.transpose(), g.transpose());
    return {p.transpose(), q.transpose()};
}

SpanZ span_identity(size_t n) { return SpanZ(MatZ::identity(n), MatZ::identity(n)); }
CospanZ cospan_identity(size_t n) { return CospanZ(MatZ::identity(n), MatZ::identity(n)); }

SpanZ span_of_map(const MatZ& a) { return SpanZ(MatZ::identity(a.cols()), a); }
SpanZ span_of_opmap(const MatZ& a) { return SpanZ(a, MatZ::identity(a.cols())); }
CospanZ cospan_of_map(const MatZ& a) { return CospanZ(a, MatZ::identity(a.rows())); }
CospanZ cospan_of_opmap(const MatZ& a) { return CospanZ(MatZ::identity(a.rows()), a); }

bool span_iso(const SpanZ& s1, const SpanZ& s2) {
    if (s1.n() != s2.n() || s1.m() != s2.m())
        return false;
    if (s1.middle() != s2.middle())
        return false;
    return hnf(vstack(s1.left, s1.right)).h == hnf(vstack(s2.left, s2.right)).h;
}

bool cospan_iso(const CospanZ& c1, const CospanZ& c2) {
    SpanZ t1(c1.left.transpose(), c1.right.transpose());
    SpanZ t2(c2.left.transpose(), c2.right.transpose());
    return span_iso(t1, t2);
}

SpanZ span_compose(const SpanZ& s1, const SpanZ& s2) {
    if (s1.m() != s2.n())
        throw DimensionError("span boundary mismatch: " + std::to_string(s1.m()) + " vs " +
                             std::to_string(s2.n()));
    auto [p, q] = pullback(s1.right, s2.left);
    return SpanZ(mul(s1.left, p), mul(s2.right, q));
}

CospanZ cospan_compose(const CospanZ& c1, const CospanZ& c2) {
    if (c1.m() != c2.n())
        throw DimensionError("cospan boundary mismatch: " + std::to_string(c1.m()) + " vs " +
                             std::to_string(c2.n()));
    auto [p, q] = pushout(c1.right, c2.left);
    return CospanZ(mul(p, c1.left), mul(q, c2.right));
}

CospanZ pushout_cospan(const SpanZ& s) {
    auto [p, q] = pushout(s.left, s.right);
    return CospanZ(std::move(p), std::move(q));
}

SpanZ pullback_span(const CospanZ& c) {
    auto [p, q] = pullback(c.left, c.right);
    return SpanZ(std::move(p), std::move(q));
}

SpanZ span_tensor(const SpanZ& s1, const SpanZ& s2) {
    return SpanZ(direct_sum(s1.left, s2.left), direct_sum(s1.right, s2.right));
}

CospanZ cospan_tensor(const CospanZ& c1, const CospanZ& c2) {
    return CospanZ(direct_sum(c1.left, c2.left), direct_sum(c1.right, c2.right));
}

} // namespace ihz
