#include "ihz/linrel.hpp"

#include <sstream>

namespace ihz {

std::pair<MatQ, size_t> rref(const MatQ& a) {
    MatQ w = a;
    size_t rank = 0;
    for (size_t col = 0; col < w.cols() && rank < w.rows(); ++col) {
        size_t piv = rank;
        while (piv < w.rows() && w.at(piv, col) == 0)
            ++piv;
        if (piv == w.rows())
            continue;
        if (piv != rank)
            for (size_t j = 0; j < w.cols(); ++j)
                std::swap(w.at(piv, j), w.at(rank, j));
        Rat p = w.at(rank, col);
        for (size_t j = col; j < w.cols(); ++j)
            w.at(rank, j) /= p;
        for (size_t i = 0; i < w.rows(); ++i) {
            if (i == rank || w.at(i, col) == 0)
                continue;
            Rat f = w.at(i, col);
            for (size_t j = col; j < w.cols(); ++j)
                w.at(i, j) -= f * w.at(rank, j);
        }
        ++rank;
    }
    return {std::move(w), rank};
}

std::optional<std::vector<Rat>> solve_q(const MatQ& a, const std::vector<Rat>& b) {
    if (b.size() != a.rows())
        throw DimensionError("right-hand side of length " + std::to_string(b.size()) +
                             " for " + a.shape_str() + " system");
    MatQ aug(a.rows(), a.cols() + 1);
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < a.cols(); ++j)
            aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    auto [r, rank] = rref(aug);
    std::vector<Rat> x(a.cols(), Rat(0));
    for (size_t i = 0; i < rank; ++i) {
        size_t lead = 0;
        while (lead <= a.cols() && r.at(i, lead) == 0)
            ++lead;
        if (lead == a.cols())
            return std::nullopt; // row (0 ... 0 | 1): inconsistent
        x[lead] = r.at(i, a.cols());
    }
    return x;
}

std::optional<MatQ> inverse_q(const MatQ& a) {
    if (a.rows() != a.cols())
        throw DomainError("inverse of non-square " + a.shape_str() + " matrix");
    const size_t n = a.rows();
    MatQ aug = hstack(a, MatQ::identity(n));
    auto [r, rank] = rref(aug);
    if (rank < n)
        return std::nullopt;
    // Full rank: left block must have reduced to the identity.
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (r.at(i, j) != (i == j ? Rat(1) : Rat(0)))
                return std::nullopt;
    return submatrix_cols(r, n, n);
}

Subspace Subspace::from_generators(const MatQ& gens) {
    auto [r, rank] = rref(gens);
    Subspace s(gens.cols());
    s.basis_ = submatrix_rows(r, 0, rank);
    return s;
}

Subspace Subspace::from_generators(const std::vector<std::vector<Rat>>& gens, size_t ambient) {
    MatQ m(gens.size(), ambient);
    for (size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].size() != ambient)
            throw DimensionError("generator of length " + std::to_string(gens[i].size()) +
                                 " in ambient " + std::to_string(ambient));
        for (size_t j = 0; j < ambient; ++j)
            m.at(i, j) = gens[i][j];
    }
    return from_generators(m);
}

Subspace Subspace::full(size_t ambient) {
    return from_generators(MatQ::identity(ambient));
}

bool Subspace::contains(const std::vector<Rat>& v) const {
    if (v.size() != ambient_)
        throw DimensionError("vector of length " + std::to_string(v.size()) +
                             " in ambient " + std::to_string(ambient_));
    // Reduce v against the canonical basis; membership iff residue is 0.
    std::vector<Rat> w = v;
    for (size_t i = 0; i < basis_.rows(); ++i) {
        size_t lead = 0;
        while (lead < ambient_ && basis_.at(i, lead) == 0)
            ++lead;
        if (lead == ambient_ || w[lead] == 0)
            continue;
        Rat f = w[lead]; // pivot entry is 1
        for (size_t j = 0; j < ambient_; ++j)
            w[j] -= f * basis_.at(i, j);
    }
    for (const Rat& x : w)
        if (x != 0)
            return false;
    return true;
}

Subspace kernel_q(const MatQ& a) {
    auto [r, rank] = rref(a);
    const size_t n = a.cols();
    std::vector<size_t> lead_of_row(rank);
    std::vector<bool> is_pivot(n, false);
    for (size_t i = 0; i < rank; ++i) {
        size_t lead = 0;
        while (lead < n && r.at(i, lead) == 0)
            ++lead;
        lead_of_row[i] = lead;
        is_pivot[lead] = true;
    }
    MatQ gens(n - rank, n);
    size_t g = 0;
    for (size_t j = 0; j < n; ++j) {
        if (is_pivot[j])
            continue;
        gens.at(g, j) = Rat(1);
        for (size_t i = 0; i < rank; ++i)
            gens.at(g, lead_of_row[i]) = -r.at(i, j);
        ++g;
    }
    return Subspace::from_generators(gens);
}

LinRel phi(const SpanZ& s) {
    MatZ stacked = vstack(s.left, s.right);
    // Columns generate; canonicalize their span as row vectors.
    return LinRel(s.n(), s.m(), Subspace::from_generators(to_q(stacked.transpose())));
}

LinRel psi(const CospanZ& c) {
    MatZ sys = hstack(c.left, -c.right);
    return LinRel(c.n(), c.m(), kernel_q(to_q(sys)));
}

LinRel rel_compose(const LinRel& v, const LinRel& w) {
    if (v.m != w.n)
        throw DimensionError("relation boundary mismatch: " + std::to_string(v.m) + " vs " +
                             std::to_string(w.n));
    const size_t z = v.m;
    // Generators as columns: G_V = (X_V / M_V), G_W = (M_W / Y_W).
    MatQ gv = v.space.basis().transpose(); // (n+z) x a
    MatQ gw = w.space.basis().transpose(); // (z+m) x b
    MatQ mv = submatrix_rows(gv, v.n, z);
    MatQ mw = submatrix_rows(gw, 0, z);
    Subspace match = kernel_q(hstack(mv, -mw)); // pairs (u, t) with M_V u = M_W t
    const size_t a = gv.cols(), b = gw.cols();
    MatQ xv = submatrix_rows(gv, 0, v.n);
    MatQ yw = submatrix_rows(gw, z, w.m);
    MatQ pairs = match.basis().transpose(); // (a+b) x k
    MatQ us = submatrix_rows(pairs, 0, a);
    MatQ ts = submatrix_rows(pairs, a, b);
    MatQ gens = vstack(mul(xv, us), mul(yw, ts)); // (n+m) x k
    return LinRel(v.n, w.m, Subspace::from_generators(gens.transpose()));
}

LinRel rel_id(size_t n) {
    MatQ gens(n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        gens.at(i, i) = Rat(1);
        gens.at(i, n + i) = Rat(1);
    }
    return LinRel(n, n, Subspace::from_generators(gens));
}

LinRel rel_sym(size_t n, size_t m) {
    MatQ gens(n + m, 2 * (n + m));
    for (size_t i = 0; i < n; ++i) {
        gens.at(i, i) = Rat(1);
        gens.at(i, (n + m) + m + i) = Rat(1);
    }
    for (size_t j = 0; j < m; ++j) {
        gens.at(n + j, n + j) = Rat(1);
        gens.at(n + j, (n + m) + j) = Rat(1);
    }
    return LinRel(n + m, m + n, Subspace::from_generators(gens));
}

LinRel rel_tensor(const LinRel& v, const LinRel& w) {
    const size_t n = v.n + w.n, m = v.m + w.m;
    MatQ gens(v.space.dim() + w.space.dim(), n + m);
    for (size_t i = 0; i < v.space.dim(); ++i) {
        for (size_t j = 0; j < v.n; ++j)
            gens.at(i, j) = v.space.basis().at(i, j);
        for (size_t j = 0; j < v.m; ++j)
            gens.at(i, n + j) = v.space.basis().at(i, v.n + j);
    }
    for (size_t i = 0; i < w.space.dim(); ++i) {
        for (size_t j = 0; j < w.n; ++j)
            gens.at(v.space.dim() + i, v.n + j) = w.space.basis().at(i, j);
        for (size_t j = 0; j < w.m; ++j)
            gens.at(v.space.dim() + i, n + v.m + j) = w.space.basis().at(i, w.n + j);
    }
    return LinRel(n, m, Subspace::from_generators(gens));
}

LinRel converse(const LinRel& v) {
    MatQ gens(v.space.dim(), v.m + v.n);
    for (size_t i = 0; i < v.space.dim(); ++i) {
        for (size_t j = 0; j < v.m; ++j)
            gens.at(i, j) = v.space.basis().at(i, v.n + j);
        for (size_t j = 0; j < v.n; ++j)
            gens.at(i, v.m + j) = v.space.basis().at(i, j);
    }
    return LinRel(v.m, v.n, Subspace::from_generators(gens));
}

LinRel graph_rel(const MatQ& a) {
    const size_t n = a.cols(), m = a.rows();
    MatQ gens(n, n + m);
    for (size_t i = 0; i < n; ++i) {
        gens.at(i, i) = Rat(1);
        for (size_t j = 0; j < m; ++j)
            gens.at(i, n + j) = a.at(j, i);
    }
    return LinRel(n, m, Subspace::from_generators(gens));
}

LinRel graph_rel(const MatZ& a) { return graph_rel(to_q(a)); }

LinRel rel_full(size_t n, size_t m) {
    return LinRel(n, m, Subspace::full(n + m));
}

SpanZ rel_to_span(const LinRel& r) {
    const size_t z = r.space.dim();
    MatZ stacked(r.n + r.m, z);
    for (size_t i = 0; i < z; ++i) {
        auto [w, d] = clear_denominators(r.space.basis().row(i));
        (void)d;
        for (size_t j = 0; j < r.n + r.m; ++j)
            stacked.at(j, i) = w[j];
    }
    return SpanZ(submatrix_rows(stacked, 0, r.n), submatrix_rows(stacked, r.n, r.m));
}

CospanZ rel_to_cospan(const LinRel& r) {
    return pushout_cospan(rel_to_span(r));
}

Classification classify_1_1(const LinRel& r) {
    if (r.n != 1 || r.m != 1)
        throw DomainError("classification needs a 1 -> 1 relation, got " +
                          std::to_string(r.n) + " -> " + std::to_string(r.m));
    switch (r.space.dim()) {
    case 0: return {RelClass::Zero, 0, 0};
    case 2: return {RelClass::Full, 0, 0};
    default: break;
    }
    Rat a = r.space.basis().at(0, 0);
    Rat b = r.space.basis().at(0, 1);
    if (b == 0)
        return {RelClass::XAxis, 0, 0};
    if (a == 0)
        return {RelClass::YAxis, 0, 0};
    auto [w, d] = clear_denominators({a, b});
    (void)d;
    if (w[0] < 0) {
        w[0] = -w[0];
        w[1] = -w[1];
    }
    return {RelClass::Line, w[0], w[1]};
}

std::string to_string(const Classification& c) {
    switch (c.tag) {
    case RelClass::Full: return "full";
    case RelClass::Zero: return "zero";
    case RelClass::XAxis: return "x_axis";
    case RelClass::YAxis: return "y_axis";
    case RelClass::Line: return "line(" + to_string(c.k1) + "," + to_string(c.k2) + ")";
    }
    return "?";
}

std::string to_string(const Subspace& s) {
    std::ostringstream out;
    out << "dim " << s.ambient() << ", rank " << s.dim() << "\n";
    for (size_t i = 0; i < s.dim(); ++i) {
        for (size_t j = 0; j < s.ambient(); ++j) {
            if (j)
                out << " ";
            out << to_string(s.basis().at(i, j));
        }
        out << "\n";
    }
    return out.str();
}

std::string to_string(const LinRel& r) {
    return "rel " + std::to_string(r.n) + " " + std::to_string(r.m) + "\n" +
           to_string(r.space);
}

LinRel parse_linrel(const std::string& text) {
    std::string cleaned = text;
    for (char& c : cleaned)
        if (c == ',')
            c = ' ';
    std::istringstream in(cleaned);
    std::string word;
    size_t n, m, d, k;
    if (!(in >> word) || word != "rel" || !(in >> n >> m))
        throw ParseError("expected 'rel N M' header");
    if (!(in >> word) || word != "dim" || !(in >> d))
        throw ParseError("expected 'dim D, rank R' header");
    if (!(in >> word) || word != "rank" || !(in >> k))
        throw ParseError("expected 'dim D, rank R' header");
    MatQ gens(k, d);
    std::string tok;
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < d; ++j) {
            if (!(in >> tok))
                throw ParseError("relation basis ends early");
            gens.at(i, j) = parse_rat(tok);
        }
    return LinRel(n, m, Subspace::from_generators(gens));
}

} // namespace ihz
