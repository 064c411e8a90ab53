#pragma once

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "ihz/circuit.hpp"
#include "ihz/intmat.hpp"
#include "ihz/linrel.hpp"
#include "ihz/mat.hpp"

namespace testsupport {

using namespace ihz;
using Rng = std::mt19937_64;

inline int rand_int(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline MatZ random_matz(Rng& rng, size_t rows, size_t cols, int bound) {
    MatZ a(rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j)
            a.at(i, j) = rand_int(rng, -bound, bound);
    return a;
}

inline MatQ random_matq(Rng& rng, size_t rows, size_t cols, int bound) {
    MatQ a(rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j)
            a.at(i, j) = make_rat(rand_int(rng, -bound, bound), rand_int(rng, 1, bound));
    return a;
}

// Product of random elementary column operations applied to the identity.
inline MatZ random_unimodular(Rng& rng, size_t n, int ops = 10, int coef = 3) {
    MatZ u = MatZ::identity(n);
    if (n == 0)
        return u;
    for (int s = 0; s < ops; ++s) {
        size_t i = rand_int(rng, 0, static_cast<int>(n) - 1);
        size_t j = rand_int(rng, 0, static_cast<int>(n) - 1);
        switch (rand_int(rng, 0, 2)) {
        case 0: // swap columns
            if (i != j)
                for (size_t r = 0; r < n; ++r)
                    std::swap(u.at(r, i), u.at(r, j));
            break;
        case 1: // negate a column
            for (size_t r = 0; r < n; ++r)
                u.at(r, i) = -u.at(r, i);
            break;
        default: // add a multiple of another column
            if (i != j) {
                Int k = rand_int(rng, -coef, coef);
                for (size_t r = 0; r < n; ++r)
                    u.at(r, i) += k * u.at(r, j);
            }
            break;
        }
    }
    return u;
}

// All integer kernel points of a with coordinates in [-box, box],
// enumerated directly. Entries must stay far from the int64 range.
inline std::vector<std::vector<long long>> brute_force_kernel(const MatZ& a, int box) {
    const size_t n = a.cols(), m = a.rows();
    std::vector<std::vector<long long>> ker;
    std::vector<long long> e(m * n);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < n; ++j)
            e[i * n + j] = a.at(i, j).convert_to<long long>();
    std::vector<long long> x(n, -box);
    if (n == 0) {
        ker.push_back({});
        return ker;
    }
    while (true) {
        bool zero = true;
        for (size_t i = 0; i < m && zero; ++i) {
            long long s = 0;
            for (size_t j = 0; j < n; ++j)
                s += e[i * n + j] * x[j];
            zero = s == 0;
        }
        if (zero)
            ker.push_back(x);
        size_t k = 0;
        while (k < n && x[k] == box) {
            x[k] = -box;
            ++k;
        }
        if (k == n)
            break;
        ++x[k];
    }
    return ker;
}

// Random circuit with the requested interface. Leaves are matrix-form
// circuits and their mirrors, so arbitrary spans arise by composition.
inline Circuit random_circuit(Rng& rng, size_t n, size_t m, int depth, int kmax) {
    if (depth > 0) {
        switch (rand_int(rng, 0, 3)) {
        case 0: { // sequential split
            size_t z = rand_int(rng, 0, static_cast<int>(std::max(n, m)) + 1);
            return seq(random_circuit(rng, n, z, depth - 1, kmax),
                       random_circuit(rng, z, m, depth - 1, kmax));
        }
        case 1: { // parallel split
            size_t n1 = rand_int(rng, 0, static_cast<int>(n));
            size_t m1 = rand_int(rng, 0, static_cast<int>(m));
            return tensor(random_circuit(rng, n1, m1, depth - 1, kmax),
                          random_circuit(rng, n - n1, m - m1, depth - 1, kmax));
        }
        default:
            break;
        }
    }
    // Leaf: a plain generator when one fits, else a matrix-form circuit.
    if (n == m && n <= 2 && rand_int(rng, 0, 2) == 0) {
        if (n == 2 && rand_int(rng, 0, 1))
            return sym();
        return id(n);
    }
    if (n == 2 && m == 1 && rand_int(rng, 0, 1))
        return rand_int(rng, 0, 1) ? gen(GenKind::Add) : gen(GenKind::Codup);
    if (n == 1 && m == 2 && rand_int(rng, 0, 1))
        return rand_int(rng, 0, 1) ? gen(GenKind::Dup) : gen(GenKind::Coadd);
    if (n == 1 && m == 1 && rand_int(rng, 0, 1))
        return rand_int(rng, 0, 1) ? amp(rand_int(rng, -kmax, kmax))
                                   : coamp(rand_int(rng, -kmax, kmax));
    if (rand_int(rng, 0, 1))
        return matrix_to_circuit(random_matz(rng, m, n, kmax));
    return mirror(matrix_to_circuit(random_matz(rng, n, m, kmax)));
}

// A semantics-preserving rewrite of c: identity padding, tensor
// re-association, or pre/post-composition with circuits denoting the
// identity relation.
inline Circuit mutate_preserving(Rng& rng, const Circuit& c) {
    Interface i = typecheck(c);
    auto wire_identity = [&](size_t w) {
        // one of the sound identity gadgets, tensored across w wires
        Circuit unit = rand_int(rng, 0, 1)
                           ? seq(amp(Int(2)), coamp(Int(2)))
                           : seq(gen(GenKind::Coadd), gen(GenKind::Add));
        if (w == 0)
            return id(0);
        Circuit out = unit;
        for (size_t k = 1; k < w; ++k)
            out = tensor(out, unit);
        return out;
    };
    switch (rand_int(rng, 0, 5)) {
    case 0:
        return seq(c, id(i.coarity));
    case 1:
        return seq(id(i.arity), c);
    case 2:
        return tensor(c, id(0));
    case 3:
        if (c->op == CircuitNode::Op::Tensor && c->b->op == CircuitNode::Op::Tensor)
            return tensor(tensor(c->a, c->b->a), c->b->b);
        if (c->op == CircuitNode::Op::Tensor && c->a->op == CircuitNode::Op::Tensor)
            return tensor(c->a->a, tensor(c->a->b, c->b));
        return tensor(id(0), c);
    case 4:
        return seq(c, wire_identity(i.coarity));
    default:
        return seq(wire_identity(i.arity), c);
    }
}

// Random composable span pair with small boundaries.
inline std::pair<SpanZ, SpanZ> random_span_pair(Rng& rng, int dim_max, int bound) {
    size_t n = rand_int(rng, 0, dim_max), z = rand_int(rng, 0, dim_max);
    size_t m = rand_int(rng, 0, dim_max);
    size_t z1 = rand_int(rng, 0, dim_max), z2 = rand_int(rng, 0, dim_max);
    SpanZ s1(random_matz(rng, n, z1, bound), random_matz(rng, z, z1, bound));
    SpanZ s2(random_matz(rng, z, z2, bound), random_matz(rng, m, z2, bound));
    return {s1, s2};
}

inline std::pair<CospanZ, CospanZ> random_cospan_pair(Rng& rng, int dim_max, int bound) {
    size_t n = rand_int(rng, 0, dim_max), z = rand_int(rng, 0, dim_max);
    size_t m = rand_int(rng, 0, dim_max);
    size_t z1 = rand_int(rng, 0, dim_max), z2 = rand_int(rng, 0, dim_max);
    CospanZ c1(random_matz(rng, z1, n, bound), random_matz(rng, z1, z, bound));
    CospanZ c2(random_matz(rng, z2, z, bound), random_matz(rng, z2, m, bound));
    return {c1, c2};
}

} // namespace testsupport
