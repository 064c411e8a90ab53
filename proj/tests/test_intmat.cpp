#include <doctest.h>

#include "ihz/intmat.hpp"
#include "ihz/linrel.hpp"
#include "support.hpp"

using namespace ihz;
using namespace testsupport;

namespace {

const MatZ kReferenceHnf{{0, 0, 2, -1},
                     {0, 4, 1, -3},
                     {0, 0, 1, 0},
                     {0, 0, 0, 0},
                     {0, 0, 0, 3}};

} // namespace

TEST_CASE("matrix core ops") {
    MatZ row{{1, 1}};
    MatZ col{{2}, {3}};
    CHECK(mul(row, col) == MatZ{{5}});
    CHECK(hstack(MatZ{{1}, {0}}, MatZ{{0}, {1}}) == MatZ::identity(2));
    CHECK(direct_sum(MatZ::identity(1), MatZ::identity(2)) == MatZ::identity(3));
    CHECK(MatZ::identity(3).transpose() == MatZ::identity(3));
    CHECK(row.transpose().transpose() == row);
    MatZ p = MatZ::permutation({2, 0, 1});
    CHECK(matvec(p, {Int(7), Int(8), Int(9)}) == std::vector<Int>{8, 9, 7});
    CHECK(det(p) == 1);
    CHECK_THROWS_AS(mul(col, col), DimensionError);
    CHECK_THROWS_AS(hstack(row, col), DimensionError);
    CHECK_THROWS_AS(vstack(MatZ(1, 2), MatZ(1, 3)), DimensionError);
}

TEST_CASE("zero-dimension matrices are first-class") {
    MatZ a(0, 3), b(3, 0);
    CHECK(mul(a, MatZ(3, 2)) == MatZ(0, 2));
    CHECK(mul(b, MatZ(0, 4)) == MatZ(3, 4)); // empty inner dim gives the zero matrix
    CHECK(MatZ::identity(0) == MatZ(0, 0));
    CHECK(det(MatZ(0, 0)) == 1);
}

TEST_CASE("matrix text format round trip") {
    for (const MatZ& a : {kReferenceHnf, MatZ(0, 2), MatZ(2, 0), MatZ::identity(3)})
        CHECK(parse_matz(to_string(a)) == a);
    CHECK(parse_matz("# comment\n\n 2 2 \n1 2\n3 4 # trailing\n") == MatZ{{1, 2}, {3, 4}});
    CHECK_THROWS_AS(parse_matz("2 2\n1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_matz("2\n"), ParseError);
}

TEST_CASE("is_hnf accepts the reference 5x4 example") {
    auto p = is_hnf(kReferenceHnf);
    REQUIRE(p.has_value());
    CHECK(p->r == 1);
    CHECK(p->pivot_rows == std::vector<size_t>{1, 2, 4});
    // Not reduced above the pivots, so not canonical.
    CHECK_FALSE(is_canonical_hnf(kReferenceHnf));
}

TEST_CASE("is_canonical_hnf rejects sign and reduction violations") {
    CHECK(is_canonical_hnf(MatZ{{2, 1}, {0, 3}}));
    CHECK_FALSE(is_canonical_hnf(MatZ{{-2, 0}, {0, 3}})); // negative pivot
    CHECK_FALSE(is_canonical_hnf(MatZ{{2, 2}, {0, 3}}));  // entry not below the pivot
    CHECK_FALSE(is_canonical_hnf(MatZ{{2, -1}, {0, 3}})); // negative residue
    CHECK(is_canonical_hnf(MatZ(3, 2)));
    CHECK(is_canonical_hnf(MatZ::identity(4)));
}

TEST_CASE("is_hnf edge cases") {
    auto pz = is_hnf(MatZ(3, 3));
    REQUIRE(pz.has_value());
    CHECK(pz->r == 3);
    CHECK(pz->pivot_rows.empty());

    auto pi = is_hnf(MatZ::identity(2));
    REQUIRE(pi.has_value());
    CHECK(pi->r == 0);
    CHECK(pi->pivot_rows == std::vector<size_t>{0, 1});

    // Zero column after a nonzero one.
    CHECK_FALSE(is_hnf(MatZ{{1, 0}, {0, 0}}).has_value());
    // Pivot rows not strictly increasing.
    CHECK_FALSE(is_hnf(MatZ{{1, 1}, {1, 0}}).has_value());
}

TEST_CASE("hnf on the reference examples") {
    HnfResult hz = hnf(MatZ(3, 4));
    CHECK(hz.h == MatZ(3, 4));
    CHECK(hz.u == MatZ::identity(4));

    HnfResult h1 = hnf(MatZ{{2, -1}});
    CHECK(h1.h == MatZ{{0, 1}});
    CHECK(mul(MatZ{{2, -1}}, h1.u) == h1.h);
    CHECK(is_unimodular(h1.u));

    HnfResult hi = hnf(MatZ::identity(3));
    CHECK(hi.h == MatZ::identity(3));
    CHECK(hi.u == MatZ::identity(3));
}

TEST_CASE("hnf postconditions and canonical uniqueness on random matrices") {
    Rng rng(11);
    for (int iter = 0; iter < 200; ++iter) {
        size_t r = rand_int(rng, 0, 6), c = rand_int(rng, 0, 6);
        MatZ a = random_matz(rng, r, c, 9);
        HnfResult res = hnf(a);
        CHECK(mul(a, res.u) == res.h);
        CHECK(is_unimodular(res.u));
        auto prof = is_hnf(res.h);
        REQUIRE(prof.has_value());
        CHECK(prof->r == res.r);
        CHECK(prof->pivot_rows == res.pivot_rows);
        CHECK(is_canonical_hnf(res.h));
        // Triangularity along the pivot map.
        for (size_t i = 0; i < prof->pivot_rows.size(); ++i)
            for (size_t j = 0; j < prof->r + i; ++j)
                CHECK(res.h.at(prof->pivot_rows[i], j) == 0);
        for (int v = 0; v < 3; ++v) {
            MatZ u = random_unimodular(rng, c);
            CHECK(hnf(mul(a, u)).h == res.h);
        }
    }
}

TEST_CASE("kernel basis of the 1x2 example, brute-force saturation") {
    MatZ a{{2, -1}};
    MatZ k = kernel_basis(a);
    CHECK(k == MatZ{{1}, {2}});
    for (const auto& x : brute_force_kernel(a, 5)) {
        // every small kernel point is an integer multiple of (1,2)
        CHECK(x[0] * 2 == x[1]);
    }
}

TEST_CASE("kernel basis edge cases") {
    CHECK(kernel_basis(MatZ::identity(4)) == MatZ(4, 0));
    MatZ k = kernel_basis(MatZ(1, 2));
    CHECK(k.cols() == 2);
    CHECK(hnf(k).h == hnf(MatZ::identity(2)).h); // column-equivalent to the identity
}

TEST_CASE("kernel saturation and rational coherence on random matrices") {
    Rng rng(12);
    for (int iter = 0; iter < 100; ++iter) {
        size_t r = rand_int(rng, 1, 4), c = rand_int(rng, 1, 4);
        MatZ a = random_matz(rng, r, c, 4);
        MatZ k = kernel_basis(a);
        CHECK(mul(a, k) == MatZ(r, k.cols()));
        auto [rr, rank] = rref(to_q(a));
        CHECK(k.cols() == c - rank);
        for (const auto& x : brute_force_kernel(a, 3)) {
            std::vector<Int> v(x.begin(), x.end());
            CHECK(solve_z(k, v).has_value());
        }
        CHECK(Subspace::from_generators(to_q(k.transpose())) == kernel_q(to_q(a)));
    }
}

TEST_CASE("pullback of the unit/add cospan") {
    MatZ f(1, 0);      // arrow 0 -> 1
    MatZ g{{1, 1}};    // arrow 2 -> 1
    auto [p, q] = pullback(f, g);
    CHECK(p == MatZ(0, 1));
    CHECK(q == MatZ{{1}, {-1}});
}

TEST_CASE("pullback and pushout basics") {
    auto [pi, qi] = pullback(MatZ::identity(3), MatZ::identity(3));
    CHECK(mul(MatZ::identity(3), pi) == mul(MatZ::identity(3), qi));
    CHECK(pi == qi);
    CHECK(is_unimodular(pi));

    auto [p23, q23] = pullback(MatZ{{2}}, MatZ{{3}});
    CHECK(p23 == MatZ{{3}});
    CHECK(q23 == MatZ{{2}});

    auto [po, qo] = pushout(MatZ::identity(2), MatZ::identity(2));
    CHECK(po == qo);
    CHECK(is_unimodular(po));

    auto [p32, q32] = pushout(MatZ{{3}}, MatZ{{2}});
    CHECK(p32 == MatZ{{2}});
    CHECK(q32 == MatZ{{3}});

    CHECK_THROWS_AS(pullback(MatZ(1, 2), MatZ(2, 2)), DimensionError);
    CHECK_THROWS_AS(pushout(MatZ(2, 1), MatZ(2, 2)), DimensionError);
}

TEST_CASE("pushout mirrors the reference pullback through transposition") {
    MatZ f(0, 1);             // arrow 1 -> 0
    MatZ g{{1}, {-1}};        // arrow 1 -> 2
    auto [p, q] = pushout(f, g);
    auto [tp, tq] = pullback(f.transpose(), g.transpose());
    CHECK(p == tp.transpose());
    CHECK(q == tq.transpose());
    CHECK(mul(p, f) == mul(q, g));
}

TEST_CASE("pullback universal property over Z") {
    Rng rng(13);
    for (int iter = 0; iter < 100; ++iter) {
        size_t z = rand_int(rng, 1, 3);
        size_t n = rand_int(rng, 0, 3), m = rand_int(rng, 0, 3);
        MatZ f = random_matz(rng, z, n, 4), g = random_matz(rng, z, m, 4);
        auto [p, q] = pullback(f, g);
        CHECK(mul(f, p) == mul(g, q));
        size_t r = p.cols();
        MatZ h = random_matz(rng, r, rand_int(rng, 1, 3), 4);
        MatZ bp = mul(p, h), bq = mul(q, h);
        // recover the mediating morphism column by column
        MatZ stacked = vstack(p, q);
        MatZ rhs = vstack(bp, bq);
        for (size_t col = 0; col < h.cols(); ++col) {
            auto x = solve_z(stacked, rhs.col(col));
            REQUIRE(x.has_value());
            CHECK(*x == h.col(col));
        }
        // uniqueness: the stacked legs have trivial kernel
        CHECK(kernel_basis(stacked).cols() == 0);
    }
}

TEST_CASE("determinant and unimodularity") {
    CHECK(det(MatZ::identity(4)) == 1);
    CHECK(det(MatZ{{0, 1}, {1, 0}}) == -1);
    CHECK(det(MatZ{{2, 1}, {0, 3}}) == 6);
    CHECK_THROWS_AS(det(MatZ(2, 3)), DomainError);
    CHECK(is_unimodular(MatZ::identity(3)));
    CHECK(is_unimodular(MatZ{{1, 5}, {0, 1}}));
    CHECK_FALSE(is_unimodular(MatZ{{2, 0}, {0, 1}}));
    CHECK_FALSE(is_unimodular(MatZ(2, 3)));

    Rng rng(14);
    for (int iter = 0; iter < 50; ++iter) {
        size_t n = rand_int(rng, 1, 5);
        MatZ u = random_unimodular(rng, n);
        CHECK(is_unimodular(u));
        MatZ a = random_matz(rng, n, n, 6);
        CHECK(det(mul(a, u)) == det(a) * det(u));
    }
}

TEST_CASE("integer solving") {
    CHECK(solve_z(MatZ{{2}}, {Int(4)}) == std::vector<Int>{2});
    CHECK_FALSE(solve_z(MatZ{{2}}, {Int(3)}).has_value());
    auto x = solve_z(MatZ{{2, -1}}, {Int(1)});
    REQUIRE(x.has_value());
    CHECK(2 * (*x)[0] - (*x)[1] == 1);

    Rng rng(15);
    for (int iter = 0; iter < 100; ++iter) {
        size_t r = rand_int(rng, 1, 4), c = rand_int(rng, 1, 4);
        MatZ a = random_matz(rng, r, c, 5);
        std::vector<Int> xs;
        for (size_t j = 0; j < c; ++j)
            xs.push_back(rand_int(rng, -4, 4));
        auto sol = solve_z(a, matvec(a, xs));
        REQUIRE(sol.has_value());
        CHECK(matvec(a, *sol) == matvec(a, xs));
    }
}

TEST_CASE("span isomorphism") {
    Rng rng(16);
    SpanZ s(random_matz(rng, 2, 3, 4), random_matz(rng, 2, 3, 4));
    CHECK(span_iso(s, s));
    MatZ u = random_unimodular(rng, 3);
    SpanZ s2(mul(s.left, u), mul(s.right, u));
    CHECK(span_iso(s, s2));

    SpanZ a(MatZ::identity(1), MatZ{{2}});
    SpanZ b(MatZ::identity(1), MatZ{{3}});
    CHECK_FALSE(span_iso(a, b));

    SpanZ wide(MatZ(1, 2), MatZ(1, 2));
    SpanZ narrow(MatZ(1, 1), MatZ(1, 1));
    CHECK_FALSE(span_iso(wide, narrow)); // middles differ

    CospanZ c1(MatZ{{2}}, MatZ::identity(1));
    CospanZ c2(MatZ{{3}}, MatZ::identity(1));
    CHECK(cospan_iso(c1, c1));
    CHECK_FALSE(cospan_iso(c1, c2));
}

TEST_CASE("span_iso is an equivalence relation") {
    Rng rng(19);
    for (int iter = 0; iter < 60; ++iter) {
        size_t n = rand_int(rng, 0, 3), m = rand_int(rng, 0, 3), z = rand_int(rng, 0, 3);
        SpanZ s1(random_matz(rng, n, z, 4), random_matz(rng, m, z, 4));
        MatZ u = random_unimodular(rng, z);
        SpanZ s2(mul(s1.left, u), mul(s1.right, u));
        MatZ v = random_unimodular(rng, z);
        SpanZ s3(mul(s2.left, v), mul(s2.right, v));
        SpanZ other(random_matz(rng, n, z, 4), random_matz(rng, m, z, 4));
        CHECK(span_iso(s1, s1));
        CHECK(span_iso(s1, s2) == span_iso(s2, s1));
        CHECK(span_iso(other, s1) == span_iso(s1, other));
        if (span_iso(s1, s2) && span_iso(s2, s3))
            CHECK(span_iso(s1, s3));
    }
}

TEST_CASE("span composition agrees with matrix product on graphs") {
    Rng rng(17);
    for (int iter = 0; iter < 50; ++iter) {
        size_t n = rand_int(rng, 1, 3), z = rand_int(rng, 1, 3), m = rand_int(rng, 1, 3);
        MatZ a = random_matz(rng, z, n, 4);
        MatZ b = random_matz(rng, m, z, 4);
        SpanZ ga = span_of_map(a), gb = span_of_map(b);
        CHECK(span_iso(span_compose(ga, gb), span_of_map(mul(b, a))));
    }
    // identity span is a unit
    SpanZ s(MatZ{{1, 0}}, MatZ{{2, 5}});
    CHECK(span_iso(span_compose(span_identity(1), s), s));
    CHECK(span_iso(span_compose(s, span_identity(1)), s));
    // span (id,(2)) ; span ((3),id) composes through the (2),(3) pullback
    SpanZ lhs = span_compose(SpanZ(MatZ::identity(1), MatZ{{2}}),
                             SpanZ(MatZ{{3}}, MatZ::identity(1)));
    CHECK(span_iso(lhs, SpanZ(MatZ{{3}}, MatZ{{2}})));
}

TEST_CASE("span and cospan composition laws up to iso") {
    Rng rng(18);
    for (int iter = 0; iter < 40; ++iter) {
        size_t n = rand_int(rng, 0, 2), z1 = rand_int(rng, 0, 2), z2 = rand_int(rng, 0, 2);
        size_t m = rand_int(rng, 0, 2);
        size_t a = rand_int(rng, 0, 2), b = rand_int(rng, 0, 2), c = rand_int(rng, 0, 2);
        SpanZ s1(random_matz(rng, n, a, 3), random_matz(rng, z1, a, 3));
        SpanZ s2(random_matz(rng, z1, b, 3), random_matz(rng, z2, b, 3));
        SpanZ s3(random_matz(rng, z2, c, 3), random_matz(rng, m, c, 3));
        CHECK(span_iso(span_compose(span_compose(s1, s2), s3),
                       span_compose(s1, span_compose(s2, s3))));
        CHECK(span_iso(span_compose(span_identity(n), s1), s1));
        CHECK(span_iso(span_compose(s1, span_identity(z1)), s1));

        CospanZ c1(random_matz(rng, a, n, 3), random_matz(rng, a, z1, 3));
        CospanZ c2(random_matz(rng, b, z1, 3), random_matz(rng, b, z2, 3));
        CospanZ c3(random_matz(rng, c, z2, 3), random_matz(rng, c, m, 3));
        CHECK(cospan_iso(cospan_compose(cospan_compose(c1, c2), c3),
                         cospan_compose(c1, cospan_compose(c2, c3))));
        CHECK(cospan_iso(cospan_compose(cospan_identity(n), c1), c1));
        CHECK(cospan_iso(cospan_compose(c1, cospan_identity(z1)), c1));
    }
}
