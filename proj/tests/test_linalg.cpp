#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "enh/sparse.hpp"
#include "oracles.hpp"

using namespace enh;

TEST_CASE("row_reduce: identity over Q")
{
    auto m = SparseMatrix<Q>::identity(2);
    auto rr = row_reduce(m);
    CHECK(rr.rank == 2);
    CHECK(rr.pivots == std::vector<int>{0, 1});
}

TEST_CASE("row_reduce: duplicate rows over F2")
{
    SparseMatrix<F2> m(2, 2);
    m.set(0, 0, 1);
    m.set(0, 1, 1);
    m.set(1, 0, 1);
    m.set(1, 1, 1);
    CHECK(row_reduce(m).rank == 1);
}

TEST_CASE("row_reduce is idempotent")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        auto m = oracles::random_sparse<Q>(rng, 6, 8, 0.4);
        auto r1 = row_reduce(m);
        auto r2 = row_reduce(r1.reduced);
        CHECK(r1.rank == r2.rank);
        CHECK(r1.pivots == r2.pivots);
        for (int i = 0; i < r1.rank; ++i)
            CHECK(r1.reduced.row(i) == r2.reduced.row(i));
    }
}

TEST_CASE("rank agrees with dense fraction-free oracle on random 6x8 and 8x8")
{
    std::mt19937 rng(42);
    for (int trial = 0; trial < 100; ++trial) {
        int rows = trial % 2 ? 8 : 6;
        auto m = oracles::random_sparse<Q>(rng, rows, 8, 0.45);
        CHECK(rank(m) == oracles::bareiss_rank(oracles::to_dense_z(m)));
    }
    for (int trial = 0; trial < 100; ++trial) {
        auto m = oracles::random_sparse<F2>(rng, 8, 8, 0.5);
        std::vector<std::vector<int>> dense(8, std::vector<int>(8, 0));
        for (auto& [r, c, v] : m.entries())
            dense[r][c] = v;
        CHECK(rank(m) == oracles::dense_rank_f2(dense));
    }
}

TEST_CASE("kernel_basis basics")
{
    SparseMatrix<Q> zero(3, 3);
    CHECK(kernel_basis(zero).size() == 3);

    auto id = SparseMatrix<Q>::identity(4);
    CHECK(kernel_basis(id).empty());

    SparseMatrix<F2> parity(1, 2);
    parity.set(0, 0, 1);
    parity.set(0, 1, 1);
    auto ker = kernel_basis(parity);
    REQUIRE(ker.size() == 1);
    CHECK(ker[0] == SparseVec<F2>{{0, 1}, {1, 1}});
}

TEST_CASE("kernel vectors satisfy m*v = 0 and rank-nullity holds")
{
    std::mt19937 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        auto m = oracles::random_sparse<Q>(rng, 5 + trial % 4, 7, 0.35);
        auto ker = kernel_basis(m);
        CHECK((int)ker.size() + rank(m) == m.cols());
        for (auto& v : ker)
            CHECK(m.apply(v).empty());
    }
    for (int trial = 0; trial < 100; ++trial) {
        auto m = oracles::random_sparse<F2>(rng, 6, 9, 0.4);
        auto ker = kernel_basis(m);
        CHECK((int)ker.size() + rank(m) == m.cols());
        for (auto& v : ker)
            CHECK(m.apply(v).empty());
    }
}

TEST_CASE("image_basis")
{
    auto id = SparseMatrix<Q>::identity(2);
    auto im = image_basis(id);
    REQUIRE(im.size() == 2);
    CHECK(im[0] == SparseVec<Q>{{0, 1}});
    CHECK(im[1] == SparseVec<Q>{{1, 1}});

    SparseMatrix<Q> zero(3, 2);
    CHECK(image_basis(zero).empty());

    SparseMatrix<Q> col(2, 1);
    col.set(0, 0, 1);
    col.set(1, 0, 2);
    auto im2 = image_basis(col);
    REQUIRE(im2.size() == 1);
    CHECK(im2[0] == SparseVec<Q>{{0, 1}, {1, 2}});
}

TEST_CASE("image spans the column space")
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        auto m = oracles::random_sparse<Q>(rng, 6, 8, 0.4);
        auto im = image_basis(m);
        CHECK((int)im.size() == rank(m));
        SubspaceReducer<Q> span(m.rows());
        for (auto& v : im)
            CHECK(span.insert(v));
        for (int c = 0; c < m.cols(); ++c)
            CHECK(span.contains(m.column(c)));
    }
}

TEST_CASE("quotient_dim")
{
    CHECK(quotient_dim<Q>({}, 4) == 4);
    std::vector<SparseVec<Q>> full = {{{0, 1}}, {{1, 1}}, {{2, 1}}};
    CHECK(quotient_dim<Q>(full, 3) == 0);
    std::vector<SparseVec<Q>> one = {{{0, 1}, {1, 1}}};
    CHECK(quotient_dim<Q>(one, 3) == 2);
    CHECK_THROWS_AS(quotient_dim<Q>({{{5, Q::one()}}}, 3), Error);
}

TEST_CASE("SubspaceReducer solve returns coordinates over inserted generators")
{
    std::mt19937 rng(5);
    SubspaceReducer<Q> red(6, true);
    std::vector<SparseVec<Q>> gens;
    for (int i = 0; i < 4; ++i) {
        auto m = oracles::random_sparse<Q>(rng, 1, 6, 0.7);
        gens.push_back(m.row(0));
        red.insert(m.row(0));
    }
    // combination of generators must be solvable with exact coordinates
    SparseVec<Q> target;
    vec_axpy<Q>(target, Q::from_int(3), gens[0]);
    vec_axpy<Q>(target, Q::from_int(-2), gens[2]);
    auto sol = red.solve(target);
    REQUIRE(sol.has_value());
    SparseVec<Q> rebuilt;
    for (auto& [g, c] : *sol)
        vec_axpy<Q>(rebuilt, c, gens[g]);
    vec_axpy<Q>(rebuilt, Q::from_int(-1), target);
    CHECK(rebuilt.empty());
}

TEST_CASE("mixed sparse ops: axpy/scale/normalize")
{
    SparseVec<Q> a = {{0, 1}, {2, 3}};
    SparseVec<Q> b = {{0, 2}, {1, 5}, {2, -3}};
    vec_axpy<Q>(a, Q::one(), b);
    CHECK(a == SparseVec<Q>{{0, 3}, {1, 5}});
    vec_scale<Q>(a, Q::zero());
    CHECK(a.empty());
    SparseVec<Q> c = {{3, 2}, {1, 1}, {3, -2}};
    vec_normalize<Q>(c);
    CHECK(c == SparseVec<Q>{{1, 1}});
}
