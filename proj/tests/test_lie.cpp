#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "enh/lie.hpp"
#include "oracles.hpp"

using namespace enh;

namespace {

int total_dim_at_weight(const BigradedSpace& s, int w)
{
    int n = 0;
    for (auto& [c, l] : s.cells)
        if (c.wt == w)
            n += (int)l.size();
    return n;
}

LiePresentation<Q> sigma_w(int wt_max)
{
    // 0-Lie Q<x_1, y_0> with [y,x] = x, [x,y] = -x; y sits in weight 0 so
    // that the bracket is weight-additive
    std::vector<Generator> gens = {{"x", 1, 1}, {"y", 0, 0}};
    return make_lie<Q>(
        gens, 0,
        [](int a, int b) -> SparseVec<Q> {
            if (a == 1 && b == 0)
                return {{0, Q::one()}};
            if (a == 0 && b == 1)
                return {{0, Q::from_int(-1)}};
            return {};
        },
        wt_max);
}

LiePresentation<Q> heisenberg(int wt_max)
{
    std::vector<Generator> gens = {{"x", 0, 1}, {"y", 0, 1}, {"z", 0, 2}};
    return make_lie<Q>(
        gens, 0,
        [](int a, int b) -> SparseVec<Q> {
            if (a == 0 && b == 1)
                return {{0, Q::one()}};
            if (a == 1 && b == 0)
                return {{0, Q::from_int(-1)}};
            return {};
        },
        wt_max);
}

}  // namespace

TEST_CASE("free Lie on two degree-0 generators matches the Witt counts")
{
    auto f = free_lie<Q>({{"x", 0, 1}, {"y", 0, 1}}, 5);
    std::vector<int> expect = {2, 1, 2, 3, 6};
    for (int w = 1; w <= 5; ++w) {
        CHECK(total_dim_at_weight(f.lie.space, w) == expect[w - 1]);
        CHECK(total_dim_at_weight(f.lie.space, w) == (int)oracles::witt(2, w));
    }
    CHECK(!validate_lie(f.lie, 5).has_value());
}

TEST_CASE("free Lie on one degree-0 generator is abelian")
{
    auto f = free_lie<Q>({{"x", 0, 1}}, 4);
    CHECK(total_dim_at_weight(f.lie.space, 1) == 1);
    for (int w = 2; w <= 4; ++w)
        CHECK(total_dim_at_weight(f.lie.space, w) == 0);
}

TEST_CASE("free Lie on one odd generator: [x,x] nonzero, weight 3 empty")
{
    auto f = free_lie<Q>({{"x", 1, 1}}, 4);
    CHECK(total_dim_at_weight(f.lie.space, 2) == 1);
    CHECK(total_dim_at_weight(f.lie.space, 3) == 0);
    CHECK(!validate_lie(f.lie, 4).has_value());
}

TEST_CASE("free Lie dims on three degree-0 generators match Witt")
{
    auto f = free_lie<Q>({{"x", 0, 1}, {"y", 0, 1}, {"z", 0, 1}}, 4);
    for (int w = 1; w <= 4; ++w)
        CHECK(total_dim_at_weight(f.lie.space, w) == (int)oracles::witt(3, w));
    CHECK(!validate_lie(f.lie, 4).has_value());
}

TEST_CASE("free restricted Lie on one generator: squaring tower")
{
    auto f = free_restricted_lie<F2>({{"x", 0, 1}}, 8);
    for (int w = 1; w <= 8; ++w)
        CHECK(total_dim_at_weight(f.lie.space, w) == ((w == 1 || w == 2 || w == 4 || w == 8) ? 1 : 0));
    CHECK(!validate_lie(f.lie, 8).has_value());
}

TEST_CASE("free restricted Lie on two generators: weight 2 is [x,y], xi(x), xi(y)")
{
    auto f = free_restricted_lie<F2>({{"x", 0, 1}, {"y", 0, 1}}, 4);
    CHECK(total_dim_at_weight(f.lie.space, 2) == 3);
    CHECK(!validate_lie(f.lie, 4).has_value());

    // xi(x+y) = xi(x) + xi(y) + [x,y] holds in the tensor embedding
    auto& x = f.elements[0];
    auto& y = f.elements[1];
    SparseVec<F2> sum = x.tensor_rep;
    vec_axpy<F2>(sum, F2::one(), y.tensor_rep);
    auto [c2, sq] = f.tensor.concat(x.cell, sum, x.cell, sum);
    auto [cxx, xx] = f.tensor.concat(x.cell, x.tensor_rep, x.cell, x.tensor_rep);
    auto [cyy, yy] = f.tensor.concat(y.cell, y.tensor_rep, y.cell, y.tensor_rep);
    auto [cxy, xy] = f.tensor.concat(x.cell, x.tensor_rep, y.cell, y.tensor_rep);
    auto [cyx, yx] = f.tensor.concat(y.cell, y.tensor_rep, x.cell, x.tensor_rep);
    SparseVec<F2> rhs = xx;
    vec_axpy<F2>(rhs, F2::one(), yy);
    vec_axpy<F2>(rhs, F2::one(), xy);
    vec_axpy<F2>(rhs, F2::one(), yx);
    vec_axpy<F2>(sq, F2::one(), rhs);
    CHECK(sq.empty());
}

TEST_CASE("shift transport: round trip and the Thm 7.3 algebra")
{
    auto w1 = shift_lie(sigma_w(4), 1);  // 1-Lie Q<x_0, y_{-1}>
    CHECK(w1.dim({0, 1}) == 1);
    CHECK(w1.dim({-1, 0}) == 1);
    auto back = shift_lie(w1, 0);
    CHECK(back.space.cells == sigma_w(4).space.cells);
    CHECK(!validate_lie(back, 4).has_value());
    CHECK(!validate_lie(w1, 4).has_value());

    // shift by 0 is the identity
    auto same = shift_lie(sigma_w(4), 0);
    CHECK(same.space.cells == sigma_w(4).space.cells);
}

TEST_CASE("free n-Lie via transport keeps dims with shifted degrees")
{
    auto f0 = free_lie<Q>({{"x", 2, 1}, {"y", 2, 1}}, 4);
    auto f2 = shift_lie(f0.lie, 2);  // 2-Lie on degree-0 generators
    for (auto& [c, l] : f0.lie.space.cells)
        CHECK(f2.dim({c.deg - 2, c.wt}) == (int)l.size());
    CHECK(!validate_lie(f2, 4).has_value());
}

TEST_CASE("enveloping of abelian Q<x_2> is a polynomial algebra")
{
    LiePresentation<Q> g;
    g.shift = 0;
    g.support = Window::all_degrees(0, 5);
    g.space.add({2, 1}, "x");
    auto u = enveloping(g, 5);
    for (int w = 0; w <= 5; ++w)
        CHECK(u.alg.dim({2 * w, w}) == 1);
    CHECK(check_associative(u.alg, 5));
}

TEST_CASE("restricted enveloping of F2<x_0> with trivial xi is F2[x]/x^2")
{
    LiePresentation<F2> g;
    g.shift = 0;
    g.restricted = true;
    g.support = Window::all_degrees(0, 4);
    g.space.add({0, 1}, "x");
    g.restr_tab[{0, 1}] = {SparseVec<F2>{}};  // xi = 0
    auto u = enveloping(g, 4);
    CHECK(u.alg.dim({0, 0}) == 1);
    CHECK(u.alg.dim({0, 1}) == 1);
    CHECK(u.alg.dim({0, 2}) == 0);
    CHECK(u.alg.dim({0, 3}) == 0);
}

TEST_CASE("PBW identity: dims of U(g) match S(g) cellwise for the Heisenberg algebra")
{
    auto g = heisenberg(5);
    REQUIRE(!validate_lie(g, 5).has_value());
    auto u = enveloping(g, 5);
    auto s = free_commutative<Q>({{"x", 0, 1}, {"y", 0, 1}, {"z", 0, 2}}, 5);
    for (auto& [c, l] : s.alg.space.cells)
        CHECK(u.alg.dim(c) == (int)l.size());
    for (auto& [c, l] : u.alg.space.cells)
        CHECK(s.alg.dim(c) == (int)l.size());
    CHECK(check_associative(u.alg, 4));
}

TEST_CASE("PBW identity on the free Lie algebra itself")
{
    auto f = free_lie<Q>({{"x", 0, 1}, {"y", 0, 1}}, 4);
    auto u = enveloping(f.lie, 4);
    // U(free Lie on x,y) = tensor algebra on x,y: dims 2^w
    for (int w = 0; w <= 4; ++w) {
        int total = 0;
        for (auto& [c, l] : u.alg.space.cells)
            if (c.wt == w)
                total += (int)l.size();
        CHECK(total == (1 << w));
    }
}

TEST_CASE("enveloping rejects presentations that fail Jacobi")
{
    // bracket [x,y] = z, [x,z] = y, [y,z] = x with all degrees 0 fails Jacobi
    std::vector<Generator> gens = {{"x", 0, 1}, {"y", 0, 1}, {"z", 0, 1}};
    auto bad = make_lie<Q>(
        gens, 0,
        [](int a, int b) -> SparseVec<Q> {
            if (a == b)
                return {};
            int third = 3 - a - b;
            return {{third, Q::one()}};  // symmetric table: breaks antisymmetry
        },
        4);
    CHECK_THROWS_AS(enveloping(bad, 3), Error);
}
