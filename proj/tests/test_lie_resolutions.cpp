#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "enh/lie_resolutions.hpp"

using namespace enh;

namespace {

LiePresentation<Q> sigma_w(int wt_max)
{
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

}  // namespace

TEST_CASE("CE of an abelian Lie algebra: zero differential, H_s = Lambda^s")
{
    LiePresentation<Q> g;
    g.shift = 0;
    g.support = Window::all_degrees(0, 6);
    g.space.add({0, 1}, "u");
    g.space.add({0, 1}, "v");
    auto ce = ce_complex(g, 4, 6);
    CHECK(ce.complex.diff.empty());
    CHECK(!validate(ce.complex).has_value());
    auto h = ce_homology(ce);
    CHECK(h.dim({1, 1}) == 2);
    CHECK(h.dim({2, 2}) == 1);
    CHECK(h.dim({3, 3}) == 0);
}

TEST_CASE("CE with an odd-degree element allows repeats: abelian Q<x_3>")
{
    LiePresentation<Q> g;
    g.shift = 0;
    g.support = Window::all_degrees(0, 6);
    g.space.add({3, 1}, "x");
    auto ce = ce_complex(g, 5, 6);
    auto h = ce_homology(ce);
    // U = Lambda(x_3), Tor = divided powers: one class in every CE degree
    for (int s = 1; s <= 4; ++s)
        CHECK(h.dim({s, s}) == 1);
}

TEST_CASE("CE homology of Sigma W agrees with May tor: Q at s=0 (wt 0), s-shifted")
{
    auto g = sigma_w(6);
    auto ce = ce_complex(g, 5, 6);
    CHECK(!validate(ce.complex).has_value());
    auto h = ce_homology(ce);
    // L_0 Q = g/[g,g] = <y>: H_1 at weight 0
    CHECK(h.dim({1, 0}) == 1);
    CHECK(h.dim({1, 1}) == 0);
    // everything above vanishes (Tor_{>=2} = 0)
    for (int s = 2; s <= 4; ++s)
        for (int w = 0; w <= 6; ++w)
            CHECK(h.dim({s, w}) == 0);
}

TEST_CASE("May resolution: composites vanish, exact, Tor as stated")
{
    auto res = may_resolution(6, 8);
    auto chk = check_resolution(res);
    CHECK(chk.composites_vanish);
    CHECK(chk.exact);
    INFO(chk.detail);
    CHECK(chk.tor.dim({0, 0}) == 1);
    CHECK(chk.tor.dim({1, 0}) == 1);
    CHECK(chk.tor.dim({1, 1}) == 0);
    for (int s = 2; s <= 5; ++s) {
        int total = 0;
        for (auto& [c, e] : chk.tor.entries)
            if (c.deg == s)
                total += e.dim;
        CHECK(total == 0);
    }
    // the dump exposes the generator images for audit
    auto text = res.dump();
    CHECK(text.find("a(2) |-> ") != std::string::npos);
    CHECK(text.find("b(1)") != std::string::npos);
}

TEST_CASE("periodic resolution over F2[x_{j+1}]/x^2")
{
    for (int j : {-1, 0, 1}) {
        auto res = periodic_resolution(j, 7, 8);
        auto chk = check_resolution(res);
        CHECK(chk.composites_vanish);
        CHECK(chk.exact);
        for (int s = 0; s <= 6; ++s)
            CHECK(chk.tor.dim({s, s * (j + 1)}) == 1);
    }
}

TEST_CASE("tor_bar over U(Sigma W) matches the May resolution for s <= 3")
{
    auto alg = enveloping_sigma_w(6);
    auto tb = tor_bar(alg, 3, 6);
    auto may = check_resolution(may_resolution(5, 8));
    for (int s = 0; s <= 3; ++s)
        for (int q = 0; q <= 4; ++q)
            CHECK(tb.dim({s, q}) == may.tor.dim({s, q}));
    CHECK(tb.dim({0, 0}) == 1);
    CHECK(tb.dim({1, 0}) == 1);
}

TEST_CASE("tor_bar of the restricted abelian F2<x_0> matches the periodic resolution")
{
    LiePresentation<F2> g;
    g.shift = 0;
    g.restricted = true;
    g.support = Window::all_degrees(0, 6);
    g.space.add({0, 1}, "x");
    g.restr_tab[{0, 1}] = {SparseVec<F2>{}};
    auto u = enveloping(g, 6);
    auto alg = filtered_from(u, 6);
    auto tb = tor_bar(alg, 5, 6);
    auto per = check_resolution(periodic_resolution(-1, 7, 8));
    for (int s = 0; s <= 5; ++s)
        CHECK(tb.dim({s, 0}) == per.tor.dim({s, 0}));
}

TEST_CASE("tor_bar of abelian Q<x_3>: divided powers at internal degree 3(s+1)")
{
    LiePresentation<Q> g;
    g.shift = 0;
    g.support = Window::all_degrees(0, 5);
    g.space.add({3, 1}, "x");
    auto u = enveloping(g, 5);
    auto alg = filtered_from(u, 5);
    auto tb = tor_bar(alg, 4, 5);
    for (int s = 1; s <= 4; ++s)
        CHECK(tb.dim({s, 3 * s}) == 1);
    int total = 0;
    for (auto& [c, e] : tb.entries)
        total += e.dim;
    CHECK(total == 5);  // Tor_0 plus one class per 1 <= s <= 4
}

TEST_CASE("tor_bar of abelian Q<x_2>: exterior pattern, Tor_0 and Tor_1 only")
{
    LiePresentation<Q> g;
    g.shift = 0;
    g.support = Window::all_degrees(0, 5);
    g.space.add({2, 1}, "x");
    auto u = enveloping(g, 5);
    auto alg = filtered_from(u, 5);
    auto tb = tor_bar(alg, 4, 5);
    CHECK(tb.dim({0, 0}) == 1);
    CHECK(tb.dim({1, 2}) == 1);
    int total = 0;
    for (auto& [c, e] : tb.entries)
        total += e.dim;
    CHECK(total == 2);
}

TEST_CASE("CE homology equals tor_bar shifted by one for Sigma W")
{
    auto g = sigma_w(6);
    auto ce = ce_complex(g, 5, 6);
    auto hce = ce_homology(ce);
    auto tb = tor_bar(enveloping_sigma_w(6), 4, 6);
    // weight of a CE wedge equals its internal degree here
    for (int s = 0; s <= 3; ++s)
        for (int q = 0; q <= 4; ++q)
            CHECK(hce.dim({s + 1, q}) == tb.dim({s + 1, q}));
}

TEST_CASE("derivation Lie algebra: weight-zero part and single-generator case")
{
    auto gl = derivation_lie<Q>({"x", "y"}, 2);
    CHECK(gl.dim({0, 0}) == 4);
    CHECK(!validate_lie(gl, 2).has_value());

    auto one = derivation_lie<Q>({"x"}, 4);
    for (int w = 0; w <= 4; ++w)
        CHECK(one.dim({0, w}) == 1);
}

TEST_CASE("outer-derivation brackets are well defined in the quotient")
{
    auto gl = derivation_lie<Q>({"x", "y"}, 2);
    // [D_{x,x}, D_{x,y}] = -D_{x,y} (gl_2 commutator), computed via tables
    // find the basis positions by label
    auto label_at = [&](int i) { return gl.space.label({0, 0}, i); };
    int dxx = -1, dxy = -1;
    for (int i = 0; i < gl.dim({0, 0}); ++i) {
        if (label_at(i) == "D[x,x]")
            dxx = i;
        if (label_at(i) == "D[x,y]")
            dxy = i;
    }
    REQUIRE(dxx >= 0);
    REQUIRE(dxy >= 0);
    auto [t, v] = gl.bracket({0, 0}, dxx, {0, 0}, dxy);
    REQUIRE(v.size() == 1);
    CHECK(v[0].first == dxy);
    CHECK(v[0].second == Q::from_int(-1));
}

TEST_CASE("weight-zero CE homology of the outer derivations of T(x,y)")
{
    // Fuks reduction: restrict to total weight zero
    auto gl = derivation_lie<Q>({"x", "y"}, 2);
    auto ce0 = ce_complex(gl, 5, 2, 0);
    CHECK(!validate(ce0.complex).has_value());
    auto h = ce_homology(ce0);
    // computed pattern: gl_2 homology Lambda(theta_1, theta_3)
    CHECK(h.dim({1, 0}) == 1);
    CHECK(h.dim({2, 0}) == 0);
    CHECK(h.dim({3, 0}) == 1);
    CHECK(h.dim({4, 0}) == 1);

    // full CE of the weight-truncated algebra agrees in weight zero
    for (int bound : {2, 3}) {
        auto glb = derivation_lie<Q>({"x", "y"}, bound);
        auto cef = ce_complex(glb, 5, bound);
        auto hf = ce_homology(cef);
        auto ce0b = ce_complex(glb, 5, bound, 0);
        auto h0 = ce_homology(ce0b);
        for (int s = 1; s <= 4; ++s)
            CHECK(hf.dim({s, 0}) == h0.dim({s, 0}));
    }
}
