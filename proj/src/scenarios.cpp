#include "enh/scenarios.hpp"

#include <chrono>
#include <functional>
#include <json.hpp>
#include <set>
#include <sstream>

#include "enh/cotriple.hpp"
#include "enh/json_io.hpp"
#include "enh/lie_resolutions.hpp"

namespace enh {

std::string RunReport::to_text() const
{
    std::ostringstream os;
    os << "scenario " << id << ": " << (pass ? "PASS" : "FAIL") << "  (" << wall_seconds
       << " s)\n";
    for (auto& c : cells)
        os << "  cell (" << c.cell.deg << "," << c.cell.wt << ") expected " << c.expected
           << " got " << c.got << (c.match() ? "" : "   <-- mismatch") << "  ["
           << provenance_str(c.provenance) << "]\n";
    for (auto& ck : checks)
        os << "  " << (ck.pass ? "ok   " : "FAIL ") << ck.name
           << (ck.detail.empty() ? "" : "  (" + ck.detail + ")") << "  ["
           << provenance_str(ck.provenance) << "]\n";
    return os.str();
}

std::string RunReport::to_csv() const
{
    std::ostringstream os;
    os << "scenario,degree,weight,dim,expected,match\n";
    for (auto& c : cells)
        os << id << "," << c.cell.deg << "," << c.cell.wt << "," << c.got << "," << c.expected
           << "," << (c.match() ? 1 : 0) << "\n";
    return os.str();
}

std::string RunReport::to_json() const
{
    nlohmann::json j;
    j["scenario"] = id;
    j["pass"] = pass;
    j["wall_seconds"] = wall_seconds;
    auto cells_j = nlohmann::json::array();
    for (auto& c : cells)
        cells_j.push_back({{"degree", c.cell.deg},
                           {"weight", c.cell.wt},
                           {"expected", c.expected},
                           {"dim", c.got},
                           {"match", c.match()},
                           {"provenance", provenance_str(c.provenance)}});
    j["cells"] = cells_j;
    auto checks_j = nlohmann::json::array();
    for (auto& ck : checks)
        checks_j.push_back({{"name", ck.name},
                            {"pass", ck.pass},
                            {"detail", ck.detail},
                            {"provenance", provenance_str(ck.provenance)}});
    j["checks"] = checks_j;
    return j.dump(2);
}

namespace {

using Clock = std::chrono::steady_clock;

long binom(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    long r = 1;
    for (int i = 0; i < k; ++i)
        r = r * (n - i) / (i + 1);
    return r;
}

template <class K>
Algebra<K> poly(int deg, int wt_max)
{
    return free_commutative<K>({{"x", deg, 1}}, wt_max).alg;
}

LiePresentation<Q> sigma_w_presentation(int wt_max)
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

// --- prop-6-1 -------------------------------------------------------------

void scenario_prop_6_1(RunReport& rep, const ScenarioOptions& opt)
{
    const int W = 8, DEG_MAX = 12;
    std::vector<std::pair<int, int>> pairs = {{0, 1}, {1, 1}, {0, 2}, {-1, 1}, {2, 2}};
    for (auto [j, n] : pairs) {
        auto h = en_homology_commutative(poly<Q>(j, W), n + 1, W, false, opt.threads);
        int J = j + n + 1;
        // expected: Sigma^{-(n+1)} of the reduced free algebra on x_{J}
        std::map<Cell, int> expect;
        if (J % 2 == 0) {
            for (int w = 1; w <= W; ++w)
                expect[{w * J - (n + 1), w}] = 1;
        } else {
            expect[{J - (n + 1), 1}] = 1;
        }
        std::set<Cell> seen;
        for (auto& [c, e] : expect)
            if (c.deg <= DEG_MAX) {
                rep.add_cell(c, e, h.dim(c), Provenance::paper);
                seen.insert(c);
            }
        for (auto& [c, e] : h.entries)
            if (e.dim != 0 && c.deg <= DEG_MAX && !seen.count(c))
                rep.add_cell(c, 0, e.dim, Provenance::paper);
    }
}

// --- rem-6-2 --------------------------------------------------------------

void scenario_rem_6_2(RunReport& rep, const ScenarioOptions&)
{
    const int W = 6;
    auto ib = iterated_bar(poly<Q>(0, W), 2, W);
    // generating words (s(s x))^{(x) r} live at cell (2r, r)
    auto word = [&](int r) { return std::vector<int>(r, 0); };
    for (int r = 1; r <= 5; ++r)
        for (int s = 1; r + s <= 6; ++s) {
            auto [t, v] = shuffle_product(ib.top, {2 * r, r}, word(r), {2 * s, s}, word(s));
            bool ok = v.size() == 1 && v[0].second == Q::from_int(binom(r + s, r)) &&
                      v[0].first == ib.top.word_pos({2 * (r + s), r + s}, word(r + s));
            rep.add_check("shuffle binomial r=" + std::to_string(r) + " s=" + std::to_string(s),
                          ok, Provenance::paper);
        }
    // induced product on homology is polynomial on one generator: with
    // gamma_r the class of (s(sx))^{(x)r}, gamma_1 gamma_r = (r+1) gamma_{r+1}
    auto bh = bar_homology(ib.top);
    for (int r = 1; r < 6; ++r) {
        Cell cr{2 * r, r}, c1{2, 1}, target{2 * (r + 1), r + 1};
        auto [t, prod] = shuffle_product(ib.top, c1, word(1), cr, word(r));
        auto coords = bh.express(target, prod);
        bool ok = coords.size() == 1 && coords[0].second == Q::from_int(r + 1);
        rep.add_check("homology product gamma_1*gamma_" + std::to_string(r), ok,
                      Provenance::paper);
    }
}

// --- prop-6-5 -------------------------------------------------------------

void scenario_prop_6_5(RunReport& rep, const ScenarioOptions& opt)
{
    const int W = 10;
    auto h = en_homology_commutative(poly<F2>(-1, W), 2, W, false, opt.threads);
    // bar route: H^{E_2}_s has one class at weight s+2
    for (int s = 0; s <= 8; ++s)
        rep.add_cell({s, s + 2}, 1, h.dim({s, s + 2}), Provenance::paper);
    // periodic-resolution route: Tor_{s+1} over F2[x_0]/x^2 at internal
    // degree 0, transported by the logged shifts: E2 degree s = (s+1) - 1
    auto per = check_resolution(periodic_resolution(-1, 11, 12));
    for (int s = 0; s <= 8; ++s) {
        int tor = per.tor.dim({s + 1, 0});
        rep.add_check("periodic route Tor_" + std::to_string(s + 1) + " = bar dim at s=" +
                          std::to_string(s),
                      tor == 1 && h.dim({s, s + 2}) == tor, Provenance::paper,
                      "shift log: L_p Q_{1rL} = Sigma^{-1} Tor_{p+1}, E2 degree = p - 1");
    }
}

// --- prop-6-6 -------------------------------------------------------------

void scenario_prop_6_6(RunReport& rep, const ScenarioOptions& opt)
{
    const int W = 7;
    for (int j : {0, 1}) {
        auto ib = iterated_bar(poly<F2>(j, W), 2, W);
        auto h = homology_weight_columns(ib.desuspended, 1, W, false, opt.threads);
        // classes exactly at total degree (s+1)(j+2)-2, weight s+1
        std::set<Cell> seen;
        for (int s = 0; s <= 6; ++s) {
            Cell c{(s + 1) * (j + 2) - 2, s + 1};
            rep.add_cell(c, 1, h.dim(c), Provenance::paper);
            seen.insert(c);
        }
        for (auto& [c, e] : h.entries)
            if (e.dim != 0 && !seen.count(c) && c.wt <= 7)
                rep.add_cell(c, 0, e.dim, Provenance::paper);
        // divided powers: gamma_1^2 = C(2,1) gamma_2 = 0 over F2
        auto bh = bar_homology(ib.top);
        Cell c1{j + 2, 1};  // upstairs cell of gamma_1
        auto& data = bh.cells.at(c1);
        auto& rep1 = data.reps[0];
        auto& words = ib.top.words.at(c1);
        SparseVec<F2> square;
        for (auto& [i, ci] : rep1)
            for (auto& [k, ck] : rep1) {
                auto [t, prod] = shuffle_product(ib.top, c1, words[i], c1, words[k]);
                vec_scale<F2>(prod, F2::mul(ci, ck));
                vec_axpy<F2>(square, F2::one(), prod);
            }
        rep.add_check("gamma_1^2 = 0 over F2 (j=" + std::to_string(j) + ")", square.empty(),
                      Provenance::paper);
    }
}

// --- lemma-7-1 ------------------------------------------------------------

template <class K>
void lemma_7_1_field(RunReport& rep, const std::string& tag)
{
    const int CAP = 10, SH = 8;
    auto a = poly<K>(0, CAP + SH);
    auto cc = hochschild_cochains(a, false, 3, 0, SH, CAP);
    auto h = hochschild_cohomology(cc);
    auto cc9 = hochschild_cochains(a, false, 3, 0, SH, CAP - 1);
    auto h9 = hochschild_cohomology(cc9);
    for (int m = 1; m <= 8; ++m)
        rep.add_cell({0, m}, 1, h.dim({0, m}), Provenance::paper);
    for (int m = 0; m <= 7; ++m)
        rep.add_cell({-1, m}, 1, h.dim({-1, m}), Provenance::paper);
    for (int m = 0; m <= 6; ++m) {
        rep.add_cell({-2, m}, 0, h.dim({-2, m}), Provenance::paper);
        rep.add_cell({-3, m}, 0, h.dim({-3, m}), Provenance::paper);
    }
    bool stable = true;
    for (int p = 0; p <= 3; ++p)
        for (int m = 0; m <= 7; ++m)
            if (h.dim({-p, m}) != h9.dim({-p, m}))
                stable = false;
    rep.add_check("source-cap stability (" + tag + ")", stable, Provenance::derived);
}

void scenario_lemma_7_1(RunReport& rep, const ScenarioOptions&)
{
    lemma_7_1_field<Q>(rep, "Q");
    lemma_7_1_field<F2>(rep, "F2");
}

// --- lemma-7-2 ------------------------------------------------------------

template <class K>
Cochain<K> derivation_cochain(int shift, int src_cap)
{
    Cochain<K> f;
    f.arity = 1;
    f.shift = shift;
    for (int a = 1; a <= src_cap; ++a) {
        if (a + shift < 1 || K::is_zero(K::from_int(a)))
            continue;
        f.values[{{Cell{0, a}, 0}}] = {{0, K::from_int(a)}};
    }
    return f;
}

void scenario_lemma_7_2(RunReport& rep, const ScenarioOptions&)
{
    const int CAP = 8;
    auto a = poly<Q>(0, 2 * CAP);
    // [f,g] <-> g'f - f'g on monomial representatives of weight <= 6
    for (int mf = 0; mf <= 5; ++mf)
        for (int mg = 0; mg + mf <= 5; ++mg) {
            auto f = derivation_cochain<Q>(mf, CAP);
            auto g = derivation_cochain<Q>(mg, CAP);
            int cap = CAP - std::max(mf, mg);
            auto br = gerstenhaber_bracket(a, f, g, cap);
            bool ok = true;
            for (int x = 1; x + mf + mg <= cap; ++x) {
                auto v = br.value({{Cell{0, x}, 0}});
                mpq_class expect = mpq_class(mg - mf) * x;
                mpq_class got = 0;
                if (!v.empty())
                    got = v[0].second;
                if (got != expect)
                    ok = false;
            }
            rep.add_check("[f,g] = g'f - f'g for f<->x^" + std::to_string(1 + mf) + ", g<->x^" +
                              std::to_string(1 + mg),
                          ok, Provenance::paper);
        }
    // [f, alpha] = alpha' f
    for (int w = 1; w <= 6; ++w) {
        auto f = derivation_cochain<Q>(0, CAP);
        Cochain<Q> alpha;
        alpha.arity = 0;
        alpha.shift = w;
        alpha.values[{}] = {{0, Q::one()}};
        auto br = gerstenhaber_bracket(a, f, alpha, CAP - w);
        auto v = br.value({});
        bool ok = v.size() == 1 && v[0].second == Q::from_int(w);
        rep.add_check("[f, x^" + std::to_string(w) + "] = " + std::to_string(w) + " x^" +
                          std::to_string(w),
                      ok, Provenance::paper);
    }
    // restriction over F2
    auto af = poly<F2>(0, 2 * CAP);
    {
        auto f = derivation_cochain<F2>(0, CAP);
        auto xi = restriction_char2(af, f, CAP);
        bool ok = true;
        for (int x = 1; x <= CAP; ++x) {
            auto lhs = xi.value({{Cell{0, x}, 0}});
            auto rhs = f.value({{Cell{0, x}, 0}});
            SparseVec<F2> d = lhs;
            vec_axpy<F2>(d, F2::one(), rhs);
            if (!d.empty())
                ok = false;
        }
        rep.add_check("xi(x) = x", ok, Provenance::paper);
        auto g = derivation_cochain<F2>(1, CAP);
        auto xig = restriction_char2(af, g, CAP - 1);
        rep.add_check("xi(x^2) = 0", xig.values.empty(), Provenance::paper);
        // xi(f) <-> f'f on monomials of weight <= 6
        for (int mf = 0; mf <= 2; ++mf) {
            auto ff = derivation_cochain<F2>(mf, CAP);
            auto xif = restriction_char2(af, ff, CAP - mf);
            // f'f corresponds to the derivation with value (1+mf) x^{2mf+1};
            // on x^a the chain level gives a(a+mf) x^{a+2mf}
            bool ok2 = true;
            for (int x = 1; x + 2 * mf <= CAP - mf; ++x) {
                auto v = xif.value({{Cell{0, x}, 0}});
                int expect = (x * (x + mf)) % 2;
                int got = v.empty() ? 0 : 1;
                if (expect != got)
                    ok2 = false;
            }
            rep.add_check("xi(f) = f'f for f<->x^" + std::to_string(1 + mf), ok2,
                          Provenance::paper);
        }
    }
}

// --- thm-7-3 --------------------------------------------------------------

void scenario_thm_7_3(RunReport& rep, const ScenarioOptions&)
{
    auto res = may_resolution(6, 8);
    auto chk = check_resolution(res);
    rep.add_check("May composites vanish (i <= 6)", chk.composites_vanish, Provenance::paper,
                  chk.detail);
    rep.add_check("May resolution exact in window (i <= 5)", chk.exact, Provenance::paper,
                  chk.detail);
    rep.add_cell({0, 0}, 1, chk.tor.dim({0, 0}), Provenance::paper);
    rep.add_cell({1, 0}, 1, chk.tor.dim({1, 0}), Provenance::paper);
    rep.add_cell({1, 1}, 0, chk.tor.dim({1, 1}), Provenance::paper);
    for (int s = 2; s <= 5; ++s) {
        int total = 0;
        for (auto& [c, e] : chk.tor.entries)
            if (c.deg == s)
                total += e.dim;
        rep.add_cell({s, 0}, 0, total, Provenance::paper);
    }
    // agreement with the bar-resolution Tor for s <= 3
    auto tb = tor_bar(enveloping_sigma_w(6), 3, 6);
    bool agree = true;
    for (int s = 0; s <= 3; ++s)
        for (int q = 0; q <= 4; ++q)
            if (tb.dim({s, q}) != chk.tor.dim({s, q}))
                agree = false;
    rep.add_check("tor_bar agrees with the May resolution (s <= 3)", agree,
                  Provenance::derived);
}

// --- prop-7-5 -------------------------------------------------------------

void scenario_prop_7_5(RunReport& rep, const ScenarioOptions&)
{
    std::vector<int> witt2 = {2, 1, 2, 3, 6};
    for (int dim_m : {1, 2}) {
        auto a = square_zero<Q>(dim_m, -1, 5);
        auto hc = hochschild_chains_trivial(a, 5);
        auto h = homology_weight_columns(hc.complex, 1, 5);
        long expect = dim_m;
        for (int n = 1; n <= 5; ++n) {
            rep.add_cell({n, n}, (int)expect, h.dim({n, n}), Provenance::paper);
            expect *= dim_m;
        }
        auto h1 = hodge_summand(a, 1, 5);
        for (int n = 1; n <= 5; ++n) {
            int e = dim_m == 2 ? witt2[n - 1] : (n == 1 ? 1 : 0);
            rep.add_cell({n, n}, e, h1.dim({n, n}), Provenance::paper);
        }
    }
}

// --- lemma-7-6 ------------------------------------------------------------

void scenario_lemma_7_6(RunReport& rep, const ScenarioOptions&)
{
    auto gl = derivation_lie<Q>({"x", "y"}, 2);
    auto ce0 = ce_complex(gl, 5, 2, 0);
    auto h = ce_homology(ce0);
    // weight-zero CE homology: dims 1,1,0,1 at s = 0..3
    std::vector<int> expect = {1, 1, 0, 1};
    rep.add_cell({0, 0}, expect[0], ce0.complex.space.dim({0, 0}), Provenance::paper);
    for (int s = 1; s <= 3; ++s)
        rep.add_cell({s, 0}, expect[s], h.dim({s, 0}), Provenance::paper);
    // Fuks reduction: full CE of the weight-truncated algebra agrees in
    // weight zero for truncation bounds 2 and 3
    for (int bound : {2, 3}) {
        auto glb = derivation_lie<Q>({"x", "y"}, bound);
        auto hf = ce_homology(ce_complex(glb, 5, bound));
        auto h0 = ce_homology(ce_complex(glb, 5, bound, 0));
        bool ok = true;
        for (int s = 1; s <= 4; ++s)
            if (hf.dim({s, 0}) != h0.dim({s, 0}))
                ok = false;
        rep.add_check("full CE agrees with the weight-zero subcomplex (bound " +
                          std::to_string(bound) + ")",
                      ok, Provenance::paper);
    }
}

// --- lemma-7-8 ------------------------------------------------------------

void scenario_lemma_7_8(RunReport& rep, const ScenarioOptions&)
{
    auto r1 = etale_check(cyclic_group_algebra<F2>(3));
    rep.add_check("F2[C3] is etale", r1.etale, Provenance::derived,
                  r1.generating_products.empty() ? "" : "I generated by " +
                                                            r1.generating_products.front() +
                                                            ", ...");
    auto r2 = etale_check(field_product<Q>(3));
    rep.add_check("Q x Q x Q is etale", r2.etale, Provenance::derived);
    auto dual = free_commutative<Q>({{"x", 0, 1}}, 1).alg;
    auto r3 = etale_check(dual);
    rep.add_check("Q[x]/x^2 is not etale", !r3.etale, Provenance::trivial,
                  "I/I^2 dim " + std::to_string(r3.indecomposable_dims.at({0, 1})));
}

// --- thm-8-4-smooth ---------------------------------------------------------

void scenario_thm_8_4(RunReport& rep, const ScenarioOptions& opt)
{
    auto a = free_commutative<Q>({{"x", 0, 1}}, 5);
    auto st = constant_free_truncation(a, 3);
    rep.add_check("constant resolution satisfies the simplicial identities",
                  !validate_truncation(st).has_value(), Provenance::trivial);
    for (int ell = 1; ell <= 5; ++ell) {
        auto sym = kahler_fiber_powers(st, ell, false, 2);
        int total = 0;
        for (auto& [c, e] : sym.entries)
            total += e.dim;
        rep.add_check("Sym^" + std::to_string(ell) + " gives Q exactly at m = " +
                          std::to_string(ell - 1),
                      sym.dim({0, ell}) == 1 && total == 1, Provenance::trivial);
        if (ell >= 2) {
            auto lam = kahler_fiber_powers(st, ell, true, 2);
            rep.add_check("Lambda^" + std::to_string(ell) + " vanishes",
                          lam.dims().empty(), Provenance::trivial);
        }
    }
    // HH^[2] via the 2-sphere Loday complex: even degrees 0..8
    const int W = 4;
    auto ax = poly<Q>(0, W);
    auto hh = hh_order_n(ax, 2, W, opt.threads);
    for (int w = 1; w <= W; ++w)
        rep.add_cell({2 * w, w}, 1, hh.dim({2 * w, w}), Provenance::paper);
    int stray = 0;
    for (auto& [c, e] : hh.entries)
        if (c.wt >= 1 && c.deg != 2 * c.wt)
            stray += e.dim;
    rep.add_check("no classes off the even-degree diagonal", stray == 0, Provenance::paper);
    // Sym placements reproduce the pattern: Sym^l contributes at degree 2l
    bool placement = true;
    for (int ell = 1; ell <= W; ++ell) {
        auto sym = kahler_fiber_powers(st, ell, false, 2);
        if (sym.dim({0, ell}) != hh.dim({2 * ell, ell}))
            placement = false;
    }
    rep.add_check("Sym^l placements match the HH^[2] diagonal", placement,
                  Provenance::derived);
}

// --- lemma-8-3 --------------------------------------------------------------

void scenario_lemma_8_3(RunReport& rep, const ScenarioOptions& opt)
{
    auto a = free_commutative<Q>({{"x", 0, 1}}, 2).alg;  // Q[x]/x^3
    auto st1 = cotriple_ngerstenhaber(a, 1, 3, 3, opt.budget);
    auto st3 = cotriple_ngerstenhaber(a, 3, 3, 3, opt.budget);
    rep.add_check("n=1 tower satisfies the simplicial identities",
                  !validate_truncation(st1).has_value(), Provenance::trivial);
    rep.add_check("n=3 tower satisfies the simplicial identities",
                  !validate_truncation(st3).has_value(), Provenance::trivial);
    auto d1 = derived_indecomposables(st1, 2);
    auto d3 = derived_indecomposables(st3, 2);
    for (int m = 0; m <= 2; ++m)
        for (int q = 0; q <= 2; ++q) {
            int v1 = 0, v3 = 0;
            for (int w = 0; w <= 3; ++w) {
                v1 += d1.dim(m, q, w);
                v3 += d3.dim(m, 3 * q, w);
            }
            rep.add_check("stability (L_" + std::to_string(m) + " Q)_{q=" + std::to_string(q) +
                              "}: n=1 vs n=3",
                          v1 == v3, Provenance::paper,
                          std::to_string(v1) + " vs " + std::to_string(v3));
        }
}

using ScenarioFn = std::function<void(RunReport&, const ScenarioOptions&)>;

const std::vector<std::pair<std::string, ScenarioFn>>& registry()
{
    static const std::vector<std::pair<std::string, ScenarioFn>> reg = {
        {"prop-6-1", scenario_prop_6_1},
        {"rem-6-2", scenario_rem_6_2},
        {"prop-6-5", scenario_prop_6_5},
        {"prop-6-6", scenario_prop_6_6},
        {"lemma-7-1", scenario_lemma_7_1},
        {"lemma-7-2", scenario_lemma_7_2},
        {"thm-7-3", scenario_thm_7_3},
        {"prop-7-5", scenario_prop_7_5},
        {"lemma-7-6", scenario_lemma_7_6},
        {"lemma-7-8", scenario_lemma_7_8},
        {"thm-8-4-smooth", scenario_thm_8_4},
        {"lemma-8-3", scenario_lemma_8_3},
    };
    return reg;
}

}  // namespace

std::vector<std::string> scenario_ids()
{
    std::vector<std::string> out;
    for (auto& [id, fn] : registry())
        out.push_back(id);
    return out;
}

RunReport run_scenario(const std::string& id, const ScenarioOptions& opt)
{
    for (auto& [rid, fn] : registry()) {
        if (rid != id)
            continue;
        RunReport rep;
        rep.id = id;
        auto t0 = Clock::now();
        fn(rep, opt);
        rep.wall_seconds =
            std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count() /
            1000.0;
        return rep;
    }
    fail_usage("unknown scenario id: " + id);
}

}  // namespace enh
