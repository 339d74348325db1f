// enhom: exact E_n-homology and homological algebra calculator.
//
// Subcommands:
//   list                      registered scenarios
//   run <scenario-id>         run a scenario and compare against its table
//   compute <kind> ...        generic computations with JSON/CSV/text output
//
// Exit codes: 0 pass, 1 mismatch, 2 usage error, 3 budget exceeded.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "enh/cotriple.hpp"
#include "enh/json_io.hpp"
#include "enh/lie_resolutions.hpp"
#include "enh/scenarios.hpp"
#include "enh/simplicial_json.hpp"

using namespace enh;

namespace {

struct Range {
    int lo = 0, hi = 8;
};

Range parse_range(const std::string& s, const Range& dflt)
{
    if (s.empty())
        return dflt;
    auto pos = s.find("..");
    if (pos == std::string::npos)
        fail_usage("range must look like a..b: " + s);
    try {
        return {std::stoi(s.substr(0, pos)), std::stoi(s.substr(pos + 2))};
    } catch (const std::exception&) {
        fail_usage("cannot parse range: " + s);
    }
}

std::vector<Generator> parse_generators(const std::string& body)
{
    // comma-separated name:degree pairs
    std::vector<Generator> gens;
    size_t pos = 0;
    while (pos < body.size()) {
        auto comma = body.find(',', pos);
        auto item = body.substr(pos, comma == std::string::npos ? std::string::npos
                                                                : comma - pos);
        auto colon = item.find(':');
        if (colon == std::string::npos || colon == 0)
            fail_usage("generator must look like name:degree, got '" + item + "' (position " +
                       std::to_string(pos) + ")");
        try {
            gens.push_back({item.substr(0, colon), std::stoi(item.substr(colon + 1)), 1});
        } catch (const std::exception&) {
            fail_usage("cannot parse generator degree in '" + item + "'");
        }
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    if (gens.empty())
        fail_usage("empty generator list");
    return gens;
}

/// Tiny algebra grammar: S(x:2,...), F2[x:-1], T(x:0,y:0), group C3,
/// sqzero:k, trunc:N, kprod:r.
template <class K>
Algebra<K> parse_algebra(const std::string& spec, int wt_max)
{
    if (spec.rfind("S(", 0) == 0 && spec.back() == ')')
        return free_commutative<K>(parse_generators(spec.substr(2, spec.size() - 3)), wt_max)
            .alg;
    if (spec.rfind("F2[", 0) == 0 && spec.back() == ']') {
        if (!K::is_f2)
            fail_usage("spec " + spec + " requires --field F2");
        return free_commutative<K>(parse_generators(spec.substr(3, spec.size() - 4)), wt_max)
            .alg;
    }
    if (spec.rfind("T(", 0) == 0 && spec.back() == ')') {
        std::vector<std::string> names;
        for (auto& g : parse_generators(spec.substr(2, spec.size() - 3))) {
            if (g.deg != 0)
                fail_usage("tensor algebra generators must have degree 0");
            names.push_back(g.name);
        }
        return tensor_algebra<K>(names, wt_max).alg;
    }
    if (spec.rfind("group C", 0) == 0) {
        int n = std::stoi(spec.substr(7));
        return cyclic_group_algebra<K>(n);
    }
    if (spec.rfind("sqzero:", 0) == 0) {
        int k = std::stoi(spec.substr(7));
        return square_zero<K>(k, -1, wt_max);
    }
    if (spec.rfind("trunc:", 0) == 0) {
        int n = std::stoi(spec.substr(6));
        return free_commutative<K>({{"x", 0, 1}}, std::min(wt_max, n - 1)).alg;
    }
    if (spec.rfind("kprod:", 0) == 0) {
        int r = std::stoi(spec.substr(6));
        return field_product<K>(r);
    }
    fail_usage("cannot parse algebra spec: " + spec);
}

void emit_table(const HomologyTable& t, const std::string& fmt)
{
    if (fmt == "json")
        std::cout << t.to_json() << "\n";
    else if (fmt == "csv")
        std::cout << t.to_csv();
    else {
        for (auto& [c, d] : t.dims())
            std::cout << "degree " << c.deg << "  weight " << c.wt << "  dim " << d << "\n";
        if (t.dims().empty())
            std::cout << "(zero)\n";
    }
}

int exit_code_for(const Error& e)
{
    switch (e.kind()) {
        case ErrorKind::budget:
            return 3;
        case ErrorKind::usage:
        case ErrorKind::window:
        case ErrorKind::invalid:
            return 2;
        default:
            return 2;
    }
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{
        "enhom: exact E_n-homology, Hochschild/Lie homology and Hodge summand "
        "calculator over Q and F2"};
    app.require_subcommand(1);

    std::string out_fmt = "text";
    int threads = 1;
    long budget = 20000;
    app.add_option("--out", out_fmt, "output format: text|json|csv")->envname("ENHOM_OUT");
    app.add_option("--threads", threads, "worker threads for per-cell homology");
    app.add_option("--budget", budget, "basis-size budget for cotriple levels");

    auto* list_cmd = app.add_subcommand("list", "list registered scenarios");

    auto* run_cmd = app.add_subcommand("run", "run a registered scenario");
    std::string scenario;
    run_cmd->add_option("id", scenario, "scenario id (see `enhom list`)")->required();

    auto* comp = app.add_subcommand("compute", "generic computations");
    std::string kind, field = "Q", algebra_spec = "S(x:0)", lie_spec = "abelian";
    std::string gens_spec = "x:0,y:0", deg_range, wt_range = "0..6";
    int n_fold = 2, ell = 1, smax = 4;
    std::optional<int> weight_filter;
    comp->add_option("kind", kind, "bar|hochschild|ce|tor|hodge|indec")->required();
    comp->add_option("--field", field, "Q or F2");
    comp->add_option("--algebra", algebra_spec, "algebra spec, e.g. S(x:0), F2[x:-1], group C3");
    comp->add_option("--lie", lie_spec, "Lie spec: der-outer | abelian | sigmaw");
    comp->add_option("--gens", gens_spec, "generators for --lie der-outer / abelian");
    comp->add_option("--n", n_fold, "bar iterations / Hochschild order");
    comp->add_option("--l", ell, "Hodge label");
    comp->add_option("--smax", smax, "homological bound for ce/tor");
    comp->add_option("--deg", deg_range, "degree window a..b (reporting)");
    comp->add_option("--weight", wt_range, "weight window a..b");
    comp->add_option("--weight-filter", weight_filter, "restrict CE wedges to one weight");
    std::string space_json;
    bool dump_stages = false;
    comp->add_option("--space", space_json,
                     "JSON file with a finite pointed simplicial set (hochschild)");
    comp->add_flag("--dump", dump_stages, "print resolution stages (tor --lie sigmaw)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*list_cmd) {
            for (auto& id : scenario_ids())
                std::cout << id << "\n";
            return 0;
        }
        if (*run_cmd) {
            ScenarioOptions opt;
            opt.threads = threads;
            opt.budget = budget;
            auto rep = run_scenario(scenario, opt);
            if (out_fmt == "json")
                std::cout << rep.to_json() << "\n";
            else if (out_fmt == "csv")
                std::cout << rep.to_csv();
            else
                std::cout << rep.to_text();
            return rep.pass ? 0 : 1;
        }
        // compute
        auto wr = parse_range(wt_range, {0, 6});
        auto dr = parse_range(deg_range, {-100, 100});
        int W = std::max(wr.hi, 1);
        auto report_window = [&](HomologyTable t) {
            HomologyTable cut;
            cut.field = t.field;
            for (auto& [c, e] : t.entries)
                if (c.deg >= dr.lo && c.deg <= dr.hi && c.wt >= wr.lo && c.wt <= wr.hi)
                    cut.entries[c] = e;
            emit_table(cut, out_fmt);
        };
        if (kind == "bar") {
            if (field == "Q")
                report_window(
                    en_homology_commutative(parse_algebra<Q>(algebra_spec, W), n_fold, W,
                                            false, threads));
            else
                report_window(
                    en_homology_commutative(parse_algebra<F2>(algebra_spec, W), n_fold, W,
                                            false, threads));
            return 0;
        }
        if (kind == "hochschild") {
            // order-n Hochschild homology with trivial coefficients; with
            // --space, homology of the Loday complex on a custom space
            auto run_hh = [&](auto a) -> HomologyTable {
                if (!space_json.empty()) {
                    std::ifstream in(space_json);
                    if (!in)
                        fail_usage("cannot open " + space_json);
                    std::stringstream ss;
                    ss << in.rdbuf();
                    auto X = simplicial_from_json(ss.str());
                    auto L = loday_complex(a, X, W);
                    return homology(L.complex, Window{1, X.dims() - 1, 0, W}, false, threads);
                }
                if (n_fold == 1)
                    return homology_weight_columns(hochschild_chains_trivial(a, W).complex, 0,
                                                   W, false, threads);
                return hh_order_n(a, n_fold, W, threads);
            };
            if (field == "Q")
                report_window(run_hh(parse_algebra<Q>(algebra_spec, W)));
            else
                report_window(run_hh(parse_algebra<F2>(algebra_spec, W)));
            return 0;
        }
        if (kind == "ce") {
            if (field != "Q")
                fail_usage("ce: implemented over Q");
            LiePresentation<Q> g;
            if (lie_spec == "der-outer") {
                std::vector<std::string> names;
                for (auto& gen : parse_generators(gens_spec))
                    names.push_back(gen.name);
                g = derivation_lie<Q>(names, W);
            } else if (lie_spec == "abelian") {
                g.shift = 0;
                g.support = Window::all_degrees(0, W);
                for (auto& gen : parse_generators(gens_spec))
                    g.space.add({gen.deg, 1}, gen.name);
            } else if (lie_spec == "sigmaw") {
                std::vector<Generator> gg = {{"x", 1, 1}, {"y", 0, 0}};
                g = make_lie<Q>(
                    gg, 0,
                    [](int a, int b) -> SparseVec<Q> {
                        if (a == 1 && b == 0)
                            return {{0, Q::one()}};
                        if (a == 0 && b == 1)
                            return {{0, Q::from_int(-1)}};
                        return {};
                    },
                    W);
            } else {
                fail_usage("unknown --lie spec: " + lie_spec);
            }
            auto ce = ce_complex(g, smax + 1, W, weight_filter);
            report_window(ce_homology(ce, threads));
            return 0;
        }
        if (kind == "tor") {
            if (lie_spec == "sigmaw") {
                if (dump_stages)
                    std::cout << may_resolution(smax + 2, W).dump();
                emit_table(tor_bar(enveloping_sigma_w(W), smax, W), out_fmt);
            } else if (lie_spec == "abelian") {
                if (field == "Q") {
                    LiePresentation<Q> g;
                    g.shift = 0;
                    g.support = Window::all_degrees(0, W);
                    for (auto& gen : parse_generators(gens_spec))
                        g.space.add({gen.deg, 1}, gen.name);
                    emit_table(tor_bar(filtered_from(enveloping(g, W), W), smax, W), out_fmt);
                } else {
                    LiePresentation<F2> g;
                    g.shift = 0;
                    g.restricted = true;
                    g.support = Window::all_degrees(0, W);
                    for (auto& gen : parse_generators(gens_spec))
                        g.space.add({gen.deg, 1}, gen.name);
                    for (auto& [c, labels] : g.space.cells)
                        g.restr_tab[c].assign(labels.size(), SparseVec<F2>{});
                    emit_table(tor_bar(filtered_from(enveloping(g, W), W), smax, W), out_fmt);
                }
            } else {
                fail_usage("tor: --lie must be sigmaw or abelian");
            }
            return 0;
        }
        if (kind == "hodge") {
            if (field != "Q")
                fail_usage("hodge: the decomposition lives over Q");
            auto a = parse_algebra<Q>(algebra_spec, W);
            report_window(hodge_summand(a, ell, W));
            return 0;
        }
        if (kind == "indec") {
            auto run_indec = [&](auto a) {
                auto q = indecomposables_Qa(a);
                HomologyTable t;
                t.field = field;
                for (auto& [c, labels] : q.cells)
                    if (!labels.empty())
                        t.entries[c].dim = (int)labels.size();
                emit_table(t, out_fmt);
                auto cert = etale_check(a);
                std::cout << (cert.etale ? "etale: true" : "etale: false") << "\n";
            };
            if (field == "Q")
                run_indec(parse_algebra<Q>(algebra_spec, W));
            else
                run_indec(parse_algebra<F2>(algebra_spec, W));
            return 0;
        }
        fail_usage("unknown compute kind: " + kind);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
