#pragma once

#include <memory>

#include "enh/lie.hpp"

namespace enh {

// ---------------------------------------------------------------------------
// Chevalley-Eilenberg complexes
// ---------------------------------------------------------------------------

/// CE chains as graded symmetric powers of the suspension: a basis wedge is
/// a sorted multiset of Lie basis elements where an element may repeat only
/// if its internal degree is odd (its suspension is even). Cells are keyed
/// (CE degree s, weight); the differential preserves weight and the
/// internal degree.
template <class K>
struct CEComplex {
    ChainComplex<K> complex;
    std::vector<std::pair<Cell, int>> letters;  // global order of g basis
    std::map<Cell, std::vector<std::vector<int>>> wedges;  // per (s, wt)
    const LiePresentation<K>* base = nullptr;
};

template <class K>
CEComplex<K> ce_complex(const LiePresentation<K>& g, int s_max, int wt_cap,
                        std::optional<int> weight_filter = std::nullopt)
{
    if (g.shift != 0)
        fail_invalid("ce_complex: transport the presentation to shift 0 first");
    if (auto err = validate_lie(g, wt_cap))
        fail_invalid("ce_complex: invalid Lie presentation: " + *err);

    CEComplex<K> out;
    out.base = &g;
    for (auto& [c, labels] : g.space.cells)
        for (int i = 0; i < (int)labels.size(); ++i)
            out.letters.emplace_back(c, i);

    auto sdeg = [&](int l) { return out.letters[l].first.deg + 1; };
    auto lwt = [&](int l) { return out.letters[l].first.wt; };
    auto can_repeat = [&](int l) { return out.letters[l].first.deg % 2 != 0; };

    // enumerate wedges: nondecreasing sequences of letters
    std::map<Cell, std::map<std::vector<int>, int>> index;
    {
        std::vector<int> cur;
        std::function<void(int, int)> rec = [&](int min_letter, int wt_used) {
            int s = (int)cur.size();
            bool keep = !weight_filter || wt_used == *weight_filter;
            if (keep && s >= 1) {
                Cell c{s, wt_used};
                std::string label;
                for (int l : cur) {
                    if (!label.empty())
                        label += "^";
                    label += g.space.label(out.letters[l].first, out.letters[l].second);
                }
                index[c][cur] = (int)out.wedges[c].size();
                out.wedges[c].push_back(cur);
                out.complex.space.add(c, label);
            }
            if (s == s_max)
                return;
            for (int l = min_letter; l < (int)out.letters.size(); ++l) {
                if (wt_used + lwt(l) > wt_cap)
                    continue;
                if (!cur.empty() && cur.back() == l && !can_repeat(l))
                    continue;
                cur.push_back(l);
                rec(l, wt_used + lwt(l));
                cur.pop_back();
            }
        };
        rec(0, 0);
    }
    // the empty wedge spans CE degree 0
    out.complex.space.add({0, 0}, "1");
    out.wedges[{0, 0}] = {{}};
    out.complex.support = Window{0, s_max, 0, weight_filter ? *weight_filter : wt_cap};

    // insert a letter vector into a sorted wedge with Koszul signs
    auto insert_letter = [&](const std::vector<int>& wedge, int l) -> std::pair<std::vector<int>, int> {
        std::vector<int> w = wedge;
        int pos = 0;
        int sexp = 0;
        while (pos < (int)w.size() && w[pos] < l) {
            sexp += sdeg(w[pos]) * sdeg(l);
            ++pos;
        }
        if (pos < (int)w.size() && w[pos] == l && !can_repeat(l))
            return {{}, 0};  // zero
        w.insert(w.begin() + pos, l);
        return {w, sexp};
    };

    for (auto& [c, list] : out.wedges) {
        int s = c.deg;
        if (s < 2)
            continue;
        Cell target{s - 1, c.wt};
        int tdim = out.complex.space.dim(target);
        if (tdim == 0)
            continue;
        SparseMatrix<K> d(tdim, (int)list.size());
        for (size_t col = 0; col < list.size(); ++col) {
            auto& w = list[col];
            for (size_t i = 0; i < w.size(); ++i)
                for (size_t j = i + 1; j < w.size(); ++j) {
                    // Koszul: move s-letters i then j to the front
                    int sexp = 0;
                    for (size_t k = 0; k < i; ++k)
                        sexp += sdeg(w[k]) * sdeg(w[i]);
                    for (size_t k = 0; k < j; ++k)
                        if (k != i)
                            sexp += sdeg(w[k]) * sdeg(w[j]);
                    // contraction sign from [s a, s b] -> s [a, b]
                    sexp += out.letters[w[i]].first.deg;
                    auto [bc, bv] =
                        g.bracket(out.letters[w[i]].first, out.letters[w[i]].second,
                                  out.letters[w[j]].first, out.letters[w[j]].second);
                    if (bv.empty())
                        continue;
                    std::vector<int> rest;
                    for (size_t k = 0; k < w.size(); ++k)
                        if (k != i && k != j)
                            rest.push_back(w[k]);
                    for (auto& [bi, coeff] : bv) {
                        // bracket value letters are Lie basis elements
                        int bl = -1;
                        for (int cand = 0; cand < (int)out.letters.size(); ++cand)
                            if (out.letters[cand] == std::make_pair(bc, bi)) {
                                bl = cand;
                                break;
                            }
                        if (bl < 0)
                            fail_internal("ce_complex: bracket letter missing");
                        auto [nw, ins_sexp] = insert_letter(rest, bl);
                        if (nw.empty())
                            continue;  // killed by a forbidden repeat
                        auto it = index.find(target);
                        if (it == index.end())
                            continue;
                        auto jt = it->second.find(nw);
                        if (jt == it->second.end())
                            continue;  // filtered away or outside window
                        int total = sexp + ins_sexp;
                        d.add_to(jt->second, (int)col,
                                 K::mul(coeff, K::from_int(total % 2 ? -1 : 1)));
                    }
                }
        }
        if (!d.is_zero())
            out.complex.diff[c] = std::move(d);
    }
    return out;
}

/// Homology of the CE complex per (CE degree, weight), reported on degrees
/// 1..s_built-1 (one wedge length of margin). H_{s+1} of the reduced
/// complex computes the s-th derived functor of indecomposables.
template <class K>
HomologyTable ce_homology(const CEComplex<K>& ce, int threads = 1)
{
    Window win{1, ce.complex.support.deg_hi - 1, ce.complex.support.wt_lo,
               ce.complex.support.wt_hi};
    return homology(ce.complex, win, false, threads);
}

// ---------------------------------------------------------------------------
// Outer derivations of a free associative algebra
// ---------------------------------------------------------------------------

/// Der(TV-bar)/inner for degree-zero generators, presented at internal
/// degree zero (the suspended convention) with weight(D_{g,v}) = len(v)-1.
/// Basis D_{g,v} modulo the span of ad_w = sum_g (D_{g,wg} - D_{g,gw});
/// brackets are operator commutators reduced into the quotient.
template <class K>
LiePresentation<K> derivation_lie(const std::vector<std::string>& gens, int wt_bound)
{
    int n = (int)gens.size();
    if (n < 1)
        fail_invalid("derivation_lie: need at least one generator");

    // words over the alphabet, lengths 1..wt_bound+1
    std::vector<std::vector<std::vector<int>>> words(wt_bound + 2);
    words[0] = {{}};
    for (int len = 1; len <= wt_bound + 1; ++len)
        for (auto& w : words[len - 1])
            for (int g = 0; g < n; ++g) {
                auto nw = w;
                nw.push_back(g);
                words[len].push_back(std::move(nw));
            }
    auto word_index = [&](const std::vector<int>& w) -> int {
        auto& list = words[w.size()];
        for (size_t i = 0; i < list.size(); ++i)
            if (list[i] == w)
                return (int)i;
        return -1;
    };
    auto word_label = [&](const std::vector<int>& w) {
        std::string s;
        for (int g : w)
            s += gens[g];
        return s;
    };

    // D_{g,v} with len(v) = k+1 spans the weight-k derivations
    auto der_dim = [&](int k) { return n * (int)words[k + 1].size(); };
    auto der_index = [&](int g, const std::vector<int>& v) {
        return g * (int)words[v.size()].size() + word_index(v);
    };

    // inner derivations ad_w, weight len(w) >= 1
    std::map<int, SubspaceReducer<K>> inner;
    for (int k = 1; k <= wt_bound; ++k) {
        SubspaceReducer<K> red(der_dim(k));
        for (auto& w : words[k]) {
            SparseVec<K> v;
            for (int g = 0; g < n; ++g) {
                auto wg = w;
                wg.push_back(g);
                std::vector<int> gw = {g};
                gw.insert(gw.end(), w.begin(), w.end());
                v.emplace_back(der_index(g, wg), K::one());
                v.emplace_back(der_index(g, gw), K::neg(K::one()));
            }
            vec_normalize<K>(v);
            red.insert(std::move(v));
        }
        inner.emplace(k, std::move(red));
    }

    // quotient basis per weight: derivations independent modulo inner
    LiePresentation<K> out;
    out.shift = 0;
    out.support = Window::all_degrees(0, wt_bound);
    std::map<int, std::vector<std::pair<int, std::vector<int>>>> basis;  // wt -> (g, v)
    std::map<int, SubspaceReducer<K>> solver;                            // inner + reps
    std::map<int, std::vector<int>> accepted;  // attempt index of each basis element
    for (int k = 0; k <= wt_bound; ++k) {
        SubspaceReducer<K> s(der_dim(k), true);
        if (inner.count(k))
            for (auto& row : inner.at(k).rows())
                s.insert(row);
        for (int g = 0; g < n; ++g)
            for (auto& v : words[k + 1]) {
                SparseVec<K> e = {{der_index(g, v), K::one()}};
                if (s.insert(e)) {
                    basis[k].emplace_back(g, v);
                    accepted[k].push_back(s.generators() - 1);
                    out.space.add({0, k}, "D[" + gens[g] + "," + word_label(v) + "]");
                }
            }
        solver.emplace(k, std::move(s));
    }

    // apply D_{g,v} to a word by the Leibniz rule
    auto apply = [&](int g, const std::vector<int>& v,
                     const std::vector<int>& w) -> std::vector<std::vector<int>> {
        std::vector<std::vector<int>> terms;
        for (size_t p = 0; p < w.size(); ++p)
            if (w[p] == g) {
                std::vector<int> t(w.begin(), w.begin() + p);
                t.insert(t.end(), v.begin(), v.end());
                t.insert(t.end(), w.begin() + p + 1, w.end());
                terms.push_back(std::move(t));
            }
        return terms;
    };

    // commutator [D_{a,v}, D_{b,w}] as a derivation vector at weight k
    auto commutator = [&](int a, const std::vector<int>& v, int b,
                          const std::vector<int>& w) -> SparseVec<K> {
        SparseVec<K> out_vec;
        // value on generator b: D_{a,v}(w); on generator a: -D_{b,w}(v)
        for (auto& t : apply(a, v, w))
            out_vec.emplace_back(der_index(b, t), K::one());
        for (auto& t : apply(b, w, v))
            out_vec.emplace_back(der_index(a, t), K::neg(K::one()));
        vec_normalize<K>(out_vec);
        return out_vec;
    };

    // bracket tables on the quotient
    for (auto& [ka, la] : basis)
        for (auto& [kb, lb] : basis) {
            int kt = ka + kb;
            if (kt > wt_bound)
                continue;
            typename LiePresentation<K>::Block block;
            block.target = {0, kt};
            block.table.assign(la.size(), std::vector<SparseVec<K>>(lb.size()));
            for (size_t i = 0; i < la.size(); ++i)
                for (size_t j = 0; j < lb.size(); ++j) {
                    auto comm = commutator(la[i].first, la[i].second, lb[j].first, lb[j].second);
                    if (comm.empty())
                        continue;
                    auto sol = solver.at(kt).solve(comm);
                    if (!sol)
                        fail_internal("derivation_lie: commutator not reducible");
                    auto& acc = accepted.at(kt);
                    SparseVec<K> coords;
                    for (auto& [idx, coeff] : *sol) {
                        auto it = std::lower_bound(acc.begin(), acc.end(), idx);
                        if (it != acc.end() && *it == idx)
                            coords.emplace_back((int)(it - acc.begin()), coeff);
                        // other indices belong to inner generators: zero in
                        // the quotient
                    }
                    vec_normalize<K>(coords);
                    block.table[i][j] = std::move(coords);
                }
            out.bracket_tab[{Cell{0, ka}, Cell{0, kb}}] = std::move(block);
        }
    return out;
}

// ---------------------------------------------------------------------------
// Filtered enveloping algebras, explicit resolutions and Tor
// ---------------------------------------------------------------------------

/// Associative algebra with a weight filtration: internal degrees add
/// exactly under products, weights never exceed the sum. Index 0 is the
/// unit; all other basis elements have weight >= 1 and span the
/// augmentation ideal.
template <class K>
struct FilteredAlgebra {
    struct Info {
        int deg = 0;
        int wt = 0;
        std::string label;
    };
    std::vector<Info> basis;
    std::function<SparseVec<K>(int, int)> mul;  // on global indices
    int wt_cap = 0;

    SparseVec<K> product(int i, int j) const
    {
        if (i == 0)
            return {{j, K::one()}};
        if (j == 0)
            return {{i, K::one()}};
        if (basis[i].wt + basis[j].wt > wt_cap)
            fail_internal("filtered product beyond the cap");
        return mul(i, j);
    }
};

/// The enveloping algebra of Sigma W = Q<x_1, y_0> with [y,x] = x: basis
/// x^e y^k (e <= 1, x^2 = 0), weight e + k, products via y^k x = x (y+1)^k.
inline FilteredAlgebra<Q> enveloping_sigma_w(int wt_cap)
{
    FilteredAlgebra<Q> alg;
    alg.wt_cap = wt_cap;
    // index: e + 2*k encoded positionally: enumerate k-major
    std::map<std::pair<int, int>, int> id;
    for (int w = 0; w <= wt_cap; ++w)
        for (int e = 0; e <= std::min(w, 1); ++e) {
            int k = w - e;
            std::string label = e ? (k ? "x*y^" + std::to_string(k) : "x")
                                  : (k ? "y^" + std::to_string(k) : "1");
            id[{e, k}] = (int)alg.basis.size();
            alg.basis.push_back({e, w, label});
        }
    auto binom = [](int nn, int kk) {
        mpz_class r = 1;
        for (int i = 0; i < kk; ++i)
            r = r * (nn - i) / (i + 1);
        return mpq_class(r);
    };
    auto decode = [&, id]() {
        std::map<int, std::pair<int, int>> rev;
        for (auto& [ek, idx] : id)
            rev[idx] = ek;
        return rev;
    }();
    alg.mul = [id, decode, binom](int i, int j) -> SparseVec<Q> {
        auto [e1, k1] = decode.at(i);
        auto [e2, k2] = decode.at(j);
        if (e1 + e2 >= 2)
            return {};  // x^2 = 0
        if (e2 == 0)
            return {{id.at({e1, k1 + k2}), Q::one()}};
        // (x^{e1} y^{k1})(x y^{k2}) = x^{e1+1} (y+1)^{k1} y^{k2}
        SparseVec<Q> out;
        for (int t = 0; t <= k1; ++t)
            out.emplace_back(id.at({e1 + 1, t + k2}), binom(k1, t));
        vec_normalize<Q>(out);
        return out;
    };
    return alg;
}

/// Adapter: a strictly weight-graded enveloping algebra as a filtered one.
template <class K>
FilteredAlgebra<K> filtered_from(const Enveloping<K>& u, int wt_cap)
{
    FilteredAlgebra<K> alg;
    alg.wt_cap = wt_cap;
    std::map<std::pair<Cell, int>, int> id;
    // unit first
    alg.basis.push_back({0, 0, "1"});
    id[{Cell{0, 0}, 0}] = 0;
    for (auto& [c, labels] : u.alg.space.cells) {
        if (c.wt < 1 || c.wt > wt_cap)
            continue;
        for (int i = 0; i < (int)labels.size(); ++i) {
            id[{c, i}] = (int)alg.basis.size();
            alg.basis.push_back({c.deg, c.wt, labels[i]});
        }
    }
    auto rev = std::make_shared<std::vector<std::pair<Cell, int>>>();
    rev->resize(alg.basis.size());
    for (auto& [key, idx] : id)
        (*rev)[idx] = key;
    // copy the needed product data
    auto alg_ptr = std::make_shared<Algebra<K>>(u.alg);
    auto id_ptr = std::make_shared<std::map<std::pair<Cell, int>, int>>(std::move(id));
    alg.mul = [alg_ptr, rev, id_ptr](int i, int j) -> SparseVec<K> {
        auto [ci, ii] = (*rev)[i];
        auto [cj, jj] = (*rev)[j];
        auto [t, v] = alg_ptr->mul_basis(ci, ii, cj, jj);
        SparseVec<K> out;
        for (auto& [k, coeff] : v)
            out.emplace_back(id_ptr->at({t, k}), coeff);
        vec_normalize<K>(out);
        return out;
    };
    return alg;
}

/// Free resolution over a filtered algebra: stage i is a free module on
/// graded generators; maps send generators to combinations gen' * u. The
/// stage-0 augmentation to k is implicit (weight-zero part).
template <class K>
struct ModuleResolution {
    struct Gen {
        std::string label;
        int deg = 0;
        int wt = 0;
    };
    struct Stage {
        std::vector<Gen> gens;
        // map[g] = list of (target gen, algebra element index, coefficient)
        std::vector<std::vector<std::tuple<int, int, typename K::Elem>>> map;
    };
    FilteredAlgebra<K> base;
    std::vector<Stage> stages;  // stages[0] has the empty map

    std::string dump() const
    {
        std::string s;
        for (size_t i = 1; i < stages.size(); ++i) {
            s += "P" + std::to_string(i) + " -> P" + std::to_string(i - 1) + ":\n";
            for (size_t g = 0; g < stages[i].gens.size(); ++g) {
                s += "  " + stages[i].gens[g].label + " |-> ";
                bool first = true;
                for (auto& [tg, u, c] : stages[i].map[g]) {
                    if (!first)
                        s += " + ";
                    first = false;
                    s += "(" + K::str(c) + ")*" + stages[i - 1].gens[tg].label + "*" +
                         base.basis[u].label;
                }
                if (first)
                    s += "0";
                s += "\n";
            }
        }
        return s;
    }
};

/// May's resolution of Q over U(Sigma W): P_0 = U, P_i free on a^{(i)} of
/// degree i-1 and b^{(i)} of degree i, with
///   a^{(i)} |-> b^{(i-1)} y + (i-1) b^{(i-1)} - a^{(i-1)} x
///   b^{(i)} |-> b^{(i-1)} x
/// and P_1 -> P_0 by a^{(1)} |-> y, b^{(1)} |-> x.
inline ModuleResolution<Q> may_resolution(int i_max, int wt_cap)
{
    ModuleResolution<Q> res;
    res.base = enveloping_sigma_w(wt_cap);
    auto idx_of = [&](const std::string& label) {
        for (size_t i = 0; i < res.base.basis.size(); ++i)
            if (res.base.basis[i].label == label)
                return (int)i;
        fail_internal("may_resolution: missing base element " + label);
    };
    int ix = idx_of("x"), iy = idx_of("y^1");

    typename ModuleResolution<Q>::Stage p0;
    p0.gens.push_back({"e", 0, 0});
    p0.map = {{}};
    res.stages.push_back(std::move(p0));
    for (int i = 1; i <= i_max; ++i) {
        typename ModuleResolution<Q>::Stage s;
        s.gens.push_back({"a(" + std::to_string(i) + ")", i - 1, i});
        s.gens.push_back({"b(" + std::to_string(i) + ")", i, i});
        if (i == 1) {
            s.map = {{{0, iy, Q::one()}}, {{0, ix, Q::one()}}};
        } else {
            s.map = {{{1, iy, Q::one()},
                      {1, 0, Q::from_int(i - 1)},
                      {0, ix, Q::from_int(-1)}},
                     {{1, ix, Q::one()}}};
        }
        res.stages.push_back(std::move(s));
    }
    return res;
}

/// The periodic resolution of F2 over F2[x_{j+1}]/x^2: stage l is free on
/// one generator of internal degree l(j+1), maps are multiplication by x.
inline ModuleResolution<F2> periodic_resolution(int j, int l_max, int wt_cap)
{
    ModuleResolution<F2> res;
    // base algebra F2[x]/x^2 with x of degree j+1, weight 1
    FilteredAlgebra<F2> alg;
    alg.wt_cap = std::max(wt_cap, 1);
    alg.basis.push_back({0, 0, "1"});
    alg.basis.push_back({j + 1, 1, "x"});
    alg.mul = [](int i, int jj) -> SparseVec<F2> {
        (void)i;
        (void)jj;
        return {};  // x*x = 0; unit products handled by the wrapper
    };
    res.base = std::move(alg);
    for (int l = 0; l <= l_max; ++l) {
        typename ModuleResolution<F2>::Stage s;
        s.gens.push_back({"g(" + std::to_string(l) + ")", l * (j + 1), l});
        if (l == 0)
            s.map = {{}};
        else
            s.map = {{{0, 1, F2::one()}}};
        res.stages.push_back(std::move(s));
    }
    return res;
}

/// Expansion of a resolution stage: basis (gen, algebra element) within the
/// weight cap, organized per internal degree.
template <class K>
struct StageBasis {
    // per internal degree: list of (gen, base index)
    std::map<int, std::vector<std::pair<int, int>>> cells;
    std::map<std::pair<int, int>, int> pos;  // (gen, base idx) -> index in its cell
};

template <class K>
StageBasis<K> expand_stage(const ModuleResolution<K>& res, int stage)
{
    StageBasis<K> out;
    auto& st = res.stages[stage];
    for (size_t g = 0; g < st.gens.size(); ++g)
        for (size_t u = 0; u < res.base.basis.size(); ++u) {
            if (st.gens[g].wt + res.base.basis[u].wt > res.base.wt_cap)
                continue;
            int deg = st.gens[g].deg + res.base.basis[u].deg;
            out.pos[{(int)g, (int)u}] = (int)out.cells[deg].size();
            out.cells[deg].emplace_back((int)g, (int)u);
        }
    return out;
}

/// Differential matrices of the resolution per internal degree, acting on
/// the expanded stage bases. Also checks that composites vanish and that
/// the complex is exact at interior stages (by ranks); Tor is the homology
/// after applying the augmentation.
template <class K>
struct ResolutionCheck {
    bool composites_vanish = true;
    bool exact = true;
    std::string detail;
    HomologyTable tor;  // cell (deg = stage, wt = internal degree)
};

template <class K>
std::map<int, SparseMatrix<K>> resolution_matrices(const ModuleResolution<K>& res, int stage,
                                                   const StageBasis<K>& src,
                                                   const StageBasis<K>& dst)
{
    std::map<int, SparseMatrix<K>> out;
    auto& st = res.stages[stage];
    for (auto& [deg, list] : src.cells) {
        auto it = dst.cells.find(deg);
        int rows = it == dst.cells.end() ? 0 : (int)it->second.size();
        SparseMatrix<K> m(rows, (int)list.size());
        for (size_t col = 0; col < list.size(); ++col) {
            auto [g, u] = list[col];
            for (auto& [tg, tu, coeff] : st.map[g]) {
                // generator image times the coefficient u: (gen' * tu) * u
                auto prod = res.base.product(tu, u);
                for (auto& [pu, pc] : prod) {
                    auto pit = dst.pos.find({tg, pu});
                    if (pit == dst.pos.end())
                        fail_internal("resolution map leaves the weight cap");
                    m.add_to(pit->second, (int)col, K::mul(coeff, pc));
                }
            }
        }
        if (!m.is_zero())
            out.emplace(deg, std::move(m));
        else
            out.emplace(deg, SparseMatrix<K>(rows, (int)list.size()));
    }
    return out;
}

template <class K>
ResolutionCheck<K> check_resolution(const ModuleResolution<K>& res)
{
    ResolutionCheck<K> out;
    out.tor.field = K::name();
    int n_stage = (int)res.stages.size();
    std::vector<StageBasis<K>> bases(n_stage);
    for (int i = 0; i < n_stage; ++i)
        bases[i] = expand_stage(res, i);
    std::vector<std::map<int, SparseMatrix<K>>> mats(n_stage);
    for (int i = 1; i < n_stage; ++i)
        mats[i] = resolution_matrices(res, i, bases[i], bases[i - 1]);

    // composites vanish
    for (int i = 2; i < n_stage; ++i)
        for (auto& [deg, m] : mats[i]) {
            auto it = mats[i - 1].find(deg);
            if (it == mats[i - 1].end() || it->second.cols() == 0)
                continue;
            if (it->second.cols() != m.rows())
                continue;
            if (!(it->second * m).is_zero()) {
                out.composites_vanish = false;
                out.detail += "d*d != 0 at stage " + std::to_string(i) + " degree " +
                              std::to_string(deg) + "\n";
            }
        }

    // exactness at interior stages: ker(d_i) = im(d_{i+1}) per degree,
    // restricted to the weight-safe zone (maps never raise the filtration)
    for (int i = 1; i + 1 < n_stage; ++i) {
        for (auto& [deg, m] : mats[i]) {
            int dim_ker = m.cols() - rank(m);
            auto it = mats[i + 1].find(deg);
            int dim_im = it == mats[i + 1].end() ? 0 : rank(it->second);
            if (dim_ker != dim_im) {
                out.exact = false;
                out.detail += "H != 0 at stage " + std::to_string(i) + " degree " +
                              std::to_string(deg) + " (ker " + std::to_string(dim_ker) +
                              ", im " + std::to_string(dim_im) + ")\n";
            }
        }
    }

    // exactness at stage 0 against the augmentation: coker(d_1) = k
    {
        auto& b0 = bases[0];
        for (auto& [deg, list] : b0.cells) {
            auto it = mats[1].find(deg);
            int r = it == mats[1].end() ? 0 : rank(it->second);
            int expect = 0;
            for (auto& [g, u] : list)
                if (res.base.basis[u].wt == 0 && res.stages[0].gens[g].wt == 0)
                    ++expect;
            if ((int)list.size() - r != expect) {
                out.exact = false;
                out.detail += "coker(d_1) wrong at degree " + std::to_string(deg) + "\n";
            }
        }
    }

    // Tor = homology of the generator complex after augmentation: the
    // induced map keeps only algebra coefficient 1 (weight zero)
    {
        int max_stage = n_stage - 1;
        std::vector<std::map<int, SparseMatrix<K>>> aug(n_stage);
        for (int i = 1; i < n_stage; ++i) {
            auto& st = res.stages[i];
            auto& prev = res.stages[i - 1];
            // per internal degree over generators only
            std::map<int, std::vector<int>> src_g, dst_g;
            for (size_t g = 0; g < st.gens.size(); ++g)
                src_g[st.gens[g].deg].push_back((int)g);
            for (size_t g = 0; g < prev.gens.size(); ++g)
                dst_g[prev.gens[g].deg].push_back((int)g);
            for (auto& [deg, cols] : src_g) {
                auto it = dst_g.find(deg);
                SparseMatrix<K> m(it == dst_g.end() ? 0 : (int)it->second.size(),
                                  (int)cols.size());
                for (size_t c = 0; c < cols.size(); ++c)
                    for (auto& [tg, tu, coeff] : st.map[cols[c]]) {
                        if (res.base.basis[tu].wt != 0)
                            continue;  // augmentation kills it
                        for (size_t r = 0; it != dst_g.end() && r < it->second.size(); ++r)
                            if (it->second[r] == tg)
                                m.add_to((int)r, (int)c, coeff);
                    }
                aug[i].emplace(deg, std::move(m));
            }
        }
        for (int i = 0; i <= max_stage; ++i) {
            std::map<int, std::vector<int>> by_deg;
            auto& st = res.stages[i];
            for (size_t g = 0; g < st.gens.size(); ++g)
                by_deg[st.gens[g].deg].push_back((int)g);
            for (auto& [deg, gens_here] : by_deg) {
                int dim_ker;
                if (i == 0 || aug[i].find(deg) == aug[i].end())
                    dim_ker = (int)gens_here.size();
                else {
                    auto& m = aug[i].at(deg);
                    dim_ker = m.cols() - rank(m);
                }
                int dim_im = 0;
                if (i + 1 <= max_stage) {
                    auto it = aug[i + 1].find(deg);
                    if (it != aug[i + 1].end())
                        dim_im = rank(it->second);
                }
                // the top stage has no incoming map data; skip to avoid
                // truncation phantoms
                if (i == max_stage)
                    continue;
                out.tor.set_dim({i, deg}, dim_ker - dim_im);
            }
        }
    }
    return out;
}

/// Tor over a filtered enveloping algebra via the normalized bar
/// resolution: the complex U-bar^{(x) s} per (s, internal degree), words
/// bounded by the weight cap. Reported as cells (deg = s, wt = internal
/// degree).
template <class K>
HomologyTable tor_bar(const FilteredAlgebra<K>& alg, int s_max, int wt_cap)
{
    if (wt_cap > alg.wt_cap)
        fail_window("tor_bar: weight cap exceeds the algebra cap");
    if (s_max > wt_cap)
        fail_window("tor_bar: bar words of length " + std::to_string(s_max) +
                    " exceed the weight bound " + std::to_string(wt_cap));
    // letters: non-unit basis elements
    std::vector<int> letters;
    for (size_t i = 1; i < alg.basis.size(); ++i) {
        if (alg.basis[i].wt < 1)
            fail_invalid("tor_bar: augmentation ideal must sit in positive weights");
        if (alg.basis[i].wt <= wt_cap)
            letters.push_back((int)i);
    }
    // words per (s, internal degree)
    std::map<std::pair<int, int>, std::vector<std::vector<int>>> words;
    std::map<std::pair<int, int>, std::map<std::vector<int>, int>> index;
    {
        std::vector<int> cur;
        std::function<void(int, int, int)> rec = [&](int len, int wt_used, int deg) {
            auto key = std::make_pair(len, deg);
            index[key][cur] = (int)words[key].size();
            words[key].push_back(cur);
            if (len == s_max + 1)
                return;
            for (int l : letters) {
                if (wt_used + alg.basis[l].wt > wt_cap)
                    continue;
                cur.push_back(l);
                rec(len + 1, wt_used + alg.basis[l].wt, deg + alg.basis[l].deg);
                cur.pop_back();
            }
        };
        rec(0, 0, 0);
    }

    // differential: merge adjacent letters, signs from suspended degrees
    auto word_weight = [&](const std::vector<int>& w) {
        int s = 0;
        for (int l : w)
            s += alg.basis[l].wt;
        return s;
    };
    HomologyTable out;
    out.field = K::name();
    std::map<std::pair<int, int>, SparseMatrix<K>> mats;  // keyed by source (s, deg)
    for (auto& [key, list] : words) {
        auto [s, deg] = key;
        if (s < 2)
            continue;
        auto tkey = std::make_pair(s - 1, deg);
        int tdim = words.count(tkey) ? (int)words[tkey].size() : 0;
        SparseMatrix<K> m(tdim, (int)list.size());
        for (size_t col = 0; col < list.size(); ++col) {
            auto& w = list[col];
            int prefix = 0;
            for (int i = 0; i + 1 < (int)w.size(); ++i) {
                prefix += alg.basis[w[i]].deg + 1;
                auto sign = K::from_int(prefix % 2 ? -1 : 1);
                auto prod = alg.product(w[i], w[i + 1]);
                for (auto& [p, coeff] : prod) {
                    auto nw = w;
                    nw[i] = p;
                    nw.erase(nw.begin() + i + 1);
                    if (word_weight(nw) > wt_cap)
                        fail_internal("tor_bar: merge raised the filtration");
                    auto pit = index[tkey].find(nw);
                    if (pit == index[tkey].end())
                        fail_internal("tor_bar: missing merge target");
                    m.add_to(pit->second, (int)col, K::mul(sign, coeff));
                }
            }
        }
        mats.emplace(key, std::move(m));
    }
    // d^2 = 0 spot check
    for (auto& [key, m] : mats) {
        auto [s, deg] = key;
        auto it = mats.find({s - 1, deg});
        if (it != mats.end() && it->second.cols() == m.rows())
            if (!(it->second * m).is_zero())
                fail_internal("tor_bar: d^2 != 0");
    }
    for (auto& [key, list] : words) {
        auto [s, deg] = key;
        if (s > s_max)
            continue;
        int dim_ker;
        auto it = mats.find(key);
        if (s < 2 || it == mats.end())
            dim_ker = (int)list.size();
        else
            dim_ker = (int)list.size() - rank(it->second);
        if (s == 0) {
            // Tor_0 = k
            out.set_dim({0, deg}, deg == 0 ? 1 : 0);
            continue;
        }
        int dim_im = 0;
        auto jt = mats.find({s + 1, deg});
        if (jt != mats.end())
            dim_im = rank(jt->second);
        out.set_dim({s, deg}, dim_ker - dim_im);
    }
    return out;
}

}  // namespace enh
