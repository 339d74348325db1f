#pragma once

#include "enh/hodge.hpp"
#include "enh/lie_resolutions.hpp"

namespace enh {

/// A truncated simplicial object built from an iterated free functor
/// (cotriple) or supplied directly. Everything downstream needs only the
/// level bases, the face/degeneracy matrices, the indices of the free
/// generators (the Q-projection for levelwise-free objects) and the
/// augmentation.
template <class K>
struct SimplicialTruncation {
    enum class Variant { si, lie, gerstenhaber, constant };

    Variant variant = Variant::si;
    int shift = 0;  // n for Lie / Gerstenhaber brackets
    int t_max = 0;
    int wt_max = 0;
    std::vector<BigradedSpace> levels;
    // face[t][i]: level t -> level t-1 for t >= 1; face[0][0] is the
    // augmentation into the base object
    std::vector<std::vector<std::map<Cell, SparseMatrix<K>>>> face;
    // degen[t][j]: level t -> level t+1 for 0 <= t < t_max
    std::vector<std::vector<std::map<Cell, SparseMatrix<K>>>> degen;
    std::vector<std::map<Cell, std::vector<int>>> q_basis;  // generator coordinates
    std::map<Cell, int> base_dims;  // dims of the resolved object
};

namespace cotriple_detail {

template <class K>
struct Val {
    Cell cell{0, 0};
    SparseVec<K> v;
    bool zero() const { return v.empty(); }
};

/// Operations available in a map target: products (algebra levels),
/// brackets and restriction (Lie and Gerstenhaber levels, trivial on plain
/// algebras).
template <class K>
struct TargetOps {
    std::function<Val<K>(const Val<K>&, const Val<K>&)> mul;
    std::function<Val<K>(const Val<K>&, const Val<K>&)> bracket;
    std::function<Val<K>(const Val<K>&)> xi;
    std::function<int(Cell)> dim;
};

template <class K>
Val<K> bilinear(const Val<K>& a, const Val<K>& b,
                const std::function<std::pair<Cell, SparseVec<K>>(Cell, int, Cell, int)>& op)
{
    Val<K> out;
    bool first = true;
    for (auto& [i, x] : a.v)
        for (auto& [j, y] : b.v) {
            auto [t, vv] = op(a.cell, i, b.cell, j);
            if (first) {
                out.cell = t;
                first = false;
            }
            SparseVec<K> term = vv;
            vec_scale<K>(term, K::mul(x, y));
            vec_axpy<K>(out.v, K::one(), term);
        }
    return out;
}

template <class K>
TargetOps<K> algebra_ops(const Algebra<K>& a)
{
    TargetOps<K> ops;
    ops.mul = [&a](const Val<K>& x, const Val<K>& y) {
        return bilinear<K>(x, y, [&a](Cell ca, int i, Cell cb, int j) {
            return a.mul_basis(ca, i, cb, j);
        });
    };
    ops.bracket = [](const Val<K>&, const Val<K>&) { return Val<K>{}; };
    ops.xi = [](const Val<K>&) { return Val<K>{}; };
    ops.dim = [&a](Cell c) { return a.dim(c); };
    return ops;
}

template <class K>
Val<K> lie_xi_vec(const LiePresentation<K>& g, const Val<K>& a)
{
    // xi(sum v_i e_i) = sum v_i^2 xi(e_i) + sum_{i<j} v_i v_j [e_i, e_j]
    Val<K> out;
    out.cell = g.restr_cell(a.cell);
    for (auto& [i, x] : a.v) {
        auto [t, xi] = g.restriction(a.cell, i);
        SparseVec<K> term = xi;
        vec_scale<K>(term, K::mul(x, x));
        vec_axpy<K>(out.v, K::one(), term);
    }
    for (size_t p = 0; p < a.v.size(); ++p)
        for (size_t q = p + 1; q < a.v.size(); ++q) {
            auto [t, br] = g.bracket(a.cell, a.v[p].first, a.cell, a.v[q].first);
            SparseVec<K> term = br;
            vec_scale<K>(term, K::mul(a.v[p].second, a.v[q].second));
            vec_axpy<K>(out.v, K::one(), term);
        }
    return out;
}

template <class K>
TargetOps<K> lie_ops(const LiePresentation<K>& g)
{
    TargetOps<K> ops;
    ops.mul = [](const Val<K>&, const Val<K>&) -> Val<K> {
        fail_internal("Lie targets have no products");
    };
    ops.bracket = [&g](const Val<K>& x, const Val<K>& y) {
        return bilinear<K>(x, y, [&g](Cell ca, int i, Cell cb, int j) {
            return g.bracket(ca, i, cb, j);
        });
    };
    ops.xi = [&g](const Val<K>& x) { return lie_xi_vec(g, x); };
    ops.dim = [&g](Cell c) { return g.dim(c); };
    return ops;
}

}  // namespace cotriple_detail

/// One level of an iterated free construction: either a free commutative
/// algebra over letters (SI, and the outer layer of nG), with the letters
/// possibly forming a free Lie layer (nG), or a free Lie algebra (nL).
template <class K>
struct CotripleLevel {
    std::optional<FreeCommutative<K>> calg;
    std::optional<FreeLie<K>> lie;
    // origin of each generator: basis element of the previous level (or of
    // the base object at level 0)
    std::vector<std::pair<Cell, int>> origin;
    // previous-level basis element -> (cell, index) of the corresponding
    // generator monomial / generator element in this level
    std::map<std::pair<Cell, int>, std::pair<Cell, int>> lift;

    const BigradedSpace& space() const
    {
        return calg ? calg->alg.space : lie->lie.space;
    }

    long total_dim() const
    {
        long n = 0;
        for (auto& [c, l] : space().cells)
            n += (long)l.size();
        return n;
    }
};

namespace cotriple_detail {

/// Poisson-extended bracket on the monomial basis of S(nL(W)), memoized.
/// Parities follow p = |a| + n = the suspended degree of a.
template <class K>
struct GerstenhaberBracket {
    const FreeCommutative<K>* alg = nullptr;  // monomials over nL letters
    const FreeLie<K>* lie = nullptr;          // the nL layer (shift-0 form)
    int n = 0;                                // bracket degree
    std::map<std::tuple<Cell, int, Cell, int>, Val<K>> memo;

    // letters of the algebra are nL basis elements, in the suspended
    // (shift-0) indexing of `lie`; the algebra stores them desuspended
    Cell suspend_cell(Cell c) const { return {c.deg + n, c.wt}; }
    Cell desuspend_cell(Cell c) const { return {c.deg - n, c.wt}; }

    Val<K> mul(const Val<K>& a, const Val<K>& b) const
    {
        return bilinear<K>(a, b, [this](Cell ca, int i, Cell cb, int j) {
            return alg->alg.mul_basis(ca, i, cb, j);
        });
    }

    /// Bracket of two algebra basis elements.
    Val<K> bracket_basis(Cell ca, int ia, Cell cb, int ib)
    {
        auto key = std::make_tuple(ca, ia, cb, ib);
        auto it = memo.find(key);
        if (it != memo.end())
            return it->second;
        Val<K> out;
        out.cell = {ca.deg + cb.deg + n, ca.wt + cb.wt};
        auto& ea = alg->expo.at(ca)[ia];
        auto& eb = alg->expo.at(cb)[ib];
        int len_a = 0, len_b = 0;
        for (int e : ea)
            len_a += e;
        for (int e : eb)
            len_b += e;
        if (len_a == 0 || len_b == 0) {
            memo[key] = out;  // bracket with the unit vanishes
            return out;
        }
        if (len_a == 1 && len_b == 1) {
            // base case: nL letters, bracket from the free Lie tables
            int la = -1, lb = -1;
            for (size_t g = 0; g < ea.size(); ++g) {
                if (ea[g])
                    la = (int)g;
                if (eb[g])
                    lb = (int)g;
            }
            auto& A = lie->elements[la];
            auto& B = lie->elements[lb];
            auto [t, br] = lie->lie.bracket(A.cell, A.index, B.cell, B.index);
            // re-express the nL value as length-1 monomials of the algebra
            for (auto& [k, coeff] : br) {
                // find the element position of (t, k) in the lie layer
                int pos = -1;
                for (int cand : lie->by_cell.at(t))
                    if (lie->elements[cand].index == k) {
                        pos = cand;
                        break;
                    }
                if (pos < 0)
                    fail_internal("gerstenhaber bracket: missing Lie letter");
                std::vector<int> expo(ea.size(), 0);
                expo[pos] = 1;
                Cell mc = desuspend_cell(t);
                int idx = alg->find_monomial(mc, expo);
                if (idx < 0)
                    continue;  // outside the weight window: truncated
                out.v.emplace_back(idx, coeff);
            }
            vec_normalize<K>(out.v);
            memo[key] = out;
            return out;
        }
        if (len_b >= 2) {
            // split b = f * r and apply the Poisson rule
            // p = |a| + n (suspended degree of a)
            auto& expo_b = eb;
            int f = -1;
            for (size_t g = 0; g < expo_b.size(); ++g)
                if (expo_b[g]) {
                    f = (int)g;
                    break;
                }
            auto& F = lie->elements[f];
            Cell fc = desuspend_cell(F.cell);
            std::vector<int> ef(expo_b.size(), 0);
            ef[f] = 1;
            int fi = alg->find_monomial(fc, ef);
            auto er = expo_b;
            er[f] -= 1;
            Cell rc{cb.deg - fc.deg, cb.wt - fc.wt};
            int ri = alg->find_monomial(rc, er);
            if (fi < 0 || ri < 0)
                fail_internal("gerstenhaber bracket: factor split failed");
            // [a, f r] = [a, f] r + (-1)^{p |f|} f [a, r]
            Val<K> t1 = bracket_basis(ca, ia, fc, fi);
            Val<K> fr{rc, {{ri, K::one()}}};
            t1 = mul(t1, fr);
            Val<K> t2 = bracket_basis(ca, ia, rc, ri);
            Val<K> fv{fc, {{fi, K::one()}}};
            t2 = mul(fv, t2);
            long p = ca.deg + n;
            long sexp = p * fc.deg;
            vec_scale<K>(t2.v, K::from_int(sexp % 2 ? -1 : 1));
            out.v = t1.v;
            vec_axpy<K>(out.v, K::one(), t2.v);
            memo[key] = out;
            return out;
        }
        // a composite, b a letter: antisymmetry
        Val<K> ba = bracket_basis(cb, ib, ca, ia);
        long p = ca.deg + n, q = cb.deg + n;
        out.v = ba.v;
        vec_scale<K>(out.v, K::from_int((p * q) % 2 ? 1 : -1));
        memo[key] = out;
        return out;
    }
};

}  // namespace cotriple_detail

// ---------------------------------------------------------------------------
// Cotriple towers
// ---------------------------------------------------------------------------

namespace cotriple_detail {

/// Shared face/degeneracy assembly over levels whose bases are monomials
/// over letters with values extended multiplicatively (SI and nG) or free
/// Lie elements extended by the expression DAG (nL).
template <class K>
struct TowerBuilder {
    SimplicialTruncation<K>* out;
    std::vector<CotripleLevel<K>>* levels;
    long budget;

    void check_budget(int t) const
    {
        long total = (*levels)[t].total_dim();
        if (total > budget)
            fail_budget("cotriple level " + std::to_string(t) + " has " +
                        std::to_string(total) + " basis elements (budget " +
                        std::to_string(budget) + ")");
    }

    /// Per-cell matrices of a map defined by values on every basis element.
    std::map<Cell, SparseMatrix<K>> assemble(
        const BigradedSpace& source, const TargetOps<K>& target,
        const std::function<Val<K>(Cell, int)>& value) const
    {
        std::map<Cell, SparseMatrix<K>> out_m;
        for (auto& [c, labels] : source.cells) {
            SparseMatrix<K> m(target.dim(c), (int)labels.size());
            for (int i = 0; i < (int)labels.size(); ++i) {
                auto val = value(c, i);
                for (auto& [r, coeff] : val.v)
                    m.add_to(r, i, coeff);
            }
            out_m[c] = std::move(m);
        }
        return out_m;
    }
};

}  // namespace cotriple_detail

/// Iterated free commutative resolution (SI)^{o(t+1)}(A) of an augmented
/// commutative algebra, with faces by counit/multiplication and
/// degeneracies by generator insertion.
template <class K>
SimplicialTruncation<K> cotriple_si(const Algebra<K>& a, int t_max, int wt_max,
                                    long budget = 20000)
{
    using namespace cotriple_detail;
    if (!a.commutative)
        fail_invalid("cotriple_si: commutative input required");
    SimplicialTruncation<K> out;
    out.variant = SimplicialTruncation<K>::Variant::si;
    out.t_max = t_max;
    out.wt_max = wt_max;
    for (auto& [c, l] : a.space.cells)
        out.base_dims[c] = (int)l.size();

    std::vector<CotripleLevel<K>> levels(t_max + 1);
    TowerBuilder<K> tb{&out, &levels, budget};

    // build level algebras
    for (int t = 0; t <= t_max; ++t) {
        std::vector<Generator> gens;
        auto add_gen = [&](Cell c, int i, const std::string& label) {
            levels[t].origin.emplace_back(c, i);
            gens.push_back({label, c.deg, c.wt});
        };
        if (t == 0) {
            for (Cell c : a.ideal_cells())
                for (int i = 0; i < a.dim(c); ++i)
                    add_gen(c, i, "<" + a.space.label(c, i) + ">");
        } else {
            auto& prev = levels[t - 1].calg->alg.space;
            for (auto& [c, labels] : prev.cells) {
                if (c.wt < 1)
                    continue;
                for (int i = 0; i < (int)labels.size(); ++i)
                    add_gen(c, i, "<" + labels[i] + ">");
            }
        }
        levels[t].calg = free_commutative<K>(gens, wt_max);
        tb.check_budget(t);
        // lift: previous basis element -> generator monomial here
        for (size_t g = 0; g < gens.size(); ++g) {
            std::vector<int> e(gens.size(), 0);
            e[g] = 1;
            Cell c{gens[g].deg, gens[g].wt};
            int idx = levels[t].calg->find_monomial(c, e);
            levels[t].lift[levels[t].origin[g]] = {c, idx};
        }
        out.levels.push_back(levels[t].space());
    }

    // generator monomial positions for quick Q-projection
    out.q_basis.resize(t_max + 1);
    for (int t = 0; t <= t_max; ++t)
        for (auto& [c, expos] : levels[t].calg->expo)
            for (size_t i = 0; i < expos.size(); ++i) {
                int total = 0;
                for (int e : expos[i])
                    total += e;
                if (total == 1)
                    out.q_basis[t][c].push_back((int)i);
            }

    // faces
    out.face.resize(t_max + 1);
    auto monomial_value = [&](int t, const TargetOps<K>& ops,
                              const std::vector<Val<K>>& gen_val, Cell c,
                              int i) -> Val<K> {
        auto& expo = levels[t].calg->expo.at(c)[i];
        Val<K> acc;
        acc.cell = {0, 0};
        acc.v = {{0, K::one()}};  // the unit of the target
        for (size_t g = 0; g < expo.size(); ++g)
            for (int e = 0; e < expo[g]; ++e)
                acc = ops.mul(acc, gen_val[g]);
        return acc;
    };
    for (int t = 0; t <= t_max; ++t) {
        int n_ops = (t == 0) ? 1 : t + 1;
        out.face[t].resize(n_ops);
        for (int i = 0; i < n_ops; ++i) {
            // generator values
            std::vector<Val<K>> gen_val(levels[t].origin.size());
            if (t == 0) {
                for (size_t g = 0; g < levels[t].origin.size(); ++g)
                    gen_val[g] = Val<K>{levels[t].origin[g].first,
                                        {{levels[t].origin[g].second, K::one()}}};
                auto ops = algebra_ops(a);
                out.face[0][0] = tb.assemble(levels[0].space(), ops, [&](Cell c, int k) {
                    return monomial_value(0, ops, gen_val, c, k);
                });
                continue;
            }
            auto& target = levels[t - 1];
            auto ops = algebra_ops(target.calg->alg);
            for (size_t g = 0; g < levels[t].origin.size(); ++g) {
                auto [oc, oi] = levels[t].origin[g];
                if (i == 0) {
                    gen_val[g] = Val<K>{oc, {{oi, K::one()}}};
                } else {
                    // previous face applied to the origin, lifted to
                    // generators of the target level
                    auto& fm = out.face[t - 1][i - 1];
                    Val<K> img{oc, fm.at(oc).column(oi)};
                    Val<K> lifted;
                    lifted.cell = oc;
                    for (auto& [r, coeff] : img.v) {
                        auto lit = target.lift.find({oc, r});
                        if (lit == target.lift.end())
                            fail_internal("cotriple_si: missing lift");
                        lifted.v.emplace_back(lit->second.second, coeff);
                    }
                    vec_normalize<K>(lifted.v);
                    gen_val[g] = std::move(lifted);
                }
            }
            out.face[t][i] = tb.assemble(levels[t].space(), ops, [&](Cell c, int k) {
                return monomial_value(t, ops, gen_val, c, k);
            });
        }
    }

    // degeneracies
    out.degen.resize(t_max);
    for (int t = 0; t + 1 <= t_max; ++t) {
        out.degen[t].resize(t + 1);
        auto& target = levels[t + 1];
        auto ops = algebra_ops(target.calg->alg);
        for (int j = 0; j <= t; ++j) {
            std::vector<Val<K>> gen_val(levels[t].origin.size());
            for (size_t g = 0; g < levels[t].origin.size(); ++g) {
                if (j == 0) {
                    // generator g of X_t, viewed as an element, becomes a
                    // generator of X_{t+1}
                    auto self = levels[t].lift.at(levels[t].origin[g]);
                    auto lit = target.lift.find(self);
                    if (lit == target.lift.end())
                        fail_internal("cotriple_si: missing degeneracy lift");
                    gen_val[g] = Val<K>{lit->second.first, {{lit->second.second, K::one()}}};
                } else {
                    auto [oc, oi] = levels[t].origin[g];
                    auto& sm = out.degen[t - 1][j - 1];
                    Val<K> img{oc, sm.at(oc).column(oi)};
                    Val<K> lifted;
                    lifted.cell = oc;
                    for (auto& [r, coeff] : img.v) {
                        auto lit = target.lift.find({oc, r});
                        if (lit == target.lift.end())
                            fail_internal("cotriple_si: missing degeneracy lift");
                        lifted.v.emplace_back(lit->second.second, coeff);
                    }
                    vec_normalize<K>(lifted.v);
                    gen_val[g] = std::move(lifted);
                }
            }
            out.degen[t][j] = tb.assemble(levels[t].space(), ops, [&](Cell c, int k) {
                return monomial_value(t, ops, gen_val, c, k);
            });
        }
    }
    return out;
}

/// The constant levelwise-free truncation of a free commutative algebra
/// (the smooth case): every level is A itself, all faces and degeneracies
/// are the identity.
template <class K>
SimplicialTruncation<K> constant_free_truncation(const FreeCommutative<K>& a, int t_max)
{
    SimplicialTruncation<K> out;
    out.variant = SimplicialTruncation<K>::Variant::constant;
    out.t_max = t_max;
    out.wt_max = a.alg.support.wt_hi;
    for (auto& [c, l] : a.alg.space.cells)
        out.base_dims[c] = (int)l.size();
    std::map<Cell, SparseMatrix<K>> id;
    for (auto& [c, l] : a.alg.space.cells)
        id[c] = SparseMatrix<K>::identity((int)l.size());
    out.face.resize(t_max + 1);
    out.degen.resize(t_max);
    for (int t = 0; t <= t_max; ++t) {
        out.levels.push_back(a.alg.space);
        out.face[t].assign(t == 0 ? 1 : t + 1, id);
        if (t < t_max)
            out.degen[t].assign(t + 1, id);
    }
    out.q_basis.resize(t_max + 1);
    for (int t = 0; t <= t_max; ++t)
        for (auto& [c, expos] : a.expo)
            for (size_t i = 0; i < expos.size(); ++i) {
                int total = 0;
                for (int e : expos[i])
                    total += e;
                if (total == 1)
                    out.q_basis[t][c].push_back((int)i);
            }
    return out;
}

/// Iterated free (restricted) Lie resolution (L o U)^{o(t+1)} of a Lie
/// presentation at shift 0.
template <class K>
SimplicialTruncation<K> cotriple_lie(const LiePresentation<K>& v, int t_max, int wt_max,
                                     long budget = 20000)
{
    using namespace cotriple_detail;
    if (v.shift != 0)
        fail_invalid("cotriple_lie: transport to shift 0 first");
    SimplicialTruncation<K> out;
    out.variant = SimplicialTruncation<K>::Variant::lie;
    out.t_max = t_max;
    out.wt_max = wt_max;
    for (auto& [c, l] : v.space.cells)
        out.base_dims[c] = (int)l.size();

    std::vector<CotripleLevel<K>> levels(t_max + 1);
    TowerBuilder<K> tb{&out, &levels, budget};

    for (int t = 0; t <= t_max; ++t) {
        std::vector<Generator> gens;
        auto add_gen = [&](Cell c, int i, const std::string& label) {
            levels[t].origin.emplace_back(c, i);
            gens.push_back({label, c.deg, c.wt});
        };
        const BigradedSpace& prev = (t == 0) ? v.space : levels[t - 1].lie->lie.space;
        for (auto& [c, labels] : prev.cells)
            for (int i = 0; i < (int)labels.size(); ++i)
                add_gen(c, i, "<" + labels[i] + ">");
        levels[t].lie = free_lie<K>(gens, wt_max, v.restricted);
        tb.check_budget(t);
        for (size_t g = 0; g < gens.size(); ++g) {
            auto& el = levels[t].lie->elements[g];
            levels[t].lift[levels[t].origin[g]] = {el.cell, el.index};
        }
        out.levels.push_back(levels[t].space());
    }

    out.q_basis.resize(t_max + 1);
    for (int t = 0; t <= t_max; ++t)
        for (size_t g = 0; g < levels[t].origin.size(); ++g) {
            auto& el = levels[t].lie->elements[g];
            out.q_basis[t][el.cell].push_back(el.index);
        }

    // evaluate a free Lie map from generator values via the expression DAG
    auto dag_values = [&](int t, const TargetOps<K>& ops,
                          const std::vector<Val<K>>& gen_val) {
        auto& f = *levels[t].lie;
        std::vector<Val<K>> val(f.elements.size());
        for (size_t p = 0; p < f.elements.size(); ++p) {
            auto& e = f.elements[p].expr;
            switch (e.kind) {
                case FreeLie<K>::Expr::gen:
                    val[p] = gen_val[p];
                    break;
                case FreeLie<K>::Expr::bracket:
                    val[p] = ops.bracket(val[e.a], val[e.b]);
                    break;
                case FreeLie<K>::Expr::xi:
                    val[p] = ops.xi(val[e.a]);
                    break;
            }
        }
        return val;
    };
    auto assemble_lie = [&](int t, const TargetOps<K>& ops,
                            const std::vector<Val<K>>& gen_val) {
        auto vals = dag_values(t, ops, gen_val);
        auto& f = *levels[t].lie;
        std::map<Cell, SparseMatrix<K>> m;
        for (auto& [c, labels] : f.lie.space.cells)
            m[c] = SparseMatrix<K>(ops.dim(c), (int)labels.size());
        for (size_t p = 0; p < f.elements.size(); ++p) {
            auto& el = f.elements[p];
            for (auto& [r, coeff] : vals[p].v)
                m[el.cell].add_to(r, el.index, coeff);
        }
        return m;
    };

    out.face.resize(t_max + 1);
    for (int t = 0; t <= t_max; ++t) {
        int n_ops = (t == 0) ? 1 : t + 1;
        out.face[t].resize(n_ops);
        for (int i = 0; i < n_ops; ++i) {
            std::vector<Val<K>> gen_val(levels[t].origin.size());
            const TargetOps<K> ops = (t == 0) ? lie_ops(v) : lie_ops(levels[t - 1].lie->lie);
            for (size_t g = 0; g < levels[t].origin.size(); ++g) {
                auto [oc, oi] = levels[t].origin[g];
                if (t == 0 || i == 0) {
                    gen_val[g] = Val<K>{oc, {{oi, K::one()}}};
                } else {
                    auto& fm = out.face[t - 1][i - 1];
                    Val<K> img{oc, fm.at(oc).column(oi)};
                    Val<K> lifted;
                    lifted.cell = oc;
                    auto& target = levels[t - 1];
                    for (auto& [r, coeff] : img.v)
                        lifted.v.emplace_back(target.lift.at({oc, r}).second, coeff);
                    vec_normalize<K>(lifted.v);
                    gen_val[g] = std::move(lifted);
                }
            }
            out.face[t][i] = assemble_lie(t, ops, gen_val);
        }
    }

    out.degen.resize(t_max);
    for (int t = 0; t + 1 <= t_max; ++t) {
        out.degen[t].resize(t + 1);
        auto& target = levels[t + 1];
        auto ops = lie_ops(target.lie->lie);
        for (int j = 0; j <= t; ++j) {
            std::vector<Val<K>> gen_val(levels[t].origin.size());
            for (size_t g = 0; g < levels[t].origin.size(); ++g) {
                if (j == 0) {
                    auto self = levels[t].lift.at(levels[t].origin[g]);
                    auto lit = target.lift.at(self);
                    gen_val[g] = Val<K>{lit.first, {{lit.second, K::one()}}};
                } else {
                    auto [oc, oi] = levels[t].origin[g];
                    auto& sm = out.degen[t - 1][j - 1];
                    Val<K> img{oc, sm.at(oc).column(oi)};
                    Val<K> lifted;
                    lifted.cell = oc;
                    for (auto& [r, coeff] : img.v)
                        lifted.v.emplace_back(target.lift.at({oc, r}).second, coeff);
                    vec_normalize<K>(lifted.v);
                    gen_val[g] = std::move(lifted);
                }
            }
            out.degen[t][j] = assemble_lie(t, ops, gen_val);
        }
    }
    return out;
}

/// Iterated free n-Gerstenhaber resolution (nG I)^{o(t+1)}(A) of a plain
/// commutative algebra (trivial bracket), over Q.
template <class K>
SimplicialTruncation<K> cotriple_ngerstenhaber(const Algebra<K>& a, int n, int t_max,
                                               int wt_max, long budget = 20000)
{
    using namespace cotriple_detail;
    static_assert(!K::is_f2, "the Gerstenhaber tower is built over Q");
    if (!a.commutative)
        fail_invalid("cotriple_ngerstenhaber: commutative input required");
    SimplicialTruncation<K> out;
    out.variant = SimplicialTruncation<K>::Variant::gerstenhaber;
    out.shift = n;
    out.t_max = t_max;
    out.wt_max = wt_max;
    for (auto& [c, l] : a.space.cells)
        out.base_dims[c] = (int)l.size();

    std::vector<CotripleLevel<K>> levels(t_max + 1);
    std::vector<std::shared_ptr<GerstenhaberBracket<K>>> gbr(t_max + 1);
    TowerBuilder<K> tb{&out, &levels, budget};

    for (int t = 0; t <= t_max; ++t) {
        std::vector<Generator> gens;
        auto add_gen = [&](Cell c, int i, const std::string& label) {
            levels[t].origin.emplace_back(c, i);
            gens.push_back({label, c.deg, c.wt});
        };
        if (t == 0) {
            for (Cell c : a.ideal_cells())
                for (int i = 0; i < a.dim(c); ++i)
                    add_gen(c, i, "<" + a.space.label(c, i) + ">");
        } else {
            for (auto& [c, labels] : levels[t - 1].calg->alg.space.cells) {
                if (c.wt < 1)
                    continue;
                for (int i = 0; i < (int)labels.size(); ++i)
                    add_gen(c, i, "<" + labels[i] + ">");
            }
        }
        // free n-Lie via suspension transport: closure at degree + n
        std::vector<Generator> susp;
        for (auto& g : gens)
            susp.push_back({g.name, g.deg + n, g.wt});
        levels[t].lie = free_lie<K>(susp, wt_max);
        // algebra letters: nL basis desuspended
        std::vector<Generator> letters;
        for (auto& el : levels[t].lie->elements) {
            letters.push_back({"(" + levels[t].lie->lie.space.label(el.cell, el.index) + ")",
                               el.cell.deg - n, el.cell.wt});
        }
        levels[t].calg = free_commutative<K>(letters, wt_max);
        tb.check_budget(t);
        gbr[t] = std::make_shared<GerstenhaberBracket<K>>();
        gbr[t]->alg = &*levels[t].calg;
        gbr[t]->lie = &*levels[t].lie;
        gbr[t]->n = n;
        // lift: previous basis element -> generator letter monomial
        for (size_t g = 0; g < gens.size(); ++g) {
            std::vector<int> e(letters.size(), 0);
            e[g] = 1;  // generator letters come first in construction order
            Cell c{gens[g].deg, gens[g].wt};
            int idx = levels[t].calg->find_monomial(c, e);
            if (idx < 0)
                fail_internal("cotriple_ngerstenhaber: generator letter missing");
            levels[t].lift[levels[t].origin[g]] = {c, idx};
        }
        out.levels.push_back(levels[t].space());
    }

    out.q_basis.resize(t_max + 1);
    for (int t = 0; t <= t_max; ++t) {
        size_t n_gens = levels[t].origin.size();
        for (auto& [c, expos] : levels[t].calg->expo)
            for (size_t i = 0; i < expos.size(); ++i) {
                int total = 0;
                bool gen_letter = false;
                for (size_t g = 0; g < expos[i].size(); ++g)
                    if (expos[i][g]) {
                        total += expos[i][g];
                        gen_letter = g < n_gens &&
                                     levels[t].lie->elements[g].expr.kind ==
                                         FreeLie<K>::Expr::gen;
                    }
                if (total == 1 && gen_letter)
                    out.q_basis[t][c].push_back((int)i);
            }
    }

    // target operations for level t (or the base algebra for t = -1)
    auto level_ops = [&](int t) -> TargetOps<K> {
        if (t < 0)
            return algebra_ops(a);
        TargetOps<K> ops;
        auto g = gbr[t];
        ops.mul = [g](const Val<K>& x, const Val<K>& y) { return g->mul(x, y); };
        ops.bracket = [g](const Val<K>& x, const Val<K>& y) {
            return bilinear<K>(x, y, [g](Cell ca, int i, Cell cb, int j) {
                auto val = g->bracket_basis(ca, i, cb, j);
                return std::make_pair(val.cell, val.v);
            });
        };
        ops.xi = [](const Val<K>&) -> Val<K> { fail_internal("no restriction over Q"); };
        ops.dim = [g](Cell c) { return g->alg->alg.dim(c); };
        return ops;
    };

    // value of an algebra basis monomial given values of the nL letters
    auto monomial_value = [&](int t, const TargetOps<K>& ops,
                              const std::vector<Val<K>>& letter_val, Cell c, int i) -> Val<K> {
        auto& expo = levels[t].calg->expo.at(c)[i];
        Val<K> acc;
        acc.cell = {0, 0};
        acc.v = {{0, K::one()}};
        for (size_t g = 0; g < expo.size(); ++g)
            for (int e = 0; e < expo[g]; ++e)
                acc = ops.mul(acc, letter_val[g]);
        return acc;
    };
    // letter values from generator values via the nL expression DAG
    auto letter_values = [&](int t, const TargetOps<K>& ops,
                             const std::vector<Val<K>>& gen_val) {
        auto& f = *levels[t].lie;
        std::vector<Val<K>> val(f.elements.size());
        for (size_t p = 0; p < f.elements.size(); ++p) {
            auto& e = f.elements[p].expr;
            if (e.kind == FreeLie<K>::Expr::gen)
                val[p] = gen_val[p];
            else if (e.kind == FreeLie<K>::Expr::bracket)
                val[p] = ops.bracket(val[e.a], val[e.b]);
            else
                val[p] = ops.xi(val[e.a]);
        }
        return val;
    };

    out.face.resize(t_max + 1);
    for (int t = 0; t <= t_max; ++t) {
        int n_ops = (t == 0) ? 1 : t + 1;
        out.face[t].resize(n_ops);
        for (int i = 0; i < n_ops; ++i) {
            auto ops = level_ops(t - 1);
            std::vector<Val<K>> gen_val(levels[t].origin.size());
            for (size_t g = 0; g < levels[t].origin.size(); ++g) {
                auto [oc, oi] = levels[t].origin[g];
                if (t == 0 || i == 0) {
                    gen_val[g] = Val<K>{oc, {{oi, K::one()}}};
                } else {
                    auto& fm = out.face[t - 1][i - 1];
                    Val<K> img{oc, fm.at(oc).column(oi)};
                    Val<K> lifted;
                    lifted.cell = oc;
                    auto& target = levels[t - 1];
                    for (auto& [r, coeff] : img.v)
                        lifted.v.emplace_back(target.lift.at({oc, r}).second, coeff);
                    vec_normalize<K>(lifted.v);
                    gen_val[g] = std::move(lifted);
                }
            }
            auto lv = letter_values(t, ops, gen_val);
            out.face[t][i] = tb.assemble(levels[t].space(), ops, [&](Cell c, int k) {
                return monomial_value(t, ops, lv, c, k);
            });
        }
    }

    out.degen.resize(t_max);
    for (int t = 0; t + 1 <= t_max; ++t) {
        out.degen[t].resize(t + 1);
        auto ops = level_ops(t + 1);
        auto& target = levels[t + 1];
        for (int j = 0; j <= t; ++j) {
            std::vector<Val<K>> gen_val(levels[t].origin.size());
            for (size_t g = 0; g < levels[t].origin.size(); ++g) {
                if (j == 0) {
                    auto self = levels[t].lift.at(levels[t].origin[g]);
                    auto lit = target.lift.at(self);
                    gen_val[g] = Val<K>{lit.first, {{lit.second, K::one()}}};
                } else {
                    auto [oc, oi] = levels[t].origin[g];
                    auto& sm = out.degen[t - 1][j - 1];
                    Val<K> img{oc, sm.at(oc).column(oi)};
                    Val<K> lifted;
                    lifted.cell = oc;
                    for (auto& [r, coeff] : img.v)
                        lifted.v.emplace_back(target.lift.at({oc, r}).second, coeff);
                    vec_normalize<K>(lifted.v);
                    gen_val[g] = std::move(lifted);
                }
            }
            auto lv = letter_values(t, ops, gen_val);
            out.degen[t][j] = tb.assemble(levels[t].space(), ops, [&](Cell c, int k) {
                return monomial_value(t, ops, lv, c, k);
            });
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Simplicial validation, pi_0, derived functors
// ---------------------------------------------------------------------------

template <class K>
std::optional<std::string> validate_truncation(const SimplicialTruncation<K>& st)
{
    auto compose_ok = [&](const std::map<Cell, SparseMatrix<K>>& f,
                          const std::map<Cell, SparseMatrix<K>>& g) {
        // f after g, cellwise equality holder returned by caller
        std::map<Cell, SparseMatrix<K>> out;
        for (auto& [c, gm] : g) {
            auto it = f.find(c);
            if (it == f.end())
                continue;
            out[c] = it->second * gm;
        }
        return out;
    };
    auto equal = [&](const std::map<Cell, SparseMatrix<K>>& x,
                     const std::map<Cell, SparseMatrix<K>>& y) {
        for (auto& [c, m] : x) {
            auto it = y.find(c);
            SparseMatrix<K> diff = m;
            if (it != y.end())
                for (auto& [r, cc, v] : it->second.entries())
                    diff.add_to(r, cc, K::neg(v));
            if (!diff.is_zero())
                return false;
        }
        return true;
    };
    // d_i d_j = d_{j-1} d_i, i < j
    for (int t = 2; t <= st.t_max; ++t)
        for (int j = 1; j <= t; ++j)
            for (int i = 0; i < j; ++i)
                if (!equal(compose_ok(st.face[t - 1][i], st.face[t][j]),
                           compose_ok(st.face[t - 1][j - 1], st.face[t][i])))
                    return "d_i d_j fails at level " + std::to_string(t);
    // d_i s_j
    for (int t = 0; t + 1 <= st.t_max; ++t)
        for (int j = 0; j <= t; ++j)
            for (int i = 0; i <= t + 1; ++i) {
                auto lhs = compose_ok(st.face[t + 1][i], st.degen[t][j]);
                if (i == j || i == j + 1) {
                    // identity cellwise
                    for (auto& [c, m] : lhs) {
                        auto id = SparseMatrix<K>::identity(m.cols());
                        SparseMatrix<K> diff = m;
                        for (auto& [r, cc, v] : id.entries())
                            diff.add_to(r, cc, K::neg(v));
                        if (!diff.is_zero())
                            return "d_i s_j identity fails at level " + std::to_string(t);
                    }
                } else if (i < j) {
                    if (t == 0)
                        return "unexpected degeneracy index";
                    if (!equal(lhs, compose_ok(st.degen[t - 1][j - 1], st.face[t][i])))
                        return "d_i s_j (i<j) fails at level " + std::to_string(t);
                } else {
                    if (!equal(lhs, compose_ok(st.degen[t - 1][j], st.face[t][i - 1])))
                        return "d_i s_j (i>j+1) fails at level " + std::to_string(t);
                }
            }
    // s_i s_j = s_{j+1} s_i, i <= j
    for (int t = 0; t + 2 <= st.t_max; ++t)
        for (int j = 0; j <= t; ++j)
            for (int i = 0; i <= j; ++i)
                if (!equal(compose_ok(st.degen[t + 1][i], st.degen[t][j]),
                           compose_ok(st.degen[t + 1][j + 1], st.degen[t][i])))
                    return "s_i s_j fails at level " + std::to_string(t);
    // augmented: aug d_0 = aug d_1
    if (st.t_max >= 1)
        if (!equal(compose_ok(st.face[0][0], st.face[1][0]),
                   compose_ok(st.face[0][0], st.face[1][1])))
            return "augmentation does not equalize d_0, d_1";
    return std::nullopt;
}

/// pi_0 of the truncation is the resolved object: the augmentation is
/// surjective with kernel the image of d_0 - d_1.
template <class K>
bool pi0_is_base(const SimplicialTruncation<K>& st)
{
    if (st.t_max < 1)
        return false;
    std::map<Cell, int> dim0;
    for (auto& [c, labels] : st.levels[0].cells)
        dim0[c] = (int)labels.size();
    for (auto& [c, n0] : dim0) {
        auto it = st.face[0][0].find(c);
        int base = st.base_dims.count(c) ? st.base_dims.at(c) : 0;
        int aug_rank = it == st.face[0][0].end() ? 0 : rank(it->second);
        if (aug_rank != base)
            return false;
        // d_0 - d_1 image rank
        auto i0 = st.face[1][0].find(c);
        auto i1 = st.face[1][1].find(c);
        int cols = 0;
        if (i0 != st.face[1][0].end() && i1 != st.face[1][1].end())
            cols = i0->second.cols();
        SparseMatrix<K> diff(n0, cols);
        for (int j = 0; j < cols; ++j) {
            SparseVec<K> v = i0->second.column(j);
            vec_axpy<K>(v, K::neg(K::one()), i1->second.column(j));
            for (auto& [r, coeff] : v)
                diff.add_to(r, j, coeff);
        }
        if (rank(diff) != n0 - base)
            return false;
    }
    return true;
}

/// Derived functors of indecomposables: homology of the (unnormalized)
/// complex of levelwise generator coordinates under the alternating face
/// sum. Keyed (simplicial degree p, internal degree, weight).
struct DerivedTable {
    std::map<std::tuple<int, int, int>, int> dims;
    int dim(int p, int deg, int wt) const
    {
        auto it = dims.find({p, deg, wt});
        return it == dims.end() ? 0 : it->second;
    }
};

template <class K>
DerivedTable derived_indecomposables(const SimplicialTruncation<K>& st, int p_max)
{
    if (p_max + 1 > st.t_max)
        fail_invalid("derived_indecomposables: truncation too short for p_max");
    // Q-complex: per level, the generator-coordinate subspace
    // differential: alternating sum of faces, rows/cols restricted
    auto q_matrix = [&](int t) {
        // map from level t to t-1 on Q-spaces, per cell
        std::map<Cell, SparseMatrix<K>> out;
        for (auto& [c, qs] : st.q_basis[t]) {
            auto it = st.q_basis[t - 1].find(c);
            int rows = it == st.q_basis[t - 1].end() ? 0 : (int)it->second.size();
            SparseMatrix<K> m(rows, (int)qs.size());
            for (int i = 0; i <= t; ++i) {
                auto fit = st.face[t][i].find(c);
                if (fit == st.face[t][i].end())
                    continue;
                for (size_t col = 0; col < qs.size(); ++col) {
                    auto full = fit->second.column(qs[col]);
                    if (it == st.q_basis[t - 1].end())
                        continue;
                    for (size_t r = 0; r < it->second.size(); ++r) {
                        auto val = vec_at<K>(full, it->second[r]);
                        if (val)
                            m.add_to((int)r, (int)col,
                                     K::mul(K::from_int(i % 2 ? -1 : 1), *val));
                    }
                }
            }
            out[c] = std::move(m);
        }
        return out;
    };
    std::vector<std::map<Cell, SparseMatrix<K>>> d(st.t_max + 1);
    for (int t = 1; t <= st.t_max; ++t)
        d[t] = q_matrix(t);

    DerivedTable out;
    for (int p = 0; p <= p_max; ++p) {
        for (auto& [c, qs] : st.q_basis[p]) {
            int dim_ker;
            if (p == 0)
                dim_ker = (int)qs.size();
            else {
                auto it = d[p].find(c);
                dim_ker = it == d[p].end() ? (int)qs.size()
                                           : (int)qs.size() - rank(it->second);
            }
            int dim_im = 0;
            auto jt = d[p + 1].find(c);
            if (jt != d[p + 1].end())
                dim_im = rank(jt->second);
            int h = dim_ker - dim_im;
            if (h != 0)
                out.dims[{p, c.deg, c.wt}] = h;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Sym^l / Lambda^l of derived Kaehler differentials
// ---------------------------------------------------------------------------

/// Levelwise Sym^l or Lambda^l of the generator spaces of a levelwise-free
/// truncation of an ungraded algebra, then homology of the alternating-sum
/// complex. Requires SI or constant provenance (levelwise free).
template <class K>
HomologyTable kahler_fiber_powers(const SimplicialTruncation<K>& st, int ell, bool exterior,
                                  int p_max)
{
    if (st.variant != SimplicialTruncation<K>::Variant::si &&
        st.variant != SimplicialTruncation<K>::Variant::constant)
        fail_invalid("kahler_fiber_powers: levelwise-free commutative resolution required");
    if (p_max + 1 > st.t_max)
        fail_invalid("kahler_fiber_powers: truncation too short");
    for (int t = 0; t <= st.t_max; ++t)
        for (auto& [c, qs] : st.q_basis[t])
            if (c.deg != 0 && !qs.empty())
                fail_invalid("kahler_fiber_powers: ungraded inputs only");

    // basis of Sym^l/Lambda^l per level: sorted multisets / subsets of
    // (weight-tagged) generator slots, organized per total weight
    struct PowerBasis {
        std::vector<std::pair<int, int>> slots;  // (wt, index within q-cell list)
        std::map<std::vector<int>, int> index;   // sorted slot lists
        std::vector<std::vector<int>> list;
        std::map<int, std::vector<int>> by_weight;  // wt -> positions
    };
    auto build_power = [&](int t) {
        PowerBasis pb;
        for (auto& [c, qs] : st.q_basis[t])
            for (size_t i = 0; i < qs.size(); ++i)
                pb.slots.emplace_back(c.wt, (int)i);
        std::vector<int> cur;
        std::function<void(int, int)> rec = [&](int start, int left) {
            if ((int)cur.size() == ell) {
                int w = 0;
                for (int s : cur)
                    w += pb.slots[s].first;
                pb.index[cur] = (int)pb.list.size();
                pb.by_weight[w].push_back((int)pb.list.size());
                pb.list.push_back(cur);
                return;
            }
            for (int s = start; s < (int)pb.slots.size(); ++s) {
                if (exterior && !cur.empty() && cur.back() == s)
                    continue;
                cur.push_back(s);
                rec(exterior ? s + 1 : s, left);
                cur.pop_back();
            }
        };
        rec(0, 0);
        return pb;
    };
    std::vector<PowerBasis> pbs(st.t_max + 1);
    for (int t = 0; t <= st.t_max; ++t)
        pbs[t] = build_power(t);

    // Q-map columns: generator slots -> target generator coordinates
    auto q_map = [&](int t, int i) {
        // slot -> sparse vector over target slots
        std::vector<SparseVec<K>> cols;
        auto& src = pbs[t];
        // global target slot index per (cell position): rebuild mapping
        std::map<std::pair<int, int>, int> tslot;  // (wt, idx) -> slot pos
        for (size_t s = 0; s < pbs[t - 1].slots.size(); ++s)
            tslot[pbs[t - 1].slots[s]] = (int)s;
        // per source q-cell
        size_t slot0 = 0;
        for (auto& [c, qs] : st.q_basis[t]) {
            auto fit = st.face[t][i].find(c);
            auto qit = st.q_basis[t - 1].find(c);
            for (size_t k = 0; k < qs.size(); ++k) {
                SparseVec<K> v;
                if (fit != st.face[t][i].end() && qit != st.q_basis[t - 1].end()) {
                    auto full = fit->second.column(qs[k]);
                    for (size_t r = 0; r < qit->second.size(); ++r) {
                        auto val = vec_at<K>(full, qit->second[r]);
                        if (val)
                            v.emplace_back(tslot.at({c.wt, (int)r}), *val);
                    }
                }
                cols.push_back(std::move(v));
                (void)slot0;
            }
        }
        return cols;
    };

    // power functor applied to the alternating sum of faces
    std::vector<SparseMatrix<K>> dmat(st.t_max + 1);
    for (int t = 1; t <= st.t_max; ++t) {
        SparseMatrix<K> m((int)pbs[t - 1].list.size(), (int)pbs[t].list.size());
        for (int i = 0; i <= t; ++i) {
            auto cols = q_map(t, i);
            auto sign = K::from_int(i % 2 ? -1 : 1);
            for (size_t col = 0; col < pbs[t].list.size(); ++col) {
                auto& slots = pbs[t].list[col];
                // expand the product of images
                std::function<void(size_t, std::vector<int>&, typename K::Elem)> expand =
                    [&](size_t pos, std::vector<int>& built, typename K::Elem coeff) {
                        if (pos == slots.size()) {
                            auto sorted = built;
                            std::sort(sorted.begin(), sorted.end());
                            typename K::Elem c2 = coeff;
                            if (exterior) {
                                // repeated slots vanish; sign of the sort
                                for (size_t x = 0; x + 1 < sorted.size(); ++x)
                                    if (sorted[x] == sorted[x + 1])
                                        return;
                                long inv = 0;
                                for (size_t x = 0; x < built.size(); ++x)
                                    for (size_t y = x + 1; y < built.size(); ++y)
                                        if (built[x] > built[y])
                                            ++inv;
                                c2 = K::mul(c2, K::from_int(inv % 2 ? -1 : 1));
                            }
                            auto it = pbs[t - 1].index.find(sorted);
                            if (it == pbs[t - 1].index.end())
                                fail_internal("kahler: missing power monomial");
                            m.add_to(it->second, (int)col, c2);
                            return;
                        }
                        for (auto& [s, c3] : cols[slots[pos]]) {
                            built.push_back(s);
                            expand(pos + 1, built, K::mul(coeff, c3));
                            built.pop_back();
                        }
                    };
                std::vector<int> built;
                expand(0, built, sign);
            }
        }
        dmat[t] = std::move(m);
    }

    HomologyTable out;
    out.field = K::name();
    for (int p = 0; p <= p_max; ++p) {
        // per weight: restrict the matrices
        for (auto& [w, rows] : pbs[p].by_weight) {
            int dim_ker;
            if (p == 0)
                dim_ker = (int)rows.size();
            else {
                // columns of dmat[p] at this weight
                SparseMatrix<K> m = dmat[p];
                // weight-preserving: count rank on the weight block
                std::map<int, int> rowpos;
                SparseMatrix<K> sub((int)pbs[p - 1].by_weight.count(w)
                                        ? (int)pbs[p - 1].by_weight.at(w).size()
                                        : 0,
                                    (int)rows.size());
                if (sub.rows() > 0) {
                    auto& trows = pbs[p - 1].by_weight.at(w);
                    for (size_t r = 0; r < trows.size(); ++r)
                        rowpos[trows[r]] = (int)r;
                    for (size_t j = 0; j < rows.size(); ++j)
                        for (auto& [r, v] : m.column(rows[j]))
                            sub.add_to(rowpos.at(r), (int)j, v);
                }
                dim_ker = (int)rows.size() - rank(sub);
            }
            int dim_im = 0;
            if (p + 1 <= st.t_max && pbs[p + 1].by_weight.count(w)) {
                auto& srows = pbs[p + 1].by_weight.at(w);
                std::map<int, int> rowpos;
                for (size_t r = 0; r < rows.size(); ++r)
                    rowpos[rows[r]] = (int)r;
                SparseMatrix<K> sub((int)rows.size(), (int)srows.size());
                for (size_t j = 0; j < srows.size(); ++j)
                    for (auto& [r, v] : dmat[p + 1].column(srows[j]))
                        if (rowpos.count(r))
                            sub.add_to(rowpos.at(r), (int)j, v);
                dim_im = rank(sub);
            }
            if (dim_ker - dim_im != 0)
                out.entries[{p, w}].dim = dim_ker - dim_im;
        }
    }
    return out;
}

}  // namespace enh
