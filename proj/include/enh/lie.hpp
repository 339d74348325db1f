#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "enh/algebra.hpp"

namespace enh {

/// Graded Lie presentation with shift n: the bracket raises degree by n and
/// adds weights. Axioms follow Def-4.1-style conventions with p = |x| + n,
/// which is exactly what makes the suspension transport sign-free. Over F2
/// a restriction table may be present (shift-0 restriction doubles degree
/// and weight).
template <class K>
struct LiePresentation {
    struct Block {
        Cell target;
        std::vector<std::vector<SparseVec<K>>> table;
    };

    int shift = 0;
    bool restricted = false;
    BigradedSpace space;
    std::map<std::pair<Cell, Cell>, Block> bracket_tab;
    std::map<Cell, std::vector<SparseVec<K>>> restr_tab;
    Window support;

    int dim(Cell c) const { return space.dim(c); }

    Cell bracket_cell(Cell a, Cell b) const { return {a.deg + b.deg + shift, a.wt + b.wt}; }
    Cell restr_cell(Cell a) const { return {2 * a.deg + shift, 2 * a.wt}; }

    std::pair<Cell, SparseVec<K>> bracket(Cell ca, int i, Cell cb, int j) const
    {
        auto it = bracket_tab.find({ca, cb});
        if (it != bracket_tab.end())
            return {it->second.target, it->second.table[i][j]};
        return {bracket_cell(ca, cb), {}};
    }

    std::pair<Cell, SparseVec<K>> restriction(Cell c, int i) const
    {
        auto it = restr_tab.find(c);
        if (it != restr_tab.end())
            return {restr_cell(c), it->second[i]};
        return {restr_cell(c), {}};
    }

    /// Bilinear extension of the bracket to sparse vectors in fixed cells.
    SparseVec<K> bracket_vec(Cell ca, const SparseVec<K>& a, Cell cb, const SparseVec<K>& b) const
    {
        SparseVec<K> out;
        for (auto& [i, x] : a)
            for (auto& [j, y] : b) {
                auto [t, v] = bracket(ca, i, cb, j);
                SparseVec<K> term = v;
                vec_scale<K>(term, K::mul(x, y));
                vec_axpy<K>(out, K::one(), term);
            }
        return out;
    }
};

/// Antisymmetry, Jacobi and (restricted) restriction axioms on every basis
/// tuple with total weight inside the window; returns the first violation.
template <class K>
std::optional<std::string> validate_lie(const LiePresentation<K>& g, int wt_max)
{
    int n = g.shift;
    auto sgn = [](long e) { return e % 2 ? -1 : 1; };
    for (auto& [ca, la] : g.space.cells)
        for (auto& [cb, lb] : g.space.cells) {
            if (ca.wt + cb.wt > wt_max)
                continue;
            long p = ca.deg + n, q = cb.deg + n;
            for (int i = 0; i < (int)la.size(); ++i)
                for (int j = 0; j < (int)lb.size(); ++j) {
                    auto [t1, ab] = g.bracket(ca, i, cb, j);
                    auto [t2, ba] = g.bracket(cb, j, ca, i);
                    SparseVec<K> d = ab;
                    vec_axpy<K>(d, K::from_int(sgn(p * q)), ba);
                    if (!d.empty())
                        return "antisymmetry fails at " + g.space.label(ca, i) + "," +
                               g.space.label(cb, j);
                }
        }
    for (auto& [ca, la] : g.space.cells)
        for (auto& [cb, lb] : g.space.cells)
            for (auto& [cc, lc] : g.space.cells) {
                if (ca.wt + cb.wt + cc.wt > wt_max)
                    continue;
                long p = ca.deg + n, q = cb.deg + n, r = cc.deg + n;
                for (int i = 0; i < (int)la.size(); ++i)
                    for (int j = 0; j < (int)lb.size(); ++j)
                        for (int k = 0; k < (int)lc.size(); ++k) {
                            // (-1)^{pr}[x,[y,z]] + (-1)^{qp}[y,[z,x]] + (-1)^{rq}[z,[x,y]]
                            SparseVec<K> acc;
                            auto [cyz, yz] = g.bracket(cb, j, cc, k);
                            auto t = g.bracket_vec(ca, {{i, K::one()}}, cyz, yz);
                            vec_scale<K>(t, K::from_int(sgn(p * r)));
                            vec_axpy<K>(acc, K::one(), t);
                            auto [czx, zx] = g.bracket(cc, k, ca, i);
                            t = g.bracket_vec(cb, {{j, K::one()}}, czx, zx);
                            vec_scale<K>(t, K::from_int(sgn(q * p)));
                            vec_axpy<K>(acc, K::one(), t);
                            auto [cxy, xy] = g.bracket(ca, i, cb, j);
                            t = g.bracket_vec(cc, {{k, K::one()}}, cxy, xy);
                            vec_scale<K>(t, K::from_int(sgn(r * q)));
                            vec_axpy<K>(acc, K::one(), t);
                            if (!acc.empty())
                                return "Jacobi fails at " + g.space.label(ca, i) + "," +
                                       g.space.label(cb, j) + "," + g.space.label(cc, k);
                        }
            }
    if (g.restricted) {
        if (!K::is_f2)
            return "restriction requires F2";
        for (auto& [ca, la] : g.space.cells)
            for (auto& [cb, lb] : g.space.cells) {
                if (2 * ca.wt + cb.wt > wt_max)
                    continue;
                for (int i = 0; i < (int)la.size(); ++i)
                    for (int j = 0; j < (int)lb.size(); ++j) {
                        // [xi(a), b] = [a, [a, b]]
                        auto [cxa, xa] = g.restriction(ca, i);
                        auto lhs = g.bracket_vec(cxa, xa, cb, {{j, K::one()}});
                        auto [cab, ab] = g.bracket(ca, i, cb, j);
                        auto rhs = g.bracket_vec(ca, {{i, K::one()}}, cab, ab);
                        vec_axpy<K>(lhs, K::one(), rhs);
                        if (!lhs.empty())
                            return "restriction bracket axiom fails at " +
                                   g.space.label(ca, i) + "," + g.space.label(cb, j);
                    }
            }
    }
    return std::nullopt;
}

/// Transport to a different shift: the underlying space is suspended by
/// (old - new) and all tables are re-keyed with unchanged coefficients.
/// Round trips are the identity.
template <class K>
LiePresentation<K> shift_lie(const LiePresentation<K>& g, int new_shift)
{
    int s = g.shift - new_shift;
    LiePresentation<K> out;
    out.shift = new_shift;
    out.restricted = g.restricted;
    out.space = g.space.suspended(s);
    out.support = g.support;
    out.support.deg_lo += s;
    out.support.deg_hi += s;
    for (auto& [key, block] : g.bracket_tab) {
        auto [ca, cb] = key;
        typename LiePresentation<K>::Block nb;
        nb.target = {block.target.deg + s, block.target.wt};
        nb.table = block.table;
        out.bracket_tab[{Cell{ca.deg + s, ca.wt}, Cell{cb.deg + s, cb.wt}}] = std::move(nb);
    }
    for (auto& [c, tab] : g.restr_tab)
        out.restr_tab[{c.deg + s, c.wt}] = tab;
    return out;
}

// ---------------------------------------------------------------------------
// Free (restricted) Lie algebras by commutator closure in the tensor algebra
// ---------------------------------------------------------------------------

namespace detail {

/// Words over an alphabet of graded letters, organized per cell.
template <class K>
struct WordSpace {
    std::vector<Generator> letters;
    std::map<Cell, std::vector<std::vector<int>>> words;
    std::map<Cell, std::map<std::vector<int>, int>> index;

    void build(int wt_max)
    {
        words[{0, 0}] = {{}};
        index[{0, 0}][{}] = 0;
        std::vector<std::pair<Cell, std::vector<int>>> level = {{{0, 0}, {}}};
        while (!level.empty()) {
            std::vector<std::pair<Cell, std::vector<int>>> next;
            for (auto& [c, w] : level)
                for (size_t g = 0; g < letters.size(); ++g) {
                    Cell nc{c.deg + letters[g].deg, c.wt + letters[g].wt};
                    if (nc.wt > wt_max)
                        continue;
                    auto nw = w;
                    nw.push_back((int)g);
                    auto& list = words[nc];
                    index[nc][nw] = (int)list.size();
                    list.push_back(nw);
                    next.emplace_back(nc, std::move(nw));
                }
            level = std::move(next);
        }
    }

    int dim(Cell c) const
    {
        auto it = words.find(c);
        return it == words.end() ? 0 : (int)it->second.size();
    }

    /// Concatenation product of word-space vectors.
    std::pair<Cell, SparseVec<K>> concat(Cell ca, const SparseVec<K>& a, Cell cb,
                                         const SparseVec<K>& b) const
    {
        Cell t = ca + cb;
        SparseVec<K> out;
        auto ita = words.find(ca);
        auto itb = words.find(cb);
        if (ita == words.end() || itb == words.end())
            return {t, out};
        auto itt = index.find(t);
        if (itt == index.end())
            return {t, out};
        for (auto& [i, x] : a)
            for (auto& [j, y] : b) {
                auto w = ita->second[i];
                auto& wb = itb->second[j];
                w.insert(w.end(), wb.begin(), wb.end());
                out.emplace_back(itt->second.at(w), K::mul(x, y));
            }
        vec_normalize<K>(out);
        return {t, out};
    }
};

}  // namespace detail

/// A free (restricted) Lie presentation together with the embedding into
/// the tensor algebra and the defining expression of each basis element,
/// which is what makes free functorial maps evaluable.
template <class K>
struct FreeLie {
    struct Expr {
        enum Kind { gen, bracket, xi } kind = gen;
        int a = -1, b = -1;           // operand positions in `elements`
        std::string name;             // generator name when kind == gen
    };
    struct Element {
        Cell cell;                    // cell in the Lie presentation
        int index = -1;               // index within that cell
        SparseVec<K> tensor_rep;      // vector in the tensor-word space
        Expr expr;
    };

    LiePresentation<K> lie;
    detail::WordSpace<K> tensor;
    std::vector<Element> elements;    // global list in construction order
    std::map<Cell, std::vector<int>> by_cell;  // cell -> element positions
};

template <class K>
std::string label_of(const FreeLie<K>& f, int pos)
{
    auto& el = f.elements[pos];
    return f.lie.space.label(el.cell, el.index);
}

/// Smallest sub-Lie-algebra (optionally closed under squaring over F2) of
/// the tensor algebra containing the generators; shift 0, Koszul-signed
/// commutator. Returns basis, bracket tables and the embedding.
template <class K>
FreeLie<K> free_lie(const std::vector<Generator>& gens, int wt_max, bool restricted = false)
{
    if (restricted && !K::is_f2)
        fail_invalid("restricted free Lie algebras live over F2");
    for (auto& g : gens)
        if (g.wt < 1)
            fail_invalid("free_lie: generator weight must be >= 1");

    FreeLie<K> out;
    out.tensor.letters = gens;
    out.tensor.build(wt_max);
    out.lie.shift = 0;
    out.lie.restricted = restricted;
    out.lie.support = Window::all_degrees(1, wt_max);

    std::map<Cell, SubspaceReducer<K>> span;
    auto reducer_for = [&](Cell c) -> SubspaceReducer<K>& {
        auto it = span.find(c);
        if (it == span.end())
            it = span.emplace(c, SubspaceReducer<K>(std::max(out.tensor.dim(c), 1))).first;
        return it->second;
    };

    auto add_element = [&](Cell c, SparseVec<K> rep, typename FreeLie<K>::Expr expr) -> bool {
        if (rep.empty())
            return false;
        auto& red = reducer_for(c);
        if (!red.insert(rep))
            return false;
        typename FreeLie<K>::Element el;
        el.cell = c;
        el.tensor_rep = std::move(rep);
        el.expr = expr;
        el.index = out.lie.dim(c);
        out.elements.push_back(std::move(el));
        int pos = (int)out.elements.size() - 1;
        out.by_cell[c].push_back(pos);
        // label resolved below once operands are known
        return true;
    };

    // generators, in the given order
    for (size_t g = 0; g < gens.size(); ++g) {
        Cell c{gens[g].deg, gens[g].wt};
        SparseVec<K> rep = {{out.tensor.index.at(c).at({(int)g}), K::one()}};
        typename FreeLie<K>::Expr e;
        e.kind = FreeLie<K>::Expr::gen;
        e.name = gens[g].name;
        add_element(c, std::move(rep), e);
        out.lie.space.add(c, gens[g].name);
    }

    auto commutator = [&](int pa, int pb) -> std::pair<Cell, SparseVec<K>> {
        auto& A = out.elements[pa];
        auto& B = out.elements[pb];
        auto [t, ab] = out.tensor.concat(A.cell, A.tensor_rep, B.cell, B.tensor_rep);
        auto [t2, ba] = out.tensor.concat(B.cell, B.tensor_rep, A.cell, A.tensor_rep);
        int sign = (A.cell.deg % 2 != 0 && B.cell.deg % 2 != 0) ? 1 : -1;
        vec_axpy<K>(ab, K::from_int(sign), ba);
        return {t, ab};
    };

    // closure by increasing weight
    for (int w = 2; w <= wt_max; ++w) {
        size_t count = out.elements.size();
        for (size_t pa = 0; pa < count; ++pa)
            for (size_t pb = pa; pb < count; ++pb) {
                if (out.elements[pa].cell.wt + out.elements[pb].cell.wt != w)
                    continue;
                auto [t, v] = commutator((int)pa, (int)pb);
                typename FreeLie<K>::Expr e;
                e.kind = FreeLie<K>::Expr::bracket;
                e.a = (int)pa;
                e.b = (int)pb;
                if (add_element(t, std::move(v), e)) {
                    auto& el = out.elements.back();
                    out.lie.space.add(el.cell, "[" + label_of(out, e.a) + "," +
                                                   label_of(out, e.b) + "]");
                }
            }
        if (restricted) {
            for (size_t pa = 0; pa < count; ++pa) {
                if (2 * out.elements[pa].cell.wt != w)
                    continue;
                auto& A = out.elements[pa];
                auto [t, sq] = out.tensor.concat(A.cell, A.tensor_rep, A.cell, A.tensor_rep);
                typename FreeLie<K>::Expr e;
                e.kind = FreeLie<K>::Expr::xi;
                e.a = (int)pa;
                if (add_element(t, std::move(sq), e)) {
                    auto& el = out.elements.back();
                    out.lie.space.add(el.cell, "xi(" + label_of(out, e.a) + ")");
                }
            }
        }
    }

    // bracket (and restriction) tables by solving in the tensor embedding
    std::map<Cell, SubspaceReducer<K>> solver;
    for (auto& [c, positions] : out.by_cell) {
        SubspaceReducer<K> s(std::max(out.tensor.dim(c), 1), true);
        for (int pos : positions)
            s.insert(out.elements[pos].tensor_rep);
        solver.emplace(c, std::move(s));
    }
    auto to_coords = [&](Cell c, const SparseVec<K>& v) -> SparseVec<K> {
        if (v.empty())
            return {};
        auto it = solver.find(c);
        if (it == solver.end())
            fail_internal("free_lie: bracket left the closure");
        auto sol = it->second.solve(v);
        if (!sol)
            fail_internal("free_lie: bracket not in the closure span");
        return *sol;
    };

    for (auto& [ca, pa_list] : out.by_cell)
        for (auto& [cb, pb_list] : out.by_cell) {
            if (ca.wt + cb.wt > wt_max)
                continue;
            typename LiePresentation<K>::Block block;
            block.target = {ca.deg + cb.deg, ca.wt + cb.wt};
            block.table.assign(pa_list.size(), std::vector<SparseVec<K>>(pb_list.size()));
            for (size_t i = 0; i < pa_list.size(); ++i)
                for (size_t j = 0; j < pb_list.size(); ++j) {
                    auto [t, v] = commutator(pa_list[i], pb_list[j]);
                    block.table[i][j] = to_coords(t, v);
                }
            out.lie.bracket_tab[{ca, cb}] = std::move(block);
        }
    if (restricted) {
        for (auto& [c, positions] : out.by_cell) {
            if (2 * c.wt > wt_max)
                continue;
            std::vector<SparseVec<K>> tab(positions.size());
            for (size_t i = 0; i < positions.size(); ++i) {
                auto& A = out.elements[positions[i]];
                auto [t, sq] = out.tensor.concat(c, A.tensor_rep, c, A.tensor_rep);
                tab[i] = to_coords(t, sq);
            }
            out.lie.restr_tab[c] = std::move(tab);
        }
    }
    return out;
}

template <class K>
FreeLie<K> free_restricted_lie(const std::vector<Generator>& gens, int wt_max)
{
    return free_lie<K>(gens, wt_max, true);
}

// ---------------------------------------------------------------------------
// Universal enveloping algebras with PBW monomial bases
// ---------------------------------------------------------------------------

/// PBW monomial: (letter, exponent) pairs over the global letter order.
using PbwMonomial = std::vector<std::pair<int, int>>;

template <class K>
struct Enveloping {
    Algebra<K> alg;
    // global letter order of the underlying Lie basis: (weight, degree, label)
    std::vector<std::pair<Cell, int>> letters;  // (cell, index) in g
    std::map<Cell, std::vector<PbwMonomial>> monomials;  // aligned with alg basis
};

/// Tensor algebra on g modulo xy - (-1)^{|x||y|} yx - [x,y] (and xx - xi(x)
/// in the restricted case), computed cellwise by linear algebra. The PBW
/// monomials are verified to be a complement of the relation span in every
/// cell; failure is reported as an internal error.
template <class K>
Enveloping<K> enveloping(const LiePresentation<K>& g, int wt_max)
{
    if (g.shift != 0)
        fail_invalid("enveloping: transport the presentation to shift 0 first");
    if (auto err = validate_lie(g, wt_max))
        fail_invalid("enveloping: invalid Lie presentation: " + *err);
    if (K::is_f2 && !g.restricted)
        fail_invalid("enveloping over F2 requires a restricted presentation");

    Enveloping<K> out;

    // global letter order: by (weight, degree, label)
    for (auto& [c, labels] : g.space.cells)
        for (int i = 0; i < (int)labels.size(); ++i)
            out.letters.emplace_back(c, i);
    std::sort(out.letters.begin(), out.letters.end(), [&](auto& a, auto& b) {
        auto ka = std::tuple(a.first.wt, a.first.deg, g.space.label(a.first, a.second));
        auto kb = std::tuple(b.first.wt, b.first.deg, g.space.label(b.first, b.second));
        return ka < kb;
    });

    detail::WordSpace<K> words;
    for (auto& [c, i] : out.letters)
        words.letters.push_back({g.space.label(c, i), c.deg, c.wt});
    words.build(wt_max);

    int L = (int)out.letters.size();
    auto letter_cell = [&](int l) { return out.letters[l].first; };

    // exponent cap 1 for odd-degree letters over Q and all letters in the
    // restricted case (squares rewrite via [x,x]/2 resp. xi)
    auto capped = [&](int l) {
        if (g.restricted)
            return true;
        return !K::is_f2 && letter_cell(l).deg % 2 != 0;
    };

    // enumerate PBW monomials per cell
    std::map<Cell, std::vector<PbwMonomial>>& monos = out.monomials;
    {
        PbwMonomial cur;
        std::function<void(int, Cell)> rec = [&](int l, Cell c) {
            if (l == L) {
                monos[c].push_back(cur);
                return;
            }
            rec(l + 1, c);
            int maxe = capped(l) ? 1 : wt_max;
            Cell cc = c;
            for (int e = 1; e <= maxe; ++e) {
                cc.deg += letter_cell(l).deg;
                cc.wt += letter_cell(l).wt;
                if (cc.wt > wt_max)
                    break;
                cur.emplace_back(l, e);
                rec(l + 1, cc);
                cur.pop_back();
            }
        };
        rec(0, {0, 0});
    }

    // relation span per cell: u * r * v for all basic relations r
    struct Relation {
        Cell cell;
        SparseVec<K> vec;  // in word space
    };
    std::vector<Relation> rels;
    auto word_vec = [&](Cell c, const std::vector<int>& w) -> SparseVec<K> {
        return {{words.index.at(c).at(w), K::one()}};
    };
    for (int a = 0; a < L; ++a)
        for (int b = 0; b < L; ++b) {
            Cell ca = letter_cell(a), cb = letter_cell(b);
            Cell t = ca + cb;
            if (t.wt > wt_max)
                continue;
            // ab - (-1)^{|a||b|} ba - [a,b]
            SparseVec<K> v = word_vec(t, {a, b});
            int sign = (ca.deg % 2 != 0 && cb.deg % 2 != 0) ? 1 : -1;
            vec_axpy<K>(v, K::from_int(sign), word_vec(t, {b, a}));
            auto [tc, br] = g.bracket(ca, out.letters[a].second, cb, out.letters[b].second);
            for (auto& [k, coeff] : br) {
                // bracket value is a Lie basis element = single letter word
                int l = -1;
                for (int cand = 0; cand < L; ++cand)
                    if (out.letters[cand] == std::make_pair(tc, k)) {
                        l = cand;
                        break;
                    }
                if (l < 0)
                    fail_internal("enveloping: bracket target letter missing");
                vec_axpy<K>(v, K::neg(coeff), word_vec(tc, {l}));
            }
            if (!v.empty())
                rels.push_back({t, std::move(v)});
        }
    if (g.restricted) {
        for (int a = 0; a < L; ++a) {
            Cell ca = letter_cell(a);
            Cell t{2 * ca.deg, 2 * ca.wt};
            if (t.wt > wt_max)
                continue;
            SparseVec<K> v = word_vec(t, {a, a});
            auto [tc, xi] = g.restriction(ca, out.letters[a].second);
            for (auto& [k, coeff] : xi) {
                int l = -1;
                for (int cand = 0; cand < L; ++cand)
                    if (out.letters[cand] == std::make_pair(tc, k)) {
                        l = cand;
                        break;
                    }
                if (l < 0)
                    fail_internal("enveloping: restriction target letter missing");
                vec_axpy<K>(v, K::neg(coeff), word_vec(tc, {l}));
            }
            if (!v.empty())
                rels.push_back({t, std::move(v)});
        }
    }

    // two-sided ideal span per cell, with PBW verification
    std::map<Cell, SubspaceReducer<K>> ideal;
    for (auto& [c, list] : words.words)
        ideal.emplace(c, SubspaceReducer<K>(std::max((int)list.size(), 1), true));
    for (auto& rel : rels)
        for (auto& [cu, us] : words.words)
            for (auto& [cv, vs] : words.words) {
                Cell t = cu + rel.cell + cv;
                if (t.wt > wt_max || words.index.find(t) == words.index.end())
                    continue;
                for (size_t iu = 0; iu < us.size(); ++iu)
                    for (size_t iv = 0; iv < vs.size(); ++iv) {
                        auto [t1, urv0] =
                            words.concat(cu, {{(int)iu, K::one()}}, rel.cell, rel.vec);
                        auto [t2, urv] = words.concat(t1, urv0, cv, {{(int)iv, K::one()}});
                        ideal.at(t2).insert(std::move(urv));
                    }
            }

    auto expand = [&](const PbwMonomial& m) -> std::pair<Cell, std::vector<int>> {
        std::vector<int> w;
        Cell c{0, 0};
        for (auto& [l, e] : m)
            for (int r = 0; r < e; ++r) {
                w.push_back(l);
                c.deg += letter_cell(l).deg;
                c.wt += letter_cell(l).wt;
            }
        return {c, w};
    };

    // PBW check and coordinate solvers: relations first, monomials after
    std::map<Cell, SubspaceReducer<K>> solver;
    std::map<Cell, int> rel_rank;
    for (auto& [c, wlist] : words.words) {
        int wdim = (int)wlist.size();
        auto& idl = ideal.at(c);
        int n_monos = monos.count(c) ? (int)monos.at(c).size() : 0;
        if (idl.dim() + n_monos != wdim)
            fail_internal("PBW dimension identity fails at " + to_string(c));
        SubspaceReducer<K> s(std::max(wdim, 1), true);
        for (auto& row : idl.rows())
            s.insert(row);
        rel_rank[c] = s.dim();
        if (n_monos)
            for (auto& m : monos.at(c)) {
                auto [mc, w] = expand(m);
                if (!s.insert(word_vec(c, w)))
                    fail_internal("PBW monomials dependent modulo relations at " + to_string(c));
            }
        solver.emplace(c, std::move(s));
    }

    // algebra basis + labels
    out.alg.commutative = false;
    out.alg.associative = true;
    out.alg.support = Window::all_degrees(0, wt_max);
    for (auto& [c, list] : monos)
        for (auto& m : list) {
            std::string label;
            for (auto& [l, e] : m) {
                if (!label.empty())
                    label += "*";
                label += words.letters[l].name;
                if (e > 1)
                    label += "^" + std::to_string(e);
            }
            out.alg.space.add(c, label.empty() ? "1" : label);
        }

    auto reduce_to_pbw = [&](Cell c, const SparseVec<K>& wvec) -> SparseVec<K> {
        if (wvec.empty())
            return {};
        auto& s = solver.at(c);
        auto sol = s.solve(wvec);
        if (!sol)
            fail_internal("enveloping: vector not reducible to PBW basis");
        SparseVec<K> outv;
        int base = rel_rank.at(c);
        for (auto& [gidx, coeff] : *sol)
            if (gidx >= base)
                outv.emplace_back(gidx - base, coeff);
        vec_normalize<K>(outv);
        return outv;
    };

    // product tables: concatenate words, reduce modulo the ideal
    for (auto& [ca, la] : monos)
        for (auto& [cb, lb] : monos) {
            Cell t = ca + cb;
            if (t.wt > wt_max)
                continue;
            typename Algebra<K>::ProdBlock block;
            block.target = t;
            block.table.assign(la.size(), std::vector<SparseVec<K>>(lb.size()));
            for (size_t i = 0; i < la.size(); ++i)
                for (size_t j = 0; j < lb.size(); ++j) {
                    auto [c1, w1] = expand(la[i]);
                    auto [c2, w2] = expand(lb[j]);
                    auto w = w1;
                    w.insert(w.end(), w2.begin(), w2.end());
                    block.table[i][j] = reduce_to_pbw(t, word_vec(t, w));
                }
            out.alg.prod[{ca, cb}] = std::move(block);
        }
    return out;
}

/// Hand-built Lie presentations for the paper's small fixed algebras.
template <class K>
LiePresentation<K> make_lie(const std::vector<Generator>& gens, int shift,
                            const std::function<SparseVec<K>(int, int)>& bracket_of,
                            int wt_max)
{
    LiePresentation<K> g;
    g.shift = shift;
    g.support = Window::all_degrees(0, wt_max);
    std::vector<Cell> cell_of;
    std::vector<int> idx_of;
    for (auto& gen : gens) {
        Cell c{gen.deg, gen.wt};
        idx_of.push_back(g.space.add(c, gen.name));
        cell_of.push_back(c);
    }
    for (size_t a = 0; a < gens.size(); ++a)
        for (size_t b = 0; b < gens.size(); ++b) {
            auto v = bracket_of((int)a, (int)b);
            Cell t = g.bracket_cell(cell_of[a], cell_of[b]);
            auto key = std::make_pair(cell_of[a], cell_of[b]);
            auto it = g.bracket_tab.find(key);
            if (it == g.bracket_tab.end()) {
                typename LiePresentation<K>::Block block;
                block.target = t;
                block.table.assign(g.dim(cell_of[a]), std::vector<SparseVec<K>>(g.dim(cell_of[b])));
                it = g.bracket_tab.emplace(key, std::move(block)).first;
            }
            it->second.table[idx_of[a]][idx_of[b]] = v;
        }
    return g;
}

}  // namespace enh
