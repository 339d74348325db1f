#pragma once

#include "enh/algebra.hpp"

namespace enh {

/// Reduced bar construction of an augmented dg algebra, per weight column.
/// Basis labels are tensor words [a_1|...|a_r] of suspended augmentation
/// ideal elements; the empty word is the unit of the shuffle algebra. Every
/// letter has weight >= 1, so all cells of weight <= wt_max are complete:
/// weight columns are exact, no degree truncation occurs.
template <class K>
struct BarComplex {
    struct Letter {
        Cell cell;    // cell in the base algebra
        int index;    // basis index there
        int sdeg;     // suspended degree: cell.deg + 1
        int wt;       // cell.wt
    };

    std::vector<Letter> letters;
    std::map<std::pair<Cell, int>, int> letter_id;
    ChainComplex<K> complex;
    std::map<Cell, std::vector<std::vector<int>>> words;  // aligned with complex basis
    std::map<Cell, std::map<std::vector<int>, int>> index;
    bool base_commutative = false;
    int wt_max = 0;

    int word_pos(Cell c, const std::vector<int>& w) const
    {
        auto it = index.find(c);
        if (it == index.end())
            return -1;
        auto jt = it->second.find(w);
        return jt == it->second.end() ? -1 : jt->second;
    }

    Cell word_cell(const std::vector<int>& w) const
    {
        Cell c{0, 0};
        for (int l : w) {
            c.deg += letters[l].sdeg;
            c.wt += letters[l].wt;
        }
        return c;
    }
};

namespace detail {

template <class K>
std::string word_label(const Algebra<K>& base, const std::vector<typename BarComplex<K>::Letter>& letters,
                       const std::vector<int>& w)
{
    if (w.empty())
        return "[]";
    std::string s = "[";
    for (size_t i = 0; i < w.size(); ++i) {
        if (i)
            s += "|";
        s += base.space.label(letters[w[i]].cell, letters[w[i]].index);
    }
    return s + "]";
}

}  // namespace detail

/// d = internal part + merge part with Koszul signs generated by the
/// suspended letter degrees; d^2 = 0 is enforced by the validator in tests.
template <class K>
BarComplex<K> bar(const Algebra<K>& base, int wt_max)
{
    if (!base.associative)
        fail_invalid("bar: input algebra must be associative");
    if (base.support.wt_hi < wt_max)
        fail_window("bar: base algebra support is smaller than the requested window");

    BarComplex<K> out;
    out.base_commutative = base.commutative;
    out.wt_max = wt_max;

    for (auto& [c, labels] : base.space.cells) {
        if (c.wt < 1 || c.wt > wt_max)
            continue;
        for (int i = 0; i < (int)labels.size(); ++i) {
            out.letter_id[{c, i}] = (int)out.letters.size();
            out.letters.push_back({c, i, c.deg + 1, c.wt});
        }
    }

    // enumerate words by total weight
    {
        std::vector<std::vector<int>> level = {{}};
        out.words[{0, 0}] = {{}};
        out.index[{0, 0}][{}] = 0;
        out.complex.space.add({0, 0}, "[]");
        while (!level.empty()) {
            std::vector<std::vector<int>> next;
            for (auto& w : level) {
                Cell c = out.word_cell(w);
                for (int l = 0; l < (int)out.letters.size(); ++l) {
                    if (c.wt + out.letters[l].wt > wt_max)
                        continue;
                    auto nw = w;
                    nw.push_back(l);
                    Cell nc{c.deg + out.letters[l].sdeg, c.wt + out.letters[l].wt};
                    auto& list = out.words[nc];
                    out.index[nc][nw] = (int)list.size();
                    out.complex.space.add(nc, detail::word_label<K>(base, out.letters, nw));
                    list.push_back(nw);
                    next.push_back(std::move(nw));
                }
            }
            level = std::move(next);
        }
    }
    out.complex.support = Window::all_degrees(0, wt_max);

    // differential
    for (auto& [c, list] : out.words) {
        Cell target{c.deg - 1, c.wt};
        int tdim = out.complex.space.dim(target);
        if (tdim == 0)
            continue;
        SparseMatrix<K> d(tdim, (int)list.size());
        for (size_t col = 0; col < list.size(); ++col) {
            auto& w = list[col];
            int prefix = 0;  // sum of suspended degrees before position i
            for (size_t i = 0; i < w.size(); ++i) {
                auto& li = out.letters[w[i]];
                // internal differential of letter i
                if (auto* db = base.differential(li.cell)) {
                    auto sign = K::from_int((prefix + 1) % 2 ? -1 : 1);
                    Cell tc{li.cell.deg - 1, li.cell.wt};
                    for (auto& [r, v] : db->column(li.index)) {
                        auto nw = w;
                        nw[i] = out.letter_id.at({tc, r});
                        int pos = out.word_pos(target, nw);
                        if (pos < 0)
                            fail_internal("bar: internal term fell outside the window");
                        d.add_to(pos, (int)col, K::mul(sign, v));
                    }
                }
                // merge letters i and i+1
                if (i + 1 < w.size()) {
                    auto& lj = out.letters[w[i + 1]];
                    auto sign = K::from_int((prefix + li.sdeg) % 2 ? -1 : 1);
                    auto [tc, prod] = base.mul_basis(li.cell, li.index, lj.cell, lj.index);
                    for (auto& [r, v] : prod) {
                        auto nw = w;
                        nw[i] = out.letter_id.at({tc, r});
                        nw.erase(nw.begin() + i + 1);
                        int pos = out.word_pos(target, nw);
                        if (pos < 0)
                            fail_internal("bar: merge term fell outside the window");
                        d.add_to(pos, (int)col, K::mul(sign, v));
                    }
                }
                prefix += li.sdeg;
            }
        }
        if (!d.is_zero())
            out.complex.diff[c] = std::move(d);
    }
    return out;
}

/// Signed sum over (p,q)-shuffles of two bar words; Koszul signs on the
/// suspended letter degrees (trivial over F2). Graded commutative and
/// associative; d is a derivation for it when the base is commutative.
template <class K>
std::pair<Cell, SparseVec<K>> shuffle_product(const BarComplex<K>& b, Cell ca,
                                              const std::vector<int>& u, Cell cb,
                                              const std::vector<int>& v)
{
    if (!b.base_commutative)
        fail_invalid("shuffle product requires a commutative base algebra");
    Cell target = ca + cb;
    SparseVec<K> out;
    if (target.wt > b.wt_max)
        return {target, out};

    std::vector<int> cur;
    cur.reserve(u.size() + v.size());
    // rem_u[i] = sum of suspended degrees of u[i..]
    std::vector<int> rem_u(u.size() + 1, 0);
    for (int i = (int)u.size() - 1; i >= 0; --i)
        rem_u[i] = rem_u[i + 1] + b.letters[u[i]].sdeg;

    std::function<void(size_t, size_t, int)> rec = [&](size_t i, size_t j, int sexp) {
        if (i == u.size() && j == v.size()) {
            int pos = b.word_pos(target, cur);
            if (pos < 0)
                fail_internal("shuffle: word outside window");
            out.emplace_back(pos, K::from_int(sexp % 2 ? -1 : 1));
            return;
        }
        if (i < u.size()) {
            cur.push_back(u[i]);
            rec(i + 1, j, sexp);
            cur.pop_back();
        }
        if (j < v.size()) {
            // v[j] moves past the remaining letters of u
            cur.push_back(v[j]);
            rec(i, j + 1, sexp + b.letters[v[j]].sdeg * rem_u[i]);
            cur.pop_back();
        }
    };
    rec(0, 0, 0);
    vec_normalize<K>(out);
    return {target, out};
}

/// Packages a bar complex as an augmented commutative dg algebra under the
/// shuffle product, ready to be fed to the next bar layer.
template <class K>
Algebra<K> bar_algebra(const BarComplex<K>& b)
{
    Algebra<K> alg;
    alg.commutative = true;
    alg.associative = true;
    alg.space = b.complex.space;
    alg.diff = b.complex.diff;
    alg.support = Window::all_degrees(0, b.wt_max);
    for (auto& [ca, la] : b.words)
        for (auto& [cb, lb] : b.words) {
            if (ca.wt + cb.wt > b.wt_max || ca.wt < 1 || cb.wt < 1)
                continue;
            typename Algebra<K>::ProdBlock block;
            block.target = ca + cb;
            block.table.assign(la.size(), std::vector<SparseVec<K>>(lb.size()));
            for (size_t i = 0; i < la.size(); ++i)
                for (size_t j = 0; j < lb.size(); ++j)
                    block.table[i][j] = shuffle_product(b, ca, la[i], cb, lb[j]).second;
            alg.prod[{ca, cb}] = std::move(block);
        }
    return alg;
}

/// Sigma^{-n} B^n(A-bar) as a chain complex, threading the shuffle product
/// through the iteration. Inputs must be commutative for n >= 2.
template <class K>
struct IteratedBar {
    BarComplex<K> top;           // the outermost bar complex (unsuspended)
    ChainComplex<K> desuspended;  // Sigma^{-n} of top.complex
    int n = 0;
};

template <class K>
IteratedBar<K> iterated_bar(const Algebra<K>& a, int n, int wt_max)
{
    if (n < 1)
        fail_invalid("iterated_bar: n must be >= 1");
    if (n >= 2 && !a.commutative)
        fail_invalid("iterated_bar: commutative input required for n >= 2");
    IteratedBar<K> out;
    out.n = n;
    out.top = bar(a, wt_max);
    for (int k = 2; k <= n; ++k) {
        auto alg = bar_algebra(out.top);
        out.top = bar(alg, wt_max);
    }
    out.desuspended = suspend(out.top.complex, -n);
    return out;
}

/// Numeric homology classes of a bar complex per cell, with the machinery
/// to express an arbitrary cycle in the chosen class basis (used for the
/// induced shuffle product on homology).
template <class K>
struct BarHomology {
    struct CellData {
        std::vector<SparseVec<K>> reps;      // class representatives
        SubspaceReducer<K> solver;           // boundaries first, then reps
        std::vector<int> rep_attempt;        // solver generator index per rep
        CellData(int ambient) : solver(ambient, true) {}
    };
    std::map<Cell, CellData> cells;

    int dim(Cell c) const
    {
        auto it = cells.find(c);
        return it == cells.end() ? 0 : (int)it->second.reps.size();
    }

    /// Coordinates of a cycle in the class basis (must be a cycle).
    SparseVec<K> express(Cell c, const SparseVec<K>& cycle) const
    {
        if (cycle.empty())
            return {};
        auto it = cells.find(c);
        if (it == cells.end())
            fail_internal("express: no homology data at " + to_string(c));
        auto sol = it->second.solver.solve(cycle);
        if (!sol)
            fail_internal("express: vector is not a cycle modulo boundaries");
        auto& acc = it->second.rep_attempt;
        SparseVec<K> out;
        for (auto& [i, coeff] : *sol) {
            auto jt = std::lower_bound(acc.begin(), acc.end(), i);
            if (jt != acc.end() && *jt == i)
                out.emplace_back((int)(jt - acc.begin()), coeff);
        }
        vec_normalize<K>(out);
        return out;
    }
};

template <class K>
BarHomology<K> bar_homology(const BarComplex<K>& b)
{
    BarHomology<K> out;
    for (auto& [c, list] : b.words) {
        int n = (int)list.size();
        auto* d_out = b.complex.differential(c);
        auto* d_in = b.complex.differential({c.deg + 1, c.wt});
        typename BarHomology<K>::CellData data(n);
        if (d_in)
            for (int j = 0; j < d_in->cols(); ++j)
                data.solver.insert(d_in->column(j));
        int n_boundary_attempts = data.solver.generators();

        std::vector<SparseVec<K>> cycles;
        if (d_out)
            cycles = kernel_basis(*d_out);
        else
            for (int i = 0; i < n; ++i)
                cycles.push_back({{i, K::one()}});
        for (auto& z : cycles)
            if (data.solver.insert(z)) {
                data.reps.push_back(z);
                data.rep_attempt.push_back(data.solver.generators() - 1);
            }
        if (!data.reps.empty() || n_boundary_attempts)
            out.cells.emplace(c, std::move(data));
    }
    return out;
}

/// E_n-homology of a commutative weight-graded algebra: homology of
/// Sigma^{-n} B^n(A-bar), reported on the reduced (weight >= 1) part.
template <class K>
HomologyTable en_homology_commutative(const Algebra<K>& a, int n, int wt_max,
                                      bool want_reps = false, int threads = 1)
{
    auto ib = iterated_bar(a, n, wt_max);
    auto table = homology_weight_columns(ib.desuspended, 1, wt_max, want_reps, threads);
    return table;
}

}  // namespace enh
