#pragma once

#include <atomic>
#include <functional>
#include <optional>
#include <thread>

#include "enh/bigraded.hpp"
#include "enh/sparse.hpp"

namespace enh {

/// Weight-preserving chain complex with degree -1 differential. The
/// differential at cell (d,w) is a matrix into cell (d-1,w); absent
/// matrices are zero. `support` is the region where the basis is complete.
template <class K>
struct ChainComplex {
    using Field = K;

    BigradedSpace space;
    std::map<Cell, SparseMatrix<K>> diff;  // keyed by source cell
    Window support;

    int dim(Cell c) const { return space.dim(c); }

    const SparseMatrix<K>* differential(Cell c) const
    {
        auto it = diff.find(c);
        return it == diff.end() ? nullptr : &it->second;
    }

    void set_differential(Cell c, SparseMatrix<K> m)
    {
        if (m.cols() != dim(c) || m.rows() != dim({c.deg - 1, c.wt}))
            fail_internal("differential shape mismatch at " + to_string(c));
        if (!m.is_zero())
            diff[c] = std::move(m);
    }
};

struct Violation {
    Cell cell;
    std::string what;
};

/// Checks d*d = 0 on every populated cell (weight preservation holds by
/// construction of the keying). Returns the first offending cell.
template <class K>
std::optional<Violation> validate(const ChainComplex<K>& c)
{
    for (auto& [cell, d_in] : c.diff) {
        Cell target{cell.deg - 1, cell.wt};
        auto* d_out = c.differential(target);
        if (!d_out)
            continue;
        if (d_out->rows() != c.dim({cell.deg - 2, cell.wt}) || d_out->cols() != d_in.rows())
            return Violation{cell, "differential shape mismatch"};
        if (!((*d_out) * d_in).is_zero())
            return Violation{cell, "d*d != 0"};
    }
    return std::nullopt;
}

namespace detail {

template <class F>
void parallel_cells(size_t n, int threads, F&& fn)
{
    if (threads <= 1 || n <= 1) {
        for (size_t i = 0; i < n; ++i)
            fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    int t_count = std::min<size_t>(threads, n);
    for (int t = 0; t < t_count; ++t)
        pool.emplace_back([&] {
            for (size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1))
                fn(i);
        });
    for (auto& th : pool)
        th.join();
}

}  // namespace detail

template <class K>
std::string coeff_str(const typename K::Elem& e)
{
    return K::str(e);
}

/// Per-cell homology: dim = dim ker(d_out) - rank(d_in); representatives
/// are kernel vectors reduced modulo the image (still cycles). Requires one
/// cell of margin inside the support on each side in degree.
template <class K>
HomologyTable homology(const ChainComplex<K>& c, Window win, bool want_reps = false,
                       int threads = 1)
{
    std::vector<Cell> todo;
    for (int w = win.wt_lo; w <= win.wt_hi; ++w)
        for (int d = win.deg_lo; d <= win.deg_hi; ++d)
            todo.push_back({d, w});
    for (Cell cell : todo) {
        for (int dd : {-1, 0, 1}) {
            Cell m{cell.deg + dd, cell.wt};
            if (!c.support.contains(m))
                fail_window("homology window at " + to_string(cell) +
                            " touches cell outside complex support " + to_string(m));
        }
    }

    HomologyTable table;
    table.field = K::name();
    std::vector<HomologyCell> results(todo.size());

    detail::parallel_cells(todo.size(), threads, [&](size_t idx) {
        Cell cell = todo[idx];
        int n = c.dim(cell);
        if (n == 0)
            return;
        auto* d_out = c.differential(cell);
        auto* d_in = c.differential({cell.deg + 1, cell.wt});

        std::vector<SparseVec<K>> cycles;
        if (d_out) {
            cycles = kernel_basis(*d_out);
        } else {
            for (int i = 0; i < n; ++i)
                cycles.push_back({{i, K::one()}});
        }
        SubspaceReducer<K> boundaries(n);
        if (d_in)
            for (int j = 0; j < d_in->cols(); ++j)
                boundaries.insert(d_in->column(j));

        HomologyCell out;
        SubspaceReducer<K> chosen(n);
        for (auto& z : cycles) {
            auto res = boundaries.reduce(z);
            if (res.empty())
                continue;
            if (!chosen.insert(res))
                continue;
            ++out.dim;
            if (want_reps) {
                std::vector<std::pair<std::string, std::string>> rep;
                for (auto& [i, coeff] : res)
                    rep.emplace_back(c.space.label(cell, i), coeff_str<K>(coeff));
                out.reps.push_back(std::move(rep));
            }
        }
        results[idx] = std::move(out);
    });

    for (size_t i = 0; i < todo.size(); ++i)
        if (results[i].dim != 0)
            table.entries[todo[i]] = std::move(results[i]);
    return table;
}

/// Homology over all degrees of complete weight columns (bar-type
/// complexes are finite per weight, so no degree margin is needed).
template <class K>
HomologyTable homology_weight_columns(const ChainComplex<K>& c, int wt_lo, int wt_hi,
                                      bool want_reps = false, int threads = 1)
{
    int dlo = 0, dhi = 0;
    for (auto& [cell, labels] : c.space.cells) {
        dlo = std::min(dlo, cell.deg);
        dhi = std::max(dhi, cell.deg);
    }
    Window win{dlo, dhi, wt_lo, wt_hi};
    if (c.support.deg_lo > dlo - 1 || c.support.deg_hi < dhi + 1 ||
        c.support.wt_lo > wt_lo || c.support.wt_hi < wt_hi)
        fail_window("complex support does not cover requested weight columns");
    return homology(c, win, want_reps, threads);
}

/// Tensor product with Koszul signs: d(x (x) y) = dx (x) y + (-1)^{|x|} x (x) dy.
/// Basis labels are ordered pairs; degrees and weights add.
template <class K>
ChainComplex<K> tensor(const ChainComplex<K>& a, const ChainComplex<K>& b)
{
    ChainComplex<K> out;
    // index bookkeeping: per output cell, list of (cellA, iA, cellB, iB)
    std::map<Cell, std::vector<std::tuple<Cell, int, Cell, int>>> pieces;
    for (auto& [ca, la] : a.space.cells)
        for (auto& [cb, lb] : b.space.cells) {
            Cell cc = ca + cb;
            for (int i = 0; i < (int)la.size(); ++i)
                for (int j = 0; j < (int)lb.size(); ++j)
                    pieces[cc].emplace_back(ca, i, cb, j);
        }
    std::map<Cell, std::map<std::tuple<int, int, int, int, int, int>, int>> index;
    for (auto& [cc, list] : pieces) {
        for (auto& [ca, i, cb, j] : list) {
            int idx = out.space.add(cc, "(" + a.space.label(ca, i) + ")(x)(" +
                                            b.space.label(cb, j) + ")");
            index[cc][{ca.deg, ca.wt, i, cb.deg, cb.wt, j}] = idx;
        }
    }
    for (auto& [cc, list] : pieces) {
        Cell target{cc.deg - 1, cc.wt};
        if (!index.count(target) && out.space.dim(target) == 0) {
            bool any = false;
            for (auto& [ca, i, cb, j] : list)
                if (a.differential(ca) || b.differential(cb))
                    any = true;
            if (!any)
                continue;
        }
        SparseMatrix<K> d(out.space.dim(target), out.space.dim(cc));
        for (auto& [ca, i, cb, j] : list) {
            int col = index.at(cc).at({ca.deg, ca.wt, i, cb.deg, cb.wt, j});
            if (auto* da = a.differential(ca)) {
                Cell ta{ca.deg - 1, ca.wt};
                for (auto& [r, v] : da->column(i))
                    d.add_to(index.at(target).at({ta.deg, ta.wt, r, cb.deg, cb.wt, j}), col, v);
            }
            if (auto* db = b.differential(cb)) {
                Cell tb{cb.deg - 1, cb.wt};
                auto sign = K::from_int(ca.deg % 2 ? -1 : 1);
                for (auto& [r, v] : db->column(j))
                    d.add_to(index.at(target).at({ca.deg, ca.wt, i, tb.deg, tb.wt, r}), col,
                             K::mul(sign, v));
            }
        }
        if (!d.is_zero())
            out.diff[cc] = std::move(d);
    }
    out.support.deg_lo = a.support.deg_lo + b.support.deg_lo;
    out.support.deg_hi = a.support.deg_hi + b.support.deg_hi;
    out.support.wt_lo = a.support.wt_lo + b.support.wt_lo;
    out.support.wt_hi = std::min(a.support.wt_hi, b.support.wt_hi);
    return out;
}

/// Relocates cell (d,w) to (d+n,w); round trip with -n is the identity.
template <class K>
ChainComplex<K> suspend(const ChainComplex<K>& c, int n)
{
    ChainComplex<K> out;
    out.space = c.space.suspended(n);
    for (auto& [cell, m] : c.diff)
        out.diff[{cell.deg + n, cell.wt}] = m;
    out.support = c.support;
    out.support.deg_lo += n;
    out.support.deg_hi += n;
    return out;
}

}  // namespace enh
