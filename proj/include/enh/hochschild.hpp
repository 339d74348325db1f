#pragma once

#include "enh/bar.hpp"

namespace enh {

// ---------------------------------------------------------------------------
// Weight-graded normalized Hochschild cochains
// ---------------------------------------------------------------------------

/// Source tuple of augmentation-ideal basis elements.
using SrcTuple = std::vector<std::pair<Cell, int>>;

inline int tuple_weight(const SrcTuple& t)
{
    int w = 0;
    for (auto& [c, i] : t)
        w += c.wt;
    return w;
}

/// Multilinear cochain of fixed arity and weight shift on an algebra
/// concentrated in degree zero; values lie in A (or its augmentation
/// ideal), normalized by construction since sources are ideal basis
/// elements. Stored on source tuples of total weight <= src_cap.
template <class K>
struct Cochain {
    int arity = 0;
    int shift = 0;
    std::map<SrcTuple, SparseVec<K>> values;  // value in cell (0, weight+shift)

    SparseVec<K> value(const SrcTuple& t) const
    {
        auto it = values.find(t);
        return it == values.end() ? SparseVec<K>{} : it->second;
    }
};

namespace detail {

template <class K>
void require_degree_zero(const Algebra<K>& a)
{
    for (auto& [c, l] : a.space.cells)
        if (c.deg != 0 && !l.empty())
            fail_invalid("Hochschild cochain operations require a degree-zero algebra");
}

template <class K>
std::vector<std::pair<Cell, int>> ideal_letters(const Algebra<K>& a, int wt_max)
{
    std::vector<std::pair<Cell, int>> out;
    for (auto& [c, labels] : a.space.cells) {
        if (c.wt < 1 || c.wt > wt_max)
            continue;
        for (int i = 0; i < (int)labels.size(); ++i)
            out.emplace_back(c, i);
    }
    return out;
}

template <class K>
void enumerate_tuples(const std::vector<std::pair<Cell, int>>& letters, int arity, int wt_cap,
                      std::vector<SrcTuple>& out)
{
    SrcTuple cur;
    std::function<void(int, int)> rec = [&](int pos, int wt_left) {
        if (pos == arity) {
            out.push_back(cur);
            return;
        }
        for (auto& l : letters) {
            if (l.first.wt > wt_left)
                continue;
            cur.push_back(l);
            rec(pos + 1, wt_left - l.first.wt);
            cur.pop_back();
        }
    };
    rec(0, wt_cap);
}

}  // namespace detail

/// Normalized Hochschild cochain complex of a degree-zero weight-graded
/// algebra with coefficients in A (with_unit = true) or its augmentation
/// ideal, stored as a chain complex in degrees -p, weight-graded by the
/// shift (target weight minus total source weight). Cochains are truncated
/// at source weight src_cap; the complex computed is the honest cochain
/// complex of the weight-src_cap quotient of A, so reported cells should be
/// checked for stability under src_cap.
template <class K>
struct CochainComplex {
    ChainComplex<K> complex;           // cell (-p, m)
    std::map<Cell, std::vector<std::pair<SrcTuple, int>>> basis;  // (tuple, target index)
    const Algebra<K>* algebra = nullptr;
    bool with_unit = false;
    int src_cap = 0;
    int arity_max = 0;

    int position(int p, int m, const SrcTuple& t, int target) const
    {
        Cell c{-p, m};
        auto it = basis.find(c);
        if (it == basis.end())
            return -1;
        for (size_t k = 0; k < it->second.size(); ++k)
            if (it->second[k].first == t && it->second[k].second == target)
                return (int)k;
        return -1;
    }

    /// Vector of a cochain in the cell basis at (-arity, shift).
    SparseVec<K> cochain_vector(const Cochain<K>& f) const
    {
        SparseVec<K> out;
        Cell c{-f.arity, f.shift};
        auto it = basis.find(c);
        if (it == basis.end())
            fail_invalid("cochain cell not materialized");
        for (size_t k = 0; k < it->second.size(); ++k) {
            auto& [t, target] = it->second[k];
            auto v = f.value(t);
            auto coeff = vec_at<K>(v, target);
            if (coeff)
                out.emplace_back((int)k, *coeff);
        }
        return out;
    }
};

template <class K>
CochainComplex<K> hochschild_cochains(const Algebra<K>& a, bool with_unit, int arity_max,
                                      int shift_lo, int shift_hi, int src_cap)
{
    if (!a.associative)
        fail_invalid("hochschild_cochains: algebra must be associative");
    detail::require_degree_zero(a);
    if (a.support.wt_hi < src_cap + std::max(shift_hi, 0))
        fail_window("hochschild_cochains: algebra support too small for the source cap");

    CochainComplex<K> out;
    out.algebra = &a;
    out.with_unit = with_unit;
    out.src_cap = src_cap;
    out.arity_max = arity_max;

    auto letters = detail::ideal_letters(a, src_cap);
    auto target_dim = [&](int wt) {
        if (wt < 0)
            return 0;
        if (wt == 0)
            return with_unit ? a.dim({0, 0}) : 0;
        return a.dim({0, wt});
    };

    for (int p = 0; p <= arity_max + 1; ++p) {
        std::vector<SrcTuple> tuples;
        detail::enumerate_tuples<K>(letters, p, src_cap, tuples);
        for (int m = shift_lo; m <= shift_hi; ++m) {
            Cell c{-p, m};
            auto& cell_basis = out.basis[c];
            for (auto& t : tuples) {
                int tw = tuple_weight(t) + m;
                for (int target = 0; target < target_dim(tw); ++target) {
                    cell_basis.emplace_back(t, target);
                    out.complex.space.add(
                        c, "f" + std::to_string(cell_basis.size()) + "@" + to_string(c));
                }
            }
        }
    }
    // degree +1 (arity -1) is genuinely empty, so support may include it
    out.complex.support = Window{-(arity_max + 1), 1, shift_lo, shift_hi};

    // differential: from arity p (cell (-p, m)) to arity p+1 (cell (-p-1, m))
    for (int p = 0; p <= arity_max; ++p)
        for (int m = shift_lo; m <= shift_hi; ++m) {
            Cell src{-p, m}, dst{-p - 1, m};
            auto& sb = out.basis[src];
            auto& db = out.basis[dst];
            if (sb.empty() || db.empty())
                continue;
            SparseMatrix<K> d((int)db.size(), (int)sb.size());
            auto add_row = [&](const SrcTuple& t, int target, int col,
                               const typename K::Elem& coeff) {
                int row = out.position(p + 1, m, t, target);
                if (row >= 0)
                    d.add_to(row, col, coeff);
            };
            for (size_t col = 0; col < sb.size(); ++col) {
                auto& [S, tgt] = sb[col];
                int tw = tuple_weight(S) + m;
                Cell tgt_cell{0, tw};
                // (df)(a_0,...,a_p) = a_0 f(...) + sum (-1)^i f(..a_{i-1}a_i..)
                //                    + (-1)^{p+1} f(...) a_p
                for (auto& b : letters) {
                    if (b.first.wt + tuple_weight(S) > src_cap)
                        continue;
                    // leading term
                    auto prod = a.mul_into(b.first, b.second, tgt_cell, tgt,
                                           Cell{0, b.first.wt + tw});
                    SrcTuple T = S;
                    T.insert(T.begin(), b);
                    for (auto& [r, v] : prod)
                        add_row(T, r, (int)col, v);
                    // trailing term
                    auto prod2 = a.mul_into(tgt_cell, tgt, b.first, b.second,
                                            Cell{0, b.first.wt + tw});
                    SrcTuple T2 = S;
                    T2.push_back(b);
                    auto sign = K::from_int((p + 1) % 2 ? -1 : 1);
                    for (auto& [r, v] : prod2)
                        add_row(T2, r, (int)col, K::mul(sign, v));
                }
                // merge terms: the i-th argument of f receives a product
                for (int i = 1; i <= p; ++i) {
                    auto target_letter = S[i - 1];
                    auto sign = K::from_int(i % 2 ? -1 : 1);
                    for (auto& bc : a.prod) {
                        auto& [cells, block] = bc;
                        if (block.target != target_letter.first)
                            continue;
                        auto& [cb, cc] = cells;
                        if (cb.wt < 1 || cc.wt < 1)
                            continue;
                        for (int ib = 0; ib < a.dim(cb); ++ib)
                            for (int ic = 0; ic < a.dim(cc); ++ic) {
                                auto coeff = vec_at<K>(block.table[ib][ic], target_letter.second);
                                if (!coeff)
                                    continue;
                                SrcTuple T = S;
                                T[i - 1] = {cb, ib};
                                T.insert(T.begin() + i, {cc, ic});
                                if (tuple_weight(T) > src_cap)
                                    continue;
                                add_row(T, tgt, (int)col, K::mul(sign, *coeff));
                            }
                    }
                }
            }
            if (!d.is_zero())
                out.complex.diff[src] = std::move(d);
        }
    return out;
}

/// Cohomology table of the cochain complex: dim of HH^p reported at cell
/// (-p, shift) for p <= arity_max.
template <class K>
HomologyTable hochschild_cohomology(const CochainComplex<K>& cc)
{
    Window win{-(cc.arity_max), 0, cc.complex.support.wt_lo, cc.complex.support.wt_hi};
    return homology(cc.complex, win);
}

// ---------------------------------------------------------------------------
// Gerstenhaber operations on cochains (degree-zero algebras)
// ---------------------------------------------------------------------------

/// Evaluate a cochain on a tuple whose entries are ideal vectors.
template <class K>
SparseVec<K> evaluate(const Cochain<K>& f, const std::vector<std::pair<Cell, SparseVec<K>>>& args)
{
    if ((int)args.size() != f.arity)
        fail_invalid("evaluate: arity mismatch");
    SparseVec<K> out;
    SrcTuple t(f.arity, {Cell{0, 0}, 0});
    std::function<void(size_t, typename K::Elem)> rec = [&](size_t pos, typename K::Elem coeff) {
        if (pos == args.size()) {
            auto v = f.value(t);
            vec_scale<K>(v, coeff);
            vec_axpy<K>(out, K::one(), v);
            return;
        }
        for (auto& [i, c] : args[pos].second) {
            t[pos] = {args[pos].first, i};
            rec(pos + 1, K::mul(coeff, c));
        }
    };
    rec(0, K::one());
    return out;
}

/// Gerstenhaber circle product f o g = sum of signed insertions of g into
/// f. Sources are truncated at the smaller of the two caps.
template <class K>
Cochain<K> circle_product(const Algebra<K>& a, const Cochain<K>& f, const Cochain<K>& g,
                          int src_cap)
{
    detail::require_degree_zero(a);
    Cochain<K> out;
    out.arity = f.arity + g.arity - 1;
    if (out.arity < 0)
        fail_invalid("circle_product: arity underflow");
    out.shift = f.shift + g.shift;
    auto letters = detail::ideal_letters(a, src_cap);
    std::vector<SrcTuple> tuples;
    detail::enumerate_tuples<K>(letters, out.arity, src_cap, tuples);
    for (auto& T : tuples) {
        SparseVec<K> acc;
        for (int i = 0; i + g.arity <= (int)T.size() || (f.arity > 0 && i < f.arity); ++i) {
            if (i + g.arity > (int)T.size() || i >= f.arity)
                break;
            // g eats slots [i, i+q); sign (-1)^{(i)(q-1)} with i counting from 0
            SrcTuple gslots(T.begin() + i, T.begin() + i + g.arity);
            auto gv = g.value(gslots);
            if (gv.empty())
                continue;
            int gw = tuple_weight(gslots) + g.shift;
            if (gw < 1)
                continue;  // normalized: insertions in k are dropped
            std::vector<std::pair<Cell, SparseVec<K>>> fargs;
            for (int k = 0; k < i; ++k)
                fargs.push_back({T[k].first, {{T[k].second, K::one()}}});
            fargs.push_back({Cell{0, gw}, gv});
            for (int k = i + g.arity; k < (int)T.size(); ++k)
                fargs.push_back({T[k].first, {{T[k].second, K::one()}}});
            auto fv = evaluate(f, fargs);
            auto sign = K::from_int((i * (g.arity - 1)) % 2 ? -1 : 1);
            vec_scale<K>(fv, sign);
            vec_axpy<K>(acc, K::one(), fv);
        }
        if (!acc.empty())
            out.values[T] = std::move(acc);
    }
    return out;
}

template <class K>
Cochain<K> gerstenhaber_bracket(const Algebra<K>& a, const Cochain<K>& f, const Cochain<K>& g,
                                int src_cap)
{
    auto fg = circle_product(a, f, g, src_cap);
    auto gf = circle_product(a, g, f, src_cap);
    int sexp = (f.arity - 1) * (g.arity - 1);
    Cochain<K> out;
    out.arity = fg.arity;
    out.shift = fg.shift;
    for (auto& [t, v] : fg.values)
        out.values[t] = v;
    for (auto& [t, v] : gf.values) {
        auto& slot = out.values[t];
        vec_axpy<K>(slot, K::from_int(sexp % 2 ? 1 : -1), v);
        if (slot.empty())
            out.values.erase(t);
    }
    return out;
}

template <class K>
Cochain<K> cup_product(const Algebra<K>& a, const Cochain<K>& f, const Cochain<K>& g, int src_cap)
{
    detail::require_degree_zero(a);
    Cochain<K> out;
    out.arity = f.arity + g.arity;
    out.shift = f.shift + g.shift;
    auto letters = detail::ideal_letters(a, src_cap);
    std::vector<SrcTuple> tuples;
    detail::enumerate_tuples<K>(letters, out.arity, src_cap, tuples);
    for (auto& T : tuples) {
        SrcTuple tf(T.begin(), T.begin() + f.arity);
        SrcTuple tg(T.begin() + f.arity, T.end());
        auto fv = f.value(tf);
        auto gv = g.value(tg);
        if (fv.empty() || gv.empty())
            continue;
        Cell cf{0, tuple_weight(tf) + f.shift};
        Cell cg{0, tuple_weight(tg) + g.shift};
        SparseVec<K> acc;
        for (auto& [i, x] : fv)
            for (auto& [j, y] : gv) {
                auto [tc, prod] = a.mul_basis(cf, i, cg, j);
                SparseVec<K> term = prod;
                vec_scale<K>(term, K::mul(x, y));
                vec_axpy<K>(acc, K::one(), term);
            }
        if (!acc.empty())
            out.values[T] = std::move(acc);
    }
    return out;
}

/// Char-2 restriction on arity-one cochains: chain level f o f.
template <class K>
Cochain<K> restriction_char2(const Algebra<K>& a, const Cochain<K>& f, int src_cap)
{
    if (!K::is_f2)
        fail_invalid("restriction_char2: field must be F2");
    if (f.arity != 1)
        fail_invalid("restriction_char2: arity-one cochains only");
    return circle_product(a, f, f, src_cap);
}

// ---------------------------------------------------------------------------
// Hochschild chains with trivial coefficients
// ---------------------------------------------------------------------------

/// Normalized complex k (x) Abar^{(x)n} with the simplicial boundary; on
/// the augmentation ideal only the merge terms survive. Cells are keyed
/// (tensor length, weight); complete per weight column.
template <class K>
struct HochschildChains {
    ChainComplex<K> complex;
    std::map<Cell, std::vector<SrcTuple>> tuples;
    int wt_max = 0;
};

template <class K>
HochschildChains<K> hochschild_chains_trivial(const Algebra<K>& a, int wt_max)
{
    if (!a.associative)
        fail_invalid("hochschild_chains: algebra must be associative");
    if (a.support.wt_hi < wt_max)
        fail_window("hochschild_chains: algebra support too small");
    HochschildChains<K> out;
    out.wt_max = wt_max;
    auto letters = detail::ideal_letters(a, wt_max);

    out.tuples[{0, 0}] = {SrcTuple{}};
    out.complex.space.add({0, 0}, "()");
    for (int n = 1; n <= wt_max; ++n) {
        std::vector<SrcTuple> tuples;
        detail::enumerate_tuples<K>(letters, n, wt_max, tuples);
        for (auto& t : tuples) {
            Cell c{n, tuple_weight(t)};
            std::string label = "(";
            for (size_t i = 0; i < t.size(); ++i) {
                if (i)
                    label += "|";
                label += a.space.label(t[i].first, t[i].second);
            }
            out.tuples[c].push_back(t);
            out.complex.space.add(c, label + ")");
        }
    }
    out.complex.support = Window::all_degrees(0, wt_max);

    for (auto& [c, list] : out.tuples) {
        if (c.deg < 2)
            continue;
        Cell target{c.deg - 1, c.wt};
        SparseMatrix<K> d(out.complex.space.dim(target), (int)list.size());
        for (size_t col = 0; col < list.size(); ++col) {
            auto& t = list[col];
            for (int i = 1; i < c.deg; ++i) {
                auto sign = K::from_int(i % 2 ? -1 : 1);
                auto [tc, prod] =
                    a.mul_basis(t[i - 1].first, t[i - 1].second, t[i].first, t[i].second);
                for (auto& [r, v] : prod) {
                    SrcTuple nt = t;
                    nt[i - 1] = {tc, r};
                    nt.erase(nt.begin() + i);
                    auto& tl = out.tuples.at(target);
                    int pos = -1;
                    for (size_t k = 0; k < tl.size(); ++k)
                        if (tl[k] == nt) {
                            pos = (int)k;
                            break;
                        }
                    if (pos < 0)
                        fail_internal("hochschild_chains: merge fell outside");
                    d.add_to(pos, (int)col, K::mul(sign, v));
                }
            }
        }
        if (!d.is_zero())
            out.complex.diff[c] = std::move(d);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Finite pointed simplicial sets and the Loday functor
// ---------------------------------------------------------------------------

/// Simplices per dimension with face/degeneracy index tables; index 0 of
/// every level is the basepoint.
struct SimplicialSetFinite {
    // faces[q][i][s] = d_i(s) for s in level q (q >= 1, 0 <= i <= q)
    std::vector<std::vector<std::vector<int>>> faces;
    // degens[q][j][s] = s_j(s) for s in level q (0 <= j <= q)
    std::vector<std::vector<std::vector<int>>> degens;
    std::vector<int> level_size;

    int dims() const { return (int)level_size.size() - 1; }

    /// Verifies the simplicial identities on all stored levels.
    std::optional<std::string> validate() const;
};

inline std::optional<std::string> SimplicialSetFinite::validate() const
{
    int top = dims();
    // d_i d_j = d_{j-1} d_i for i < j
    for (int q = 2; q <= top; ++q)
        for (int j = 1; j <= q; ++j)
            for (int i = 0; i < j; ++i)
                for (int s = 0; s < level_size[q]; ++s)
                    if (faces[q - 1][i][faces[q][j][s]] != faces[q - 1][j - 1][faces[q][i][s]])
                        return "d_i d_j identity fails at level " + std::to_string(q);
    // d_i s_j identities
    for (int q = 1; q <= top - 1; ++q)
        for (int j = 0; j <= q; ++j)
            for (int i = 0; i <= q + 1; ++i)
                for (int s = 0; s < level_size[q]; ++s) {
                    int lhs = faces[q + 1][i][degens[q][j][s]];
                    int rhs;
                    if (i == j || i == j + 1)
                        rhs = s;
                    else if (i < j)
                        rhs = degens[q - 1][j - 1][faces[q][i][s]];
                    else
                        rhs = degens[q - 1][j][faces[q][i - 1][s]];
                    if (lhs != rhs)
                        return "d_i s_j identity fails at level " + std::to_string(q);
                }
    // s_i s_j = s_{j+1} s_i for i <= j
    for (int q = 0; q <= top - 2; ++q)
        for (int j = 0; j <= q; ++j)
            for (int i = 0; i <= j; ++i)
                for (int s = 0; s < level_size[q]; ++s)
                    if (degens[q + 1][i][degens[q][j][s]] != degens[q + 1][j + 1][degens[q][i][s]])
                        return "s_i s_j identity fails at level " + std::to_string(q);
    return std::nullopt;
}

/// Loads a finite pointed simplicial set from a JSON description:
/// { "levels": [n_0, n_1, ...],
///   "faces":  [ [ [d_0 of each simplex], [d_1 ...], ... ] per level >= 1 ],
///   "degens": [ [ [s_0 ...], ... ] per level ] }
/// Index 0 of every level is the basepoint.
SimplicialSetFinite simplicial_from_json(const std::string& text);

/// Minimal simplicial n-sphere Delta^n/boundary: the basepoint plus the
/// degeneracies of one nondegenerate n-simplex, i.e. the monotone
/// surjections [q] -> [n], built up to dimension q_max.
SimplicialSetFinite sphere_model(int n, int q_max);

inline SimplicialSetFinite sphere_model(int n, int q_max)
{
    if (n < 1)
        fail_invalid("sphere_model: n >= 1");
    SimplicialSetFinite X;
    // simplices per level: surjections [q] ->> [n] as value sequences
    std::vector<std::vector<std::vector<int>>> surj(q_max + 1);
    std::map<std::pair<int, std::vector<int>>, int> id;
    for (int q = 0; q <= q_max; ++q) {
        std::vector<int> cur(q + 1);
        // monotone surjections onto [n]: start at 0, step 0 or +1, end at n
        std::function<void(int, int)> rec = [&](int pos, int val) {
            if (pos == q + 1) {
                if (val == n) {
                    id[{q, cur}] = (int)surj[q].size() + 1;  // 0 is basepoint
                    surj[q].push_back(cur);
                }
                return;
            }
            cur[pos] = val;
            rec(pos + 1, val);
            if (val + 1 <= n) {
                cur[pos] = val + 1;
                rec(pos + 1, val + 1);
            }
        };
        cur[0] = 0;
        rec(1, 0);
        X.level_size.push_back(1 + (int)surj[q].size());
    }
    X.faces.resize(q_max + 1);
    X.degens.resize(q_max + 1);
    for (int q = 1; q <= q_max; ++q) {
        X.faces[q].assign(q + 1, std::vector<int>(X.level_size[q], 0));
        for (int i = 0; i <= q; ++i)
            for (size_t s = 0; s < surj[q].size(); ++s) {
                auto v = surj[q][s];
                v.erase(v.begin() + i);
                bool is_surj = v[0] == 0 && v.back() == n;
                for (size_t k = 0; k + 1 < v.size() && is_surj; ++k)
                    if (v[k + 1] - v[k] > 1)
                        is_surj = false;
                X.faces[q][i][s + 1] = is_surj ? id.at({q - 1, v}) : 0;
            }
    }
    for (int q = 0; q < q_max; ++q) {
        X.degens[q].assign(q + 1, std::vector<int>(X.level_size[q], 0));
        for (int j = 0; j <= q; ++j)
            for (size_t s = 0; s < surj[q].size(); ++s) {
                auto v = surj[q][s];
                v.insert(v.begin() + j, v[j]);
                X.degens[q][j][s + 1] = id.at({q + 1, v});
            }
    }
    return X;
}

/// Loday functor L(A;k)(X): level q is A tensored over the non-basepoint
/// q-simplices, normalized by degeneracies. Basis: assignments of ideal
/// letters to a slot subset that is not contained in any degeneracy image.
/// Face maps multiply letters along fibers and augment at the basepoint.
/// Requires a commutative degree-zero algebra.
template <class K>
struct LodayComplex {
    ChainComplex<K> complex;
    // per cell: list of assignments (slot -> letter), slots strictly increasing
    std::map<Cell, std::vector<std::vector<std::pair<int, std::pair<Cell, int>>>>> assignments;
};

template <class K>
LodayComplex<K> loday_complex(const Algebra<K>& a, const SimplicialSetFinite& X, int wt_max)
{
    if (!a.commutative)
        fail_invalid("loday_complex: algebra must be commutative");
    // sign-free fiber multiplication needs degree zero, unless all ideal
    // products vanish (square-zero extensions), where reordering is vacuous
    bool degree_zero = true;
    for (auto& [c, l] : a.space.cells)
        if (c.deg != 0 && !l.empty())
            degree_zero = false;
    if (!degree_zero) {
        for (Cell c1 : a.ideal_cells())
            for (Cell c2 : a.ideal_cells())
                for (int i = 0; i < a.dim(c1); ++i)
                    for (int j = 0; j < a.dim(c2); ++j)
                        if (!a.mul_basis(c1, i, c2, j).second.empty())
                            fail_invalid(
                                "loday_complex: graded algebras need vanishing ideal products");
    }
    if (auto err = X.validate())
        fail_invalid("loday_complex: " + *err);

    LodayComplex<K> out;
    auto letters = detail::ideal_letters(a, wt_max);
    int top = X.dims();

    using Assignment = std::vector<std::pair<int, std::pair<Cell, int>>>;

    for (int q = 0; q <= top; ++q) {
        int slots = X.level_size[q] - 1;  // non-basepoint simplices
        // degeneracy images at level q: an assignment supported inside one
        // image is degenerate
        std::vector<std::vector<char>> deg_image;
        if (q >= 1)
            for (int j = 0; j <= q - 1; ++j) {
                std::vector<char> in_img(slots + 1, 0);
                for (int s = 0; s < X.level_size[q - 1]; ++s)
                    in_img[X.degens[q - 1][j][s]] = 1;
                deg_image.push_back(std::move(in_img));
            }
        // a slot can only break degeneracy directions it lies outside of;
        // levels where wt_max letters cannot cover all q directions are empty
        if (q >= 1) {
            int maxcover = 0;
            for (int s = 1; s <= slots; ++s) {
                int cov = 0;
                for (auto& img : deg_image)
                    if (!img[s])
                        ++cov;
                maxcover = std::max(maxcover, cov);
            }
            if ((long)maxcover * wt_max < q)
                continue;
        }
        auto degenerate = [&](const Assignment& as) {
            if (q == 0)
                return false;
            for (auto& img : deg_image) {
                bool inside = true;
                for (auto& [slot, letter] : as)
                    if (!img[slot + 1]) {
                        inside = false;
                        break;
                    }
                if (inside)
                    return true;
            }
            return false;
        };

        Assignment cur;
        std::function<void(int, int)> rec = [&](int slot, int wt_left) {
            if (slot == slots) {
                if (!degenerate(cur)) {
                    Cell cc{q, wt_max - wt_left};
                    std::string label = "L" + std::to_string(q) + ":";
                    for (auto& [sl, letter] : cur)
                        label += "s" + std::to_string(sl) + "=" +
                                 a.space.label(letter.first, letter.second) + ";";
                    out.assignments[cc].push_back(cur);
                    out.complex.space.add(cc, label);
                }
                return;
            }
            rec(slot + 1, wt_left);  // leave the slot at the unit
            for (auto& l : letters) {
                if (l.first.wt > wt_left)
                    continue;
                cur.emplace_back(slot, l);
                rec(slot + 1, wt_left - l.first.wt);
                cur.pop_back();
            }
        };
        rec(0, wt_max);
    }
    out.complex.support = Window{0, top, 0, wt_max};

    // boundary: alternating sum of face maps, projected to the
    // nondegenerate basis
    for (auto& [c, list] : out.assignments) {
        int q = c.deg;
        if (q < 1)
            continue;
        Cell target{q - 1, c.wt};
        int tdim = out.complex.space.dim(target);
        if (tdim == 0)
            continue;
        // index of target assignments for lookup
        std::map<Assignment, int> tindex;
        if (out.assignments.count(target)) {
            auto& tl = out.assignments.at(target);
            for (size_t k = 0; k < tl.size(); ++k)
                tindex[tl[k]] = (int)k;
        }
        SparseMatrix<K> d(tdim, (int)list.size());
        for (size_t col = 0; col < list.size(); ++col) {
            auto& as = list[col];
            for (int i = 0; i <= q; ++i) {
                // group letters by their image slot under d_i
                std::map<int, std::vector<std::pair<Cell, int>>> fiber;
                bool killed = false;
                for (auto& [slot, letter] : as) {
                    int img = X.faces[q][i][slot + 1];
                    if (img == 0) {  // basepoint: augmentation kills the letter
                        killed = true;
                        break;
                    }
                    fiber[img - 1].push_back(letter);
                }
                if (killed)
                    continue;
                // multiply within each fiber (commutative, degree zero)
                struct SlotValue {
                    int slot;
                    Cell cell;
                    SparseVec<K> value;
                };
                std::vector<SlotValue> result;
                bool zero = false;
                for (auto& [slot, ls] : fiber) {
                    Cell pc = ls[0].first;
                    SparseVec<K> pv = {{ls[0].second, K::one()}};
                    for (size_t k = 1; k < ls.size() && !pv.empty(); ++k) {
                        SparseVec<K> next;
                        Cell nc{0, pc.wt + ls[k].first.wt};
                        for (auto& [idx, coeff] : pv) {
                            auto prod = a.mul_into(pc, idx, ls[k].first, ls[k].second, nc);
                            SparseVec<K> term = prod;
                            vec_scale<K>(term, coeff);
                            vec_axpy<K>(next, K::one(), term);
                        }
                        pc = nc;
                        pv = std::move(next);
                    }
                    if (pv.empty()) {
                        zero = true;
                        break;
                    }
                    result.push_back({slot, pc, std::move(pv)});
                }
                if (zero)
                    continue;
                auto sign = K::from_int(i % 2 ? -1 : 1);
                Assignment built;
                std::function<void(size_t, typename K::Elem)> expand =
                    [&](size_t pos, typename K::Elem coeff) {
                        if (pos == result.size()) {
                            auto it = tindex.find(built);
                            if (it != tindex.end())  // degenerate targets projected away
                                d.add_to(it->second, (int)col, coeff);
                            return;
                        }
                        auto& rv = result[pos];
                        for (auto& [idx, cf] : rv.value) {
                            built.emplace_back(rv.slot, std::make_pair(rv.cell, idx));
                            expand(pos + 1, K::mul(coeff, cf));
                            built.pop_back();
                        }
                    };
                expand(0, sign);
            }
        }
        if (!d.is_zero())
            out.complex.diff[c] = std::move(d);
    }
    return out;
}

/// Higher-order Hochschild homology HH^{[n]} as the homology of the Loday
/// complex on the minimal n-sphere; reported at (degree, weight).
template <class K>
HomologyTable hh_order_n(const Algebra<K>& a, int n, int wt_max, int threads = 1)
{
    int q_max = n * wt_max + 1;
    auto X = sphere_model(n, q_max);
    auto L = loday_complex(a, X, wt_max);
    Window win{1, q_max - 1, 0, wt_max};
    auto h = homology(L.complex, win, false, threads);
    // degree 0: the complex starts at level 0 (just k), H_0 of the reduced
    // part: compute directly on the short end
    {
        auto* d1 = L.complex.differential({1, 0});
        (void)d1;
        for (int w = 0; w <= wt_max; ++w) {
            int n0 = L.complex.space.dim({0, w});
            if (n0 == 0)
                continue;
            auto* din = L.complex.differential({1, w});
            int r = din ? rank(*din) : 0;
            if (n0 - r > 0 && w >= 1)
                h.entries[{0, w}].dim = n0 - r;
        }
    }
    return h;
}

}  // namespace enh
