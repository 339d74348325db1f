#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "enh/complex.hpp"

namespace enh {

struct Generator {
    std::string name;
    int deg = 0;
    int wt = 1;  // generators live in the augmentation ideal
};

/// Augmented algebra with explicit finite cells and bilinear product
/// tables. Products of cells absent from the table default to the graded
/// rule (degrees and weights add) and are zero outside the support window,
/// so a weight-window presentation of Q[x] is the honest algebra
/// Q[x]/x^(W+1). Group algebras use explicit blocks that fold products
/// back into weight one (I-adic presentation).
template <class K>
struct Algebra {
    using Field = K;

    struct ProdBlock {
        Cell target;
        // table[i][j] = i*j as a sparse vector in the target cell
        std::vector<std::vector<SparseVec<K>>> table;
    };

    BigradedSpace space;
    std::map<std::pair<Cell, Cell>, ProdBlock> prod;
    std::map<Cell, SparseMatrix<K>> diff;  // optional internal differential
    Window support;
    bool commutative = false;
    bool associative = true;
    bool unital = true;  // unit is the unique basis element of cell (0,0)

    int dim(Cell c) const { return space.dim(c); }

    /// Product of basis elements. Absent blocks mean multiplication by the
    /// unit (when one side is the unit cell) or zero (truncated).
    std::pair<Cell, SparseVec<K>> mul_basis(Cell ca, int i, Cell cb, int j) const
    {
        auto it = prod.find({ca, cb});
        if (it != prod.end())
            return {it->second.target, it->second.table[i][j]};
        if (unital && ca == Cell{0, 0} && dim(ca) == 1)
            return {cb, {{j, K::one()}}};
        if (unital && cb == Cell{0, 0} && dim(cb) == 1)
            return {ca, {{i, K::one()}}};
        return {ca + cb, {}};
    }

    SparseVec<K> mul_into(Cell ca, int i, Cell cb, int j, Cell expect) const
    {
        auto [t, v] = mul_basis(ca, i, cb, j);
        if (!v.empty() && t != expect)
            fail_internal("product landed in unexpected cell");
        return v;
    }

    const SparseMatrix<K>* differential(Cell c) const
    {
        auto it = diff.find(c);
        return it == diff.end() ? nullptr : &it->second;
    }

    /// Augmentation: coefficient of the unit; kills all weight >= 1 cells.
    typename K::Elem augment(Cell c, int i, const typename K::Elem& coeff) const
    {
        if (c.wt >= 1 || !unital)
            return K::zero();
        (void)i;
        return coeff;
    }

    /// Positive-weight cells (the augmentation ideal), in canonical order.
    std::vector<Cell> ideal_cells() const
    {
        std::vector<Cell> out;
        for (auto& [c, labels] : space.cells)
            if (c.wt >= 1 && !labels.empty())
                out.push_back(c);
        return out;
    }

    const ChainComplex<K> as_complex() const
    {
        ChainComplex<K> out;
        out.space = space;
        out.diff = diff;
        out.support = support;
        return out;
    }
};

/// Checks a(bc) = (ab)c on all basis triples inside the window.
template <class K>
bool check_associative(const Algebra<K>& a, int wt_max)
{
    auto cells = a.space.cells;
    for (auto& [c1, l1] : cells)
        for (auto& [c2, l2] : cells)
            for (auto& [c3, l3] : cells) {
                if (c1.wt + c2.wt + c3.wt > wt_max)
                    continue;
                for (int i = 0; i < (int)l1.size(); ++i)
                    for (int j = 0; j < (int)l2.size(); ++j)
                        for (int k = 0; k < (int)l3.size(); ++k) {
                            auto [c12, v12] = a.mul_basis(c1, i, c2, j);
                            SparseVec<K> left;  // (ij)k
                            for (auto& [x, coeff] : v12) {
                                auto [ct, vv] = a.mul_basis(c12, x, c3, k);
                                SparseVec<K> term = vv;
                                vec_scale<K>(term, coeff);
                                vec_axpy<K>(left, K::one(), term);
                            }
                            auto [c23, v23] = a.mul_basis(c2, j, c3, k);
                            SparseVec<K> right;  // i(jk)
                            for (auto& [x, coeff] : v23) {
                                auto [ct, vv] = a.mul_basis(c1, i, c23, x);
                                SparseVec<K> term = vv;
                                vec_scale<K>(term, coeff);
                                vec_axpy<K>(right, K::one(), term);
                            }
                            vec_axpy<K>(left, K::neg(K::one()), right);
                            if (!left.empty())
                                return false;
                        }
            }
    return true;
}

/// Checks ab = (-1)^{|a||b|} ba on all basis pairs inside the window.
template <class K>
bool check_commutative(const Algebra<K>& a, int wt_max)
{
    for (auto& [c1, l1] : a.space.cells)
        for (auto& [c2, l2] : a.space.cells) {
            if (c1.wt + c2.wt > wt_max)
                continue;
            auto sign = K::from_int((c1.deg % 2 != 0) && (c2.deg % 2 != 0) ? -1 : 1);
            for (int i = 0; i < (int)l1.size(); ++i)
                for (int j = 0; j < (int)l2.size(); ++j) {
                    auto [ct, ab] = a.mul_basis(c1, i, c2, j);
                    auto [ct2, ba] = a.mul_basis(c2, j, c1, i);
                    SparseVec<K> d = ab;
                    vec_axpy<K>(d, K::neg(sign), ba);
                    if (!d.empty())
                        return false;
                }
        }
    return true;
}

// ---------------------------------------------------------------------------
// Free graded commutative algebras
// ---------------------------------------------------------------------------

/// Monomial basis of S(V): over Q odd-degree generators appear at most
/// once; over F2 the free graded commutative algebra is polynomial.
template <class K>
struct FreeCommutative {
    Algebra<K> alg;
    std::vector<Generator> gens;
    // exponent vector of each basis monomial, aligned with alg.space cells
    std::map<Cell, std::vector<std::vector<int>>> expo;

    int find_monomial(Cell c, const std::vector<int>& e) const
    {
        auto it = expo.find(c);
        if (it == expo.end())
            return -1;
        for (size_t i = 0; i < it->second.size(); ++i)
            if (it->second[i] == e)
                return (int)i;
        return -1;
    }
};

namespace detail {

inline std::string monomial_label(const std::vector<Generator>& gens, const std::vector<int>& e)
{
    std::string s;
    for (size_t i = 0; i < gens.size(); ++i) {
        if (e[i] == 0)
            continue;
        if (!s.empty())
            s += "*";
        s += gens[i].name;
        if (e[i] > 1)
            s += "^" + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
}

/// Koszul sign of merging two monomials written in generator order:
/// each factor g_i^{f_i} of the right monomial moves past the factors
/// g_j^{e_j}, j > i, of the left one.
inline int merge_sign_exponent(const std::vector<Generator>& gens, const std::vector<int>& e,
                               const std::vector<int>& f)
{
    long s = 0;
    for (size_t i = 0; i < gens.size(); ++i) {
        if (f[i] == 0 || gens[i].deg % 2 == 0)
            continue;
        long right = 0;
        for (size_t j = i + 1; j < gens.size(); ++j)
            if (gens[j].deg % 2 != 0)
                right += e[j];
        s += (long)f[i] * right;
    }
    return (int)(s % 2);
}

}  // namespace detail

template <class K>
FreeCommutative<K> free_commutative(const std::vector<Generator>& gens, int wt_max)
{
    for (auto& g : gens)
        if (g.wt < 1)
            fail_invalid("generator weight must be >= 1: " + g.name);
    FreeCommutative<K> out;
    out.gens = gens;
    out.alg.commutative = true;
    out.alg.associative = true;
    out.alg.support = Window::all_degrees(0, wt_max);

    // enumerate exponent vectors with total weight <= wt_max
    std::vector<std::vector<int>> monos;
    std::vector<int> cur(gens.size(), 0);
    std::function<void(size_t, int)> rec = [&](size_t i, int wt_left) {
        if (i == gens.size()) {
            monos.push_back(cur);
            return;
        }
        int cap = gens[i].wt > 0 ? wt_left / gens[i].wt : 0;
        if (!K::is_f2 && gens[i].deg % 2 != 0)
            cap = std::min(cap, 1);
        for (int e = 0; e <= cap; ++e) {
            cur[i] = e;
            rec(i + 1, wt_left - e * gens[i].wt);
        }
        cur[i] = 0;
    };
    rec(0, wt_max);

    auto cell_of = [&](const std::vector<int>& e) {
        Cell c{0, 0};
        for (size_t i = 0; i < gens.size(); ++i) {
            c.deg += e[i] * gens[i].deg;
            c.wt += e[i] * gens[i].wt;
        }
        return c;
    };
    std::sort(monos.begin(), monos.end());
    for (auto& e : monos) {
        Cell c = cell_of(e);
        out.alg.space.add(c, detail::monomial_label(gens, e));
        out.expo[c].push_back(e);
    }

    // product tables: exponent merge with Koszul sign, zero past the window
    for (auto& [ca, ea] : out.expo)
        for (auto& [cb, eb] : out.expo) {
            if (ca.wt + cb.wt > wt_max)
                continue;
            typename Algebra<K>::ProdBlock block;
            block.target = ca + cb;
            block.table.assign(ea.size(), std::vector<SparseVec<K>>(eb.size()));
            for (size_t i = 0; i < ea.size(); ++i)
                for (size_t j = 0; j < eb.size(); ++j) {
                    std::vector<int> m(gens.size());
                    bool zero = false;
                    for (size_t g = 0; g < gens.size(); ++g) {
                        m[g] = ea[i][g] + eb[j][g];
                        if (!K::is_f2 && gens[g].deg % 2 != 0 && m[g] > 1)
                            zero = true;
                    }
                    if (zero)
                        continue;
                    int idx = out.find_monomial(block.target, m);
                    if (idx < 0)
                        fail_internal("free_commutative: missing product monomial");
                    int sexp = detail::merge_sign_exponent(gens, ea[i], eb[j]);
                    block.table[i][j] = {{idx, K::from_int(sexp ? -1 : 1)}};
                }
            out.alg.prod[{ca, cb}] = std::move(block);
        }
    return out;
}

// ---------------------------------------------------------------------------
// Other presentations used by the scenarios
// ---------------------------------------------------------------------------

/// k ⋉ M(deg): square-zero extension on dim_m generators in the given
/// degree, each of weight one.
template <class K>
Algebra<K> square_zero(int dim_m, int deg, int wt_max = 1)
{
    Algebra<K> a;
    a.commutative = true;
    a.support = Window::all_degrees(0, std::max(wt_max, 1));
    a.space.add({0, 0}, "1");
    for (int i = 0; i < dim_m; ++i)
        a.space.add({deg, 1}, "m" + std::to_string(i + 1));
    // m_i m_j = 0: explicit zero block keeps the product inside the support
    typename Algebra<K>::ProdBlock z;
    z.target = {2 * deg, 2};
    z.table.assign(dim_m, std::vector<SparseVec<K>>(dim_m));
    a.prod[{Cell{deg, 1}, Cell{deg, 1}}] = std::move(z);
    return a;
}

/// Free associative (tensor) algebra on degree-0 generators, one basis
/// word per sequence; product is concatenation.
template <class K>
struct TensorAlgebra {
    Algebra<K> alg;
    std::vector<std::string> gens;
    std::map<Cell, std::vector<std::vector<int>>> words;

    int find_word(Cell c, const std::vector<int>& w) const
    {
        auto it = words.find(c);
        if (it == words.end())
            return -1;
        for (size_t i = 0; i < it->second.size(); ++i)
            if (it->second[i] == w)
                return (int)i;
        return -1;
    }
};

template <class K>
TensorAlgebra<K> tensor_algebra(const std::vector<std::string>& gens, int wt_max)
{
    TensorAlgebra<K> out;
    out.gens = gens;
    out.alg.commutative = (gens.size() <= 1);
    out.alg.support = Window::all_degrees(0, wt_max);
    out.alg.space.add({0, 0}, "1");
    out.words[{0, 0}] = {{}};
    std::vector<std::vector<int>> level = {{}};
    for (int w = 1; w <= wt_max; ++w) {
        std::vector<std::vector<int>> next;
        for (auto& word : level)
            for (size_t g = 0; g < gens.size(); ++g) {
                auto ext = word;
                ext.push_back((int)g);
                next.push_back(ext);
            }
        for (auto& word : next) {
            std::string label;
            for (int g : word)
                label += gens[g];
            out.alg.space.add({0, w}, label);
            out.words[{0, w}].push_back(word);
        }
        level = std::move(next);
    }
    for (int w1 = 0; w1 <= wt_max; ++w1)
        for (int w2 = 0; w1 + w2 <= wt_max; ++w2) {
            Cell ca{0, w1}, cb{0, w2};
            typename Algebra<K>::ProdBlock block;
            block.target = {0, w1 + w2};
            auto& wa = out.words[ca];
            auto& wb = out.words[cb];
            block.table.assign(wa.size(), std::vector<SparseVec<K>>(wb.size()));
            for (size_t i = 0; i < wa.size(); ++i)
                for (size_t j = 0; j < wb.size(); ++j) {
                    auto cat = wa[i];
                    cat.insert(cat.end(), wb[j].begin(), wb[j].end());
                    int idx = out.find_word(block.target, cat);
                    block.table[i][j] = {{idx, K::one()}};
                }
            out.alg.prod[{ca, cb}] = std::move(block);
        }
    return out;
}

/// Cyclic group algebra k[C_n] in the I-adic presentation: unit at weight
/// zero, augmentation-ideal basis u_a = g^a - 1 at weight one, products
/// folded back into weight one.
template <class K>
Algebra<K> cyclic_group_algebra(int n)
{
    if (n < 2)
        fail_invalid("cyclic_group_algebra: order must be >= 2");
    Algebra<K> a;
    a.commutative = true;
    a.support = Window::all_degrees(0, 2);
    a.space.add({0, 0}, "1");
    for (int i = 1; i < n; ++i)
        a.space.add({0, 1}, "(g^" + std::to_string(i) + "-1)");
    // u_a u_b = u_{a+b} - u_a - u_b  (indices mod n, u_0 = 0)
    typename Algebra<K>::ProdBlock block;
    block.target = {0, 1};
    block.table.assign(n - 1, std::vector<SparseVec<K>>(n - 1));
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) {
            SparseVec<K> v;
            int s = (i + j) % n;
            if (s != 0)
                v.emplace_back(s - 1, K::one());
            v.emplace_back(i - 1, K::neg(K::one()));
            v.emplace_back(j - 1, K::neg(K::one()));
            vec_normalize<K>(v);
            block.table[i - 1][j - 1] = std::move(v);
        }
    a.prod[{Cell{0, 1}, Cell{0, 1}}] = std::move(block);
    return a;
}

/// Product of r copies of the ground field (conjugacy-class model of the
/// center of a group algebra over an algebraically closed field), I-adic
/// presentation with idempotents e_2..e_r spanning the augmentation ideal.
template <class K>
Algebra<K> field_product(int r)
{
    if (r < 1)
        fail_invalid("field_product: need r >= 1");
    Algebra<K> a;
    a.commutative = true;
    a.support = Window::all_degrees(0, 2);
    a.space.add({0, 0}, "1");
    for (int i = 2; i <= r; ++i)
        a.space.add({0, 1}, "e" + std::to_string(i));
    if (r == 1)
        return a;
    typename Algebra<K>::ProdBlock block;
    block.target = {0, 1};
    block.table.assign(r - 1, std::vector<SparseVec<K>>(r - 1));
    for (int i = 0; i < r - 1; ++i)
        for (int j = 0; j < r - 1; ++j)
            if (i == j)
                block.table[i][j] = {{i, K::one()}};
    a.prod[{Cell{0, 1}, Cell{0, 1}}] = std::move(block);
    return a;
}

/// I/I^2 per cell: the quotient of the augmentation ideal by the span of
/// all products of positive-weight basis elements. Labels are the basis
/// elements complementary to the product span.
template <class K>
BigradedSpace indecomposables_Qa(const Algebra<K>& a)
{
    BigradedSpace out;
    auto ideal = a.ideal_cells();
    std::map<Cell, SubspaceReducer<K>> span;
    for (Cell c : ideal)
        span.emplace(c, SubspaceReducer<K>(a.dim(c)));
    for (Cell c1 : ideal)
        for (Cell c2 : ideal) {
            for (int i = 0; i < a.dim(c1); ++i)
                for (int j = 0; j < a.dim(c2); ++j) {
                    auto [t, v] = a.mul_basis(c1, i, c2, j);
                    if (v.empty())
                        continue;
                    auto it = span.find(t);
                    if (it == span.end())
                        fail_internal("product of ideal elements left the ideal");
                    it->second.insert(v);
                }
        }
    for (Cell c : ideal) {
        auto& red = span.at(c);
        // complement basis: original elements independent modulo the span
        SubspaceReducer<K> chosen(a.dim(c));
        for (int i = 0; i < a.dim(c); ++i) {
            auto res = red.reduce({{i, K::one()}});
            if (!res.empty() && chosen.insert(res))
                out.add(c, a.space.label(c, i));
        }
    }
    return out;
}

}  // namespace enh
