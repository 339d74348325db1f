#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <tuple>
#include <vector>

#include "enh/error.hpp"
#include "enh/field.hpp"

namespace enh {

/// Sparse vector: index-sorted (index, nonzero coefficient) pairs.
template <class K>
using SparseVec = std::vector<std::pair<int, typename K::Elem>>;

template <class K>
void vec_normalize(SparseVec<K>& v)
{
    std::sort(v.begin(), v.end(), [](auto& a, auto& b) { return a.first < b.first; });
    SparseVec<K> out;
    out.reserve(v.size());
    for (auto& [i, c] : v) {
        if (!out.empty() && out.back().first == i)
            out.back().second = K::add(out.back().second, c);
        else
            out.emplace_back(i, c);
        if (!out.empty() && K::is_zero(out.back().second))
            out.pop_back();
    }
    v = std::move(out);
}

/// a += c*b, both index-sorted.
template <class K>
void vec_axpy(SparseVec<K>& a, const typename K::Elem& c, const SparseVec<K>& b)
{
    if (K::is_zero(c) || b.empty())
        return;
    SparseVec<K> out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            auto t = K::mul(c, b[j].second);
            if (!K::is_zero(t))
                out.emplace_back(b[j].first, t);
            ++j;
        } else {
            auto t = K::add(a[i].second, K::mul(c, b[j].second));
            if (!K::is_zero(t))
                out.emplace_back(a[i].first, t);
            ++i, ++j;
        }
    }
    a = std::move(out);
}

template <class K>
void vec_scale(SparseVec<K>& a, const typename K::Elem& c)
{
    if (K::is_zero(c)) {
        a.clear();
        return;
    }
    for (auto& [i, x] : a)
        x = K::mul(x, c);
}

template <class K>
std::optional<typename K::Elem> vec_at(const SparseVec<K>& a, int idx)
{
    auto it = std::lower_bound(a.begin(), a.end(), idx,
                               [](auto& p, int i) { return p.first < i; });
    if (it != a.end() && it->first == idx)
        return it->second;
    return std::nullopt;
}

/// Sparse matrix over K in triplet form; no duplicate positions, no stored
/// zeros, indices in bounds. Rows act on column vectors: (m*v)[r] = sum_c m[r,c]*v[c].
template <class K>
class SparseMatrix {
  public:
    using Elem = typename K::Elem;

    SparseMatrix() = default;
    SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), row_(rows) {}

    static SparseMatrix identity(int n)
    {
        SparseMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            m.set(i, i, K::one());
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void set(int r, int c, const Elem& v)
    {
        check_index(r, c);
        auto& row = row_[r];
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](auto& p, int i) { return p.first < i; });
        if (it != row.end() && it->first == c) {
            if (K::is_zero(v))
                row.erase(it);
            else
                it->second = v;
        } else if (!K::is_zero(v)) {
            row.insert(it, {c, v});
        }
    }

    void add_to(int r, int c, const Elem& v)
    {
        check_index(r, c);
        auto cur = vec_at<K>(row_[r], c);
        set(r, c, cur ? K::add(*cur, v) : v);
    }

    Elem get(int r, int c) const
    {
        check_index(r, c);
        auto v = vec_at<K>(row_[r], c);
        return v ? *v : K::zero();
    }

    const SparseVec<K>& row(int r) const { return row_[r]; }

    std::vector<std::tuple<int, int, Elem>> entries() const
    {
        std::vector<std::tuple<int, int, Elem>> out;
        for (int r = 0; r < rows_; ++r)
            for (auto& [c, v] : row_[r])
                out.emplace_back(r, c, v);
        return out;
    }

    size_t nnz() const
    {
        size_t n = 0;
        for (auto& r : row_)
            n += r.size();
        return n;
    }

    bool is_zero() const { return nnz() == 0; }

    SparseVec<K> column(int c) const
    {
        SparseVec<K> out;
        for (int r = 0; r < rows_; ++r) {
            auto v = vec_at<K>(row_[r], c);
            if (v)
                out.emplace_back(r, *v);
        }
        return out;
    }

    SparseVec<K> apply(const SparseVec<K>& v) const
    {
        SparseVec<K> out;
        for (int r = 0; r < rows_; ++r) {
            Elem acc = K::zero();
            auto& row = row_[r];
            size_t i = 0, j = 0;
            while (i < row.size() && j < v.size()) {
                if (row[i].first < v[j].first)
                    ++i;
                else if (v[j].first < row[i].first)
                    ++j;
                else
                    acc = K::add(acc, K::mul(row[i++].second, v[j++].second));
            }
            if (!K::is_zero(acc))
                out.emplace_back(r, acc);
        }
        return out;
    }

    /// this * other (composition of linear maps).
    SparseMatrix operator*(const SparseMatrix& other) const
    {
        if (cols_ != other.rows_)
            fail_invalid("matrix product dimension mismatch");
        SparseMatrix out(rows_, other.cols_);
        for (int r = 0; r < rows_; ++r) {
            SparseVec<K> acc;
            for (auto& [k, v] : row_[r])
                vec_axpy<K>(acc, v, other.row_[k]);
            out.row_[r] = std::move(acc);
        }
        return out;
    }

    SparseMatrix transpose() const
    {
        SparseMatrix out(cols_, rows_);
        for (int r = 0; r < rows_; ++r)
            for (auto& [c, v] : row_[r])
                out.row_[c].emplace_back(r, v);
        return out;
    }

    void set_row(int r, SparseVec<K> v) { row_[r] = std::move(v); }

  private:
    void check_index(int r, int c) const
    {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            fail_invalid("matrix index out of bounds");
    }

    int rows_ = 0, cols_ = 0;
    std::vector<SparseVec<K>> row_;
};

template <class K>
struct RowReduceResult {
    SparseMatrix<K> reduced;      // reduced row-echelon form
    int rank = 0;
    std::vector<int> pivots;      // pivot column per pivot row, increasing
};

namespace detail {

// Dense bitset elimination for F2; same contract as the generic path.
struct BitRows {
    int cols;
    size_t words;
    std::vector<std::vector<uint64_t>> rows;

    BitRows(int r, int c) : cols(c), words((c + 63) / 64), rows(r, std::vector<uint64_t>(words, 0)) {}
    void set(int r, int c) { rows[r][c >> 6] |= (uint64_t(1) << (c & 63)); }
    bool get(int r, int c) const { return (rows[r][c >> 6] >> (c & 63)) & 1; }
    void xor_rows(int dst, int src)
    {
        for (size_t w = 0; w < words; ++w)
            rows[dst][w] ^= rows[src][w];
    }
};

}  // namespace detail

template <class K>
RowReduceResult<K> row_reduce(const SparseMatrix<K>& m)
{
    RowReduceResult<K> res;
    if constexpr (K::is_f2) {
        detail::BitRows b(m.rows(), std::max(m.cols(), 1));
        for (int r = 0; r < m.rows(); ++r)
            for (auto& [c, v] : m.row(r))
                if (v)
                    b.set(r, c);
        std::vector<int> pivot_row_of;  // row index per pivot, in pivot order
        std::vector<char> used(m.rows(), 0);
        for (int col = 0; col < m.cols(); ++col) {
            int pick = -1;
            for (int r = 0; r < m.rows(); ++r)
                if (!used[r] && b.get(r, col)) {
                    pick = r;
                    break;
                }
            if (pick < 0)
                continue;
            used[pick] = 1;
            for (int r = 0; r < m.rows(); ++r)
                if (r != pick && b.get(r, col))
                    b.xor_rows(r, pick);
            res.pivots.push_back(col);
            pivot_row_of.push_back(pick);
        }
        res.rank = (int)res.pivots.size();
        res.reduced = SparseMatrix<K>(m.rows(), m.cols());
        for (size_t p = 0; p < pivot_row_of.size(); ++p) {
            SparseVec<K> row;
            for (int c = 0; c < m.cols(); ++c)
                if (b.get(pivot_row_of[p], c))
                    row.emplace_back(c, K::one());
            res.reduced.set_row((int)p, std::move(row));
        }
        return res;
    } else {
        std::vector<SparseVec<K>> rows;
        rows.reserve(m.rows());
        for (int r = 0; r < m.rows(); ++r)
            rows.push_back(m.row(r));
        std::vector<char> used(rows.size(), 0);
        std::vector<std::pair<int, int>> pivot_list;  // (col, row)
        for (int col = 0; col < m.cols(); ++col) {
            // minimal-fill pivot: among candidate rows choose the sparsest
            int pick = -1;
            size_t best = SIZE_MAX;
            for (size_t r = 0; r < rows.size(); ++r) {
                if (used[r])
                    continue;
                auto v = vec_at<K>(rows[r], col);
                if (v && rows[r].size() < best) {
                    best = rows[r].size();
                    pick = (int)r;
                }
            }
            if (pick < 0)
                continue;
            used[pick] = 1;
            auto lead = *vec_at<K>(rows[pick], col);
            vec_scale<K>(rows[pick], K::inv(lead));
            for (size_t r = 0; r < rows.size(); ++r) {
                if ((int)r == pick)
                    continue;
                auto v = vec_at<K>(rows[r], col);
                if (v)
                    vec_axpy<K>(rows[r], K::neg(*v), rows[pick]);
            }
            pivot_list.emplace_back(col, pick);
        }
        res.rank = (int)pivot_list.size();
        res.reduced = SparseMatrix<K>(m.rows(), m.cols());
        for (size_t p = 0; p < pivot_list.size(); ++p) {
            res.pivots.push_back(pivot_list[p].first);
            res.reduced.set_row((int)p, std::move(rows[pivot_list[p].second]));
        }
        return res;
    }
}

template <class K>
int rank(const SparseMatrix<K>& m)
{
    return row_reduce(m).rank;
}

/// Basis of { v : m v = 0 }, one vector per free column.
template <class K>
std::vector<SparseVec<K>> kernel_basis(const SparseMatrix<K>& m)
{
    auto rr = row_reduce(m);
    std::vector<char> is_pivot(m.cols(), 0);
    std::vector<int> pivot_row(m.cols(), -1);
    for (size_t p = 0; p < rr.pivots.size(); ++p) {
        is_pivot[rr.pivots[p]] = 1;
        pivot_row[rr.pivots[p]] = (int)p;
    }
    std::vector<SparseVec<K>> out;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        SparseVec<K> v;
        v.emplace_back(f, K::one());
        for (size_t p = 0; p < rr.pivots.size(); ++p) {
            auto c = vec_at<K>(rr.reduced.row((int)p), f);
            if (c)
                v.emplace_back(rr.pivots[p], K::neg(*c));
        }
        vec_normalize<K>(v);
        out.push_back(std::move(v));
    }
    return out;
}

/// Independent spanning set of the column space: the original columns at
/// the pivot positions of the RREF.
template <class K>
std::vector<SparseVec<K>> image_basis(const SparseMatrix<K>& m)
{
    auto rr = row_reduce(m);
    std::vector<SparseVec<K>> out;
    out.reserve(rr.pivots.size());
    for (int c : rr.pivots)
        out.push_back(m.column(c));
    return out;
}

/// dim(ambient / span(sub)).
template <class K>
int quotient_dim(const std::vector<SparseVec<K>>& sub, int ambient_dim)
{
    SparseMatrix<K> m((int)sub.size(), ambient_dim);
    for (size_t r = 0; r < sub.size(); ++r) {
        for (auto& [i, c] : sub[r]) {
            if (i < 0 || i >= ambient_dim)
                fail_invalid("quotient_dim: vector length mismatch");
            (void)c;
        }
        m.set_row((int)r, sub[r]);
    }
    return ambient_dim - rank(m);
}

/// Incremental row space in echelon form. Supports membership tests,
/// reduction modulo the span, and solving for coordinates in terms of the
/// inserted generators (used for PBW expansion and homology classes).
template <class K>
class SubspaceReducer {
  public:
    using Elem = typename K::Elem;

    explicit SubspaceReducer(int ambient, bool track_coords = false)
        : ambient_(ambient), track_(track_coords)
    {
    }

    int dim() const { return (int)rows_.size(); }
    int ambient() const { return ambient_; }
    int generators() const { return n_inserted_; }

    /// Insert v into the span. Returns true if it was independent.
    bool insert(SparseVec<K> v)
    {
        SparseVec<K> coeff;
        if (track_)
            coeff.emplace_back(n_inserted_, K::one());
        ++n_inserted_;
        reduce_full(v, track_ ? &coeff : nullptr);
        if (v.empty())
            return false;
        auto lead = v.front();
        vec_scale<K>(v, K::inv(lead.second));
        if (track_)
            vec_scale<K>(coeff, K::inv(lead.second));
        // keep rows fully reduced against the new row
        for (size_t r = 0; r < rows_.size(); ++r) {
            auto c = vec_at<K>(rows_[r], lead.first);
            if (c) {
                vec_axpy<K>(rows_[r], K::neg(*c), v);
                if (track_)
                    vec_axpy<K>(coords_[r], K::neg(*c), coeff);
            }
        }
        size_t pos = 0;
        while (pos < rows_.size() && rows_[pos].front().first < lead.first)
            ++pos;
        rows_.insert(rows_.begin() + pos, std::move(v));
        if (track_)
            coords_.insert(coords_.begin() + pos, std::move(coeff));
        return true;
    }

    /// Residue of v modulo the span.
    SparseVec<K> reduce(SparseVec<K> v) const
    {
        reduce_full(v, nullptr);
        return v;
    }

    bool contains(SparseVec<K> v) const { return reduce(std::move(v)).empty(); }

    /// If v lies in the span, coordinates of v over the inserted generators
    /// (requires track_coords).
    std::optional<SparseVec<K>> solve(SparseVec<K> v) const
    {
        if (!track_)
            fail_internal("SubspaceReducer::solve without coordinate tracking");
        SparseVec<K> coeff;
        reduce_full(v, &coeff);
        if (!v.empty())
            return std::nullopt;
        vec_scale<K>(coeff, K::neg(K::one()));
        return coeff;
    }

    const std::vector<SparseVec<K>>& rows() const { return rows_; }

  private:
    void reduce_full(SparseVec<K>& v, SparseVec<K>* coeff) const
    {
        // rows_ kept sorted by leading index
        for (auto& row : rows_) {
            if (v.empty())
                return;
            int lead = row.front().first;
            if (lead > v.back().first)
                return;
            auto c = vec_at<K>(v, lead);
            if (c) {
                vec_axpy<K>(v, K::neg(*c), row);
                if (coeff) {
                    size_t idx = &row - rows_.data();
                    vec_axpy<K>(*coeff, K::neg(*c), coords_[idx]);
                }
            }
        }
    }

    int ambient_;
    bool track_;
    int n_inserted_ = 0;
    std::vector<SparseVec<K>> rows_;    // echelon, sorted by leading index
    std::vector<SparseVec<K>> coords_;  // row = combination of inserted vectors
};

}  // namespace enh
