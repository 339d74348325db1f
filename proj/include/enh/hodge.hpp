#pragma once

#include "enh/hochschild.hpp"

namespace enh {

// ---------------------------------------------------------------------------
// Eulerian idempotents
// ---------------------------------------------------------------------------

/// Element of Q[Sigma_n] with finite support. Permutations are stored in
/// arrangement form: p[i] is the original position placed at slot i, and
/// the action on tensors is (p . t)[i] = t[p[i]].
struct SymmetricGroupElement {
    int arity = 0;
    std::map<std::vector<int>, mpq_class> coeff;
};

namespace detail {

inline std::vector<int> compose_arrangement(const std::vector<int>& p, const std::vector<int>& q)
{
    // action(p) then action(q) corresponds to r[i] = p[q[i]]
    std::vector<int> r(p.size());
    for (size_t i = 0; i < p.size(); ++i)
        r[i] = p[q[i]];
    return r;
}

}  // namespace detail

/// e_n^{(1)}, ..., e_n^{(n)} solved from the multishuffle operators
/// psi^k = sum over functions f: [n] -> [k] of the stable-sort arrangement,
/// which satisfy psi^k = sum_i k^i e^{(i)}. The resulting elements are
/// validated (orthogonality, sum to identity) by validate_eulerian.
inline std::vector<SymmetricGroupElement> eulerian_idempotents(int n, int arity_bound = 7)
{
    if (n < 1 || n > arity_bound)
        fail_invalid("eulerian_idempotents: arity out of bounds");
    // psi^k coefficients
    std::vector<std::map<std::vector<int>, mpq_class>> psi(n + 1);
    std::vector<int> f(n, 0);
    for (int k = 1; k <= n; ++k) {
        std::function<void(int)> rec = [&](int pos) {
            if (pos == n) {
                // stable sort positions by block value
                std::vector<int> arr(n);
                int out = 0;
                for (int block = 0; block < k; ++block)
                    for (int i = 0; i < n; ++i)
                        if (f[i] == block)
                            arr[out++] = i;
                psi[k][arr] += 1;
                return;
            }
            for (int v = 0; v < k; ++v) {
                f[pos] = v;
                rec(pos + 1);
            }
        };
        rec(0);
    }
    // invert the Vandermonde V[k][i] = k^i (k, i = 1..n) exactly
    std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(2 * n, 0));
    for (int k = 1; k <= n; ++k) {
        mpq_class pw = 1;
        for (int i = 1; i <= n; ++i) {
            pw *= k;
            m[k - 1][i - 1] = pw;
        }
        m[k - 1][n + k - 1] = 1;
    }
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        while (pivot < n && m[pivot][col] == 0)
            ++pivot;
        std::swap(m[pivot], m[col]);
        mpq_class lead = m[col][col];
        for (auto& x : m[col])
            x /= lead;
        for (int r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0)
                continue;
            mpq_class c = m[r][col];
            for (int j = 0; j < 2 * n; ++j)
                m[r][j] -= c * m[col][j];
        }
    }
    std::vector<SymmetricGroupElement> out(n);
    for (int i = 1; i <= n; ++i) {
        out[i - 1].arity = n;
        for (int k = 1; k <= n; ++k) {
            mpq_class c = m[i - 1][n + k - 1];
            if (c == 0)
                continue;
            for (auto& [perm, pc] : psi[k])
                out[i - 1].coeff[perm] += c * pc;
        }
        for (auto it = out[i - 1].coeff.begin(); it != out[i - 1].coeff.end();)
            it = it->second == 0 ? out[i - 1].coeff.erase(it) : std::next(it);
    }
    return out;
}

namespace detail {

/// Lehmer-code rank of an arrangement, O(n^2).
inline int perm_rank(const std::vector<int>& p)
{
    int n = (int)p.size();
    int r = 0;
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j)
            if (p[j] < p[i])
                ++smaller;
        int f = 1;
        for (int k = 2; k <= n - 1 - i; ++k)
            f *= k;
        r += smaller * f;
    }
    return r;
}

}  // namespace detail

/// Exact orthogonality, idempotency and sum-to-identity for a family of
/// group algebra elements. Coefficients are rescaled to integers and the
/// convolutions run in 128-bit arithmetic (exact within the checked bound).
inline std::optional<std::string> validate_eulerian(const std::vector<SymmetricGroupElement>& e)
{
    if (e.empty())
        return "no idempotents";
    int n = e[0].arity;
    std::vector<std::vector<int>> perms;
    {
        std::vector<int> p(n);
        for (int i = 0; i < n; ++i)
            p[i] = i;
        do
            perms.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
    }
    size_t N = perms.size();

    // common denominator rescaling to integers
    mpz_class denom = 1;
    for (auto& el : e)
        for (auto& [p, c] : el.coeff)
            denom = denom / gcd(denom, c.get_den()) * c.get_den();
    if (!denom.fits_slong_p())
        return "denominator too large for the fast path";
    std::vector<std::vector<long long>> ez(e.size(), std::vector<long long>(N, 0));
    for (size_t i = 0; i < e.size(); ++i)
        for (auto& [p, c] : e[i].coeff) {
            mpz_class scaled(c * denom);
            if (!scaled.fits_slong_p())
                return "rescaled coefficients exceed the fast-path bound";
            ez[i][detail::perm_rank(p)] = scaled.get_si();
        }
    if (mpz_class(denom * denom * (long)N) >= (mpz_class(1) << 126) / 4)
        return "denominator too large for exact 128-bit convolution";

    std::vector<std::vector<int>> table(N, std::vector<int>(N));
    for (size_t a = 0; a < N; ++a)
        for (size_t b = 0; b < N; ++b)
            table[a][b] =
                detail::perm_rank(detail::compose_arrangement(perms[a], perms[b]));

    auto convolve = [&](const std::vector<long long>& x, const std::vector<long long>& y) {
        std::vector<__int128> r(N, 0);
        for (size_t a = 0; a < N; ++a) {
            if (!x[a])
                continue;
            auto& row = table[a];
            __int128 xa = x[a];
            for (size_t b = 0; b < N; ++b)
                if (y[b])
                    r[row[b]] += xa * y[b];
        }
        return r;
    };

    for (size_t i = 0; i < e.size(); ++i)
        for (size_t j = i; j < e.size(); ++j) {
            auto prod = convolve(ez[i], ez[j]);
            for (size_t a = 0; a < N; ++a) {
                __int128 expect = 0;
                if (i == j)
                    expect = (__int128)ez[i][a] * denom.get_si();
                if (prod[a] != expect)
                    return "orthogonality fails for e(" + std::to_string(i + 1) + "), e(" +
                           std::to_string(j + 1) + ")";
            }
        }
    std::vector<long long> sum(N, 0);
    for (auto& v : ez)
        for (size_t a = 0; a < N; ++a)
            sum[a] += v[a];
    for (size_t a = 0; a < N; ++a)
        if (sum[a] != (a == 0 ? denom.get_si() : 0))
            return "idempotents do not sum to the identity";
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Hodge summands of Hochschild homology with trivial coefficients
// ---------------------------------------------------------------------------

namespace detail {

/// Matrix of a group algebra element acting on the tuple basis of one
/// Hochschild chain cell, with Koszul signs on suspended letter degrees.
template <class K>
SparseMatrix<K> sge_matrix(const SymmetricGroupElement& el,
                           const std::vector<SrcTuple>& tuples,
                           const std::map<SrcTuple, int>& index)
{
    int n = el.arity;
    SparseMatrix<K> m((int)tuples.size(), (int)tuples.size());
    for (auto& [perm, c] : el.coeff) {
        if (K::is_zero(K::from_int(0)) && false)
            continue;
        // coefficient in K (integer n!-denominators require Q; over F2 the
        // construction is rational only, so K = Q in practice)
        for (size_t col = 0; col < tuples.size(); ++col) {
            auto& t = tuples[col];
            SrcTuple nt(n, {Cell{0, 0}, 0});
            for (int i = 0; i < n; ++i)
                nt[i] = t[perm[i]];
            // Koszul sign on suspended degrees: count inversions of odd pairs
            long sexp = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (perm[i] > perm[j])
                        sexp += (long)(std::abs(t[perm[i]].first.deg + 1) % 2) *
                                (std::abs(t[perm[j]].first.deg + 1) % 2);
            auto it = index.find(nt);
            if (it == index.end())
                fail_internal("sge_matrix: permuted tuple missing");
            typename K::Elem coeff;
            if constexpr (K::is_f2)
                fail_invalid("Eulerian idempotents require characteristic zero");
            else
                coeff = typename K::Elem(c);
            m.add_to(it->second, (int)col, K::mul(coeff, K::from_int(sexp % 2 ? -1 : 1)));
        }
    }
    return m;
}

}  // namespace detail

/// Homology of the e^{(l)}-image subcomplex of the trivial-coefficient
/// Hochschild chains. The idempotent/boundary commutation is verified as an
/// exact matrix identity on every window cell.
template <class K>
HomologyTable hodge_summand(const Algebra<K>& a, int ell, int wt_max, int arity_bound = 7)
{
    static_assert(!K::is_f2, "Hodge decomposition lives over Q");
    auto hc = hochschild_chains_trivial(a, wt_max);
    int n_max = 0;
    for (auto& [c, l] : hc.tuples)
        n_max = std::max(n_max, c.deg);
    std::vector<std::vector<SymmetricGroupElement>> eul(n_max + 1);
    for (int n = 1; n <= n_max; ++n)
        eul[n] = eulerian_idempotents(n, std::max(arity_bound, n_max));

    // projector matrices per cell
    std::map<Cell, SparseMatrix<K>> proj;
    std::map<Cell, std::map<SrcTuple, int>> index;
    for (auto& [c, tuples] : hc.tuples) {
        auto& idx = index[c];
        for (size_t i = 0; i < tuples.size(); ++i)
            idx[tuples[i]] = (int)i;
    }
    for (auto& [c, tuples] : hc.tuples) {
        int n = c.deg;
        if (n == 0) {
            proj[c] = SparseMatrix<K>((int)tuples.size(), (int)tuples.size());
            continue;
        }
        if (ell <= n)
            proj[c] = detail::sge_matrix<K>(eul[n][ell - 1], tuples, index[c]);
        else
            proj[c] = SparseMatrix<K>((int)tuples.size(), (int)tuples.size());
    }

    // idempotents commute with the boundary: b P = P' b exactly
    for (auto& [c, d] : hc.complex.diff) {
        Cell tc{c.deg - 1, c.wt};
        auto lhs = d * proj.at(c);
        auto rhs = proj.at(tc) * d;
        auto entries = lhs.entries();
        for (auto& [r, cc, v] : rhs.entries())
            lhs.add_to(r, cc, K::neg(v));
        if (!lhs.is_zero())
            fail_internal("hodge_summand: idempotent does not commute with b at " + to_string(c));
    }

    // homology of the image subcomplex
    HomologyTable out;
    out.field = K::name();
    for (auto& [c, tuples] : hc.tuples) {
        if (c.deg < 1 || c.wt < 1)
            continue;
        auto image = image_basis(proj.at(c));
        if (image.empty())
            continue;
        // cycles within the image
        SubspaceReducer<K> img_span((int)tuples.size());
        for (auto& v : image)
            img_span.insert(v);
        auto* d_out = hc.complex.differential(c);
        std::vector<SparseVec<K>> cycles;
        if (!d_out) {
            cycles = image;
        } else {
            // kernel of d restricted to the image: columns = image vectors
            SparseMatrix<K> dm(d_out->rows(), (int)image.size());
            for (size_t j = 0; j < image.size(); ++j)
                for (auto& [r, v] : d_out->apply(image[j]))
                    dm.add_to(r, (int)j, v);
            for (auto& kv : kernel_basis(dm)) {
                SparseVec<K> z;
                for (auto& [j, coeff] : kv)
                    vec_axpy<K>(z, coeff, image[j]);
                cycles.push_back(std::move(z));
            }
        }
        // boundaries from the image one level up
        SubspaceReducer<K> boundaries((int)tuples.size());
        Cell up{c.deg + 1, c.wt};
        if (proj.count(up)) {
            auto* d_in = hc.complex.differential(up);
            if (d_in)
                for (auto& v : image_basis(proj.at(up)))
                    boundaries.insert(d_in->apply(v));
        }
        int dim = 0;
        SubspaceReducer<K> chosen((int)tuples.size());
        for (auto& z : cycles) {
            auto res = boundaries.reduce(z);
            if (!res.empty() && chosen.insert(res))
                ++dim;
        }
        if (dim)
            out.entries[c].dim = dim;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Etale check
// ---------------------------------------------------------------------------

struct EtaleCertificate {
    bool etale = false;
    // per cell: dimension of I/I^2 and the product pairs spanning I^2
    std::map<Cell, int> indecomposable_dims;
    std::vector<std::string> generating_products;
};

/// True iff I/I^2 = 0; the certificate lists the products that generate I.
template <class K>
EtaleCertificate etale_check(const Algebra<K>& a)
{
    EtaleCertificate out;
    auto ideal = a.ideal_cells();
    std::map<Cell, SubspaceReducer<K>> span;
    for (Cell c : ideal)
        span.emplace(c, SubspaceReducer<K>(a.dim(c)));
    for (Cell c1 : ideal)
        for (Cell c2 : ideal)
            for (int i = 0; i < a.dim(c1); ++i)
                for (int j = 0; j < a.dim(c2); ++j) {
                    auto [t, v] = a.mul_basis(c1, i, c2, j);
                    if (v.empty())
                        continue;
                    auto it = span.find(t);
                    if (it == span.end())
                        fail_internal("etale_check: product left the ideal");
                    if (it->second.insert(v))
                        out.generating_products.push_back(
                            a.space.label(c1, i) + " * " + a.space.label(c2, j));
                }
    out.etale = true;
    for (Cell c : ideal) {
        int q = a.dim(c) - span.at(c).dim();
        out.indecomposable_dims[c] = q;
        if (q != 0)
            out.etale = false;
    }
    return out;
}

}  // namespace enh
