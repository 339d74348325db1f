#pragma once

// Test-only oracles, independent of the library's sparse elimination path:
// a dense fraction-free (Bareiss) rank, a naive dense kernel check, and the
// necklace/Witt count for free Lie algebra dimensions.

#include <random>
#include <vector>

#include "enh/sparse.hpp"

namespace oracles {

/// Dense fraction-free Gaussian elimination over Q (Bareiss); returns rank.
inline int bareiss_rank(std::vector<std::vector<mpz_class>> m)
{
    if (m.empty())
        return 0;
    size_t rows = m.size(), cols = m[0].size();
    mpz_class prev(1);
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(m[p], m[r]);
        for (size_t i = r + 1; i < rows; ++i) {
            for (size_t j = c + 1; j < cols; ++j)
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return (int)r;
}

/// Dense rank over F2.
inline int dense_rank_f2(std::vector<std::vector<int>> m)
{
    if (m.empty())
        return 0;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m[p][c] % 2 == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(m[p], m[r]);
        for (size_t i = 0; i < rows; ++i)
            if (i != r && m[i][c] % 2 != 0)
                for (size_t j = 0; j < cols; ++j)
                    m[i][j] = (m[i][j] + m[r][j]) % 2;
        ++r;
    }
    return (int)r;
}

template <class K>
enh::SparseMatrix<K> random_sparse(std::mt19937& rng, int rows, int cols, double density,
                                   int coeff_range = 5)
{
    enh::SparseMatrix<K> m(rows, cols);
    std::uniform_real_distribution<double> u(0, 1);
    std::uniform_int_distribution<int> coeff(-coeff_range, coeff_range);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (u(rng) < density)
                m.set(r, c, K::from_int(coeff(rng)));
    return m;
}

template <class K>
std::vector<std::vector<mpz_class>> to_dense_z(const enh::SparseMatrix<K>& m)
{
    std::vector<std::vector<mpz_class>> out(m.rows(), std::vector<mpz_class>(m.cols(), 0));
    for (auto& [r, c, v] : m.entries()) {
        if constexpr (K::is_f2)
            out[r][c] = (int)v;
        else {
            // oracle comparison uses integer matrices in the tests
            out[r][c] = v.get_num();
        }
    }
    return out;
}

/// Witt/necklace count: dimension of weight-w part of the free Lie algebra
/// on k degree-zero generators, (1/w) sum_{d|w} mu(d) k^{w/d}.
inline long witt(long k, long w)
{
    auto mobius = [](long n) {
        long result = 1;
        for (long p = 2; p * p <= n; ++p)
            if (n % p == 0) {
                n /= p;
                if (n % p == 0)
                    return 0L;
                result = -result;
            }
        if (n > 1)
            result = -result;
        return result;
    };
    long total = 0;
    for (long d = 1; d <= w; ++d)
        if (w % d == 0) {
            long pw = 1;
            for (long i = 0; i < w / d; ++i)
                pw *= k;
            total += mobius(d) * pw;
        }
    return total / w;
}

}  // namespace oracles
