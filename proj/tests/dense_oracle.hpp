#pragma once

// Independent reference implementations used to cross-check the library.
// Everything here works on plain dense integer matrices and naive loops.

#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<int>>;

inline Matrix zeros(std::size_t n)
{
    return Matrix(n, std::vector<int>(n, 0));
}

inline Matrix eye(std::size_t n)
{
    auto a = zeros(n);
    for (std::size_t i = 0; i < n; ++i) a[i][i] = 1;
    return a;
}

inline Matrix mul(const Matrix& a, const Matrix& b)
{
    const std::size_t n = a.size();
    auto c = zeros(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

inline Matrix transpose(const Matrix& a)
{
    const std::size_t n = a.size();
    auto t = zeros(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t[j][i] = a[i][j];
    return t;
}

inline Matrix scale(int s, const Matrix& a)
{
    auto c = a;
    for (auto& row : c)
        for (auto& x : row) x *= s;
    return c;
}

inline Matrix add(const Matrix& a, const Matrix& b)
{
    auto c = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) c[i][j] += b[i][j];
    return c;
}

inline Matrix kron(const Matrix& a, const Matrix& b)
{
    const std::size_t na = a.size(), nb = b.size();
    auto c = zeros(na * nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j)
            for (std::size_t k = 0; k < nb; ++k)
                for (std::size_t l = 0; l < nb; ++l) c[i * nb + k][j * nb + l] = a[i][j] * b[k][l];
    return c;
}

inline bool is_symmetric(const Matrix& a) { return transpose(a) == a; }
inline bool is_skew(const Matrix& a) { return transpose(a) == scale(-1, a); }

inline bool is_diagonal(const Matrix& a)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (i != j && a[i][j] != 0) return false;
    return true;
}

inline bool supports_disjoint(const Matrix& a, const Matrix& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (a[i][j] != 0 && b[i][j] != 0) return false;
    return true;
}

inline const Matrix& factor(int digit)
{
    static const Matrix table[4] = {
        {{1, 0}, {0, 1}},
        {{0, -1}, {1, 0}},
        {{0, 1}, {1, 0}},
        {{-1, 0}, {0, 1}},
    };
    return table[digit];
}

/// Dense basis matrix: Kronecker product over base-4 digits, most significant first.
inline Matrix gamma(int m, std::uint32_t i)
{
    Matrix a = {{1}};
    for (int k = m - 1; k >= 0; --k) a = kron(a, factor(static_cast<int>((i >> (2 * k)) & 3u)));
    return a;
}

inline int digit_count(int m, std::uint32_t i, std::function<bool(int)> pred)
{
    int count = 0;
    for (int k = 0; k < m; ++k)
        if (pred(static_cast<int>((i >> (2 * k)) & 3u))) ++count;
    return count;
}

/// Sigma by the matrix definition: skew basis element.
inline int sigma_dense(int m, std::uint32_t i) { return is_skew(gamma(m, i)) ? 1 : 0; }

/// Tau by the matrix definition: symmetric and not diagonal.
inline int tau_dense(int m, std::uint32_t i)
{
    const auto g = gamma(m, i);
    return is_symmetric(g) && !is_diagonal(g) ? 1 : 0;
}

/// Naive Walsh-Hadamard sums, F(w) = sum_x (-1)^(f(x) + w.x).
inline std::vector<std::int64_t> naive_wht(const std::vector<std::uint8_t>& table)
{
    std::vector<std::int64_t> out(table.size(), 0);
    for (std::size_t w = 0; w < table.size(); ++w)
        for (std::size_t x = 0; x < table.size(); ++x) {
            const int parity = (table[x] + std::popcount(static_cast<std::uint64_t>(w & x))) & 1;
            out[w] += parity ? -1 : 1;
        }
    return out;
}

/// Maximum clique size by plain recursive enumeration over an adjacency matrix.
inline std::size_t naive_clique_number(const std::vector<std::vector<bool>>& adj)
{
    const std::size_t n = adj.size();
    std::size_t best = n == 0 ? 0 : 1;
    std::vector<std::size_t> current;
    std::function<void(std::size_t)> grow = [&](std::size_t start) {
        best = std::max(best, current.size());
        for (std::size_t v = start; v < n; ++v) {
            bool ok = true;
            for (auto u : current) ok = ok && adj[u][v];
            if (!ok) continue;
            current.push_back(v);
            grow(v + 1);
            current.pop_back();
        }
    };
    grow(0);
    return best;
}

} // namespace oracle
