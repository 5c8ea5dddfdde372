#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "twinbent/monomial.hpp"

namespace twinbent {

/// Largest supported half-rank: 4^6 = 4096 basis elements of order 64.
inline constexpr int kMaxHalfRank = 6;

/// Number of basis elements of Rep(R_{m,m}), i.e. 4^m.
constexpr std::uint32_t basis_size(int m) { return std::uint32_t{1} << (2 * m); }

/// Throws std::out_of_range unless 1 <= m <= kMaxHalfRank.
void require_half_rank(int m, int max_m = kMaxHalfRank);

/**
 * Index of a coset of {+-I} in Rep(G_{m,m}) under Kronecker product ordering.
 *
 * The same bit string also names an element of Z_2^{2m}; group addition there
 * is XOR on the value. Base-4 digit k occupies bits 2k and 2k+1, and digit 0
 * selects the rightmost Kronecker factor.
 */
class BasisIndex {
public:
    /// Throws std::out_of_range when m is unsupported or value >= 4^m.
    BasisIndex(int m, std::uint32_t value);

    int m() const { return m_; }
    std::uint32_t value() const { return value_; }

    /// m digits, least significant first.
    std::vector<int> digits() const;
    /// Most significant digit first, e.g. "12" for value 6 at m = 2.
    std::string digit_string() const;

    bool operator==(const BasisIndex&) const = default;

private:
    int m_;
    std::uint32_t value_;
};

std::vector<int> digits4(int m, std::uint32_t i);

SignedPerm gamma(const BasisIndex& i);
SignedPerm gamma(int m, std::uint32_t i);

struct SignedIndex {
    int sign;
    std::uint32_t index;
    bool operator==(const SignedIndex&) const = default;
};

/// gamma(i) * gamma(j) = sign * gamma(i XOR j).
SignedIndex index_product(int m, std::uint32_t i, std::uint32_t j);

/// gamma(m, i) for i = 0 .. 4^m - 1.
std::vector<SignedPerm> positive_basis(int m);

/// Bit-level digit statistics on an index of Z_2^{2m}.
int count_digit_one(std::uint32_t i);
/// Digits equal to 1 or 2.
int count_digit_one_or_two(std::uint32_t i);
/// True when every base-4 digit lies in {0, 3}.
bool all_digits_diagonal(std::uint32_t i);

/// [{index, digits, symmetry, diagonal}, ...] for every basis element.
nlohmann::json basis_json(int m);

} // namespace twinbent
