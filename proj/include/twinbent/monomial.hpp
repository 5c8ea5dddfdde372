#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace twinbent {

enum class Symmetry { symmetric, skew };
enum class Shape { diagonal, non_diagonal };

struct Classification {
    Symmetry symmetry;
    Shape shape;
    bool operator==(const Classification&) const = default;
};

enum class Amicability { amicable, anti_amicable };
enum class Support { disjoint, overlapping };
enum class Commutation { commute, anticommute };

struct PairRelation {
    Amicability amicability;
    Support support;
    Commutation commutation;
    bool operator==(const PairRelation&) const = default;
};

/// One nonzero entry of a monomial matrix in row-major export.
struct Entry {
    std::size_t row;
    std::size_t col;
    int value;
    bool operator==(const Entry&) const = default;
};

using DenseGrid = std::vector<std::vector<int>>;

/**
 * Order-n monomial matrix with entries in {-1, 0, 1}.
 *
 * Column c holds its single nonzero entry sign(c) in row col_to_row(c).
 * Values are immutable once built; every operation returns a new matrix.
 */
class SignedPerm {
public:
    /// Throws std::invalid_argument unless col_to_row is a permutation of
    /// {0..n-1} and every sign is +1 or -1.
    SignedPerm(std::vector<std::uint32_t> col_to_row, std::vector<std::int8_t> sign);

    static SignedPerm identity(std::size_t n);

    std::size_t order() const { return col_to_row_.size(); }
    std::span<const std::uint32_t> col_to_row() const { return col_to_row_; }
    std::span<const std::int8_t> sign() const { return sign_; }

    int entry(std::size_t row, std::size_t col) const;
    bool is_permutation_identity() const;

    DenseGrid dense() const;
    std::vector<Entry> triples() const;

    SignedPerm operator-() const;
    bool operator==(const SignedPerm&) const = default;

private:
    std::vector<std::uint32_t> col_to_row_;
    std::vector<std::int8_t> sign_;
};

/// [[0,-1],[1,0]]
SignedPerm e1();
/// [[0,1],[1,0]]
SignedPerm e2();

SignedPerm identity(std::size_t n);

/// Matrix product a*b. Throws std::invalid_argument on order mismatch.
SignedPerm multiply(const SignedPerm& a, const SignedPerm& b);

/// Matrix transpose; for a signed permutation this is also the inverse.
SignedPerm transpose(const SignedPerm& a);

/// Kronecker product with index convention (i, j) -> i * b.order() + j.
SignedPerm kronecker(const SignedPerm& a, const SignedPerm& b);

/// Throws std::domain_error when a is neither symmetric nor skew.
Classification classify(const SignedPerm& a);

/// Amicability of a*b^T, support overlap, and commutation of a and b.
/// Throws std::invalid_argument on order mismatch and std::domain_error when
/// a*b^T is neither symmetric nor skew or a, b neither commute nor anticommute.
PairRelation pair_relation(const SignedPerm& a, const SignedPerm& b);

bool disjoint_support(const SignedPerm& a, const SignedPerm& b);

} // namespace twinbent
