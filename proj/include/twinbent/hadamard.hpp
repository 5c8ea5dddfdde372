#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "twinbent/monomial.hpp"

namespace twinbent {

/// Dense square integer matrix, row-major.
class DenseSquare {
public:
    explicit DenseSquare(std::size_t order = 0, int fill = 0);
    /// Throws std::invalid_argument unless rows form a square grid.
    static DenseSquare from_rows(const DenseGrid& rows);
    static DenseSquare from_signed_perm(const SignedPerm& a);

    std::size_t order() const { return order_; }
    int& at(std::size_t r, std::size_t c) { return entries_[r * order_ + c]; }
    int at(std::size_t r, std::size_t c) const { return entries_[r * order_ + c]; }
    const std::vector<int>& entries() const { return entries_; }

    DenseGrid rows() const;
    bool all_plus_minus_one() const;

    bool operator==(const DenseSquare&) const = default;

private:
    std::size_t order_;
    std::vector<int> entries_;
};

DenseSquare operator*(const DenseSquare& a, const DenseSquare& b);
DenseSquare operator+(const DenseSquare& a, const DenseSquare& b);
DenseSquare operator-(const DenseSquare& a, const DenseSquare& b);
DenseSquare operator*(int s, const DenseSquare& a);
DenseSquare transpose(const DenseSquare& a);
DenseSquare kronecker(const DenseSquare& a, const DenseSquare& b);

/// Symmetric table of lambda_{j,k} in {-1, +1} for j != k.
class LambdaTable {
public:
    explicit LambdaTable(std::size_t n = 0);
    std::size_t size() const { return n_; }
    int at(std::size_t j, std::size_t k) const;
    void set(std::size_t j, std::size_t k, int value);
    bool operator==(const LambdaTable&) const = default;

private:
    std::size_t n_;
    std::vector<int> values_;
};

/// The 2^m indices whose base-4 digits all lie in {0, 1}.
std::vector<std::uint32_t> canonical_transversal(int m);

struct ACheck {
    bool ok = false;
    LambdaTable lambdas;
    std::string failure;
};

/// Disjoint supports, +-1 sum, orthogonality, and
/// A_j A_k^T + lambda_{j,k} A_k A_j^T = 0 for every pair.
ACheck check_A_conditions(std::span<const SignedPerm> as);

struct BCheck {
    bool ok = false;
    std::string failure;
};

/// B_j B_k^T - lambda_{j,k} B_k B_j^T = 0 and sum_k B_k B_k^T = n b I.
BCheck check_B_conditions(std::span<const DenseSquare> bs, const LambdaTable& lambdas);

/// sum_k A_k (x) B_k with no entry restriction.
DenseSquare kronecker_sum(std::span<const SignedPerm> as, std::span<const DenseSquare> bs);

struct AssembleResult {
    std::optional<DenseSquare> h;
    std::string failure;
};

/// kronecker_sum, failing when an entry lies outside {-1, 1}.
AssembleResult assemble_H(std::span<const SignedPerm> as, std::span<const DenseSquare> bs);

/// H H^T = order * I. Throws std::invalid_argument when an entry is not +-1.
bool is_hadamard(const DenseSquare& h);

/// ceil(q/2) + 1 when q mod 8 is 2, 3 or 4, otherwise ceil(q/2).
int big_M(int q);

enum class BSearchStatus { found, absent_exhaustive, not_found_in_budget };

struct BSearchOutcome {
    BSearchStatus status = BSearchStatus::not_found_in_budget;
    std::vector<DenseSquare> bs;
    bool exhaustive = false;
    std::uint64_t steps = 0;
};

/// Largest n * b * b searched exhaustively.
inline constexpr std::size_t kExhaustiveBits = 24;

/**
 * Looks for n matrices of order b with entries +-1 satisfying
 * check_B_conditions. Exhaustive over all sign patterns when n * b^2 <= 24,
 * otherwise seeded hill-climbing with restarts.
 */
BSearchOutcome search_B(std::size_t n, std::size_t b, const LambdaTable& lambdas, std::uint64_t budget,
                        std::uint64_t seed = 1);

const char* to_string(BSearchStatus status);

/// Rows of space-separated +1 / -1 (0 for zero entries).
void write_matrix_text(std::ostream& os, const DenseSquare& a);

nlohmann::json witness_json(std::span<const std::uint32_t> a_indices, std::span<const DenseSquare> bs,
                            const DenseSquare& h);

} // namespace twinbent
