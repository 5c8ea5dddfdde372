#include "twinbent/hadamard.hpp"

#include <cstdlib>
#include <random>
#include <stdexcept>

#include "twinbent/clifford.hpp"

namespace twinbent {

DenseSquare::DenseSquare(std::size_t order, int fill) : order_(order), entries_(order * order, fill) {}

DenseSquare DenseSquare::from_rows(const DenseGrid& rows)
{
    DenseSquare out(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != rows.size()) throw std::invalid_argument("DenseSquare: rows do not form a square");
        for (std::size_t c = 0; c < rows.size(); ++c) out.at(r, c) = rows[r][c];
    }
    return out;
}

DenseSquare DenseSquare::from_signed_perm(const SignedPerm& a) { return from_rows(a.dense()); }

DenseGrid DenseSquare::rows() const
{
    DenseGrid out(order_, std::vector<int>(order_));
    for (std::size_t r = 0; r < order_; ++r)
        for (std::size_t c = 0; c < order_; ++c) out[r][c] = at(r, c);
    return out;
}

bool DenseSquare::all_plus_minus_one() const
{
    for (auto v : entries_)
        if (v != 1 && v != -1) return false;
    return true;
}

namespace {

void require_same_order(const DenseSquare& a, const DenseSquare& b, const char* what)
{
    if (a.order() != b.order()) throw std::invalid_argument(std::string(what) + ": order mismatch");
}

bool is_zero(const DenseSquare& a)
{
    for (auto v : a.entries())
        if (v != 0) return false;
    return true;
}

DenseSquare scalar_identity(std::size_t order, int s)
{
    DenseSquare out(order);
    for (std::size_t k = 0; k < order; ++k) out.at(k, k) = s;
    return out;
}

std::string pair_name(std::size_t j, std::size_t k)
{
    return "(" + std::to_string(j + 1) + "," + std::to_string(k + 1) + ")";
}

} // namespace

DenseSquare operator*(const DenseSquare& a, const DenseSquare& b)
{
    require_same_order(a, b, "multiply");
    const std::size_t n = a.order();
    DenseSquare out(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k < n; ++k) {
            const int x = a.at(r, k);
            if (x == 0) continue;
            for (std::size_t c = 0; c < n; ++c) out.at(r, c) += x * b.at(k, c);
        }
    return out;
}

DenseSquare operator+(const DenseSquare& a, const DenseSquare& b)
{
    require_same_order(a, b, "add");
    DenseSquare out = a;
    for (std::size_t r = 0; r < a.order(); ++r)
        for (std::size_t c = 0; c < a.order(); ++c) out.at(r, c) += b.at(r, c);
    return out;
}

DenseSquare operator-(const DenseSquare& a, const DenseSquare& b) { return a + (-1) * b; }

DenseSquare operator*(int s, const DenseSquare& a)
{
    DenseSquare out = a;
    for (std::size_t r = 0; r < a.order(); ++r)
        for (std::size_t c = 0; c < a.order(); ++c) out.at(r, c) *= s;
    return out;
}

DenseSquare transpose(const DenseSquare& a)
{
    DenseSquare out(a.order());
    for (std::size_t r = 0; r < a.order(); ++r)
        for (std::size_t c = 0; c < a.order(); ++c) out.at(c, r) = a.at(r, c);
    return out;
}

DenseSquare kronecker(const DenseSquare& a, const DenseSquare& b)
{
    const std::size_t na = a.order();
    const std::size_t nb = b.order();
    DenseSquare out(na * nb);
    for (std::size_t ar = 0; ar < na; ++ar)
        for (std::size_t ac = 0; ac < na; ++ac) {
            const int x = a.at(ar, ac);
            if (x == 0) continue;
            for (std::size_t br = 0; br < nb; ++br)
                for (std::size_t bc = 0; bc < nb; ++bc) out.at(ar * nb + br, ac * nb + bc) = x * b.at(br, bc);
        }
    return out;
}

LambdaTable::LambdaTable(std::size_t n) : n_(n), values_(n * n, 0) {}

int LambdaTable::at(std::size_t j, std::size_t k) const
{
    if (j >= n_ || k >= n_ || j == k) throw std::out_of_range("LambdaTable: invalid pair");
    return values_[j * n_ + k];
}

void LambdaTable::set(std::size_t j, std::size_t k, int value)
{
    if (j >= n_ || k >= n_ || j == k) throw std::out_of_range("LambdaTable: invalid pair");
    if (value != 1 && value != -1) throw std::invalid_argument("LambdaTable: value must be +1 or -1");
    values_[j * n_ + k] = value;
    values_[k * n_ + j] = value;
}

std::vector<std::uint32_t> canonical_transversal(int m)
{
    require_half_rank(m);
    std::vector<std::uint32_t> out;
    for (std::uint32_t k = 0; k < (1u << m); ++k) {
        std::uint32_t v = 0;
        for (int d = 0; d < m; ++d)
            if ((k >> d) & 1u) v |= 1u << (2 * d);
        out.push_back(v);
    }
    return out;
}

ACheck check_A_conditions(std::span<const SignedPerm> as)
{
    ACheck result;
    const std::size_t n = as.size();
    result.lambdas = LambdaTable(n);
    if (n == 0) {
        result.failure = "empty A tuple";
        return result;
    }
    for (const auto& a : as) {
        if (a.order() != n) {
            result.failure = "A matrices must have order n = " + std::to_string(n);
            return result;
        }
    }

    std::vector<DenseSquare> dense;
    for (const auto& a : as) dense.push_back(DenseSquare::from_signed_perm(a));

    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k)
            for (std::size_t e = 0; e < n * n; ++e)
                if (dense[j].entries()[e] * dense[k].entries()[e] != 0) {
                    result.failure = "entrywise product nonzero for pair " + pair_name(j, k);
                    return result;
                }

    DenseSquare sum(n);
    for (const auto& d : dense) sum = sum + d;
    if (!sum.all_plus_minus_one()) {
        result.failure = "sum of A matrices has an entry outside {-1,1}";
        return result;
    }

    const auto id = scalar_identity(n, 1);
    for (std::size_t k = 0; k < n; ++k) {
        if (dense[k] * transpose(dense[k]) != id) {
            result.failure = "A_" + std::to_string(k + 1) + " is not orthogonal";
            return result;
        }
    }

    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = j + 1; k < n; ++k) {
            const auto p = dense[j] * transpose(dense[k]);
            const auto q = dense[k] * transpose(dense[j]);
            if (is_zero(p + q))
                result.lambdas.set(j, k, 1);
            else if (is_zero(p - q))
                result.lambdas.set(j, k, -1);
            else {
                result.failure = "no lambda in {-1,1} for pair " + pair_name(j, k);
                return result;
            }
        }
    }
    result.ok = true;
    return result;
}

BCheck check_B_conditions(std::span<const DenseSquare> bs, const LambdaTable& lambdas)
{
    BCheck result;
    const std::size_t n = bs.size();
    if (n == 0) {
        result.failure = "empty B tuple";
        return result;
    }
    if (lambdas.size() != n) {
        result.failure = "lambda table size differs from the number of B matrices";
        return result;
    }
    const std::size_t b = bs.front().order();
    for (std::size_t k = 0; k < n; ++k) {
        if (bs[k].order() != b) {
            result.failure = "B matrices have different orders";
            return result;
        }
        if (!bs[k].all_plus_minus_one()) {
            result.failure = "B_" + std::to_string(k + 1) + " has an entry outside {-1,1}";
            return result;
        }
    }

    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            if (j == k) continue;
            const auto lhs = bs[j] * transpose(bs[k]) - lambdas.at(j, k) * (bs[k] * transpose(bs[j]));
            if (!is_zero(lhs)) {
                result.failure = "B_j B_k^T - lambda B_k B_j^T != 0 for pair " + pair_name(j, k);
                return result;
            }
        }
    }

    DenseSquare sum(b);
    for (const auto& m : bs) sum = sum + m * transpose(m);
    if (sum != scalar_identity(b, static_cast<int>(n * b))) {
        result.failure = "sum of B_k B_k^T != n b I";
        return result;
    }
    result.ok = true;
    return result;
}

DenseSquare kronecker_sum(std::span<const SignedPerm> as, std::span<const DenseSquare> bs)
{
    if (as.size() != bs.size() || as.empty())
        throw std::invalid_argument("kronecker_sum: need equally many A and B matrices");
    DenseSquare h = kronecker(DenseSquare::from_signed_perm(as[0]), bs[0]);
    for (std::size_t k = 1; k < as.size(); ++k) h = h + kronecker(DenseSquare::from_signed_perm(as[k]), bs[k]);
    return h;
}

AssembleResult assemble_H(std::span<const SignedPerm> as, std::span<const DenseSquare> bs)
{
    AssembleResult result;
    auto h = kronecker_sum(as, bs);
    for (std::size_t r = 0; r < h.order(); ++r)
        for (std::size_t c = 0; c < h.order(); ++c)
            if (h.at(r, c) != 1 && h.at(r, c) != -1) {
                result.failure = "H entry (" + std::to_string(r) + "," + std::to_string(c) + ") = "
                                 + std::to_string(h.at(r, c)) + " is outside {-1,1}";
                return result;
            }
    result.h = std::move(h);
    return result;
}

bool is_hadamard(const DenseSquare& h)
{
    if (!h.all_plus_minus_one()) throw std::invalid_argument("is_hadamard: entries must be +-1");
    return h * transpose(h) == scalar_identity(h.order(), static_cast<int>(h.order()));
}

int big_M(int q)
{
    if (q < 1) throw std::invalid_argument("big_M: q must be positive");
    const int half = (q + 1) / 2;
    const int r = q % 8;
    return (r == 2 || r == 3 || r == 4) ? half + 1 : half;
}

namespace {

DenseSquare matrix_from_bits(std::size_t b, std::uint64_t bits)
{
    DenseSquare out(b);
    for (std::size_t e = 0; e < b * b; ++e) out.at(e / b, e % b) = ((bits >> e) & 1u) ? -1 : 1;
    return out;
}

bool pair_ok(const DenseSquare& bj, const DenseSquare& bk, int lambda)
{
    return is_zero(bj * transpose(bk) - lambda * (bk * transpose(bj)));
}

struct StepBudget {};

class ExhaustiveB {
public:
    ExhaustiveB(std::size_t n, std::size_t b, const LambdaTable& lambdas, std::uint64_t budget)
        : n_(n), b_(b), lambdas_(lambdas), budget_(budget)
    {
    }

    bool run(std::vector<DenseSquare>& chosen)
    {
        if (chosen.size() == n_) return check_B_conditions(chosen, lambdas_).ok;
        const std::uint64_t patterns = std::uint64_t{1} << (b_ * b_);
        for (std::uint64_t bits = 0; bits < patterns; ++bits) {
            if (++steps_ > budget_) throw StepBudget{};
            auto candidate = matrix_from_bits(b_, bits);
            bool ok = true;
            for (std::size_t j = 0; j < chosen.size() && ok; ++j)
                ok = pair_ok(chosen[j], candidate, lambdas_.at(j, chosen.size()));
            if (!ok) continue;
            chosen.push_back(std::move(candidate));
            if (run(chosen)) return true;
            chosen.pop_back();
        }
        return false;
    }

    std::uint64_t steps() const { return steps_; }

private:
    std::size_t n_;
    std::size_t b_;
    const LambdaTable& lambdas_;
    std::uint64_t budget_;
    std::uint64_t steps_ = 0;
};

long violation(const std::vector<DenseSquare>& bs, const LambdaTable& lambdas)
{
    const std::size_t n = bs.size();
    const std::size_t b = bs.front().order();
    long total = 0;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k)
            for (auto v : (bs[j] * transpose(bs[k]) - lambdas.at(j, k) * (bs[k] * transpose(bs[j]))).entries())
                total += std::labs(v);
    DenseSquare sum(b);
    for (const auto& m : bs) sum = sum + m * transpose(m);
    for (auto v : (sum - scalar_identity(b, static_cast<int>(n * b))).entries()) total += std::labs(v);
    return total;
}

} // namespace

BSearchOutcome search_B(std::size_t n, std::size_t b, const LambdaTable& lambdas, std::uint64_t budget,
                        std::uint64_t seed)
{
    if (n == 0 || b == 0) throw std::invalid_argument("search_B: n and b must be positive");
    if (lambdas.size() != n) throw std::invalid_argument("search_B: lambda table size differs from n");

    BSearchOutcome out;
    if (n * b * b <= kExhaustiveBits) {
        ExhaustiveB search(n, b, lambdas, budget);
        std::vector<DenseSquare> chosen;
        try {
            const bool found = search.run(chosen);
            out.exhaustive = true;
            out.status = found ? BSearchStatus::found : BSearchStatus::absent_exhaustive;
            if (found) out.bs = std::move(chosen);
        } catch (const StepBudget&) {
            out.status = BSearchStatus::not_found_in_budget;
        }
        out.steps = search.steps();
        return out;
    }

    // Hill-climbing on the total violation with seeded random restarts.
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> coin(0, 1);
    const std::size_t cells = n * b * b;
    while (out.steps < budget) {
        std::vector<DenseSquare> bs(n, DenseSquare(b));
        for (auto& m : bs)
            for (std::size_t e = 0; e < b * b; ++e) m.at(e / b, e % b) = coin(rng) ? 1 : -1;
        long cost = violation(bs, lambdas);
        ++out.steps;
        while (cost > 0 && out.steps < budget) {
            long best_cost = cost;
            std::size_t best_cell = cells;
            for (std::size_t cell = 0; cell < cells && out.steps < budget; ++cell) {
                auto& entry = bs[cell / (b * b)].at((cell % (b * b)) / b, cell % b);
                entry = -entry;
                const long c = violation(bs, lambdas);
                ++out.steps;
                entry = -entry;
                if (c < best_cost) {
                    best_cost = c;
                    best_cell = cell;
                }
            }
            if (best_cell == cells) break;
            auto& entry = bs[best_cell / (b * b)].at((best_cell % (b * b)) / b, best_cell % b);
            entry = -entry;
            cost = best_cost;
        }
        if (cost == 0 && check_B_conditions(bs, lambdas).ok) {
            out.status = BSearchStatus::found;
            out.bs = std::move(bs);
            return out;
        }
    }
    out.status = BSearchStatus::not_found_in_budget;
    return out;
}

const char* to_string(BSearchStatus status)
{
    switch (status) {
    case BSearchStatus::found: return "found";
    case BSearchStatus::absent_exhaustive: return "absent (exhaustive)";
    case BSearchStatus::not_found_in_budget: return "none found within budget";
    }
    return "unknown";
}

void write_matrix_text(std::ostream& os, const DenseSquare& a)
{
    for (std::size_t r = 0; r < a.order(); ++r) {
        for (std::size_t c = 0; c < a.order(); ++c) {
            if (c) os << ' ';
            const int v = a.at(r, c);
            os << (v > 0 ? "+" : "") << v;
        }
        os << '\n';
    }
}

nlohmann::json witness_json(std::span<const std::uint32_t> a_indices, std::span<const DenseSquare> bs,
                            const DenseSquare& h)
{
    auto b_matrices = nlohmann::json::array();
    for (const auto& m : bs) b_matrices.push_back(m.rows());
    return {{"n", a_indices.size()},
            {"b", bs.empty() ? 0 : bs.front().order()},
            {"A_indices", std::vector<std::uint32_t>(a_indices.begin(), a_indices.end())},
            {"B_matrices", std::move(b_matrices)},
            {"H", h.rows()}};
}

} // namespace twinbent
