#include "twinbent/monomial.hpp"

#include <stdexcept>
#include <string>

namespace twinbent {

SignedPerm::SignedPerm(std::vector<std::uint32_t> col_to_row, std::vector<std::int8_t> sign)
    : col_to_row_(std::move(col_to_row)), sign_(std::move(sign))
{
    const std::size_t n = col_to_row_.size();
    if (n == 0) throw std::invalid_argument("SignedPerm: order must be at least 1");
    if (sign_.size() != n) throw std::invalid_argument("SignedPerm: sign length differs from order");
    std::vector<bool> seen(n, false);
    for (std::size_t c = 0; c < n; ++c) {
        const auto r = col_to_row_[c];
        if (r >= n || seen[r])
            throw std::invalid_argument("SignedPerm: col_to_row is not a permutation");
        seen[r] = true;
        if (sign_[c] != 1 && sign_[c] != -1)
            throw std::invalid_argument("SignedPerm: sign entries must be +1 or -1");
    }
}

SignedPerm SignedPerm::identity(std::size_t n)
{
    std::vector<std::uint32_t> ctr(n);
    for (std::size_t c = 0; c < n; ++c) ctr[c] = static_cast<std::uint32_t>(c);
    return SignedPerm(std::move(ctr), std::vector<std::int8_t>(n, 1));
}

int SignedPerm::entry(std::size_t row, std::size_t col) const
{
    if (row >= order() || col >= order()) throw std::out_of_range("SignedPerm::entry: index out of range");
    return col_to_row_[col] == row ? sign_[col] : 0;
}

bool SignedPerm::is_permutation_identity() const
{
    for (std::size_t c = 0; c < order(); ++c)
        if (col_to_row_[c] != c) return false;
    return true;
}

DenseGrid SignedPerm::dense() const
{
    DenseGrid grid(order(), std::vector<int>(order(), 0));
    for (std::size_t c = 0; c < order(); ++c) grid[col_to_row_[c]][c] = sign_[c];
    return grid;
}

std::vector<Entry> SignedPerm::triples() const
{
    std::vector<Entry> out(order());
    // Row-major: row r holds the column whose image is r.
    for (std::size_t c = 0; c < order(); ++c) out[col_to_row_[c]] = Entry{col_to_row_[c], c, sign_[c]};
    return out;
}

SignedPerm SignedPerm::operator-() const
{
    auto s = sign_;
    for (auto& v : s) v = static_cast<std::int8_t>(-v);
    return SignedPerm(col_to_row_, std::move(s));
}

SignedPerm identity(std::size_t n) { return SignedPerm::identity(n); }

SignedPerm e1() { return SignedPerm({1, 0}, {1, -1}); }

SignedPerm e2() { return SignedPerm({1, 0}, {1, 1}); }

SignedPerm multiply(const SignedPerm& a, const SignedPerm& b)
{
    if (a.order() != b.order())
        throw std::invalid_argument("multiply: order mismatch (" + std::to_string(a.order()) + " vs "
                                    + std::to_string(b.order()) + ")");
    const std::size_t n = a.order();
    std::vector<std::uint32_t> ctr(n);
    std::vector<std::int8_t> sign(n);
    const auto actr = a.col_to_row();
    const auto bctr = b.col_to_row();
    for (std::size_t c = 0; c < n; ++c) {
        const auto mid = bctr[c];
        ctr[c] = actr[mid];
        sign[c] = static_cast<std::int8_t>(b.sign()[c] * a.sign()[mid]);
    }
    return SignedPerm(std::move(ctr), std::move(sign));
}

SignedPerm transpose(const SignedPerm& a)
{
    const std::size_t n = a.order();
    std::vector<std::uint32_t> ctr(n);
    std::vector<std::int8_t> sign(n);
    for (std::size_t c = 0; c < n; ++c) {
        const auto r = a.col_to_row()[c];
        ctr[r] = static_cast<std::uint32_t>(c);
        sign[r] = a.sign()[c];
    }
    return SignedPerm(std::move(ctr), std::move(sign));
}

SignedPerm kronecker(const SignedPerm& a, const SignedPerm& b)
{
    const std::size_t na = a.order();
    const std::size_t nb = b.order();
    std::vector<std::uint32_t> ctr(na * nb);
    std::vector<std::int8_t> sign(na * nb);
    for (std::size_t ac = 0; ac < na; ++ac) {
        for (std::size_t bc = 0; bc < nb; ++bc) {
            const std::size_t c = ac * nb + bc;
            ctr[c] = static_cast<std::uint32_t>(a.col_to_row()[ac] * nb + b.col_to_row()[bc]);
            sign[c] = static_cast<std::int8_t>(a.sign()[ac] * b.sign()[bc]);
        }
    }
    return SignedPerm(std::move(ctr), std::move(sign));
}

Classification classify(const SignedPerm& a)
{
    const auto t = transpose(a);
    const Shape shape = a.is_permutation_identity() ? Shape::diagonal : Shape::non_diagonal;
    if (t == a) return {Symmetry::symmetric, shape};
    if (t == -a) return {Symmetry::skew, shape};
    throw std::domain_error("classify: matrix is neither symmetric nor skew");
}

bool disjoint_support(const SignedPerm& a, const SignedPerm& b)
{
    if (a.order() != b.order()) throw std::invalid_argument("disjoint_support: order mismatch");
    for (std::size_t c = 0; c < a.order(); ++c)
        if (a.col_to_row()[c] == b.col_to_row()[c]) return false;
    return true;
}

PairRelation pair_relation(const SignedPerm& a, const SignedPerm& b)
{
    if (a.order() != b.order()) throw std::invalid_argument("pair_relation: order mismatch");

    const auto product_kind = classify(multiply(a, transpose(b))).symmetry;
    const auto ab = multiply(a, b);
    const auto ba = multiply(b, a);
    Commutation commutation;
    if (ab == ba)
        commutation = Commutation::commute;
    else if (ab == -ba)
        commutation = Commutation::anticommute;
    else
        throw std::domain_error("pair_relation: matrices neither commute nor anticommute");

    return {product_kind == Symmetry::symmetric ? Amicability::amicable : Amicability::anti_amicable,
            disjoint_support(a, b) ? Support::disjoint : Support::overlapping, commutation};
}

} // namespace twinbent
