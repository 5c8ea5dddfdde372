#include "twinbent/clifford.hpp"

#include <bit>
#include <stdexcept>

namespace twinbent {

namespace {

constexpr std::uint32_t kLowBits = 0x55555555u;

const SignedPerm& factor(int digit)
{
    static const SignedPerm factors[4] = {identity(2), e1(), e2(), multiply(e1(), e2())};
    return factors[digit];
}

} // namespace

void require_half_rank(int m, int max_m)
{
    if (m < 1 || m > max_m)
        throw std::out_of_range("half-rank m = " + std::to_string(m) + " outside supported range 1.."
                                + std::to_string(max_m));
}

BasisIndex::BasisIndex(int m, std::uint32_t value) : m_(m), value_(value)
{
    require_half_rank(m);
    if (value >= basis_size(m))
        throw std::out_of_range("basis index " + std::to_string(value) + " out of range for m = "
                                + std::to_string(m));
}

std::vector<int> BasisIndex::digits() const
{
    std::vector<int> d(static_cast<std::size_t>(m_));
    for (int k = 0; k < m_; ++k) d[static_cast<std::size_t>(k)] = static_cast<int>((value_ >> (2 * k)) & 3u);
    return d;
}

std::string BasisIndex::digit_string() const
{
    std::string s;
    for (int k = m_ - 1; k >= 0; --k) s.push_back(static_cast<char>('0' + ((value_ >> (2 * k)) & 3u)));
    return s;
}

std::vector<int> digits4(int m, std::uint32_t i) { return BasisIndex(m, i).digits(); }

SignedPerm gamma(const BasisIndex& i)
{
    const auto d = i.digits();
    SignedPerm out = factor(d.back());
    for (int k = i.m() - 2; k >= 0; --k) out = kronecker(out, factor(d[static_cast<std::size_t>(k)]));
    return out;
}

SignedPerm gamma(int m, std::uint32_t i) { return gamma(BasisIndex(m, i)); }

SignedIndex index_product(int m, std::uint32_t i, std::uint32_t j)
{
    const BasisIndex bi(m, i);
    const BasisIndex bj(m, j);
    const std::uint32_t k = i ^ j;
    const auto product = multiply(gamma(bi), gamma(bj));
    const auto target = gamma(m, k);
    if (product == target) return {1, k};
    if (product == -target) return {-1, k};
    throw std::logic_error("index_product: product left the coset of i XOR j");
}

std::vector<SignedPerm> positive_basis(int m)
{
    require_half_rank(m);
    std::vector<SignedPerm> out;
    out.reserve(basis_size(m));
    for (std::uint32_t i = 0; i < basis_size(m); ++i) out.push_back(gamma(m, i));
    return out;
}

int count_digit_one(std::uint32_t i)
{
    const std::uint32_t lo = i & kLowBits;
    const std::uint32_t hi = (i >> 1) & kLowBits;
    return std::popcount(lo & ~hi);
}

int count_digit_one_or_two(std::uint32_t i)
{
    const std::uint32_t lo = i & kLowBits;
    const std::uint32_t hi = (i >> 1) & kLowBits;
    return std::popcount(lo ^ hi);
}

bool all_digits_diagonal(std::uint32_t i) { return count_digit_one_or_two(i) == 0; }

nlohmann::json basis_json(int m)
{
    auto arr = nlohmann::json::array();
    for (std::uint32_t i = 0; i < basis_size(m); ++i) {
        const BasisIndex bi(m, i);
        const auto cls = classify(gamma(bi));
        arr.push_back({{"index", i},
                       {"digits", bi.digit_string()},
                       {"symmetry", cls.symmetry == Symmetry::symmetric ? "symmetric" : "skew"},
                       {"diagonal", cls.shape == Shape::diagonal}});
    }
    return arr;
}

} // namespace twinbent
