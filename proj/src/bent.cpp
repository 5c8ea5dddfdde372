#include "twinbent/bent.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "twinbent/clifford.hpp"

namespace twinbent {

BoolFn::BoolFn(int m, std::vector<std::uint8_t> table) : m_(m), table_(std::move(table))
{
    require_half_rank(m);
    if (table_.size() != basis_size(m))
        throw std::invalid_argument("BoolFn: truth table length must be 4^m");
    for (auto v : table_)
        if (v > 1) throw std::invalid_argument("BoolFn: truth table entries must be 0 or 1");
}

std::vector<std::uint32_t> BoolFn::support() const
{
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 0; i < table_.size(); ++i)
        if (table_[i]) out.push_back(i);
    return out;
}

std::size_t BoolFn::weight() const
{
    std::size_t w = 0;
    for (auto v : table_) w += v;
    return w;
}

BoolFn sigma_fn(int m)
{
    require_half_rank(m);
    std::vector<std::uint8_t> table(basis_size(m));
    for (std::uint32_t i = 0; i < table.size(); ++i) table[i] = static_cast<std::uint8_t>(count_digit_one(i) & 1);
    return BoolFn(m, std::move(table));
}

BoolFn tau_fn(int m)
{
    require_half_rank(m);
    std::vector<std::uint8_t> table(basis_size(m));
    for (std::uint32_t i = 0; i < table.size(); ++i)
        table[i] = static_cast<std::uint8_t>(count_digit_one_or_two(i) > 0 && (count_digit_one(i) & 1) == 0);
    return BoolFn(m, std::move(table));
}

int matrix_oracle_sigma(int m, std::uint32_t i)
{
    return classify(gamma(m, i)).symmetry == Symmetry::skew ? 1 : 0;
}

int matrix_oracle_tau(int m, std::uint32_t i)
{
    const auto c = classify(gamma(m, i));
    return c.symmetry == Symmetry::symmetric && c.shape == Shape::non_diagonal ? 1 : 0;
}

std::vector<std::int64_t> walsh_hadamard(const BoolFn& f)
{
    std::vector<std::int64_t> a(f.size());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = f.table()[i] ? -1 : 1;
    for (std::size_t h = 1; h < a.size(); h <<= 1) {
        for (std::size_t i = 0; i < a.size(); i += h << 1) {
            for (std::size_t j = i; j < i + h; ++j) {
                const auto x = a[j];
                const auto y = a[j + h];
                a[j] = x + y;
                a[j + h] = x - y;
            }
        }
    }
    return a;
}

bool is_bent(const BoolFn& f)
{
    const std::int64_t target = std::int64_t{1} << f.m();
    for (auto w : walsh_hadamard(f))
        if (std::llabs(w) != target) return false;
    return true;
}

SrgParams srg_params(int m)
{
    if (m < 1) throw std::out_of_range("srg_params: m must be >= 1");
    const auto d = difference_set_params(m);
    return {d.v, d.k, d.lambda, d.lambda};
}

DifferenceSetParams difference_set_params(int m)
{
    if (m < 1 || m > 31) throw std::out_of_range("difference_set_params: m out of range");
    const std::uint64_t one = 1;
    const auto u = static_cast<unsigned>(m);
    return {one << (2 * u), (one << (2 * u - 1)) - (one << (u - 1)), (one << (2 * u - 2)) - (one << (u - 1)),
            one << (2 * u - 2)};
}

void write_truth_table_csv(std::ostream& os, int m)
{
    const auto s = sigma_fn(m);
    const auto t = tau_fn(m);
    os << "index,digits,sigma,tau\n";
    for (std::uint32_t i = 0; i < s.size(); ++i)
        os << i << ',' << BasisIndex(m, i).digit_string() << ',' << s[i] << ',' << t[i] << '\n';
}

nlohmann::json spectrum_json(const BoolFn& f, const std::vector<std::int64_t>& spectrum)
{
    std::int64_t max_abs = 0;
    for (auto w : spectrum) max_abs = std::max(max_abs, w < 0 ? -w : w);
    return {{"m", f.m()}, {"spectrum", spectrum}, {"spectrum_abs", max_abs}, {"bent", is_bent(f)}};
}

} // namespace twinbent
