#pragma once

#include <cstdint>
#include <ostream>
#include <vector>

#include "json.hpp"

namespace twinbent {

/// Boolean function on Z_2^{2m} stored as a truth table of length 4^m.
class BoolFn {
public:
    /// Throws std::invalid_argument unless table.size() == 4^m and entries are 0/1.
    BoolFn(int m, std::vector<std::uint8_t> table);

    int m() const { return m_; }
    std::size_t size() const { return table_.size(); }
    int operator[](std::uint32_t i) const { return table_[i]; }
    const std::vector<std::uint8_t>& table() const { return table_; }

    std::vector<std::uint32_t> support() const;
    std::size_t weight() const;

    bool operator==(const BoolFn&) const = default;

private:
    int m_;
    std::vector<std::uint8_t> table_;
};

/// 1 iff the number of base-4 digits equal to 1 is odd.
BoolFn sigma_fn(int m);
/// 1 iff some digit is 1 or 2 and the number of digits equal to 1 is even.
BoolFn tau_fn(int m);

/// 1 iff gamma(m, i) is skew.
int matrix_oracle_sigma(int m, std::uint32_t i);
/// 1 iff gamma(m, i) is symmetric and not diagonal.
int matrix_oracle_tau(int m, std::uint32_t i);

/// Exact Walsh-Hadamard spectrum, W(w) = sum_i (-1)^(f(i) + <i,w>), by the
/// in-place butterfly over the 2m bit layers.
std::vector<std::int64_t> walsh_hadamard(const BoolFn& f);

/// |W(w)| = 2^m for every w.
bool is_bent(const BoolFn& f);

struct SrgParams {
    std::uint64_t v = 0;
    std::uint64_t k = 0;
    std::uint64_t lambda = 0;
    std::uint64_t mu = 0;
    bool operator==(const SrgParams&) const = default;
};

struct DifferenceSetParams {
    std::uint64_t v = 0;
    std::uint64_t k = 0;
    std::uint64_t lambda = 0;
    std::uint64_t n = 0;
    bool operator==(const DifferenceSetParams&) const = default;
};

/// (4^m, 2^{2m-1} - 2^{m-1}, 2^{2m-2} - 2^{m-1}, same).
SrgParams srg_params(int m);
/// (4^m, 2^{2m-1} - 2^{m-1}, 2^{2m-2} - 2^{m-1}, 2^{2m-2}).
DifferenceSetParams difference_set_params(int m);

/// CSV with header "index,digits,sigma,tau".
void write_truth_table_csv(std::ostream& os, int m);

nlohmann::json spectrum_json(const BoolFn& f, const std::vector<std::int64_t>& spectrum);

} // namespace twinbent
