#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "twinbent/graphs.hpp"
#include "twinbent/monomial.hpp"

namespace twinbent {

/// Hurwitz-Radon function: rho(2^(4d+c)) = 2^c + 8d with 0 <= c < 4.
/// Throws std::invalid_argument unless n is a power of two.
int rho(std::uint64_t n);

/// Every member skew and every distinct pair anticommuting.
/// Throws std::invalid_argument on order mismatch.
bool is_hr_family(std::span<const SignedPerm> family);

struct CliqueOptions {
    std::uint64_t node_budget = kDefaultNodeBudget;
    unsigned threads = 1;
};

struct CliqueReport {
    std::string graph_id;
    /// Sorted ascending.
    std::vector<std::uint32_t> clique;
    /// Branch and bound completed, so clique.size() is the clique number.
    bool exact = false;
    /// Greedy-colouring bound on the whole graph.
    std::optional<std::uint32_t> upper_bound_used;
    std::uint64_t nodes = 0;
};

/**
 * Exact maximum clique by branch and bound with greedy sequential colouring
 * bounds over a degeneracy vertex order.
 *
 * When the search completes the result is the lexicographically smallest
 * maximum clique, independent of options.threads. When the budget runs out
 * the best clique found so far is returned with exact = false. Throws
 * std::logic_error if the returned set is not a clique of g.
 */
CliqueReport max_clique(const LabeledGraph& g, const CliqueOptions& options = {}, std::string graph_id = {});

bool is_clique(const LabeledGraph& g, std::span<const std::uint32_t> vertices);

/// The 2^m indices whose base-4 digits all lie in {0, 2}; a clique of Cay(tau_m).
std::vector<std::uint32_t> blue_clique(int m);

/// {v XOR c : v in clique}, sorted.
std::vector<std::uint32_t> translate_clique(std::span<const std::uint32_t> clique, std::uint32_t c);

/**
 * Maps a clique of Cay(sigma_m) to the Hurwitz-Radon family
 * [gamma(m, v) : v in clique, v != 0]. A clique without vertex 0 is first
 * translated by its smallest member. Throws std::invalid_argument if the
 * input is not a clique of Cay(sigma_m).
 */
std::vector<SignedPerm> red_clique_to_hr(std::span<const std::uint32_t> clique, int m);

struct HrFamilySearch {
    std::vector<std::uint32_t> members;
    bool exact = false;
};

/// Largest Hurwitz-Radon family among the skew positive basis matrices of order 2^m.
HrFamilySearch max_hr_family(int m, const CliqueOptions& options = {});

struct NonIsoCertificate {
    int m = 0;
    bool applicable = false;
    int rho = 0;
    std::uint64_t blue_size = 0;
    std::vector<std::uint32_t> blue_clique;
    bool blue_verified = false;
    /// Clique number of Cay(sigma_m): exact when searched to completion,
    /// otherwise the analytic bound rho(2^m).
    std::uint64_t red_omega = 0;
    bool red_omega_exact = false;
    std::optional<std::vector<std::uint32_t>> red_clique;
    std::optional<std::size_t> hr_family_size;
    std::string note;
    std::string conclusion;
};

struct CertificateOptions {
    CliqueOptions clique;
    /// Run exact max clique on Cay(sigma_m). Defaults to on for m <= 4.
    std::optional<bool> exact_red_omega;
};

NonIsoCertificate nonisomorphism_certificate(int m, const CertificateOptions& options = {});

nlohmann::json to_json(const CliqueReport& report);
nlohmann::json to_json(const NonIsoCertificate& cert);

} // namespace twinbent
