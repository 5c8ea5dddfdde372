#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "twinbent/graphs.hpp"

namespace twinbent {

/// One basis index per disjoint-support class; vertices[k] lies in class k.
struct Transversal {
    int m = 0;
    std::vector<std::uint32_t> vertices;
    bool operator==(const Transversal&) const = default;
};

/// Cosets of the diagonal subgroup (indices with every digit in {0, 3}),
/// ordered by smallest member, members ascending. Supported for m <= 4.
std::vector<std::vector<std::uint32_t>> support_classes(int m);

/// Class position of index i; equal for i, j iff i XOR j has only digits in {0, 3}.
std::uint32_t support_class_of(std::uint32_t i);

/// Pairwise disjoint support and one vertex per class, in class order.
bool is_valid_transversal(const Transversal& t);

/// Number of transversals, (2^m)^(2^m). Supported for m <= 3.
std::uint64_t transversal_count(int m);

/// The transversal at a lexicographic position; class 0 is the most significant choice.
Transversal transversal_at(int m, std::uint64_t index);

/// Deterministic lexicographic stream of transversals, resumable by start index.
class TransversalStream {
public:
    TransversalStream(int m, std::uint64_t start = 0, std::uint64_t cap = UINT64_MAX);

    std::optional<Transversal> next();

    std::uint64_t total() const { return total_; }
    /// Index of the next transversal to be yielded.
    std::uint64_t position() const { return position_; }
    /// True when the stream stopped at the cap before the end.
    bool cap_reached() const { return yielded_ >= cap_ && position_ < total_; }

private:
    int m_;
    std::uint64_t total_;
    std::uint64_t position_;
    std::uint64_t cap_;
    std::uint64_t yielded_ = 0;
};

/// Complete graph on the transversal's vertices, edges coloured as in Delta_m.
LabeledGraph color_profile(const Transversal& t);

enum class ComplementStatus { found, not_found, inconclusive };

struct ComplementResult {
    ComplementStatus status = ComplementStatus::inconclusive;
    std::optional<Transversal> witness;
    /// How a not_found verdict was established.
    std::string reason;
    std::uint64_t nodes = 0;
};

/**
 * Searches Delta_m for a transversal whose colour profile is the colour swap
 * of t's. A blue clique in t larger than rho(2^m) settles not_found by the
 * Hurwitz-Radon bound; otherwise the search is exhaustive within budget.
 */
ComplementResult complement_exists(const Transversal& t, std::uint64_t budget = kDefaultNodeBudget);

/// t's colour profile is isomorphic to its own colour swap.
bool is_self_complementary(const Transversal& t, std::uint64_t budget = kDefaultNodeBudget);

struct ConjectureOptions {
    bool exhaustive = false;
    std::uint64_t samples = 256;
    std::uint64_t seed = 1;
    std::uint64_t budget = kDefaultNodeBudget;
    /// Exhaustive m = 3 runs resume from and write to this file when set.
    std::optional<std::string> checkpoint;
};

struct Counterexample {
    Transversal transversal;
    std::size_t blue_clique_size = 0;
    int rho = 0;
    std::string obstruction;
};

struct ConjectureReport {
    int m = 0;
    std::string mode;
    std::uint64_t population = 0;
    std::uint64_t total = 0;
    std::uint64_t self_complementary = 0;
    std::uint64_t paired = 0;
    std::uint64_t unpaired = 0;
    std::uint64_t inconclusive = 0;
    /// Non-self-complementary isomorphism classes match their colour-swapped
    /// classes in size, so the transversals can be arranged in pairs.
    std::optional<bool> pairing_consistent;
    bool complete = false;
    std::optional<Counterexample> counterexample;
};

/**
 * m = 1, 2: exhaustive pairing over every transversal. m = 3: sampled by
 * default, exhaustive with options.exhaustive. m = 4: the all-blue
 * transversal counterexample.
 */
ConjectureReport conjecture_report(int m, const ConjectureOptions& options = {});

const char* to_string(ComplementStatus status);
nlohmann::json to_json(const Transversal& t);
nlohmann::json to_json(const ConjectureReport& report);

} // namespace twinbent
