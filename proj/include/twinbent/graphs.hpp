#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "twinbent/bent.hpp"
#include "twinbent/bitset.hpp"

namespace twinbent {

enum class EdgeColor : int { red = -1, blue = 1 };

struct Edge {
    std::uint32_t u;
    std::uint32_t v;
    std::optional<EdgeColor> color;
    bool operator==(const Edge&) const = default;
};

/**
 * Simple undirected graph stored as packed adjacency rows, with an optional
 * second bit plane marking red edges (an edge with a clear red bit is blue).
 */
class LabeledGraph {
public:
    explicit LabeledGraph(std::size_t num_vertices, bool colored = false);

    std::size_t num_vertices() const { return rows_.size(); }
    std::size_t num_edges() const;
    bool colored() const { return colored_; }

    /// Uncolored graphs only. Throws std::invalid_argument on self-loops.
    void add_edge(std::uint32_t u, std::uint32_t v);
    /// Colored graphs only.
    void add_edge(std::uint32_t u, std::uint32_t v, EdgeColor color);

    bool adjacent(std::uint32_t u, std::uint32_t v) const { return rows_[u].test(v); }
    /// nullopt for non-edges and for edges of an uncolored graph.
    std::optional<EdgeColor> color(std::uint32_t u, std::uint32_t v) const;

    const Bitset& row(std::uint32_t u) const { return rows_[u]; }
    /// Red neighbours of u; empty for uncolored graphs.
    const Bitset& red_row(std::uint32_t u) const { return red_[u]; }
    std::size_t degree(std::uint32_t u) const { return rows_[u].count(); }

    /// Edges u < v in lexicographic order.
    std::vector<Edge> edges() const;

    /// Uncolored graph on the same vertices keeping only edges of one color.
    LabeledGraph subgraph_by_color(EdgeColor color) const;
    /// Uncolored copy of the support graph.
    LabeledGraph uncolored() const;
    /// Colored copy with red and blue exchanged.
    LabeledGraph swap_colors() const;
    /// Induced subgraph; vertex k of the result is vertices[k].
    LabeledGraph induced(std::span<const std::uint32_t> vertices) const;

    bool operator==(const LabeledGraph&) const = default;

private:
    bool colored_;
    std::vector<Bitset> rows_;
    std::vector<Bitset> red_;
};

/// Cay(f): i ~ j iff f(i XOR j) = 1. Throws std::invalid_argument when f(0) != 0.
LabeledGraph cayley_graph(const BoolFn& f);

/// Two-edge-colored graph on the positive basis: red for disjoint support and
/// anti-amicable pairs, blue for disjoint support and amicable pairs.
/// Built from the matrices; supported for 1 <= m <= 4.
LabeledGraph delta_graph(int m);

struct SrgReport {
    bool ok = false;
    SrgParams params;
    std::string failure;
    std::optional<std::pair<std::uint32_t, std::uint32_t>> violating_pair;
};

/// Delta_m edge colour from the index rule: {i, j} is an edge iff i XOR j
/// has a base-4 digit in {1, 2}, and it is red iff the number of digits
/// equal to 1 in i XOR j is odd.
std::optional<EdgeColor> delta_color(std::uint32_t i, std::uint32_t j);

/// Brute-force strong regularity check on the support graph.
SrgReport check_srg(const LabeledGraph& g);

nlohmann::json to_json(const SrgReport& report);

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

enum class IsoStatus { isomorphic, non_isomorphic, inconclusive };

struct IsoCertificate {
    IsoStatus status = IsoStatus::inconclusive;
    /// mapping[g_vertex] = h_vertex; present only when isomorphic.
    std::vector<std::uint32_t> mapping;
    std::string witness;
    std::uint64_t nodes = 0;
};

/// A graph invariant evaluated on both inputs by the caller (e.g. clique number).
struct DistinguishingInvariant {
    std::string name;
    std::uint64_t value_g;
    std::uint64_t value_h;
};

struct IsoOptions {
    bool respect_colors = false;
    std::uint64_t node_budget = kDefaultNodeBudget;
    std::optional<DistinguishingInvariant> invariant;
};

/**
 * Backtracking search with joint colour refinement of both graphs.
 *
 * Non-isomorphism is reported only from a differing invariant or an
 * exhausted search; budget exhaustion yields inconclusive.
 */
IsoCertificate find_isomorphism(const LabeledGraph& g, const LabeledGraph& h, const IsoOptions& options = {});

/// Automorphism of the support graph exchanging the red and blue classes.
IsoCertificate find_color_swap_automorphism(const LabeledGraph& delta,
                                            std::uint64_t node_budget = kDefaultNodeBudget);

/// Edge-by-edge check that mapping is an isomorphism g -> h.
bool verify_isomorphism(const LabeledGraph& g, const LabeledGraph& h, std::span<const std::uint32_t> mapping,
                        bool respect_colors);

const char* to_string(IsoStatus status);
nlohmann::json to_json(const IsoCertificate& cert);

/// DIMACS "p edge" format with 1-based vertex ids.
void write_dimacs(std::ostream& os, const LabeledGraph& g);
/// {num_vertices, colored, edges: [[u, v] or [u, v, color], ...]}.
nlohmann::json graph_json(const LabeledGraph& g);

} // namespace twinbent
