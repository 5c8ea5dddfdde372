#include "twinbent/graphs.hpp"

#include <stdexcept>

#include "twinbent/clifford.hpp"
#include "twinbent/monomial.hpp"

namespace twinbent {

LabeledGraph::LabeledGraph(std::size_t num_vertices, bool colored)
    : colored_(colored), rows_(num_vertices, Bitset(num_vertices))
{
    if (colored_) red_.assign(num_vertices, Bitset(num_vertices));
}

std::size_t LabeledGraph::num_edges() const
{
    std::size_t twice = 0;
    for (const auto& r : rows_) twice += r.count();
    return twice / 2;
}

void LabeledGraph::add_edge(std::uint32_t u, std::uint32_t v)
{
    if (colored_) throw std::invalid_argument("add_edge: colored graph requires an edge color");
    if (u == v) throw std::invalid_argument("add_edge: self-loops are not allowed");
    rows_.at(u).set(v);
    rows_.at(v).set(u);
}

void LabeledGraph::add_edge(std::uint32_t u, std::uint32_t v, EdgeColor color)
{
    if (!colored_) throw std::invalid_argument("add_edge: uncolored graph cannot carry edge colors");
    if (u == v) throw std::invalid_argument("add_edge: self-loops are not allowed");
    rows_.at(u).set(v);
    rows_.at(v).set(u);
    if (color == EdgeColor::red) {
        red_[u].set(v);
        red_[v].set(u);
    } else {
        red_[u].reset(v);
        red_[v].reset(u);
    }
}

std::optional<EdgeColor> LabeledGraph::color(std::uint32_t u, std::uint32_t v) const
{
    if (!colored_ || !adjacent(u, v)) return std::nullopt;
    return red_[u].test(v) ? EdgeColor::red : EdgeColor::blue;
}

std::vector<Edge> LabeledGraph::edges() const
{
    std::vector<Edge> out;
    for (std::uint32_t u = 0; u < num_vertices(); ++u) {
        for (auto v = rows_[u].next(u + 1); v < num_vertices(); v = rows_[u].next(v + 1))
            out.push_back({u, static_cast<std::uint32_t>(v), color(u, static_cast<std::uint32_t>(v))});
    }
    return out;
}

LabeledGraph LabeledGraph::subgraph_by_color(EdgeColor c) const
{
    if (!colored_) throw std::invalid_argument("subgraph_by_color: graph is not colored");
    LabeledGraph out(num_vertices());
    for (std::size_t u = 0; u < num_vertices(); ++u) {
        out.rows_[u] = rows_[u];
        if (c == EdgeColor::red)
            out.rows_[u] &= red_[u];
        else
            out.rows_[u].subtract(red_[u]);
    }
    return out;
}

LabeledGraph LabeledGraph::uncolored() const
{
    LabeledGraph out(num_vertices());
    out.rows_ = rows_;
    return out;
}

LabeledGraph LabeledGraph::swap_colors() const
{
    if (!colored_) throw std::invalid_argument("swap_colors: graph is not colored");
    LabeledGraph out(*this);
    for (std::size_t u = 0; u < num_vertices(); ++u) {
        out.red_[u] = rows_[u];
        out.red_[u].subtract(red_[u]);
    }
    return out;
}

LabeledGraph LabeledGraph::induced(std::span<const std::uint32_t> vertices) const
{
    LabeledGraph out(vertices.size(), colored_);
    for (std::uint32_t a = 0; a < vertices.size(); ++a) {
        for (std::uint32_t b = a + 1; b < vertices.size(); ++b) {
            if (!adjacent(vertices[a], vertices[b])) continue;
            if (colored_)
                out.add_edge(a, b, *color(vertices[a], vertices[b]));
            else
                out.add_edge(a, b);
        }
    }
    return out;
}

LabeledGraph cayley_graph(const BoolFn& f)
{
    if (f[0] != 0) throw std::invalid_argument("cayley_graph: f(0) must be 0");
    const auto n = static_cast<std::uint32_t>(f.size());
    const auto connection = f.support();
    LabeledGraph g(n);
    for (std::uint32_t i = 0; i < n; ++i)
        for (auto s : connection)
            if (i < (i ^ s)) g.add_edge(i, i ^ s);
    return g;
}

LabeledGraph delta_graph(int m)
{
    require_half_rank(m, 4);
    const auto basis = positive_basis(m);
    const auto n = static_cast<std::uint32_t>(basis.size());
    LabeledGraph g(n, true);
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = i + 1; j < n; ++j) {
            const auto rel = pair_relation(basis[i], basis[j]);
            if (rel.support != Support::disjoint) continue;
            g.add_edge(i, j, rel.amicability == Amicability::anti_amicable ? EdgeColor::red : EdgeColor::blue);
        }
    }
    return g;
}

std::optional<EdgeColor> delta_color(std::uint32_t i, std::uint32_t j)
{
    const std::uint32_t x = i ^ j;
    if (count_digit_one_or_two(x) == 0) return std::nullopt;
    return (count_digit_one(x) & 1) ? EdgeColor::red : EdgeColor::blue;
}

SrgReport check_srg(const LabeledGraph& g)
{
    SrgReport report;
    const auto n = static_cast<std::uint32_t>(g.num_vertices());
    report.params.v = n;
    if (n == 0) {
        report.failure = "empty graph";
        return report;
    }
    const std::size_t k = g.degree(0);
    for (std::uint32_t u = 1; u < n; ++u) {
        if (g.degree(u) != k) {
            report.failure = "not regular: vertex " + std::to_string(u) + " has degree "
                             + std::to_string(g.degree(u)) + ", vertex 0 has degree " + std::to_string(k);
            report.violating_pair = std::pair{0u, u};
            return report;
        }
    }
    report.params.k = k;

    std::optional<std::size_t> lambda;
    std::optional<std::size_t> mu;
    for (std::uint32_t u = 0; u < n; ++u) {
        for (std::uint32_t v = u + 1; v < n; ++v) {
            const std::size_t common = g.row(u).and_count(g.row(v));
            auto& slot = g.adjacent(u, v) ? lambda : mu;
            if (!slot) {
                slot = common;
            } else if (*slot != common) {
                report.failure = std::string(g.adjacent(u, v) ? "adjacent" : "non-adjacent") + " pair ("
                                 + std::to_string(u) + "," + std::to_string(v) + ") has "
                                 + std::to_string(common) + " common neighbours, expected "
                                 + std::to_string(*slot);
                report.violating_pair = std::pair{u, v};
                return report;
            }
        }
    }
    report.params.lambda = lambda.value_or(0);
    report.params.mu = mu.value_or(0);
    report.ok = true;
    return report;
}

nlohmann::json to_json(const SrgReport& report)
{
    nlohmann::json j = {{"v", report.params.v},
                        {"k", report.params.k},
                        {"lambda", report.params.lambda},
                        {"mu", report.params.mu},
                        {"ok", report.ok}};
    if (!report.ok) j["failure"] = report.failure;
    return j;
}

void write_dimacs(std::ostream& os, const LabeledGraph& g)
{
    const auto edges = g.edges();
    os << "p edge " << g.num_vertices() << ' ' << edges.size() << '\n';
    for (const auto& e : edges) os << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
}

nlohmann::json graph_json(const LabeledGraph& g)
{
    auto edges = nlohmann::json::array();
    for (const auto& e : g.edges()) {
        if (e.color)
            edges.push_back({e.u, e.v, static_cast<int>(*e.color)});
        else
            edges.push_back({e.u, e.v});
    }
    return {{"num_vertices", g.num_vertices()}, {"colored", g.colored()}, {"edges", std::move(edges)}};
}

} // namespace twinbent
