#include <algorithm>
#include <map>
#include <stdexcept>

#include "twinbent/graphs.hpp"

namespace twinbent {

namespace {

struct BudgetExhausted {};

// Partition state shared by both graphs: vertex colors use one joint
// numbering so that equal ids correspond across g and h.
struct Partition {
    std::vector<std::uint32_t> g;
    std::vector<std::uint32_t> h;
    std::uint32_t num_colors = 1;
};

class IsoSearch {
public:
    IsoSearch(const LabeledGraph& g, const LabeledGraph& h, bool respect_colors, std::uint64_t budget)
        : g_(g), h_(h), colors_(respect_colors && g.colored() && h.colored()), budget_(budget)
    {
    }

    std::optional<std::vector<std::uint32_t>> run()
    {
        Partition p;
        p.g.assign(g_.num_vertices(), 0);
        p.h.assign(h_.num_vertices(), 0);
        return search(p);
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    std::uint32_t edge_type(const LabeledGraph& x, std::uint32_t u, std::uint32_t v) const
    {
        if (!colors_) return 0;
        return x.red_row(u).test(v) ? 1u : 2u;
    }

    using Signature = std::vector<std::uint32_t>;

    void signatures(const LabeledGraph& x, const std::vector<std::uint32_t>& color,
                    std::vector<Signature>& out) const
    {
        out.resize(x.num_vertices());
        for (std::uint32_t v = 0; v < x.num_vertices(); ++v) {
            auto& sig = out[v];
            sig.clear();
            x.row(v).for_each([&](std::size_t u) {
                sig.push_back(color[u] * 3 + edge_type(x, v, static_cast<std::uint32_t>(u)));
            });
            std::sort(sig.begin(), sig.end());
            sig.insert(sig.begin(), color[v]);
        }
    }

    // Colour refinement run on both graphs with a canonical joint relabeling.
    // Returns false as soon as the colour histograms of g and h differ.
    bool refine(Partition& p)
    {
        std::vector<Signature> sg;
        std::vector<Signature> sh;
        while (true) {
            signatures(g_, p.g, sg);
            signatures(h_, p.h, sh);
            std::map<Signature, std::uint32_t> ids;
            for (const auto& s : sg) ids.emplace(s, 0);
            for (const auto& s : sh) ids.emplace(s, 0);
            std::uint32_t next = 0;
            for (auto& [sig, id] : ids) id = next++;

            std::vector<std::int64_t> balance(ids.size(), 0);
            for (std::size_t v = 0; v < sg.size(); ++v) {
                p.g[v] = ids[sg[v]];
                ++balance[p.g[v]];
            }
            for (std::size_t v = 0; v < sh.size(); ++v) {
                p.h[v] = ids[sh[v]];
                --balance[p.h[v]];
            }
            for (auto b : balance)
                if (b != 0) return false;

            const bool stable = next == p.num_colors;
            p.num_colors = next;
            if (stable) return true;
        }
    }

    std::optional<std::vector<std::uint32_t>> search(Partition p)
    {
        if (++nodes_ > budget_) throw BudgetExhausted{};
        if (!refine(p)) return std::nullopt;

        const std::size_t n = p.g.size();
        std::vector<std::uint32_t> cell_size(p.num_colors, 0);
        for (auto c : p.g) ++cell_size[c];

        if (p.num_colors == n) {
            std::vector<std::uint32_t> h_of_color(n);
            for (std::uint32_t v = 0; v < n; ++v) h_of_color[p.h[v]] = v;
            std::vector<std::uint32_t> mapping(n);
            for (std::uint32_t v = 0; v < n; ++v) mapping[v] = h_of_color[p.g[v]];
            if (verify_isomorphism(g_, h_, mapping, colors_)) return mapping;
            return std::nullopt;
        }

        // Smallest non-singleton cell, ties to the lowest colour id.
        std::uint32_t target = 0;
        std::uint32_t best = UINT32_MAX;
        for (std::uint32_t c = 0; c < p.num_colors; ++c) {
            if (cell_size[c] > 1 && cell_size[c] < best) {
                best = cell_size[c];
                target = c;
            }
        }
        std::uint32_t u = 0;
        while (p.g[u] != target) ++u;

        for (std::uint32_t w = 0; w < n; ++w) {
            if (p.h[w] != target) continue;
            Partition child = p;
            child.g[u] = child.num_colors;
            child.h[w] = child.num_colors;
            ++child.num_colors;
            if (auto found = search(std::move(child))) return found;
        }
        return std::nullopt;
    }

    const LabeledGraph& g_;
    const LabeledGraph& h_;
    bool colors_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
};

} // namespace

bool verify_isomorphism(const LabeledGraph& g, const LabeledGraph& h, std::span<const std::uint32_t> mapping,
                        bool respect_colors)
{
    const std::size_t n = g.num_vertices();
    if (h.num_vertices() != n || mapping.size() != n) return false;
    std::vector<bool> hit(n, false);
    for (auto x : mapping) {
        if (x >= n || hit[x]) return false;
        hit[x] = true;
    }
    for (std::uint32_t u = 0; u < n; ++u) {
        for (std::uint32_t v = u + 1; v < n; ++v) {
            if (g.adjacent(u, v) != h.adjacent(mapping[u], mapping[v])) return false;
            if (respect_colors && g.color(u, v) != h.color(mapping[u], mapping[v])) return false;
        }
    }
    return true;
}

IsoCertificate find_isomorphism(const LabeledGraph& g, const LabeledGraph& h, const IsoOptions& options)
{
    IsoCertificate cert;
    if (g.num_vertices() != h.num_vertices()) {
        cert.status = IsoStatus::non_isomorphic;
        cert.witness = "vertex counts differ";
        return cert;
    }
    if (options.invariant && options.invariant->value_g != options.invariant->value_h) {
        cert.status = IsoStatus::non_isomorphic;
        cert.witness = options.invariant->name + " differs: " + std::to_string(options.invariant->value_g)
                       + " vs " + std::to_string(options.invariant->value_h);
        return cert;
    }
    if (g.num_edges() != h.num_edges()) {
        cert.status = IsoStatus::non_isomorphic;
        cert.witness = "edge counts differ";
        return cert;
    }

    IsoSearch search(g, h, options.respect_colors, options.node_budget);
    try {
        auto mapping = search.run();
        cert.nodes = search.nodes();
        if (mapping) {
            cert.status = IsoStatus::isomorphic;
            cert.mapping = std::move(*mapping);
        } else {
            cert.status = IsoStatus::non_isomorphic;
            cert.witness = "exhaustive search";
        }
    } catch (const BudgetExhausted&) {
        cert.nodes = search.nodes();
        cert.status = IsoStatus::inconclusive;
        cert.witness = "node budget of " + std::to_string(options.node_budget) + " exhausted";
    }
    return cert;
}

IsoCertificate find_color_swap_automorphism(const LabeledGraph& delta, std::uint64_t node_budget)
{
    if (!delta.colored()) throw std::invalid_argument("find_color_swap_automorphism: graph is not colored");
    IsoOptions options;
    options.respect_colors = true;
    options.node_budget = node_budget;
    return find_isomorphism(delta, delta.swap_colors(), options);
}

const char* to_string(IsoStatus status)
{
    switch (status) {
    case IsoStatus::isomorphic: return "isomorphic";
    case IsoStatus::non_isomorphic: return "non-isomorphic";
    case IsoStatus::inconclusive: return "inconclusive";
    }
    return "unknown";
}

nlohmann::json to_json(const IsoCertificate& cert)
{
    nlohmann::json j = {{"status", to_string(cert.status)}, {"nodes", cert.nodes}};
    if (cert.status == IsoStatus::isomorphic)
        j["mapping"] = cert.mapping;
    else
        j["witness"] = cert.witness;
    return j;
}

} // namespace twinbent
