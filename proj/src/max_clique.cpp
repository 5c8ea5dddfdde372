#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "twinbent/cliques.hpp"

namespace twinbent {

namespace {

struct BudgetExhausted {};

// Branch-and-bound engine over an internal vertex numbering in which bit k
// is the k-th vertex of a degeneracy order, so that "lowest set bit" drives
// the greedy colouring sequence.
class CliqueEngine {
public:
    CliqueEngine(const LabeledGraph& g, std::uint64_t budget) : n_(g.num_vertices()), budget_(budget)
    {
        order_ = degeneracy_order(g);
        position_.assign(n_, 0);
        for (std::size_t k = 0; k < n_; ++k) position_[order_[k]] = static_cast<std::uint32_t>(k);
        adj_.assign(n_, Bitset(n_));
        for (std::size_t k = 0; k < n_; ++k)
            g.row(order_[k]).for_each([&](std::size_t v) { adj_[k].set(position_[v]); });
    }

    std::size_t size() const { return n_; }
    std::uint64_t nodes() const { return nodes_.load(); }

    Bitset to_internal(const Bitset& original) const
    {
        Bitset out(n_);
        original.for_each([&](std::size_t v) { out.set(position_[v]); });
        return out;
    }

    std::vector<std::uint32_t> to_original(const std::vector<std::uint32_t>& internal) const
    {
        std::vector<std::uint32_t> out;
        out.reserve(internal.size());
        for (auto k : internal) out.push_back(order_[k]);
        std::sort(out.begin(), out.end());
        return out;
    }

    struct Colored {
        std::vector<std::uint32_t> vertex;
        std::vector<std::uint32_t> color;
    };

    Colored color(const Bitset& p) const
    {
        Colored out;
        Bitset uncolored = p;
        std::uint32_t k = 0;
        while (uncolored.any()) {
            ++k;
            Bitset q = uncolored;
            for (auto v = q.first(); v < n_; v = q.first()) {
                q.reset(v);
                q.subtract(adj_[v]);
                uncolored.reset(v);
                out.vertex.push_back(static_cast<std::uint32_t>(v));
                out.color.push_back(k);
            }
        }
        return out;
    }

    std::vector<std::uint32_t> greedy_clique() const
    {
        std::vector<std::uint32_t> c;
        Bitset p(n_);
        p.set_all();
        while (p.any()) {
            const auto v = p.first();
            c.push_back(static_cast<std::uint32_t>(v));
            p &= adj_[v];
        }
        return c;
    }

    /// Shared state for the optimisation search.
    struct Best {
        std::atomic<std::size_t> size{0};
        std::mutex lock;
        std::vector<std::uint32_t> clique;
    };

    void maximise(std::vector<std::uint32_t>& current, Bitset p, Best& best)
    {
        tick();
        const auto col = color(p);
        for (std::size_t idx = col.vertex.size(); idx-- > 0;) {
            if (current.size() + col.color[idx] <= best.size.load()) return;
            const auto v = col.vertex[idx];
            current.push_back(v);
            Bitset next = p & adj_[v];
            if (next.none()) {
                offer(current, best);
            } else {
                maximise(current, std::move(next), best);
            }
            current.pop_back();
            p.reset(v);
        }
    }

    /// Runs the top level of maximise over worker threads.
    void maximise_root(Best& best, unsigned threads)
    {
        Bitset all(n_);
        all.set_all();
        tick();
        const auto col = color(all);
        root_bound_ = col.color.empty() ? 0 : col.color.back();

        std::atomic<std::size_t> next_branch{0};
        auto worker = [&] {
            while (true) {
                const std::size_t taken = next_branch.fetch_add(1);
                if (taken >= col.vertex.size()) return;
                const std::size_t idx = col.vertex.size() - 1 - taken;
                if (col.color[idx] <= best.size.load()) return;
                const auto v = col.vertex[idx];
                // Candidates are the vertices earlier in the colour sequence.
                Bitset p(n_);
                for (std::size_t j = 0; j < idx; ++j) p.set(col.vertex[j]);
                p &= adj_[v];
                std::vector<std::uint32_t> current{v};
                if (p.none())
                    offer(current, best);
                else
                    maximise(current, std::move(p), best);
            }
        };

        if (threads <= 1) {
            worker();
            return;
        }
        std::vector<std::thread> pool;
        std::exception_ptr failure;
        std::mutex failure_lock;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                try {
                    worker();
                } catch (...) {
                    std::lock_guard guard(failure_lock);
                    if (!failure) failure = std::current_exception();
                    // Drain remaining branches so siblings stop early.
                    next_branch.store(col.vertex.size());
                }
            });
        }
        for (auto& t : pool) t.join();
        if (failure) std::rethrow_exception(failure);
    }

    /// True when p contains a clique of `need` more vertices.
    bool extend_to(Bitset p, std::size_t need)
    {
        tick();
        if (need == 0) return true;
        if (p.count() < need) return false;
        const auto col = color(p);
        for (std::size_t idx = col.vertex.size(); idx-- > 0;) {
            if (col.color[idx] < need) return false;
            const auto v = col.vertex[idx];
            if (extend_to(p & adj_[v], need - 1)) return true;
            p.reset(v);
        }
        return false;
    }

    std::uint32_t root_bound() const { return root_bound_; }

private:
    void tick()
    {
        if (nodes_.fetch_add(1) + 1 > budget_) throw BudgetExhausted{};
    }

    static void offer(const std::vector<std::uint32_t>& current, Best& best)
    {
        if (current.size() <= best.size.load()) return;
        std::lock_guard guard(best.lock);
        if (current.size() > best.clique.size()) {
            best.clique = current;
            best.size.store(current.size());
        }
    }

    // Smallest-last order reversed: the final core comes first. Ties break
    // toward the lower vertex index.
    static std::vector<std::uint32_t> degeneracy_order(const LabeledGraph& g)
    {
        const std::size_t n = g.num_vertices();
        std::vector<std::size_t> degree(n);
        for (std::uint32_t v = 0; v < n; ++v) degree[v] = g.degree(v);
        std::vector<bool> removed(n, false);
        std::vector<std::uint32_t> removal;
        removal.reserve(n);
        for (std::size_t step = 0; step < n; ++step) {
            std::uint32_t pick = 0;
            std::size_t best = SIZE_MAX;
            for (std::uint32_t v = 0; v < n; ++v) {
                if (!removed[v] && degree[v] < best) {
                    best = degree[v];
                    pick = v;
                }
            }
            removed[pick] = true;
            removal.push_back(pick);
            g.row(pick).for_each([&](std::size_t u) {
                if (!removed[u]) --degree[u];
            });
        }
        std::reverse(removal.begin(), removal.end());
        return removal;
    }

    std::size_t n_;
    std::uint64_t budget_;
    std::atomic<std::uint64_t> nodes_{0};
    std::vector<std::uint32_t> order_;
    std::vector<std::uint32_t> position_;
    std::vector<Bitset> adj_;
    std::uint32_t root_bound_ = 0;
};

// Picks the lexicographically smallest clique of size omega by a sequence of
// decision searches on the original vertex numbering.
std::optional<std::vector<std::uint32_t>> lex_smallest(const LabeledGraph& g, CliqueEngine& engine,
                                                        std::size_t omega)
{
    const std::size_t n = g.num_vertices();
    std::vector<std::uint32_t> chosen;
    Bitset candidates(n);
    candidates.set_all();
    while (chosen.size() < omega) {
        bool extended = false;
        for (auto v = candidates.first(); v < n; v = candidates.next(v + 1)) {
            Bitset rest = candidates & g.row(static_cast<std::uint32_t>(v));
            for (auto u = rest.first(); u <= v && u < n; u = rest.next(u + 1)) rest.reset(u);
            const std::size_t need = omega - chosen.size() - 1;
            if (engine.extend_to(engine.to_internal(rest), need)) {
                chosen.push_back(static_cast<std::uint32_t>(v));
                candidates = std::move(rest);
                extended = true;
                break;
            }
        }
        if (!extended) return std::nullopt;
    }
    return chosen;
}

} // namespace

bool is_clique(const LabeledGraph& g, std::span<const std::uint32_t> vertices)
{
    for (std::size_t a = 0; a < vertices.size(); ++a)
        for (std::size_t b = a + 1; b < vertices.size(); ++b)
            if (vertices[a] == vertices[b] || !g.adjacent(vertices[a], vertices[b])) return false;
    return true;
}

CliqueReport max_clique(const LabeledGraph& g, const CliqueOptions& options, std::string graph_id)
{
    CliqueReport report;
    report.graph_id = std::move(graph_id);
    if (g.num_vertices() == 0) {
        report.exact = true;
        report.upper_bound_used = 0;
        return report;
    }

    CliqueEngine engine(g, options.node_budget);
    CliqueEngine::Best best;
    best.clique = engine.greedy_clique();
    best.size = best.clique.size();

    try {
        engine.maximise_root(best, std::max(1u, options.threads));
        report.exact = true;
    } catch (const BudgetExhausted&) {
        report.exact = false;
    }
    report.upper_bound_used = engine.root_bound();
    report.clique = engine.to_original(best.clique);

    if (report.exact) {
        try {
            if (auto lex = lex_smallest(g, engine, report.clique.size())) report.clique = std::move(*lex);
        } catch (const BudgetExhausted&) {
            // The size is still exact; keep the clique found by the optimiser.
        }
    }
    report.nodes = engine.nodes();
    if (!is_clique(g, report.clique)) throw std::logic_error("max_clique: result is not a clique");
    return report;
}

nlohmann::json to_json(const CliqueReport& report)
{
    nlohmann::json j = {{"graph", report.graph_id},
                        {"size", report.clique.size()},
                        {"clique", report.clique},
                        {"exact", report.exact}};
    if (report.upper_bound_used) j["upper_bound_used"] = *report.upper_bound_used;
    return j;
}

} // namespace twinbent
