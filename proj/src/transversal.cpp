#include "twinbent/transversal.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include "twinbent/clifford.hpp"
#include "twinbent/cliques.hpp"

namespace twinbent {

std::uint32_t support_class_of(std::uint32_t i)
{
    // Per digit: 1 when the digit is 1 or 2. Compress those flags to one bit each.
    const std::uint32_t flags = (i ^ (i >> 1)) & 0x55555555u;
    std::uint32_t key = 0;
    for (int d = 0; d < 16; ++d)
        if ((flags >> (2 * d)) & 1u) key |= 1u << d;
    return key;
}

std::vector<std::vector<std::uint32_t>> support_classes(int m)
{
    require_half_rank(m, 4);
    std::vector<std::vector<std::uint32_t>> classes(std::size_t{1} << m);
    for (std::uint32_t i = 0; i < basis_size(m); ++i) classes[support_class_of(i)].push_back(i);
    return classes;
}

bool is_valid_transversal(const Transversal& t)
{
    if (t.m < 1 || t.m > 4) return false;
    const std::size_t n = std::size_t{1} << t.m;
    if (t.vertices.size() != n) return false;
    for (std::size_t k = 0; k < n; ++k) {
        if (t.vertices[k] >= basis_size(t.m)) return false;
        if (support_class_of(t.vertices[k]) != k) return false;
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (!delta_color(t.vertices[a], t.vertices[b])) return false;
    return true;
}

std::uint64_t transversal_count(int m)
{
    require_half_rank(m, 3);
    const std::uint64_t n = std::uint64_t{1} << m;
    std::uint64_t total = 1;
    for (std::uint64_t k = 0; k < n; ++k) total *= n;
    return total;
}

Transversal transversal_at(int m, std::uint64_t index)
{
    const std::uint64_t total = transversal_count(m);
    if (index >= total) throw std::out_of_range("transversal_at: index out of range");
    static thread_local std::map<int, std::vector<std::vector<std::uint32_t>>> cache;
    auto it = cache.find(m);
    if (it == cache.end()) it = cache.emplace(m, support_classes(m)).first;
    const auto& classes = it->second;

    const std::size_t n = classes.size();
    Transversal t{m, std::vector<std::uint32_t>(n)};
    for (std::size_t k = n; k-- > 0;) {
        t.vertices[k] = classes[k][index % n];
        index /= n;
    }
    return t;
}

TransversalStream::TransversalStream(int m, std::uint64_t start, std::uint64_t cap)
    : m_(m), total_(transversal_count(m)), position_(start), cap_(cap)
{
    if (start > total_) throw std::out_of_range("TransversalStream: start beyond the last transversal");
}

std::optional<Transversal> TransversalStream::next()
{
    if (position_ >= total_ || yielded_ >= cap_) return std::nullopt;
    ++yielded_;
    return transversal_at(m_, position_++);
}

LabeledGraph color_profile(const Transversal& t)
{
    if (!is_valid_transversal(t)) throw std::invalid_argument("color_profile: not a valid transversal");
    const auto n = static_cast<std::uint32_t>(t.vertices.size());
    LabeledGraph g(n, true);
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = a + 1; b < n; ++b) g.add_edge(a, b, *delta_color(t.vertices[a], t.vertices[b]));
    return g;
}

namespace {

struct BudgetExhausted {};

// Finds vertices x_0..x_{N-1} of Delta_m whose pairwise colours equal a
// prescribed colouring. XOR translation preserves Delta_m colours, so x_0 = 0.
class ColouredCliqueSearch {
public:
    ColouredCliqueSearch(int m, const LabeledGraph& target, std::uint64_t budget)
        : m_(m), target_(target), budget_(budget)
    {
    }

    std::optional<std::vector<std::uint32_t>> run()
    {
        std::vector<std::uint32_t> chosen{0};
        if (dfs(chosen)) return chosen;
        return std::nullopt;
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    bool dfs(std::vector<std::uint32_t>& chosen)
    {
        if (++nodes_ > budget_) throw BudgetExhausted{};
        const auto a = static_cast<std::uint32_t>(chosen.size());
        if (a == target_.num_vertices()) return true;
        for (std::uint32_t x = 0; x < basis_size(m_); ++x) {
            bool ok = true;
            for (std::uint32_t b = 0; b < a && ok; ++b) ok = delta_color(chosen[b], x) == target_.color(b, a);
            if (!ok) continue;
            chosen.push_back(x);
            if (dfs(chosen)) return true;
            chosen.pop_back();
        }
        return false;
    }

    int m_;
    const LabeledGraph& target_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
};

Transversal sorted_by_class(int m, const std::vector<std::uint32_t>& vertices)
{
    Transversal t{m, std::vector<std::uint32_t>(vertices.size())};
    for (auto v : vertices) t.vertices[support_class_of(v)] = v;
    return t;
}

std::uint64_t red_key(const LabeledGraph& profile)
{
    std::uint64_t key = 0;
    int bit = 0;
    for (std::uint32_t a = 0; a < profile.num_vertices(); ++a)
        for (std::uint32_t b = a + 1; b < profile.num_vertices(); ++b, ++bit)
            if (profile.color(a, b) == EdgeColor::red) key |= std::uint64_t{1} << bit;
    return key;
}

// Minimum red-pattern key over all vertex relabelings; brute force, so only
// for profiles on at most 4 vertices.
std::uint64_t canonical_key(const LabeledGraph& profile, bool swapped)
{
    const auto n = static_cast<std::uint32_t>(profile.num_vertices());
    std::vector<std::uint32_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    std::uint64_t best = UINT64_MAX;
    do {
        std::uint64_t key = 0;
        int bit = 0;
        for (std::uint32_t a = 0; a < n; ++a)
            for (std::uint32_t b = a + 1; b < n; ++b, ++bit)
                if ((profile.color(perm[a], perm[b]) == EdgeColor::red) != swapped) key |= std::uint64_t{1} << bit;
        best = std::min(best, key);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

enum class Verdict : std::uint8_t { self_complementary, paired, unpaired, inconclusive };

Verdict classify_transversal(const Transversal& t, std::uint64_t budget)
{
    if (is_self_complementary(t, budget)) return Verdict::self_complementary;
    switch (complement_exists(t, budget).status) {
    case ComplementStatus::found: return Verdict::paired;
    case ComplementStatus::not_found: return Verdict::unpaired;
    case ComplementStatus::inconclusive: return Verdict::inconclusive;
    }
    return Verdict::inconclusive;
}

void tally(ConjectureReport& report, Verdict v)
{
    ++report.total;
    switch (v) {
    case Verdict::self_complementary: ++report.self_complementary; break;
    case Verdict::paired: ++report.paired; break;
    case Verdict::unpaired: ++report.unpaired; break;
    case Verdict::inconclusive: ++report.inconclusive; break;
    }
}

void write_checkpoint(const std::string& path, std::uint64_t last_index, const ConjectureReport& r)
{
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write checkpoint file " + path);
    out << last_index << '\n'
        << r.total << ' ' << r.self_complementary << ' ' << r.paired << ' ' << r.unpaired << ' ' << r.inconclusive
        << '\n';
}

// Returns the next index to process.
std::uint64_t read_checkpoint(const std::string& path, ConjectureReport& r)
{
    std::ifstream in(path);
    if (!in) return 0;
    std::uint64_t last_index = 0;
    if (!(in >> last_index >> r.total >> r.self_complementary >> r.paired >> r.unpaired >> r.inconclusive))
        throw std::runtime_error("malformed checkpoint file " + path);
    return last_index + 1;
}

} // namespace

ComplementResult complement_exists(const Transversal& t, std::uint64_t budget)
{
    const auto profile = color_profile(t);
    ComplementResult result;

    const auto blue = max_clique(profile.subgraph_by_color(EdgeColor::blue));
    const int bound = rho(std::uint64_t{1} << t.m);
    if (blue.clique.size() > static_cast<std::size_t>(bound)) {
        result.status = ComplementStatus::not_found;
        result.reason = "clique bound: a complement needs a red clique of size "
                        + std::to_string(blue.clique.size()) + " but rho("
                        + std::to_string(std::uint64_t{1} << t.m) + ") = " + std::to_string(bound);
        return result;
    }

    const auto target = profile.swap_colors();
    ColouredCliqueSearch search(t.m, target, budget);
    try {
        auto found = search.run();
        if (found) {
            result.status = ComplementStatus::found;
            result.witness = sorted_by_class(t.m, *found);
            if (!is_valid_transversal(*result.witness))
                throw std::logic_error("complement_exists: witness is not a transversal");
        } else {
            result.status = ComplementStatus::not_found;
            result.reason = "exhaustive search";
        }
    } catch (const BudgetExhausted&) {
        result.status = ComplementStatus::inconclusive;
        result.reason = "search budget exhausted";
    }
    result.nodes = search.nodes();
    return result;
}

bool is_self_complementary(const Transversal& t, std::uint64_t budget)
{
    const auto profile = color_profile(t);
    IsoOptions options;
    options.respect_colors = true;
    options.node_budget = budget;
    const auto cert = find_isomorphism(profile, profile.swap_colors(), options);
    if (cert.status == IsoStatus::inconclusive)
        throw std::runtime_error("is_self_complementary: isomorphism search budget exhausted");
    return cert.status == IsoStatus::isomorphic;
}

ConjectureReport conjecture_report(int m, const ConjectureOptions& options)
{
    require_half_rank(m, 4);
    ConjectureReport report;
    report.m = m;

    if (m == 4) {
        report.mode = "counterexample";
        Transversal t{m, std::vector<std::uint32_t>(16)};
        for (auto v : blue_clique(m)) t.vertices[support_class_of(v)] = v;
        const auto result = complement_exists(t, options.budget);
        const auto blue = max_clique(color_profile(t).subgraph_by_color(EdgeColor::blue));
        Counterexample ce;
        ce.transversal = t;
        ce.blue_clique_size = blue.clique.size();
        ce.rho = rho(16);
        ce.obstruction = "rho(16)=" + std::to_string(ce.rho) + " < " + std::to_string(ce.blue_clique_size);
        if (result.status == ComplementStatus::not_found) report.counterexample = ce;
        tally(report, result.status == ComplementStatus::not_found ? Verdict::unpaired : Verdict::inconclusive);
        report.complete = true;
        return report;
    }

    report.population = transversal_count(m);
    std::unordered_map<std::uint64_t, Verdict> memo;
    // Canonical class -> (size, canonical class of its colour swap); m <= 2 only.
    std::map<std::uint64_t, std::pair<std::uint64_t, std::uint64_t>> classes;
    auto evaluate = [&](const Transversal& t) {
        const auto profile = color_profile(t);
        const auto key = red_key(profile);
        auto it = memo.find(key);
        if (it == memo.end()) it = memo.emplace(key, classify_transversal(t, options.budget)).first;
        tally(report, it->second);
        if (m <= 2) {
            auto& entry = classes[canonical_key(profile, false)];
            ++entry.first;
            entry.second = canonical_key(profile, true);
        }
    };

    if (m <= 2 || options.exhaustive) {
        report.mode = "exhaustive";
        const bool checkpointing = m == 3 && options.checkpoint.has_value();
        std::uint64_t start = 0;
        if (checkpointing) start = read_checkpoint(*options.checkpoint, report);
        TransversalStream stream(m, start);
        while (auto t = stream.next()) {
            evaluate(*t);
            if (checkpointing && (stream.position() % (std::uint64_t{1} << 20)) == 0)
                write_checkpoint(*options.checkpoint, stream.position() - 1, report);
        }
        if (checkpointing) write_checkpoint(*options.checkpoint, report.population - 1, report);
        report.complete = true;
    } else {
        report.mode = "sampled";
        std::mt19937_64 rng(options.seed);
        std::uniform_int_distribution<std::uint64_t> pick(0, report.population - 1);
        for (std::uint64_t s = 0; s < options.samples; ++s) evaluate(transversal_at(m, pick(rng)));
        report.complete = false;
    }

    if (m <= 2) {
        bool consistent = true;
        for (const auto& [canon, entry] : classes) {
            if (entry.second == canon) continue;
            const auto partner = classes.find(entry.second);
            if (partner == classes.end() || partner->second.first != entry.first) consistent = false;
        }
        report.pairing_consistent = consistent;
    }
    return report;
}

const char* to_string(ComplementStatus status)
{
    switch (status) {
    case ComplementStatus::found: return "found";
    case ComplementStatus::not_found: return "not-found";
    case ComplementStatus::inconclusive: return "inconclusive";
    }
    return "unknown";
}

nlohmann::json to_json(const Transversal& t) { return {{"m", t.m}, {"vertices", t.vertices}}; }

nlohmann::json to_json(const ConjectureReport& report)
{
    nlohmann::json j = {{"m", report.m},
                        {"mode", report.mode},
                        {"population", report.population},
                        {"total", report.total},
                        {"self_complementary", report.self_complementary},
                        {"paired", report.paired},
                        {"unpaired", report.unpaired},
                        {"inconclusive", report.inconclusive},
                        {"complete", report.complete}};
    if (report.pairing_consistent) j["pairing_consistent"] = *report.pairing_consistent;
    if (report.counterexample) {
        const auto& ce = *report.counterexample;
        j["counterexample"] = {{"transversal", ce.transversal.vertices},
                               {"blue_clique_size", ce.blue_clique_size},
                               {"rho", ce.rho},
                               {"obstruction", ce.obstruction}};
    }
    return j;
}

} // namespace twinbent
