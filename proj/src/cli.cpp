#include "twinbent/cli.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "twinbent/bent.hpp"
#include "twinbent/clifford.hpp"
#include "twinbent/cliques.hpp"
#include "twinbent/graphs.hpp"
#include "twinbent/hadamard.hpp"
#include "twinbent/transversal.hpp"

namespace twinbent::cli {

namespace {

using nlohmann::json;

enum class Outcome { pass, fail, inconclusive };

struct CommandResult {
    json body = json::object();
    Outcome outcome = Outcome::pass;
    /// Set for csv / text output.
    std::optional<std::string> rendered;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require_m(const RunConfig& c, int max_m)
{
    if (c.m < 1 || c.m > max_m)
        throw UsageError(c.subcommand + ": --m must be in 1.." + std::to_string(max_m));
}

BoolFn selected_fn(const RunConfig& c)
{
    if (c.fn == "sigma") return sigma_fn(c.m);
    if (c.fn == "tau") return tau_fn(c.m);
    throw UsageError("--fn must be sigma or tau");
}

void require_format(const RunConfig& c, std::initializer_list<OutputFormat> allowed)
{
    for (auto f : allowed)
        if (f == c.format) return;
    throw UsageError(c.subcommand + ": unsupported --format");
}

Outcome worst(Outcome a, Outcome b)
{
    if (a == Outcome::fail || b == Outcome::fail) return Outcome::fail;
    if (a == Outcome::inconclusive || b == Outcome::inconclusive) return Outcome::inconclusive;
    return Outcome::pass;
}

CommandResult cmd_basis(const RunConfig& c)
{
    require_m(c, kMaxHalfRank);
    require_format(c, {OutputFormat::json, OutputFormat::csv});
    CommandResult r;
    const auto basis = positive_basis(c.m);
    bool properties = true;
    for (const auto& a : basis) {
        const auto square = multiply(a, a);
        const auto cls = classify(a);
        properties = properties && multiply(a, transpose(a)) == identity(a.order())
                     && square == (cls.symmetry == Symmetry::symmetric ? identity(a.order()) : -identity(a.order()));
    }
    r.body["basis"] = basis_json(c.m);
    r.body["properties_ok"] = properties;
    r.outcome = properties ? Outcome::pass : Outcome::fail;
    if (c.format == OutputFormat::csv) {
        std::ostringstream os;
        os << "index,digits,symmetry,diagonal\n";
        for (const auto& e : r.body["basis"])
            os << e["index"].get<std::uint32_t>() << ',' << e["digits"].get<std::string>() << ','
               << e["symmetry"].get<std::string>() << ',' << (e["diagonal"].get<bool>() ? 1 : 0) << '\n';
        r.rendered = os.str();
    }
    return r;
}

CommandResult cmd_bent(const RunConfig& c)
{
    require_m(c, kMaxHalfRank);
    require_format(c, {OutputFormat::json, OutputFormat::csv});
    CommandResult r;
    const auto f = selected_fn(c);
    const auto spectrum = walsh_hadamard(f);
    r.body = spectrum_json(f, spectrum);
    r.body["fn"] = c.fn;
    r.body["weight"] = f.weight();

    bool agree = true;
    for (std::uint32_t i = 0; i < f.size(); ++i) {
        const int oracle = c.fn == "sigma" ? matrix_oracle_sigma(c.m, i) : matrix_oracle_tau(c.m, i);
        agree = agree && oracle == f[i];
    }
    r.body["digit_matrix_agree"] = agree;
    r.outcome = r.body["bent"].get<bool>() && agree ? Outcome::pass : Outcome::fail;
    if (c.format == OutputFormat::csv) {
        std::ostringstream os;
        write_truth_table_csv(os, c.m);
        r.rendered = os.str();
    }
    return r;
}

CommandResult cmd_srg(const RunConfig& c)
{
    require_m(c, 5);
    require_format(c, {OutputFormat::json});
    CommandResult r;
    const auto report = check_srg(cayley_graph(selected_fn(c)));
    const auto expected = srg_params(c.m);
    r.body = to_json(report);
    r.body["ok"] = report.ok && report.params == expected;
    r.outcome = r.body["ok"].get<bool>() ? Outcome::pass : Outcome::fail;
    return r;
}

CommandResult cmd_cayley(const RunConfig& c)
{
    require_m(c, 5);
    require_format(c, {OutputFormat::json, OutputFormat::text});
    CommandResult r;
    const auto g = cayley_graph(selected_fn(c));
    r.body["fn"] = c.fn;
    r.body["graph"] = graph_json(g);
    if (c.format == OutputFormat::text) {
        std::ostringstream os;
        write_dimacs(os, g);
        r.rendered = os.str();
    }
    return r;
}

CommandResult cmd_delta(const RunConfig& c)
{
    require_m(c, 4);
    require_format(c, {OutputFormat::json, OutputFormat::text});
    CommandResult r;
    const auto delta = delta_graph(c.m);
    const bool red_ok = delta.subgraph_by_color(EdgeColor::red) == cayley_graph(sigma_fn(c.m));
    const bool blue_ok = delta.subgraph_by_color(EdgeColor::blue) == cayley_graph(tau_fn(c.m));
    r.body["graph"] = graph_json(delta);
    r.body["red_equals_cay_sigma"] = red_ok;
    r.body["blue_equals_cay_tau"] = blue_ok;
    r.outcome = red_ok && blue_ok ? Outcome::pass : Outcome::fail;
    if (c.format == OutputFormat::text) {
        std::ostringstream os;
        write_dimacs(os, delta);
        r.rendered = os.str();
    }
    return r;
}

CommandResult cmd_clique(const RunConfig& c)
{
    require_m(c, 5);
    require_format(c, {OutputFormat::json});
    CommandResult r;
    const auto report =
        max_clique(cayley_graph(selected_fn(c)), {c.budget, c.threads}, "Cay(" + c.fn + ")");
    r.body = to_json(report);
    r.body["fn"] = c.fn;
    const std::uint64_t order = std::uint64_t{1} << c.m;
    if (c.fn == "sigma") {
        r.body["rho"] = rho(order);
        const bool bounded = report.clique.size() <= static_cast<std::size_t>(rho(order));
        r.body["hr_family_size"] = red_clique_to_hr(report.clique, c.m).size();
        r.body["within_rho_bound"] = bounded;
        if (!bounded) r.outcome = Outcome::fail;
    } else {
        const bool reaches = report.clique.size() >= order;
        r.body["at_least_2m"] = reaches;
        if (!reaches && report.exact) r.outcome = Outcome::fail;
    }
    if (!report.exact) r.outcome = worst(r.outcome, Outcome::inconclusive);
    return r;
}

CommandResult cmd_certificate(const RunConfig& c)
{
    require_m(c, kMaxHalfRank);
    require_format(c, {OutputFormat::json});
    CommandResult r;
    CertificateOptions options;
    options.clique = {c.budget, c.threads};
    if (c.exhaustive) options.exact_red_omega = true;
    const auto cert = nonisomorphism_certificate(c.m, options);
    r.body = to_json(cert);
    const bool ok = cert.applicable ? cert.conclusion == "non-isomorphic" : cert.blue_verified;
    r.outcome = ok ? Outcome::pass : Outcome::fail;
    return r;
}

CommandResult cmd_iso(const RunConfig& c)
{
    require_m(c, kMaxHalfRank);
    require_format(c, {OutputFormat::json});
    CommandResult r;
    if (c.m >= 4) {
        CertificateOptions options;
        options.clique = {c.budget, c.threads};
        options.exact_red_omega = c.m == 4 || c.exhaustive;
        const auto cert = nonisomorphism_certificate(c.m, options);
        IsoOptions iso;
        iso.invariant = DistinguishingInvariant{
            cert.red_omega_exact ? "clique number" : "clique number bound (rho)", cert.red_omega, cert.blue_size};
        const auto g = cayley_graph(sigma_fn(c.m));
        const auto h = cayley_graph(tau_fn(c.m));
        const auto result = find_isomorphism(g, h, iso);
        r.body = to_json(result);
        r.outcome = result.status == IsoStatus::non_isomorphic && cert.conclusion == "non-isomorphic"
                        ? Outcome::pass
                        : Outcome::fail;
        return r;
    }
    const auto g = cayley_graph(sigma_fn(c.m));
    const auto h = cayley_graph(tau_fn(c.m));
    IsoOptions iso;
    iso.node_budget = c.budget;
    const auto result = find_isomorphism(g, h, iso);
    r.body = to_json(result);
    if (result.status == IsoStatus::isomorphic) {
        const bool verified = verify_isomorphism(g, h, result.mapping, false);
        r.body["verified"] = verified;
        r.outcome = verified ? Outcome::pass : Outcome::fail;
    } else {
        r.outcome = result.status == IsoStatus::inconclusive ? Outcome::inconclusive : Outcome::fail;
    }
    return r;
}

CommandResult cmd_swap_auto(const RunConfig& c)
{
    require_m(c, 4);
    require_format(c, {OutputFormat::json});
    CommandResult r;
    if (c.m == 4) {
        // A swap automorphism would carry Cay(sigma_4) onto Cay(tau_4).
        CertificateOptions options;
        options.clique = {c.budget, c.threads};
        const auto cert = nonisomorphism_certificate(c.m, options);
        r.body = {{"status", "absent"}, {"witness", "red and blue subgraphs are non-isomorphic"},
                  {"certificate", to_json(cert)}};
        r.outcome = cert.conclusion == "non-isomorphic" ? Outcome::pass : Outcome::fail;
        return r;
    }
    const auto delta = delta_graph(c.m);
    const auto result = find_color_swap_automorphism(delta, c.budget);
    r.body = to_json(result);
    if (result.status == IsoStatus::isomorphic) {
        const bool verified = verify_isomorphism(delta, delta.swap_colors(), result.mapping, true);
        r.body["verified"] = verified;
        r.outcome = verified ? Outcome::pass : Outcome::fail;
    } else {
        r.outcome = result.status == IsoStatus::inconclusive ? Outcome::inconclusive : Outcome::fail;
    }
    return r;
}

CommandResult cmd_hadamard(const RunConfig& c)
{
    require_m(c, 3);
    require_format(c, {OutputFormat::json, OutputFormat::text});
    CommandResult r;
    const auto indices = canonical_transversal(c.m);
    std::vector<SignedPerm> as;
    for (auto i : indices) as.push_back(gamma(c.m, i));
    const auto a_check = check_A_conditions(as);
    r.body["A_indices"] = indices;
    r.body["A_conditions"] = a_check.ok;
    if (!a_check.ok) {
        r.body["failure"] = a_check.failure;
        r.outcome = Outcome::fail;
        return r;
    }
    const auto search = search_B(as.size(), c.b, a_check.lambdas, c.budget, c.seed);
    r.body["n"] = as.size();
    r.body["b"] = c.b;
    r.body["B_search"] = {{"status", to_string(search.status)}, {"exhaustive", search.exhaustive}};
    switch (search.status) {
    case BSearchStatus::found: {
        const auto assembled = assemble_H(as, search.bs);
        if (!assembled.h) {
            r.body["failure"] = assembled.failure;
            r.outcome = Outcome::fail;
            return r;
        }
        const bool hadamard = is_hadamard(*assembled.h);
        r.body["witness"] = witness_json(indices, search.bs, *assembled.h);
        r.body["is_hadamard"] = hadamard;
        r.outcome = hadamard ? Outcome::pass : Outcome::fail;
        if (c.format == OutputFormat::text) {
            std::ostringstream os;
            write_matrix_text(os, *assembled.h);
            r.rendered = os.str();
        }
        break;
    }
    case BSearchStatus::absent_exhaustive:
        r.outcome = Outcome::pass;
        if (c.format == OutputFormat::text) r.rendered = std::string("no B tuple exists (exhaustive search)\n");
        break;
    case BSearchStatus::not_found_in_budget:
        r.outcome = Outcome::inconclusive;
        if (c.format == OutputFormat::text) r.rendered = std::string("none found within budget\n");
        break;
    }
    return r;
}

CommandResult cmd_conjectures(const RunConfig& c)
{
    require_m(c, 4);
    require_format(c, {OutputFormat::json});
    CommandResult r;
    ConjectureOptions options;
    options.exhaustive = c.exhaustive;
    options.seed = c.seed;
    options.budget = c.budget;
    options.checkpoint = c.checkpoint;
    const auto report = conjecture_report(c.m, options);
    r.body = to_json(report);
    if (c.m == 4) {
        r.outcome = report.counterexample ? Outcome::pass : Outcome::fail;
    } else if (report.unpaired > 0 || !report.pairing_consistent.value_or(true)) {
        r.outcome = Outcome::fail;
    } else if (report.inconclusive > 0) {
        r.outcome = Outcome::inconclusive;
    }
    return r;
}

using Command = std::function<CommandResult(const RunConfig&)>;

const std::map<std::string, Command>& command_table()
{
    static const std::map<std::string, Command> table = {
        {"basis", cmd_basis},       {"bent", cmd_bent},           {"srg", cmd_srg},
        {"cayley", cmd_cayley},     {"delta", cmd_delta},         {"clique", cmd_clique},
        {"certificate", cmd_certificate}, {"iso", cmd_iso},       {"swap-auto", cmd_swap_auto},
        {"hadamard", cmd_hadamard}, {"conjectures", cmd_conjectures},
    };
    return table;
}

CommandResult cmd_all(const RunConfig& c)
{
    require_m(c, 4);
    require_format(c, {OutputFormat::json});
    CommandResult r;
    json results = json::object();
    auto step = [&](const std::string& key, RunConfig sub) {
        sub.subcommand = key.substr(0, key.find(':'));
        sub.format = OutputFormat::json;
        const auto result = command_table().at(sub.subcommand)(sub);
        json entry = result.body;
        entry["outcome"] = result.outcome == Outcome::pass ? "pass"
                           : result.outcome == Outcome::fail ? "fail"
                                                             : "inconclusive";
        results[key] = std::move(entry);
        r.outcome = worst(r.outcome, result.outcome);
    };

    RunConfig base = c;
    base.out.reset();
    for (const char* fn : {"sigma", "tau"}) {
        RunConfig sub = base;
        sub.fn = fn;
        step(std::string("bent:") + fn, sub);
        step(std::string("srg:") + fn, sub);
        step(std::string("clique:") + fn, sub);
    }
    step("delta", base);
    step("certificate", base);
    step("iso", base);
    step("swap-auto", base);
    if (c.m <= 3) step("hadamard", base);
    step("conjectures", base);

    r.body["results"] = std::move(results);
    return r;
}

void emit(const RunConfig& c, const CommandResult& result, std::ostream& out)
{
    std::string text;
    if (result.rendered) {
        text = *result.rendered;
    } else {
        json doc = {{"schema", kSchemaVersion}, {"command", c.subcommand}, {"m", c.m}};
        doc.update(result.body);
        doc["ok"] = result.outcome == Outcome::pass;
        if (result.outcome == Outcome::inconclusive) doc["inconclusive"] = true;
        text = doc.dump(2) + "\n";
    }
    if (c.out) {
        std::ofstream file(*c.out, std::ios::trunc);
        if (!file) throw std::runtime_error("cannot open output file " + *c.out);
        file << text;
    } else {
        out << text;
    }
}

} // namespace

const std::vector<std::string>& subcommands()
{
    static const std::vector<std::string> names = {"basis", "bent",      "srg",      "cayley",
                                                   "delta", "clique",    "certificate", "iso",
                                                   "swap-auto", "hadamard", "conjectures", "all"};
    return names;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    try {
        CommandResult result;
        if (config.subcommand == "all") {
            result = cmd_all(config);
        } else {
            const auto it = command_table().find(config.subcommand);
            if (it == command_table().end()) throw UsageError("unknown subcommand '" + config.subcommand + "'");
            result = it->second(config);
        }
        emit(config, result, out);
        switch (result.outcome) {
        case Outcome::pass: return kExitOk;
        case Outcome::fail: return kExitFailed;
        case Outcome::inconclusive: return kExitInconclusive;
        }
        return kExitFailed;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailed;
    }
}

} // namespace twinbent::cli
