// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "dense_oracle.hpp"
#include "twinbent/bent.hpp"
#include "twinbent/clifford.hpp"
#include "twinbent/cliques.hpp"
#include "twinbent/graphs.hpp"
#include "twinbent/hadamard.hpp"
#include "twinbent/transversal.hpp"

using namespace twinbent;

namespace {

struct Verdict {
    bool pass = true;
    std::ostringstream detail;

    void require(bool condition, const std::string& what)
    {
        if (!condition) {
            if (pass) detail << "failed: ";
            else detail << "; ";
            detail << what;
            pass = false;
        }
    }
};

struct Criterion {
    int number;
    std::string name;
    double time_limit_s;
    std::function<void(Verdict&)> body;
};

std::uint64_t pow2(int e) { return std::uint64_t{1} << e; }

void bentness(Verdict& v)
{
    for (int m = 1; m <= 4; ++m) {
        for (const auto& f : {sigma_fn(m), tau_fn(m)}) {
            const auto spectrum = walsh_hadamard(f);
            bool flat = true;
            for (auto w : spectrum) flat = flat && (w == std::int64_t(pow2(m)) || w == -std::int64_t(pow2(m)));
            v.require(flat && is_bent(f), "spectrum not flat at m = " + std::to_string(m));
        }
    }
    if (v.pass) v.detail << "|W| = 2^m for sigma and tau, m = 1..4";
}

void oracle_equivalence(Verdict& v)
{
    std::uint64_t checked = 0;
    for (int m = 1; m <= 4; ++m) {
        const auto s = sigma_fn(m), t = tau_fn(m);
        for (std::uint32_t i = 0; i < basis_size(m); ++i) {
            const bool ok = s[i] == matrix_oracle_sigma(m, i) && t[i] == matrix_oracle_tau(m, i)
                            && s[i] == oracle::sigma_dense(m, i) && t[i] == oracle::tau_dense(m, i);
            v.require(ok, "disagreement at m = " + std::to_string(m) + ", i = " + std::to_string(i));
            ++checked;
        }
    }
    if (v.pass) v.detail << checked << " indices agree with the matrix classification";
}

void strong_regularity(Verdict& v)
{
    for (int m = 1; m <= 4; ++m) {
        const SrgParams expected{pow2(2 * m), pow2(2 * m - 1) - pow2(m - 1), pow2(2 * m - 2) - pow2(m - 1),
                                 pow2(2 * m - 2) - pow2(m - 1)};
        for (const auto& f : {sigma_fn(m), tau_fn(m)}) {
            const auto r = check_srg(cayley_graph(f));
            v.require(r.ok && r.params == expected, "wrong parameters at m = " + std::to_string(m));
        }
    }
    if (v.pass) v.detail << "(4^m, 2^(2m-1)-2^(m-1), 2^(2m-2)-2^(m-1), same) for m = 1..4";
}

void identification(Verdict& v)
{
    for (int m = 1; m <= 3; ++m) {
        const auto d = delta_graph(m);
        v.require(d.subgraph_by_color(EdgeColor::red) == cayley_graph(sigma_fn(m)),
                  "red subgraph differs at m = " + std::to_string(m));
        v.require(d.subgraph_by_color(EdgeColor::blue) == cayley_graph(tau_fn(m)),
                  "blue subgraph differs at m = " + std::to_string(m));
    }
    if (v.pass) v.detail << "red = Cay(sigma_m), blue = Cay(tau_m) for m = 1..3";
}

void hurwitz_radon_bound(Verdict& v)
{
    std::ostringstream sizes;
    for (int m = 1; m <= 4; ++m) {
        const auto g = cayley_graph(sigma_fn(m));
        const auto r = max_clique(g);
        const int bound = rho(pow2(m));
        v.require(r.exact, "search incomplete at m = " + std::to_string(m));
        v.require(is_clique(g, r.clique), "result is not a clique at m = " + std::to_string(m));
        v.require(r.clique.size() <= static_cast<std::size_t>(bound), "bound violated at m = " + std::to_string(m));
        const auto family = red_clique_to_hr(r.clique, m);
        v.require(is_hr_family(family) && family.size() + 1 == r.clique.size(),
                  "HR conversion failed at m = " + std::to_string(m));
        sizes << (m > 1 ? ", " : "") << "omega_" << m << " = " << r.clique.size() << " <= " << bound;
    }
    if (v.pass) v.detail << sizes.str();
}

void blue_cliques(Verdict& v)
{
    for (int m = 1; m <= 5; ++m) {
        const auto c = blue_clique(m);
        v.require(c.size() == pow2(m) && is_clique(cayley_graph(tau_fn(m)), c),
                  "blue clique invalid at m = " + std::to_string(m));
    }
    if (v.pass) v.detail << "2^m-cliques of Cay(tau_m) verified for m = 1..5";
}

void non_isomorphism(Verdict& v)
{
    const auto c4 = nonisomorphism_certificate(4);
    v.require(c4.blue_verified && c4.blue_size >= 16, "m = 4 blue clique below 16");
    v.require(c4.red_omega_exact && c4.red_omega <= 9 && c4.rho == 9, "m = 4 red clique number not certified <= 9");
    v.require(c4.conclusion == "non-isomorphic", "m = 4 conclusion: " + c4.conclusion);
    const auto c5 = nonisomorphism_certificate(5);
    v.require(c5.blue_verified && c5.blue_size == 32 && c5.rho == 10, "m = 5 certificate values");
    v.require(c5.conclusion == "non-isomorphic", "m = 5 conclusion: " + c5.conclusion);
    if (v.pass)
        v.detail << "m = 4: " << c4.blue_size << " > 9 >= " << c4.red_omega << "; m = 5: " << c5.blue_size
                 << " > " << c5.rho << " (analytic)";
}

void small_isomorphism(Verdict& v)
{
    for (int m = 1; m <= 3; ++m) {
        const auto g = cayley_graph(sigma_fn(m)), h = cayley_graph(tau_fn(m));
        const auto c = find_isomorphism(g, h);
        if (c.status == IsoStatus::isomorphic) {
            v.require(verify_isomorphism(g, h, c.mapping, false), "mapping fails verification at m = " + std::to_string(m));
            v.detail << (m > 1 ? ", " : "") << "m = " << m << " mapping verified";
        } else if (m == 3 && c.status == IsoStatus::inconclusive) {
            v.detail << ", m = 3 inconclusive within budget";
        } else {
            v.require(false, std::string("m = ") + std::to_string(m) + " search returned " + to_string(c.status));
        }
    }
}

void hadamard_construction(Verdict& v)
{
    for (int m = 1; m <= 2; ++m) {
        std::vector<SignedPerm> as;
        for (auto i : canonical_transversal(m)) as.push_back(gamma(m, i));
        const auto a = check_A_conditions(as);
        v.require(a.ok, "A conditions fail at m = " + std::to_string(m) + ": " + a.failure);
        if (!a.ok) return;
        const auto b = search_B(as.size(), 1, a.lambdas, kDefaultNodeBudget);
        if (b.status == BSearchStatus::found) {
            v.require(check_B_conditions(b.bs, a.lambdas).ok, "B tuple fails its conditions");
            const auto h = assemble_H(as, b.bs);
            v.require(h.h && h.h->order() == as.size() && is_hadamard(*h.h),
                      "assembled matrix is not Hadamard at m = " + std::to_string(m));
            v.detail << (m > 1 ? ", " : "") << "m = " << m << ": order-" << as.size() << " Hadamard verified";
        } else if (m == 2 && b.status == BSearchStatus::absent_exhaustive) {
            v.detail << ", m = 2: no b = 1 tuple exists (exhaustive)";
        } else {
            v.require(false, std::string("m = ") + std::to_string(m) + ": " + to_string(b.status));
        }
    }
}

void m_function(Verdict& v)
{
    for (int q = 1; q <= 16; ++q) {
        const int ceil_half = (q + 1) / 2;
        const int r = q % 8;
        const int expected = (r == 2 || r == 3 || r == 4) ? ceil_half + 1 : ceil_half;
        v.require(big_M(q) == expected, "M(" + std::to_string(q) + ")");
    }
    v.require(big_M(1) == 1 && big_M(3) == 3 && big_M(15) == 8, "spot values");
    if (v.pass) v.detail << "q = 1..16 match; M(1) = 1, M(3) = 3, M(15) = 8";
}

void conjectures(Verdict& v)
{
    const auto r4 = conjecture_report(4);
    v.require(r4.counterexample.has_value(), "no counterexample at m = 4");
    if (r4.counterexample) {
        const auto& ce = *r4.counterexample;
        v.require(ce.transversal.vertices == blue_clique(4) && is_valid_transversal(ce.transversal),
                  "counterexample is not the all-blue transversal");
        v.require(ce.obstruction == "rho(16)=9 < 16", "obstruction: " + ce.obstruction);
        v.require(complement_exists(ce.transversal).status == ComplementStatus::not_found,
                  "complement search disagrees");
    }
    for (int m = 1; m <= 2; ++m) {
        const auto r = conjecture_report(m);
        v.require(r.complete && r.total == transversal_count(m), "incomplete enumeration at m = " + std::to_string(m));
        v.require(r.unpaired == 0 && r.inconclusive == 0 && r.paired + r.self_complementary == r.total,
                  "unpaired transversals at m = " + std::to_string(m));
        v.require(r.pairing_consistent.value_or(false), "pairing inconsistent at m = " + std::to_string(m));
    }
    if (v.pass) v.detail << "m = 4 all-blue counterexample, rho(16)=9 < 16; m = 1, 2 fully paired";
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria = {
        {1, "bentness", 1.0, bentness},
        {2, "digit/matrix oracle equivalence", 5.0, oracle_equivalence},
        {3, "strong regularity", 30.0, strong_regularity},
        {4, "graph identification", 0.0, identification},
        {5, "Hurwitz-Radon clique bound", 0.0, hurwitz_radon_bound},
        {6, "blue clique", 1.0, blue_cliques},
        {7, "non-isomorphism certificate", 0.0, non_isomorphism},
        {8, "isomorphism at small m", 0.0, small_isomorphism},
        {9, "Hadamard construction", 10.0, hadamard_construction},
        {10, "M function", 0.0, m_function},
        {11, "conjecture falsification", 0.0, conjectures},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        Verdict v;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.body(v);
        } catch (const std::exception& e) {
            v.require(false, std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.time_limit_s > 0 && seconds >= c.time_limit_s) {
            std::ostringstream limit;
            limit << "took " << seconds << " s, limit " << c.time_limit_s << " s";
            v.require(false, limit.str());
        }
        if (!v.pass) ++failures;
        std::printf("%s [%2d] %s (%.2f s): %s\n", v.pass ? "PASS" : "FAIL", c.number, c.name.c_str(), seconds,
                    v.detail.str().c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
