#include "twinbent/cliques.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "twinbent/bent.hpp"
#include "twinbent/clifford.hpp"

namespace twinbent {

int rho(std::uint64_t n)
{
    if (n == 0 || !std::has_single_bit(n)) throw std::invalid_argument("rho: n must be a power of 2");
    const int e = std::countr_zero(n);
    const int d = e / 4;
    const int c = e % 4;
    return (1 << c) + 8 * d;
}

bool is_hr_family(std::span<const SignedPerm> family)
{
    for (std::size_t j = 0; j < family.size(); ++j) {
        if (family[j].order() != family.front().order())
            throw std::invalid_argument("is_hr_family: members have different orders");
        if (transpose(family[j]) != -family[j]) return false;
    }
    for (std::size_t j = 0; j < family.size(); ++j)
        for (std::size_t k = j + 1; k < family.size(); ++k)
            if (multiply(family[j], family[k]) != -multiply(family[k], family[j])) return false;
    return true;
}

std::vector<std::uint32_t> blue_clique(int m)
{
    require_half_rank(m);
    // Spread the m bits of k onto the high bit of each base-4 digit.
    std::vector<std::uint32_t> out;
    for (std::uint32_t k = 0; k < (1u << m); ++k) {
        std::uint32_t v = 0;
        for (int d = 0; d < m; ++d)
            if ((k >> d) & 1u) v |= 2u << (2 * d);
        out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::uint32_t> translate_clique(std::span<const std::uint32_t> clique, std::uint32_t c)
{
    std::vector<std::uint32_t> out;
    out.reserve(clique.size());
    for (auto v : clique) out.push_back(v ^ c);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SignedPerm> red_clique_to_hr(std::span<const std::uint32_t> clique, int m)
{
    const auto sigma = sigma_fn(m);
    for (auto v : clique)
        if (v >= sigma.size()) throw std::invalid_argument("red_clique_to_hr: vertex out of range");
    for (std::size_t a = 0; a < clique.size(); ++a)
        for (std::size_t b = a + 1; b < clique.size(); ++b)
            if (!sigma[clique[a] ^ clique[b]])
                throw std::invalid_argument("red_clique_to_hr: input is not a clique of Cay(sigma_m)");

    std::vector<std::uint32_t> based(clique.begin(), clique.end());
    if (!based.empty() && std::find(based.begin(), based.end(), 0u) == based.end())
        based = translate_clique(clique, *std::min_element(clique.begin(), clique.end()));

    std::vector<SignedPerm> family;
    for (auto v : based)
        if (v != 0) family.push_back(gamma(m, v));
    if (!is_hr_family(family)) throw std::logic_error("red_clique_to_hr: image is not a Hurwitz-Radon family");
    return family;
}

HrFamilySearch max_hr_family(int m, const CliqueOptions& options)
{
    const auto skew = sigma_fn(m).support();
    LabeledGraph anticommuting(skew.size());
    for (std::uint32_t a = 0; a < skew.size(); ++a) {
        for (std::uint32_t b = a + 1; b < skew.size(); ++b) {
            const auto ab = index_product(m, skew[a], skew[b]);
            const auto ba = index_product(m, skew[b], skew[a]);
            if (ab.sign == -ba.sign) anticommuting.add_edge(a, b);
        }
    }
    const auto report = max_clique(anticommuting, options, "anticommuting-skew");
    HrFamilySearch out;
    out.exact = report.exact;
    for (auto k : report.clique) out.members.push_back(skew[k]);
    return out;
}

NonIsoCertificate nonisomorphism_certificate(int m, const CertificateOptions& options)
{
    require_half_rank(m);
    NonIsoCertificate cert;
    cert.m = m;
    const std::uint64_t order = std::uint64_t{1} << m;
    cert.rho = rho(order);
    cert.applicable = static_cast<std::uint64_t>(cert.rho) < order;

    const auto tau = tau_fn(m);
    cert.blue_clique = blue_clique(m);
    cert.blue_size = cert.blue_clique.size();
    cert.blue_verified = true;
    for (std::size_t a = 0; a < cert.blue_clique.size(); ++a)
        for (std::size_t b = a + 1; b < cert.blue_clique.size(); ++b)
            if (!tau[cert.blue_clique[a] ^ cert.blue_clique[b]]) cert.blue_verified = false;

    cert.red_omega = static_cast<std::uint64_t>(cert.rho);
    const bool run_exact = options.exact_red_omega.value_or(m <= 4);
    if (run_exact) {
        const auto report = max_clique(cayley_graph(sigma_fn(m)), options.clique, "Cay(sigma)");
        if (report.exact) {
            cert.red_omega = report.clique.size();
            cert.red_omega_exact = true;
            cert.red_clique = report.clique;
            cert.hr_family_size = red_clique_to_hr(report.clique, m).size();
        } else {
            cert.note = "clique search budget exhausted; using the Hurwitz-Radon bound rho(2^m)";
        }
    } else {
        cert.note = "clique number bounded analytically by rho(2^m)";
    }

    if (!cert.applicable) {
        cert.conclusion = "not applicable: rho(" + std::to_string(order) + ") = " + std::to_string(cert.rho)
                          + " = 2^" + std::to_string(m);
    } else if (cert.blue_verified && cert.red_omega <= static_cast<std::uint64_t>(cert.rho)
               && cert.red_omega < cert.blue_size) {
        cert.conclusion = "non-isomorphic";
    } else {
        cert.conclusion = "failed: certificate did not verify";
    }
    return cert;
}

nlohmann::json to_json(const NonIsoCertificate& cert)
{
    nlohmann::json j = {{"m", cert.m},
                        {"rho", cert.rho},
                        {"blue", cert.blue_size},
                        {"blue_clique", cert.blue_clique},
                        {"blue_verified", cert.blue_verified},
                        {"red_omega", {{"value", cert.red_omega}, {"exact", cert.red_omega_exact}}},
                        {"conclusion", cert.conclusion}};
    if (cert.red_clique) j["red_clique"] = *cert.red_clique;
    if (cert.hr_family_size) j["hr_family_size"] = *cert.hr_family_size;
    if (!cert.note.empty()) j["note"] = cert.note;
    return j;
}

} // namespace twinbent
