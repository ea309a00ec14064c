#include "mfh/grouppres/arrangement.hpp"

#include <numeric>
#include <stdexcept>

#include "json.hpp"
#include "mfh/exactnum/number_theory.hpp"

namespace mfh {

std::vector<std::string> hyperplane_labels(int p) {
    std::vector<std::string> l{"H1", "H2"};
    for (const char* pre : {"H12:", "H13:", "H23:"})
        for (int r = 1; r <= p; ++r) l.push_back(pre + std::to_string(r));
    return l;
}

int ArrangementSpec::index_of(const std::string& label) const {
    for (int i = 0; i < size(); ++i)
        if (labels[i] == label) return i;
    throw std::out_of_range("unknown hyperplane " + label);
}

ArrangementSpec arrangement_spec(int p, const std::optional<std::vector<long long>>& mult) {
    if (p < 2 || !is_prime(p)) throw std::invalid_argument("p must be a prime");
    ArrangementSpec s;
    s.p = p;
    s.labels = hyperplane_labels(p);
    const std::size_t n = 3 * p + 2;
    if (mult) {
        s.multiplicities = *mult;
    } else if (p == 2) {
        s.multiplicities = {2, 1, 3, 3, 2, 2, 1, 1};
    } else {
        s.multiplicities.assign(n, 1);
        for (int r = 0; r < p; ++r) s.multiplicities[2 + r] = 2;
    }
    if (s.multiplicities.size() != n)
        throw std::invalid_argument("expected " + std::to_string(n) + " multiplicities, got " +
                                    std::to_string(s.multiplicities.size()));
    long long g = 0;
    for (long long a : s.multiplicities) {
        if (a <= 0) throw std::invalid_argument("multiplicities must be positive");
        g = std::gcd(g, a);
        s.total_degree += a;
    }
    if (g != 1) throw std::invalid_argument("multiplicities must have gcd 1");
    for (int k = 1; k <= p; ++k) s.strand_hyperplane.push_back(s.index_of("H13:" + std::to_string(p + 1 - k)));
    for (int k = 1; k <= p; ++k) s.strand_hyperplane.push_back(s.index_of("H23:" + std::to_string(p + 1 - k)));
    return s;
}

std::string ArrangementSpec::to_json() const {
    nlohmann::ordered_json j;
    j["p"] = p;
    j["N"] = total_degree;
    j["deconed_at"] = deconed_at;
    j["order"] = labels;
    nlohmann::ordered_json m;
    for (int i = 0; i < size(); ++i) m[labels[i]] = multiplicities[i];
    j["multiplicities"] = m;
    return j.dump(1);
}

ArrangementSpec ArrangementSpec::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("arrangement is not valid JSON: ") + e.what());
    }
    const int p = j.at("p").get<int>();
    std::vector<long long> a;
    for (const auto& label : hyperplane_labels(p)) a.push_back(j.at("multiplicities").at(label).get<long long>());
    ArrangementSpec s = arrangement_spec(p, a);
    if (j.contains("N") && j["N"].get<long long>() != s.total_degree)
        throw std::invalid_argument("N does not match the multiplicities");
    return s;
}

namespace {

std::vector<std::string> deconed_base(int p) {
    std::vector<std::string> b{"g1"};
    for (int r = 1; r <= p; ++r) b.push_back("g12:" + std::to_string(r));
    return b;
}

std::vector<std::string> uv_names(int p) {
    std::vector<std::string> f;
    for (int r = 1; r <= p; ++r) f.push_back("u" + std::to_string(r));
    for (int r = 1; r <= p; ++r) f.push_back("v" + std::to_string(r));
    return f;
}

SemidirectData deconed_data(int p) {
    const MonodromyBraids b = monodromy_braids(p);
    SemidirectData d;
    d.fiber_rank = 2 * p;
    d.base_generators = deconed_base(p);
    d.monodromy.push_back(b.Z1);
    for (const auto& a : b.A12) d.monodromy.push_back(a);
    return d;
}

}  // namespace

GroupPresentation build_deconed_presentation(int p) { return semidirect_presentation(deconed_data(p)); }

GroupPresentation build_prefix_deconed_presentation(int p) {
    SemidirectData d = deconed_data(p);
    d.fiber_names = uv_names(p);
    d.basis = prefix_basis(p);
    return semidirect_presentation(d);
}

GroupPresentation build_alternate_deconed_presentation(int p) {
    if (p < 3 || p % 2 == 0) throw std::invalid_argument("the alternate presentation needs an odd prime p");
    const MonodromyBraids b = monodromy_braids(p);
    SemidirectData d;
    d.fiber_rank = 2 * p;
    d.base_generators = deconed_base(p);
    d.monodromy.push_back(b.zfrak);
    for (const auto& a : b.afrak_j) d.monodromy.push_back(a);
    d.monodromy.push_back(b.afrak);
    d.fiber_names = uv_names(p);
    d.basis = paired_basis(p);
    return semidirect_presentation(d);
}

GroupPresentation build_cone_presentation(int p, bool central) {
    const MonodromyBraids b = monodromy_braids(p);
    SemidirectData d;
    d.fiber_rank = 2 * p;
    d.base_generators = {"g1", "g2"};
    for (int r = 1; r <= p; ++r) d.base_generators.push_back("g12:" + std::to_string(r));
    d.monodromy = {b.Z1, b.Z2};
    for (const auto& a : b.A12) d.monodromy.push_back(a);
    if (central) {
        // Base index: g1 = 1, g2 = 2, g12:r = 2 + r.
        FreeWord G = FreeWord::generator(1);
        for (int r = 1; r <= p - 1; ++r) G *= FreeWord::generator(2 + r);
        G *= FreeWord::generator(2) * FreeWord::generator(2 + p);
        d.base_relators.push_back(commutator(G, FreeWord::generator(1)));
        for (int r = 1; r <= p; ++r) d.base_relators.push_back(commutator(G, FreeWord::generator(2 + r)));
    }
    return semidirect_presentation(d);
}

namespace {

// Fiber images of tau's action, abelianized: y_i -> y_{perm[i]}.
std::vector<int> tau_fiber_permutation(int p) {
    const FreeGroupEndo t = artin_automorphism(monodromy_braids(p).tau);
    std::vector<int> perm(2 * p);
    for (int i = 1; i <= 2 * p; ++i) {
        std::vector<long long> sums(2 * p + 1, 0);
        for (const auto& [g, e] : t.image(i).letters()) sums[g] += e;
        int hit = -1;
        for (int g = 1; g <= 2 * p; ++g)
            if (sums[g] == 1) hit = g;
            else if (sums[g] != 0) throw std::logic_error("tau image is not a conjugate of a generator");
        perm[i - 1] = hit;
    }
    return perm;
}

}  // namespace

std::vector<long long> deconed_to_alternate(int p, const std::vector<long long>& dec) {
    if (static_cast<int>(dec.size()) != 3 * p + 1) throw std::invalid_argument("deconed exponent vector length");
    // The tau-conjugated presentation maps onto the original by y'_i -> tau(y_i).
    const std::vector<int> perm = tau_fiber_permutation(p);
    std::vector<long long> y(2 * p);
    for (int i = 0; i < 2 * p; ++i) y[i] = dec[p + perm[i]];
    std::vector<long long> out(dec.begin(), dec.begin() + p + 1);
    long long prefix = 0;
    std::vector<long long> u, v;
    for (int r = 1; r <= p; ++r) {
        prefix += y[2 * r - 2] + y[2 * r - 1];
        u.push_back(prefix);
        v.push_back(y[2 * r - 2]);
    }
    out.insert(out.end(), u.begin(), u.end());
    out.insert(out.end(), v.begin(), v.end());
    return out;
}

std::vector<long long> deconed_to_prefix(int p, const std::vector<long long>& dec) {
    if (static_cast<int>(dec.size()) != 3 * p + 1) throw std::invalid_argument("deconed exponent vector length");
    std::vector<long long> out(dec.begin(), dec.begin() + p + 1);
    long long prefix = 0;
    for (int r = 1; r <= p; ++r) {
        prefix += dec[p + r];
        out.push_back(prefix);
    }
    for (int r = 1; r <= p; ++r) out.push_back(dec[2 * p + r]);
    return out;
}

}  // namespace mfh
