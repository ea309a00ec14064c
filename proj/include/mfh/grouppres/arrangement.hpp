#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mfh/grouppres/presentation.hpp"

namespace mfh {

/// The deleted monomial arrangement x1 x2 (x1^p - x2^p)(x1^p - x3^p)(x2^p - x3^p)
/// with multiplicities. Hyperplane order: H1, H2, H12:1..p, H13:1..p, H23:1..p.
struct ArrangementSpec {
    int p = 0;
    std::vector<std::string> labels;
    std::vector<long long> multiplicities;
    long long total_degree = 0;
    std::string deconed_at = "H2";
    /// strand_hyperplane[k-1] = 0-based hyperplane index of strand k.
    std::vector<int> strand_hyperplane;

    int size() const { return static_cast<int>(labels.size()); }
    /// 0-based position; throws std::out_of_range.
    int index_of(const std::string& label) const;

    /// Reorders per-hyperplane values to the deconed generator order
    /// (g1, g12:1..p, y1..y2p); the deconing hyperplane H2 is dropped.
    template <class T>
    std::vector<T> to_deconed(const std::vector<T>& per_hyperplane) const;
    /// Per-hyperplane values to the cone generator order (g1, g2, g12:1..p, y1..y2p).
    template <class T>
    std::vector<T> to_cone(const std::vector<T>& per_hyperplane) const;

    /// {"p": p, "N": N, "deconed_at": "H2", "multiplicities": {label: a, ...}, "order": [labels]}
    std::string to_json() const;
    static ArrangementSpec from_json(const std::string& text);
};

std::vector<std::string> hyperplane_labels(int p);

/// Default multiplicities when mult is empty: (1,1,2..2,1..1,1..1) for odd
/// p, (2,1,3,3,2,2,1,1) for p = 2. Throws std::invalid_argument on wrong
/// length, nonpositive entries, or gcd != 1.
ArrangementSpec arrangement_spec(int p, const std::optional<std::vector<long long>>& mult = std::nullopt);

/// Generators g1, g12:1..p, y1..y2p; monodromy Z1 and A12^(r). 3p+1
/// generators, 2p(p+1) relators.
GroupPresentation build_deconed_presentation(int p);
/// As above with fiber generators u_r = y1..yr, v_r = y_{p+r}.
GroupPresentation build_prefix_deconed_presentation(int p);
/// Generators g1, g12:1..p, u1..up, v1..vp with u_r = y1..y_{2r},
/// v_r = y_{2r-1}; monodromy zfrak, afrak_j, afrak. Odd p only.
GroupPresentation build_alternate_deconed_presentation(int p);
/// Generators g1, g2, g12:1..p, y1..y2p; monodromy Z1, Z2, A12^(r). With
/// central = true the base relators [G, g1], [G, g12:r] are appended, where
/// G = g1 g12:1 ... g12:{p-1} g2 g12:p is the central element of the base.
GroupPresentation build_cone_presentation(int p, bool central = true);

/// Exponent vector on the alternate presentation's generators from one on
/// the deconed presentation's generators (additive, mod nothing).
std::vector<long long> deconed_to_alternate(int p, const std::vector<long long>& deconed);
/// Exponent vector on the prefix presentation's generators.
std::vector<long long> deconed_to_prefix(int p, const std::vector<long long>& deconed);

template <class T>
std::vector<T> ArrangementSpec::to_deconed(const std::vector<T>& v) const {
    std::vector<T> out;
    out.push_back(v.at(0));
    for (int r = 0; r < p; ++r) out.push_back(v.at(2 + r));
    for (int h : strand_hyperplane) out.push_back(v.at(h));
    return out;
}

template <class T>
std::vector<T> ArrangementSpec::to_cone(const std::vector<T>& v) const {
    std::vector<T> out{v.at(0), v.at(1)};
    for (int r = 0; r < p; ++r) out.push_back(v.at(2 + r));
    for (int h : strand_hyperplane) out.push_back(v.at(h));
    return out;
}

}  // namespace mfh
