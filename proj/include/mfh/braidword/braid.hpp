#pragma once

#include <string>
#include <vector>

#include "mfh/braidword/free_word.hpp"

namespace mfh {

/// Braid word on s strands: letter +i is sigma_i, -i is sigma_i^-1.
class BraidWord {
public:
    BraidWord() = default;
    /// Throws std::invalid_argument if a letter is 0 or |letter| >= strands.
    BraidWord(int strands, std::vector<int> letters);
    static BraidWord sigma(int strands, int i, int exponent = 1);

    int strands() const { return strands_; }
    const std::vector<int>& letters() const { return letters_; }

    BraidWord operator*(const BraidWord& rhs) const;
    BraidWord inverse() const;
    BraidWord pow(long long e) const;

    /// Strand permutation: result[k] is where the strand starting at k ends (0-based).
    std::vector<int> permutation() const;
    bool is_pure() const;

    /// "s: l1 l2 ..." with the strand count as header.
    std::string to_string() const;
    static BraidWord parse(const std::string& text);

private:
    int strands_ = 1;
    std::vector<int> letters_;
};

/// Crossing and composition choices for the Artin action.
struct ArtinConvention {
    /// false: sigma_i sends y_i -> y_i y_{i+1} y_i^-1, y_{i+1} -> y_i.
    /// true: sigma_i acts as the inverse of that map.
    bool mirror = false;
    /// false: the rightmost letter acts first (b -> action is a homomorphism).
    /// true: the leftmost letter acts first (an anti-homomorphism).
    bool leftmost_first = false;
    CommutatorConvention commutator = CommutatorConvention::ABAinvBinv;

    bool operator==(const ArtinConvention&) const = default;
    std::string to_string() const;
};

/// The convention reproducing the closed-form actions of the named braids;
/// pinned by pin_artin_convention() and asserted in the tests.
inline constexpr ArtinConvention kArtinConvention{false, true, CommutatorConvention::ABAinvBinv};

FreeGroupEndo artin_automorphism(const BraidWord& b, const ArtinConvention& conv = kArtinConvention);
FreeWord artin_action(const BraidWord& b, const FreeWord& w, const ArtinConvention& conv = kArtinConvention);

/// A_{i,j} = (sigma_{j-1}...sigma_{i+1}) sigma_i^2 (sigma_{i+1}^-1...sigma_{j-1}^-1).
BraidWord pure_braid_generator(int strands, int i, int j);
/// (sigma_1...sigma_{s-1})^s.
BraidWord full_twist(int strands);

struct MonodromyBraids {
    int p = 0;
    BraidWord rho0, rho1, tau;
    BraidWord Z1, Z2;
    std::vector<BraidWord> A12;  // A12[r-1] = A_{1,2}^{(r)}, r = 1..p
    BraidWord zfrak;              // tau Z1 tau^-1
    BraidWord afrak;              // tau A_{1,2}^{(p)} tau^-1
    std::vector<BraidWord> afrak_j;  // tau A_{1,2}^{(j)} tau^-1, j = 1..p-1
};

/// The braids of the monodromy of the deleted monomial arrangement on 2p strands.
MonodromyBraids monodromy_braids(int p);

/// A_{1,2} A_{3,4} ... A_{2p-1,2p}.
BraidWord odd_pair_product(int p);
/// prod_{j=2..p} (A_{1,2j-1} A_{3,2j-1} ... A_{2j-3,2j-1}).
BraidWord odd_full_twist(int p);

/// Closed-form actions of zfrak and afrak on the paired basis u_r, v_r, as
/// endomorphisms written in that basis.
FreeGroupEndo zfrak_formula(int p, CommutatorConvention conv);
FreeGroupEndo afrak_formula(int p);

struct BraidIdentityReport {
    bool afrak_combing = false;  // tau A^{(p)} tau^-1 acts as odd_pair_product
    bool zfrak_combing = false;  // tau Z1 tau^-1 acts as odd_full_twist
    bool zfrak_action = false;   // matches zfrak_formula
    bool afrak_action = false;   // matches afrak_formula
    bool all() const { return afrak_combing && zfrak_combing && zfrak_action && afrak_action; }
};

BraidIdentityReport check_braid_identities(int p, const ArtinConvention& conv = kArtinConvention);

/// All conventions (out of the eight crossing x order x commutator choices)
/// under which the identities hold for every odd p in the list.
std::vector<ArtinConvention> pin_artin_convention(const std::vector<int>& primes = {3, 5});

}  // namespace mfh
