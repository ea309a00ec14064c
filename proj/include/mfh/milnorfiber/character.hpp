#pragma once

#include <cstddef>
#include <vector>

#include "mfh/exactnum/field.hpp"
#include "mfh/foxcalc/fox.hpp"
#include "mfh/grouppres/arrangement.hpp"

namespace mfh {

/// Finite-order rank-one character of the arrangement group: hyperplane i
/// goes to root^{exponents[i]} for a fixed primitive root of order N in the
/// field. Exponents are per hyperplane in ArrangementSpec order.
struct Character {
    int p = 0;
    long long order = 1;
    std::vector<long long> exponents;
    Field field;

    /// Throws std::invalid_argument on wrong length, N < 1, or a field
    /// without a primitive N-th root of unity. Exponents are reduced mod N.
    Character(int p, long long order, std::vector<long long> exponents, Field field);

    FieldScalar value(std::size_t hyperplane) const;
    std::vector<FieldScalar> values() const;
    bool is_trivial() const;
    /// Product of all values is 1, i.e. the exponents sum to 0 mod N.
    bool tau_trivial() const;
    /// Restriction to the deconed generators (g1, g12:1..p, y1..y2p).
    CyclicCharacter deconed() const;
    /// On the cone generators (g1, g2, g12:1..p, y1..y2p).
    CyclicCharacter cone() const;
    /// Multiplicative order of the character (divides N).
    long long exact_order() const;
};

/// t(k) = lambda_a^{N/k}: hyperplane i goes to t^{a_i} with t = zeta_N^{N/k}.
/// Throws std::invalid_argument if k does not divide N, k == 1, or the field
/// lacks a primitive N-th root of unity.
Character character_tk(const ArrangementSpec& spec, long long k, const Field& field);
/// lambda_a^j, the character of the monodromy eigenspace for zeta_N^j.
Character character_power(const ArrangementSpec& spec, long long j, const Field& field);

/// Alexander matrix of the deconed presentation of d A_p, built once per p.
const LaurentMatrix& deconed_alexander(int p);

/// dim H1(G; K_ch) from a specialized Alexander matrix: columns - 1 - rank
/// for nontrivial ch, columns - rank for the trivial one.
std::size_t depth_from_specialization(const Matrix<FieldScalar>& m, bool trivial);
std::size_t depth(const GroupPresentation& pr, const CyclicCharacter& ch, const Field& field);
/// Values per generator, in the presentation's generator order.
std::size_t depth(const GroupPresentation& pr, const std::vector<FieldScalar>& values, const Field& field);
/// Depth on the deconed presentation of d A_p.
std::size_t depth(const Character& ch);

struct AdditivityReport {
    std::size_t cone_depth = 0;
    std::size_t deconed_depth = 0;
    std::size_t depth0 = 0;
    bool holds = false;
};

/// Compares depth on the cone presentation with depth on the deconed one
/// plus depth^0 (1 for the trivial character, else 0). Throws
/// std::invalid_argument unless tau(ch) = 1.
AdditivityReport depth_additivity_check(const Character& ch, bool central = true);

/// Point of (K^x)^{3p+2} in hyperplane order (z1, z2, z12:., z13:., z23:.).
struct CVPoint {
    int p = 0;
    Field field;
    std::vector<FieldScalar> coordinates;
    /// Set when the field has characteristic p: w collapses to 1 and C_i is
    /// a subtorus through 1 rather than a translated one.
    bool degenerate = false;

    /// Coordinatewise product; both points must share p and field.
    CVPoint operator*(const CVPoint& other) const;
};

/// (u^p, v^p, w..w, v..v, u..u) with w = root_of_unity(p, i) and v = (uw)^{-1}.
/// Throws std::invalid_argument if i is outside 1..p-1 or u is zero.
CVPoint cv_component_point(int p, int i, const FieldScalar& u);
/// (u^p, v^p, 1..1, v..v, u..u) with v = u^{-1}.
CVPoint t_point(int p, const FieldScalar& u);
/// (1, 1, c12..c12, c13..c13, c23..c23) for constants per family.
CVPoint family_point(int p, const FieldScalar& c12, const FieldScalar& c13, const FieldScalar& c23);
/// Depth of the point restricted to the deconed presentation. Throws
/// std::invalid_argument unless the coordinates multiply to 1.
std::size_t depth(const CVPoint& pt);

/// Multiplicities a with s = t^{N/k}, where k is the order of s and
/// N = sum a_i: a_i in [1, k] represents s_i, and a_1 may move into
/// [k+1, 2k] to get gcd(a) = 1 and, for characteristic > 0, char not
/// dividing N. Throws std::invalid_argument unless tau(s) = 1, and
/// std::domain_error if no admissible a_1 exists.
std::vector<long long> multiplicities_from_character(const Character& s, unsigned characteristic = 0);

}  // namespace mfh
