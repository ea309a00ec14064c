#pragma once

#include <vector>

#include "mfh/braidword/braid.hpp"
#include "mfh/exactla/matrix.hpp"
#include "mfh/exactnum/field.hpp"
#include "mfh/foxcalc/laurent.hpp"
#include "mfh/grouppres/presentation.hpp"

namespace mfh {

using LaurentMatrix = Matrix<LaurentPoly>;

/// Abelianized Fox derivative of w with respect to generator g (1-based) in
/// nvars commuting variables.
LaurentPoly fox_derivative(const FreeWord& w, int g, std::size_t nvars);
/// All derivatives of w at once: entry g-1 is d w / d x_g.
std::vector<LaurentPoly> fox_gradient(const FreeWord& w, std::size_t nvars);

/// Rows: relators, columns: generators.
LaurentMatrix alexander_matrix(const GroupPresentation& pr);

/// Abelianized Fox Jacobian of the Artin action of a pure braid, in the
/// variables y1..yn. Throws std::invalid_argument for non-pure braids.
LaurentMatrix gassner_matrix(const BraidWord& b);
/// Same, with the free group taken in the given coordinates.
LaurentMatrix gassner_matrix(const BraidWord& b, const BasisChange& basis);
/// Jacobian of an arbitrary endomorphism.
LaurentMatrix fox_jacobian(const FreeGroupEndo& e);

/// Homomorphism to Z_N: generator i -> g^{exponents[i]}.
struct CyclicCharacter {
    std::vector<long long> exponents;
    long long order = 1;

    bool is_trivial() const;
    /// True iff the exponents together with N generate Z_N.
    bool is_surjective() const;
};

/// Entry -> element of Z[Z_N] as its coefficient vector on 1, g, ..., g^{N-1}.
std::vector<BigInt> to_group_ring(const LaurentPoly& f, const CyclicCharacter& lam);

/// Entrywise value at the character lam composed with g -> root, a fixed
/// primitive N-th root of unity of the field. Throws std::invalid_argument
/// if the field lacks that root or lam has the wrong length.
Matrix<FieldScalar> specialize_character(const LaurentMatrix& m, const CyclicCharacter& lam, const Field& field);
/// Entrywise value at explicit invertible values per variable.
Matrix<FieldScalar> specialize_values(const LaurentMatrix& m, const std::vector<FieldScalar>& values, const Field& field);

/// Each entry becomes the N x N matrix of multiplication by its image in
/// Z[Z_N], in the basis 1, g, ..., g^{N-1} (multiplication by g sends basis
/// vector i to i+1 mod N). Output is (rows*N) x (cols*N); block (r, c) is the
/// image of entry (r, c).
IntMatrix specialize_groupring(const LaurentMatrix& m, const CyclicCharacter& lam);

/// Multiplication-by-x operator on Z[Z_N] for x given by its coefficients.
IntMatrix circulant(const std::vector<BigInt>& x);

}  // namespace mfh
