#pragma once

#include <functional>
#include <string>
#include <vector>

#include "mfh/exactla/matrix.hpp"

namespace mfh {

struct SmithForm {
    /// Nonzero invariant factors d1 | d2 | ... (units included).
    std::vector<BigInt> invariant_factors;
    std::size_t rank() const { return invariant_factors.size(); }
    std::string to_string() const;
};

/// Diagonalization U * A * V = D with D diagonal (nonzero entries first).
/// The diagonal is not normalized to a divisibility chain; U and U^-1 are
/// tracked when requested.
struct Diagonalization {
    std::vector<BigInt> diagonal;  // |D(i,i)| for i < rank, all positive
    IntMatrix U, U_inv;            // empty unless tracked
};

using ProgressFn = std::function<void(std::size_t done, std::size_t total)>;

/// Works on a copy of a. Pivot: nonzero entry of least absolute value, first
/// by row then column.
Diagonalization diagonalize(IntMatrix a, bool track_rows = false, const ProgressFn& progress = {});

/// Normalizes any list of nonzero integers to the invariant-factor chain of
/// the direct sum of the corresponding cyclic groups.
std::vector<BigInt> invariant_factor_chain(const std::vector<BigInt>& diagonal);

SmithForm smith_normal_form(const IntMatrix& a, const ProgressFn& progress = {});

/// Columns form a saturated lattice basis of {v : m v = 0}.
IntMatrix integer_kernel_basis(const IntMatrix& m);

/// Kernel data for subquotient computations: basis columns K (n x k) and a
/// coordinate map C (k x n) with C * K = I and C * v the coordinates of any
/// kernel vector v.
struct KernelData {
    IntMatrix basis;
    IntMatrix coords;
    std::size_t rank_of_map = 0;
};
KernelData integer_kernel(const IntMatrix& m);

/// Free rank plus torsion invariant factors (each > 1, each dividing the next).
struct AbelianGroup {
    std::size_t free_rank = 0;
    std::vector<BigInt> torsion;

    /// "Z^7 + Z/2 + Z/2", "0" for the trivial group.
    std::string to_string() const;
    /// Distinct primes dividing the torsion order.
    std::vector<BigInt> torsion_primes() const;
    /// Invariant factors of the q-primary part.
    std::vector<BigInt> primary_part(const BigInt& q) const;
    bool operator==(const AbelianGroup& rhs) const { return free_rank == rhs.free_rank && torsion == rhs.torsion; }
};

/// Cokernel Z^rows / im(a).
AbelianGroup cokernel(const IntMatrix& a);

/// Distinct prime factors by trial division (fine for the small torsion here).
std::vector<BigInt> prime_divisors(BigInt n);

}  // namespace mfh
