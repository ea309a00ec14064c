#pragma once

#include <vector>

#include "mfh/exactla/smith.hpp"
#include "mfh/foxcalc/fox.hpp"
#include "mfh/grouppres/presentation.hpp"

namespace mfh {

/// First homology of the N-fold cyclic cover of a presentation 2-complex,
/// classified by lam, together with the deck transformation g.
class CyclicCoverHomology {
public:
    /// Throws std::invalid_argument when lam is not surjective (the cover is
    /// disconnected) or its length differs from the generator count.
    CyclicCoverHomology(const GroupPresentation& pr, const CyclicCharacter& lam, const ProgressFn& progress = {});

    const AbelianGroup& group() const { return group_; }
    long long order() const { return lam_.order; }

    /// Cyclic decomposition used for the deck action: H1 = (+) Z/d_i (+) Z^f,
    /// with d_i > 1 (not necessarily a divisibility chain).
    const std::vector<BigInt>& cyclic_orders() const { return cyclic_; }

    /// Deck action on the torsion summands: entry (i, j) is the coefficient
    /// of generator i in g * (generator j), reduced mod cyclic_orders()[i].
    const IntMatrix& torsion_action() const { return torsion_action_; }
    /// Deck action on H1 / torsion.
    const IntMatrix& free_action() const { return free_action_; }

    /// Action on the q-primary part in the basis of generators of its cyclic
    /// summands; entries mod the target summand's order.
    IntMatrix primary_action(const BigInt& q, std::vector<BigInt>* orders = nullptr) const;

    /// Boundary matrices of the cover's chain complex (column convention).
    static IntMatrix boundary1(const CyclicCharacter& lam);
    static IntMatrix boundary2(const LaurentMatrix& alexander, const CyclicCharacter& lam);

private:
    CyclicCharacter lam_;
    AbelianGroup group_;
    std::vector<BigInt> cyclic_;
    IntMatrix torsion_action_, free_action_;
};

AbelianGroup cover_h1(const GroupPresentation& pr, const CyclicCharacter& lam);

/// Multiplicative order of the deck action on a group given by cyclic
/// summands (entries of action(i, .) read mod orders[i]); 0 if it exceeds cap.
long long action_order(const IntMatrix& action, const std::vector<BigInt>& orders, long long cap = 1000);
/// Multiplicative order of an integer matrix on a free module; 0 if above cap.
long long free_action_order(const IntMatrix& action, long long cap = 1000);

}  // namespace mfh
