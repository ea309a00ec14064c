#pragma once

#include <cstddef>
#include <vector>

#include "mfh/exactla/cover.hpp"
#include "mfh/milnorfiber/character.hpp"

namespace mfh {

struct FieldHomology {
    long long N = 0;
    Field field;
    /// n - 1 + sum over divisors k != 1 of phi(k) depth(t(k)).
    std::size_t dimension = 0;
    /// (k, depth(t(k))) for every divisor k != 1 of N, increasing k.
    std::vector<std::pair<long long, std::size_t>> depth_by_divisor;
    /// dim H1(U; K_{t^j}) for j = 0..N-1, each computed directly.
    std::vector<std::size_t> eigenspaces;

    std::size_t eigenspace_total() const;
};

/// Throws std::invalid_argument if the field has characteristic dividing N
/// or lacks a primitive N-th root of unity. Independent depth evaluations
/// run on up to `threads` workers; the result does not depend on it.
FieldHomology milnor_h1_field(const ArrangementSpec& spec, const Field& field, unsigned threads = 1);

struct PrimaryMonodromy {
    BigInt prime;
    /// Orders of the cyclic summands the action is written on.
    std::vector<BigInt> orders;
    IntMatrix action;
    long long action_order = 0;
};

struct IntegralHomology {
    AbelianGroup group;
    std::vector<BigInt> torsion_primes;
    /// {p} together with the primes of 2(2p+1).
    std::vector<BigInt> envelope;
    bool envelope_ok = false;
    /// Invariant factors of the p-primary part.
    std::vector<BigInt> p_primary;
    std::vector<PrimaryMonodromy> monodromy;
    long long free_monodromy_order = 0;
};

IntegralHomology milnor_h1_integral(const ArrangementSpec& spec, const ProgressFn& progress = {});

/// dim over a field of characteristic q of H1 with the given integral
/// homology: free rank plus the number of invariant factors divisible by q.
std::size_t dimension_from_integral(const AbelianGroup& g, unsigned characteristic);

}  // namespace mfh
