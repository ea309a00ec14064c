#include "mfh/exactla/cover.hpp"

#include <stdexcept>

namespace mfh {

IntMatrix CyclicCoverHomology::boundary1(const CyclicCharacter& lam) {
    const std::size_t N = lam.order, G = lam.exponents.size();
    IntMatrix d(N, G * N, BigInt(0));
    for (std::size_t j = 0; j < G; ++j) {
        const long long s = floor_mod(lam.exponents[j], lam.order);
        for (std::size_t i = 0; i < N; ++i) {
            d((i + s) % N, j * N + i) += 1;
            d(i, j * N + i) -= 1;
        }
    }
    return d;
}

IntMatrix CyclicCoverHomology::boundary2(const LaurentMatrix& A, const CyclicCharacter& lam) {
    // Relator r maps to sum_j (dr/dx_j) e_j, so block (j, r) multiplies by the image of A(r, j).
    const std::size_t N = lam.order;
    IntMatrix d(A.cols() * N, A.rows() * N, BigInt(0));
    for (std::size_t r = 0; r < A.rows(); ++r)
        for (std::size_t j = 0; j < A.cols(); ++j) {
            const auto bins = to_group_ring(A(r, j), lam);
            for (std::size_t k = 0; k < N; ++k) {
                if (bins[k] == 0) continue;
                for (std::size_t i = 0; i < N; ++i) d(j * N + (k + i) % N, r * N + i) += bins[k];
            }
        }
    return d;
}

namespace {

// Product with many zero entries on the left.
IntMatrix sparse_mul(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix out(a.rows(), b.cols(), BigInt(0));
    std::vector<std::vector<std::pair<std::size_t, BigInt>>> brow(b.rows());
    for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t j = 0; j < b.cols(); ++j)
            if (b(k, j) != 0) brow[k].emplace_back(j, b(k, j));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const BigInt& x = a(i, k);
            if (x == 0) continue;
            for (const auto& [j, y] : brow[k]) out(i, j) += x * y;
        }
    return out;
}

BigInt mod_pos(const BigInt& x, const BigInt& m) {
    BigInt r = x % m;
    if (r < 0) r += m;
    return r;
}

}  // namespace

CyclicCoverHomology::CyclicCoverHomology(const GroupPresentation& pr, const CyclicCharacter& lam,
                                         const ProgressFn& progress)
    : lam_(lam) {
    if (static_cast<int>(lam.exponents.size()) != pr.num_generators())
        throw std::invalid_argument("character length differs from generator count");
    if (lam.order < 1) throw std::invalid_argument("cover order must be positive");
    if (!lam.is_surjective()) throw std::invalid_argument("character is not surjective: the cover is disconnected");
    const std::size_t N = lam.order, G = pr.num_generators();

    const KernelData ker = integer_kernel(boundary1(lam));
    const IntMatrix d2 = boundary2(alexander_matrix(pr), lam);
    const IntMatrix X = sparse_mul(ker.coords, d2);
    const Diagonalization diag = diagonalize(X, true, progress);

    const std::size_t k = ker.basis.cols();
    const std::size_t rank = diag.diagonal.size();
    group_.free_rank = k - rank;
    for (const auto& x : invariant_factor_chain(diag.diagonal))
        if (x != 1) group_.torsion.push_back(x);

    // Deck action on kernel coordinates, then conjugated into the diagonal basis.
    IntMatrix shifted(G * N, k, BigInt(0));
    for (std::size_t j = 0; j < G; ++j)
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t a = 0; a < k; ++a) shifted(j * N + (i + 1) % N, a) = ker.basis(j * N + i, a);
    const IntMatrix GK = sparse_mul(ker.coords, shifted);
    const IntMatrix A = sparse_mul(sparse_mul(diag.U, GK), diag.U_inv);

    std::vector<std::size_t> tors;
    for (std::size_t i = 0; i < rank; ++i)
        if (diag.diagonal[i] != 1) tors.push_back(i);
    cyclic_.clear();
    for (auto i : tors) cyclic_.push_back(diag.diagonal[i]);
    torsion_action_ = IntMatrix(tors.size(), tors.size(), BigInt(0));
    for (std::size_t a = 0; a < tors.size(); ++a)
        for (std::size_t b = 0; b < tors.size(); ++b)
            torsion_action_(a, b) = mod_pos(A(tors[a], tors[b]), cyclic_[a]);
    for (std::size_t b : tors)
        for (std::size_t i = rank; i < k; ++i)
            if (A(i, b) != 0) throw std::logic_error("deck action does not preserve torsion");
    free_action_ = IntMatrix(k - rank, k - rank, BigInt(0));
    for (std::size_t a = rank; a < k; ++a)
        for (std::size_t b = rank; b < k; ++b) free_action_(a - rank, b - rank) = A(a, b);
}

IntMatrix CyclicCoverHomology::primary_action(const BigInt& q, std::vector<BigInt>* orders) const {
    // Summand Z/d_i contributes Z/q^v generated by f_i = (d_i / q^v) e_i.
    std::vector<std::size_t> idx;
    std::vector<BigInt> qpow, cof;
    for (std::size_t i = 0; i < cyclic_.size(); ++i) {
        BigInt d = cyclic_[i], pw = 1;
        while (d % q == 0) {
            d /= q;
            pw *= q;
        }
        if (pw == 1) continue;
        idx.push_back(i);
        qpow.push_back(pw);
        cof.push_back(d);
    }
    IntMatrix out(idx.size(), idx.size(), BigInt(0));
    for (std::size_t b = 0; b < idx.size(); ++b)
        for (std::size_t a = 0; a < idx.size(); ++a) {
            const BigInt coeff = mod_pos(cof[b] * torsion_action_(idx[a], idx[b]), cyclic_[idx[a]]);
            if (coeff % cof[a] != 0) throw std::logic_error("deck action does not preserve a primary part");
            out(a, b) = mod_pos(coeff / cof[a], qpow[a]);
        }
    if (orders) *orders = qpow;
    return out;
}

AbelianGroup cover_h1(const GroupPresentation& pr, const CyclicCharacter& lam) {
    return CyclicCoverHomology(pr, lam).group();
}

long long action_order(const IntMatrix& action, const std::vector<BigInt>& orders, long long cap) {
    const std::size_t n = action.rows();
    if (n == 0) return 1;
    IntMatrix power = action;
    for (long long e = 1; e <= cap; ++e) {
        bool ident = true;
        for (std::size_t i = 0; i < n && ident; ++i)
            for (std::size_t j = 0; j < n && ident; ++j)
                if (mod_pos(power(i, j) - (i == j ? 1 : 0), orders[i]) != 0) ident = false;
        if (ident) return e;
        power = power * action;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) power(i, j) = mod_pos(power(i, j), orders[i]);
    }
    return 0;
}

long long free_action_order(const IntMatrix& action, long long cap) {
    const std::size_t n = action.rows();
    if (n == 0) return 1;
    const IntMatrix id = identity_matrix(n);
    IntMatrix power = action;
    for (long long e = 1; e <= cap; ++e) {
        if (power == id) return e;
        power = power * action;
    }
    return 0;
}

}  // namespace mfh
