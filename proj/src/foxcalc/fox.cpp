#include "mfh/foxcalc/fox.hpp"

#include <numeric>
#include <stdexcept>

namespace mfh {

std::vector<LaurentPoly> fox_gradient(const FreeWord& w, std::size_t nvars) {
    std::vector<LaurentPoly> d(nvars, LaurentPoly(nvars));
    LaurentPoly::Exponents prefix(nvars, 0);
    for (const auto& [g, e] : w.letters()) {
        if (g < 1 || static_cast<std::size_t>(g) > nvars) throw std::out_of_range("word generator outside variables");
        // x^k contributes prefix*(1 + x + ... + x^{k-1}); x^-k contributes -prefix*(x^-1 + ... + x^-k).
        if (e > 0) {
            for (long long k = 0; k < e; ++k) {
                d[g - 1].add_term(prefix, 1);
                ++prefix[g - 1];
            }
        } else {
            for (long long k = 0; k < -e; ++k) {
                --prefix[g - 1];
                d[g - 1].add_term(prefix, -1);
            }
        }
    }
    return d;
}

LaurentPoly fox_derivative(const FreeWord& w, int g, std::size_t nvars) {
    if (g < 1 || static_cast<std::size_t>(g) > nvars) throw std::out_of_range("generator outside variables");
    return fox_gradient(w, nvars)[g - 1];
}

LaurentMatrix alexander_matrix(const GroupPresentation& pr) {
    const std::size_t n = pr.num_generators();
    LaurentMatrix m(pr.num_relators(), n, LaurentPoly(n));
    for (std::size_t r = 0; r < pr.relators().size(); ++r) {
        auto row = fox_gradient(pr.relators()[r], n);
        for (std::size_t j = 0; j < n; ++j) m(r, j) = std::move(row[j]);
    }
    return m;
}

LaurentMatrix fox_jacobian(const FreeGroupEndo& e) {
    const std::size_t n = e.rank();
    LaurentMatrix m(n, n, LaurentPoly(n));
    for (std::size_t i = 0; i < n; ++i) {
        auto row = fox_gradient(e.images()[i], n);
        for (std::size_t j = 0; j < n; ++j) m(i, j) = std::move(row[j]);
    }
    return m;
}

LaurentMatrix gassner_matrix(const BraidWord& b) {
    if (!b.is_pure()) throw std::invalid_argument("Gassner matrix needs a pure braid");
    return fox_jacobian(artin_automorphism(b));
}

LaurentMatrix gassner_matrix(const BraidWord& b, const BasisChange& basis) {
    if (!b.is_pure()) throw std::invalid_argument("Gassner matrix needs a pure braid");
    return fox_jacobian(basis.in_new(artin_automorphism(b)));
}

bool CyclicCharacter::is_trivial() const {
    for (long long e : exponents)
        if (floor_mod(e, order) != 0) return false;
    return true;
}

bool CyclicCharacter::is_surjective() const {
    long long g = order;
    for (long long e : exponents) g = std::gcd(g, floor_mod(e, order));
    return g == 1 || order == 1;
}

std::vector<BigInt> to_group_ring(const LaurentPoly& f, const CyclicCharacter& lam) {
    if (lam.order < 1) throw std::invalid_argument("character order must be positive");
    if (!f.is_zero() && f.nvars() != lam.exponents.size())
        throw std::invalid_argument("character length differs from variable count");
    std::vector<BigInt> bins(lam.order, BigInt(0));
    for (const auto& [e, c] : f.terms()) {
        long long s = 0;
        for (std::size_t k = 0; k < e.size(); ++k) s = floor_mod(s + floor_mod(e[k], lam.order) * floor_mod(lam.exponents[k], lam.order), lam.order);
        bins[s] += c;
    }
    return bins;
}

Matrix<FieldScalar> specialize_character(const LaurentMatrix& m, const CyclicCharacter& lam, const Field& field) {
    const long long N = lam.order;
    std::vector<FieldScalar> powers;
    powers.reserve(N);
    for (long long j = 0; j < N; ++j) powers.push_back(field.root_of_unity(N, j));
    Matrix<FieldScalar> out(m.rows(), m.cols(), field.zero());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const auto bins = to_group_ring(m(i, j), lam);
            FieldScalar v = field.zero();
            for (long long k = 0; k < N; ++k)
                if (bins[k] != 0) v = v + field.from_integer(bins[k]) * powers[k];
            out(i, j) = v;
        }
    return out;
}

Matrix<FieldScalar> specialize_values(const LaurentMatrix& m, const std::vector<FieldScalar>& values, const Field& field) {
    for (const auto& v : values)
        if (v.field() != field) throw std::invalid_argument("value outside the target field");
    Matrix<FieldScalar> out(m.rows(), m.cols(), field.zero());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const LaurentPoly& f = m(i, j);
            if (!f.is_zero() && f.nvars() != values.size())
                throw std::invalid_argument("unassigned variable: " + std::to_string(values.size()) + " values for " +
                                            std::to_string(f.nvars()) + " variables");
            FieldScalar v = field.zero();
            for (const auto& [e, c] : f.terms()) {
                FieldScalar t = field.from_integer(c);
                for (std::size_t k = 0; k < e.size(); ++k)
                    if (e[k] != 0) t = t * values[k].pow(e[k]);
                v = v + t;
            }
            out(i, j) = v;
        }
    return out;
}

IntMatrix circulant(const std::vector<BigInt>& x) {
    const std::size_t N = x.size();
    IntMatrix c(N, N, BigInt(0));
    // (x * g^i) = sum_k x_k g^{k+i}: column i has x_k at row (k+i) mod N.
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t k = 0; k < N; ++k) c((k + i) % N, i) = x[k];
    return c;
}

IntMatrix specialize_groupring(const LaurentMatrix& m, const CyclicCharacter& lam) {
    const std::size_t N = lam.order;
    IntMatrix out(m.rows() * N, m.cols() * N, BigInt(0));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const auto bins = to_group_ring(m(r, c), lam);
            for (std::size_t i = 0; i < N; ++i)
                for (std::size_t k = 0; k < N; ++k)
                    if (bins[k] != 0) out(r * N + (k + i) % N, c * N + i) = bins[k];
        }
    return out;
}

}  // namespace mfh
