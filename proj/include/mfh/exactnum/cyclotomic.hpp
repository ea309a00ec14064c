#pragma once

#include <memory>
#include <string>
#include <vector>

#include "mfh/exactnum/number_theory.hpp"

namespace mfh {

/// Q(zeta_N) realized as Q[x] / Phi_N(x). Immutable once built.
class CyclotomicField {
public:
    static std::shared_ptr<const CyclotomicField> make(std::uint64_t order);

    std::uint64_t order() const { return order_; }
    std::size_t degree() const { return modulus_.size() - 1; }
    /// Coefficients of Phi_N, lowest degree first; monic.
    const std::vector<BigInt>& modulus() const { return modulus_; }
    std::string name() const;

    bool operator==(const CyclotomicField& other) const { return order_ == other.order_; }

private:
    explicit CyclotomicField(std::uint64_t order);
    std::uint64_t order_;
    std::vector<BigInt> modulus_;
};

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
std::vector<BigInt> cyclotomic_polynomial(std::uint64_t n);

class CyclotomicNumber {
public:
    CyclotomicNumber() = default;
    CyclotomicNumber(std::shared_ptr<const CyclotomicField> field, const BigRational& value);
    /// Coefficient vector is reduced modulo Phi_N; any length is accepted.
    CyclotomicNumber(std::shared_ptr<const CyclotomicField> field, std::vector<BigRational> coeffs);

    const std::shared_ptr<const CyclotomicField>& field() const { return field_; }
    const std::vector<BigRational>& coefficients() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;

    CyclotomicNumber operator+(const CyclotomicNumber& rhs) const;
    CyclotomicNumber operator-(const CyclotomicNumber& rhs) const;
    CyclotomicNumber operator*(const CyclotomicNumber& rhs) const;
    CyclotomicNumber operator-() const;
    CyclotomicNumber inverse() const;
    CyclotomicNumber pow(long long e) const;

    bool operator==(const CyclotomicNumber& rhs) const;
    bool operator!=(const CyclotomicNumber& rhs) const { return !(*this == rhs); }

    /// "Q(zeta_N)[c0, c1, ...]"
    std::string to_string() const;

private:
    void check_same_field(const CyclotomicNumber& rhs) const;
    std::shared_ptr<const CyclotomicField> field_;
    std::vector<BigRational> coeffs_;
};

/// zeta_N^j as an element of Q(zeta_N).
CyclotomicNumber cyclotomic_root(std::uint64_t order, long long j);
CyclotomicNumber cyclotomic_root(const std::shared_ptr<const CyclotomicField>& field, long long j);

}  // namespace mfh
