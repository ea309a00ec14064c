#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace mfh {

/// F_{p^m} = F_p[x] / (f), with f the first irreducible monic polynomial of
/// degree m in the scan order (coefficient vectors read as base-p integers,
/// constant term least significant).
class FiniteField {
public:
    using Coeffs = std::vector<std::uint32_t>;

    /// Smallest extension of F_p containing a primitive N-th root of unity,
    /// together with such a root. Throws std::invalid_argument if p | N or p
    /// is not prime.
    static std::shared_ptr<const FiniteField> with_root(std::uint32_t p, std::uint64_t root_order);

    std::uint32_t characteristic() const { return p_; }
    std::size_t degree() const { return modulus_.size() - 1; }
    /// Monic defining polynomial, lowest degree first.
    const Coeffs& modulus() const { return modulus_; }
    std::uint64_t root_order() const { return root_order_; }
    const Coeffs& root() const { return root_; }
    std::uint64_t size_minus_one() const;

    std::string name() const;
    bool operator==(const FiniteField& other) const { return p_ == other.p_ && modulus_ == other.modulus_; }

    // Raw arithmetic on reduced coefficient vectors of length degree().
    Coeffs add(const Coeffs& a, const Coeffs& b) const;
    Coeffs sub(const Coeffs& a, const Coeffs& b) const;
    Coeffs mul(const Coeffs& a, const Coeffs& b) const;
    Coeffs pow(Coeffs a, std::uint64_t e) const;
    Coeffs inverse(const Coeffs& a) const;
    Coeffs constant(long long c) const;
    bool is_zero(const Coeffs& a) const;
    bool is_one(const Coeffs& a) const;

private:
    FiniteField(std::uint32_t p, Coeffs modulus);
    std::uint32_t p_;
    Coeffs modulus_;
    std::uint64_t root_order_ = 0;
    Coeffs root_;
};

/// Degree-m monic irreducible over F_p found by the deterministic scan.
FiniteField::Coeffs first_irreducible(std::uint32_t p, std::size_t m);

/// Irreducibility via gcd(f, x^{p^k} - x) = 1 for 1 <= k <= deg/2.
bool is_irreducible(const FiniteField::Coeffs& f, std::uint32_t p);

class FFElement {
public:
    FFElement() = default;
    FFElement(std::shared_ptr<const FiniteField> field, FiniteField::Coeffs coeffs);
    FFElement(std::shared_ptr<const FiniteField> field, long long value);

    const std::shared_ptr<const FiniteField>& field() const { return field_; }
    const FiniteField::Coeffs& coefficients() const { return c_; }

    bool is_zero() const { return field_->is_zero(c_); }
    bool is_one() const { return field_->is_one(c_); }

    FFElement operator+(const FFElement& rhs) const;
    FFElement operator-(const FFElement& rhs) const;
    FFElement operator*(const FFElement& rhs) const;
    FFElement operator-() const;
    FFElement inverse() const;
    FFElement pow(long long e) const;

    bool operator==(const FFElement& rhs) const;
    bool operator!=(const FFElement& rhs) const { return !(*this == rhs); }

    /// "GF(p)[x]/(f)[c0, c1, ...]"
    std::string to_string() const;

private:
    void check_same_field(const FFElement& rhs) const;
    std::shared_ptr<const FiniteField> field_;
    FiniteField::Coeffs c_;
};

/// The descriptor's primitive root raised to the j-th power.
FFElement finite_field_root(const std::shared_ptr<const FiniteField>& field, long long j);

}  // namespace mfh
