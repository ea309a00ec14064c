#pragma once

#include <memory>
#include <string>
#include <variant>

#include "mfh/exactnum/cyclotomic.hpp"
#include "mfh/exactnum/finite_field.hpp"
#include "mfh/exactnum/number_theory.hpp"

namespace mfh {

class FieldScalar;

struct RationalField {
    bool operator==(const RationalField&) const { return true; }
};

/// One of Q, Q(zeta_N), F_{p^m}. Cheap to copy.
class Field {
public:
    using Variant = std::variant<RationalField, std::shared_ptr<const CyclotomicField>, std::shared_ptr<const FiniteField>>;

    Field() : v_(RationalField{}) {}
    explicit Field(std::shared_ptr<const CyclotomicField> f) : v_(std::move(f)) {}
    explicit Field(std::shared_ptr<const FiniteField> f) : v_(std::move(f)) {}

    static Field rationals() { return Field(); }
    static Field cyclotomic(std::uint64_t order) { return Field(CyclotomicField::make(order)); }
    static Field finite(std::uint32_t p, std::uint64_t root_order) { return Field(FiniteField::with_root(p, root_order)); }

    const Variant& variant() const { return v_; }
    std::uint32_t characteristic() const;
    std::string name() const;

    FieldScalar zero() const;
    FieldScalar one() const;
    FieldScalar from_integer(const BigInt& n) const;

    /// True if the field holds a primitive root of unity of this order.
    bool has_root_of_unity(std::uint64_t order) const;
    /// A fixed primitive root of unity of the given order raised to the j-th
    /// power. Roots of different orders are compatible: root(N, 1)^{N/k} ==
    /// root(k, 1) whenever both exist.
    FieldScalar root_of_unity(std::uint64_t order, long long j = 1) const;

    bool operator==(const Field& other) const;
    bool operator!=(const Field& other) const { return !(*this == other); }

private:
    Variant v_;
};

/// Exact element of Q, Q(zeta_N), or F_{p^m}. Binary operations require
/// operands from the same field; division by zero throws std::domain_error.
class FieldScalar {
public:
    using Variant = std::variant<BigRational, CyclotomicNumber, FFElement>;

    FieldScalar() : v_(BigRational(0)) {}
    FieldScalar(BigRational q) : v_(std::move(q)) {}
    FieldScalar(CyclotomicNumber c) : v_(std::move(c)) {}
    FieldScalar(FFElement e) : v_(std::move(e)) {}

    const Variant& variant() const { return v_; }
    Field field() const;

    bool is_zero() const;
    bool is_one() const;

    FieldScalar operator+(const FieldScalar& rhs) const;
    FieldScalar operator-(const FieldScalar& rhs) const;
    FieldScalar operator*(const FieldScalar& rhs) const;
    FieldScalar operator-() const;
    FieldScalar inverse() const;
    FieldScalar pow(long long e) const;

    bool operator==(const FieldScalar& rhs) const;
    bool operator!=(const FieldScalar& rhs) const { return !(*this == rhs); }

    /// Rationals as "a/b"; cyclotomics and finite-field elements as tagged
    /// coefficient lists.
    std::string to_string() const;

private:
    Variant v_;
};

/// "a/b" with b > 0, always printed with a denominator.
std::string rational_to_string(const BigRational& q);
BigRational parse_rational(const std::string& text);

// Overloads used by the generic elimination routines.
inline bool is_zero(const BigRational& q) { return q == 0; }
inline BigRational inverse(const BigRational& q) {
    if (q == 0) throw std::domain_error("division by zero in Q");
    return 1 / q;
}
inline bool is_zero(const CyclotomicNumber& c) { return c.is_zero(); }
inline CyclotomicNumber inverse(const CyclotomicNumber& c) { return c.inverse(); }
inline bool is_zero(const FFElement& e) { return e.is_zero(); }
inline FFElement inverse(const FFElement& e) { return e.inverse(); }
inline bool is_zero(const FieldScalar& s) { return s.is_zero(); }
inline FieldScalar inverse(const FieldScalar& s) { return s.inverse(); }

}  // namespace mfh
