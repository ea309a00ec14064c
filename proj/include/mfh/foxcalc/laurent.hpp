#pragma once

#include <map>
#include <string>
#include <vector>

#include "mfh/exactnum/number_theory.hpp"

namespace mfh {

/// Integer Laurent polynomial in a fixed number of commuting variables.
/// A polynomial created without a variable count is a constant and adopts
/// the count of whatever it is combined with.
class LaurentPoly {
public:
    using Exponents = std::vector<long long>;
    using Terms = std::map<Exponents, BigInt>;

    LaurentPoly() = default;
    explicit LaurentPoly(std::size_t nvars) : nvars_(nvars) {}
    static LaurentPoly constant(std::size_t nvars, const BigInt& c);
    static LaurentPoly monomial(const Exponents& e, const BigInt& c = 1);
    /// x_i (0-based variable index).
    static LaurentPoly variable(std::size_t nvars, std::size_t i, long long e = 1);

    std::size_t nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const Exponents& e, const BigInt& c);

    LaurentPoly operator+(const LaurentPoly& rhs) const;
    LaurentPoly operator-(const LaurentPoly& rhs) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& rhs) const;
    LaurentPoly& operator+=(const LaurentPoly& rhs);

    /// Sum of coefficients (value at the trivial character).
    BigInt augmentation() const;

    bool operator==(const LaurentPoly& rhs) const;
    bool operator!=(const LaurentPoly& rhs) const { return !(*this == rhs); }

    /// "1 - x1 + 2*x1*x2^-1" in a deterministic term order.
    std::string to_string(const std::vector<std::string>& names = {}) const;

private:
    void adopt(std::size_t nvars);
    std::size_t nvars_ = 0;
    Terms terms_;
};

}  // namespace mfh
