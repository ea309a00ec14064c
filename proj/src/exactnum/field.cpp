#include "mfh/exactnum/field.hpp"

#include <stdexcept>

namespace mfh {
namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

std::string rational_to_string(const BigRational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

BigRational parse_rational(const std::string& text) {
    BigRational q;
    if (q.set_str(text, 10) != 0) throw std::invalid_argument("not a rational number: " + text);
    q.canonicalize();
    if (q.get_den() == 0) throw std::domain_error("zero denominator: " + text);
    return q;
}

std::uint32_t Field::characteristic() const {
    if (auto f = std::get_if<std::shared_ptr<const FiniteField>>(&v_)) return (*f)->characteristic();
    return 0;
}

std::string Field::name() const {
    return std::visit(overloaded{[](const RationalField&) { return std::string("Q"); },
                                 [](const std::shared_ptr<const CyclotomicField>& f) { return f->name(); },
                                 [](const std::shared_ptr<const FiniteField>& f) { return f->name(); }},
                      v_);
}

FieldScalar Field::zero() const { return from_integer(0); }
FieldScalar Field::one() const { return from_integer(1); }

FieldScalar Field::from_integer(const BigInt& n) const {
    return std::visit(
        overloaded{[&](const RationalField&) { return FieldScalar(BigRational(n)); },
                   [&](const std::shared_ptr<const CyclotomicField>& f) {
                       return FieldScalar(CyclotomicNumber(f, BigRational(n)));
                   },
                   [&](const std::shared_ptr<const FiniteField>& f) {
                       BigInt r = n % f->characteristic();
                       if (r < 0) r += f->characteristic();
                       return FieldScalar(FFElement(f, r.get_si()));
                   }},
        v_);
}

bool Field::has_root_of_unity(std::uint64_t order) const {
    if (order == 0) return false;
    return std::visit(overloaded{[&](const RationalField&) { return order <= 2; },
                                 [&](const std::shared_ptr<const CyclotomicField>& f) {
                                     std::uint64_t n = f->order();
                                     // Q(zeta_n) contains zeta_{2n} when n is odd.
                                     if (n % 2 == 1) n *= 2;
                                     return n % order == 0;
                                 },
                                 [&](const std::shared_ptr<const FiniteField>& f) {
                                     return f->root_order() != 0 && f->root_order() % order == 0;
                                 }},
                      v_);
}

FieldScalar Field::root_of_unity(std::uint64_t order, long long j) const {
    if (!has_root_of_unity(order))
        throw std::invalid_argument(name() + " has no primitive " + std::to_string(order) + "-th root of unity");
    return std::visit(
        overloaded{[&](const RationalField&) {
                       if (order == 1 || j % 2 == 0) return FieldScalar(BigRational(1));
                       return FieldScalar(BigRational(-1));
                   },
                   [&](const std::shared_ptr<const CyclotomicField>& f) {
                       const std::uint64_t n = f->order();
                       if (n % order == 0)
                           return FieldScalar(cyclotomic_root(f, static_cast<long long>(n / order) * j));
                       // odd n, even order: -zeta_n^{(n+1)/2} is a primitive 2n-th root.
                       const std::uint64_t two_n = 2 * n;
                       const long long e = static_cast<long long>(two_n / order) * j;
                       CyclotomicNumber base = -cyclotomic_root(f, static_cast<long long>((n + 1) / 2));
                       return FieldScalar(base.pow(floor_mod(e, static_cast<long long>(two_n))));
                   },
                   [&](const std::shared_ptr<const FiniteField>& f) {
                       return FieldScalar(finite_field_root(f, static_cast<long long>(f->root_order() / order) * j));
                   }},
        v_);
}

bool Field::operator==(const Field& other) const {
    if (v_.index() != other.v_.index()) return false;
    return std::visit(overloaded{[&](const RationalField&) { return true; },
                                 [&](const std::shared_ptr<const CyclotomicField>& f) {
                                     return *f == *std::get<std::shared_ptr<const CyclotomicField>>(other.v_);
                                 },
                                 [&](const std::shared_ptr<const FiniteField>& f) {
                                     return *f == *std::get<std::shared_ptr<const FiniteField>>(other.v_);
                                 }},
                      v_);
}

Field FieldScalar::field() const {
    return std::visit(overloaded{[](const BigRational&) { return Field(); },
                                 [](const CyclotomicNumber& c) { return Field(c.field()); },
                                 [](const FFElement& e) { return Field(e.field()); }},
                      v_);
}

bool FieldScalar::is_zero() const {
    return std::visit([](const auto& x) { return mfh::is_zero(x); }, v_);
}

bool FieldScalar::is_one() const {
    return std::visit(overloaded{[](const BigRational& q) { return q == 1; },
                                 [](const CyclotomicNumber& c) { return c.is_one(); },
                                 [](const FFElement& e) { return e.is_one(); }},
                      v_);
}

namespace {

template <class Op>
FieldScalar binary(const FieldScalar::Variant& a, const FieldScalar::Variant& b, Op op) {
    if (a.index() != b.index()) throw std::invalid_argument("field scalars from different fields");
    return std::visit(
        [&](const auto& x) -> FieldScalar {
            using T = std::decay_t<decltype(x)>;
            return FieldScalar(T(op(x, std::get<T>(b))));
        },
        a);
}

}  // namespace

FieldScalar FieldScalar::operator+(const FieldScalar& rhs) const {
    return binary(v_, rhs.v_, [](const auto& x, const auto& y) { return x + y; });
}
FieldScalar FieldScalar::operator-(const FieldScalar& rhs) const {
    return binary(v_, rhs.v_, [](const auto& x, const auto& y) { return x - y; });
}
FieldScalar FieldScalar::operator*(const FieldScalar& rhs) const {
    return binary(v_, rhs.v_, [](const auto& x, const auto& y) { return x * y; });
}

FieldScalar FieldScalar::operator-() const {
    return std::visit([](const auto& x) -> FieldScalar {
        using T = std::decay_t<decltype(x)>;
        return FieldScalar(T(-x));
    }, v_);
}

FieldScalar FieldScalar::inverse() const {
    return std::visit([](const auto& x) -> FieldScalar { return FieldScalar(mfh::inverse(x)); }, v_);
}

FieldScalar FieldScalar::pow(long long e) const {
    return std::visit(overloaded{[&](const BigRational& q) -> FieldScalar {
                                     BigRational base = e < 0 ? mfh::inverse(q) : q;
                                     BigRational r(1);
                                     for (long long i = 0; i < (e < 0 ? -e : e); ++i) r *= base;
                                     return FieldScalar(r);
                                 },
                                 [&](const CyclotomicNumber& c) -> FieldScalar { return FieldScalar(c.pow(e)); },
                                 [&](const FFElement& x) -> FieldScalar { return FieldScalar(x.pow(e)); }},
                      v_);
}

bool FieldScalar::operator==(const FieldScalar& rhs) const {
    if (v_.index() != rhs.v_.index()) return false;
    return std::visit([&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        return x == std::get<T>(rhs.v_);
    }, v_);
}

std::string FieldScalar::to_string() const {
    return std::visit(overloaded{[](const BigRational& q) { return rational_to_string(q); },
                                 [](const CyclotomicNumber& c) { return c.to_string(); },
                                 [](const FFElement& e) { return e.to_string(); }},
                      v_);
}

}  // namespace mfh
