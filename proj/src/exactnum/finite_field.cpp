#include "mfh/exactnum/finite_field.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "mfh/exactnum/number_theory.hpp"

namespace mfh {
namespace {

using Poly = std::vector<std::uint64_t>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

Poly poly_mod(Poly a, const Poly& b, std::uint64_t p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    const std::uint64_t lead_inv = inv_mod(b.back(), p);
    while (a.size() > db && !a.empty()) {
        std::size_t k = a.size() - 1;
        std::uint64_t c = a[k] * lead_inv % p;
        for (std::size_t i = 0; i <= db; ++i) a[k - db + i] = (a[k - db + i] + (p - c) * b[i]) % p;
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    }
    return poly_mod(std::move(out), f, p);
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Poly widen(const FiniteField::Coeffs& c) { return Poly(c.begin(), c.end()); }

}  // namespace

bool is_irreducible(const FiniteField::Coeffs& f32, std::uint32_t p) {
    Poly f = widen(f32);
    trim(f);
    const std::size_t m = f.size() - 1;
    if (m == 0) return false;
    if (m == 1) return true;
    Poly x{0, 1};
    Poly power = x;  // x^{p^k} mod f
    for (std::size_t k = 1; k <= m / 2; ++k) {
        Poly acc{1};
        Poly base = power;
        for (std::uint64_t e = p; e > 0; e >>= 1) {
            if (e & 1) acc = poly_mulmod(acc, base, f, p);
            base = poly_mulmod(base, base, f, p);
        }
        power = acc;
        Poly diff = power;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] + p - 1) % p;
        trim(diff);
        if (diff.empty()) return false;
        Poly g = poly_gcd(f, diff, p);
        if (g.size() > 1) return false;
    }
    return true;
}

FiniteField::Coeffs first_irreducible(std::uint32_t p, std::size_t m) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < m; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
        FiniteField::Coeffs f(m + 1, 0);
        std::uint64_t v = code;
        for (std::size_t i = 0; i < m; ++i) {
            f[i] = static_cast<std::uint32_t>(v % p);
            v /= p;
        }
        f[m] = 1;
        if (m > 1 && f[0] == 0) continue;
        if (is_irreducible(f, p)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");
}

FiniteField::FiniteField(std::uint32_t p, Coeffs modulus) : p_(p), modulus_(std::move(modulus)) {}

std::uint64_t FiniteField::size_minus_one() const {
    std::uint64_t q = 1;
    for (std::size_t i = 0; i < degree(); ++i) q *= p_;
    return q - 1;
}

std::shared_ptr<const FiniteField> FiniteField::with_root(std::uint32_t p, std::uint64_t root_order) {
    if (!is_prime(p)) throw std::invalid_argument("finite field characteristic must be prime");
    if (root_order == 0) throw std::invalid_argument("root order must be positive");
    if (root_order % p == 0)
        throw std::invalid_argument("no primitive " + std::to_string(root_order) + "-th root of unity in characteristic " +
                                    std::to_string(p));
    static std::mutex mu;
    static std::map<std::pair<std::uint32_t, std::uint64_t>, std::shared_ptr<const FiniteField>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, root_order);
    if (auto it = cache.find(key); it != cache.end()) return it->second;

    const std::size_t m = multiplicative_order(p % root_order, root_order);
    auto field = std::shared_ptr<FiniteField>(new FiniteField(p, first_irreducible(p, m)));
    const std::uint64_t q1 = field->size_minus_one();
    const auto primes = prime_factors(root_order);
    // Candidates g in scan order; h = g^{(q-1)/N} has order dividing N.
    for (std::uint64_t code = 1; code <= q1; ++code) {
        Coeffs g(m, 0);
        std::uint64_t v = code;
        for (std::size_t i = 0; i < m; ++i) {
            g[i] = static_cast<std::uint32_t>(v % p);
            v /= p;
        }
        Coeffs h = field->pow(g, q1 / root_order);
        bool exact = !field->is_one(h) || root_order == 1;
        for (auto r : primes)
            if (field->is_one(field->pow(h, root_order / r))) exact = false;
        if (exact) {
            field->root_order_ = root_order;
            field->root_ = h;
            cache.emplace(key, field);
            return field;
        }
    }
    throw std::logic_error("no element of the requested order found");
}

std::string FiniteField::name() const {
    return "GF(" + std::to_string(p_) + "^" + std::to_string(degree()) + ")";
}

FiniteField::Coeffs FiniteField::add(const Coeffs& a, const Coeffs& b) const {
    Coeffs out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = static_cast<std::uint32_t>((std::uint64_t(a[i]) + b[i]) % p_);
    return out;
}

FiniteField::Coeffs FiniteField::sub(const Coeffs& a, const Coeffs& b) const {
    Coeffs out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = static_cast<std::uint32_t>((std::uint64_t(a[i]) + p_ - b[i]) % p_);
    return out;
}

FiniteField::Coeffs FiniteField::mul(const Coeffs& a, const Coeffs& b) const {
    const std::size_t m = degree();
    Poly prod(2 * m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + std::uint64_t(a[i]) * b[j]) % p_;
    }
    // modulus is monic
    for (std::size_t k = 2 * m; k-- > m;) {
        std::uint64_t c = prod[k];
        if (c == 0) continue;
        for (std::size_t i = 0; i <= m; ++i) prod[k - m + i] = (prod[k - m + i] + (p_ - c) * modulus_[i]) % p_;
    }
    Coeffs out(m);
    for (std::size_t i = 0; i < m; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
    return out;
}

FiniteField::Coeffs FiniteField::pow(Coeffs a, std::uint64_t e) const {
    Coeffs result = constant(1);
    while (e > 0) {
        if (e & 1) result = mul(result, a);
        e >>= 1;
        if (e) a = mul(a, a);
    }
    return result;
}

FiniteField::Coeffs FiniteField::inverse(const Coeffs& a) const {
    if (is_zero(a)) throw std::domain_error("division by zero in " + name());
    return pow(a, size_minus_one() - 1);
}

FiniteField::Coeffs FiniteField::constant(long long c) const {
    Coeffs out(degree(), 0);
    out[0] = static_cast<std::uint32_t>(floor_mod(c, p_));
    return out;
}

bool FiniteField::is_zero(const Coeffs& a) const {
    for (auto c : a)
        if (c != 0) return false;
    return true;
}

bool FiniteField::is_one(const Coeffs& a) const {
    if (a.empty() || a[0] != 1) return false;
    for (std::size_t i = 1; i < a.size(); ++i)
        if (a[i] != 0) return false;
    return true;
}

FFElement::FFElement(std::shared_ptr<const FiniteField> field, FiniteField::Coeffs coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
    if (c_.size() != field_->degree()) throw std::invalid_argument("finite field element has wrong length");
}

FFElement::FFElement(std::shared_ptr<const FiniteField> field, long long value)
    : field_(std::move(field)), c_(field_->constant(value)) {}

void FFElement::check_same_field(const FFElement& rhs) const {
    if (!field_ || !rhs.field_ || !(*field_ == *rhs.field_))
        throw std::invalid_argument("finite field arithmetic across different fields");
}

FFElement FFElement::operator+(const FFElement& rhs) const {
    check_same_field(rhs);
    return FFElement(field_, field_->add(c_, rhs.c_));
}
FFElement FFElement::operator-(const FFElement& rhs) const {
    check_same_field(rhs);
    return FFElement(field_, field_->sub(c_, rhs.c_));
}
FFElement FFElement::operator*(const FFElement& rhs) const {
    check_same_field(rhs);
    return FFElement(field_, field_->mul(c_, rhs.c_));
}
FFElement FFElement::operator-() const { return FFElement(field_, field_->sub(field_->constant(0), c_)); }
FFElement FFElement::inverse() const { return FFElement(field_, field_->inverse(c_)); }

FFElement FFElement::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    return FFElement(field_, field_->pow(c_, static_cast<std::uint64_t>(e)));
}

bool FFElement::operator==(const FFElement& rhs) const {
    return field_ && rhs.field_ && *field_ == *rhs.field_ && c_ == rhs.c_;
}

std::string FFElement::to_string() const {
    std::ostringstream os;
    os << "GF(" << field_->characteristic() << ")[x]/(";
    const auto& f = field_->modulus();
    for (std::size_t i = 0; i < f.size(); ++i) os << (i ? " " : "") << f[i];
    os << ")[";
    for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? ", " : "") << c_[i];
    os << "]";
    return os.str();
}

FFElement finite_field_root(const std::shared_ptr<const FiniteField>& field, long long j) {
    if (field->root_order() == 0) throw std::invalid_argument("finite field has no designated root of unity");
    const long long n = static_cast<long long>(field->root_order());
    return FFElement(field, field->root()).pow(floor_mod(j, n));
}

}  // namespace mfh
