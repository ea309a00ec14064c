#include "mfh/exactnum/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace mfh {
namespace {

using QPoly = std::vector<BigRational>;

void trim(QPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Exact division of integer polynomials; b monic.
std::vector<BigInt> divide_exact(std::vector<BigInt> a, const std::vector<BigInt>& b) {
    const std::size_t db = b.size() - 1;
    std::vector<BigInt> q(a.size() - db);
    for (std::size_t k = a.size(); k-- > db;) {
        BigInt c = a[k];
        q[k - db] = c;
        if (c == 0) continue;
        for (std::size_t i = 0; i <= db; ++i) a[k - db + i] -= c * b[i];
    }
    return q;
}

// a mod b over Q, b nonzero.
QPoly poly_mod(QPoly a, const QPoly& b, QPoly* quotient = nullptr) {
    trim(a);
    const std::size_t db = b.size() - 1;
    if (quotient) quotient->assign(a.size() > db ? a.size() - db : 1, BigRational(0));
    while (a.size() > db && !a.empty()) {
        std::size_t k = a.size() - 1;
        BigRational c = a[k] / b[db];
        if (quotient) (*quotient)[k - db] = c;
        for (std::size_t i = 0; i <= db; ++i) a[k - db + i] -= c * b[i];
        trim(a);
    }
    return a;
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly out(a.size() + b.size() - 1, BigRational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    trim(out);
    return out;
}

QPoly poly_sub(QPoly a, const QPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), BigRational(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

}  // namespace

std::vector<BigInt> cyclotomic_polynomial(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
    // x^n - 1 = prod_{d | n} Phi_d(x)
    std::vector<BigInt> num(n + 1, BigInt(0));
    num[0] = -1;
    num[n] = 1;
    for (auto d : divisors(n)) {
        if (d == n) continue;
        num = divide_exact(num, cyclotomic_polynomial(d));
    }
    return num;
}

CyclotomicField::CyclotomicField(std::uint64_t order) : order_(order), modulus_(cyclotomic_polynomial(order)) {}

std::shared_ptr<const CyclotomicField> CyclotomicField::make(std::uint64_t order) {
    if (order == 0) throw std::invalid_argument("CyclotomicField: order must be positive");
    static std::mutex mu;
    static std::map<std::uint64_t, std::shared_ptr<const CyclotomicField>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(order);
    if (it != cache.end()) return it->second;
    auto field = std::shared_ptr<const CyclotomicField>(new CyclotomicField(order));
    cache.emplace(order, field);
    return field;
}

std::string CyclotomicField::name() const { return "Q(zeta_" + std::to_string(order_) + ")"; }

CyclotomicNumber::CyclotomicNumber(std::shared_ptr<const CyclotomicField> field, const BigRational& value)
    : field_(std::move(field)), coeffs_(field_->degree(), BigRational(0)) {
    coeffs_[0] = value;
    coeffs_[0].canonicalize();
}

CyclotomicNumber::CyclotomicNumber(std::shared_ptr<const CyclotomicField> field, std::vector<BigRational> coeffs)
    : field_(std::move(field)) {
    for (auto& c : coeffs) c.canonicalize();
    const auto& phi = field_->modulus();
    const std::size_t deg = field_->degree();
    for (std::size_t k = coeffs.size(); k-- > deg;) {
        BigRational c = coeffs[k];
        if (c == 0) continue;
        for (std::size_t i = 0; i <= deg; ++i) coeffs[k - deg + i] -= c * phi[i];
    }
    coeffs.resize(deg, BigRational(0));
    coeffs_ = std::move(coeffs);
}

void CyclotomicNumber::check_same_field(const CyclotomicNumber& rhs) const {
    if (!field_ || !rhs.field_ || field_->order() != rhs.field_->order())
        throw std::invalid_argument("cyclotomic arithmetic across different fields");
}

bool CyclotomicNumber::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CyclotomicNumber::is_one() const {
    if (coeffs_.empty() || coeffs_[0] != 1) return false;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

CyclotomicNumber CyclotomicNumber::operator+(const CyclotomicNumber& rhs) const {
    check_same_field(rhs);
    CyclotomicNumber out = *this;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] += rhs.coeffs_[i];
    return out;
}

CyclotomicNumber CyclotomicNumber::operator-(const CyclotomicNumber& rhs) const {
    check_same_field(rhs);
    CyclotomicNumber out = *this;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] -= rhs.coeffs_[i];
    return out;
}

CyclotomicNumber CyclotomicNumber::operator-() const {
    CyclotomicNumber out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

CyclotomicNumber CyclotomicNumber::operator*(const CyclotomicNumber& rhs) const {
    check_same_field(rhs);
    const std::size_t deg = coeffs_.size();
    std::vector<BigRational> prod(2 * deg, BigRational(0));
    for (std::size_t i = 0; i < deg; ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < deg; ++j) {
            if (rhs.coeffs_[j] == 0) continue;
            prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return CyclotomicNumber(field_, std::move(prod));
}

CyclotomicNumber CyclotomicNumber::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in " + field_->name());
    // Extended Euclid: find s with s * a = 1 mod Phi_N.
    QPoly phi(field_->modulus().begin(), field_->modulus().end());
    QPoly r0 = phi, r1 = coeffs_;
    trim(r1);
    QPoly s0, s1{BigRational(1)};
    while (!(r1.size() == 1)) {
        QPoly q;
        QPoly r2 = poly_mod(r0, r1, &q);
        QPoly s2 = poly_sub(s0, poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
        if (r1.empty()) throw std::logic_error("cyclotomic inverse: modulus not irreducible");
    }
    BigRational lead = r1[0];
    for (auto& c : s1) c /= lead;
    return CyclotomicNumber(field_, std::move(s1));
}

CyclotomicNumber CyclotomicNumber::pow(long long e) const {
    CyclotomicNumber base = e < 0 ? inverse() : *this;
    unsigned long long n = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
    CyclotomicNumber result(field_, BigRational(1));
    while (n > 0) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return result;
}

bool CyclotomicNumber::operator==(const CyclotomicNumber& rhs) const {
    return field_ && rhs.field_ && field_->order() == rhs.field_->order() && coeffs_ == rhs.coeffs_;
}

std::string CyclotomicNumber::to_string() const {
    std::ostringstream os;
    os << field_->name() << "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) os << (i ? ", " : "") << coeffs_[i].get_str();
    os << "]";
    return os.str();
}

CyclotomicNumber cyclotomic_root(const std::shared_ptr<const CyclotomicField>& field, long long j) {
    const long long n = static_cast<long long>(field->order());
    std::vector<BigRational> c(static_cast<std::size_t>(n), BigRational(0));
    c[static_cast<std::size_t>(floor_mod(j, n))] = 1;
    return CyclotomicNumber(field, std::move(c));
}

CyclotomicNumber cyclotomic_root(std::uint64_t order, long long j) {
    return cyclotomic_root(CyclotomicField::make(order), j);
}

}  // namespace mfh
