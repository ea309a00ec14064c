#include "mfh/milnorfiber/character.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "mfh/exactla/field_rank.hpp"

namespace mfh {

namespace {

std::size_t hyperplane_count(int p) { return static_cast<std::size_t>(3 * p + 2); }

const ArrangementSpec& shape(int p) {
    static std::mutex mu;
    static std::map<int, ArrangementSpec> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(p);
    if (it == cache.end()) it = cache.emplace(p, arrangement_spec(p)).first;
    return it->second;
}

const LaurentMatrix& cone_alexander(int p, bool central) {
    static std::mutex mu;
    static std::map<std::pair<int, bool>, LaurentMatrix> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, central);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, alexander_matrix(build_cone_presentation(p, central))).first;
    return it->second;
}

bool all_zero(const std::vector<long long>& v) {
    for (long long x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace

Character::Character(int p_, long long order_, std::vector<long long> exps, Field f)
    : p(p_), order(order_), exponents(std::move(exps)), field(std::move(f)) {
    if (order < 1) throw std::invalid_argument("character order must be positive");
    if (exponents.size() != hyperplane_count(p))
        throw std::invalid_argument("character needs " + std::to_string(hyperplane_count(p)) + " exponents, got " +
                                    std::to_string(exponents.size()));
    if (!field.has_root_of_unity(order))
        throw std::invalid_argument("field " + field.name() + " has no primitive root of unity of order " +
                                    std::to_string(order));
    for (auto& e : exponents) e = floor_mod(e, order);
}

FieldScalar Character::value(std::size_t i) const { return field.root_of_unity(order, exponents.at(i)); }

std::vector<FieldScalar> Character::values() const {
    std::vector<FieldScalar> out;
    for (std::size_t i = 0; i < exponents.size(); ++i) out.push_back(value(i));
    return out;
}

bool Character::is_trivial() const { return all_zero(exponents); }

bool Character::tau_trivial() const {
    long long s = 0;
    for (long long e : exponents) s = (s + e) % order;
    return s == 0;
}

CyclicCharacter Character::deconed() const { return {shape(p).to_deconed(exponents), order}; }

CyclicCharacter Character::cone() const { return {shape(p).to_cone(exponents), order}; }

long long Character::exact_order() const {
    long long g = order;
    for (long long e : exponents) g = std::gcd(g, e);
    return order / g;
}

Character character_power(const ArrangementSpec& spec, long long j, const Field& field) {
    std::vector<long long> e;
    for (long long a : spec.multiplicities) e.push_back(floor_mod(a * j, spec.total_degree));
    return Character(spec.p, spec.total_degree, e, field);
}

Character character_tk(const ArrangementSpec& spec, long long k, const Field& field) {
    const long long N = spec.total_degree;
    if (k <= 1 || N % k != 0)
        throw std::invalid_argument("k = " + std::to_string(k) + " is not a divisor > 1 of N = " + std::to_string(N));
    return character_power(spec, N / k, field);
}

const LaurentMatrix& deconed_alexander(int p) {
    static std::mutex mu;
    static std::map<int, LaurentMatrix> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(p);
    if (it == cache.end()) it = cache.emplace(p, alexander_matrix(build_deconed_presentation(p))).first;
    return it->second;
}

std::size_t depth_from_specialization(const Matrix<FieldScalar>& m, bool trivial) {
    const std::size_t r = rank_over_field(m);
    return m.cols() - r - (trivial ? 0 : 1);
}

std::size_t depth(const GroupPresentation& pr, const CyclicCharacter& ch, const Field& field) {
    if (ch.exponents.size() != pr.generators().size())
        throw std::invalid_argument("character length does not match the generator count");
    std::vector<long long> reduced;
    for (long long e : ch.exponents) reduced.push_back(floor_mod(e, ch.order));
    return depth_from_specialization(specialize_character(alexander_matrix(pr), ch, field), all_zero(reduced));
}

std::size_t depth(const GroupPresentation& pr, const std::vector<FieldScalar>& values, const Field& field) {
    if (values.size() != pr.generators().size())
        throw std::invalid_argument("value count does not match the generator count");
    bool trivial = true;
    for (const auto& v : values) trivial = trivial && v.is_one();
    return depth_from_specialization(specialize_values(alexander_matrix(pr), values, field), trivial);
}

std::size_t depth(const Character& ch) {
    const CyclicCharacter d = ch.deconed();
    return depth_from_specialization(specialize_character(deconed_alexander(ch.p), d, ch.field), all_zero(d.exponents));
}

AdditivityReport depth_additivity_check(const Character& ch, bool central) {
    if (!ch.tau_trivial()) throw std::invalid_argument("depth additivity needs tau(ch) = 1");
    AdditivityReport r;
    r.deconed_depth = depth(ch);
    r.depth0 = ch.is_trivial() ? 1 : 0;
    r.cone_depth = depth_from_specialization(specialize_character(cone_alexander(ch.p, central), ch.cone(), ch.field),
                                             ch.is_trivial());
    r.holds = r.cone_depth == r.deconed_depth + r.depth0;
    return r;
}

CVPoint CVPoint::operator*(const CVPoint& other) const {
    if (p != other.p || field != other.field || coordinates.size() != other.coordinates.size())
        throw std::invalid_argument("points live in different tori");
    CVPoint out{p, field, {}, degenerate || other.degenerate};
    for (std::size_t i = 0; i < coordinates.size(); ++i) out.coordinates.push_back(coordinates[i] * other.coordinates[i]);
    return out;
}

CVPoint family_point(int p, const FieldScalar& c12, const FieldScalar& c13, const FieldScalar& c23) {
    const Field f = c12.field();
    CVPoint pt{p, f, {f.one(), f.one()}, false};
    for (const FieldScalar* c : {&c12, &c13, &c23})
        for (int r = 0; r < p; ++r) pt.coordinates.push_back(*c);
    return pt;
}

CVPoint t_point(int p, const FieldScalar& u) {
    if (u.is_zero()) throw std::invalid_argument("u must be invertible");
    const FieldScalar v = u.inverse();
    CVPoint pt = family_point(p, u.field().one(), v, u);
    pt.coordinates[0] = u.pow(p);
    pt.coordinates[1] = v.pow(p);
    return pt;
}

CVPoint cv_component_point(int p, int i, const FieldScalar& u) {
    if (i < 1 || i >= p) throw std::invalid_argument("component index must lie in 1..p-1");
    if (u.is_zero()) throw std::invalid_argument("u must be invertible");
    const Field f = u.field();
    const bool degenerate = f.characteristic() == static_cast<std::uint32_t>(p);
    if (!degenerate && !f.has_root_of_unity(p))
        throw std::invalid_argument("field " + f.name() + " has no primitive root of unity of order " + std::to_string(p));
    const FieldScalar w = degenerate ? f.one() : f.root_of_unity(p, i);
    const FieldScalar v = (u * w).inverse();
    CVPoint pt = family_point(p, w, v, u);
    pt.coordinates[0] = u.pow(p);
    pt.coordinates[1] = v.pow(p);
    pt.degenerate = degenerate;
    return pt;
}

std::size_t depth(const CVPoint& pt) {
    FieldScalar prod = pt.field.one();
    for (const auto& c : pt.coordinates) prod = prod * c;
    if (!prod.is_one()) throw std::invalid_argument("point does not lie on the torus of the projective complement");
    const auto values = shape(pt.p).to_deconed(pt.coordinates);
    bool trivial = true;
    for (const auto& v : values) trivial = trivial && v.is_one();
    return depth_from_specialization(specialize_values(deconed_alexander(pt.p), values, pt.field), trivial);
}

std::vector<long long> multiplicities_from_character(const Character& s, unsigned characteristic) {
    if (!s.tau_trivial()) throw std::invalid_argument("multiplicities need tau(s) = 1");
    const long long k = s.exact_order();
    const long long scale = s.order / k;
    std::vector<long long> a;
    for (long long e : s.exponents) {
        const long long r = e / scale;
        a.push_back(r == 0 ? k : r);
    }
    for (long long a1 : {a[0], a[0] + k}) {
        a[0] = a1;
        long long g = 0, N = 0;
        for (long long x : a) {
            g = std::gcd(g, x);
            N += x;
        }
        if (g == 1 && (characteristic == 0 || N % characteristic != 0)) return a;
    }
    throw std::domain_error("no admissible first multiplicity in [1, 2k]");
}

}  // namespace mfh
