#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "mfh/braidword/braid.hpp"
#include "mfh/exactla/field_rank.hpp"
#include "mfh/exactla/int_matrix.hpp"
#include "mfh/milnorfiber/milnor.hpp"

using namespace mfh;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

std::string join(const std::vector<BigInt>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : " ") + x.get_str();
    return s;
}

IntMatrix a2_matrix(int p) {
    const LaurentMatrix A = alexander_matrix(build_alternate_deconed_presentation(p));
    std::vector<long long> dec(3 * p + 1, 1);
    for (int r = 1; r <= p; ++r) dec[r] = 0;
    const CyclicCharacter ch{deconed_to_alternate(p, dec), 2};
    IntMatrix m(A.rows(), A.cols(), BigInt(0));
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) {
            const auto bins = to_group_ring(A(i, j), ch);
            m(i, j) = bins[0] - bins[1];
        }
    return m;
}

std::size_t rank_mod(const IntMatrix& m, std::uint32_t q) { return rank_over_field(to_field(m, Field::finite(q, 1))); }

std::vector<long long> random_tau_trivial(std::mt19937_64& rng, int p, long long m) {
    std::vector<long long> e(3 * p + 2);
    long long sum = 0;
    for (auto& x : e) {
        x = static_cast<long long>(rng() % m);
        sum += x;
    }
    e[1] = floor_mod(e[1] - sum, m);
    return e;
}

// Exponents of cv_component_point(p, i, zeta_m^j) for p | m.
std::vector<long long> component_exponents(int p, int i, long long m, long long j) {
    const long long w = i * (m / p), v = -(j + w);
    std::vector<long long> e{p * j, p * v};
    for (long long c : {w, v, j})
        for (int r = 0; r < p; ++r) e.push_back(c);
    return e;
}

FreeWord random_word(std::mt19937_64& rng, int rank, int len) {
    std::vector<int> l;
    for (int k = 0; k < len; ++k) {
        const int g = 1 + static_cast<int>(rng() % rank);
        l.push_back(rng() % 2 ? g : -g);
    }
    return FreeWord::from_signed(l);
}

BraidWord random_pure_braid(std::mt19937_64& rng, int strands) {
    BraidWord out(strands, {});
    for (int f = 0; f < 3; ++f) {
        std::vector<int> l;
        for (int k = 0; k < 3; ++k) {
            const int s = 1 + static_cast<int>(rng() % (strands - 1));
            l.push_back(rng() % 2 ? s : -s);
        }
        const BraidWord c(strands, l);
        const int i = 1 + static_cast<int>(rng() % (strands - 1));
        const int j = i + 1 + static_cast<int>(rng() % (strands - i));
        const BraidWord a = pure_braid_generator(strands, i, j);
        out = out * c * (rng() % 2 ? a : a.inverse()) * c.inverse();
    }
    return out;
}

Outcome criterion1() {
    Outcome o;
    const IntegralHomology h = milnor_h1_integral(arrangement_spec(2));
    o.detail = "H1 = " + h.group.to_string();
    o.require(h.group.free_rank == 7 && h.group.torsion == std::vector<BigInt>{2, 2}, "expected Z^7 + Z/2 + Z/2");
    // Field-rank engine: dims 7 and 9 force exactly two Z/2 summands given free rank 7.
    o.require(milnor_h1_field(arrangement_spec(2), Field::finite(2, 15)).dimension == 9, "dim over F2 != 9");
    o.require(milnor_h1_field(arrangement_spec(2), Field::cyclotomic(15)).dimension == 7, "dim over Q != 7");
    return o;
}

Outcome criterion2() {
    Outcome o;
    for (int p : {3, 5}) {
        const IntegralHomology h = milnor_h1_integral(arrangement_spec(p));
        o.detail += (o.detail.empty() ? "" : ", ") + std::string("p=") + std::to_string(p) + ": " + h.group.to_string();
        o.require(h.group.free_rank == static_cast<std::size_t>(3 * p + 1), "free rank at p=" + std::to_string(p));
        o.require(h.p_primary == std::vector<BigInt>{BigInt(p)}, "p-part at p=" + std::to_string(p));
        for (const BigInt& q : h.torsion_primes)
            o.require(q == p || (2 * (2 * p + 1)) % q == 0, "torsion prime " + q.get_str() + " outside envelope");
    }
    return o;
}

Outcome criterion3() {
    Outcome o;
    for (int p : {3, 5}) {
        const IntMatrix m = a2_matrix(p);
        const SmithForm f = smith_normal_form(m);
        std::vector<BigInt> want(3 * p - 1, BigInt(2));
        want.push_back(2 * p);
        o.detail += (o.detail.empty() ? "" : ", ") + std::string("p=") + std::to_string(p) + ": " + join(f.invariant_factors);
        o.require(f.invariant_factors == want, "invariant factors at p=" + std::to_string(p));
        // Local ranks: every entry even, M/2 of full rank 3p mod 2, rank 3p-1 mod p, 3p over Q.
        IntMatrix half = m;
        bool even = true;
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) {
                even = even && m(i, j) % 2 == 0;
                half(i, j) = m(i, j) / 2;
            }
        o.require(even, "odd entry");
        o.require(rank_mod(half, 2) == static_cast<std::size_t>(3 * p), "rank of M/2 mod 2");
        o.require(rank_mod(m, p) == static_cast<std::size_t>(3 * p - 1), "rank mod p");
        o.require(rank_over_field(to_field(m, Field::rationals())) == static_cast<std::size_t>(3 * p), "rank over Q");
        if (p == 3) {
            std::ifstream in(std::string(MFH_SOURCE_DIR) + "/fixtures/a2_p3.sparse");
            std::stringstream b;
            b << in.rdbuf();
            o.require(smith_normal_form(parse_matrix(b.str())).invariant_factors == want, "shipped fixture");
        }
    }
    return o;
}

Outcome criterion4() {
    Outcome o;
    std::size_t entries = 0;
    for (int p : {3, 5}) {
        const ArrangementSpec s = arrangement_spec(p);
        const long long N = s.total_degree;
        for (std::uint64_t k : divisors(N)) {
            if (k == 1) continue;
            ++entries;
            o.require(depth(character_tk(s, k, Field::cyclotomic(N))) == 0,
                      "Q depth t(" + std::to_string(k) + ") p=" + std::to_string(p));
        }
        for (std::uint32_t q : {3u, 5u, 13u, 17u, 19u}) {
            if ((2 * p * N) % q == 0) continue;
            ++entries;
            o.require(depth(character_tk(s, 2, Field::finite(q, N))) == 0,
                      "F" + std::to_string(q) + " depth t(2) p=" + std::to_string(p));
        }
        ++entries;
        o.require(depth(character_tk(s, 2, Field::finite(p, N))) == 1, "char p depth t(2) p=" + std::to_string(p));
    }
    o.detail = std::to_string(entries) + " table entries";
    return o;
}

Outcome criterion5() {
    Outcome o;
    struct Case {
        int p;
        Field f;
        std::size_t want;
    };
    const std::vector<Case> cases{{3, Field::cyclotomic(14), 10}, {3, Field::finite(3, 14), 11},
                                  {5, Field::cyclotomic(22), 16}, {5, Field::finite(5, 22), 17},
                                  {2, Field::cyclotomic(15), 7},  {2, Field::finite(7, 15), 7},
                                  {2, Field::finite(2, 15), 9}};
    for (const auto& c : cases) {
        const std::size_t d = milnor_h1_field(arrangement_spec(c.p), c.f).dimension;
        o.detail += (o.detail.empty() ? "" : ", ") + std::string("p=") + std::to_string(c.p) + " " + c.f.name() + ": " +
                    std::to_string(d);
        o.require(d == c.want, "p=" + std::to_string(c.p) + " over " + c.f.name());
    }
    return o;
}

Outcome criterion6() {
    Outcome o;
    const IntegralHomology h3 = milnor_h1_integral(arrangement_spec(3));
    bool neg = false;
    for (const auto& m : h3.monodromy)
        if (m.prime == 3 && m.action.rows() == 1) neg = floor_mod(BigInt(m.action(0, 0) % 3).get_si(), 3) == 2;
    o.require(neg, "p=3 action on Z/3 is not negation");
    const IntegralHomology h2 = milnor_h1_integral(arrangement_spec(2));
    long long ord = 0;
    for (const auto& m : h2.monodromy)
        if (m.prime == 2) {
            ord = m.action_order;
            // Independent order check: apply the 2x2 action mod 2 until it returns to the identity.
            IntMatrix x = m.action, id = identity_matrix(m.action.rows());
            long long k = 1;
            auto reduce = [](IntMatrix a) {
                for (std::size_t i = 0; i < a.rows(); ++i)
                    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = static_cast<long>(floor_mod(BigInt(a(i, j) % 2).get_si(), 2));
                return a;
            };
            x = reduce(x);
            while (!(x == id) && k < 20) {
                x = reduce(x * m.action);
                ++k;
            }
            o.require(k == 3, "independent order " + std::to_string(k));
        }
    o.require(ord == 3, "p=2 order " + std::to_string(ord));
    o.detail = std::string("p=3: x -> -x ") + (neg ? "yes" : "no") + ", p=2: order " + std::to_string(ord);
    return o;
}

Outcome criterion7() {
    Outcome o;
    for (int p : {2, 3, 5}) {
        const BraidIdentityReport r = check_braid_identities(p);
        const std::string tag = " p=" + std::to_string(p);
        o.require(r.afrak_combing, "tau A12^(p) tau^-1" + tag);
        o.require(r.zfrak_combing, "tau Z1 tau^-1" + tag);
        if (p % 2 == 1) {
            o.require(r.zfrak_action, "zfrak action" + tag);
            o.require(r.afrak_action, "afrak action" + tag);
        }
    }
    o.detail = "combing identities for p = 2, 3, 5; action formulas for p = 3, 5";
    return o;
}

Outcome criterion8() {
    Outcome o;
    std::mt19937_64 rng(20260101);

    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 2 + t % 5;
        const FreeWord w = random_word(rng, n, 4 + t % 25);
        const auto grad = fox_gradient(w, n);
        LaurentPoly sum(n);
        for (std::size_t g = 0; g < n; ++g) sum += grad[g] * (LaurentPoly::variable(n, g, 1) - LaurentPoly::constant(n, 1));
        LaurentPoly::Exponents e(n, 0);
        for (const auto& [g, k] : w.letters()) e[g - 1] += k;
        if (!(sum == LaurentPoly::monomial(e) - LaurentPoly::constant(n, 1))) {
            o.require(false, "fox identity");
            break;
        }
    }

    for (int t = 0; t < 50; ++t) {
        const int s = 3 + t % 3;
        const BraidWord b1 = random_pure_braid(rng, s), b2 = random_pure_braid(rng, s);
        if (!(gassner_matrix(b1 * b2) == gassner_matrix(b1) * gassner_matrix(b2))) {
            o.require(false, "gassner multiplicativity");
            break;
        }
    }

    for (int t = 0; t < 50; ++t) {
        const std::size_t r = 3 + t % 4, c = 3 + (t / 2) % 5;
        IntMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<long>(rng() % 11) - 5;
        IntMatrix u = identity_matrix(r), v = identity_matrix(c);
        for (int k = 0; k < 10; ++k) {
            const std::size_t a = rng() % r, b = rng() % r, x = rng() % c, y = rng() % c;
            const long f = static_cast<long>(rng() % 5) - 2;
            if (a != b)
                for (std::size_t j = 0; j < r; ++j) u(a, j) += f * u(b, j);
            if (x != y)
                for (std::size_t i = 0; i < c; ++i) v(i, x) += f * v(i, y);
        }
        if (smith_normal_form(m).invariant_factors != smith_normal_form(u * m * v).invariant_factors) {
            o.require(false, "SNF unimodular invariance");
            break;
        }
    }

    std::size_t flat = 0;
    for (int p : {2, 3, 5}) {
        const ArrangementSpec s = arrangement_spec(p);
        const long long N = s.total_degree;
        for (std::uint64_t k : divisors(N)) {
            if (k == 1) continue;
            const std::size_t d0 = depth(character_tk(s, k, Field::cyclotomic(N)));
            for (std::uint32_t q : {2u, 3u, 5u, 7u})
                if (N % q != 0) {
                    ++flat;
                    o.require(d0 <= depth(character_tk(s, k, Field::finite(q, N))), "flatness t(k)");
                }
        }
        for (int t = 0; t < 50; ++t) {
            const long long m = 2 + static_cast<long long>(rng() % 16);
            const auto e = (t % 4 == 0 && m % p == 0) ? component_exponents(p, 1, m, static_cast<long long>(rng() % m))
                                                      : random_tau_trivial(rng, p, m);
            const std::size_t d0 = depth(Character(p, m, e, Field::cyclotomic(m)));
            for (std::uint32_t q : {2u, 3u, 5u, 7u, 11u})
                if (m % q != 0) {
                    ++flat;
                    o.require(d0 <= depth(Character(p, m, e, Field::finite(q, m))), "flatness random");
                    break;
                }
        }
    }

    for (int p : {2, 3, 5}) {
        const ArrangementSpec s = arrangement_spec(p);
        const long long N = s.total_degree;
        for (const Field& f : {Field::cyclotomic(N), Field::finite(p == 2 ? 2 : 3, N)}) {
            if (f.characteristic() != 0 && N % f.characteristic() == 0) continue;
            const FieldHomology h = milnor_h1_field(s, f);
            o.require(h.eigenspace_total() == h.dimension, "eigenspace total over " + f.name());
        }
    }

    std::size_t positive = 0;
    for (int p : {2, 3}) {
        for (int t = 0; t < 20; ++t) {
            const long long m = 6 * p;
            const auto e = (p == 3 && t % 2 == 1) ? component_exponents(p, 1 + t % 2, m, static_cast<long long>(rng() % m))
                                                  : random_tau_trivial(rng, p, m);
            const Character ch(p, m, e, Field::cyclotomic(m));
            const AdditivityReport r = depth_additivity_check(ch);
            o.require(r.holds, "depth additivity");
            if (r.deconed_depth > 0) ++positive;
        }
    }
    o.detail = "200 words, 50 braid pairs, 50 matrices, " + std::to_string(flat) + " flatness pairs, 6 eigenspace totals, 40 additivity checks (" +
               std::to_string(positive) + " with positive depth)";
    return o;
}

Outcome criterion9() {
    Outcome o;
    std::size_t points = 0;
    for (int p : {3, 5}) {
        const long long m = 3 * p;
        const Field K = Field::cyclotomic(m);
        for (int i = 1; i < p; ++i)
            for (long long j = 0; j < m; j += 2) {
                ++points;
                o.require(depth(cv_component_point(p, i, K.root_of_unity(m, j))) >= 1,
                          "C" + std::to_string(i) + " point p=" + std::to_string(p));
            }
    }
    const Field K6 = Field::cyclotomic(6);
    const CVPoint T = t_point(2, K6.root_of_unity(3, 1));
    const std::size_t dT = depth(T);
    const std::size_t dsT = depth(family_point(2, -K6.one(), -K6.one(), K6.one()) * T);
    o.require(dT == 0, "T-point depth " + std::to_string(dT));
    o.require(dsT >= 1, "sT-point depth " + std::to_string(dsT));
    o.detail = std::to_string(points) + " C_i points, T-point depth " + std::to_string(dT) + ", sT depth " +
               std::to_string(dsT);
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"integral H1 for p=2", criterion1},
        {"integral H1 for p=3, 5", criterion2},
        {"SNF of A(2) for p=3, 5", criterion3},
        {"depth table for p=3, 5", criterion4},
        {"field dimensions", criterion5},
        {"monodromy on torsion", criterion6},
        {"braid identities", criterion7},
        {"property suites", criterion8},
        {"characteristic-variety points", criterion9},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!o.pass) ++failed;
        std::ostringstream line;
        line.precision(2);
        line << std::fixed << (o.pass ? "[PASS] " : "[FAIL] ") << i + 1 << " " << criteria[i].first << ": " << o.detail
             << " (" << secs << "s)";
        std::cout << line.str() << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
