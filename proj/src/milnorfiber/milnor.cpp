#include "mfh/milnorfiber/milnor.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace mfh {

namespace {

template <class F>
void parallel_for(std::size_t n, unsigned threads, F&& body) {
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) body(i);
        });
    for (auto& th : pool) th.join();
}

}  // namespace

std::size_t FieldHomology::eigenspace_total() const {
    std::size_t s = 0;
    for (std::size_t d : eigenspaces) s += d;
    return s;
}

FieldHomology milnor_h1_field(const ArrangementSpec& spec, const Field& field, unsigned threads) {
    const long long N = spec.total_degree;
    const std::uint32_t q = field.characteristic();
    if (q != 0 && N % q == 0)
        throw std::invalid_argument("characteristic " + std::to_string(q) + " divides N = " + std::to_string(N));
    if (!field.has_root_of_unity(N))
        throw std::invalid_argument("field " + field.name() + " has no primitive root of unity of order " +
                                    std::to_string(N));
    FieldHomology out;
    out.N = N;
    out.field = field;
    out.eigenspaces.assign(N, 0);
    deconed_alexander(spec.p);
    parallel_for(static_cast<std::size_t>(N), threads,
                 [&](std::size_t j) { out.eigenspaces[j] = depth(character_power(spec, static_cast<long long>(j), field)); });
    out.dimension = static_cast<std::size_t>(spec.size() - 1);
    for (std::uint64_t k : divisors(N)) {
        if (k == 1) continue;
        const std::size_t d = out.eigenspaces[N / k];
        out.depth_by_divisor.emplace_back(static_cast<long long>(k), d);
        out.dimension += totient(k) * d;
    }
    return out;
}

IntegralHomology milnor_h1_integral(const ArrangementSpec& spec, const ProgressFn& progress) {
    const CyclicCharacter lam{spec.to_deconed(spec.multiplicities), spec.total_degree};
    CyclicCoverHomology h(build_deconed_presentation(spec.p), lam, progress);
    IntegralHomology out;
    out.group = h.group();
    out.torsion_primes = out.group.torsion_primes();
    out.envelope.push_back(spec.p);
    for (std::uint64_t q : prime_factors(2 * (2 * spec.p + 1)))
        out.envelope.push_back(BigInt(static_cast<unsigned long>(q)));
    std::sort(out.envelope.begin(), out.envelope.end());
    out.envelope.erase(std::unique(out.envelope.begin(), out.envelope.end()), out.envelope.end());
    out.envelope_ok = std::all_of(out.torsion_primes.begin(), out.torsion_primes.end(), [&](const BigInt& q) {
        return std::find(out.envelope.begin(), out.envelope.end(), q) != out.envelope.end();
    });
    out.p_primary = out.group.primary_part(spec.p);
    for (const BigInt& q : out.torsion_primes) {
        PrimaryMonodromy m;
        m.prime = q;
        m.action = h.primary_action(q, &m.orders);
        m.action_order = action_order(m.action, m.orders);
        out.monodromy.push_back(std::move(m));
    }
    out.free_monodromy_order = free_action_order(h.free_action());
    return out;
}

std::size_t dimension_from_integral(const AbelianGroup& g, unsigned characteristic) {
    std::size_t d = g.free_rank;
    if (characteristic == 0) return d;
    for (const BigInt& t : g.torsion)
        if (t % characteristic == 0) ++d;
    return d;
}

}  // namespace mfh
