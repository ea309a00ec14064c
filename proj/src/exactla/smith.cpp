#include "mfh/exactla/smith.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace mfh {
namespace {

struct Work {
    std::vector<std::vector<BigInt>> a;
    std::size_t m, n;
    bool track;
    std::vector<std::vector<BigInt>> U;      // row transform, m x m
    std::vector<std::vector<BigInt>> U_inv;  // kept as rows: U_inv^T stored so column ops become row ops

    // row_i += c * row_j, mirrored in U; U^-1 gets col_j -= c * col_i.
    void add_row(std::size_t i, std::size_t j, const BigInt& c, std::size_t from_col) {
        auto& ri = a[i];
        const auto& rj = a[j];
        for (std::size_t k = from_col; k < n; ++k)
            if (rj[k] != 0) ri[k] += c * rj[k];
        if (track) {
            for (std::size_t k = 0; k < m; ++k)
                if (U[j][k] != 0) U[i][k] += c * U[j][k];
            for (std::size_t k = 0; k < m; ++k)
                if (U_inv[i][k] != 0) U_inv[j][k] -= c * U_inv[i][k];
        }
    }
    void swap_rows(std::size_t i, std::size_t j) {
        std::swap(a[i], a[j]);
        if (track) {
            std::swap(U[i], U[j]);
            std::swap(U_inv[i], U_inv[j]);
        }
    }
    void negate_row(std::size_t i) {
        for (auto& x : a[i]) x = -x;
        if (track) {
            for (auto& x : U[i]) x = -x;
            for (auto& x : U_inv[i]) x = -x;
        }
    }
    void swap_cols(std::size_t i, std::size_t j) {
        for (auto& r : a) std::swap(r[i], r[j]);
    }
};

// Floor-free quotient toward zero keeps |remainder| < |pivot|.
BigInt tdiv(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

Diagonalization diagonalize(IntMatrix in, bool track_rows, const ProgressFn& progress) {
    Work w;
    w.m = in.rows();
    w.n = in.cols();
    w.track = track_rows;
    w.a.assign(w.m, std::vector<BigInt>(w.n));
    for (std::size_t i = 0; i < w.m; ++i)
        for (std::size_t j = 0; j < w.n; ++j) w.a[i][j] = in(i, j);
    if (track_rows) {
        w.U.assign(w.m, std::vector<BigInt>(w.m, BigInt(0)));
        w.U_inv.assign(w.m, std::vector<BigInt>(w.m, BigInt(0)));
        for (std::size_t i = 0; i < w.m; ++i) w.U[i][i] = w.U_inv[i][i] = 1;
    }

    std::vector<BigInt> diag;
    const std::size_t lim = std::min(w.m, w.n);
    for (std::size_t t = 0; t < lim; ++t) {
        if (progress) progress(t, lim);
        for (;;) {
            // Global pivot of least absolute value in the trailing block.
            std::size_t pi = w.m, pj = w.n;
            for (std::size_t i = t; i < w.m && !(pi < w.m && abs(w.a[pi][pj]) == 1); ++i)
                for (std::size_t j = t; j < w.n; ++j) {
                    const BigInt& x = w.a[i][j];
                    if (x == 0) continue;
                    if (pi == w.m || mpz_cmpabs(x.get_mpz_t(), w.a[pi][pj].get_mpz_t()) < 0) {
                        pi = i;
                        pj = j;
                        if (abs(x) == 1) break;
                    }
                }
            if (pi == w.m) goto done;
            if (pi != t) w.swap_rows(pi, t);
            if (pj != t) w.swap_cols(pj, t);

            bool clean = true;
            const BigInt piv = w.a[t][t];
            for (std::size_t i = t + 1; i < w.m; ++i) {
                if (w.a[i][t] == 0) continue;
                const BigInt q = tdiv(w.a[i][t], piv);
                if (q != 0) w.add_row(i, t, -q, t);
                if (w.a[i][t] != 0) clean = false;
            }
            // Column t now only has the pivot if clean, so column operations
            // touch row t alone.
            if (clean) {
                for (std::size_t j = t + 1; j < w.n; ++j) {
                    if (w.a[t][j] == 0) continue;
                    w.a[t][j] -= tdiv(w.a[t][j], piv) * piv;
                    if (w.a[t][j] != 0) clean = false;
                }
            }
            if (clean) break;
        }
        if (w.a[t][t] < 0) w.negate_row(t);
        diag.push_back(w.a[t][t]);
    }
done:
    Diagonalization d;
    d.diagonal = std::move(diag);
    if (track_rows) {
        d.U = IntMatrix(w.m, w.m);
        d.U_inv = IntMatrix(w.m, w.m);
        for (std::size_t i = 0; i < w.m; ++i)
            for (std::size_t k = 0; k < w.m; ++k) {
                d.U(i, k) = w.U[i][k];
                d.U_inv(k, i) = w.U_inv[i][k];
            }
    }
    if (progress) progress(lim, lim);
    return d;
}

std::vector<BigInt> prime_divisors(BigInt n) {
    n = abs(n);
    std::vector<BigInt> out;
    for (BigInt q = 2; q * q <= n; ++q) {
        if (n % q != 0) continue;
        out.push_back(q);
        while (n % q == 0) n /= q;
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::vector<BigInt> invariant_factor_chain(const std::vector<BigInt>& diagonal) {
    // Split into prime powers, then stack the largest powers into the last factor.
    std::map<BigInt, std::vector<BigInt>> powers;
    std::size_t count = 0;
    for (const auto& d0 : diagonal) {
        BigInt d = abs(d0);
        if (d == 0) throw std::invalid_argument("zero in diagonal");
        ++count;
        for (const auto& q : prime_divisors(d)) {
            BigInt pw = 1;
            while (d % q == 0) {
                d /= q;
                pw *= q;
            }
            powers[q].push_back(pw);
        }
    }
    std::vector<BigInt> out(count, BigInt(1));
    for (auto& [q, list] : powers) {
        std::sort(list.begin(), list.end());
        for (std::size_t k = 0; k < list.size(); ++k) out[count - list.size() + k] *= list[k];
    }
    return out;
}

std::string SmithForm::to_string() const {
    std::string s;
    for (const auto& d : invariant_factors) s += (s.empty() ? "" : " ") + d.get_str();
    return s;
}

SmithForm smith_normal_form(const IntMatrix& a, const ProgressFn& progress) {
    SmithForm s;
    s.invariant_factors = invariant_factor_chain(diagonalize(a, false, progress).diagonal);
    return s;
}

KernelData integer_kernel(const IntMatrix& m) {
    // Row-reduce m^T with a tracked unimodular W: W m^T = [H; 0]. Then the
    // columns r.. of W^T span ker m and rows r.. of (W^-1)^T give coordinates.
    const std::size_t n = m.cols(), rows = m.rows();
    std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(rows));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < n; ++j) a[j][i] = m(i, j);
    std::vector<std::vector<BigInt>> W(n, std::vector<BigInt>(n, BigInt(0)));
    std::vector<std::vector<BigInt>> Winv_t(n, std::vector<BigInt>(n, BigInt(0)));  // (W^-1)^T
    for (std::size_t i = 0; i < n; ++i) W[i][i] = Winv_t[i][i] = 1;

    auto add_row = [&](std::size_t i, std::size_t j, const BigInt& c) {
        for (std::size_t k = 0; k < rows; ++k)
            if (a[j][k] != 0) a[i][k] += c * a[j][k];
        for (std::size_t k = 0; k < n; ++k)
            if (W[j][k] != 0) W[i][k] += c * W[j][k];
        // W^-1 <- W^-1 E^-1: column j of W^-1 -= c * column i, i.e. row j of the transpose.
        for (std::size_t k = 0; k < n; ++k)
            if (Winv_t[i][k] != 0) Winv_t[j][k] -= c * Winv_t[i][k];
    };
    auto swap_rows = [&](std::size_t i, std::size_t j) {
        std::swap(a[i], a[j]);
        std::swap(W[i], W[j]);
        std::swap(Winv_t[i], Winv_t[j]);
    };

    std::size_t r = 0;
    for (std::size_t c = 0; c < rows && r < n; ++c) {
        for (;;) {
            std::size_t piv = n;
            for (std::size_t i = r; i < n; ++i)
                if (a[i][c] != 0 && (piv == n || mpz_cmpabs(a[i][c].get_mpz_t(), a[piv][c].get_mpz_t()) < 0)) piv = i;
            if (piv == n) break;
            if (piv != r) swap_rows(piv, r);
            bool done = true;
            for (std::size_t i = r + 1; i < n; ++i) {
                if (a[i][c] == 0) continue;
                BigInt q;
                mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[r][c].get_mpz_t());
                add_row(i, r, -q);
                if (a[i][c] != 0) done = false;
            }
            if (done) {
                ++r;
                break;
            }
        }
    }

    KernelData k;
    k.rank_of_map = r;
    const std::size_t dim = n - r;
    k.basis = IntMatrix(n, dim, BigInt(0));
    k.coords = IntMatrix(dim, n, BigInt(0));
    for (std::size_t a2 = 0; a2 < dim; ++a2)
        for (std::size_t i = 0; i < n; ++i) {
            k.basis(i, a2) = W[r + a2][i];
            k.coords(a2, i) = Winv_t[r + a2][i];
        }
    return k;
}

IntMatrix integer_kernel_basis(const IntMatrix& m) { return integer_kernel(m).basis; }

AbelianGroup cokernel(const IntMatrix& a) {
    const auto d = diagonalize(a);
    AbelianGroup g;
    g.free_rank = a.rows() - d.diagonal.size();
    for (const auto& x : invariant_factor_chain(d.diagonal))
        if (x != 1) g.torsion.push_back(x);
    return g;
}

std::string AbelianGroup::to_string() const {
    std::string s;
    if (free_rank > 0) s = free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank);
    for (const auto& t : torsion) s += (s.empty() ? "" : " + ") + std::string("Z/") + t.get_str();
    return s.empty() ? "0" : s;
}

std::vector<BigInt> AbelianGroup::torsion_primes() const {
    BigInt prod = 1;
    for (const auto& t : torsion) prod *= t;
    return prime_divisors(prod);
}

std::vector<BigInt> AbelianGroup::primary_part(const BigInt& q) const {
    std::vector<BigInt> out;
    for (BigInt t : torsion) {
        BigInt pw = 1;
        while (t % q == 0) {
            t /= q;
            pw *= q;
        }
        if (pw > 1) out.push_back(pw);
    }
    return out;
}

}  // namespace mfh
