#include "lielap/modular.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>

#include "lielap/parallel.hpp"

namespace lielap {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }
u64 addmod(u64 a, u64 b, u64 p) { return a >= p - b ? a - (p - b) : a + b; }
u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + (p - b); }

u64 powmod(u64 b, u64 e, u64 p) {
    u64 r = 1;
    for (; e; e >>= 1, b = mulmod(b, b, p))
        if (e & 1) r = mulmod(r, b, p);
    return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

u64 reduce(const mpz_class& z, u64 p) { return mpz_fdiv_ui(z.get_mpz_t(), p); }

mpz_class to_mpz(u64 v) {
    mpz_class z;
    mpz_import(z.get_mpz_t(), 1, -1, sizeof(u64), 0, 0, &v);
    return z;
}

}  // namespace

const GaussPrime& gauss_prime(std::size_t index) {
    static std::mutex mutex;
    static std::vector<GaussPrime> primes;
    std::lock_guard lock(mutex);
    while (primes.size() <= index) {
        u64 candidate = primes.empty() ? (u64{1} << 62) - 3 : primes.back().p - 4;  // stays = 1 mod 4
        for (;; candidate -= 4) {
            const mpz_class z = to_mpz(candidate);
            if (mpz_probab_prime_p(z.get_mpz_t(), 30) == 0) continue;
            // a non-residue g gives g^((p-1)/4) with square -1
            for (u64 g = 2;; ++g) {
                if (powmod(g, (candidate - 1) / 2, candidate) == candidate - 1) {
                    primes.push_back({candidate, powmod(g, (candidate - 1) / 4, candidate)});
                    break;
                }
            }
            break;
        }
    }
    return primes[index];
}

std::vector<u64> char_poly_mod(std::vector<u64> h, std::size_t n, u64 p) {
    auto at = [&h, n](std::size_t i, std::size_t j) -> u64& { return h[i * n + j]; };
    for (std::size_t m = 1; m + 1 < n; ++m) {
        std::size_t pivot = m;
        while (pivot < n && at(pivot, m - 1) == 0) ++pivot;
        if (pivot == n) continue;
        if (pivot != m) {
            for (std::size_t j = 0; j < n; ++j) std::swap(at(pivot, j), at(m, j));
            for (std::size_t i = 0; i < n; ++i) std::swap(at(i, pivot), at(i, m));
        }
        const u64 inv = invmod(at(m, m - 1), p);
        for (std::size_t i = m + 1; i < n; ++i) {
            if (at(i, m - 1) == 0) continue;
            const u64 u = mulmod(at(i, m - 1), inv, p);
            for (std::size_t j = m - 1; j < n; ++j) at(i, j) = submod(at(i, j), mulmod(u, at(m, j), p), p);
            for (std::size_t r = 0; r < n; ++r) at(r, m) = addmod(at(r, m), mulmod(u, at(r, i), p), p);
        }
    }
    // q_{k+1} = (X - h_kk) q_k - sum_{i<k} h_ik (prod_{j=i+1..k} h_{j,j-1}) q_i, q = det(X - H)
    std::vector<std::vector<u64>> q(n + 1);
    q[0] = {1};
    for (std::size_t k = 0; k < n; ++k) {
        const auto& prev = q[k];
        std::vector<u64> next(prev.size() + 1, 0);
        for (std::size_t d = 0; d < prev.size(); ++d) {
            next[d + 1] = addmod(next[d + 1], prev[d], p);
            next[d] = submod(next[d], mulmod(at(k, k), prev[d], p), p);
        }
        u64 t = 1;
        for (std::size_t i = k; i-- > 0;) {
            t = mulmod(t, at(i + 1, i), p);
            if (t == 0) break;
            const u64 f = mulmod(at(i, k), t, p);
            if (f == 0) continue;
            for (std::size_t d = 0; d < q[i].size(); ++d) next[d] = submod(next[d], mulmod(f, q[i][d], p), p);
        }
        q[k + 1] = std::move(next);
    }
    std::vector<u64> out = std::move(q[n]);
    if (n % 2 == 1)
        for (auto& c : out) c = c == 0 ? 0 : p - c;
    return out;
}

std::vector<GaussRational> char_poly_multimodular(const GMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
    const std::size_t n = static_cast<std::size_t>(m.rows());
    if (n == 0) return {GaussRational(1)};

    // M = L * m is a Gaussian-integer matrix.
    mpz_class l = 1;
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).real().denominator().get_mpz_t());
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).imag().denominator().get_mpz_t());
        }
    std::vector<mpz_class> re(n * n), im(n * n);
    double log2_row_max = 0;
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class row = 0;
        for (std::size_t j = 0; j < n; ++j) {
            const auto& z = m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
            re[i * n + j] = z.real().numerator() * (l / z.real().denominator());
            im[i * n + j] = z.imag().numerator() * (l / z.imag().denominator());
            row += abs(re[i * n + j]) + abs(im[i * n + j]);
        }
        if (row > 0) {
            long e = 0;
            const double d = mpz_get_d_2exp(&e, row.get_mpz_t());
            log2_row_max = std::max(log2_row_max, std::log2(d) + static_cast<double>(e));
        }
    }

    // Every eigenvalue of M is bounded by its max row sum R, so |c_k| <= C(n,k) R^(n-k)
    // for the coefficient of X^k; both the real and imaginary parts obey the same bound.
    double log2_bound = 0;
    for (std::size_t k = 0; k <= n; ++k) {
        const double binom = (std::lgamma(double(n) + 1) - std::lgamma(double(k) + 1) - std::lgamma(double(n - k) + 1)) /
                             std::log(2.0);
        log2_bound = std::max(log2_bound, binom + double(n - k) * log2_row_max);
    }
    const double needed_bits = log2_bound + 2 + 32;  // sign bit, and slack against rounding
    const std::size_t prime_count = static_cast<std::size_t>(std::ceil(needed_bits / 61.0));

    std::vector<std::vector<u64>> plus(prime_count), minus(prime_count);
    parallel_for(prime_count, [&](std::size_t t) {
        const auto& gp = gauss_prime(t);
        std::vector<u64> a(n * n), b(n * n);
        for (std::size_t e = 0; e < n * n; ++e) {
            const u64 x = reduce(re[e], gp.p);
            const u64 y = mulmod(reduce(im[e], gp.p), gp.sqrt_minus_one, gp.p);
            a[e] = addmod(x, y, gp.p);
            b[e] = submod(x, y, gp.p);
        }
        plus[t] = char_poly_mod(std::move(a), n, gp.p);
        minus[t] = char_poly_mod(std::move(b), n, gp.p);
    });

    // c = a + b i maps to u = a + b r and v = a - b r; recover a and b modulo each prime.
    std::vector<mpz_class> real(n + 1, 0), imag(n + 1, 0);
    mpz_class modulus = 1;
    for (std::size_t t = 0; t < prime_count; ++t) {
        const auto& gp = gauss_prime(t);
        const u64 p = gp.p;
        const u64 inv2 = invmod(2, p);
        const u64 inv2r = invmod(mulmod(2, gp.sqrt_minus_one, p), p);
        const mpz_class pz = to_mpz(p);
        mpz_class inv_mod_p;  // modulus^-1 mod p
        const mpz_class mod_p = modulus % pz;
        mpz_invert(inv_mod_p.get_mpz_t(), mod_p.get_mpz_t(), pz.get_mpz_t());
        for (std::size_t k = 0; k <= n; ++k) {
            const u64 u = plus[t][k], v = minus[t][k];
            const u64 ak = mulmod(addmod(u, v, p), inv2, p);
            const u64 bk = mulmod(submod(u, v, p), inv2r, p);
            for (auto [acc, residue] : {std::pair{&real[k], ak}, std::pair{&imag[k], bk}}) {
                // acc += modulus * ((residue - acc) * modulus^-1 mod p)
                mpz_class diff = to_mpz(residue) - (*acc % pz);
                diff = (diff * inv_mod_p) % pz;
                if (diff < 0) diff += pz;
                *acc += modulus * diff;
            }
        }
        modulus *= pz;
    }
    const mpz_class half = modulus / 2;
    std::vector<GaussRational> out(n + 1);
    mpz_class scale = 1;  // L^(n-k), built from k = n downward
    for (std::size_t k = n + 1; k-- > 0;) {
        if (real[k] > half) real[k] -= modulus;
        if (imag[k] > half) imag[k] -= modulus;
        // det(m - X) = L^-n det(M - L X): coefficient of X^k is c_k L^k / L^n.
        out[k] = GaussRational(Rational(real[k], scale), Rational(imag[k], scale));
        scale *= l;
    }
    return out;
}

}  // namespace lielap
