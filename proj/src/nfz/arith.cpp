#include "hrc/arith.hpp"

#include <mutex>
#include <stdexcept>

namespace hrc {

const std::vector<uint32_t>& primes_below(uint32_t n) {
    static std::mutex mu;
    static std::vector<uint32_t>* primes = new std::vector<uint32_t>();
    static uint32_t limit = 0;
    std::lock_guard<std::mutex> lock(mu);
    if (n > limit) {
        uint32_t new_limit = std::max(n, 1u << 17);
        std::vector<bool> sieve(new_limit, true);
        auto* np = new std::vector<uint32_t>();
        for (uint32_t i = 2; i < new_limit; i++) {
            if (!sieve[i]) continue;
            np->push_back(i);
            for (uint64_t j = (uint64_t)i * i; j < new_limit; j += i) sieve[j] = false;
        }
        primes = np;  // old vector intentionally leaked: callers may hold refs
        limit = new_limit;
    }
    return *primes;
}

bool is_probable_prime(const mpz_class& n) {
    // GMP's Miller-Rabin + Lucas; 40 reps is far beyond need at this scale
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

static mpz_class pollard_brent(const mpz_class& n, unsigned long c0) {
    // Brent's variant with deterministic parameters
    if (mpz_even_p(n.get_mpz_t())) return 2;
    mpz_class y = 2, r = 1, q = 1, g = 1, x, ys;
    unsigned long c = c0;
    while (g == 1) {
        x = y;
        for (mpz_class i = 0; i < r; i++) y = (y * y + c) % n;
        mpz_class k = 0;
        while (k < r && g == 1) {
            ys = y;
            mpz_class lim = std::min(mpz_class(128), r - k);
            for (mpz_class i = 0; i < lim; i++) {
                y = (y * y + c) % n;
                q = q * abs(x - y) % n;
            }
            mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            k += 128;
        }
        r *= 2;
        if (r > 1000000) {  // cycle without factor: restart with new constant
            c++;
            y = 2;
            r = 1;
            q = 1;
            g = 1;
        }
    }
    if (g == n) {
        // backtrack
        do {
            ys = (ys * ys + c) % n;
            mpz_class d = abs(x - ys);
            mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        } while (g == 1);
        if (g == n) return pollard_brent(n, c0 + 1);
    }
    return g;
}

static void factor_rec(mpz_class n, std::map<mpz_class, int>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        out[n]++;
        return;
    }
    // perfect powers first: keeps rho away from p^k inputs
    if (mpz_perfect_power_p(n.get_mpz_t())) {
        for (unsigned long k = 2; k <= mpz_sizeinbase(n.get_mpz_t(), 2); k++) {
            mpz_class root;
            if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
                std::map<mpz_class, int> sub;
                factor_rec(root, sub);
                for (auto& [p, e] : sub) out[p] += e * (int)k;
                return;
            }
        }
    }
    mpz_class d = pollard_brent(n, 1);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

std::map<mpz_class, int> factor_integer(mpz_class n) {
    std::map<mpz_class, int> out;
    if (n < 0) n = -n;
    if (n <= 1) return out;
    for (uint32_t p : primes_below(100000)) {
        if (mpz_class(p) * p > n) break;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            n /= p;
            out[p]++;
        }
    }
    if (n > 1) {
        if (is_probable_prime(n)) out[n]++;
        else factor_rec(n, out);
    }
    return out;
}

mpz_class square_part_root(const mpz_class& n) {
    mpz_class s = 1;
    for (auto& [p, e] : factor_integer(n)) {
        for (int i = 0; i < e / 2; i++) s *= p;
    }
    return s;
}

mpz_class squarefree_kernel(const mpz_class& n) {
    mpz_class s = 1;
    for (auto& [p, e] : factor_integer(n))
        if (e % 2) s *= p;
    return s;
}

int kronecker(const mpz_class& a, const mpz_class& n) {
    return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

bool is_fundamental_discriminant(const mpz_class& d) {
    if (d == 1) return false;
    mpz_class m = d % 4;
    if (m < 0) m += 4;
    if (m == 1) {
        mpz_class k = squarefree_kernel(abs(d));
        return k == abs(d);
    }
    if (m == 0) {
        mpz_class q = d / 4, r = q % 4;
        if (r < 0) r += 4;
        if (r != 2 && r != 3) return false;
        return squarefree_kernel(abs(q)) == abs(q);
    }
    return false;
}

} // namespace hrc
