#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hrc/arith.hpp"
#include "hrc/modp.hpp"
#include "hrc/zpoly.hpp"

/* Irreducibility over Q for monic integral polynomials of small degree.
 *
 * Fast path: factor mod several good primes and intersect the sets of
 * achievable proper factor degrees; an empty intersection proves
 * irreducibility.  Slow path (needed e.g. when the Galois group has
 * exponent 2, so every reduction splits): Zassenhaus — Hensel lift the
 * factorization at one good prime past the Mignotte bound and test subset
 * products for genuine divisibility.
 */

namespace hrc {

namespace {

using ZP = std::vector<mpz_class>;  // dense, ascending, coefficients in [0, m)

void ztrim(ZP& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

ZP zreduce(const ZP& f, const mpz_class& m) {
    ZP r(f.size());
    for (size_t i = 0; i < f.size(); i++) {
        r[i] = f[i] % m;
        if (r[i] < 0) r[i] += m;
    }
    ztrim(r);
    return r;
}

ZP zmul(const ZP& a, const ZP& b, const mpz_class& m) {
    if (a.empty() || b.empty()) return {};
    ZP r(a.size() + b.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.size(); i++)
        for (size_t j = 0; j < b.size(); j++) r[i + j] += a[i] * b[j];
    return zreduce(r, m);
}

ZP zadd(const ZP& a, const ZP& b, const mpz_class& m) {
    ZP r(std::max(a.size(), b.size()), mpz_class(0));
    for (size_t i = 0; i < r.size(); i++)
        r[i] = (i < a.size() ? a[i] : mpz_class(0)) + (i < b.size() ? b[i] : mpz_class(0));
    return zreduce(r, m);
}

ZP zsub(const ZP& a, const ZP& b, const mpz_class& m) {
    ZP r(std::max(a.size(), b.size()), mpz_class(0));
    for (size_t i = 0; i < r.size(); i++)
        r[i] = (i < a.size() ? a[i] : mpz_class(0)) - (i < b.size() ? b[i] : mpz_class(0));
    return zreduce(r, m);
}

// divrem by monic divisor, all mod m
void zdivrem(const ZP& a, const ZP& d, const mpz_class& m, ZP& q, ZP& r) {
    if (d.empty() || d.back() != 1) throw std::logic_error("zdivrem: divisor not monic");
    r = a;
    q.clear();
    int dd = (int)d.size() - 1;
    if ((int)r.size() > dd) q.assign(r.size() - dd, mpz_class(0));
    for (int i = (int)r.size() - 1; i >= dd; i--) {
        if (r[i] == 0) continue;
        mpz_class f = r[i];
        q[i - dd] = f;
        for (int j = 0; j <= dd; j++) {
            mpz_class x = r[i - dd + j] - f * d[j];
            x %= m;
            if (x < 0) x += m;
            r[i - dd + j] = x;
        }
    }
    ztrim(r);
    ztrim(q);
}

ZP from_polyp(const PolyP& f) {
    ZP r(f.size());
    for (size_t i = 0; i < f.size(); i++) r[i] = (unsigned long)f[i];
    return r;
}

// extended euclid over F_p: s*a + t*b = 1, for coprime a, b
void bezout_p(const ModP& R, PolyP a, PolyP b, PolyP& s, PolyP& t) {
    PolyP s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
    while (!b.empty()) {
        // q, r of a / b
        PolyP r = a, q;
        int db = R.deg(b);
        if (R.deg(r) >= db) q.assign(R.deg(r) - db + 1, 0);
        uint64_t linv = R.inv(b.back());
        for (int i = R.deg(r); i >= db; i--) {
            if (!r[i]) continue;
            uint64_t f = R.mul(r[i], linv);
            q[i - db] = f;
            for (int j = 0; j <= db; j++) r[i - db + j] = R.sub(r[i - db + j], R.mul(f, b[j]));
        }
        ModP::trim(r);
        ModP::trim(q);
        PolyP ns = R.sub_poly(s0, R.mulp(q, s1));
        PolyP nt = R.sub_poly(t0, R.mulp(q, t1));
        a = std::move(b);
        b = std::move(r);
        s0 = std::move(s1); s1 = std::move(ns);
        t0 = std::move(t1); t1 = std::move(nt);
    }
    if (R.deg(a) != 0) throw std::logic_error("bezout_p: inputs not coprime");
    uint64_t inv = R.inv(a[0]);
    for (auto& c : s0) c = R.mul(c, inv);
    for (auto& c : t0) c = R.mul(c, inv);
    s = std::move(s0);
    t = std::move(t0);
}

/* Lift f = g*h (mod p), with Bezout pair s*g + t*h = 1 (mod p), to mod M
 * (a power of p).  f is given by exact integer coefficients; g, h monic.
 * Quadratic lifting; h stays monic and g is recovered as f div h, which
 * doubles as a consistency check.
 */
void hensel2(const ZP& f, const mpz_class& p, const mpz_class& M,
             ZP g, ZP h, ZP s, ZP t, ZP& gout, ZP& hout) {
    mpz_class m = p;
    while (m < M) {
        mpz_class m2 = m * m;
        ZP fm = zreduce(f, m2);
        ZP e = zsub(fm, zmul(g, h, m2), m2);
        ZP q, r;
        zdivrem(zmul(s, e, m2), h, m2, q, r);
        ZP h2 = zadd(h, r, m2);
        ZP g2, rem;
        zdivrem(fm, h2, m2, g2, rem);
        if (!rem.empty()) throw std::logic_error("hensel2: lift inconsistency");
        // lift the Bezout pair
        ZP b = zsub(zadd(zmul(s, g2, m2), zmul(t, h2, m2), m2), ZP{mpz_class(1)}, m2);
        ZP q2, r2;
        zdivrem(zmul(s, b, m2), h2, m2, q2, r2);
        ZP s2 = zsub(s, r2, m2);
        ZP t2 = zsub(t, zadd(zmul(t, b, m2), zmul(q2, g2, m2), m2), m2);
        g = std::move(g2);
        h = std::move(h2);
        s = std::move(s2);
        t = std::move(t2);
        m = m2;
    }
    gout = zreduce(g, M);
    hout = zreduce(h, M);
    // final exactness at M
    ZP q, rem;
    zdivrem(zreduce(f, M), hout, M, q, rem);
    if (!rem.empty()) throw std::logic_error("hensel2: final check failed");
    gout = std::move(q);
}

// lift the full factor list of monic f (squarefree mod p) to mod M
std::vector<ZP> hensel_tree(const ZP& f, const std::vector<PolyP>& factors,
                            const ModP& R, const mpz_class& M) {
    if (factors.size() == 1) {
        return {zreduce(f, M)};
    }
    size_t half = factors.size() / 2;
    PolyP G = {1}, H = {1};
    for (size_t i = 0; i < half; i++) G = R.mulp(G, factors[i]);
    for (size_t i = half; i < factors.size(); i++) H = R.mulp(H, factors[i]);
    PolyP s, t;
    bezout_p(R, G, H, s, t);
    ZP GM, HM;
    hensel2(f, mpz_class((unsigned long)R.p), M, from_polyp(G), from_polyp(H),
            from_polyp(s), from_polyp(t), GM, HM);
    std::vector<PolyP> left(factors.begin(), factors.begin() + half);
    std::vector<PolyP> right(factors.begin() + half, factors.end());
    auto a = hensel_tree(GM, left, R, M);
    auto b = hensel_tree(HM, right, R, M);
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

mpz_class balanced(const mpz_class& c, const mpz_class& M) {
    return 2 * c > M ? c - M : c;
}

bool zassenhaus_irreducible(const QPoly& fq, uint64_t good_prime) {
    std::vector<mpz_class> f = fq.int_coeffs();
    int n = fq.degree();
    ModP R(good_prime);
    PolyP fp = R.reduce(fq);
    auto fac = R.factor(fp, /*seed*/ good_prime);
    if (fac.size() == 1) return true;
    std::vector<PolyP> factors;
    for (auto& [g, e] : fac) {
        if (e != 1) throw std::logic_error("zassenhaus: prime not squarefree");
        factors.push_back(g);
    }
    // Mignotte-style bound on coefficients of any monic factor
    mpz_class norm2 = 0;
    for (auto& c : f) norm2 += c * c;
    mpz_class B = (sqrt(norm2) + 1 + 1);
    B <<= n;
    mpz_class M = good_prime;
    while (M <= 2 * B) M *= good_prime;

    auto lifted = hensel_tree(zreduce(f, M), factors, R, M);
    int r = (int)lifted.size();
    // subset products; sizes up to r/2, fixing index 0 when size == r/2 and r even
    for (int size = 1; 2 * size <= r; size++) {
        for (uint32_t mask = 0; mask < (1u << r); mask++) {
            if (__builtin_popcount(mask) != size) continue;
            if (2 * size == r && !(mask & 1)) continue;
            ZP prod = {mpz_class(1)};
            for (int i = 0; i < r; i++)
                if (mask & (1u << i)) prod = zmul(prod, lifted[i], M);
            std::vector<mpq_class> g(prod.size());
            for (size_t i = 0; i < prod.size(); i++) g[i] = mpq_class(balanced(prod[i], M));
            QPoly cand(std::move(g));
            if (cand.degree() <= 0 || cand.degree() >= n) continue;
            QPoly rem;
            QPoly quot = fq.divrem(cand, rem);
            if (rem.is_zero() && quot.is_integral() && cand.is_integral()) return false;
        }
    }
    return true;
}

} // namespace

bool is_irreducible(const QPoly& f) {
    if (!f.is_integral() || !f.is_monic())
        throw std::invalid_argument("is_irreducible: need monic integral poly");
    int n = f.degree();
    if (n <= 0) return false;
    if (n == 1) return true;
    if (!is_squarefree(f)) return false;

    mpz_class disc = poly_disc(f);
    if (disc == 0) return false;

    // degree-set sieve over good primes
    uint32_t possible = (1u << (n + 1)) - 1;  // bit d: a factor of degree d may exist
    uint64_t first_good = 0;
    int used = 0;
    for (uint32_t p : primes_below(10000)) {
        if (mpz_divisible_ui_p(disc.get_mpz_t(), p)) continue;
        ModP R(p);
        auto shape = R.factor_shape(R.reduce(f));
        uint32_t sums = 1;  // bit mask of achievable degree sums
        for (auto& [d, e] : shape)
            sums |= (sums << d);
        possible &= sums;
        if (!first_good) first_good = p;
        if (shape.size() == 1) return true;  // irreducible mod p
        if ((possible & ~(1u | (1u << n))) == 0) return true;
        if (++used >= 10) break;
    }
    if (!first_good) throw std::logic_error("is_irreducible: no good prime below 10^4");
    return zassenhaus_irreducible(f, first_good);
}

} // namespace hrc
