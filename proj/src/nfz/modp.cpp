#include "hrc/modp.hpp"

#include <stdexcept>

namespace hrc {

uint64_t ModP::pow(uint64_t a, uint64_t e) const {
    uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

PolyP ModP::reduce(const QPoly& f) const {
    PolyP r(f.degree() + 1);
    for (int i = 0; i <= f.degree(); i++) {
        const mpq_class& c = f[i];
        mpz_class num = c.get_num() % (long)p, den = c.get_den() % (long)p;
        if (num < 0) num += (long)p;
        uint64_t d = den.get_ui();
        if (d == 0) throw std::invalid_argument("ModP::reduce: denominator divisible by p");
        uint64_t n = num.get_ui();
        r[i] = d == 1 ? n : mul(n, inv(d));
    }
    trim(r);
    return r;
}

PolyP ModP::mulp(const PolyP& a, const PolyP& b) const {
    if (a.empty() || b.empty()) return {};
    PolyP r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); i++) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); j++)
            r[i + j] = (r[i + j] + (__uint128_t)a[i] * b[j]) % p;
    }
    trim(r);
    return r;
}

PolyP ModP::mod(PolyP a, const PolyP& m) const {
    int dm = deg(m);
    if (dm < 0) throw std::invalid_argument("ModP::mod: zero modulus");
    uint64_t linv = inv(m.back());
    for (int i = deg(a); i >= dm; i--) {
        if (!a[i]) continue;
        uint64_t f = mul(a[i], linv);
        for (int j = 0; j <= dm; j++) a[i - dm + j] = sub(a[i - dm + j], mul(f, m[j]));
    }
    trim(a);
    return a;
}

PolyP ModP::mulmod(const PolyP& a, const PolyP& b, const PolyP& m) const {
    return mod(mulp(a, b), m);
}

PolyP ModP::powmod(PolyP base, mpz_class e, const PolyP& m) const {
    PolyP r = {1};
    base = mod(std::move(base), m);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        e >>= 1;
    }
    return r;
}

PolyP ModP::gcd(PolyP a, PolyP b) const {
    while (!b.empty()) {
        PolyP r = mod(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(std::move(a));
}

PolyP ModP::monic(PolyP f) const {
    if (f.empty() || f.back() == 1) return f;
    uint64_t li = inv(f.back());
    for (auto& c : f) c = mul(c, li);
    return f;
}

PolyP ModP::deriv(const PolyP& f) const {
    if (f.size() <= 1) return {};
    PolyP r(f.size() - 1);
    for (size_t i = 1; i < f.size(); i++) r[i - 1] = mul(f[i] % p, i % p);
    trim(r);
    return r;
}

PolyP ModP::sub_poly(const PolyP& a, const PolyP& b) const {
    PolyP r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); i++)
        r[i] = sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    trim(r);
    return r;
}

// exact division a / b (throws if not exact)
static PolyP divexact(const ModP& R, PolyP a, const PolyP& b) {
    int db = R.deg(b);
    if (db < 0) throw std::invalid_argument("divexact: zero divisor");
    if (R.deg(a) < db) {
        if (a.empty()) return {};
        throw std::logic_error("divexact: not divisible");
    }
    PolyP q(R.deg(a) - db + 1, 0);
    uint64_t linv = R.inv(b.back());
    for (int i = R.deg(a); i >= db; i--) {
        if (!a[i]) continue;
        uint64_t f = R.mul(a[i], linv);
        q[i - db] = f;
        for (int j = 0; j <= db; j++) a[i - db + j] = R.sub(a[i - db + j], R.mul(f, b[j]));
    }
    ModP::trim(a);
    if (!a.empty()) throw std::logic_error("divexact: not divisible");
    ModP::trim(q);
    return q;
}

namespace {

struct Rng {
    uint64_t s;
    explicit Rng(uint64_t seed) : s(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
    uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
};

} // namespace

// squarefree decomposition of monic f: list of (squarefree part, multiplicity)
static std::vector<std::pair<PolyP, int>> squarefree_decomp(const ModP& R, PolyP f) {
    std::vector<std::pair<PolyP, int>> out;
    if (R.deg(f) <= 0) return out;
    f = R.monic(std::move(f));
    PolyP d = R.deriv(f);
    if (d.empty()) {
        // f = g(x^p) = g(x)^p over the prime field
        PolyP g(R.deg(f) / R.p + 1);
        for (size_t i = 0; i < g.size(); i++) g[i] = f[i * R.p];
        for (auto& [h, k] : squarefree_decomp(R, std::move(g)))
            out.emplace_back(std::move(h), k * (int)R.p);
        return out;
    }
    PolyP c = R.gcd(f, d);
    PolyP w = divexact(R, std::move(f), c);
    int k = 1;
    while (R.deg(w) > 0) {
        PolyP y = R.gcd(w, c);
        PolyP z = divexact(R, std::move(w), y);
        if (R.deg(z) > 0) out.emplace_back(R.monic(std::move(z)), k);
        c = divexact(R, std::move(c), y);
        w = std::move(y);
        k++;
    }
    if (R.deg(c) > 0)
        for (auto& [h, kk] : squarefree_decomp(R, std::move(c)))
            out.emplace_back(std::move(h), kk * (int)R.p);
    return out;
}

// distinct-degree split of squarefree monic f: list of (product, degree)
static std::vector<std::pair<PolyP, int>> ddf(const ModP& R, PolyP f) {
    std::vector<std::pair<PolyP, int>> out;
    PolyP x = {0, 1};
    PolyP h = R.mod(x, f);
    int d = 0;
    while (R.deg(f) > 0) {
        d++;
        if (2 * d > R.deg(f)) {
            int df = R.deg(f);
            out.emplace_back(std::move(f), df);
            break;
        }
        h = R.powmod(std::move(h), mpz_class((unsigned long)R.p), f);
        PolyP g = R.gcd(R.sub_poly(h, x), f);
        if (R.deg(g) > 0) {
            f = divexact(R, std::move(f), g);
            h = R.mod(std::move(h), f);
            out.emplace_back(std::move(g), d);
        }
    }
    return out;
}

// equal-degree splitting (Cantor-Zassenhaus; trace method for p = 2)
static void edf(const ModP& R, const PolyP& f, int d, Rng& rng, std::vector<PolyP>& out) {
    int n = R.deg(f);
    if (n == d) {
        out.push_back(R.monic(f));
        return;
    }
    PolyP split;
    while (split.empty()) {
        PolyP r(n);
        for (int i = 0; i < n; i++) r[i] = rng.next() % R.p;
        ModP::trim(r);
        if (r.empty()) continue;
        PolyP g;
        if (R.p == 2) {
            PolyP t = {}, cur = R.mod(r, f);
            for (int i = 0; i < d; i++) {
                t = R.sub_poly(t, cur);
                cur = R.mulmod(cur, cur, f);
            }
            g = R.gcd(t, f);
        } else {
            mpz_class e;
            mpz_ui_pow_ui(e.get_mpz_t(), R.p, d);
            e = (e - 1) / 2;
            PolyP t = R.powmod(r, e, f);
            if (t.empty()) t = {R.p - 1};
            else t[0] = R.sub(t[0], 1);
            ModP::trim(t);
            g = t.empty() ? PolyP{} : R.gcd(t, f);
        }
        if (R.deg(g) > 0 && R.deg(g) < n) split = std::move(g);
    }
    edf(R, split, d, rng, out);
    edf(R, divexact(R, f, split), d, rng, out);
}

std::vector<std::pair<PolyP, int>> ModP::factor(PolyP f, uint64_t seed) const {
    std::vector<std::pair<PolyP, int>> out;
    if (deg(f) <= 0) return out;
    Rng rng(seed * 0x100000001b3ULL + p);
    for (auto& [g, mult] : squarefree_decomp(*this, std::move(f))) {
        for (auto& [prod, d] : ddf(*this, std::move(g))) {
            std::vector<PolyP> irr;
            edf(*this, prod, d, rng, irr);
            for (auto& h : irr) out.emplace_back(std::move(h), mult);
        }
    }
    return out;
}

std::vector<std::pair<int, int>> ModP::factor_shape(PolyP f) const {
    std::vector<std::pair<int, int>> out;
    if (deg(f) <= 0) return out;
    for (auto& [g, mult] : squarefree_decomp(*this, std::move(f))) {
        for (auto& [prod, d] : ddf(*this, std::move(g))) {
            int count = deg(prod) / d;
            for (int i = 0; i < count; i++) out.emplace_back(d, mult);
        }
    }
    return out;
}

bool ModP::is_irreducible(const PolyP& f) const {
    int n = deg(f);
    if (n <= 0) return false;
    if (n == 1) return true;
    auto shape = factor_shape(f);
    return shape.size() == 1 && shape[0].first == n && shape[0].second == 1;
}

} // namespace hrc
