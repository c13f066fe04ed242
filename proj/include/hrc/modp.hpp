#ifndef HRC_MODP_HPP
#define HRC_MODP_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "hrc/zpoly.hpp"

namespace hrc {

/* Dense polynomials over F_p for word-sized p.  Coefficients ascending,
 * trimmed.  Used for splitting types, the Dedekind criterion and the
 * Zassenhaus fallback, so it provides squarefree decomposition, DDF and
 * (deterministically seeded) equal-degree splitting.
 */
using PolyP = std::vector<uint64_t>;

struct ModP {
    uint64_t p;
    explicit ModP(uint64_t prime) : p(prime) {}

    uint64_t add(uint64_t a, uint64_t b) const { uint64_t s = a + b; return s >= p ? s - p : s; }
    uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + p - b; }
    uint64_t mul(uint64_t a, uint64_t b) const {
        return (uint64_t)((__uint128_t)a * b % p);
    }
    uint64_t pow(uint64_t a, uint64_t e) const;
    uint64_t inv(uint64_t a) const { return pow(a % p, p - 2); }

    static void trim(PolyP& f) { while (!f.empty() && f.back() == 0) f.pop_back(); }
    int deg(const PolyP& f) const { return static_cast<int>(f.size()) - 1; }

    PolyP reduce(const QPoly& f) const;   // denominators must be prime to p
    PolyP mulp(const PolyP& a, const PolyP& b) const;
    PolyP mod(PolyP a, const PolyP& m) const;
    PolyP mulmod(const PolyP& a, const PolyP& b, const PolyP& m) const;
    PolyP powmod(PolyP base, mpz_class e, const PolyP& m) const;
    PolyP gcd(PolyP a, PolyP b) const;    // monic result
    PolyP monic(PolyP f) const;
    PolyP deriv(const PolyP& f) const;
    PolyP sub_poly(const PolyP& a, const PolyP& b) const;

    // complete factorization of nonzero f: list of (monic irreducible, e)
    std::vector<std::pair<PolyP, int>> factor(PolyP f, uint64_t seed = 1) const;

    // multiset {(degree, multiplicity)} of the irreducible factors of monic f;
    // cheaper than factor() since no equal-degree splitting happens
    std::vector<std::pair<int, int>> factor_shape(PolyP f) const;

    bool is_irreducible(const PolyP& f) const;
};

} // namespace hrc

#endif
