#ifndef HRC_STURM_HPP
#define HRC_STURM_HPP

#include <vector>

#include "hrc/zpoly.hpp"

namespace hrc {

/* Exact real-root machinery via Sturm chains.  Roots are isolated into
 * disjoint rational intervals (lo, hi]; an interval can be refined by
 * bisection on demand, e.g. until the sign of another polynomial at the
 * root is certain.
 */
class SturmChain {
public:
    explicit SturmChain(const QPoly& f);  // f squarefree is not required

    int count_real_roots() const;
    int count_in(const mpq_class& a, const mpq_class& b) const;  // roots in (a, b]

    // disjoint isolating intervals for all real roots, sorted
    std::vector<std::pair<mpq_class, mpq_class>> isolate_roots() const;

    void refine(std::pair<mpq_class, mpq_class>& iv) const;  // halve the interval

    const QPoly& squarefree_part() const { return sf_; }

private:
    int variations_at(const mpq_class& x) const;
    int variations_at_inf(int sign) const;  // sign = +1 or -1
    QPoly sf_;
    std::vector<QPoly> chain_;
};

// sign of g evaluated at the root of f isolated by iv; refines iv as needed.
// Requires gcd(f, g) = 1 or g nonzero at that root.
int sign_at_root(const SturmChain& f, std::pair<mpq_class, mpq_class>& iv, const QPoly& g);

// Cauchy-style bound B with all real roots of f in [-B, B]
mpq_class root_bound(const QPoly& f);

} // namespace hrc

#endif
