#ifndef HRC_ORDER_HPP
#define HRC_ORDER_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "hrc/zpoly.hpp"

namespace hrc {

/* Splitting type of a rational prime: one (e, f) pair per prime ideal
 * above p, sorted.  sum e*f = field degree.
 */
struct SplittingType {
    std::vector<std::pair<int, int>> ef;
    bool operator==(const SplittingType& o) const { return ef == o.ef; }
};

/* A number field Q[x]/(f) with its maximal order.
 *
 * The maximal order is stored as a triangular integer matrix `mat` over a
 * common denominator `den`: basis element i is (1/den) * sum_j mat[i][j] x^j,
 * in canonical row HNF (pivot on column i, pivot positive, entries above
 * reduced).  Row 0 is always the element 1.
 *
 * Construction runs the Dedekind test at every prime whose square divides
 * disc(f) and enlarges via the radical-multiplier (Round 2) step until
 * p-maximal.  Values are immutable after construction; the class is a
 * cheap-to-copy handle and safe to share across threads.  The per-prime
 * splitting cache is internally synchronized.
 */
class NumberField {
public:
    NumberField() = default;
    static NumberField create(const QPoly& f, bool assume_irreducible = false);

    bool valid() const { return impl_ != nullptr; }
    int degree() const;
    int r1() const;
    int r2() const;
    const mpz_class& disc() const;   // signed field discriminant
    mpz_class abs_disc() const;
    const mpz_class& index() const;  // [O_K : Z[theta]]
    const QPoly& poly() const;
    const std::vector<std::vector<mpz_class>>& order_mat() const;
    const mpz_class& order_den() const;

    bool is_totally_real() const { return r2() == 0; }
    bool is_totally_imaginary() const { return r1() == 0; }

    // element given by integer coordinates in the order basis -> power basis
    QPoly element_poly(const std::vector<mpz_class>& order_coords) const;
    mpq_class element_norm(const QPoly& elem) const;   // elem in power basis
    mpq_class element_trace(const QPoly& elem) const;

    // exact Gram matrix of the trace form on the order basis
    std::vector<std::vector<mpq_class>> trace_gram() const;

    SplittingType splitting(uint64_t p) const;
    std::vector<mpz_class> residue_norms(uint64_t p) const;  // {p^f_i}

    std::string label() const;  // "deg.disc" style display tag

private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
};

// totally-real / totally-negative checks via exact real-root isolation
bool is_totally_real_poly(const QPoly& f);
// delta given in power-basis coordinates over F's defining polynomial
bool is_totally_negative(const NumberField& F, const QPoly& delta);
bool is_totally_positive(const NumberField& F, const QPoly& delta);

/* Field isomorphism test used for deduplication: equal degree, equal signed
 * discriminant, and identical splitting degree multisets at the first 50
 * primes dividing neither polynomial discriminant.
 */
bool is_isomorphic(const NumberField& a, const NumberField& b);

/* K = F(sqrt(delta)) as an absolute field of degree 2*[F:Q].  delta is a
 * nonzero totally negative algebraic integer given in power-basis
 * coordinates.  Throws if delta is a square in F (degenerate extension).
 */
NumberField absolute_quadratic_extension(const NumberField& F, const QPoly& delta);

} // namespace hrc

#endif
