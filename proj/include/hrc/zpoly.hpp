#ifndef HRC_ZPOLY_HPP
#define HRC_ZPOLY_HPP

#include <gmpxx.h>
#include <string>
#include <vector>

namespace hrc {

/* Polynomials with exact rational coefficients, stored in ascending degree
 * order with no trailing zeros.  Integer polynomials are QPoly whose
 * coefficients all have denominator 1; is_integral() checks that.
 *
 * Everything here is plain dense arithmetic; degrees stay <= 12 throughout
 * the project so no asymptotic cleverness is warranted.
 */
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<mpq_class> c) : c_(std::move(c)) { trim(); }
    static QPoly constant(const mpq_class& a);
    static QPoly x();                       // the monomial x
    static QPoly from_int_coeffs(const std::vector<mpz_class>& c);

    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for 0
    bool is_zero() const { return c_.empty(); }
    const mpq_class& operator[](size_t i) const;
    const std::vector<mpq_class>& coeffs() const { return c_; }
    const mpq_class& lc() const { return c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    bool is_integral() const;

    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    QPoly operator-() const;
    QPoly operator*(const mpq_class& s) const;
    bool operator==(const QPoly& o) const { return c_ == o.c_; }

    QPoly derivative() const;
    mpq_class eval(const mpq_class& x) const;
    // divide by monic-or-not divisor over Q; returns quotient, sets rem
    QPoly divrem(const QPoly& divisor, QPoly& rem) const;
    QPoly mod(const QPoly& divisor) const;
    // substitute x -> x + a  and  x -> -x
    QPoly shift(const mpq_class& a) const;
    QPoly negate_var() const;
    QPoly monic() const;

    // common denominator of all coefficients
    mpz_class denominator_lcm() const;
    std::vector<mpz_class> int_coeffs() const;  // requires is_integral()

    std::string str(const std::string& var = "x") const;

private:
    void trim();
    std::vector<mpq_class> c_;
};

QPoly gcd_q(QPoly a, QPoly b);              // monic gcd over Q
bool is_squarefree(const QPoly& f);
mpq_class resultant(const QPoly& f, const QPoly& g);
mpz_class poly_disc(const QPoly& f);        // f monic integral, deg >= 1

// Irreducibility over Q for monic integral f (deg <= 12): degree-set sieve
// with a Zassenhaus lift/recombine fallback, so the answer is always exact.
bool is_irreducible(const QPoly& f);

// parse e.g. "x^3 - x - 1", "x", "2*x^2+5"; throws std::invalid_argument
QPoly parse_poly(const std::string& s);

} // namespace hrc

#endif
