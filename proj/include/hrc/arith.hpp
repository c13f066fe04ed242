#ifndef HRC_ARITH_HPP
#define HRC_ARITH_HPP

#include <cstdint>
#include <gmpxx.h>
#include <map>
#include <vector>

namespace hrc {

// all primes below n, and possibly more (cached; callers stop at their bound)
const std::vector<uint32_t>& primes_below(uint32_t n);

bool is_probable_prime(const mpz_class& n);  // BPSW-strength Miller-Rabin set

// full factorization (trial division + Pollard-Brent rho), deterministic
std::map<mpz_class, int> factor_integer(mpz_class n);

// largest square s^2 with s^2 | n, returned as s (n > 0)
mpz_class square_part_root(const mpz_class& n);

mpz_class squarefree_kernel(const mpz_class& n);  // n > 0

// Kronecker symbol (a|n)
int kronecker(const mpz_class& a, const mpz_class& n);

bool is_fundamental_discriminant(const mpz_class& d);

} // namespace hrc

#endif
