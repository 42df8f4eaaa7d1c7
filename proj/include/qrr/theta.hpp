#pragma once

#include "qrr/series.hpp"

namespace qrr {

// Signed monomial +-q^(num/den), the only admissible theta argument.
struct MonomialArg {
    int sign = 1;       // +1 or -1
    int64_t num = 1;    // exponent numerator
    int64_t den = 1;    // exponent denominator (must divide the working lattice)

    // exponent as an index on the q^(1/denom) lattice
    int64_t index_on(int denom) const;
};

struct ThetaPair {
    MonomialArg a, b;
};

// f(a,b) = sum_n a^(n(n+1)/2) b^(n(n-1)/2), bilateral; requires the exponent
// sum of the pair to be positive.  Bound N and result are in 1/denom units.
Series theta_sum(const ThetaPair& p, int64_t N, int denom);
// The same function via the triple product (-a;ab)(-b;ab)(ab;ab).
Series theta_product(const ThetaPair& p, int64_t N, int denom);

// index-level versions (ea, eb are lattice indices; may be negative)
Series theta_sum_idx(int sa, int64_t ea, int sb, int64_t eb, int64_t N, int denom);
Series theta_product_idx(int sa, int64_t ea, int sb, int64_t eb, int64_t N, int denom);

// prod_{k>=0} (1 - sign*q^(r+k*s)), exponents as integers in q^k; r >= 1
Series pochhammer(int sign, int64_t r, int64_t s, int64_t N, int denom);
// index-level: prod_{k>=0} (1 - sign*q^((r+k*s)/denom))
Series pochhammer_idx(int sign, int64_t r, int64_t s, int64_t N, int denom);
// generalized: prod_{k>=0} (1 + s0*tau^k*q^((e0+k*step)/denom))
Series pochg_idx(int s0, int tau, int64_t e0, int64_t step, int64_t N, int denom);

// named special cases at argument q^k; each is built two independent ways
// and the two routes are asserted to agree
Series phi(int64_t k, int64_t N, int denom);
Series psi(int64_t k, int64_t N, int denom);
Series chi(int64_t k, int64_t N, int denom);
Series fm(int64_t k, int64_t N, int denom);  // f(-q^k)

// Verifies the five-product factorization
//   f(B^3 P, P^5/B^3) - B^2 f(P/B^3, B^3 P^5)
//     = f(-P^2) f(-B^2, -P^2/B^2) / f(B P, P/B)
// with P = q^base, to order N fifth-units.  Half-integer exponents are
// handled by working on a temporarily refined lattice.
VerifyOutcome quintuple(const MonomialArg& B, int64_t base_num, int64_t base_den, int64_t N);

}  // namespace qrr
