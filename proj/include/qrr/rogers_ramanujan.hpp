#pragma once

#include "qrr/series.hpp"

namespace qrr {

// q^(prefix_num/5) times a series integral in q.  Used for R(q^k) and the
// continued-fraction convergents, which live off the integer lattice.
struct PrefixedSeries {
    int64_t prefix_num = 0;  // units of 1/5
    Series body;             // denom 1
};

// embed onto the q^(1/5) lattice (denom 5)
Series to_lattice(const PrefixedSeries& p);

// G(q^k), H(q^k) to order N (units of 1/denom), from the product form;
// the q-series sum form is computed independently and asserted equal.
Series G(int64_t k, int64_t N, int denom);
Series H(int64_t k, int64_t N, int denom);
// sum forms alone (for cross-validation tests)
Series G_sum(int64_t k, int64_t N, int denom);
Series H_sum(int64_t k, int64_t N, int denom);

Series T(int64_t k, int64_t N, int denom);       // H/G, integral in q
PrefixedSeries R(int64_t k, int64_t N_fifths);   // q^(k/5) * T(q^k)

enum class Twisted { Gm, Hm, Tm };  // G(-q), H(-q), T(-q)
// computed both as the stated quotient of untwisted values and by negate_q
// of the direct series; the two are asserted equal
Series twisted(Twisted which, int64_t N, int denom);

// depth-d truncation of q^(1/5)/(1+q/(1+q^2/(1+...+q^d))), exact to order
// N fifth-units
PrefixedSeries cf_convergent(int64_t depth, int64_t N_fifths);

}  // namespace qrr
