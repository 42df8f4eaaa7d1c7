#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qrr {

using Coef = boost::multiprecision::cpp_int;

struct DenomMismatch : std::runtime_error {
    DenomMismatch() : std::runtime_error("lattice denominators disagree") {}
};
struct NonUnitLeading : std::runtime_error {
    explicit NonUnitLeading(const std::string& what) : std::runtime_error(what) {}
};
struct ZeroSeries : std::runtime_error {
    ZeroSeries() : std::runtime_error("cannot invert a series that is zero to its bound") {}
};
struct FractionalExponent : std::runtime_error {
    explicit FractionalExponent(const std::string& what) : std::runtime_error(what) {}
};
struct DivergentPair : std::runtime_error {
    explicit DivergentPair(const std::string& what) : std::runtime_error(what) {}
};

// Exact truncated Laurent series on the q^(1/denom) lattice.
// coeffs[i] is the coefficient of q^((lo+i)/denom); the series is known
// exactly for all exponent indices k < order_bound and unknown beyond.
// A series that is zero up to its bound has lo == order_bound and no coeffs.
struct Series {
    int denom = 5;
    int64_t lo = 0;
    int64_t order_bound = 0;
    std::vector<Coef> coeffs;

    int64_t rel_len() const { return static_cast<int64_t>(coeffs.size()); }
    const Coef& at_index(int64_t k) const;  // coefficient at exponent index k
};

struct Rational {
    int64_t num = 0;
    int64_t den = 1;  // positive, reduced
};
Rational make_exponent(int64_t index, int denom);

enum class VerifyStatus { ZERO, NONZERO };

struct VerifyOutcome {
    VerifyStatus status = VerifyStatus::ZERO;
    Rational first_nonzero_exponent;  // meaningful iff NONZERO
    Coef first_nonzero_coefficient;   // meaningful iff NONZERO
    int64_t checked_bound = 0;        // units of 1/denom of the inspected series
    int denom = 5;
};

Series zero_series(int64_t N, int denom);
Series const_series(const Coef& v, int64_t N, int denom);
Series monomial(const Coef& v, int64_t index, int64_t N, int denom);

Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
Series neg(const Series& a);
Series mul(const Series& a, const Series& b);
Series scalar_mul(const Coef& k, const Series& a);
Series invert(const Series& a);
Series div(const Series& a, const Series& b);
Series pow(const Series& a, int64_t n);

// q -> q^k; exponent indices scale by k and so does the bound
Series substitute_power(const Series& a, int64_t k);
// q -> -q; requires the series to be integral in q
Series negate_q(const Series& a);
// terms with integer exponent congruent to r mod m, exponents preserved
Series dissect(const Series& a, int64_t m, int64_t r);
// crop the bound down to N (never raises it)
Series crop(const Series& a, int64_t N);
// embed into a finer lattice whose denominator is denom*f
Series rescale(const Series& a, int64_t f);

VerifyOutcome is_zero(const Series& a);
// least exponent with a nonzero coefficient; throws ZeroSeries if none below bound
Rational q_order(const Series& a);

std::string coef_to_string(const Coef& c);

}  // namespace qrr
