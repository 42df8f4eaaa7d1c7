#include "qrr/series.hpp"

#include <numeric>
#include <sstream>

namespace qrr {

namespace {
const Coef kZero = 0;

Series trim(Series s) {
    size_t i = 0;
    while (i < s.coeffs.size() && s.coeffs[i] == 0) ++i;
    if (i > 0) {
        s.lo += static_cast<int64_t>(i);
        s.coeffs.erase(s.coeffs.begin(), s.coeffs.begin() + static_cast<int64_t>(i));
    }
    if (s.coeffs.empty()) s.lo = s.order_bound;
    return s;
}
}  // namespace

const Coef& Series::at_index(int64_t k) const {
    if (k < lo || k - lo >= rel_len()) return kZero;
    return coeffs[static_cast<size_t>(k - lo)];
}

Rational make_exponent(int64_t index, int denom) {
    int64_t g = std::gcd(index < 0 ? -index : index, static_cast<int64_t>(denom));
    if (g == 0) g = denom;
    return Rational{index / g, denom / g};
}

Series zero_series(int64_t N, int denom) { return Series{denom, N, N, {}}; }

Series const_series(const Coef& v, int64_t N, int denom) {
    return monomial(v, 0, N, denom);
}

Series monomial(const Coef& v, int64_t index, int64_t N, int denom) {
    if (v == 0 || index >= N) return zero_series(N, denom);
    Series s{denom, index, N, std::vector<Coef>(static_cast<size_t>(N - index))};
    s.coeffs[0] = v;
    return s;
}

Series add(const Series& a, const Series& b) {
    if (a.denom != b.denom) throw DenomMismatch{};
    int64_t N = std::min(a.order_bound, b.order_bound);
    int64_t lo = std::min(a.lo, b.lo);
    if (lo >= N) return zero_series(N, a.denom);
    Series s{a.denom, lo, N, std::vector<Coef>(static_cast<size_t>(N - lo))};
    for (int64_t i = 0; i < a.rel_len() && a.lo + i < N; ++i)
        s.coeffs[static_cast<size_t>(a.lo + i - lo)] += a.coeffs[static_cast<size_t>(i)];
    for (int64_t i = 0; i < b.rel_len() && b.lo + i < N; ++i)
        s.coeffs[static_cast<size_t>(b.lo + i - lo)] += b.coeffs[static_cast<size_t>(i)];
    return trim(std::move(s));
}

Series sub(const Series& a, const Series& b) { return add(a, neg(b)); }

Series neg(const Series& a) {
    Series s = a;
    for (auto& c : s.coeffs) c = -c;
    return s;
}

Series mul(const Series& a, const Series& b) {
    if (a.denom != b.denom) throw DenomMismatch{};
    int64_t N = std::min(a.order_bound + b.lo, b.order_bound + a.lo);
    int64_t lo = a.lo + b.lo;
    if (a.coeffs.empty() || b.coeffs.empty() || lo >= N)
        return zero_series(N, a.denom);
    int64_t n = N - lo;
    Series s{a.denom, lo, N, std::vector<Coef>(static_cast<size_t>(n))};
    for (int64_t i = 0; i < a.rel_len() && i < n; ++i) {
        const Coef& av = a.coeffs[static_cast<size_t>(i)];
        if (av == 0) continue;
        int64_t bm = std::min<int64_t>(b.rel_len(), n - i);
        for (int64_t j = 0; j < bm; ++j) {
            const Coef& bv = b.coeffs[static_cast<size_t>(j)];
            if (bv != 0) s.coeffs[static_cast<size_t>(i + j)] += av * bv;
        }
    }
    return trim(std::move(s));
}

Series scalar_mul(const Coef& k, const Series& a) {
    if (k == 0) return zero_series(a.order_bound, a.denom);
    Series s = a;
    for (auto& c : s.coeffs) c *= k;
    return s;
}

Series invert(const Series& a0) {
    Series a = trim(a0);
    if (a.coeffs.empty()) throw ZeroSeries{};
    const Coef& lead = a.coeffs[0];
    if (lead != 1 && lead != -1) {
        std::ostringstream os;
        os << "non-unit leading coefficient " << lead << " at exponent index " << a.lo;
        throw NonUnitLeading(os.str());
    }
    int64_t n = a.order_bound - a.lo;
    std::vector<Coef> b(static_cast<size_t>(n));
    b[0] = lead;
    for (int64_t k = 1; k < n; ++k) {
        Coef s = 0;
        int64_t jm = std::min<int64_t>(k, a.rel_len() - 1);
        for (int64_t j = 1; j <= jm; ++j) {
            const Coef& u = a.coeffs[static_cast<size_t>(j)];
            if (u != 0) s += u * b[static_cast<size_t>(k - j)];
        }
        b[static_cast<size_t>(k)] = -lead * s;
    }
    return trim(Series{a.denom, -a.lo, a.order_bound - 2 * a.lo, std::move(b)});
}

Series div(const Series& a, const Series& b) { return mul(a, invert(b)); }

Series pow(const Series& a, int64_t n) {
    if (n < 0) return pow(invert(a), -n);
    if (n == 0) return const_series(1, a.order_bound - a.lo, a.denom);
    Series base = a;
    Series r;
    bool have = false;
    uint64_t e = static_cast<uint64_t>(n);
    while (e) {
        if (e & 1) {
            r = have ? mul(r, base) : base;
            have = true;
        }
        e >>= 1;
        if (e) base = mul(base, base);
    }
    return r;
}

Series substitute_power(const Series& a, int64_t k) {
    Series s{a.denom, a.lo * k, a.order_bound * k, {}};
    if (s.lo < s.order_bound) {
        s.coeffs.assign(static_cast<size_t>(s.order_bound - s.lo), 0);
        for (int64_t i = 0; i < a.rel_len(); ++i)
            s.coeffs[static_cast<size_t>(i * k)] = a.coeffs[static_cast<size_t>(i)];
    }
    return s;
}

Series negate_q(const Series& a) {
    Series s = a;
    for (int64_t i = 0; i < a.rel_len(); ++i) {
        int64_t idx = a.lo + i;
        if (idx % a.denom != 0) {
            if (a.coeffs[static_cast<size_t>(i)] != 0)
                throw FractionalExponent("negate_q requires a series integral in q");
            continue;
        }
        int64_t e = idx / a.denom;
        if (((e % 2) + 2) % 2 == 1) s.coeffs[static_cast<size_t>(i)] = -s.coeffs[static_cast<size_t>(i)];
    }
    return s;
}

Series dissect(const Series& a, int64_t m, int64_t r) {
    Series s = a;
    for (int64_t i = 0; i < a.rel_len(); ++i) {
        int64_t idx = a.lo + i;
        if (a.coeffs[static_cast<size_t>(i)] == 0) continue;
        if (idx % a.denom != 0)
            throw FractionalExponent("dissect requires a series integral in q");
        int64_t e = idx / a.denom;
        if (((e % m) + m) % m != r) s.coeffs[static_cast<size_t>(i)] = 0;
    }
    return trim(std::move(s));
}

Series crop(const Series& a, int64_t N) {
    if (a.order_bound <= N) return a;
    Series s{a.denom, a.lo, N, {}};
    if (a.lo >= N) return zero_series(N, a.denom);
    int64_t n = std::min<int64_t>(a.rel_len(), N - a.lo);
    s.coeffs.assign(a.coeffs.begin(), a.coeffs.begin() + n);
    return trim(std::move(s));
}

Series rescale(const Series& a, int64_t f) {
    Series s{static_cast<int>(a.denom * f), a.lo * f, a.order_bound * f, {}};
    if (s.lo < s.order_bound) {
        s.coeffs.assign(static_cast<size_t>(s.order_bound - s.lo), 0);
        for (int64_t i = 0; i < a.rel_len(); ++i)
            s.coeffs[static_cast<size_t>(i * f)] = a.coeffs[static_cast<size_t>(i)];
    }
    return s;
}

VerifyOutcome is_zero(const Series& a) {
    VerifyOutcome out;
    out.checked_bound = a.order_bound;
    out.denom = a.denom;
    for (int64_t i = 0; i < a.rel_len(); ++i) {
        if (a.lo + i >= a.order_bound) break;
        if (a.coeffs[static_cast<size_t>(i)] != 0) {
            out.status = VerifyStatus::NONZERO;
            out.first_nonzero_exponent = make_exponent(a.lo + i, a.denom);
            out.first_nonzero_coefficient = a.coeffs[static_cast<size_t>(i)];
            return out;
        }
    }
    out.status = VerifyStatus::ZERO;
    return out;
}

Rational q_order(const Series& a) {
    VerifyOutcome out = is_zero(a);
    if (out.status == VerifyStatus::ZERO) throw ZeroSeries{};
    return out.first_nonzero_exponent;
}

std::string coef_to_string(const Coef& c) { return c.str(); }

}  // namespace qrr
