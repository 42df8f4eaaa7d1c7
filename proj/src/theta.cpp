#include "qrr/theta.hpp"

#include <cassert>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

namespace qrr {

int64_t MonomialArg::index_on(int denom) const {
    int64_t scaled = num * denom;
    if (scaled % den != 0)
        throw FractionalExponent("monomial exponent does not lie on the lattice");
    return scaled / den;
}

Series theta_sum_idx(int sa, int64_t ea, int sb, int64_t eb, int64_t N, int denom) {
    if (ea + eb <= 0) throw DivergentPair("theta pair has nonpositive exponent sum");
    // term exponent e(n) = ea*n(n+1)/2 + eb*n(n-1)/2 = A n^2 + B n with
    // A = (ea+eb)/2 > 0; every n with e(n) < N satisfies |n| <= sqrt(N/A)+|B|/A+1
    double A = (ea + eb) / 2.0;
    double Bq = (ea - eb) / 2.0;
    int64_t lim = static_cast<int64_t>(std::sqrt(std::max<double>(N, 1) / A) + std::fabs(Bq) / A) + 2;
    std::map<int64_t, Coef> acc;
    int64_t lo = 0;
    for (int64_t n = -lim; n <= lim; ++n) {
        int64_t ta = n * (n + 1) / 2;
        int64_t tb = n * (n - 1) / 2;
        int64_t e = ea * ta + eb * tb;
        if (e >= N) continue;
        int sgn = 1;
        if (sa < 0 && (ta % 2 != 0)) sgn = -sgn;
        if (sb < 0 && (tb % 2 != 0)) sgn = -sgn;
        acc[e] += sgn;
        lo = std::min(lo, e);
    }
    Series s{denom, lo, N, std::vector<Coef>(static_cast<size_t>(N - lo))};
    for (const auto& [e, v] : acc) s.coeffs[static_cast<size_t>(e - lo)] = v;
    // normalize in case of leading cancellation
    return add(s, zero_series(N, denom));
}

namespace {

// in-place multiply by (1 + c*q^(e/denom)) with c in {+1,-1}
void mul_factor(std::vector<Coef>& v, int c, int64_t e) {
    if (e <= 0) return;
    for (int64_t n = static_cast<int64_t>(v.size()) - 1; n >= e; --n) {
        const Coef& src = v[static_cast<size_t>(n - e)];
        if (src == 0) continue;
        if (c > 0)
            v[static_cast<size_t>(n)] += src;
        else
            v[static_cast<size_t>(n)] -= src;
    }
}

Series from_dense(std::vector<Coef> v, int64_t N, int denom) {
    Series s{denom, 0, N, std::move(v)};
    return add(s, zero_series(N, denom));
}

}  // namespace

Series pochg_idx(int s0, int tau, int64_t e0, int64_t step, int64_t N, int denom) {
    if (step <= 0 || e0 <= 0)
        throw DivergentPair("pochhammer factors must have positive exponents");
    std::vector<Coef> v(static_cast<size_t>(std::max<int64_t>(N, 1)));
    if (!v.empty()) v[0] = 1;
    int s = s0;
    for (int64_t e = e0; e < N; e += step) {
        mul_factor(v, s, e);
        s *= tau;
    }
    return from_dense(std::move(v), N, denom);
}

Series pochhammer_idx(int sign, int64_t r, int64_t s, int64_t N, int denom) {
    return pochg_idx(-sign, 1, r, s, N, denom);
}

Series pochhammer(int sign, int64_t r, int64_t s, int64_t N, int denom) {
    if (r < 1) throw DivergentPair("pochhammer requires r >= 1");
    return pochhammer_idx(sign, r * denom, s * denom, N, denom);
}

Series theta_product_idx(int sa, int64_t ea, int sb, int64_t eb, int64_t N, int denom) {
    if (ea + eb <= 0) throw DivergentPair("theta pair has nonpositive exponent sum");
    // shift f(a,b) = a * f(a^2 b, 1/a) until both exponents are nonnegative
    int64_t shift = 0;
    int shift_sign = 1;
    while (ea < 0 || eb < 0) {
        if (eb < ea) {
            std::swap(ea, eb);
            std::swap(sa, sb);
        }
        shift += ea;
        if (sa < 0) shift_sign = -shift_sign;
        int64_t nea = 2 * ea + eb;
        int64_t neb = -ea;
        int nsa = sb;
        int nsb = sa;
        ea = nea;
        eb = neb;
        sa = nsa;
        sb = nsb;
    }
    int64_t eab = ea + eb;
    int64_t Nw = N - shift;
    int tab = sa * sb;
    // (-a; ab): factors 1 + sa*(sa*sb)^k * q^(ea + k*eab); degenerate a=+-1 allowed
    Series p = (ea > 0) ? pochg_idx(sa, tab, ea, eab, Nw, denom)
                        : scalar_mul(1 + sa, const_series(1, Nw, denom));
    Series q = (eb > 0) ? pochg_idx(sb, tab, eb, eab, Nw, denom)
                        : scalar_mul(1 + sb, const_series(1, Nw, denom));
    Series r = pochg_idx(-tab, tab, eab, eab, Nw, denom);
    Series out = mul(mul(p, q), r);
    if (shift != 0 || shift_sign != 1)
        out = mul(monomial(shift_sign, shift, N - std::min<int64_t>(out.lo, 0), denom), out);
    return out;
}

Series theta_sum(const ThetaPair& p, int64_t N, int denom) {
    return theta_sum_idx(p.a.sign, p.a.index_on(denom), p.b.sign, p.b.index_on(denom), N, denom);
}

Series theta_product(const ThetaPair& p, int64_t N, int denom) {
    return theta_product_idx(p.a.sign, p.a.index_on(denom), p.b.sign, p.b.index_on(denom), N, denom);
}

namespace {

void assert_agree(const Series& a, const Series& b, const char* what) {
    VerifyOutcome out = is_zero(sub(a, b));
    if (out.status != VerifyStatus::ZERO) {
        std::ostringstream os;
        os << what << ": construction routes disagree at exponent " << out.first_nonzero_exponent.num
           << "/" << out.first_nonzero_exponent.den;
        throw std::logic_error(os.str());
    }
}

}  // namespace

Series phi(int64_t k, int64_t N, int denom) {
    Series s = theta_sum_idx(1, k * denom, 1, k * denom, N, denom);
    // (-q;q^2)^2 (q^2;q^2)
    Series t = pochg_idx(1, 1, k * denom, 2 * k * denom, N, denom);
    Series p = mul(mul(t, t), pochhammer_idx(1, 2 * k * denom, 2 * k * denom, N, denom));
    assert_agree(s, p, "phi");
    return s;
}

Series psi(int64_t k, int64_t N, int denom) {
    Series s = theta_sum_idx(1, k * denom, 1, 3 * k * denom, N, denom);
    // (q^2;q^2)^2 / (q;q)
    Series e2 = pochhammer_idx(1, 2 * k * denom, 2 * k * denom, N, denom);
    Series p = div(mul(e2, e2), pochhammer_idx(1, k * denom, k * denom, N, denom));
    assert_agree(s, p, "psi");
    return s;
}

Series chi(int64_t k, int64_t N, int denom) {
    // (-q;q^2) both directly and as (q^2;q^4)/(q;q^2)
    Series a = pochg_idx(1, 1, k * denom, 2 * k * denom, N, denom);
    Series b = div(pochhammer_idx(1, 2 * k * denom, 4 * k * denom, N, denom),
                   pochhammer_idx(1, k * denom, 2 * k * denom, N, denom));
    assert_agree(a, b, "chi");
    return a;
}

Series fm(int64_t k, int64_t N, int denom) {
    Series p = pochhammer_idx(1, k * denom, k * denom, N, denom);
    Series s = theta_sum_idx(-1, k * denom, -1, 2 * k * denom, N, denom);
    assert_agree(p, s, "fm");
    return p;
}

VerifyOutcome quintuple(const MonomialArg& B, int64_t base_num, int64_t base_den, int64_t N) {
    if (base_num <= 0) throw DivergentPair("quintuple base exponent must be positive");
    int64_t denw = std::lcm<int64_t>(5, std::lcm(B.den, base_den));
    int denom = static_cast<int>(denw);
    int64_t p = base_num * denw / base_den;  // base exponent index
    int64_t b = B.num * denw / B.den;        // |B| exponent index
    int sB = B.sign;
    int64_t Nw = N * denw / 5;

    Series lhs1 = theta_sum_idx(sB, 3 * b + p, sB, 5 * p - 3 * b, Nw, denom);
    Series lhs2 = theta_sum_idx(sB, p - 3 * b, sB, 3 * b + 5 * p, Nw, denom);
    Series lhs = sub(lhs1, mul(monomial(1, 2 * b, Nw - std::min<int64_t>(lhs2.lo, 0) + 1, denom), lhs2));

    Series fp2 = theta_sum_idx(-1, 2 * p, -1, 4 * p, Nw, denom);
    Series fb = theta_sum_idx(-1, 2 * b, -1, 2 * p - 2 * b, Nw, denom);
    Series fd = theta_sum_idx(sB, b + p, sB, p - b, Nw, denom);
    Series rhs = div(mul(fp2, fb), fd);

    return is_zero(sub(lhs, rhs));
}

}  // namespace qrr
