#include "qrr/rogers_ramanujan.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

#include "qrr/theta.hpp"

namespace qrr {

namespace {

std::mutex g_cache_mutex;
std::map<std::tuple<char, int64_t, int64_t, int>, Series> g_cache;

Series cached(char which, int64_t k, int64_t N, int denom, Series (*make)(int64_t, int64_t, int)) {
    std::tuple<char, int64_t, int64_t, int> key{which, k, N, denom};
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        auto it = g_cache.find(key);
        if (it != g_cache.end()) return it->second;
    }
    Series s = make(k, N, denom);
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    return g_cache.emplace(key, std::move(s)).first->second;
}

// in-place divide a dense coefficient vector by (1 - q^(e/denom))
void div_factor(std::vector<Coef>& v, int64_t e) {
    for (int64_t n = e; n < static_cast<int64_t>(v.size()); ++n)
        v[static_cast<size_t>(n)] += v[static_cast<size_t>(n - e)];
}

// sum_{n>=0} q^(k(n^2+c*n)) / (q^k;q^k)_n  with c = 0 for G, 1 for H
Series rr_sum(int64_t k, int64_t c, int64_t N, int denom) {
    int64_t step = k * denom;
    std::vector<Coef> acc(static_cast<size_t>(std::max<int64_t>(N, 1)));
    std::vector<Coef> term(acc.size());
    term[0] = 1;
    acc[0] = 1;
    for (int64_t n = 1;; ++n) {
        int64_t e = step * (n * n + c * n);
        if (e >= N) break;
        // term_n = term_{n-1} * q^(k(2n-1+c)) / (1-q^(kn))
        int64_t shift = step * (2 * n - 1 + c);
        for (int64_t m = static_cast<int64_t>(term.size()) - 1; m >= 0; --m)
            term[static_cast<size_t>(m)] = (m >= shift) ? term[static_cast<size_t>(m - shift)] : 0;
        div_factor(term, step * n);
        for (size_t m = 0; m < acc.size(); ++m) acc[m] += term[m];
    }
    Series s{denom, 0, N, std::move(acc)};
    return add(s, zero_series(N, denom));
}

Series make_G(int64_t k, int64_t N, int denom) {
    Series p = invert(mul(pochhammer_idx(1, k * denom, 5 * k * denom, N, denom),
                          pochhammer_idx(1, 4 * k * denom, 5 * k * denom, N, denom)));
    VerifyOutcome chk = is_zero(sub(p, rr_sum(k, 0, N, denom)));
    if (chk.status != VerifyStatus::ZERO)
        throw std::logic_error("G: sum and product forms disagree");
    return p;
}

Series make_H(int64_t k, int64_t N, int denom) {
    Series p = invert(mul(pochhammer_idx(1, 2 * k * denom, 5 * k * denom, N, denom),
                          pochhammer_idx(1, 3 * k * denom, 5 * k * denom, N, denom)));
    VerifyOutcome chk = is_zero(sub(p, rr_sum(k, 1, N, denom)));
    if (chk.status != VerifyStatus::ZERO)
        throw std::logic_error("H: sum and product forms disagree");
    return p;
}

Series make_T(int64_t k, int64_t N, int denom) {
    return div(H(k, N, denom), G(k, N, denom));
}

}  // namespace

Series G(int64_t k, int64_t N, int denom) { return cached('G', k, N, denom, make_G); }
Series H(int64_t k, int64_t N, int denom) { return cached('H', k, N, denom, make_H); }
Series T(int64_t k, int64_t N, int denom) { return cached('T', k, N, denom, make_T); }

Series G_sum(int64_t k, int64_t N, int denom) { return rr_sum(k, 0, N, denom); }
Series H_sum(int64_t k, int64_t N, int denom) { return rr_sum(k, 1, N, denom); }

PrefixedSeries R(int64_t k, int64_t N_fifths) {
    int64_t Nb = (N_fifths + 4) / 5;
    return PrefixedSeries{k, T(k, Nb, 1)};
}

Series to_lattice(const PrefixedSeries& p) {
    Series s = rescale(p.body, 5);
    s.lo += p.prefix_num;
    s.order_bound += p.prefix_num;
    return s;
}

Series twisted(Twisted which, int64_t N, int denom) {
    Series quotient, direct;
    switch (which) {
        case Twisted::Gm:
            quotient = div(mul(G(2, N, denom), mul(H(2, N, denom), H(2, N, denom))),
                           mul(G(1, N, denom), H(4, N, denom)));
            direct = negate_q(G(1, N, denom));
            break;
        case Twisted::Hm:
            quotient = div(mul(H(2, N, denom), mul(G(2, N, denom), G(2, N, denom))),
                           mul(H(1, N, denom), G(4, N, denom)));
            direct = negate_q(H(1, N, denom));
            break;
        case Twisted::Tm:
            quotient = div(T(4, N, denom), mul(T(1, N, denom), T(2, N, denom)));
            direct = negate_q(T(1, N, denom));
            break;
    }
    VerifyOutcome chk = is_zero(sub(quotient, direct));
    if (chk.status != VerifyStatus::ZERO)
        throw std::logic_error("twisted: quotient and negate_q routes disagree");
    return direct;
}

PrefixedSeries cf_convergent(int64_t depth, int64_t N_fifths) {
    int64_t Nb = (N_fifths + 4) / 5 + 1;
    Series b = const_series(1, Nb, 1);
    for (int64_t j = depth; j >= 1; --j)
        b = add(const_series(1, Nb, 1), div(monomial(1, j, Nb, 1), b));
    return PrefixedSeries{1, invert(b)};
}

}  // namespace qrr
