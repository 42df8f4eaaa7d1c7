// Acceptance gate: prints one line per criterion and exits nonzero if any
// criterion fails.
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "qrr/partitions.hpp"
#include "qrr/registry.hpp"
#include "qrr/rogers_ramanujan.hpp"
#include "qrr/theta.hpp"

using namespace qrr;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::printf("criterion %d: %s  (%s)\n", criterion, pass ? "PASS" : "FAIL", detail.c_str());
    if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

uint64_t rng_state = 0x9e3779b97f4a7c15ull;
int64_t rnd(int64_t m) {
    rng_state = rng_state * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<int64_t>((rng_state >> 33) % static_cast<uint64_t>(m));
}

// verify every non-concluding entry single-threaded; returns number NONZERO
size_t run_core_groups(const Registry& reg, int64_t order, std::string* first_bad,
                       size_t* total = nullptr) {
    size_t bad = 0;
    size_t n = 0;
    for (const auto& e : reg.entries()) {
        if (e.group == "concluding") continue;
        ++n;
        EntryReport r = verify_entry(e, order);
        if (r.outcome.status != VerifyStatus::ZERO) {
            if (bad == 0 && first_bad) *first_bad = e.id;
            ++bad;
        }
    }
    if (total) *total = n;
    return bad;
}

}  // namespace

int main() {
    Registry reg = Registry::load_default();

    // 1: every core-group entry cancels exactly at order 500/5
    {
        auto t0 = std::chrono::steady_clock::now();
        std::string first_bad;
        size_t total = 0;
        size_t bad = run_core_groups(reg, 500, &first_bad, &total);
        double secs = seconds_since(t0);
        bool pass = bad == 0 && secs < 60.0;
        std::string detail = std::to_string(total) + " entries, " +
                             std::to_string(bad) + " nonzero, " + std::to_string(secs) + " s";
        if (bad) detail += ", first failure " + first_bad;
        report(1, pass, detail);
    }

    // 2: the concluding group cancels at order 600/5
    {
        auto t0 = std::chrono::steady_clock::now();
        size_t bad = 0;
        size_t total = 0;
        for (const auto& e : reg.entries()) {
            if (e.group != "concluding") continue;
            ++total;
            if (verify_entry(e, 600).outcome.status != VerifyStatus::ZERO) ++bad;
        }
        double secs = seconds_since(t0);
        bool pass = total > 0 && bad == 0 && secs < 120.0;
        report(2, pass,
               std::to_string(total) + " entries, " + std::to_string(bad) + " nonzero, " +
                   std::to_string(secs) + " s");
    }

    // 3: theta sum/product cross-validation and G/H sum vs product
    {
        size_t bad = 0;
        for (int t = 0; t < 50; ++t) {
            int sa = rnd(2) ? 1 : -1;
            int sb = rnd(2) ? 1 : -1;
            int64_t ea = 1 + rnd(12);
            int64_t eb = 1 + rnd(12);
            Series s = theta_sum_idx(sa, ea, sb, eb, 200, 1);
            Series p = theta_product_idx(sa, ea, sb, eb, 200, 1);
            if (is_zero(sub(s, p)).status != VerifyStatus::ZERO) ++bad;
        }
        bool gh = is_zero(sub(G(1, 300, 1), G_sum(1, 300, 1))).status == VerifyStatus::ZERO &&
                  is_zero(sub(H(1, 300, 1), H_sum(1, 300, 1))).status == VerifyStatus::ZERO;
        report(3, bad == 0 && gh,
               "50 random theta pairs at 200, " + std::to_string(bad) +
                   " mismatches; G/H routes " + (gh ? "agree" : "DISAGREE") + " at 300");
    }

    // 4: partition relations for n <= 100 and oracle equivalence for n <= 60
    {
        PartitionSet ps = PartitionSet::load_default();
        size_t bad_rows = 0;
        for (const std::string& id : ps.theorem_ids())
            for (const auto& row : ps.verify_theorem(id, 100))
                if (row.judged && !row.pass) ++bad_rows;
        size_t bad_counts = 0;
        for (const auto& [name, spec] : ps.specs())
            for (int64_t n = 0; n <= 60; ++n)
                if (gf_count(spec, n) != enum_count(spec, n)) ++bad_counts;
        report(4, bad_rows == 0 && bad_counts == 0,
               std::to_string(ps.theorem_ids().size()) + " relations to n=100, " +
                   std::to_string(bad_rows) + " bad rows; " +
                   std::to_string(ps.specs().size()) + " specs vs oracle to n=60, " +
                   std::to_string(bad_counts) + " mismatches");
    }

    // 5: convergent error order matches the fixture and strictly increases
    {
        const int64_t expected[] = {6, 16, 31, 51, 76, 106, 141, 181, 226, 276, 331, 391, 456};
        Series r = to_lattice(R(1, 500));
        bool pass = true;
        int64_t prev = -1;
        for (int64_t d = 0; d <= 12; ++d) {
            Rational o = q_order(sub(to_lattice(cf_convergent(d, 500)), r));
            int64_t fifths = o.num * (5 / o.den);
            if (fifths != expected[d] || fifths <= prev) pass = false;
            prev = fifths;
        }
        report(5, pass, "error orders 6..456 fifth-units for depths 0..12, strictly increasing");
    }

    // 6: every single sign flip in the first modular relation is detected
    {
        const IdentityEntry& e = reg.get("t1-1");
        struct Mut {
            const char* rhs;
            int64_t exp_fifths;
        };
        const Mut muts[] = {
            {"(-R(q^5) + R(q^20) - R(q^5)*R(q^20))/(1 + R(q^5) + R(q^20))", 5},
            {"(R(q^5) - R(q^20) - R(q^5)*R(q^20))/(1 + R(q^5) + R(q^20))", 20},
            {"(R(q^5) + R(q^20) + R(q^5)*R(q^20))/(1 + R(q^5) + R(q^20))", 25},
            {"(R(q^5) + R(q^20) - R(q^5)*R(q^20))/(1 - R(q^5) + R(q^20))", 10},
            {"(R(q^5) + R(q^20) - R(q^5)*R(q^20))/(1 + R(q^5) - R(q^20))", 25},
        };
        size_t caught = 0;
        bool exps_ok = true;
        for (const Mut& m : muts) {
            VerifyOutcome o = verify_pair(e.lhs, parse(m.rhs), 300);
            if (o.status == VerifyStatus::NONZERO) {
                ++caught;
                if (o.first_nonzero_exponent.num * (5 / o.first_nonzero_exponent.den) !=
                    m.exp_fifths)
                    exps_ok = false;
            }
        }
        report(6, caught == 5 && exps_ok,
               std::to_string(caught) + "/5 sign flips detected with the recorded exponents");
    }

    // 7: raising the order to 1000/5 changes no core-group outcome
    {
        auto t0 = std::chrono::steady_clock::now();
        std::string first_bad;
        size_t bad = run_core_groups(reg, 1000, &first_bad);
        double secs = seconds_since(t0);
        std::string detail = std::to_string(bad) + " outcome changes at order 1000, " +
                             std::to_string(secs) + " s";
        if (bad) detail += ", first " + first_bad;
        report(7, bad == 0, detail);
    }

    return failures == 0 ? 0 : 1;
}
