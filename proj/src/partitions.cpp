#include "qrr/partitions.hpp"

#include <fstream>
#include <mutex>
#include <set>

#include <json.hpp>

#include "qrr/registry.hpp"
#include "qrr/theta.hpp"

namespace qrr {

std::vector<std::pair<int64_t, int64_t>> PartSpec::expanded_parts() const {
    std::vector<std::pair<int64_t, int64_t>> out;
    for (const auto& [r, c] : residues) {
        std::set<int64_t> vals{r, modulus - r};
        for (int64_t v : vals) out.emplace_back(v, c);
    }
    return out;
}

namespace {

std::vector<Coef> gf_coeffs_uncached(const PartSpec& spec, int64_t n_max) {
    int64_t N = n_max + 1;
    Series g = const_series(1, N, 1);
    for (const auto& [part, colors] : spec.expanded_parts())
        g = mul(g, pow(invert(pochhammer_idx(1, part, spec.modulus, N, 1)), colors));
    std::vector<Coef> out(static_cast<size_t>(N));
    for (int64_t i = 0; i < g.rel_len(); ++i) out[static_cast<size_t>(g.lo + i)] = g.coeffs[static_cast<size_t>(i)];
    return out;
}

// computed once per spec to a bound >= n, then served from the cache
std::vector<Coef> gf_coeffs(const PartSpec& spec, int64_t n_max) {
    static std::mutex mx;
    static std::map<std::string, std::vector<Coef>> cache;
    std::string key = std::to_string(spec.modulus);
    for (const auto& [r, c] : spec.residues) key += ":" + std::to_string(r) + "x" + std::to_string(c);
    {
        std::lock_guard<std::mutex> lock(mx);
        auto it = cache.find(key);
        if (it != cache.end() && static_cast<int64_t>(it->second.size()) > n_max) {
            return {it->second.begin(), it->second.begin() + n_max + 1};
        }
    }
    std::vector<Coef> table = gf_coeffs_uncached(spec, std::max<int64_t>(n_max, 128));
    std::lock_guard<std::mutex> lock(mx);
    auto& slot = cache[key];
    if (slot.size() < table.size()) slot = table;
    return {slot.begin(), slot.begin() + n_max + 1};
}

}  // namespace

Coef gf_count(const PartSpec& spec, int64_t n) {
    if (n < 0) return 0;
    return gf_coeffs(spec, n)[static_cast<size_t>(n)];
}

Coef enum_count(const PartSpec& spec, int64_t n, int64_t cap) {
    if (n < 0) return 0;
    if (n > cap) throw CapExceeded(n, cap);
    // plain integer DP over colored parts, no series machinery
    std::vector<Coef> c(static_cast<size_t>(n + 1));
    c[0] = 1;
    for (const auto& [part, colors] : spec.expanded_parts())
        for (int64_t p = part; p <= n; p += spec.modulus)
            for (int64_t color = 0; color < colors; ++color)
                for (int64_t m = p; m <= n; ++m) c[static_cast<size_t>(m)] += c[static_cast<size_t>(m - p)];
    return c[static_cast<size_t>(n)];
}

PartitionSet PartitionSet::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open partitions file: " + path);
    nlohmann::json j;
    in >> j;
    PartitionSet ps;
    for (auto& [name, js] : j["specs"].items()) {
        PartSpec s;
        s.modulus = js["modulus"].get<int64_t>();
        for (const auto& r : js["residues"])
            s.residues.emplace_back(r["pm"].get<int64_t>(), r["colors"].get<int64_t>());
        ps.specs_[name] = std::move(s);
    }
    for (auto& [id, jt] : j["theorems"].items()) {
        PartitionTheorem t;
        t.id = id;
        t.relation = jt.value("relation", std::string{});
        t.valid_from = jt.value("valid_from", int64_t{1});
        for (const auto& term : jt["terms"])
            t.terms.push_back({term["spec"].get<std::string>(), term["shift"].get<int64_t>(),
                               term["coef"].get<int64_t>()});
        ps.theorems_.push_back(std::move(t));
    }
    std::sort(ps.theorems_.begin(), ps.theorems_.end(),
              [](const auto& a, const auto& b) { return a.id < b.id; });
    return ps;
}

PartitionSet PartitionSet::load_default() { return load(default_partitions_path()); }

const PartSpec& PartitionSet::spec(const std::string& name) const {
    auto it = specs_.find(name);
    if (it == specs_.end()) throw std::runtime_error("unknown partition spec: " + name);
    return it->second;
}

const PartitionTheorem& PartitionSet::theorem(const std::string& id) const {
    for (const auto& t : theorems_)
        if (t.id == id) return t;
    throw std::runtime_error("unknown partition theorem: " + id);
}

std::vector<std::string> PartitionSet::theorem_ids() const {
    std::vector<std::string> out;
    for (const auto& t : theorems_) out.push_back(t.id);
    return out;
}

std::vector<TheoremRow> PartitionSet::verify_theorem(const std::string& id, int64_t max_n) const {
    const PartitionTheorem& t = theorem(id);
    std::map<std::string, std::vector<Coef>> tables;
    for (const auto& term : t.terms)
        if (!tables.count(term.spec)) tables[term.spec] = gf_coeffs(spec(term.spec), max_n);
    std::vector<TheoremRow> rows;
    for (int64_t n = 0; n <= max_n; ++n) {
        TheoremRow row;
        row.n = n;
        Coef total = 0;
        for (const auto& term : t.terms) {
            int64_t m = n - term.shift;
            Coef v = (m >= 0) ? tables[term.spec][static_cast<size_t>(m)] : Coef(0);
            v *= term.coef;
            row.values.push_back(v);
            total += v;
        }
        row.judged = n >= t.valid_from;
        row.pass = (total == 0);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace qrr
