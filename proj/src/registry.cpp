#include "qrr/registry.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <map>
#include <regex>
#include <set>
#include <thread>

#include <json.hpp>

namespace qrr {

namespace {

const std::set<std::string> kGroups = {"main",         "corollary",  "gh",       "lemma",
                                       "intermediate", "concluding", "classical"};

std::string expand_defs(const std::string& text,
                        const std::map<std::string, std::string>& defs) {
    static const std::regex ref(R"(\$([A-Za-z0-9]+))");
    std::string out;
    auto begin = std::sregex_iterator(text.begin(), text.end(), ref);
    auto end = std::sregex_iterator();
    size_t last = 0;
    for (auto it = begin; it != end; ++it) {
        const std::smatch& m = *it;
        out += text.substr(last, static_cast<size_t>(m.position()) - last);
        auto d = defs.find(m[1].str());
        if (d == defs.end()) throw std::runtime_error("undefined $" + m[1].str() + " in registry");
        out += "(" + d->second + ")";
        last = static_cast<size_t>(m.position() + m.length());
    }
    out += text.substr(last);
    return out;
}

}  // namespace

std::string default_registry_path() {
    if (const char* env = std::getenv("QRR_REGISTRY")) return env;
    return std::string(QRR_DATA_DIR) + "/registry.json";
}

std::string default_partitions_path() {
    if (const char* env = std::getenv("QRR_PARTITIONS")) return env;
    return std::string(QRR_DATA_DIR) + "/partitions.json";
}

Registry Registry::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open registry file: " + path);
    nlohmann::json j;
    in >> j;
    std::map<std::string, std::string> defs;
    if (j.contains("defs"))
        for (auto& [k, v] : j["defs"].items()) defs[k] = v.get<std::string>();
    Registry reg;
    for (const auto& je : j["entries"]) {
        IdentityEntry e;
        e.id = je["id"].get<std::string>();
        e.group = je["group"].get<std::string>();
        if (!kGroups.count(e.group)) throw UnknownGroup(e.group);
        e.lhs_text = expand_defs(je["lhs"].get<std::string>(), defs);
        e.rhs_text = expand_defs(je["rhs"].get<std::string>(), defs);
        e.lhs = parse(e.lhs_text);
        e.rhs = parse(e.rhs_text);
        e.citation = je.value("citation", std::string{});
        e.min_order = je.value("min_order", int64_t{200});
        reg.entries_.push_back(std::move(e));
    }
    return reg;
}

Registry Registry::load_default() { return load(default_registry_path()); }

std::vector<const IdentityEntry*> Registry::list(const std::string& group_or_all) const {
    std::vector<const IdentityEntry*> out;
    if (group_or_all.empty()) return out;  // empty filter matches nothing
    if (group_or_all != "all" && !kGroups.count(group_or_all)) throw UnknownGroup(group_or_all);
    for (const auto& e : entries_)
        if (group_or_all == "all" || e.group == group_or_all) out.push_back(&e);
    return out;
}

const IdentityEntry& Registry::get(const std::string& id) const {
    for (const auto& e : entries_)
        if (e.id == id) return e;
    throw UnknownId(id);
}

EntryReport verify_entry(const IdentityEntry& e, int64_t N_fifths) {
    EntryReport r;
    r.id = e.id;
    r.group = e.group;
    r.order_used = std::max(N_fifths, e.min_order);
    auto t0 = std::chrono::steady_clock::now();
    try {
        r.outcome = verify_pair(e.lhs, e.rhs, r.order_used);
    } catch (const std::exception& ex) {
        r.outcome.status = VerifyStatus::NONZERO;
        r.outcome.checked_bound = 0;
        r.note = std::string("evaluation error: ") + ex.what();
    }
    auto t1 = std::chrono::steady_clock::now();
    r.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    if (r.outcome.status == VerifyStatus::NONZERO && r.outcome.first_nonzero_exponent.den != 1)
        r.note = "first nonzero exponent is fractional: the q^(m/5) prefixes of the two sides "
                 "are unbalanced";
    return r;
}

EntryReport Registry::verify(const std::string& id, int64_t N_fifths) const {
    return verify_entry(get(id), N_fifths);
}

std::vector<EntryReport> Registry::verify_all(int64_t N_fifths, const std::string& group_or_all,
                                              int jobs) const {
    std::vector<const IdentityEntry*> todo = list(group_or_all);
    std::vector<EntryReport> reports(todo.size());
    if (jobs < 1) jobs = 1;
    if (jobs == 1) {
        for (size_t i = 0; i < todo.size(); ++i) reports[i] = verify_entry(*todo[i], N_fifths);
        return reports;
    }
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= todo.size()) return;
            reports[i] = verify_entry(*todo[i], N_fifths);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return reports;  // slot order == registry order, independent of scheduling
}

}  // namespace qrr
