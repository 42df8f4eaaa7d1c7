#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qrr/expr.hpp"

namespace qrr {

struct UnknownId : std::runtime_error {
    explicit UnknownId(const std::string& id) : std::runtime_error("unknown identity id: " + id) {}
};
struct UnknownGroup : std::runtime_error {
    explicit UnknownGroup(const std::string& g) : std::runtime_error("unknown group: " + g) {}
};

struct IdentityEntry {
    std::string id;
    std::string group;      // main|corollary|gh|lemma|intermediate|concluding|classical
    std::string lhs_text;   // original string, defs expanded
    std::string rhs_text;
    ExprPtr lhs;
    ExprPtr rhs;
    std::string citation;
    int64_t min_order = 200;  // fifth-units
};

struct EntryReport {
    std::string id;
    std::string group;
    VerifyOutcome outcome;
    int64_t order_used = 0;  // fifth-units
    double wall_ms = 0;
    std::string note;  // diagnostics, e.g. prefix imbalance
};

class Registry {
  public:
    static Registry load(const std::string& path);
    // path resolution: QRR_REGISTRY env var, else the given fallback
    static Registry load_default();

    const std::vector<IdentityEntry>& entries() const { return entries_; }
    std::vector<const IdentityEntry*> list(const std::string& group_or_all) const;
    const IdentityEntry& get(const std::string& id) const;

    EntryReport verify(const std::string& id, int64_t N_fifths) const;
    std::vector<EntryReport> verify_all(int64_t N_fifths, const std::string& group_or_all,
                                        int jobs) const;

  private:
    std::vector<IdentityEntry> entries_;
};

EntryReport verify_entry(const IdentityEntry& e, int64_t N_fifths);

// default data directory baked in at build time
std::string default_registry_path();
std::string default_partitions_path();

}  // namespace qrr
