#pragma once

#include <map>
#include <string>
#include <vector>

#include "qrr/series.hpp"

namespace qrr {

struct CapExceeded : std::runtime_error {
    CapExceeded(int64_t n, int64_t cap)
        : std::runtime_error("enumeration oracle capped at n=" + std::to_string(cap) +
                             ", requested " + std::to_string(n)) {}
};

// Allowed part residues mod `modulus`, each +-r pair carrying `colors`
// distinguishable colors.  The counting function is the coefficient of q^n in
// prod over expanded residues r of 1/(q^r; q^modulus)^colors.
struct PartSpec {
    int64_t modulus = 1;
    std::vector<std::pair<int64_t, int64_t>> residues;  // (+-r, colors)

    // expanded (part, colors) list: each +-r becomes {r, modulus-r}
    std::vector<std::pair<int64_t, int64_t>> expanded_parts() const;
};

// coefficient of q^n in the product generating function (series kernel)
Coef gf_count(const PartSpec& spec, int64_t n);
// independent dynamic-programming enumerator; default cap 60
Coef enum_count(const PartSpec& spec, int64_t n, int64_t cap = 60);

struct TheoremTerm {
    std::string spec;  // p1..p10
    int64_t shift = 0;
    int64_t coef = 1;
};

struct PartitionTheorem {
    std::string id;          // "7.1" etc (data-file key)
    std::string relation;    // human-readable statement
    int64_t valid_from = 1;  // smallest n the relation is asserted for
    std::vector<TheoremTerm> terms;
};

struct TheoremRow {
    int64_t n = 0;
    std::vector<Coef> values;  // one per term, already signed and shifted
    bool judged = true;        // rows below valid_from are informational
    bool pass = true;
};

class PartitionSet {
  public:
    static PartitionSet load(const std::string& path);
    static PartitionSet load_default();

    const std::map<std::string, PartSpec>& specs() const { return specs_; }
    const PartSpec& spec(const std::string& name) const;
    const PartitionTheorem& theorem(const std::string& id) const;
    std::vector<std::string> theorem_ids() const;

    std::vector<TheoremRow> verify_theorem(const std::string& id, int64_t max_n) const;

  private:
    std::map<std::string, PartSpec> specs_;
    std::vector<PartitionTheorem> theorems_;
};

}  // namespace qrr
