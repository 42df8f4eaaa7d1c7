#include <chrono>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qrr/expr.hpp"
#include "qrr/partitions.hpp"
#include "qrr/registry.hpp"
#include "qrr/series.hpp"

using nlohmann::json;

namespace {

constexpr const char* kVersion = "1.0.0";
constexpr const char* kSchema = "qrr-report/1";

struct Ctx {
    std::string format = "text";
    int64_t order = 200;
    std::string registry_path;
    std::string partitions_path;
};

qrr::Registry load_registry(const Ctx& ctx) {
    return ctx.registry_path.empty() ? qrr::Registry::load_default()
                                     : qrr::Registry::load(ctx.registry_path);
}

qrr::PartitionSet load_partitions(const Ctx& ctx) {
    return ctx.partitions_path.empty() ? qrr::PartitionSet::load_default()
                                       : qrr::PartitionSet::load(ctx.partitions_path);
}

json report_shell(const std::string& command, int64_t order) {
    json r;
    r["schema"] = kSchema;
    r["tool_version"] = kVersion;
    r["command"] = command;
    r["order"] = order;
    return r;
}

json coeff_table(const qrr::Series& s) {
    json rows = json::array();
    for (int64_t i = 0; i < s.rel_len(); ++i) {
        if (s.lo + i >= s.order_bound) break;
        if (s.coeffs[static_cast<size_t>(i)] == 0) continue;
        qrr::Rational e = qrr::make_exponent(s.lo + i, s.denom);
        rows.push_back({{"exponent_num", e.num},
                        {"exponent_den", e.den},
                        {"coefficient", qrr::coef_to_string(s.coeffs[static_cast<size_t>(i)])}});
    }
    return rows;
}

void print_coeffs(const qrr::Series& s, const std::string& format, const json& rep) {
    if (format == "json") {
        std::cout << rep.dump(1) << "\n";
        return;
    }
    if (format == "csv") {
        std::cout << "exponent_num,exponent_den,coefficient\n";
        for (const auto& row : rep["coefficients"])
            std::cout << row["exponent_num"].get<int64_t>() << ","
                      << row["exponent_den"].get<int64_t>() << ","
                      << row["coefficient"].get<std::string>() << "\n";
        return;
    }
    for (const auto& row : rep["coefficients"]) {
        int64_t num = row["exponent_num"].get<int64_t>();
        int64_t den = row["exponent_den"].get<int64_t>();
        std::cout << "q^";
        if (den == 1)
            std::cout << num;
        else
            std::cout << "(" << num << "/" << den << ")";
        std::cout << " : " << row["coefficient"].get<std::string>() << "\n";
    }
    std::cout << "# exact below order " << rep["checked_bound_fifths"].get<int64_t>()
              << "/5\n";
}

json outcome_json(const qrr::VerifyOutcome& o) {
    json j;
    j["status"] = o.status == qrr::VerifyStatus::ZERO ? "ZERO" : "NONZERO";
    j["checked_bound"] = o.checked_bound;
    j["checked_denom"] = o.denom;
    if (o.status == qrr::VerifyStatus::NONZERO) {
        j["first_nonzero_exponent_num"] = o.first_nonzero_exponent.num;
        j["first_nonzero_exponent_den"] = o.first_nonzero_exponent.den;
        j["first_nonzero_coefficient"] = qrr::coef_to_string(o.first_nonzero_coefficient);
    }
    return j;
}

std::string outcome_text(const qrr::VerifyOutcome& o) {
    if (o.status == qrr::VerifyStatus::ZERO)
        return "ZERO (checked to index " + std::to_string(o.checked_bound) + "/" +
               std::to_string(o.denom) + ")";
    return "NONZERO at q^(" + std::to_string(o.first_nonzero_exponent.num) + "/" +
           std::to_string(o.first_nonzero_exponent.den) + ") with coefficient " +
           qrr::coef_to_string(o.first_nonzero_coefficient);
}

int cmd_expand(const Ctx& ctx, const std::string& expr_text) {
    qrr::ExprPtr e = qrr::parse(expr_text);
    auto t0 = std::chrono::steady_clock::now();
    qrr::Series s = qrr::evaluate(e, ctx.order);
    auto t1 = std::chrono::steady_clock::now();
    json rep = report_shell("expand", ctx.order);
    rep["expression"] = qrr::print_canonical(e);
    rep["coefficients"] = coeff_table(s);
    rep["checked_bound_fifths"] = s.order_bound * 5 / s.denom;
    rep["wall_ms"] = std::chrono::duration<double, std::milli>(t1 - t0).count();
    print_coeffs(s, ctx.format, rep);
    return 0;
}

int cmd_dissect(const Ctx& ctx, const std::string& expr_text, int64_t m, int64_t r) {
    qrr::ExprPtr e = qrr::parse(expr_text);
    auto t0 = std::chrono::steady_clock::now();
    qrr::Series s = qrr::dissect(qrr::evaluate(e, ctx.order), m, r);
    auto t1 = std::chrono::steady_clock::now();
    json rep = report_shell("dissect", ctx.order);
    rep["expression"] = qrr::print_canonical(e);
    rep["modulus"] = m;
    rep["residue"] = r;
    rep["coefficients"] = coeff_table(s);
    rep["checked_bound_fifths"] = s.order_bound * 5 / s.denom;
    rep["wall_ms"] = std::chrono::duration<double, std::milli>(t1 - t0).count();
    print_coeffs(s, ctx.format, rep);
    return 0;
}

void emit_entry_reports(const Ctx& ctx, const std::string& command,
                        const std::vector<qrr::EntryReport>& reports, double wall_ms) {
    if (ctx.format == "json") {
        json rep = report_shell(command, ctx.order);
        rep["wall_ms"] = wall_ms;
        rep["items"] = json::array();
        size_t zero = 0;
        for (const auto& r : reports) {
            json item;
            item["id"] = r.id;
            item["group"] = r.group;
            item["order_used"] = r.order_used;
            item["wall_ms"] = r.wall_ms;
            item["outcome"] = outcome_json(r.outcome);
            if (!r.note.empty()) item["note"] = r.note;
            rep["items"].push_back(std::move(item));
            if (r.outcome.status == qrr::VerifyStatus::ZERO) ++zero;
        }
        rep["summary"] = {{"total", reports.size()}, {"zero", zero},
                          {"nonzero", reports.size() - zero}};
        std::cout << rep.dump(1) << "\n";
        return;
    }
    size_t zero = 0;
    for (const auto& r : reports) {
        std::cout << (r.outcome.status == qrr::VerifyStatus::ZERO ? "ok   " : "FAIL ") << r.id
                  << " [" << r.group << "] order " << r.order_used << ": "
                  << outcome_text(r.outcome);
        if (!r.note.empty()) std::cout << " -- " << r.note;
        std::cout << " (" << static_cast<int64_t>(r.wall_ms) << " ms)\n";
        if (r.outcome.status == qrr::VerifyStatus::ZERO) ++zero;
    }
    std::cout << zero << "/" << reports.size() << " ZERO, total "
              << static_cast<int64_t>(wall_ms) << " ms\n";
}

int cmd_verify(const Ctx& ctx, const std::string& id, const std::string& lhs,
               const std::string& rhs) {
    std::vector<qrr::EntryReport> reports;
    auto t0 = std::chrono::steady_clock::now();
    if (!id.empty()) {
        qrr::Registry reg = load_registry(ctx);
        reports.push_back(reg.verify(id, ctx.order));
    } else {
        qrr::IdentityEntry e;
        e.id = "(adhoc)";
        e.group = "classical";
        e.lhs = qrr::parse(lhs);
        e.rhs = qrr::parse(rhs);
        e.min_order = ctx.order;
        reports.push_back(qrr::verify_entry(e, ctx.order));
    }
    auto t1 = std::chrono::steady_clock::now();
    emit_entry_reports(ctx, "verify", reports,
                       std::chrono::duration<double, std::milli>(t1 - t0).count());
    return reports[0].outcome.status == qrr::VerifyStatus::ZERO ? 0 : 1;
}

int cmd_verify_all(const Ctx& ctx, const std::string& group, int jobs) {
    qrr::Registry reg = load_registry(ctx);
    auto t0 = std::chrono::steady_clock::now();
    std::vector<qrr::EntryReport> reports = reg.verify_all(ctx.order, group, jobs);
    auto t1 = std::chrono::steady_clock::now();
    emit_entry_reports(ctx, "verify-all", reports,
                       std::chrono::duration<double, std::milli>(t1 - t0).count());
    for (const auto& r : reports)
        if (r.outcome.status != qrr::VerifyStatus::ZERO) return 1;
    return 0;
}

int cmd_list(const Ctx& ctx, const std::string& group) {
    qrr::Registry reg = load_registry(ctx);
    auto items = reg.list(group);
    if (ctx.format == "json") {
        json rep = report_shell("list", ctx.order);
        rep["items"] = json::array();
        for (const auto* e : items)
            rep["items"].push_back({{"id", e->id},
                                    {"group", e->group},
                                    {"citation", e->citation},
                                    {"min_order", e->min_order},
                                    {"lhs", e->lhs_text},
                                    {"rhs", e->rhs_text}});
        std::cout << rep.dump(1) << "\n";
        return 0;
    }
    for (const auto* e : items)
        std::cout << e->id << "  [" << e->group << "]  min_order " << e->min_order << "  ("
                  << e->citation << ")\n";
    std::cout << items.size() << " entries\n";
    return 0;
}

int cmd_partitions(const Ctx& ctx, const std::string& theorem, const std::string& spec_name,
                   int64_t max_n, int64_t single_n) {
    qrr::PartitionSet ps = load_partitions(ctx);
    if (!spec_name.empty()) {
        const qrr::PartSpec& spec = ps.spec(spec_name);
        json rep = report_shell("partitions", ctx.order);
        rep["spec"] = spec_name;
        json rows = json::array();
        int64_t lo = (single_n >= 0) ? single_n : 0;
        int64_t hi = (single_n >= 0) ? single_n : max_n;
        for (int64_t n = lo; n <= hi; ++n)
            rows.push_back({{"n", n}, {"count", qrr::coef_to_string(qrr::gf_count(spec, n))}});
        rep["items"] = rows;
        if (ctx.format == "json") {
            std::cout << rep.dump(1) << "\n";
        } else if (ctx.format == "csv") {
            std::cout << "n,count\n";
            for (const auto& row : rows)
                std::cout << row["n"].get<int64_t>() << "," << row["count"].get<std::string>()
                          << "\n";
        } else {
            for (const auto& row : rows)
                std::cout << spec_name << "(" << row["n"].get<int64_t>()
                          << ") = " << row["count"].get<std::string>() << "\n";
        }
        return 0;
    }
    std::vector<std::string> ids =
        theorem.empty() ? ps.theorem_ids() : std::vector<std::string>{theorem};
    bool all_pass = true;
    json rep = report_shell("partitions", ctx.order);
    rep["items"] = json::array();
    for (const std::string& id : ids) {
        auto rows = ps.verify_theorem(id, max_n);
        int64_t judged = 0, passed = 0;
        for (const auto& row : rows) {
            if (!row.judged) continue;
            ++judged;
            if (row.pass)
                ++passed;
            else
                all_pass = false;
        }
        json item;
        item["theorem"] = id;
        item["relation"] = ps.theorem(id).relation;
        item["max_n"] = max_n;
        item["judged"] = judged;
        item["passed"] = passed;
        json failures = json::array();
        for (const auto& row : rows)
            if (row.judged && !row.pass) failures.push_back(row.n);
        item["failures"] = failures;
        rep["items"].push_back(std::move(item));
        if (ctx.format != "json")
            std::cout << (judged == passed ? "ok   " : "FAIL ") << "theorem " << id << ": "
                      << passed << "/" << judged << " n-values pass (n <= " << max_n << ")\n";
    }
    if (ctx.format == "json") std::cout << rep.dump(1) << "\n";
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact q-series identity verifier"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    Ctx ctx;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--order", ctx.order, "truncation order in fifth-units (q^(order/5))")
            ->capture_default_str();
        sub->add_option("--format", ctx.format, "output format: text, json, csv")
            ->check(CLI::IsMember({"text", "json", "csv"}))
            ->capture_default_str();
        sub->add_option("--registry", ctx.registry_path, "registry data file path");
        sub->add_option("--partitions-file", ctx.partitions_path, "partitions data file path");
    };

    std::string expr_text, id, lhs, rhs, group = "all", theorem, spec_name;
    int64_t m = 5, r = 0, max_n = 100, single_n = -1;
    int jobs = 1;

    CLI::App* expand = app.add_subcommand("expand", "expand an expression to a coefficient table");
    expand->add_option("expr", expr_text, "expression")->required();
    add_common(expand);

    CLI::App* verify = app.add_subcommand("verify", "verify one identity (by id or as a pair)");
    verify->add_option("--id", id, "registry entry id");
    verify->add_option("--lhs", lhs, "left-hand expression");
    verify->add_option("--rhs", rhs, "right-hand expression");
    add_common(verify);

    CLI::App* verify_all = app.add_subcommand("verify-all", "verify every registry entry");
    verify_all->add_option("--group", group, "group filter or 'all'");
    verify_all->add_option("--jobs", jobs, "worker threads")->capture_default_str();
    add_common(verify_all);

    CLI::App* dissect = app.add_subcommand("dissect", "extract one residue class of exponents");
    dissect->add_option("expr", expr_text, "expression")->required();
    dissect->add_option("modulus", m, "dissection modulus")->required();
    dissect->add_option("residue", r, "residue class")->required();
    add_common(dissect);

    CLI::App* partitions = app.add_subcommand("partitions", "partition-counting checks");
    partitions->add_option("--theorem", theorem, "theorem id (default: all)");
    partitions->add_option("--spec", spec_name, "print counts for one spec instead");
    partitions->add_option("--max-n", max_n, "largest n to check")->capture_default_str();
    partitions->add_option("--n", single_n, "single n (with --spec)");
    add_common(partitions);

    CLI::App* list = app.add_subcommand("list", "list registry entries");
    list->add_option("--group", group, "group filter or 'all'");
    add_common(list);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*expand) return cmd_expand(ctx, expr_text);
        if (*verify) {
            if (id.empty() && (lhs.empty() || rhs.empty())) {
                std::cerr << "verify needs --id or both --lhs and --rhs\n";
                return 2;
            }
            return cmd_verify(ctx, id, lhs, rhs);
        }
        if (*verify_all) return cmd_verify_all(ctx, group, jobs);
        if (*dissect) return cmd_dissect(ctx, expr_text, m, r);
        if (*partitions) return cmd_partitions(ctx, theorem, spec_name, max_n, single_n);
        if (*list) return cmd_list(ctx, group);
    } catch (const qrr::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const qrr::UnknownAtom& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const qrr::UnknownId& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const qrr::UnknownGroup& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
