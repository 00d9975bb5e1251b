#include "siglat/report.hpp"

#include "siglat/dsl/printer.hpp"
#include "siglat/product.hpp"

#include <json.hpp>

#include <chrono>

namespace siglat::report {

namespace {

using dsl::Script;
using nlohmann::json;

std::string relation_text(const dsl::CheckDecl& check) {
    return dsl::to_string(*check.lhs) + " " + dsl::spelling(check.rel) + " " +
           dsl::to_string(*check.rhs);
}

std::string check_header(std::size_t index, const dsl::CheckDecl& check) {
    return "check " + std::to_string(index + 1) + ": " + relation_text(check) + "\n";
}

// Witness variables in declaration order: vars first, then lets.
std::vector<std::string> witness_order(const Script& script) {
    std::vector<std::string> names;
    for (const auto& v : script.vars) names.push_back(v.name);
    for (const auto& l : script.lets) names.push_back(l.name);
    return names;
}

std::string sizes_text(const Script& script, const dsl::SpaceSizes& sizes) {
    std::string out;
    for (const auto& s : script.spaces) {
        auto it = sizes.find(s.name);
        if (it == sizes.end()) continue;
        if (!out.empty()) out += " ";
        out += s.name + "=" + std::to_string(it->second);
    }
    return out;
}

std::string certificate_text(const dsl::Certificate& cert) {
    std::string out = "certificate: ";
    if (cert.mode == dsl::SearchMode::Exhaustive) {
        out += "exhaustive, max ground size " + std::to_string(cert.max_ground) + ", " +
               std::to_string(cert.assignments_checked) + " assignments checked";
    } else {
        out += "random, max ground size " + std::to_string(cert.max_ground) + ", seed " +
               std::to_string(cert.seed) + ", " + std::to_string(cert.trials) + " trials, " +
               std::to_string(cert.assignments_checked) + " assignments checked";
    }
    return out;
}

} // namespace

RunOutcome run_check(const Script& script) {
    dsl::typecheck(script);
    dsl::SpaceSizes sizes = dsl::declared_sizes(script);
    dsl::Assignment assignment = dsl::let_assignment(script, sizes);
    std::string out;
    bool any_violated = false;
    for (std::size_t i = 0; i < script.checks.size(); ++i) {
        const auto& check = script.checks[i];
        out += check_header(i, check);
        SigmaAlgebra lhs = dsl::evaluate(*check.lhs, assignment, sizes);
        SigmaAlgebra rhs = dsl::evaluate(*check.rhs, assignment, sizes);
        bool ok = check.rel == dsl::Relation::Equal ? lhs == rhs : is_sub(lhs, rhs);
        if (ok) {
            out += "  holds\n";
        } else {
            any_violated = true;
            out += "  VIOLATED\n";
            out += "  lhs atoms: " + lhs.atoms().to_string() + "\n";
            out += "  rhs atoms: " + rhs.atoms().to_string() + "\n";
        }
    }
    return {any_violated ? kExitViolation : kExitOk, std::move(out)};
}

RunOutcome run_mine(const Script& script, const dsl::MineOptions& options) {
    dsl::typecheck(script);
    std::string out;
    bool any_found = false;
    for (std::size_t i = 0; i < script.checks.size(); ++i) {
        dsl::MineResult result = dsl::mine_check(script, i, options);
        out += check_header(i, script.checks[i]);
        if (result.counterexample) {
            any_found = true;
            const auto& ce = *result.counterexample;
            out += "  counterexample (rank " + std::to_string(ce.rank) + ")\n";
            out += "  sizes: " + sizes_text(script, ce.sizes) + "\n";
            for (const auto& name : witness_order(script)) {
                auto it = ce.assignment.find(name);
                if (it == ce.assignment.end()) continue;
                out += "  " + name + " = " + it->second.to_string() + "\n";
            }
            out += "  lhs atoms: " + ce.lhs_atoms.to_string() + "\n";
            out += "  rhs atoms: " + ce.rhs_atoms.to_string() + "\n";
        } else {
            out += "  no counterexample found\n";
            out += "  " + certificate_text(*result.certificate) + "\n";
        }
    }
    return {any_found ? kExitViolation : kExitOk, std::move(out)};
}

RunOutcome run_mine_json(const Script& script, const dsl::MineOptions& options) {
    dsl::typecheck(script);
    json checks = json::array();
    bool any_found = false;
    for (std::size_t i = 0; i < script.checks.size(); ++i) {
        auto started = std::chrono::steady_clock::now();
        dsl::MineResult result = dsl::mine_check(script, i, options);
        auto elapsed = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - started)
                           .count();
        json entry;
        entry["check"] = i + 1;
        entry["relation"] = relation_text(script.checks[i]);
        if (result.counterexample) {
            any_found = true;
            const auto& ce = *result.counterexample;
            entry["verdict"] = "counterexample";
            json witness;
            witness["rank"] = ce.rank;
            witness["sizes"] = json::object();
            for (const auto& [name, size] : ce.sizes) witness["sizes"][name] = size;
            witness["assignments"] = json::object();
            for (const auto& [name, part] : ce.assignment)
                witness["assignments"][name] = part.to_string();
            witness["lhs_atoms"] = ce.lhs_atoms.to_string();
            witness["rhs_atoms"] = ce.rhs_atoms.to_string();
            entry["witness"] = std::move(witness);
            entry["certificate"] = nullptr;
        } else {
            const auto& cert = *result.certificate;
            entry["verdict"] = "holds-at-bound";
            entry["witness"] = nullptr;
            json c;
            c["mode"] = cert.mode == dsl::SearchMode::Exhaustive ? "exhaustive" : "random";
            c["max_ground"] = cert.max_ground;
            c["assignments_checked"] = cert.assignments_checked;
            if (cert.mode == dsl::SearchMode::Random) {
                c["seed"] = cert.seed;
                c["trials"] = cert.trials;
            }
            entry["certificate"] = std::move(c);
        }
        entry["elapsed_ms"] = elapsed;
        checks.push_back(std::move(entry));
    }
    return {any_found ? kExitViolation : kExitOk, checks.dump(2) + "\n"};
}

RunOutcome run_atoms(const Script& script) {
    dsl::TypedScript typed = dsl::typecheck(script);
    dsl::SpaceSizes sizes = dsl::declared_sizes(script);
    dsl::Assignment assignment = dsl::let_assignment(script, sizes);
    std::string out;
    for (std::size_t i = 0; i < script.checks.size(); ++i) {
        const auto& check = script.checks[i];
        for (const char* side : {"lhs", "rhs"}) {
            const dsl::Expr& expr = side[0] == 'l' ? *check.lhs : *check.rhs;
            const dsl::SpaceType& type = typed.expr_spaces.at(&expr);
            SigmaAlgebra value = dsl::evaluate(expr, assignment, sizes);
            out += "check " + std::to_string(i + 1) + " " + side + ": " + dsl::to_string(expr) +
                   "\n";
            out += "  space " + type.to_string() + " (" + std::to_string(type.size()) +
                   (type.size() == 1 ? " point)\n" : " points)\n");
            for (const Subset& atom : value.atoms().blocks()) {
                out += "  {";
                bool first = true;
                for (int p : atom.points()) {
                    if (!first) out += ",";
                    out += type.format_point(p);
                    first = false;
                }
                out += "}";
                if (type.is_product()) {
                    ProductSpace ps(GroundSet(type.left().size()), GroundSet(type.right().size()));
                    out += is_rectangle(ps, atom) ? "  [rectangle]" : "  [not a rectangle]";
                }
                out += "\n";
            }
        }
    }
    return {kExitOk, std::move(out)};
}

} // namespace siglat::report
