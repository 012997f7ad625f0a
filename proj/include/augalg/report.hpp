#pragma once

// Structured verdicts for theorem and axiom checks.

#include "json.hpp"

#include <string>
#include <utility>

namespace augalg {

using Json = nlohmann::ordered_json;

/// A named check: parameters, per-degree tables, a verdict, and witnesses
/// explaining any failure. A report passes only if every clause holds.
struct CheckReport {
    std::string check;
    Json params = Json::object();
    Json tables = Json::object();
    Json clauses = Json::object();
    Json witnesses = Json::array();
    bool heuristic = false;
    bool pass = true;

    CheckReport() = default;
    explicit CheckReport(std::string name) : check(std::move(name)) {}

    /// Records a clause verdict; a false verdict fails the whole report.
    bool clause(const std::string& name, bool ok) {
        if (clauses.contains(name)) ok = ok && clauses[name].get<bool>();
        clauses[name] = ok;
        pass = pass && ok;
        return ok;
    }
    void fail(const std::string& clause_name, Json witness) {
        clause(clause_name, false);
        witness["clause"] = clause_name;
        witnesses.push_back(std::move(witness));
    }
    /// Folds a sub-report in under a prefix.
    void absorb(const std::string& prefix, const CheckReport& sub) {
        for (auto& [k, v] : sub.clauses.items()) clause(prefix + "." + k, v.get<bool>());
        for (auto w : sub.witnesses) {
            w["clause"] = prefix + "." + w.value("clause", std::string());
            witnesses.push_back(std::move(w));
        }
        if (!sub.tables.empty()) tables[prefix] = sub.tables;
        heuristic = heuristic || sub.heuristic;
        pass = pass && sub.pass;
    }

    Json to_json() const {
        Json j;
        j["check"] = check;
        j["params"] = params;
        j["tables"] = tables;
        j["clauses"] = clauses;
        j["pass"] = pass;
        j["heuristic"] = heuristic;
        j["witnesses"] = witnesses;
        return j;
    }
    static CheckReport from_json(const Json& j) {
        CheckReport r(j.at("check").get<std::string>());
        r.params = j.value("params", Json::object());
        r.tables = j.value("tables", Json::object());
        r.clauses = j.value("clauses", Json::object());
        r.witnesses = j.value("witnesses", Json::array());
        r.pass = j.at("pass").get<bool>();
        r.heuristic = j.value("heuristic", false);
        return r;
    }
};

}  // namespace augalg
