#include "e26/report.hpp"

#include <sstream>

namespace e26 {

using nlohmann::ordered_json;

void ReportDocument::add(ReportEntry entry) {
    if (entry.verdict == "error")
        ++errors;
    else if (entry.agrees)
        ++agree;
    else
        ++disagree;
    outcomes.push_back(std::move(entry));
}

ReportEntry entry_from_outcome(const ClaimOutcome& outcome) {
    ReportEntry entry;
    entry.id = outcome.id;
    entry.verdict = std::string(to_string(outcome.computed_verdict));
    entry.agrees = outcome.agrees_with_paper;
    for (const auto& [name, value] : outcome.witness) entry.witness[name] = value;
    if (!outcome.error.empty()) entry.witness["error"] = outcome.error;
    entry.elapsed_ms = outcome.elapsed_ms;
    return entry;
}

ReportEntry entry_from_scan(const ScanReport& report, double elapsed_ms) {
    ReportEntry entry;
    entry.id = report.id;
    entry.verdict = report.passed() ? "holds" : "fails";
    entry.agrees = report.passed();
    entry.witness["bounds"] = report.bounds;
    entry.witness["instances"] = report.instances;
    entry.witness["counterexamples"] = report.counterexamples.size();
    if (!report.witnesses.empty())
        entry.witness["composite_witnesses"] = report.witnesses.size();
    if (!report.counterexamples.empty()) {
        const auto& first = report.counterexamples.front();
        entry.witness["first_counterexample"] = {{"what", first.what},
                                                 {"modulus", first.modulus},
                                                 {"a", first.a},
                                                 {"b", first.b},
                                                 {"value", first.value}};
    }
    entry.elapsed_ms = elapsed_ms;
    return entry;
}

ordered_json to_json(const ReportDocument& doc) {
    ordered_json j;
    j["version"] = doc.version;
    j["command"] = doc.command;
    j["outcomes"] = ordered_json::array();
    for (const auto& entry : doc.outcomes) {
        ordered_json o;
        o["id"] = entry.id;
        o["verdict"] = entry.verdict;
        o["agrees"] = entry.agrees;
        o["witness"] = entry.witness;
        o["elapsed_ms"] = entry.elapsed_ms;
        j["outcomes"].push_back(std::move(o));
    }
    j["summary"] = {{"agree", doc.agree},
                    {"disagree", doc.disagree},
                    {"error", doc.errors}};
    return j;
}

ReportDocument document_from_json(const ordered_json& j) {
    ReportDocument doc;
    doc.version = j.at("version").get<std::string>();
    doc.command = j.at("command").get<std::string>();
    for (const auto& o : j.at("outcomes")) {
        ReportEntry entry;
        entry.id = o.at("id").get<std::string>();
        entry.verdict = o.at("verdict").get<std::string>();
        entry.agrees = o.at("agrees").get<bool>();
        entry.witness = o.at("witness");
        entry.elapsed_ms = o.at("elapsed_ms").get<double>();
        doc.outcomes.push_back(std::move(entry));
    }
    doc.agree = j.at("summary").at("agree").get<int>();
    doc.disagree = j.at("summary").at("disagree").get<int>();
    doc.errors = j.at("summary").at("error").get<int>();
    return doc;
}

namespace {

std::string witness_text(const ordered_json& witness) {
    if (witness.empty()) return "-";
    std::string out;
    for (const auto& [key, value] : witness.items()) {
        if (!out.empty()) out += " ";
        out += key;
        out += "=";
        out += value.is_string() ? value.get<std::string>() : value.dump();
    }
    return out;
}

}  // namespace

std::string to_text(const ReportDocument& doc) {
    std::ostringstream out;
    out << "e26audit " << doc.version << "\n";
    out << "command: " << doc.command << "\n";
    for (const auto& entry : doc.outcomes) {
        out << "  " << entry.id << "  " << entry.verdict << "  "
            << (entry.agrees ? "agree" : "disagree") << "  "
            << witness_text(entry.witness) << "\n";
    }
    out << "summary: agree=" << doc.agree << " disagree=" << doc.disagree
        << " error=" << doc.errors << "\n";
    return out.str();
}

}  // namespace e26
