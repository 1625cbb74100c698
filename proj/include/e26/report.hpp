#pragma once

// The report document emitted by every CLI subcommand, renderable as stable
// text or JSON. elapsed_ms is the only field allowed to vary between
// identical runs; the text form omits it entirely.

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "e26/ledger.hpp"
#include "e26/theorems.hpp"

namespace e26 {

inline constexpr std::string_view kToolVersion = "1.0.0";

struct ReportEntry {
    std::string id;
    std::string verdict;  // "holds" | "fails" | "error"
    bool agrees = false;
    nlohmann::ordered_json witness = nlohmann::ordered_json::object();
    double elapsed_ms = 0.0;

    bool operator==(const ReportEntry&) const = default;
};

struct ReportDocument {
    std::string version{kToolVersion};
    std::string command;
    std::vector<ReportEntry> outcomes;
    int agree = 0;
    int disagree = 0;
    int errors = 0;

    void add(ReportEntry entry);  // appends and updates the summary counters

    bool operator==(const ReportDocument&) const = default;
};

ReportEntry entry_from_outcome(const ClaimOutcome& outcome);
ReportEntry entry_from_scan(const ScanReport& report, double elapsed_ms);

nlohmann::ordered_json to_json(const ReportDocument& doc);
ReportDocument document_from_json(const nlohmann::ordered_json& j);

// Stable given identical inputs: no timing, no environment.
std::string to_text(const ReportDocument& doc);

}  // namespace e26
