#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace slab {

struct ReportVerdict {
    std::string theorem;
    bool geo = false, alg = false, asserted = true;
    std::vector<std::string> witness;  // names of elem declarations in the case
    std::string note;
    bool agree() const { return geo == alg; }
    bool disagreement() const { return asserted && !agree(); }
    bool operator==(const ReportVerdict&) const = default;
};

struct ReportCondition {
    std::string name;
    bool pass = false;
    std::vector<std::string> witness;
    std::string note;
    bool operator==(const ReportCondition&) const = default;
};

struct ReportCase {
    std::string id;
    std::vector<std::string> dsl;  // declarations, one line each
    std::vector<ReportVerdict> verdicts;
    std::vector<ReportCondition> conditions;
    // A condition whose name starts with "expect-" is a self-check and
    // counts as a disagreement when it fails.
    bool operator==(const ReportCase&) const = default;
};

struct ReportTally {
    std::string check;
    std::size_t cases = 0, failures = 0;
    std::string witness;
    bool operator==(const ReportTally&) const = default;
};

struct Report {
    std::vector<std::pair<std::string, std::string>> meta;
    std::vector<ReportCase> cases;
    std::vector<ReportTally> tallies;

    std::size_t disagreements() const;
    bool ok() const { return disagreements() == 0; }
    std::string dsl_text(const ReportCase& c) const;  // replayable document
    bool operator==(const Report&) const = default;
};

struct ReportError : std::runtime_error {
    int line;
    ReportError(int l, const std::string& msg) : std::runtime_error("report line " + std::to_string(l) + ": " + msg), line(l) {}
};

std::string render_machine(const Report& r);
std::string render_text(const Report& r);
Report parse_report(const std::string& text);

}  // namespace slab
