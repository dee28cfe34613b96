#include "slab/report.hpp"

#include <sstream>

namespace slab {

namespace {

constexpr const char* kHeader = "slab-report 1";

std::string one_line(std::string s) {
    for (char& c : s)
        if (c == '\n' || c == '\r') c = ' ';
    return s;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
    return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

bool is_disagreeing(const ReportCondition& c) { return !c.pass && c.name.rfind("expect-", 0) == 0; }

std::size_t count_disagreements(const Report& r) {
    std::size_t k = 0;
    for (const ReportCase& c : r.cases) {
        for (const ReportVerdict& v : c.verdicts) k += v.disagreement();
        for (const ReportCondition& x : c.conditions) k += is_disagreeing(x);
    }
    for (const ReportTally& t : r.tallies) k += t.failures;
    return k;
}

// Reads "key value" pairs from a line; "note" and tally "witness" take the rest.
class Fields {
public:
    Fields(const std::string& line, int lineno) : line_(line), lineno_(lineno) {}

    std::string word() {
        skip();
        if (pos_ >= line_.size()) throw ReportError(lineno_, "unexpected end of line");
        std::size_t j = line_.find(' ', pos_);
        if (j == std::string::npos) j = line_.size();
        std::string w = line_.substr(pos_, j - pos_);
        pos_ = j;
        return w;
    }
    void expect(const std::string& w) {
        std::string got = word();
        if (got != w) throw ReportError(lineno_, "expected '" + w + "', found '" + got + "'");
    }
    bool flag() {
        std::string w = word();
        if (w != "0" && w != "1") throw ReportError(lineno_, "expected 0 or 1, found '" + w + "'");
        return w == "1";
    }
    std::size_t number() {
        std::string w = word();
        try {
            std::size_t used = 0;
            unsigned long long v = std::stoull(w, &used);
            if (used != w.size()) throw std::invalid_argument(w);
            return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
            throw ReportError(lineno_, "expected a count, found '" + w + "'");
        }
    }
    bool done() {
        skip();
        return pos_ >= line_.size();
    }
    std::string rest() {
        if (pos_ < line_.size() && line_[pos_] == ' ') ++pos_;
        std::string r = line_.substr(pos_);
        pos_ = line_.size();
        return r;
    }
    int lineno() const { return lineno_; }

private:
    void skip() {
        while (pos_ < line_.size() && line_[pos_] == ' ') ++pos_;
    }
    std::string line_;
    std::size_t pos_ = 0;
    int lineno_;
};

}  // namespace

std::size_t Report::disagreements() const { return count_disagreements(*this); }

std::string Report::dsl_text(const ReportCase& c) const {
    std::string out;
    for (const std::string& l : c.dsl) out += l + "\n";
    return out;
}

std::string render_machine(const Report& r) {
    std::ostringstream out;
    out << kHeader << "\n";
    for (const auto& [k, v] : r.meta) out << "meta " << k << " " << one_line(v) << "\n";
    for (const ReportCase& c : r.cases) {
        out << "case " << c.id << "\n";
        for (const std::string& l : c.dsl) out << "dsl " << one_line(l) << "\n";
        for (const ReportVerdict& v : c.verdicts) {
            out << "verdict " << v.theorem << " geo " << v.geo << " alg " << v.alg << " agree " << v.agree() << " asserted " << v.asserted;
            if (!v.witness.empty()) out << " witness " << join(v.witness, ",");
            if (!v.note.empty()) out << " note " << one_line(v.note);
            out << "\n";
        }
        for (const ReportCondition& x : c.conditions) {
            out << "condition " << x.name << " pass " << x.pass;
            if (!x.witness.empty()) out << " witness " << join(x.witness, ",");
            if (!x.note.empty()) out << " note " << one_line(x.note);
            out << "\n";
        }
        out << "endcase\n";
    }
    for (const ReportTally& t : r.tallies) {
        out << "tally " << t.check << " cases " << t.cases << " failures " << t.failures;
        if (!t.witness.empty()) out << " witness " << one_line(t.witness);
        out << "\n";
    }
    out << "summary cases " << r.cases.size() << " disagreements " << r.disagreements() << "\n";
    return out.str();
}

std::string render_text(const Report& r) {
    std::ostringstream out;
    for (const auto& [k, v] : r.meta) out << k << ": " << v << "\n";
    for (const ReportCase& c : r.cases) {
        out << "case " << c.id << "\n";
        for (const std::string& l : c.dsl) out << "  | " << l << "\n";
        for (const ReportVerdict& v : c.verdicts) {
            const char* mark = !v.asserted ? "skip" : v.agree() ? "ok" : "FAIL";
            out << "  [" << mark << "] " << v.theorem << ": geometric " << (v.geo ? "yes" : "no") << ", algebraic "
                << (v.alg ? "yes" : "no");
            if (!v.witness.empty()) out << ", witness " << join(v.witness, ", ");
            if (!v.note.empty()) out << " (" << v.note << ")";
            out << "\n";
        }
        for (const ReportCondition& x : c.conditions) {
            out << "  " << x.name << ": " << (x.pass ? "pass" : "fail");
            if (!x.witness.empty()) out << ", witness " << join(x.witness, ", ");
            if (!x.note.empty()) out << " (" << x.note << ")";
            out << "\n";
        }
    }
    for (const ReportTally& t : r.tallies) {
        out << t.check << ": " << t.cases << " cases, " << t.failures << " failures";
        if (!t.witness.empty()) out << ", first at " << t.witness;
        out << "\n";
    }
    out << r.cases.size() << " cases, " << r.disagreements() << " disagreements\n";
    return out.str();
}

Report parse_report(const std::string& text) {
    Report r;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool header = false, summary = false;
    ReportCase* open = nullptr;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!header) {
            if (line != kHeader) throw ReportError(lineno, "missing header '" + std::string(kHeader) + "'");
            header = true;
            continue;
        }
        if (summary) throw ReportError(lineno, "content after summary");
        Fields f(line, lineno);
        std::string kind = f.word();
        auto witness_list = [&](const std::string& w) {
            std::vector<std::string> v = split(w, ',');
            for (const std::string& s : v)
                if (s.empty()) throw ReportError(lineno, "empty witness name");
            return v;
        };
        if (kind == "meta") {
            if (open) throw ReportError(lineno, "meta inside a case");
            std::string k = f.word();
            r.meta.emplace_back(k, f.rest());
        } else if (kind == "case") {
            if (open) throw ReportError(lineno, "nested case");
            r.cases.push_back(ReportCase{f.word(), {}, {}, {}});
            open = &r.cases.back();
            if (!f.done()) throw ReportError(lineno, "trailing text after case id");
        } else if (kind == "dsl") {
            if (!open) throw ReportError(lineno, "dsl outside a case");
            open->dsl.push_back(f.rest());
        } else if (kind == "verdict") {
            if (!open) throw ReportError(lineno, "verdict outside a case");
            ReportVerdict v;
            v.theorem = f.word();
            f.expect("geo");
            v.geo = f.flag();
            f.expect("alg");
            v.alg = f.flag();
            f.expect("agree");
            bool agree = f.flag();
            if (agree != v.agree()) throw ReportError(lineno, "agree flag contradicts the verdicts");
            f.expect("asserted");
            v.asserted = f.flag();
            while (!f.done()) {
                std::string k = f.word();
                if (k == "witness" && v.witness.empty()) v.witness = witness_list(f.word());
                else if (k == "note") v.note = f.rest();
                else throw ReportError(lineno, "unexpected field '" + k + "'");
            }
            open->verdicts.push_back(std::move(v));
        } else if (kind == "condition") {
            if (!open) throw ReportError(lineno, "condition outside a case");
            ReportCondition x;
            x.name = f.word();
            f.expect("pass");
            x.pass = f.flag();
            while (!f.done()) {
                std::string k = f.word();
                if (k == "witness" && x.witness.empty()) x.witness = witness_list(f.word());
                else if (k == "note") x.note = f.rest();
                else throw ReportError(lineno, "unexpected field '" + k + "'");
            }
            open->conditions.push_back(std::move(x));
        } else if (kind == "endcase") {
            if (!open) throw ReportError(lineno, "endcase without case");
            open = nullptr;
        } else if (kind == "tally") {
            if (open) throw ReportError(lineno, "tally inside a case");
            ReportTally t;
            t.check = f.word();
            f.expect("cases");
            t.cases = f.number();
            f.expect("failures");
            t.failures = f.number();
            if (!f.done()) {
                f.expect("witness");
                t.witness = f.rest();
            }
            r.tallies.push_back(std::move(t));
        } else if (kind == "summary") {
            if (open) throw ReportError(lineno, "summary inside a case");
            f.expect("cases");
            std::size_t n = f.number();
            f.expect("disagreements");
            std::size_t k = f.number();
            if (n != r.cases.size()) throw ReportError(lineno, "summary case count does not match");
            if (k != r.disagreements()) throw ReportError(lineno, "summary disagreement count does not match");
            summary = true;
        } else {
            throw ReportError(lineno, "unknown record '" + kind + "'");
        }
    }
    if (!header) throw ReportError(lineno, "empty report");
    if (open) throw ReportError(lineno, "unterminated case");
    if (!summary) throw ReportError(lineno, "missing summary");
    return r;
}

}  // namespace slab
