#include <doctest.h>

#include "slab/commands.hpp"
#include "slab/report.hpp"

using namespace slab;

namespace {

Report sample() {
    Report r;
    r.meta = {{"command", "test"}, {"note", "two words"}};
    ReportCase c{"a", {"space X = conv"}, {}, {}};
    c.verdicts.push_back({"skeletal-cep", true, true, true, {"w0", "w1"}, "fine"});
    c.verdicts.push_back({"open-adjoint", true, false, false, {}, "hypothesis-violated: map not perfect"});
    c.conditions.push_back({"ZLBA", false, {"w0"}, ""});
    r.cases.push_back(c);
    r.tallies.push_back({"clusters", 5, 0, ""});
    return r;
}

}  // namespace

TEST_SUITE("report") {
    TEST_CASE("machine form round trips") {
        Report r = sample();
        std::string text = render_machine(r);
        Report back = parse_report(text);
        CHECK(back == r);
        CHECK(render_machine(back) == text);
        CHECK(r.ok());
    }

    TEST_CASE("disagreements are counted") {
        Report r = sample();
        r.cases[0].verdicts[0].alg = false;
        CHECK(r.disagreements() == 1);
        r.cases[0].conditions.push_back({"expect-not-perfect", false, {}, ""});
        CHECK(r.disagreements() == 2);
        r.tallies[0].failures = 3;
        CHECK(r.disagreements() == 5);
        CHECK(parse_report(render_machine(r)) == r);
    }

    TEST_CASE("text rendering") {
        std::string t = render_text(sample());
        CHECK(t.find("[ok] skeletal-cep") != std::string::npos);
        CHECK(t.find("[skip] open-adjoint") != std::string::npos);
        CHECK(t.find("1 cases, 0 disagreements") != std::string::npos);
    }

    TEST_CASE("malformed reports are rejected") {
        std::string good = render_machine(sample());
        CHECK_THROWS_AS(parse_report(""), ReportError);
        CHECK_THROWS_AS(parse_report("slab-report 2\n"), ReportError);
        CHECK_THROWS_AS(parse_report("slab-report 1\n"), ReportError);
        std::string lying = good;
        lying.replace(lying.find("agree 1"), 7, "agree 0");
        CHECK_THROWS_AS(parse_report(lying), ReportError);
        std::string counts = good;
        counts.replace(counts.find("disagreements 0"), 15, "disagreements 4");
        CHECK_THROWS_AS(parse_report(counts), ReportError);
        CHECK_THROWS_AS(parse_report("slab-report 1\ncase a\nsummary cases 1 disagreements 0\n"), ReportError);
        try {
            parse_report("slab-report 1\nbogus\n");
            FAIL("parsed");
        } catch (const ReportError& e) {
            CHECK(e.line == 2);
        }
    }

    TEST_CASE("fuzz reports round trip and replay") {
        FuzzOptions o;
        o.count = 40;
        Report r = cmd_fuzz(o);
        std::string text = render_machine(r);
        CHECK(parse_report(text) == r);
        for (const ReportCase& c : r.cases) {
            INFO(c.id);
            Document d = parse_document(r.dsl_text(c));
            for (const ReportVerdict& v : c.verdicts)
                for (const std::string& w : v.witness) CHECK(d.find(w) != nullptr);
        }
    }
}
