#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "slab/commands.hpp"

using namespace slab;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string without_comments(const std::string& text) {
    std::istringstream in(text);
    std::string out, l;
    while (std::getline(in, l))
        if (l.rfind("#", 0) != 0) out += l + "\n";
    return out;
}

std::vector<fs::path> fixtures() {
    std::vector<fs::path> out;
    for (const auto& e : fs::directory_iterator(SLAB_FIXTURE_DIR))
        if (e.path().extension() == ".slab") out.push_back(e.path());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_SUITE("fixtures") {
    TEST_CASE("seven fixtures are present") { CHECK(fixtures().size() == 7); }

    TEST_CASE("fixtures reprint unchanged") {
        for (const fs::path& p : fixtures()) {
            INFO(p.filename().string());
            std::string text = slurp(p);
            CHECK(print_document(normalize(parse_document(text))) == without_comments(text));
        }
    }

    TEST_CASE("verdict vectors match the golden reports") {
        for (const fs::path& p : fixtures()) {
            INFO(p.filename().string());
            fs::path golden = p;
            golden.replace_extension(".report");
            REQUIRE(fs::exists(golden));
            Report r = cmd_verify(parse_document(slurp(p)), "all", "f");
            CHECK(r.ok());
            CHECK(render_machine(r) == slurp(golden));
            CHECK(parse_report(slurp(golden)) == r);
        }
    }
}
