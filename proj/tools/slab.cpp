#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "slab/commands.hpp"

namespace {

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream s;
        s << std::cin.rdbuf();
        return s.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

slab::Document load(const std::string& path) {
    try {
        return slab::parse_document(read_file(path));
    } catch (const slab::ParseError& e) {
        throw std::runtime_error(path + ":" + e.what());
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Boolean block algebras, block spaces and their dualities"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "machine"}));

    std::string file, name, condition = "all", theorem;
    slab::FuzzOptions fz;
    unsigned n_max = 4, lemma_n_max = 5;

    auto* parse = app.add_subcommand("parse", "Parse a .slab file and print it in normal form");
    parse->add_option("file", file, "Input file, - for stdin")->required();

    auto* dualize = app.add_subcommand("dualize", "Print the dual of a declaration");
    dualize->add_option("file", file)->required();
    dualize->add_option("name", name)->required();

    auto* check = app.add_subcommand("check", "Evaluate conditions on a declaration");
    check->add_option("file", file)->required();
    check->add_option("name", name)->required();
    check->add_option("condition", condition, "Condition name, or all");

    auto* verify = app.add_subcommand("verify", "Run a theorem's geometric and algebraic sides on a map");
    verify->add_option("file", file)->required();
    verify->add_option("theorem", theorem, "Theorem id, or all")->required();
    verify->add_option("map", name)->required();

    auto* fuzz = app.add_subcommand("fuzz", "Random maps through the verdict engine");
    fuzz->add_option("--seed", fz.seed);
    fuzz->add_option("--count", fz.count);
    fuzz->add_option("--max-blocks", fz.max_blocks)->check(CLI::Range(1, 8));

    auto* sweep = app.add_subcommand("contact-sweep", "Exhaustive finite contact algebra sweep");
    sweep->add_option("--n-max", n_max)->check(CLI::Range(0, 5));
    sweep->add_option("--lemma-n-max", lemma_n_max)->check(CLI::Range(0, 5));

    auto* report = app.add_subcommand("report", "Read a machine report and print it");
    report->add_option("file", file)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        slab::Report r;
        if (parse->parsed()) {
            std::cout << slab::print_document(slab::normalize(load(file)));
            return 0;
        }
        if (dualize->parsed()) r = slab::cmd_dualize(load(file), name);
        else if (check->parsed()) r = slab::cmd_check(load(file), name, condition);
        else if (verify->parsed()) r = slab::cmd_verify(load(file), theorem, name);
        else if (fuzz->parsed()) r = slab::cmd_fuzz(fz);
        else if (sweep->parsed()) r = slab::cmd_contact_sweep(n_max, lemma_n_max);
        else if (report->parsed()) r = slab::parse_report(read_file(file));
        std::cout << (format == "machine" ? slab::render_machine(r) : slab::render_text(r));
        return r.ok() ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "slab: " << e.what() << "\n";
        return 2;
    }
}
