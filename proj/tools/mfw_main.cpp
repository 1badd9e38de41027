// mfw: run, check and generate .mfw programs for the graded matrix
// factorization workbench. Results go to stdout, diagnostics to stderr.
//
// Exit codes: 0 success, 1 usage or parse error, 2 validation error,
// 3 a verify query failed.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mfw/corpus.hpp"
#include "mfw/run.hpp"
#include "mfw/version.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw mfw::ParseError("cannot open file '" + path + "'", 0, 0);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::optional<mfw::Field> parse_field_flag(const std::string& s) {
    if (s.empty()) return std::nullopt;
    if (s == "Q") return mfw::Field::rationals();
    if (s.rfind("GF:", 0) == 0) {
        try {
            unsigned long p = std::stoul(s.substr(3));
            if (p < (1ul << 31)) return mfw::Field::prime(static_cast<std::uint32_t>(p));
        } catch (const std::exception&) {
        }
    }
    throw mfw::ParseError("bad --field value '" + s + "' (use Q or GF:p)", 0, 0);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"mfw - graded matrix factorization workbench"};
    app.set_version_flag("--version", std::string("mfw ") + mfw::kVersion);
    app.require_subcommand(1);

    std::string run_file, run_format = "json", run_field;
    int run_jobs = 1;
    std::size_t run_cap = 20000;
    CLI::App* run = app.add_subcommand("run", "parse, validate and execute a .mfw program");
    run->add_option("file", run_file, "program file")->required();
    run->add_option("--format", run_format, "json|csv|text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    run->add_option("--field", run_field, "override the field: Q or GF:p");
    run->add_option("--jobs", run_jobs, "worker threads for table cells");
    run->add_option("--cap", run_cap, "unknown-count cap for hom computations");

    std::string check_file, check_field;
    CLI::App* check = app.add_subcommand("check", "parse and validate only");
    check->add_option("file", check_file, "program file")->required();
    check->add_option("--field", check_field, "override the field: Q or GF:p");

    std::string corpus_family;
    int corpus_c = 0, corpus_a = 0;
    CLI::App* corpus = app.add_subcommand("corpus", "emit an A-series .mfw program");
    corpus->add_option("family", corpus_family, "family name, e.g. A2")->required();
    corpus->add_option("--c", corpus_c, "exponent of w in F = x^(n+1) + w^c")->required();
    corpus->add_option("--a", corpus_a, "weight of w (c*a = n+1)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e); // prints usage or help text
        return code == 0 ? 0 : 1;
    }

    try {
        if (*run) {
            mfw::RunOptions opts;
            if (run_format == "csv") opts.format = mfw::OutputFormat::Csv;
            else if (run_format == "text") opts.format = mfw::OutputFormat::Text;
            opts.jobs = run_jobs;
            opts.cap = run_cap;
            mfw::Program prog = mfw::parse_program(read_file(run_file), parse_field_flag(run_field));
            mfw::RunOutcome outcome = mfw::run_program(prog, opts);
            std::cout << outcome.output;
            return outcome.verify_failed ? 3 : 0;
        }
        if (*check) {
            mfw::Program prog =
                mfw::parse_program(read_file(check_file), parse_field_flag(check_field));
            mfw::validate_program(prog);
            std::cout << "ok: " << prog.rings.size() << " rings, " << prog.sections.size()
                      << " sections, " << prog.mfs.size() << " factorizations, "
                      << prog.queries.size() << " queries\n";
            return 0;
        }
        if (*corpus) {
            int n = 0;
            try {
                if (corpus_family.size() < 2 || corpus_family[0] != 'A') throw std::exception();
                n = std::stoi(corpus_family.substr(1));
            } catch (const std::exception&) {
                throw mfw::ParseError("unknown family '" + corpus_family + "' (expected A<n>)",
                                      0, 0);
            }
            std::cout << mfw::corpus_program(mfw::FamilySpec{n, corpus_c, corpus_a});
            return 0;
        }
    } catch (const mfw::ParseError& e) {
        std::cerr << "mfw: " << e.what() << "\n";
        return 1;
    } catch (const mfw::MfwError& e) {
        std::cerr << "mfw: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
