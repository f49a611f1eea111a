#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "chvatal/complex.hpp"
#include "chvatal/enumerate.hpp"
#include "chvatal/errors.hpp"
#include "chvatal/json_io.hpp"
#include "chvatal/oracle.hpp"
#include "chvatal/rank3.hpp"
#include "chvatal/transform.hpp"

#ifndef CHVATAL_VERSION
#define CHVATAL_VERSION "0.0.0"
#endif

namespace {

using chvatal::Json;

/// -i accepts a file path or, when the value opens a JSON object, the
/// document itself.
chvatal::Family load_family(const std::string& arg) {
    const auto first = arg.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && arg[first] == '{')
        return chvatal::family_from_string(arg);
    std::ifstream in(arg, std::ios::binary);
    if (!in) throw chvatal::ParseError("cannot open input file \"" + arg + "\"");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return chvatal::family_from_string(buffer.str());
}

void print(const Json& doc) { std::cout << doc.dump(2) << '\n'; }

int run_verify(const std::string& input) {
    const chvatal::Family family = load_family(input);
    const chvatal::Complex complex = chvatal::closure(family);
    Json out = Json::object();
    out["valid"] = true;
    out["vertices"] = family.ground().size();
    out["support"] = chvatal::face_to_json(family.support(), family.ground());
    out["faces"] = family.size();
    out["rank"] = family.rank();
    out["intersecting"] = chvatal::is_intersecting(family);
    out["closure_faces"] = complex.size();
    print(out);
    return 0;
}

int run_compress(const std::string& input, const std::string& a_label,
                 const std::string& b_label, bool trace) {
    const chvatal::Family family = load_family(input);
    const int a = family.ground().id_of(a_label);
    if (a < 0) throw chvatal::PreconditionError("unknown vertex label \"" + a_label + "\"");
    const int b = family.ground().id_of(b_label);
    if (b < 0) throw chvatal::PreconditionError("unknown vertex label \"" + b_label + "\"");
    const chvatal::CompressionResult result = chvatal::two_star_compress(family, a, b);
    print(chvatal::compression_result_to_json(result, family, trace));
    return 0;
}

int run_rank3(const std::string& input) {
    const chvatal::Family family = load_family(input);
    const chvatal::Certificate certificate = chvatal::certify_rank3(family);
    print(chvatal::certificate_to_json(certificate, family.ground()));
    return 0;
}

int run_oracle(const std::string& input) {
    const chvatal::Family family = load_family(input);
    const chvatal::Complex complex = chvatal::closure(family);
    const chvatal::Verdict verdict = chvatal::verify_chvatal(complex);
    Json out = chvatal::verdict_to_json(verdict, family.ground());
    out["closure_faces"] = complex.size();
    print(out);
    return verdict.holds ? 0 : 10;
}

int run_enumerate(int n, bool canonical, bool verify, int jobs, bool huge) {
    if (n == chvatal::kMaxEnumeration && !huge)
        throw chvatal::PreconditionError(
            "n=6 walks 7,828,353 complexes; pass --huge to confirm");
    const chvatal::EnumerationReport report =
        chvatal::enumerate_complexes(n, canonical, verify, jobs);
    print(chvatal::report_to_json(report));
    return report.violations.empty() ? 0 : 10;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verification and transformation toolkit for intersecting families in downsets"};
    app.set_version_flag("--version", std::string("chvatal ") + CHVATAL_VERSION);
    bool schema = false;
    app.add_flag("--schema", schema, "print the family JSON schema and exit");
    app.require_subcommand(0, 1);

    std::string input;
    const std::string input_help = "family document: a file path, or the JSON itself";

    CLI::App* verify_cmd = app.add_subcommand("verify", "validate a family and report basic statistics");
    verify_cmd->add_option("-i,--input", input, input_help)->required();

    std::string a_label;
    std::string b_label;
    bool trace = false;
    CLI::App* compress_cmd =
        app.add_subcommand("compress", "compress a family inside two stars into one star");
    compress_cmd->add_option("-i,--input", input, input_help)->required();
    compress_cmd->add_option("--a", a_label, "first star vertex")->required();
    compress_cmd->add_option("--b", b_label, "second star vertex")->required();
    compress_cmd->add_flag("--trace", trace, "include the full flip trace in the output");

    CLI::App* rank3_cmd =
        app.add_subcommand("rank3", "certify a rank <= 3 intersecting family against its best star");
    rank3_cmd->add_option("-i,--input", input, input_help)->required();

    CLI::App* oracle_cmd =
        app.add_subcommand("oracle", "brute-force verdict for the closure of a family");
    oracle_cmd->add_option("-i,--input", input, input_help)->required();

    int n = 0;
    bool canonical = false;
    bool verify_flag = false;
    bool huge = false;
    int jobs = 1;
    CLI::App* enumerate_cmd =
        app.add_subcommand("enumerate", "walk every complex on n vertices");
    enumerate_cmd->add_option("--n", n, "ground set size (0..6)")->required();
    enumerate_cmd->add_flag("--canonical", canonical, "count and reduce by vertex relabeling");
    enumerate_cmd->add_flag("--verify", verify_flag, "run the oracle on every complex");
    enumerate_cmd->add_option("--jobs", jobs, "worker threads");
    enumerate_cmd->add_flag("--huge", huge, "allow the n=6 run");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (schema) {
            std::cout << chvatal::family_json_schema() << '\n';
            return 0;
        }
        if (app.got_subcommand(verify_cmd)) return run_verify(input);
        if (app.got_subcommand(compress_cmd)) return run_compress(input, a_label, b_label, trace);
        if (app.got_subcommand(rank3_cmd)) return run_rank3(input);
        if (app.got_subcommand(oracle_cmd)) return run_oracle(input);
        if (app.got_subcommand(enumerate_cmd))
            return run_enumerate(n, canonical, verify_flag, jobs, huge);
        std::cerr << "error: a subcommand is required; see --help\n";
        return 2;
    } catch (const chvatal::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const chvatal::PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
}
