#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "sdgamma/errors.hpp"
#include "sdgamma/io.hpp"

namespace {

using namespace sdgamma;

constexpr int kExitVerificationFailure = 1;
constexpr int kExitInputError = 2;

struct CommonOptions {
    std::string format = "text";
    std::string input_file;
    std::string h_inline;
    std::string facets_inline;
    int cap = kDefaultEnumerationCap;
    int threads = 1;
};

std::string read_source(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open input file " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// Resolves --input/--h/--facets-inline into a single structured input.
InputDocument resolve_input(const CommonOptions& opt) {
    int sources = !opt.input_file.empty() + !opt.h_inline.empty() + !opt.facets_inline.empty();
    if (sources != 1)
        throw validation_error("provide exactly one input source: --input, --h or --facets-inline");
    if (!opt.input_file.empty()) return parse_input_document(read_source(opt.input_file));
    InputDocument doc;
    if (!opt.h_inline.empty())
        doc.h = parse_count_list(opt.h_inline, VectorRole::H);
    else
        doc.facets = parse_facet_list(opt.facets_inline);
    return doc;
}

void add_common_flags(CLI::App* cmd, CommonOptions& opt, bool with_input) {
    cmd->set_help_flag("--help", "print help");  // frees -h/--h for the h-vector option
    cmd->add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "structured", "json"}));
    cmd->add_option("--cap", opt.cap, "enumeration cap")->check(CLI::PositiveNumber);
    cmd->add_option("--threads", opt.threads, "worker threads")->check(CLI::PositiveNumber);
    if (with_input) {
        cmd->add_option("--input", opt.input_file, "structured input file, or - for stdin");
        cmd->add_option("--h", opt.h_inline, "inline h-vector, e.g. \"1,5,10,10,5,1\"");
        cmd->add_option("--facets-inline", opt.facets_inline, "inline facet list, e.g. \"[[1,2],[2,3]]\"");
    }
}

bool structured(const CommonOptions& opt) { return opt.format != "text"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact face-vector computations for simplicial complexes, their barycentric "
                 "subdivisions, and balanced realizations"};
    app.set_help_flag("--help", "print help");
    app.require_subcommand(1);

    CommonOptions vectors_opt, subdivide_opt, eulerian_opt, ffk_opt, witness_opt, verify_opt;
    int eulerian_n = 4;
    int ffk_modulus = 2;
    std::string ffk_inline;
    int verify_n_max = 6;

    auto* cmd_vectors = app.add_subcommand("vectors", "f/h/g/gamma vectors and their subdivision transfer");
    add_common_flags(cmd_vectors, vectors_opt, true);

    auto* cmd_subdivide = app.add_subcommand("subdivide", "barycentric subdivision of a complex");
    add_common_flags(cmd_subdivide, subdivide_opt, true);

    auto* cmd_eulerian = app.add_subcommand("eulerian", "restricted Eulerian table and gamma families");
    add_common_flags(cmd_eulerian, eulerian_opt, false);
    cmd_eulerian->add_option("n", eulerian_n, "table size")->required()->check(CLI::PositiveNumber);

    auto* cmd_ffk = app.add_subcommand("ffk-check", "closure test for a candidate f-vector");
    add_common_flags(cmd_ffk, ffk_opt, true);
    cmd_ffk->add_option("-d,--modulus", ffk_modulus, "number of colors")->required();
    cmd_ffk->add_option("--f", ffk_inline, "inline f-vector, e.g. \"1,3,2\"");

    auto* cmd_witness = app.add_subcommand("witness", "balanced realization of the subdivision gamma vector");
    add_common_flags(cmd_witness, witness_opt, true);

    auto* cmd_verify = app.add_subcommand("verify", "batch identity, inequality and certificate checks");
    add_common_flags(cmd_verify, verify_opt, false);
    cmd_verify->add_option("n_max", verify_n_max, "largest table size to check")->required()->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_vectors->parsed()) {
            InputDocument in = resolve_input(vectors_opt);
            if (in.f) throw validation_error("vectors expects facets or an h-vector");
            VectorsReport rep = in.facets ? vectors_report_from_facets(*in.facets) : vectors_report_from_h(*in.h);
            std::cout << (structured(vectors_opt) ? render_json(rep) : render_text(rep));
        } else if (cmd_subdivide->parsed()) {
            InputDocument in = resolve_input(subdivide_opt);
            if (!in.facets) throw validation_error("subdivide expects a facet list");
            SubdivideReport rep = subdivide_report(*in.facets);
            std::cout << (structured(subdivide_opt) ? render_json(rep) : render_text(rep));
        } else if (cmd_eulerian->parsed()) {
            if (eulerian_n > eulerian_opt.cap)
                throw capacity_error("table size " + std::to_string(eulerian_n) + " exceeds cap " +
                                     std::to_string(eulerian_opt.cap) + " (raise with --cap)");
            EulerianReport rep = eulerian_report(eulerian_n);
            std::cout << (structured(eulerian_opt) ? render_json(rep) : render_text(rep));
        } else if (cmd_ffk->parsed()) {
            CountVector f;
            if (!ffk_inline.empty()) {
                f = parse_count_list(ffk_inline, VectorRole::F);
            } else {
                InputDocument in = resolve_input(ffk_opt);
                if (!in.f) throw validation_error("ffk-check expects an f-vector (--f or {\"f\": [...]})");
                f = *in.f;
            }
            FfkCheckReport rep = ffk_check_report(f, ffk_modulus);
            std::cout << (structured(ffk_opt) ? render_json(rep) : render_text(rep));
            if (!rep.ok) return kExitVerificationFailure;
        } else if (cmd_witness->parsed()) {
            InputDocument in = resolve_input(witness_opt);
            if (!in.h) throw validation_error("witness expects an h-vector");
            WitnessReport rep = witness_report(*in.h);
            std::cout << (structured(witness_opt) ? render_json(rep) : render_text(rep));
        } else if (cmd_verify->parsed()) {
            VerifyReport rep = run_verification(verify_n_max, verify_opt.threads, verify_opt.cap);
            std::cout << (structured(verify_opt) ? render_json(rep) : render_text(rep));
            if (!rep.all_pass) return kExitVerificationFailure;
        }
    } catch (const refutation_error& e) {
        std::cerr << "refutation: " << e.what() << "\n";
        return kExitVerificationFailure;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInputError;
    }
    return 0;
}
