#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "nlalg/problem.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot open " << path << "\n";
        std::exit(2);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int emit(const nlalg::Report& report, const std::string& out_path, bool pretty) {
    std::string text = pretty ? report.doc.dump(2) : report.doc.dump();
    text.push_back('\n');
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "cannot write " << out_path << "\n";
            return 2;
        }
        out << text;
    }
    return report.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact n-linear algebra engine"};
    app.require_subcommand(1);

    std::string run_file, out_path, oracle_kind, oracle_file, validate_file;
    bool pretty = false;

    CLI::App* run = app.add_subcommand("run", "evaluate a problem file");
    run->add_option("file", run_file, "problem file (JSON)")->required();
    run->add_option("--out", out_path, "write the report to a file");
    run->add_flag("--pretty", pretty, "indent the report");

    CLI::App* oracle = app.add_subcommand("oracle", "run a brute-force reference computation");
    oracle->add_option("kind", oracle_kind, "det | roots | factor | minpoly")->required();
    oracle->add_option("file", oracle_file, "problem file (JSON)")->required();
    oracle->add_flag("--pretty", pretty, "indent the report");

    CLI::App* validate = app.add_subcommand("validate", "parse and validate a problem file");
    validate->add_option("file", validate_file, "problem file (JSON)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (run->parsed()) return emit(nlalg::run_problem_text(slurp(run_file)), out_path, pretty);
    if (oracle->parsed())
        return emit(nlalg::run_oracle(oracle_kind, slurp(oracle_file)), "", pretty);
    if (validate->parsed()) {
        try {
            nlalg::ProblemFile p = nlalg::parse_problem(slurp(validate_file));
            nlalg::ojson doc;
            doc["schema_version"] = nlalg::kReportSchemaVersion;
            doc["status"] = "ok";
            doc["command"] = "validate";
            std::cout << doc.dump() << "\n";
            return 0;
        } catch (const nlalg::Error& e) {
            nlalg::ojson doc;
            doc["schema_version"] = nlalg::kReportSchemaVersion;
            doc["status"] = e.is_usage() ? "usage-error" : "domain-error";
            doc["command"] = "validate";
            doc["error"] = nlalg::ojson{{"code", nlalg::errc_name(e.code())},
                                        {"message", e.what()}};
            std::cout << doc.dump() << "\n";
            return e.is_usage() ? 2 : 1;
        }
    }
    return 2;
}
