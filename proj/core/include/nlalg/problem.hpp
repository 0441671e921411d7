#pragma once

#include <map>
#include <string>

#include "nlalg/canonical.hpp"
#include "nlalg/forms.hpp"
#include "nlalg/oracle.hpp"

namespace nlalg {

inline constexpr const char* kReportSchemaVersion = "1";

/// A parsed batch problem: one n-field, named objects with component-indexed
/// literals, and a command referencing them.
class ProblemFile {
public:
    ProblemFile(NField field, std::string command, ojson args);

    const NField& nfield() const { return field_; }
    const std::string& command() const { return command_; }
    const ojson& args() const { return args_; }

    std::map<std::string, NMatrix> matrices;
    std::map<std::string, NPoly> polys;
    std::map<std::string, NVector> vectors;
    std::map<std::string, NSubspace> subspaces;
    std::map<std::string, NScalar> scalars;

    const NMatrix& matrix_arg(const std::string& key) const;
    const NPoly& poly_arg(const std::string& key) const;
    const NVector& vector_arg(const std::string& key) const;
    const NSubspace& subspace_arg(const std::string& key) const;
    const NScalar& scalar_arg(const std::string& key) const;
    std::string name_arg(const std::string& key) const;
    bool has_arg(const std::string& key) const;

private:
    NField field_;
    std::string command_;
    ojson args_;
};

ProblemFile parse_problem(const std::string& text);
ProblemFile parse_problem_path(const std::string& path);

struct Report {
    ojson doc;
    int exit_code = 0; // 0 success (warnings allowed), 1 domain error, 2 usage error
};

Report run_command(const ProblemFile& p);
// Parse + run with the full exit-code contract (parse errors become exit 2).
Report run_problem_text(const std::string& text);
Report run_oracle(const std::string& kind, const std::string& text);

} // namespace nlalg
