#include "nlalg/problem.hpp"

#include <fstream>
#include <sstream>

namespace nlalg {

namespace {

using json = nlohmann::json;

[[noreturn]] void syntax(const std::string& msg) { fail(Errc::SyntaxError, msg); }

// component-indexed literal object: keys "1".."n", each present exactly once
std::vector<json> components_of(const json& j, size_t arity, const std::string& what) {
    if (!j.is_object()) syntax(what + ": expected an object of 1-based component literals");
    std::vector<json> out;
    for (size_t i = 1; i <= arity; ++i) {
        std::string key = std::to_string(i);
        if (!j.contains(key)) syntax(what + ": missing component " + key);
        out.push_back(j.at(key));
    }
    if (j.size() != arity) syntax(what + ": extra component keys");
    return out;
}

Vec parse_vec(const json& j, const Field& f, const std::string& what) {
    if (!j.is_array() || j.empty()) syntax(what + ": expected a non-empty array");
    Vec v;
    for (const auto& e : j) {
        if (!e.is_string()) syntax(what + ": element literals are strings");
        v.push_back(parse_element(e.get<std::string>(), f));
    }
    return v;
}

Matrix parse_matrix(const json& j, const Field& f, const std::string& what) {
    if (!j.is_array() || j.empty()) syntax(what + ": expected a row-major array of rows");
    std::vector<Vec> rows;
    for (const auto& r : j) rows.push_back(parse_vec(r, f, what));
    return Matrix::from_rows(f, rows);
}

} // namespace

ProblemFile::ProblemFile(NField field, std::string command, ojson args)
    : field_(std::move(field)), command_(std::move(command)), args_(std::move(args)) {}

std::string ProblemFile::name_arg(const std::string& key) const {
    if (!args_.contains(key) || !args_.at(key).is_string())
        syntax("command argument \"" + key + "\" must name an object");
    return args_.at(key).get<std::string>();
}

bool ProblemFile::has_arg(const std::string& key) const { return args_.contains(key); }

const NMatrix& ProblemFile::matrix_arg(const std::string& key) const {
    std::string n = name_arg(key);
    auto it = matrices.find(n);
    if (it == matrices.end()) fail(Errc::UndefinedName, "no matrix named \"" + n + "\"");
    return it->second;
}

const NPoly& ProblemFile::poly_arg(const std::string& key) const {
    std::string n = name_arg(key);
    auto it = polys.find(n);
    if (it == polys.end()) fail(Errc::UndefinedName, "no polynomial named \"" + n + "\"");
    return it->second;
}

const NVector& ProblemFile::vector_arg(const std::string& key) const {
    std::string n = name_arg(key);
    auto it = vectors.find(n);
    if (it == vectors.end()) fail(Errc::UndefinedName, "no vector named \"" + n + "\"");
    return it->second;
}

const NSubspace& ProblemFile::subspace_arg(const std::string& key) const {
    std::string n = name_arg(key);
    auto it = subspaces.find(n);
    if (it == subspaces.end()) fail(Errc::UndefinedName, "no subspace named \"" + n + "\"");
    return it->second;
}

const NScalar& ProblemFile::scalar_arg(const std::string& key) const {
    std::string n = name_arg(key);
    auto it = scalars.find(n);
    if (it == scalars.end()) fail(Errc::UndefinedName, "no scalar named \"" + n + "\"");
    return it->second;
}

ProblemFile parse_problem(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        syntax(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) syntax("problem file must be a JSON object");
    if (!doc.contains("field") || !doc.at("field").is_array())
        syntax("problem file needs a \"field\" array");
    std::vector<Field> comps;
    for (const auto& f : doc.at("field")) {
        if (!f.is_string()) syntax("field literals are strings");
        comps.push_back(parse_field(f.get<std::string>()));
    }
    NField F = validate_nfield(std::move(comps));
    size_t arity = F.arity();

    if (!doc.contains("command") || !doc.at("command").is_object() ||
        !doc.at("command").contains("name"))
        syntax("problem file needs a \"command\" object with a \"name\"");
    std::string cmd = doc.at("command").at("name").get<std::string>();
    ojson args = doc.at("command").value("args", json::object());

    ProblemFile p(std::move(F), std::move(cmd), std::move(args));

    if (doc.contains("objects")) {
        if (!doc.at("objects").is_object()) syntax("\"objects\" must be an object");
        for (const auto& [name, obj] : doc.at("objects").items()) {
            if (!obj.is_object() || !obj.contains("type") || !obj.contains("components"))
                syntax("object \"" + name + "\" needs \"type\" and \"components\"");
            std::string type = obj.at("type").get<std::string>();
            std::vector<json> comps_json =
                components_of(obj.at("components"), arity, "object \"" + name + "\"");
            if (type == "matrix") {
                NMatrix m;
                for (size_t i = 0; i < arity; ++i)
                    m.parts.push_back(
                        parse_matrix(comps_json[i], p.nfield().component(i), name));
                p.matrices.emplace(name, std::move(m));
            } else if (type == "poly") {
                NPoly q;
                for (size_t i = 0; i < arity; ++i) {
                    if (!comps_json[i].is_string()) syntax("poly literals are strings");
                    q.parts.push_back(parse_poly(comps_json[i].get<std::string>(),
                                                 p.nfield().component(i)));
                }
                p.polys.emplace(name, std::move(q));
            } else if (type == "vector") {
                NVector v;
                for (size_t i = 0; i < arity; ++i)
                    v.parts.push_back(parse_vec(comps_json[i], p.nfield().component(i), name));
                p.vectors.emplace(name, std::move(v));
            } else if (type == "subspace") {
                NSubspace s;
                for (size_t i = 0; i < arity; ++i) {
                    const Field& f = p.nfield().component(i);
                    if (!comps_json[i].is_array()) syntax("subspace literals are vector arrays");
                    std::vector<Vec> rows;
                    for (const auto& r : comps_json[i]) rows.push_back(parse_vec(r, f, name));
                    if (rows.empty()) syntax("subspace \"" + name + "\" has no spanning vectors");
                    s.parts.push_back(
                        Subspace::span_rows(f, rows, static_cast<int>(rows[0].size())));
                }
                p.subspaces.emplace(name, std::move(s));
            } else if (type == "scalar") {
                NScalar c;
                for (size_t i = 0; i < arity; ++i) {
                    if (!comps_json[i].is_string()) syntax("scalar literals are strings");
                    c.parts.push_back(parse_element(comps_json[i].get<std::string>(),
                                                    p.nfield().component(i)));
                }
                p.scalars.emplace(name, std::move(c));
            } else {
                syntax("object \"" + name + "\" has unknown type \"" + type + "\"");
            }
        }
    }
    return p;
}

ProblemFile parse_problem_path(const std::string& path) {
    std::ifstream in(path);
    if (!in) syntax("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_problem(ss.str());
}

// --- command dispatch ---------------------------------------------------------

namespace {

NOperator operator_arg(const ProblemFile& p, const std::string& key) {
    return NOperator(p.nfield(), p.matrix_arg(key));
}

std::vector<InnerProductSpace> spaces_for(const ProblemFile& p, const NMatrix& shape_source) {
    std::vector<InnerProductSpace> sp;
    for (size_t i = 0; i < p.nfield().arity(); ++i) {
        int dim = shape_source.parts[i].rows();
        if (p.has_arg("gram")) {
            sp.emplace_back(p.matrix_arg("gram").parts[i]);
            if (sp.back().dim() != dim) fail(Errc::ShapeMismatch, "Gram matrix shape differs");
        } else {
            sp.emplace_back(p.nfield().component(i), dim);
        }
    }
    return sp;
}

ojson warnings_json(const std::vector<CanonicalWarning>& ws) {
    ojson a = ojson::array();
    for (const auto& w : ws) {
        ojson o;
        o["kind"] = w.kind;
        o["component"] = w.component;
        o["detail"] = w.detail;
        a.push_back(o);
    }
    return a;
}

struct CommandOutput {
    ojson result;
    ojson warnings = ojson::array();
};

CommandOutput cmd_charpoly(const ProblemFile& p) {
    NPoly f = charpoly(operator_arg(p, "operator"));
    ojson comps = ojson::array();
    for (size_t i = 0; i < f.arity(); ++i) {
        ojson c;
        c["index"] = i + 1;
        c["charpoly"] = json_poly(f.parts[i]);
        comps.push_back(c);
    }
    return {ojson{{"components", comps}}};
}

CommandOutput cmd_minpoly(const ProblemFile& p) {
    NPoly f = minpoly(operator_arg(p, "operator"));
    ojson comps = ojson::array();
    for (size_t i = 0; i < f.arity(); ++i) {
        ojson c;
        c["index"] = i + 1;
        c["minpoly"] = json_poly(f.parts[i]);
        comps.push_back(c);
    }
    return {ojson{{"components", comps}}};
}

CommandOutput cmd_canon(const ProblemFile& p) {
    NOperator t = operator_arg(p, "operator");
    std::string form = p.args().value("form", "all");
    CanonicalReport rep = canonical_report(t);
    ojson full = to_json(rep);
    CommandOutput out;
    out.warnings = full["warnings"];
    if (form == "all") {
        out.result = full;
        return out;
    }
    ojson comps = ojson::array();
    for (auto& c : full["components"]) {
        ojson slim;
        slim["index"] = c["index"];
        slim["charpoly"] = c["charpoly"];
        slim["minpoly"] = c["minpoly"];
        slim["invariant_factors"] = c["invariant_factors"];
        if (form == "rational") slim["rational_form"] = c["rational_form"];
        else if (form == "jordan") slim["jordan"] = c["jordan"];
        else if (form == "primary") slim["primary"] = c["primary"];
        else if (form == "dn") slim["dn"] = c["dn"];
        else syntax("canon form must be rational|jordan|primary|dn|all");
        comps.push_back(slim);
    }
    out.result = ojson{{"components", comps}};
    return out;
}

CommandOutput cmd_diagonalize(const ProblemFile& p) {
    NOperator t = operator_arg(p, "operator");
    ojson comps = ojson::array();
    for (size_t i = 0; i < t.arity(); ++i) {
        DiagonalizeComponent d = diagonalize(t.part(i));
        ojson c;
        c["index"] = i + 1;
        c["diagonalizable"] = d.diagonalizable;
        if (d.diagonalizable) {
            c["p"] = json_matrix(*d.p);
            c["d"] = json_matrix(*d.d);
        }
        comps.push_back(c);
    }
    return {ojson{{"components", comps}}};
}

CommandOutput cmd_eigen(const ProblemFile& p) {
    NOperator t = operator_arg(p, "operator");
    ojson comps = ojson::array();
    for (size_t i = 0; i < t.arity(); ++i) {
        EigenComponent e = eigen(t.part(i));
        ojson c;
        c["index"] = i + 1;
        ojson vals = ojson::array();
        for (size_t v = 0; v < e.values.size(); ++v) {
            ojson one;
            one["value"] = json_element(e.values[v]);
            one["eigenspace"] = json_matrix(e.eigenspaces[v]);
            vals.push_back(one);
        }
        c["values"] = vals;
        comps.push_back(c);
    }
    return {ojson{{"components", comps}}};
}

CommandOutput cmd_similar(const ProblemFile& p) {
    NOperator a = operator_arg(p, "a"), b = operator_arg(p, "b");
    return {ojson{{"similar", similar(a, b)}}};
}

CommandOutput cmd_annihilator(const ProblemFile& p) {
    const NSubspace& s = p.subspace_arg("subspace");
    NSubspace ann = annihilator(s);
    NSubspace dbl = annihilator(ann);
    ojson comps = ojson::array();
    for (size_t i = 0; i < s.arity(); ++i) {
        ojson c;
        c["index"] = i + 1;
        c["annihilator"] = json_subspace(ann.parts[i]);
        c["double_annihilator_equals_span"] = dbl.parts[i] == s.parts[i];
        comps.push_back(c);
    }
    return {ojson{{"components", comps}}};
}

CommandOutput cmd_conductor(const ProblemFile& p) {
    NOperator t = operator_arg(p, "operator");
    const NVector& alpha = p.vector_arg("vector");
    ojson comps = ojson::array();
    for (size_t i = 0; i < t.arity(); ++i) {
        Subspace w = p.has_arg("subspace")
                         ? p.subspace_arg("subspace").parts[i]
                         : Subspace(t.nfield().component(i), t.part(i).rows());
        ConductorResult r = t_conductor(t.part(i), alpha.parts[i], w);
        ojson c;
        c["index"] = i + 1;
        c["conductor"] = json_poly(r.conductor);
        c["cyclic_subspace"] = json_subspace(r.cyclic);
        comps.push_back(c);
    }
    return {ojson{{"components", comps}}};
}

CommandOutput cmd_gram_schmidt(const ProblemFile& p) {
    if (!p.args().contains("vectors") || !p.args().at("vectors").is_array())
        syntax("gram-schmidt needs a \"vectors\" array of names");
    std::vector<const NVector*> vs;
    for (const auto& n : p.args().at("vectors")) {
        auto it = p.vectors.find(n.get<std::string>());
        if (it == p.vectors.end()) fail(Errc::UndefinedName, "no vector named " + n.dump());
        vs.push_back(&it->second);
    }
    if (vs.empty()) syntax("gram-schmidt needs at least one vector");
    std::vector<InnerProductSpace> sp;
    for (size_t i = 0; i < p.nfield().arity(); ++i) {
        int dim = static_cast<int>(vs[0]->parts[i].size());
        if (p.has_arg("gram")) sp.emplace_back(p.matrix_arg("gram").parts[i]);
        else sp.emplace_back(p.nfield().component(i), dim);
    }
    ojson comps = ojson::array();
    for (size_t i = 0; i < p.nfield().arity(); ++i) {
        std::vector<Vec> input;
        for (const auto* v : vs) input.push_back(v->parts[i]);
        std::vector<Vec> ortho = gram_schmidt(sp[i], input);
        ojson c;
        c["index"] = i + 1;
        ojson arr = ojson::array();
        for (const auto& v : ortho) arr.push_back(json_vec(v));
        c["orthogonal"] = arr;
        comps.push_back(c);
    }
    return {ojson{{"components", comps}}};
}

CommandOutput cmd_project(const ProblemFile& p) {
    const NVector& beta = p.vector_arg("vector");
    const NSubspace& w = p.subspace_arg("subspace");
    ojson comps = ojson::array();
    for (size_t i = 0; i < p.nfield().arity(); ++i) {
        InnerProductSpace sp = p.has_arg("gram")
                                   ? InnerProductSpace(p.matrix_arg("gram").parts[i])
                                   : InnerProductSpace(p.nfield().component(i),
                                                       static_cast<int>(beta.parts[i].size()));
        BestApprox ba = best_approx(sp, beta.parts[i], w.parts[i]);
        ojson c;
        c["index"] = i + 1;
        c["best_approximation"] = json_vec(ba.alpha);
        c["projection"] = json_matrix(ba.projection);
        c["complement"] = json_subspace(orth_complement(sp, w.parts[i]));
        comps.push_back(c);
    }
    return {ojson{{"components", comps}}};
}

CommandOutput cmd_adjoint(const ProblemFile& p) {
    const NMatrix& t = p.matrix_arg("operator");
    std::vector<InnerProductSpace> sp = spaces_for(p, t);
    ojson comps = ojson::array();
    for (size_t i = 0; i < p.nfield().arity(); ++i) {
        Matrix adj = adjoint(sp[i], t.parts[i]);
        ojson c;
        c["index"] = i + 1;
        c["adjoint"] = json_matrix(adj);
        c["self_adjoint"] = is_self_adjoint(sp[i], t.parts[i]);
        c["normal"] = is_normal(sp[i], t.parts[i]);
        c["orthogonal"] = is_orthogonal_matrix(t.parts[i]);
        comps.push_back(c);
    }
    return {ojson{{"components", comps}}};
}

CommandOutput cmd_spectral(const ProblemFile& p) {
    const NMatrix& t = p.matrix_arg("operator");
    std::vector<InnerProductSpace> sp = spaces_for(p, t);
    ojson comps = ojson::array();
    for (size_t i = 0; i < p.nfield().arity(); ++i) {
        SpectralResolution r = spectral_resolution(sp[i], t.parts[i]);
        ojson c;
        c["index"] = i + 1;
        ojson vals = ojson::array();
        for (size_t j = 0; j < r.values.size(); ++j) {
            ojson one;
            one["value"] = json_element(r.values[j]);
            one["projection"] = json_matrix(r.projections[j]);
            one["lagrange"] = json_poly(r.lagrange[j]);
            vals.push_back(one);
        }
        c["resolution"] = vals;
        if (p.has_arg("map")) {
            std::vector<json> maps = components_of(p.args().at("map"), p.nfield().arity(), "map");
            std::vector<std::pair<FieldElement, FieldElement>> vm;
            const Field& f = p.nfield().component(i);
            for (const auto& pair : maps[i]) {
                if (!pair.is_array() || pair.size() != 2) syntax("map entries are [from, to]");
                vm.emplace_back(parse_element(pair[0].get<std::string>(), f),
                                parse_element(pair[1].get<std::string>(), f));
            }
            c["function"] = json_matrix(spectral_function(r, vm));
        }
        comps.push_back(c);
    }
    return {ojson{{"components", comps}}};
}

CommandOutput cmd_bilinear_diag(const ProblemFile& p) {
    const NMatrix& m = p.matrix_arg("form");
    ojson comps = ojson::array();
    for (size_t i = 0; i < p.nfield().arity(); ++i) {
        BilinearForm f(m.parts[i]);
        SymmetricDiagonalization sd = symmetric_diagonalize(f);
        ojson c;
        c["index"] = i + 1;
        c["p"] = json_matrix(sd.p);
        c["d"] = json_matrix(sd.d);
        c["rank"] = f.rank();
        c["nondegenerate"] = f.nondegenerate();
        if (p.nfield().component(i)->is_ordered()) {
            Signature sg = signature(sd.d);
            c["signature"] = ojson{{"positive", sg.positive},
                                   {"negative", sg.negative},
                                   {"zero", sg.zero}};
        }
        comps.push_back(c);
    }
    return {ojson{{"components", comps}}};
}

CommandOutput cmd_interpolate(const ProblemFile& p) {
    const NVector& pts = p.vector_arg("points");
    const NVector& vals = p.vector_arg("values");
    ojson comps = ojson::array();
    for (size_t i = 0; i < p.nfield().arity(); ++i) {
        Poly f = lagrange_interpolate(pts.parts[i], vals.parts[i]);
        Matrix v = vandermonde(pts.parts[i]);
        ojson c;
        c["index"] = i + 1;
        c["interpolant"] = json_poly(f);
        c["vandermonde_det"] = json_element(det_bareiss(v));
        comps.push_back(c);
    }
    return {ojson{{"components", comps}}};
}

CommandOutput cmd_factor(const ProblemFile& p) {
    const NPoly& f = p.poly_arg("poly");
    CommandOutput out;
    ojson comps = ojson::array();
    for (size_t i = 0; i < f.arity(); ++i) {
        Factorization fac = factor(f.parts[i]);
        ojson c;
        c["index"] = i + 1;
        c["unit"] = json_element(fac.unit);
        ojson fs = ojson::array();
        for (const auto& t : fac.factors) {
            ojson one;
            one["factor"] = json_poly(t.p);
            one["multiplicity"] = t.mult;
            one["certified_irreducible"] = t.certified;
            fs.push_back(one);
        }
        c["factors"] = fs;
        c["complete"] = fac.complete;
        comps.push_back(c);
        if (!fac.complete)
            out.warnings.push_back(ojson{{"kind", "FactorizationIncomplete"},
                                         {"component", i + 1},
                                         {"detail", f.parts[i].str()}});
    }
    out.result = ojson{{"components", comps}};
    return out;
}

CommandOutput cmd_gcd(const ProblemFile& p) {
    const NPoly& f = p.poly_arg("f");
    const NPoly& g = p.poly_arg("g");
    ojson comps = ojson::array();
    for (size_t i = 0; i < f.arity(); ++i) {
        PolyGcd r = gcd_bezout(f.parts[i], g.parts[i]);
        ojson c;
        c["index"] = i + 1;
        c["gcd"] = json_poly(r.d);
        c["u"] = json_poly(r.u);
        c["v"] = json_poly(r.v);
        comps.push_back(c);
    }
    return {ojson{{"components", comps}}};
}

CommandOutput cmd_taylor(const ProblemFile& p) {
    const NPoly& f = p.poly_arg("poly");
    const NScalar& c0 = p.scalar_arg("center");
    ojson comps = ojson::array();
    for (size_t i = 0; i < f.arity(); ++i) {
        auto coeffs = taylor_expand(f.parts[i], c0.parts[i]);
        ojson c;
        c["index"] = i + 1;
        ojson arr = ojson::array();
        for (const auto& x : coeffs) arr.push_back(json_element(x));
        c["coefficients"] = arr;
        comps.push_back(c);
    }
    return {ojson{{"components", comps}}};
}

CommandOutput cmd_nfield_classify(const ProblemFile& p) {
    CharacteristicReport cr = classify_characteristic(p.nfield());
    PrimenessReport pr = classify_primeness(p.nfield());
    ojson out;
    out["characteristic"] = to_string(cr.overall);
    ojson chars = ojson::array();
    for (long c : cr.per_component) chars.push_back(c);
    out["per_component_characteristic"] = chars;
    out["primeness"] = to_string(pr.overall);
    ojson comps = ojson::array();
    for (size_t i = 0; i < p.nfield().arity(); ++i) {
        ojson c;
        c["index"] = i + 1;
        c["name"] = p.nfield().component(i)->name();
        c["prime"] = static_cast<bool>(pr.component_prime[i]);
        ojson subs = ojson::array();
        for (const auto& s : pr.proper_subfields[i]) subs.push_back(s->name());
        c["proper_subfields"] = subs;
        comps.push_back(c);
    }
    out["components"] = comps;
    ojson quasi = ojson::array();
    for (const auto& [idx, f] : pr.quasi) {
        ojson q;
        q["component"] = idx + 1;
        q["subfield"] = f->name();
        quasi.push_back(q);
    }
    out["quasi_subfield"] = quasi;
    return {out};
}

Report finish(const ProblemFile& p, CommandOutput&& out) {
    ojson doc;
    doc["schema_version"] = kReportSchemaVersion;
    doc["status"] = "ok";
    doc["command"] = p.command();
    ojson field = ojson::array();
    for (const auto& f : p.nfield().components()) field.push_back(f->name());
    doc["field"] = field;
    doc["result"] = std::move(out.result);
    doc["warnings"] = std::move(out.warnings);
    return {doc, 0};
}

} // namespace

Report run_command(const ProblemFile& p) {
    const std::string& cmd = p.command();
    if (cmd == "charpoly") return finish(p, cmd_charpoly(p));
    if (cmd == "minpoly") return finish(p, cmd_minpoly(p));
    if (cmd == "canon") return finish(p, cmd_canon(p));
    if (cmd == "diagonalize") return finish(p, cmd_diagonalize(p));
    if (cmd == "eigen") return finish(p, cmd_eigen(p));
    if (cmd == "similar") return finish(p, cmd_similar(p));
    if (cmd == "annihilator") return finish(p, cmd_annihilator(p));
    if (cmd == "conductor") return finish(p, cmd_conductor(p));
    if (cmd == "gram-schmidt") return finish(p, cmd_gram_schmidt(p));
    if (cmd == "project") return finish(p, cmd_project(p));
    if (cmd == "adjoint") return finish(p, cmd_adjoint(p));
    if (cmd == "spectral") return finish(p, cmd_spectral(p));
    if (cmd == "bilinear-diag") return finish(p, cmd_bilinear_diag(p));
    if (cmd == "interpolate") return finish(p, cmd_interpolate(p));
    if (cmd == "factor") return finish(p, cmd_factor(p));
    if (cmd == "gcd") return finish(p, cmd_gcd(p));
    if (cmd == "taylor") return finish(p, cmd_taylor(p));
    if (cmd == "nfield-classify") return finish(p, cmd_nfield_classify(p));
    syntax("unknown command \"" + cmd + "\"");
}

namespace {

Report error_report(const Error& e, const std::string& command) {
    ojson doc;
    doc["schema_version"] = kReportSchemaVersion;
    doc["status"] = e.is_usage() ? "usage-error" : "domain-error";
    doc["command"] = command;
    doc["error"] = ojson{{"code", errc_name(e.code())}, {"message", e.what()}};
    return {doc, e.is_usage() ? 2 : 1};
}

} // namespace

Report run_problem_text(const std::string& text) {
    std::string cmd = "?";
    try {
        ProblemFile p = parse_problem(text);
        cmd = p.command();
        return run_command(p);
    } catch (const Error& e) {
        return error_report(e, cmd);
    }
}

Report run_oracle(const std::string& kind, const std::string& text) {
    std::string cmd = "oracle " + kind;
    try {
        ProblemFile p = parse_problem(text);
        ojson comps = ojson::array();
        for (size_t i = 0; i < p.nfield().arity(); ++i) {
            ojson c;
            c["index"] = i + 1;
            if (kind == "det") {
                c["det"] = json_element(oracle::det(p.matrix_arg("matrix").parts[i]));
            } else if (kind == "roots") {
                ojson arr = ojson::array();
                for (const auto& [r, m] : oracle::roots(p.poly_arg("poly").parts[i])) {
                    ojson one;
                    one["root"] = json_element(r);
                    one["multiplicity"] = m;
                    arr.push_back(one);
                }
                c["roots"] = arr;
            } else if (kind == "factor") {
                ojson arr = ojson::array();
                for (const auto& [q, m] : oracle::factor(p.poly_arg("poly").parts[i])) {
                    ojson one;
                    one["factor"] = json_poly(q);
                    one["multiplicity"] = m;
                    arr.push_back(one);
                }
                c["factors"] = arr;
            } else if (kind == "minpoly") {
                c["minpoly"] = json_poly(oracle::minpoly(p.matrix_arg("matrix").parts[i]));
            } else {
                syntax("unknown oracle kind \"" + kind + "\"");
            }
            comps.push_back(c);
        }
        ojson doc;
        doc["schema_version"] = kReportSchemaVersion;
        doc["status"] = "ok";
        doc["command"] = cmd;
        ojson field = ojson::array();
        for (const auto& f : p.nfield().components()) field.push_back(f->name());
        doc["field"] = field;
        doc["result"] = ojson{{"components", comps}};
        doc["warnings"] = ojson::array();
        return {doc, 0};
    } catch (const Error& e) {
        return error_report(e, cmd);
    }
}

} // namespace nlalg
