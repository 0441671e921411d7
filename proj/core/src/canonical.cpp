#include "nlalg/canonical.hpp"

namespace nlalg {

ojson json_element(const FieldElement& e) { return e.str(); }

ojson json_vec(const Vec& v) {
    ojson a = ojson::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
}

ojson json_matrix(const Matrix& m) {
    ojson rows = ojson::array();
    for (int i = 0; i < m.rows(); ++i) {
        ojson row = ojson::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(row);
    }
    return rows;
}

ojson json_poly(const Poly& p) { return p.str(); }

ojson json_subspace(const Subspace& s) {
    ojson o;
    o["ambient"] = s.ambient();
    o["dim"] = s.dim();
    o["basis"] = json_matrix(s.basis());
    return o;
}

CanonicalReport canonical_report(const NOperator& t) {
    CanonicalReport r;
    r.char_poly = charpoly(t);
    r.min_poly = minpoly(t);
    for (size_t i = 0; i < t.arity(); ++i) {
        const Matrix& a = t.part(i);
        ComponentInvariants inv = snf_invariant_factors(a);
        // cross-consistency: product of the chain is the characteristic
        // polynomial and the head is the minimal polynomial
        Poly prod = Poly::one(a.field());
        for (const auto& q : inv.chain) prod = prod * q;
        if (prod != r.char_poly.parts[i])
            fail(Errc::Internal, "invariant factor product differs from charpoly");
        if (inv.chain.front() != r.min_poly.parts[i])
            fail(Errc::Internal, "invariant factor head differs from minpoly");
        r.invariant_factors.push_back(inv.chain);

        r.diagonal.push_back(diagonalize(a));
        r.rational.push_back(rational_form(a));

        JordanFormComponent jf = jordan_form(a);
        if (!jf.split) {
            std::string detail = jf.failing_factor ? jf.failing_factor->str() : "";
            r.warnings.push_back({jf.factorization_incomplete ? "FactorizationIncomplete"
                                                              : "SplitFailure",
                                  i + 1, detail});
        }
        r.jordan.push_back(std::move(jf));

        try {
            r.primary.emplace_back(primary_decomposition(a));
        } catch (const Error& e) {
            if (e.code() != Errc::NeedsFactorization) throw;
            r.primary.emplace_back(std::nullopt);
            r.warnings.push_back({"NeedsFactorization", i + 1, e.what()});
        }
        try {
            r.dn.emplace_back(dn_decomposition(a));
        } catch (const Error& e) {
            if (e.code() != Errc::SplitFailure) throw;
            r.dn.emplace_back(std::nullopt);
        }
    }
    return r;
}

ojson to_json(const CanonicalReport& r) {
    ojson out;
    ojson comps = ojson::array();
    for (size_t i = 0; i < r.char_poly.parts.size(); ++i) {
        ojson c;
        c["index"] = i + 1;
        c["charpoly"] = json_poly(r.char_poly.parts[i]);
        c["minpoly"] = json_poly(r.min_poly.parts[i]);
        ojson chain = ojson::array();
        for (const auto& q : r.invariant_factors[i]) chain.push_back(json_poly(q));
        c["invariant_factors"] = chain;

        ojson diag;
        diag["diagonalizable"] = r.diagonal[i].diagonalizable;
        if (r.diagonal[i].diagonalizable) {
            diag["p"] = json_matrix(*r.diagonal[i].p);
            diag["d"] = json_matrix(*r.diagonal[i].d);
        }
        c["diagonalize"] = diag;

        c["rational_form"] = json_matrix(r.rational[i].form);

        ojson jd;
        jd["split"] = r.jordan[i].split;
        if (r.jordan[i].split) {
            ojson blocks = ojson::array();
            for (const auto& b : r.jordan[i].blocks) {
                ojson bj;
                bj["eigenvalue"] = json_element(b.eigenvalue);
                bj["size"] = b.size;
                blocks.push_back(bj);
            }
            jd["blocks"] = blocks;
            jd["form"] = json_matrix(*r.jordan[i].form);
        } else if (r.jordan[i].failing_factor) {
            jd["failing_factor"] = json_poly(*r.jordan[i].failing_factor);
        }
        c["jordan"] = jd;

        if (r.primary[i]) {
            ojson parts = ojson::array();
            for (const auto& p : *r.primary[i]) {
                ojson pj;
                pj["prime"] = json_poly(p.prime);
                pj["exponent"] = p.exponent;
                pj["null_space"] = json_subspace(p.w);
                pj["projection"] = json_matrix(p.projection);
                pj["h"] = json_poly(p.h);
                parts.push_back(pj);
            }
            c["primary"] = parts;
        } else {
            c["primary"] = nullptr;
        }

        if (r.dn[i]) {
            ojson dnj;
            dnj["d"] = json_matrix(r.dn[i]->d);
            dnj["n"] = json_matrix(r.dn[i]->n);
            dnj["d_poly"] = json_poly(r.dn[i]->d_poly);
            c["dn"] = dnj;
        } else {
            c["dn"] = nullptr;
        }
        comps.push_back(c);
    }
    out["components"] = comps;
    ojson warns = ojson::array();
    for (const auto& w : r.warnings) {
        ojson wj;
        wj["kind"] = w.kind;
        wj["component"] = w.component;
        wj["detail"] = w.detail;
        warns.push_back(wj);
    }
    out["warnings"] = warns;
    return out;
}

} // namespace nlalg
