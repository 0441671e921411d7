#include <doctest.h>

#include "helpers.hpp"
#include "nlalg/operators.hpp"
#include "nlalg/oracle.hpp"

using namespace nlalg;
using namespace testutil;

namespace {

Matrix conj(const Matrix& p, const Matrix& a) { return inverse(p) * a * p; }

NOperator make_op(const std::vector<Field>& fs, const std::vector<Matrix>& ms) {
    NMatrix nm{ms};
    return NOperator(validate_nfield(fs), nm);
}

} // namespace

TEST_CASE("characteristic polynomials of the worked 4-matrix example") {
    // all four components, oracle authoritative
    Matrix a1 = mat(Z2(), {{"1", "0", "1"}, {"0", "1", "0"}, {"1", "0", "0"}});
    Field z3 = FieldDescriptor::prime_field(3);
    Matrix a2 = mat(z3, {{"2", "1", "0", "1"},
                         {"1", "1", "0", "0"},
                         {"0", "2", "2", "1"},
                         {"0", "0", "0", "1"}});
    Matrix a3 = mat(Z5(), {{"0", "4"}, {"1", "0"}});
    Matrix a4 = mat(Z7(), {{"1", "0", "0", "0", "0"},
                           {"0", "1", "0", "0", "0"},
                           {"0", "4", "6", "0", "1"},
                           {"0", "0", "0", "5", "0"},
                           {"0", "0", "0", "0", "3"}});
    CHECK(charpoly(a1) == pp(Z2(), "x^3+1"));
    CHECK(charpoly(a3) == pp(Z5(), "x^2+1"));
    for (const Matrix& m : {a1, a3}) CHECK(charpoly(m) == oracle::charpoly(m));
    CHECK(charpoly(a2) == oracle::charpoly(a2));
    CHECK(charpoly(a4) == oracle::charpoly(a4));
    // the diagonal 5x5 component factors off its entries
    CHECK(charpoly(a4) ==
          pp(Z7(), "x-1") * pp(Z7(), "x-1") * pp(Z7(), "x-6") * pp(Z7(), "x-5") * pp(Z7(), "x-3"));
}

TEST_CASE("identity and companion basics") {
    CHECK(charpoly(Matrix::identity(Q(), 2)) == pp(Q(), "x^2-2*x+1"));
    CHECK(minpoly(Matrix(Q(), 3, 3)) == pp(Q(), "x"));
    Poly q = pp(Q(), "x^3+2*x^2-x+5");
    Matrix c = companion(q);
    CHECK(charpoly(c) == q);
    CHECK(minpoly(c) == q);
}

TEST_CASE("minimal polynomial of the worked 3-matrix example") {
    Field z3 = FieldDescriptor::prime_field(3);
    Matrix m1 = mat(z3, {{"1", "1", "0", "0"},
                         {"-1", "-1", "0", "0"},
                         {"-2", "-2", "2", "1"},
                         {"1", "1", "-1", "0"}});
    Matrix m2 = mat(Z5(), {{"3", "1", "-1"}, {"2", "2", "-1"}, {"2", "2", "0"}});
    Matrix m3 = mat(Q(), {{"0", "-1"}, {"1", "0"}});

    Poly p1 = pp(z3, "x^2") * pp(z3, "x-1") * pp(z3, "x-1");
    Poly p2 = pp(Z5(), "x-1") * pp(Z5(), "x-2") * pp(Z5(), "x-2");
    CHECK(minpoly(m1) == p1);
    CHECK(minpoly(m2) == p2);
    CHECK(minpoly(m3) == pp(Q(), "x^2+1"));
    CHECK(charpoly(m1) == p1);
    CHECK(charpoly(m2) == p2);
    CHECK(charpoly(m3) == pp(Q(), "x^2+1"));
}

TEST_CASE("minimal polynomial matches the divisor-trial oracle over finite fields") {
    for (const auto& f : {Z2(), Z5(), GF4()}) {
        Rng rng(113);
        for (int i = 0; i < 25; ++i) {
            std::uniform_int_distribution<int> dim(1, 4);
            Matrix a = rand_matrix(f, dim(rng), dim(rng), rng);
            if (!a.is_square()) a = rand_matrix(f, 3, 3, rng);
            CHECK(minpoly(a) == oracle::minpoly(a));
        }
    }
}

TEST_CASE("Cayley-Hamilton on random operators") {
    for (const auto& f : corpus_fields()) {
        Rng rng(127);
        for (int i = 0; i < 30; ++i) {
            std::uniform_int_distribution<int> dim(2, 4);
            int n = dim(rng);
            Matrix a = rand_matrix(f, n, n, rng);
            CHECK(eval_poly_at_matrix(charpoly(a), a).is_zero());
        }
    }
}

TEST_CASE("Smith normal form invariants") {
    Poly q = pp(Q(), "x^4-x-1");
    ComponentInvariants inv = snf_invariant_factors(companion(q));
    REQUIRE(inv.chain.size() == 1);
    CHECK(inv.chain[0] == q);

    ComponentInvariants id2 = snf_invariant_factors(Matrix::identity(Q(), 2));
    REQUIRE(id2.chain.size() == 2);
    CHECK(id2.chain[0] == pp(Q(), "x-1"));
    CHECK(id2.chain[1] == pp(Q(), "x-1"));

    for (const auto& f : corpus_fields()) {
        Rng rng(131);
        for (int i = 0; i < 15; ++i) {
            std::uniform_int_distribution<int> dim(2, 4);
            int n = dim(rng);
            Matrix a = rand_matrix(f, n, n, rng);
            ComponentInvariants ci = snf_invariant_factors(a);
            // chain divisibility, product = charpoly, head = minpoly
            Poly prod = Poly::one(f);
            for (size_t k = 0; k + 1 < ci.chain.size(); ++k)
                CHECK(poly_divides(ci.chain[k + 1], ci.chain[k]));
            for (const auto& p : ci.chain) {
                CHECK(p.is_monic());
                prod = prod * p;
            }
            CHECK(prod == charpoly(a));
            CHECK(ci.chain.front() == minpoly(a));
            // the transforms are unimodular and diagonalize xI - A
            PolyMatrix xia = PolyMatrix::x_identity_minus(a);
            CHECK((ci.snf.u * xia * ci.snf.v) == ci.snf.d);
            CHECK(poly_det_bareiss(ci.snf.u).degree() == 0);
            CHECK(poly_det_bareiss(ci.snf.v).degree() == 0);
            CHECK(ci.snf.d.is_diagonal());
        }
    }
}

TEST_CASE("rational canonical form") {
    Poly q = pp(Q(), "x^3-2*x+4");
    Matrix c = companion(q);
    RationalFormComponent rf = rational_form(c);
    CHECK(rf.form == c);

    RationalFormComponent two_blocks = rational_form(Matrix::identity(Q(), 2));
    CHECK(two_blocks.chain.size() == 2);
    CHECK(two_blocks.form == Matrix::identity(Q(), 2));

    Matrix rot = mat(Q(), {{"0", "-1"}, {"1", "0"}});
    RationalFormComponent rrot = rational_form(rot);
    CHECK(rrot.form == companion(pp(Q(), "x^2+1")));

    // transition bases conjugate exactly
    for (const auto& f : corpus_fields()) {
        Rng rng(137);
        for (int i = 0; i < 12; ++i) {
            std::uniform_int_distribution<int> dim(2, 4);
            int n = dim(rng);
            Matrix a = rand_matrix(f, n, n, rng);
            RationalFormComponent rc = rational_form(a, true);
            REQUIRE(rc.transition.has_value());
            CHECK(conj(*rc.transition, a) == rc.form);
        }
    }
}

TEST_CASE("rational form is a similarity invariant") {
    for (const auto& f : corpus_fields()) {
        Rng rng(139);
        for (int i = 0; i < 10; ++i) {
            std::uniform_int_distribution<int> dim(2, 4);
            int n = dim(rng);
            Matrix a = rand_matrix(f, n, n, rng);
            Matrix p = rand_invertible(f, n, rng);
            Matrix b = conj(p, a);
            CHECK(rational_form(a).form == rational_form(b).form);
            CHECK(similar(a, b));
            CHECK(similar(a, rational_form(a).form));
        }
    }
    CHECK_FALSE(similar(mat(Q(), {{"1", "0"}, {"0", "2"}}), Matrix::identity(Q(), 2)));
}

TEST_CASE("Jordan form") {
    Matrix nil = mat(Q(), {{"0", "0"}, {"1", "0"}});
    JordanFormComponent j = jordan_form(nil);
    REQUIRE(j.split);
    REQUIRE(j.blocks.size() == 1);
    CHECK(j.blocks[0].eigenvalue == el(Q(), "0"));
    CHECK(j.blocks[0].size == 2);
    CHECK(*j.form == nil);

    JordanFormComponent fail = jordan_form(mat(Q(), {{"0", "-1"}, {"1", "0"}}));
    CHECK_FALSE(fail.split);
    REQUIRE(fail.failing_factor.has_value());
    CHECK(*fail.failing_factor == pp(Q(), "x^2+1"));

    // worked example component over GF(3): blocks J2(0), J2(1)
    Field z3 = FieldDescriptor::prime_field(3);
    Matrix m1 = mat(z3, {{"1", "1", "0", "0"},
                         {"-1", "-1", "0", "0"},
                         {"-2", "-2", "2", "1"},
                         {"1", "1", "-1", "0"}});
    JordanFormComponent jm = jordan_form(m1);
    REQUIRE(jm.split);
    REQUIRE(jm.blocks.size() == 2);
    CHECK(jm.blocks[0].eigenvalue == el(z3, "0"));
    CHECK(jm.blocks[0].size == 2);
    CHECK(jm.blocks[1].eigenvalue == el(z3, "1"));
    CHECK(jm.blocks[1].size == 2);
    CHECK(similar(*jm.form, m1)); // the block data reconstructs A up to similarity

    // block sizes are non-increasing within an eigenvalue
    Matrix big(Q(), 3, 3);
    big.at(1, 0) = el(Q(), "1"); // J2(0) + J1(0)
    JordanFormComponent jb = jordan_form(big);
    REQUIRE(jb.blocks.size() == 2);
    CHECK(jb.blocks[0].size >= jb.blocks[1].size);
}

TEST_CASE("eigenvalues and eigenspaces") {
    Matrix a = mat(Z5(), {{"0", "4"}, {"1", "0"}});
    EigenComponent e = eigen(a);
    REQUIRE(e.values.size() == 2);
    CHECK(e.values[0] == el(Z5(), "2"));
    CHECK(e.values[1] == el(Z5(), "3"));
    for (size_t v = 0; v < e.values.size(); ++v) {
        REQUIRE(e.eigenspaces[v].cols() >= 1);
        Vec x = e.eigenspaces[v].col(0);
        CHECK(a.apply(x) == vec_scale(e.values[v], x));
    }

    EigenComponent id = eigen(Matrix::identity(Q(), 3));
    REQUIRE(id.values.size() == 1);
    CHECK(id.values[0].is_one());
    CHECK(id.eigenspaces[0].cols() == 3);

    CHECK(eigen(mat(Q(), {{"0", "-1"}, {"1", "0"}})).values.empty());
}

TEST_CASE("eigenvectors for distinct values are independent") {
    for (const auto& f : corpus_fields()) {
        Rng rng(149);
        for (int i = 0; i < 20; ++i) {
            Matrix a = rand_matrix(f, 3, 3, rng);
            EigenComponent e = eigen(a);
            std::vector<Vec> picks;
            for (size_t v = 0; v < e.values.size(); ++v)
                if (e.eigenspaces[v].cols() > 0) picks.push_back(e.eigenspaces[v].col(0));
            if (picks.size() < 2) continue;
            Matrix m = Matrix::from_cols(f, picks);
            CHECK(rref(m).rank == m.cols());
        }
    }
}

TEST_CASE("diagonalization") {
    // idempotents satisfy x^2 - x
    Matrix e = mat(Q(), {{"1", "0"}, {"1", "0"}});
    CHECK((e * e) == e);
    CHECK(diagonalize(e).diagonalizable);

    Matrix j2(Q(), 2, 2);
    j2.at(1, 0) = el(Q(), "1");
    CHECK_FALSE(diagonalize(j2).diagonalizable);

    DiagonalizeComponent d = diagonalize(mat(Z5(), {{"0", "4"}, {"1", "0"}}));
    REQUIRE(d.diagonalizable);
    CHECK(d.d->at(0, 0) == el(Z5(), "2"));
    CHECK(d.d->at(1, 1) == el(Z5(), "3"));
    CHECK(conj(*d.p, mat(Z5(), {{"0", "4"}, {"1", "0"}})) == *d.d);

    // eigenspace dimensions fill the space exactly when diagonalizable
    for (const auto& f : corpus_fields()) {
        Rng rng(151);
        for (int i = 0; i < 20; ++i) {
            Matrix a = rand_matrix(f, 3, 3, rng);
            DiagonalizeComponent dc = diagonalize(a);
            EigenComponent eg = eigen(a);
            int sum = 0;
            for (const auto& es : eg.eigenspaces) sum += es.cols();
            CHECK(dc.diagonalizable == (sum == 3));
            if (dc.diagonalizable) CHECK(conj(*dc.p, a) == *dc.d);
        }
    }
}

TEST_CASE("primary decomposition") {
    Field z3 = FieldDescriptor::prime_field(3);
    Matrix m1 = mat(z3, {{"1", "1", "0", "0"},
                         {"-1", "-1", "0", "0"},
                         {"-2", "-2", "2", "1"},
                         {"1", "1", "-1", "0"}});
    auto parts = primary_decomposition(m1);
    REQUIRE(parts.size() == 2);
    Matrix sum(z3, 4, 4);
    for (const auto& p : parts) sum = sum + p.projection;
    CHECK(sum.is_identity());
    CHECK((parts[0].projection * parts[1].projection).is_zero());
    for (const auto& p : parts) {
        CHECK(p.projection * p.projection == p.projection);
        CHECK(m1 * p.projection == p.projection * m1);
        CHECK(eval_poly_at_matrix(p.h, m1) == p.projection);
        // restriction to W_i has minimal polynomial prime^exponent
        Matrix r = restriction(m1, p.w);
        CHECK(minpoly(r) == p.prime.pow(p.exponent));
    }

    // irreducible minimal polynomial: a single projection, the identity
    Matrix rot = mat(Q(), {{"0", "-1"}, {"1", "0"}});
    auto single = primary_decomposition(rot);
    REQUIRE(single.size() == 1);
    CHECK(single[0].projection.is_identity());

    // diagonalizable case: the W_i are the eigenspaces (matched by root)
    Matrix dg = mat(Z5(), {{"0", "4"}, {"1", "0"}});
    auto dparts = primary_decomposition(dg);
    EigenComponent eg = eigen(dg);
    REQUIRE(dparts.size() == eg.values.size());
    for (const auto& part : dparts) {
        REQUIRE(part.prime.degree() == 1);
        FieldElement root = -part.prime.coeff(0);
        bool matched = false;
        for (size_t i = 0; i < eg.values.size(); ++i)
            if (eg.values[i] == root) {
                CHECK(part.w == Subspace::span_cols(eg.eigenspaces[i]));
                matched = true;
            }
        CHECK(matched);
    }
}

TEST_CASE("D + N decomposition") {
    // J2(c): D = cI and N is the shift
    Matrix j(Q(), 2, 2);
    j.at(0, 0) = el(Q(), "5");
    j.at(1, 1) = el(Q(), "5");
    j.at(1, 0) = el(Q(), "1");
    DnPair dn = dn_decomposition(j);
    CHECK(dn.d == mat(Q(), {{"5", "0"}, {"0", "5"}}));
    CHECK(dn.n == mat(Q(), {{"0", "0"}, {"1", "0"}}));

    // diagonalizable: N = 0
    DnPair dd = dn_decomposition(mat(Z5(), {{"0", "4"}, {"1", "0"}}));
    CHECK(dd.n.is_zero());

    // nilpotent: D = 0 and charpoly is x^n
    Matrix nil(Q(), 3, 3);
    nil.at(1, 0) = el(Q(), "1");
    nil.at(2, 1) = el(Q(), "1");
    DnPair dn2 = dn_decomposition(nil);
    CHECK(dn2.d.is_zero());
    CHECK(charpoly(nil) == pp(Q(), "x^3"));

    CHECK_THROWS_AS(dn_decomposition(mat(Q(), {{"0", "-1"}, {"1", "0"}})), Error);

    // identities on random split operators
    for (const auto& f : corpus_fields()) {
        Rng rng(157);
        for (int i = 0; i < 20; ++i) {
            Matrix a = rand_matrix(f, 3, 3, rng);
            DnPair pair;
            try {
                pair = dn_decomposition(a);
            } catch (const Error& e) {
                CHECK(e.code() == Errc::SplitFailure);
                continue;
            }
            CHECK(pair.d + pair.n == a);
            CHECK(pair.d * pair.n == pair.n * pair.d);
            CHECK(diagonalize(pair.d).diagonalizable);
            Matrix npow = pair.n;
            for (int k = 1; k < 3; ++k) npow = npow * pair.n;
            CHECK(npow.is_zero());
            CHECK(eval_poly_at_matrix(pair.d_poly, a) == pair.d);
        }
    }
}

TEST_CASE("conductors, annihilators, cyclic subspaces") {
    Poly q = pp(Q(), "x^3+x-2");
    Matrix c = companion(q);
    Vec e1 = vec(Q(), {"1", "0", "0"});
    CHECK(t_annihilator(c, e1) == q);
    ConductorResult cyc = t_conductor(c, e1, Subspace(Q(), 3));
    CHECK(cyc.cyclic.dim() == 3);

    // an eigenvector has annihilator x - c
    Matrix d = mat(Q(), {{"2", "0"}, {"0", "3"}});
    CHECK(t_annihilator(d, vec(Q(), {"1", "0"})) == pp(Q(), "x-2"));

    // alpha in W has conductor 1
    Subspace w = Subspace::span_rows(Q(), {vec(Q(), {"1", "0"})}, 2);
    Matrix diag_inv = mat(Q(), {{"2", "0"}, {"0", "3"}});
    CHECK(is_invariant(diag_inv, w));
    ConductorResult inw = t_conductor(diag_inv, vec(Q(), {"1", "0"}), w);
    CHECK(inw.conductor == Poly::one(Q()));

    // the zero vector has T-annihilator 1 and zero cyclic subspace
    CHECK(t_annihilator(d, vec(Q(), {"0", "0"})) == Poly::one(Q()));
    CHECK(t_conductor(d, vec(Q(), {"0", "0"}), Subspace(Q(), 2)).cyclic.dim() == 0);

    // conductor into a non-invariant subspace is rejected
    Matrix a = mat(Q(), {{"2", "1", "0"}, {"0", "2", "0"}, {"0", "0", "3"}});
    Subspace bad = Subspace::span_rows(Q(), {vec(Q(), {"0", "1", "0"})}, 3);
    CHECK_THROWS_AS(t_conductor(a, vec(Q(), {"1", "0", "0"}), bad), Error);

    // conductor divides the minimal polynomial; deg p_alpha = dim Z(alpha; T)
    for (const auto& f : corpus_fields()) {
        Rng rng(163);
        for (int i = 0; i < 30; ++i) {
            Matrix m = rand_matrix(f, 3, 3, rng);
            Vec alpha = rand_vec(f, 3, rng);
            Poly ann = t_annihilator(m, alpha);
            CHECK(poly_divides(ann, minpoly(m)));
            CHECK(t_conductor(m, alpha, Subspace(f, 3)).cyclic.dim() == ann.degree());
        }
    }
}

TEST_CASE("direct sum projections") {
    Subspace x = Subspace::span_rows(Q(), {vec(Q(), {"1", "0"})}, 2);
    Subspace y = Subspace::span_rows(Q(), {vec(Q(), {"0", "1"})}, 2);
    auto es = direct_sum_projections({x, y});
    CHECK(es[0] == mat(Q(), {{"1", "0"}, {"0", "0"}}));
    CHECK(es[1] == mat(Q(), {{"0", "0"}, {"0", "1"}}));

    auto whole = direct_sum_projections({Subspace::full(Q(), 3)});
    CHECK(whole[0].is_identity());

    CHECK_THROWS_AS(direct_sum_projections({x, x}), Error);

    // primary decomposition subspaces commute with the operator
    Field z3 = FieldDescriptor::prime_field(3);
    Matrix m1 = mat(z3, {{"1", "1", "0", "0"},
                         {"-1", "-1", "0", "0"},
                         {"-2", "-2", "2", "1"},
                         {"1", "1", "-1", "0"}});
    auto parts = primary_decomposition(m1);
    std::vector<Subspace> ws;
    for (const auto& p : parts) ws.push_back(p.w);
    auto projections = direct_sum_projections(ws);
    auto verdicts = invariance_commute_check(m1, projections);
    for (bool ok : verdicts) CHECK(ok);

    // random direct sum identities
    Rng rng(167);
    for (int i = 0; i < 20; ++i) {
        Matrix p = rand_invertible(Q(), 4, rng);
        Subspace w1 = Subspace::span_cols(p.columns({0, 1}));
        Subspace w2 = Subspace::span_cols(p.columns({2}));
        Subspace w3 = Subspace::span_cols(p.columns({3}));
        auto e = direct_sum_projections({w1, w2, w3});
        Matrix sum(Q(), 4, 4);
        for (size_t k = 0; k < e.size(); ++k) {
            sum = sum + e[k];
            CHECK(e[k] * e[k] == e[k]);
            CHECK(Subspace::span_cols(e[k]) == (k == 0 ? w1 : k == 1 ? w2 : w3));
            for (size_t l = k + 1; l < e.size(); ++l) CHECK((e[k] * e[l]).is_zero());
        }
        CHECK(sum.is_identity());
    }
}

TEST_CASE("simultaneous diagonalization") {
    Matrix d1 = mat(Q(), {{"1", "0"}, {"0", "2"}});
    Matrix d2 = mat(Q(), {{"3", "0"}, {"0", "3"}});
    Matrix p = simultaneous_diagonalize({d1, d2});
    for (const Matrix& a : {d1, d2}) {
        Matrix d = conj(p, a);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                if (i != j) CHECK(d.at(i, j).is_zero());
    }

    // {I, A} for a diagonalizable A
    Matrix a = mat(Z5(), {{"0", "4"}, {"1", "0"}});
    Matrix common = simultaneous_diagonalize({Matrix::identity(Z5(), 2), a});
    Matrix da = conj(common, a);
    CHECK(da.at(0, 1).is_zero());
    CHECK(da.at(1, 0).is_zero());

    Matrix shift(Q(), 2, 2);
    shift.at(0, 1) = el(Q(), "1");
    CHECK_THROWS_AS(simultaneous_diagonalize({shift, shift.transpose()}), Error);
    CHECK_THROWS_AS(simultaneous_diagonalize({shift, Matrix::identity(Q(), 2)}), Error);

    // a commuting diagonalizable pair with entangled eigenspaces
    Rng rng(173);
    for (int i = 0; i < 10; ++i) {
        Matrix q = rand_invertible(Q(), 3, rng);
        Matrix m1 = conj(inverse(q), mat(Q(), {{"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "2"}}));
        Matrix m2 = conj(inverse(q), mat(Q(), {{"3", "0", "0"}, {"0", "4", "0"}, {"0", "0", "4"}}));
        CHECK(m1 * m2 == m2 * m1);
        Matrix pc = simultaneous_diagonalize({m1, m2});
        for (const Matrix& m : {m1, m2}) {
            Matrix d = conj(pc, m);
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 3; ++c)
                    if (r != c) CHECK(d.at(r, c).is_zero());
        }
    }
}

TEST_CASE("trace equals the weighted sum of the characteristic roots") {
    for (const auto& f : corpus_fields()) {
        Rng rng(179);
        for (int i = 0; i < 20; ++i) {
            Matrix a = rand_matrix(f, 3, 3, rng);
            Poly cp = charpoly(a);
            auto roots = roots_in_field(cp);
            long total = 0;
            FieldElement weighted = FieldElement::zero(f);
            for (const auto& [c, d] : roots) {
                total += d;
                weighted = weighted + c * FieldElement::from_int(f, d);
            }
            if (total != 3) continue; // only when the charpoly splits
            CHECK(a.trace() == weighted);
        }
    }
}

TEST_CASE("AB and BA share a characteristic polynomial") {
    for (const auto& f : corpus_fields()) {
        Rng rng(181);
        for (int i = 0; i < 20; ++i) {
            Matrix a = rand_matrix(f, 3, 3, rng), b = rand_matrix(f, 3, 3, rng);
            CHECK(charpoly(a * b) == charpoly(b * a));
        }
    }
}

TEST_CASE("stochastic matrices have eigenvalue 1") {
    Rng rng(191);
    for (int i = 0; i < 20; ++i) {
        // nonnegative rational rows normalized to sum 1
        int n = 3;
        Matrix a(Q(), n, n);
        for (int r = 0; r < n; ++r) {
            std::uniform_int_distribution<long> cell(0, 5);
            std::vector<long> raw(n);
            long sum = 0;
            for (auto& x : raw) { x = cell(rng); sum += x; }
            if (sum == 0) { raw[0] = 1; sum = 1; }
            for (int c = 0; c < n; ++c)
                a.at(r, c) = FieldElement::rational(Q(), mpq_class(raw[c], sum));
        }
        EigenComponent e = eigen(a);
        bool has_one = false;
        for (const auto& v : e.values) has_one = has_one || v.is_one();
        CHECK(has_one);
    }
}

TEST_CASE("idempotent projections make I + E invertible") {
    // (I + E)^-1 = I - E/2 for idempotent E
    Rng rng(193);
    for (int i = 0; i < 10; ++i) {
        Matrix p = rand_invertible(Q(), 3, rng);
        Matrix e = conj(inverse(p), mat(Q(), {{"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "0"}}));
        CHECK(e * e == e);
        Matrix ipe = Matrix::identity(Q(), 3) + e;
        Matrix expected_inv = Matrix::identity(Q(), 3) - e.scaled(el(Q(), "1/2"));
        CHECK(ipe * expected_inv == Matrix::identity(Q(), 3));
        CHECK(inverse(ipe) == expected_inv);
    }
}

TEST_CASE("n-operator lifting") {
    Matrix a1 = mat(Z2(), {{"1", "0", "1"}, {"0", "1", "0"}, {"1", "0", "0"}});
    Matrix a3 = mat(Z5(), {{"0", "4"}, {"1", "0"}});
    NOperator t = make_op({Z2(), Z5()}, {a1, a3});
    NPoly f = charpoly(t);
    CHECK(f.parts[0] == pp(Z2(), "x^3+1"));
    CHECK(f.parts[1] == pp(Z5(), "x^2+1"));
    NPoly m = minpoly(t);
    CHECK(m.parts[0] == pp(Z2(), "x^3+1"));
    NRationalForm rf = rational_form(t);
    CHECK(rf.parts.size() == 2);
    CHECK(similar(t, t));

    CHECK_THROWS_AS(make_op({Z2(), Z5()}, {a1, mat(Z5(), {{"0", "4", "0"}, {"1", "0", "0"}})}),
                    Error);
}
