#include <doctest.h>

#include "helpers.hpp"

using namespace nlalg;
using namespace testutil;

TEST_CASE("rational arithmetic basics") {
    Field f = Q();
    CHECK(el(f, "1/2") + el(f, "1/3") == el(f, "5/6"));
    CHECK(el(f, "3/6") == el(f, "1/2"));
    CHECK((el(f, "2") / el(f, "4")) == el(f, "1/2"));
    CHECK_THROWS_AS(el(f, "1/0"), Error);
}

TEST_CASE("prime field inverse matches exhaustive search") {
    Field f = Z5();
    FieldElement two = el(f, "2");
    FieldElement inv = two.inverse();
    // 2*k = 1 mod 5 has exactly one solution among the residues
    int hits = 0;
    for (long k = 0; k < 5; ++k)
        if ((two * FieldElement::residue(f, k)).is_one()) {
            ++hits;
            CHECK(FieldElement::residue(f, k) == inv);
        }
    CHECK(hits == 1);
    CHECK(inv == el(f, "3"));
}

TEST_CASE("quadratic extension norm identity") {
    Field f = Q2();
    FieldElement a = el(f, "1+1*sqrt(2)");
    FieldElement b = el(f, "1-1*sqrt(2)");
    CHECK(a * b == el(f, "-1"));
    CHECK((a * a.inverse()).is_one());
}

TEST_CASE("GF(4) arithmetic closes") {
    Field f = GF4();
    FieldElement t = el(f, "t");
    // t^2 = t + 1 under x^2+x+1
    CHECK(t * t == el(f, "t+1"));
    CHECK(t.pow(3).is_one());
}

TEST_CASE("field axioms on random triples") {
    std::vector<Field> kinds = {Q(), Q2(), Z5(), GF4()};
    for (const auto& f : kinds) {
        CAPTURE(f->name());
        Rng rng(7);
        for (int i = 0; i < 1000; ++i) {
            FieldElement a = rand_element(f, rng), b = rand_element(f, rng),
                         c = rand_element(f, rng);
            CHECK((a + b) + c == a + (b + c));
            CHECK(a + b == b + a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
            if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
        }
    }
}

TEST_CASE("mismatched descriptors are rejected") {
    CHECK_THROWS_AS(el(Q(), "1") + el(Z5(), "1"), Error);
    CHECK_THROWS_AS(el(Z5(), "1").inverse() + el(Z7(), "1"), Error);
}

TEST_CASE("element parsing round-trips") {
    std::vector<std::pair<Field, std::string>> cases = {
        {Q(), "5/6"},     {Q(), "-3"},          {Q2(), "1+2*sqrt(2)"},
        {Q2(), "0+1*sqrt(2)"}, {Q2(), "-1/2-3/4*sqrt(2)"}, {Z7(), "2"},
        {GF4(), "t+1"},   {GF4(), "t"},         {GF4(), "0"},
    };
    for (const auto& [f, text] : cases) {
        CAPTURE(text);
        CHECK(parse_element(text, f).str() == text);
    }
    // normalization happens on the way in
    CHECK(el(Q(), "3/6").str() == "1/2");
    CHECK(el(Z7(), "9").str() == "2");
    CHECK(el(GF4(), "t^2").str() == "t+1");
    CHECK(el(Q2(), "1+0*sqrt(2)").str() == "1");
}

TEST_CASE("random element formatting round-trips") {
    for (const auto& f : corpus_fields()) {
        Rng rng(11);
        for (int i = 0; i < 200; ++i) {
            FieldElement e = rand_element(f, rng);
            CHECK(parse_element(e.str(), f) == e);
        }
    }
}

TEST_CASE("field literal grammar") {
    CHECK(parse_field("Q")->name() == "Q");
    CHECK(parse_field("Q(sqrt 2)")->name() == "Q(sqrt 2)");
    CHECK(parse_field("Q(sqrt -1)")->quad_d() == -1);
    CHECK(parse_field("GF(7)")->name() == "GF(7)");
    CHECK(parse_field("GF(2^2; x^2+x+1)")->name() == "GF(2^2; x^2+x+1)");
    CHECK_THROWS_AS(parse_field("Q(sqrt 4)"), Error);  // not squarefree
    CHECK_THROWS_AS(parse_field("Q(sqrt 1)"), Error);
    CHECK_THROWS_AS(parse_field("GF(6)"), Error);      // not prime
    CHECK_THROWS_AS(parse_field("GF(4)"), Error);      // needs explicit modulus
    CHECK_THROWS_AS(parse_field("Q(sqrt 2, sqrt 3)"), Error); // biquadratic rejected
    // x^3+9 = x^3 over GF(3) is not irreducible (Example 1.1.7's fifth field)
    CHECK_THROWS_AS(parse_field("GF(3^3; x^3+9)"), Error);
    // reducible modulus
    CHECK_THROWS_AS(parse_field("GF(2^2; x^2+1)"), Error);
    // cap: 2^13 > 4096
    CHECK_THROWS_AS(FieldDescriptor::ext_field(2, std::vector<long>(14, 1)), Error);
}

TEST_CASE("embedding rules") {
    CHECK(embeds(Q(), Q2()));
    CHECK_FALSE(embeds(Q2(), Q()));
    CHECK(embeds(Q2(), Q2()));
    CHECK_FALSE(embeds(Q2(), Q3()));
    CHECK_FALSE(embeds(Q3(), Q2()));
    Field gf16 = FieldDescriptor::ext_field(2, {1, 1, 0, 0, 1}); // x^4+x+1
    CHECK(embeds(GF4(), gf16));                                  // 2 | 4
    CHECK_FALSE(embeds(gf16, GF4()));
    Field gf8 = FieldDescriptor::ext_field(2, {1, 1, 0, 1}); // x^3+x+1
    CHECK_FALSE(embeds(GF4(), gf8));                         // 2 does not divide 3
    CHECK(embeds(Z2(), GF4()));
    CHECK_FALSE(embeds(Z2(), Z5()));
    CHECK_FALSE(embeds(Q(), Z5()));
    CHECK_FALSE(embeds(Z5(), Q()));
}

TEST_CASE("embeds is reflexive and transitive on a pool") {
    std::vector<Field> pool = {Q(),  Q2(),  Q3(),  Z2(),
                               Z5(), GF4(), GF9(), FieldDescriptor::ext_field(2, {1, 1, 0, 0, 1})};
    for (const auto& a : pool) CHECK(embeds(a, a));
    for (const auto& a : pool)
        for (const auto& b : pool)
            for (const auto& c : pool)
                if (embeds(a, b) && embeds(b, c)) CHECK(embeds(a, c));
}

TEST_CASE("n-field validation") {
    // Example 1.1.3
    CHECK_NOTHROW(validate_nfield({Z5(), Z7(), FieldDescriptor::prime_field(17),
                                   FieldDescriptor::prime_field(31)}));
    CHECK_THROWS_AS(validate_nfield({Q(), Q2()}), Error);
    CHECK_THROWS_AS(validate_nfield({Z2(), GF4()}), Error);
    CHECK_THROWS_AS(validate_nfield({Q()}), Error); // arity too small
    try {
        validate_nfield({Q(), Z5(), Q2()});
        FAIL("expected rejection");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::ContainmentViolation);
        CHECK(std::string(e.what()).find("1") != std::string::npos);
        CHECK(std::string(e.what()).find("3") != std::string::npos);
    }
}

TEST_CASE("characteristic classification") {
    NField ex113 = validate_nfield(
        {Z5(), Z7(), FieldDescriptor::prime_field(17), FieldDescriptor::prime_field(31)});
    CHECK(classify_characteristic(ex113).overall == NCharacteristic::Finite);
    for (long c : classify_characteristic(ex113).per_component) CHECK(c > 0);

    // Example 1.1.4, first three components
    NField ex114 = validate_nfield({Z2(), Z7(), FieldDescriptor::quad_ext(7)});
    CHECK(classify_characteristic(ex114).overall == NCharacteristic::Mixed);

    // (Q, Q(sqrt 3)) itself fails validation (Q embeds in every Q(sqrt d));
    // classification still reads the tuple
    std::vector<Field> zero_tuple = {Q(), Q3()};
    CHECK(classify_characteristic(zero_tuple).overall == NCharacteristic::Zero);
    CHECK(classify_characteristic(zero_tuple).per_component == std::vector<long>{0, 0});
    NField zero = validate_nfield({Q2(), Q3()});
    CHECK(classify_characteristic(zero).overall == NCharacteristic::Zero);
}

TEST_CASE("primeness classification and quasi subfields") {
    // Example 1.1.6
    NField ex116 = validate_nfield(
        {Z7(), FieldDescriptor::prime_field(23), Z2(), FieldDescriptor::prime_field(17)});
    CHECK(classify_primeness(ex116).overall == NPrimeness::Prime);

    // Example 1.1.7, first four components: GF(4) and GF(49) are not prime.
    // The tuple itself fails Def 1.1.1 (Z_7 sits inside GF(49)); the paper
    // overlooks this, so classification runs on the raw tuple.
    Field gf49 = FieldDescriptor::ext_field(7, {1, 0, 1}); // x^2+1 over GF(7)
    std::vector<Field> ex117 = {Q(), Z7(), GF4(), gf49};
    CHECK_THROWS_AS(validate_nfield(ex117), Error);
    PrimenessReport pr = classify_primeness(ex117);
    CHECK(pr.overall == NPrimeness::Semiprime);
    REQUIRE(pr.quasi.size() == 2); // a quasi 2-subfield
    CHECK(pr.quasi[0].first == 2);
    CHECK(pr.quasi[0].second->name() == "GF(2)");
    CHECK(pr.quasi[1].first == 3);
    CHECK(pr.quasi[1].second->name() == "GF(7)");

    NField nonprime = validate_nfield({GF4(), GF9()});
    CHECK(classify_primeness(nonprime).overall == NPrimeness::NonPrime);
}

TEST_CASE("proper subfield enumeration") {
    CHECK(Q()->proper_subfields().empty());
    CHECK(Z5()->proper_subfields().empty());
    auto qsub = Q2()->proper_subfields();
    REQUIRE(qsub.size() == 1);
    CHECK(qsub[0]->name() == "Q");
    Field gf16 = FieldDescriptor::ext_field(2, {1, 1, 0, 0, 1});
    auto subs = gf16->proper_subfields(); // GF(2) and a canonical GF(4)
    REQUIRE(subs.size() == 2);
    CHECK(subs[0]->name() == "GF(2)");
    CHECK(subs[1]->ext_degree() == 2);
    CHECK(embeds(subs[1], gf16));
}

TEST_CASE("ordering of quadratic elements is exact") {
    Field f = Q2();
    CHECK(el(f, "3-2*sqrt(2)").sign() == 1);  // 9 > 8
    CHECK(el(f, "-3+2*sqrt(2)").sign() == -1);
    CHECK(el(f, "1-1*sqrt(2)").sign() == -1); // 1 < 2
    CHECK(el(f, "0").sign() == 0);
    CHECK(el(f, "0-3*sqrt(2)").sign() == -1);
    CHECK_THROWS_AS(el(Z5(), "1").sign(), Error);
    CHECK_THROWS_AS(el(FieldDescriptor::quad_ext(-1), "1+1*sqrt(-1)").sign(), Error);
}

TEST_CASE("canonical element order is a strict total order on samples") {
    for (const auto& f : corpus_fields()) {
        Rng rng(3);
        std::vector<FieldElement> xs;
        for (int i = 0; i < 30; ++i) xs.push_back(rand_element(f, rng));
        for (const auto& a : xs)
            for (const auto& b : xs) {
                if (a == b) {
                    CHECK_FALSE(FieldElement::canonical_less(a, b));
                    CHECK_FALSE(FieldElement::canonical_less(b, a));
                } else {
                    CHECK(FieldElement::canonical_less(a, b) !=
                          FieldElement::canonical_less(b, a));
                }
            }
    }
}
