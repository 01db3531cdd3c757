#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "hopfmod/serialize.hpp"

using namespace hopfmod;

TEST_CASE("cyclotomic JSON round trip is bit exact", "[serialize][property]") {
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<long> num(-1000000, 1000000);
    std::uniform_int_distribution<long> den(1, 99991);
    for (unsigned long order : {1ul, 4ul, 6ul, 12ul}) {
        for (int trial = 0; trial < 30; ++trial) {
            std::vector<Rational> coeffs(euler_phi(order));
            for (auto& c : coeffs) c = rational(num(rng), den(rng));
            Cyclotomic x(order, coeffs);
            Json j = cyclotomic_to_json(x);
            Cyclotomic back = cyclotomic_from_json(j);
            CHECK(back.order() == x.order());
            CHECK(back == x);
            // representation itself is identical, not merely the field element
            CHECK(back.coeffs() == x.coeffs());
        }
    }
    // large numerators survive the decimal-string route
    Cyclotomic big(4, {rational_from_strings("123456789012345678901234567890", "7"),
                       rational_from_strings("-987654321098765432109876543210", "11")});
    CHECK(cyclotomic_from_json(cyclotomic_to_json(big)) == big);
}

TEST_CASE("group files load and validate", "[serialize]") {
    Json j;
    j["order"] = 3;
    j["table"] = std::vector<std::vector<std::size_t>>{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
    FiniteGroup g = group_from_json(j);
    CHECK(g.order() == 3);
    CHECK(g.exponent() == 3);

    // a corrupted table still loads (associativity is the axiom checker's job)
    Json bad = j;
    bad["table"] = std::vector<std::vector<std::size_t>>{{0, 1, 2}, {1, 1, 0}, {2, 0, 1}};
    FiniteGroup gb = group_from_json(bad);
    HopfPtr h = group_algebra(gb, 3);
    CHECK(!verify_hopf_axioms(h).all_passed());

    // missing identity is a construction error
    Json worse = j;
    worse["table"] = std::vector<std::vector<std::size_t>>{{1, 1, 2}, {1, 2, 0}, {2, 0, 1}};
    CHECK_THROWS_AS(group_from_json(worse), error);
}

TEST_CASE("structure constants export matches the handle", "[serialize]") {
    auto h = group_algebra(FiniteGroup::symmetric3(), 6);
    Json j = hopf_to_json(*h);
    CHECK(j["schema"] == 1);
    CHECK(j["dimension"] == 6);
    CHECK(j["mul"].size() == 36);    // group algebra: single term per product
    CHECK(j["comul"].size() == 6);   // grouplike coproducts
    CHECK(j["counit"].size() == 6);

    DoubleHandle d = drinfeld_double(h);
    SemisimpleData sd = split_center(d.alg());
    character_ring_data(d.qt, sd);
    ModularData md = modular_data(d.qt, sd);
    Json sj = semisimple_to_json(sd);
    CHECK(sj["degrees"].size() == 8);
    Json mj = modular_to_json(md);
    CHECK(mj["N"] == 6);
    CHECK(mj["S"].size() == 8);
    Cyclotomic s00 = cyclotomic_from_json(mj["S"][0][0]);
    CHECK(s00 == Cyclotomic(1));

    Json symbols = hopf_symbol_table_json(sd, md);
    CHECK(symbols["N"] == 6);
    CHECK(cyclotomic_from_json(symbols["symbols"]["1"]) == Cyclotomic(1));
    CHECK(cyclotomic_from_json(symbols["symbols"]["2"]) == Cyclotomic(0));
}

TEST_CASE("numeric embedding of exact values", "[serialize]") {
    auto [re1, im1] = approximate(Cyclotomic(1));
    CHECK(re1 == 1.0);
    CHECK(im1 == 0.0);
    auto [re, im] = approximate(Cyclotomic::root_of_unity(4, 1));
    CHECK(std::abs(re) < 1e-30);
    CHECK(std::abs(im - 1.0) < 1e-15);
}
