#include <catch2/catch_amalgamated.hpp>

#include "hopfmod/verify.hpp"

using namespace hopfmod;

TEST_CASE("named failure modes fire where promised", "[errors]") {
    // splitting over a field that is too small
    auto z3 = group_algebra(FiniteGroup::cyclic(3), 1);
    CHECK_THROWS_AS(split_center(*z3), SplitFailure);

    // dual of a lazy handle
    auto h4 = group_algebra(FiniteGroup::cyclic(4), 4);
    DoubleHandle lazy = drinfeld_double(h4, 2);
    REQUIRE(!lazy.alg().materialized());
    CHECK_THROWS_AS(dual_hopf(lazy.qt.algebra), NotMaterialized);

    // the r generator is only defined on doubles
    QuasitriangularHopf qt = radford_example(3);
    SemisimpleData sd = split_center(qt.alg());
    character_ring_data(qt, sd);
    ModularData md = modular_data(qt, sd);
    ModularRep rep = modular_rep(qt, sd, md, nullptr);
    ModularWord r;
    r.append('r');
    CHECK_THROWS_AS(evaluate_word(r, rep), NotADouble);

    // a two-dimensional integral space is rejected
    HopfAlgebra::Ops ops;
    ops.mul = [](std::size_t i, std::size_t j) {
        return i == j ? SparseVec::unit_basis(i) : SparseVec{};
    };
    ops.comul = [](std::size_t i) {
        Tensor t(2, 2);
        t.add_term({i, i}, Cyclotomic::one());
        return t;
    };
    ops.counit = [](std::size_t) { return Cyclotomic::one(); };
    ops.antipode = [](std::size_t i) { return SparseVec::unit_basis(i); };
    ops.antipode_inv = [](std::size_t i) { return SparseVec::unit_basis(i); };
    ops.unit = SparseVec{{{0, Cyclotomic::one()}, {1, Cyclotomic::one()}}};
    auto broken = HopfAlgebra::make(2, 1, {"a", "b"}, std::move(ops), true);
    CHECK_THROWS_AS(integrals(broken), NoIntegral);

    // non-central elements are rejected by the indicator entry point
    auto ctx = make_indicator_context(
        std::make_shared<DoubleHandle>(drinfeld_double(group_algebra(FiniteGroup::symmetric3(), 6))));
    SemisimpleData sd_base = split_center(*ctx.d->base);
    HModule v = simple_module(ctx.d->base, sd_base, 0);
    Vec not_central = zero_vec(36, 6);
    not_central[1] = Cyclotomic::one();
    CHECK_THROWS_AS(indicator_from_element(ctx, v, 1, 0, not_central), NotCentral);
    // and a genuinely central one goes through
    Vec central = center_element(ctx.sd, indicator_integral_coords(ctx));
    CHECK(indicator_from_element(ctx, v, 1, 0, central) ==
          indicator(ctx, v, 1, 0, indicator_integral_coords(ctx)));
}

TEST_CASE("field order larger than the exponent still works", "[errors][field]") {
    // D(K[Z_3]) over Q_12: N = 3 but coefficients live in Q_12
    ExampleSpec spec;
    spec.group = "Z3";
    spec.make_double = true;
    spec.field_order = 12;
    Example ex = build_example(spec);
    Analysis an = analyze(ex);
    CHECK(an.md.N == 3);
    CHECK(all_passed(verify_congruence_suite(ex, an, false)));

    // pi actions reject coefficients outside Q_N
    Vec coords = zero_vec(an.sd.k, 12);
    coords[0] = Cyclotomic::root_of_unity(12, 1);  // primitive 12th root, not in Q_3
    CHECK_THROWS_AS(pi_prime_action(an.ga, 2, coords), CoefficientOutsideQN);

    // while Q_3 coefficients promoted into Q_12 are fine
    Vec ok_coords = zero_vec(an.sd.k, 12);
    ok_coords[0] = Cyclotomic::promote(Cyclotomic::root_of_unity(3, 1), 12);
    CHECK_NOTHROW(pi_prime_action(an.ga, 2, ok_coords));
}
