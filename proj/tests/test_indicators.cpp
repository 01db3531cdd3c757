#include <catch2/catch_amalgamated.hpp>

#include "hopfmod/indicators.hpp"

using namespace hopfmod;

namespace {

struct Workbench {
    IndicatorContext ctx;
    HopfPtr h;
    SemisimpleData sd_base;
    std::vector<HModule> simples;
    Vec lambda_d_coords;  // coordinates of lambda' (x) Lambda, eps(Lambda) = lambda'(1) = 1

    explicit Workbench(const FiniteGroup& g, unsigned long field)
        : ctx(make_indicator_context(std::make_shared<DoubleHandle>(drinfeld_double(group_algebra(g, field))))) {
        h = ctx.d->base;
        sd_base = split_center(*h);
        for (std::size_t i = 0; i < sd_base.k; ++i) simples.push_back(simple_module(h, sd_base, i));
        lambda_d_coords = hopfmod::indicator_integral_coords(ctx);
    }

    Vec idempotent_coords(std::size_t i) const {
        Vec coords = zero_vec(ctx.sd.k, ctx.sd.field_order);
        coords[i] = Cyclotomic::one();
        return coords;
    }
};

// classical second Frobenius-Schur indicator of a group character:
// (1/|G|) sum_g chi(g^2)
Cyclotomic classical_nu2(const FiniteGroup& g, const Vec& chi) {
    Cyclotomic sum = Cyclotomic::zero();
    for (std::size_t x = 0; x < g.order(); ++x) sum += chi[g.mul(x, x)];
    return sum / Cyclotomic(static_cast<long>(g.order()));
}

}  // namespace

TEST_CASE("nu oracle matches the classical indicator for S_3", "[indicators]") {
    FiniteGroup g = FiniteGroup::symmetric3();
    Workbench wb(g, 6);
    // degrees 1, 1, 2; all real representations, so nu_2 = 1 everywhere
    for (std::size_t i = 0; i < wb.simples.size(); ++i) {
        Cyclotomic classical = classical_nu2(g, wb.sd_base.characters[i]);
        CHECK(classical == Cyclotomic(1));
        CHECK(nu_oracle(wb.ctx, wb.simples[i], 2, 1) == classical);
    }
    // nu_1 = multiplicity of the trivial module
    for (std::size_t i = 0; i < wb.simples.size(); ++i) {
        Cyclotomic expected = i == 0 ? Cyclotomic(1) : Cyclotomic::zero();
        CHECK(nu_oracle(wb.ctx, wb.simples[i], 1, 1) == expected);
    }
    // for Z_3 the nontrivial characters are complex: nu_2 = 0
    FiniteGroup z3 = FiniteGroup::cyclic(3);
    Workbench wb3(z3, 3);
    int zeros = 0;
    for (std::size_t i = 0; i < wb3.simples.size(); ++i) {
        Cyclotomic v = classical_nu2(z3, wb3.sd_base.characters[i]);
        CHECK(nu_oracle(wb3.ctx, wb3.simples[i], 2, 1) == v);
        if (v.is_zero()) ++zeros;
    }
    CHECK(zeros == 2);
}

TEST_CASE("indicators reproduce the nu oracle at l = 1", "[indicators]") {
    for (auto setup : {std::pair<FiniteGroup, unsigned long>{FiniteGroup::symmetric3(), 6},
                       {FiniteGroup::cyclic(3), 3}}) {
        Workbench wb(setup.first, setup.second);
        for (const auto& v : wb.simples)
            for (long m = 1; m <= 4; ++m) {
                CHECK(indicator(wb.ctx, v, m, 1, wb.lambda_d_coords) == nu_oracle(wb.ctx, v, m, 1));
            }
    }
}

TEST_CASE("indicators match the oracle across the (m, l) sweep", "[indicators][slow]") {
    for (auto setup : {std::pair<FiniteGroup, unsigned long>{FiniteGroup::symmetric3(), 6},
                       {FiniteGroup::cyclic(3), 3}}) {
        Workbench wb(setup.first, setup.second);
        long n_level = static_cast<long>(wb.ctx.md.N);
        for (const auto& v : wb.simples)
            for (long m = 1; m <= 4; ++m)
                for (long l = 0; l < m * n_level; ++l) {
                    Cyclotomic value = indicator(wb.ctx, v, m, l, wb.lambda_d_coords);
                    CHECK(value == nu_oracle(wb.ctx, v, m, l));
                    // values lie in Q_N
                    Cyclotomic reduced;
                    CHECK(Cyclotomic::try_reduce(value, static_cast<unsigned long>(n_level), reduced));
                }
    }
}

TEST_CASE("factorized and dense traces agree", "[indicators]") {
    Workbench wb(FiniteGroup::symmetric3(), 6);
    IndicatorContext dense_ctx = make_indicator_context(wb.ctx.d);
    dense_ctx.grouplike = false;  // force the dense path
    REQUIRE(wb.ctx.grouplike);

    for (std::size_t vi : {0ul, 2ul}) {
        const HModule& v = wb.simples[vi];
        // the dense context split may order idempotents identically (same algorithm)
        for (std::size_t zi = 0; zi < wb.ctx.sd.k; zi += 3)
            for (long m = 1; m <= 3; ++m)
                for (long l : {0l, 1l, 2l, 5l, -1l}) {
                    Vec coords = wb.idempotent_coords(zi);
                    CHECK(indicator(wb.ctx, v, m, l, coords) == indicator(dense_ctx, v, m, l, coords));
                }
    }
}

TEST_CASE("indicator special values", "[indicators]") {
    Workbench wb(FiniteGroup::symmetric3(), 6);

    // I_V((1,0), z) is the character of Ind(V) at z
    for (const auto& v : wb.simples) {
        InducedRep rep = induce(*wb.ctx.d, v, 1);
        for (std::size_t zi = 0; zi < wb.ctx.sd.k; ++zi) {
            Vec coords = wb.idempotent_coords(zi);
            Vec z = center_element(wb.ctx.sd, coords);
            CHECK(indicator(wb.ctx, v, 1, 0, coords) == induced_central_action(rep, z).trace());
        }
    }

    // trivial module: I_K((m,1), Lambda_D) = 1 for m >= 1
    HModule k_mod = trivial_module(wb.h);
    for (long m = 1; m <= 5; ++m) CHECK(indicator(wb.ctx, k_mod, m, 1, wb.lambda_d_coords) == Cyclotomic(1));

    // tensor power shift: I_{V^{(x) q}}((m,l), z) = I_V((qm, ql), z)
    const HModule& v = wb.simples.back();
    HModule v2 = tensor_power_module(v, 2);
    for (long m = 1; m <= 2; ++m)
        for (long l : {0l, 1l, 3l})
            for (std::size_t zi : {0ul, 3ul}) {
                Vec coords = wb.idempotent_coords(zi);
                CHECK(indicator(wb.ctx, v2, m, l, coords) == indicator(wb.ctx, v, 2 * m, 2 * l, coords));
            }

    // duality: I_{V*}((m,l), z) = I_V((m,l), S_D(z))
    HModule vdual = dual_module(v);
    for (long m = -2; m <= 2; ++m)
        for (long l : {-2l, 0l, 1l})
            for (std::size_t zi : {1ul, 4ul}) {
                Vec coords = wb.idempotent_coords(zi);
                CHECK(indicator(wb.ctx, vdual, m, l, coords) ==
                      indicator(wb.ctx, v, m, l, dual_coords(wb.ctx, coords)));
            }

    // branch boundaries: I_V((-m,-l), z) = I_V((m,l), S_D(z)) everywhere
    for (long m = -3; m <= 3; ++m)
        for (long l = -4; l <= 4; ++l)
            for (std::size_t zi : {0ul, 2ul, 5ul}) {
                Vec coords = wb.idempotent_coords(zi);
                CHECK(indicator(wb.ctx, v, -m, -l, coords) ==
                      indicator(wb.ctx, v, m, l, dual_coords(wb.ctx, coords)));
            }
}

TEST_CASE("the pairing trace formula reproduces indicators", "[indicators]") {
    Workbench wb(FiniteGroup::symmetric3(), 6);
    const HModule& v = wb.simples.back();
    long m = 2;
    InducedRep rep = induce(*wb.ctx.d, v, static_cast<unsigned>(m));

    // base pairing V^{(x) m} x (V*)^{(x) m} with reversed slots
    std::size_t vd = rep.vdim;
    Matrix base(vd, vd, 6);
    std::vector<std::size_t> reversed(vd);
    for (std::size_t w = 0; w < vd; ++w) {
        std::vector<std::size_t> digits(m);
        std::size_t tmp = w;
        for (long j = m - 1; j >= 0; --j) {
            digits[j] = tmp % v.dim;
            tmp /= v.dim;
        }
        std::size_t rev = 0;
        for (long j = m - 1; j >= 0; --j) rev = rev * v.dim + digits[j];
        reversed[w] = rev;
        base(w, rev) = Cyclotomic::one();
    }
    Vec lambda = integrals(wb.h).integral;
    Matrix pairing = induced_pairing(*wb.ctx.d, lambda, base);
    Vec eps = wb.h->counit_values();

    for (long l : {0l, 1l, 2l})
        for (std::size_t zi : {0ul, 3ul}) {
            Vec coords = wb.idempotent_coords(zi);
            Vec z = center_element(wb.ctx.sd, coords);
            Matrix op = matrix_power(beta_power_map(rep), l) * induced_central_action(rep, z);
            Cyclotomic value = Cyclotomic::zero(6);
            for (std::size_t w = 0; w < vd; ++w) {
                // x = eps (x) v_w, y = eps (x) v*_{rev(w)}
                Vec x = zero_vec(rep.dim, 6);
                for (std::size_t a = 0; a < rep.n; ++a) x[rep.index(a, w)] = eps[a];
                Vec ox = op * x;
                Vec y = zero_vec(rep.dim, 6);
                for (std::size_t b = 0; b < rep.n; ++b) y[rep.index(b, reversed[w])] = eps[b];
                for (std::size_t r = 0; r < rep.dim; ++r) {
                    if (ox[r].is_zero()) continue;
                    for (std::size_t c2 = 0; c2 < rep.dim; ++c2)
                        if (!y[c2].is_zero() && !pairing(r, c2).is_zero()) value += ox[r] * y[c2] * pairing(r, c2);
                }
            }
            value *= Cyclotomic(6);
            CHECK(value == indicator(wb.ctx, v, m, l, coords));
        }
}
