#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "hopfmod/galois.hpp"

using namespace hopfmod;

namespace {

struct Bench {
    IndicatorContext ctx;
    GaloisAction ga;

    explicit Bench(std::shared_ptr<DoubleHandle> d)
        : ctx(make_indicator_context(std::move(d))), ga(galois_action(ctx.sd, ctx.md.N)) {}
};

Vec random_qn_coords(const SemisimpleData& sd, std::size_t n_level, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-3, 3);
    Vec coords = zero_vec(sd.k, sd.field_order);
    for (auto& c : coords) {
        Cyclotomic v = Cyclotomic::zero(n_level);
        for (unsigned long j = 0; j < euler_phi(n_level); ++j)
            v += Cyclotomic(num(rng)) * Cyclotomic::root_of_unity(n_level, static_cast<long>(j));
        c = v;
    }
    return coords;
}

}  // namespace

TEST_CASE("Jacobi symbol against brute-force residues", "[galois]") {
    CHECK_THROWS_AS(jacobi_symbol(3, 4), EvenModulus);
    for (long n : {1l, 3l, 5l, 7l, 9l, 15l, 21l})
        CHECK(jacobi_symbol(1, n) == 1);

    // for prime p: (q/p) = 1 iff q is a nonzero square mod p
    for (long p : {3l, 5l, 7l, 11l, 13l, 17l, 19l, 23l, 29l, 31l, 37l, 41l, 43l, 47l}) {
        std::vector<bool> is_square(p, false);
        for (long x = 1; x < p; ++x) is_square[(x * x) % p] = true;
        for (long q = 0; q < p; ++q) {
            int expected = q == 0 ? 0 : (is_square[q] ? 1 : -1);
            CHECK(jacobi_symbol(q, p) == expected);
        }
    }

    // first supplement: (-1/n) = 1 iff n = 1 mod 4
    for (long n : {3l, 5l, 7l, 9l, 11l, 13l, 15l, 21l, 25l})
        CHECK(jacobi_symbol(-1, n) == (n % 4 == 1 ? 1 : -1));

    // multiplicativity on a sample
    for (long n : {15l, 21l})
        for (long a = 0; a < n; ++a)
            for (long b = 0; b < n; ++b) CHECK(jacobi_symbol(a * b, n) == jacobi_symbol(a, n) * jacobi_symbol(b, n));
}

TEST_CASE("Galois permutation of the simples", "[galois]") {
    Bench b(std::make_shared<DoubleHandle>(drinfeld_double(group_algebra(FiniteGroup::symmetric3(), 6))));
    const auto& sd = b.ctx.sd;
    std::size_t n_level = b.ctx.md.N;
    REQUIRE(n_level == 6);

    // group law and identity
    CHECK(b.ga.of(1) == std::vector<std::size_t>{0, 1, 2, 3, 4, 5, 6, 7});
    for (long q : b.ga.units)
        for (long q2 : b.ga.units) {
            const auto& pq = b.ga.of(q);
            const auto& pq2 = b.ga.of(q2);
            const auto& pqq = b.ga.of(mod_nonneg(q * q2, static_cast<long>(n_level)));
            for (std::size_t i = 0; i < sd.k; ++i) CHECK(pq[pq2[i]] == pqq[i]);
        }

    for (long q : b.ga.units) {
        const auto& perm = b.ga.of(q);
        // sigma.1 = 1, n_{sigma.i} = n_i, sigma.(i*) = (sigma.i)*
        CHECK(perm[0] == 0);
        for (std::size_t i = 0; i < sd.k; ++i) {
            CHECK(sd.degrees[perm[i]] == sd.degrees[i]);
            CHECK(perm[sd.dual[i]] == sd.dual[perm[i]]);
        }
        // sigma(s_{ij}) = s_{sigma.i, j} = s_{i, sigma.j}
        long qq = lift_unit(q, n_level, sd.field_order);
        for (std::size_t i = 0; i < sd.k; ++i)
            for (std::size_t j = 0; j < sd.k; ++j) {
                CHECK(galois_apply(qq, b.ctx.md.S(i, j)) == b.ctx.md.S(perm[i], j));
                CHECK(galois_apply(qq, b.ctx.md.S(i, j)) == b.ctx.md.S(i, perm[j]));
            }
    }

    // q = -1 acts as the dual involution
    const auto& gamma = b.ga.of(-1);
    for (std::size_t i = 0; i < sd.k; ++i) CHECK(gamma[i] == sd.dual[i]);
}

TEST_CASE("semilinear actions on the center", "[galois]") {
    Bench b(std::make_shared<DoubleHandle>(drinfeld_double(group_algebra(FiniteGroup::symmetric3(), 6))));
    const auto& sd = b.ctx.sd;
    std::size_t k = sd.k;
    std::mt19937_64 rng(11);

    for (long q : b.ga.units) {
        const auto& perm = b.ga.of(q);
        // sigma.z_i = z_{sigma.i} and sigma.e_i = e_{sigma^{-1}.i}
        for (std::size_t i = 0; i < k; ++i) {
            Vec zi = center_coords(sd, sd.class_sums[i]);
            Vec sz = galois_act_center(b.ga, q, zi);
            CHECK(sz == center_coords(sd, sd.class_sums[perm[i]]));

            Vec ei = zero_vec(k, sd.field_order);
            ei[i] = Cyclotomic::one();
            Vec se = galois_act_center(b.ga, q, ei);
            std::size_t inv_i = 0;
            for (std::size_t t = 0; t < k; ++t)
                if (perm[t] == i) inv_i = t;
            Vec expected = zero_vec(k, sd.field_order);
            expected[inv_i] = Cyclotomic::one();
            CHECK(se == expected);
        }

        for (int trial = 0; trial < 3; ++trial) {
            Vec z = random_qn_coords(sd, b.ctx.md.N, rng);
            // sigma.z = pi'(sigma) pi(sigma)^{-1} z
            long qinv = mod_inverse(q, static_cast<long>(b.ctx.md.N));
            Vec route = pi_prime_action(b.ga, q, pi_action(b.ga, sd, qinv, z));
            CHECK(route == galois_act_center(b.ga, q, z));

            // pi(sigma) and pi'(tau) commute
            for (long q2 : b.ga.units) {
                Vec a = pi_action(b.ga, sd, q, pi_prime_action(b.ga, q2, z));
                Vec bb = pi_prime_action(b.ga, q2, pi_action(b.ga, sd, q, z));
                CHECK(a == bb);
            }

            // chi_R(u) is rational here, so pi'(sigma) = S o pi(sigma) o S^{-1}
            Vec lhs = pi_prime_action(b.ga, q, z);
            Vec rhs = b.ctx.rep.S_mat * pi_action(b.ga, sd, q, matrix_inverse(b.ctx.rep.S_mat) * z);
            CHECK(lhs == rhs);

            // S(sigma.z) = sigma^{-1}.S(z)
            CHECK(b.ctx.rep.S_mat * galois_act_center(b.ga, q, z) ==
                  galois_act_center(b.ga, qinv, b.ctx.rep.S_mat * z));

            // chi(sigma.z) = (sigma.chi)(z)
            for (std::size_t j = 0; j < k; ++j) {
                Vec sz_elem = center_element(sd, galois_act_center(b.ga, q, z));
                Vec z_elem = center_element(sd, z);
                CHECK(evaluate_functional(sd.characters[j], sz_elem) ==
                      evaluate_functional(sd.characters[perm[j]], z_elem));
            }

            // iota(sigma.z) = sigma^{-1}.iota(z): expand both in the character basis
            Vec sz_elem = center_element(sd, galois_act_center(b.ga, q, z));
            Vec z_elem = center_element(sd, z);
            Vec lhs_fun = iota_map(b.ctx.d->qt, sd.kappa, sd.regular_character, sz_elem);
            Vec rhs_fun_raw = iota_map(b.ctx.d->qt, sd.kappa, sd.regular_character, z_elem);
            // sigma^{-1} . (sum c_i chi_i) = sum c_i chi_{sigma^{-1}.i}
            Matrix char_mat(b.ctx.d->dim(), k, sd.field_order);
            for (std::size_t j = 0; j < k; ++j)
                for (std::size_t t = 0; t < b.ctx.d->dim(); ++t) char_mat(t, j) = sd.characters[j][t];
            auto coeffs = matrix_solve(char_mat, rhs_fun_raw);
            REQUIRE(coeffs.has_value());
            Vec rhs_fun = zero_vec(b.ctx.d->dim(), sd.field_order);
            for (std::size_t i = 0; i < k; ++i) {
                std::size_t target = 0;
                for (std::size_t t = 0; t < k; ++t)
                    if (perm[t] == i) target = t;  // sigma^{-1}.i
                for (std::size_t t = 0; t < b.ctx.d->dim(); ++t)
                    rhs_fun[t] += (*coeffs)[i] * sd.characters[target][t];
            }
            CHECK(lhs_fun == rhs_fun);
        }
    }
}

TEST_CASE("Hopf symbol properties", "[galois]") {
    // Radford: (q / K[Z_n]) = Jacobi (q / n), cross-checked for primes by residues
    for (std::size_t n : {3ul, 5ul, 7ul}) {
        QuasitriangularHopf qt = radford_example(n);
        SemisimpleData sd = split_center(qt.alg());
        character_ring_data(qt, sd);
        ModularData md = modular_data(qt, sd);
        for (long q = 0; q < static_cast<long>(2 * n); ++q) {
            Cyclotomic symbol = hopf_symbol(sd, md, q);
            CHECK(symbol == Cyclotomic(jacobi_symbol(q, static_cast<long>(n))));
        }
    }

    // doubles have trivial symbol on units
    DoubleHandle d = drinfeld_double(group_algebra(FiniteGroup::symmetric3(), 6));
    SemisimpleData sd = split_center(d.alg());
    character_ring_data(d.qt, sd);
    ModularData md = modular_data(d.qt, sd);
    for (long q : {1l, 5l, 7l, 11l}) CHECK(hopf_symbol(sd, md, q) == Cyclotomic(1));
    CHECK(hopf_symbol(sd, md, 2) == Cyclotomic(0));
    CHECK(hopf_symbol(sd, md, 3) == Cyclotomic(0));

    // cocycle law and root-of-unity order for the Radford case n = 3
    QuasitriangularHopf qt = radford_example(3);
    SemisimpleData sd3 = split_center(qt.alg());
    character_ring_data(qt, sd3);
    ModularData md3 = modular_data(qt, sd3);
    std::size_t n_level = md3.N;
    for (long q = 1; q < 3; ++q)
        for (long q2 = 1; q2 < 3; ++q2) {
            Cyclotomic lhs = hopf_symbol(sd3, md3, q * q2);
            long qq = lift_unit(q, n_level, sd3.field_order);
            Cyclotomic rhs = hopf_symbol(sd3, md3, q) * galois_apply(qq, hopf_symbol(sd3, md3, q2));
            CHECK(lhs == rhs);
        }
    // (q/A) = 1 when q is a square mod N
    for (long x = 1; x < 3; ++x) CHECK(hopf_symbol(sd3, md3, (x * x) % 3) == Cyclotomic(1));
    // root of unity of order dividing 2N and 6 (N odd)
    for (long q : {1l, 2l}) {
        Cyclotomic s = hopf_symbol(sd3, md3, q);
        CHECK(pow(s, 2 * static_cast<long>(n_level)) == Cyclotomic(1));
        CHECK(pow(s, 6) == Cyclotomic(1));
    }
}

TEST_CASE("Galois action equals the diagonal matrices on doubles", "[galois]") {
    for (auto setup : {std::pair<FiniteGroup, unsigned long>{FiniteGroup::cyclic(3), 3},
                       {FiniteGroup::symmetric3(), 6}}) {
        Bench b(std::make_shared<DoubleHandle>(drinfeld_double(group_algebra(setup.first, setup.second))));
        std::mt19937_64 rng(99);
        for (long q : b.ga.units) {
            // on the idempotent basis
            for (std::size_t i = 0; i < b.ctx.sd.k; ++i) {
                Vec ei = zero_vec(b.ctx.sd.k, b.ctx.sd.field_order);
                ei[i] = Cyclotomic::one();
                CHECK(check_galois_vs_diagonal(b.ctx.rep, b.ga, b.ctx.sd, b.ctx.md, q, ei, true));
            }
            // and on random Q_N elements of the center
            Vec z = random_qn_coords(b.ctx.sd, b.ctx.md.N, rng);
            CHECK(check_galois_vs_diagonal(b.ctx.rep, b.ga, b.ctx.sd, b.ctx.md, q, z, true));

            // d(q).1 = 1 and d(q).e_1 = e_1
            Matrix dq = evaluate_word(diagonal_word(q, b.ctx.md.N), b.ctx.rep);
            Vec one_coords = center_coords(b.ctx.sd, b.ctx.d->alg().unit());
            CHECK(dq * one_coords == one_coords);
            Vec e1 = zero_vec(b.ctx.sd.k, b.ctx.sd.field_order);
            e1[0] = Cyclotomic::one();
            CHECK(dq * e1 == e1);

            // sigma^2(u_i) = u_{sigma.i}
            long qq = lift_unit(q, b.ctx.md.N, b.ctx.sd.field_order);
            const auto& perm = b.ga.of(q);
            for (std::size_t i = 0; i < b.ctx.sd.k; ++i)
                CHECK(galois_apply(qq, galois_apply(qq, b.ctx.md.u_eigen[i])) == b.ctx.md.u_eigen[perm[i]]);
        }
    }

    // the general linear non-double case: Radford n = 5, d(q).z = (q/A) sigma_q.z
    QuasitriangularHopf qt = radford_example(5);
    SemisimpleData sd = split_center(qt.alg());
    character_ring_data(qt, sd);
    ModularData md = modular_data(qt, sd);
    ModularRep rep = modular_rep(qt, sd, md, nullptr);
    GaloisAction ga = galois_action(sd, md.N);
    for (long q : ga.units)
        for (std::size_t i = 0; i < sd.k; ++i) {
            Vec ei = zero_vec(sd.k, sd.field_order);
            ei[i] = Cyclotomic::one();
            CHECK(check_galois_vs_diagonal(rep, ga, sd, md, q, ei, false));
        }
}

TEST_CASE("eta is Galois invariant and indicators transport along sigma", "[galois]") {
    Bench b(std::make_shared<DoubleHandle>(drinfeld_double(group_algebra(FiniteGroup::symmetric3(), 6))));
    HopfPtr h = b.ctx.d->base;
    HModule k_mod = trivial_module(h);
    SemisimpleData sd_base = split_center(*h);
    HModule v2 = simple_module(h, sd_base, 2);

    // eta(sigma.z) = eta(z) for eta the character of Ind(K)
    for (long q : b.ga.units)
        for (std::size_t i = 0; i < b.ctx.sd.k; ++i) {
            Vec ei = zero_vec(b.ctx.sd.k, b.ctx.sd.field_order);
            ei[i] = Cyclotomic::one();
            Vec sz = galois_act_center(b.ga, q, ei);
            CHECK(indicator(b.ctx, k_mod, 1, 0, sz) == indicator(b.ctx, k_mod, 1, 0, ei));
        }

    // transport law: sigma_q(I_V((m,l),z)) = I_V((m,lq), pi'(sigma_q)(z)) for q coprime to N and m
    // and its companion with pi for q coprime to N and l; then the combination.
    std::vector<std::pair<long, long>> points{{1, 1}, {2, 1}, {1, 2}, {2, 3}, {3, 2}};
    for (long q : b.ga.units) {
        long qq = lift_unit(q, b.ctx.md.N, b.ctx.sd.field_order);
        for (auto [m, l] : points)
            for (std::size_t zi : {0ul, 3ul, 6ul}) {
                Vec z = zero_vec(b.ctx.sd.k, b.ctx.sd.field_order);
                z[zi] = Cyclotomic::one();
                if (gcd(Integer(q), Integer(static_cast<long>(m))) == 1) {
                    Cyclotomic lhs = galois_apply(qq, indicator(b.ctx, v2, m, l, z));
                    Cyclotomic rhs = indicator(b.ctx, v2, m, l * q, pi_prime_action(b.ga, q, z));
                    CHECK(lhs == rhs);
                }
                if (gcd(Integer(q), Integer(l)) == 1) {
                    Cyclotomic lhs = galois_apply(qq, indicator(b.ctx, v2, m, l, z));
                    Cyclotomic rhs = indicator(b.ctx, v2, m * q, l, pi_action(b.ga, b.ctx.sd, q, z));
                    CHECK(lhs == rhs);
                }
                if (gcd(Integer(q), Integer(static_cast<long>(m))) == 1 && gcd(Integer(q), Integer(l)) == 1) {
                    Cyclotomic lhs = indicator(b.ctx, v2, m, l * q, galois_act_center(b.ga, q, z));
                    Cyclotomic rhs = indicator(b.ctx, v2, m * q, l, z);
                    CHECK(lhs == rhs);
                }
            }
    }
}

TEST_CASE("equivariance of indicators under the generators", "[galois][equivariance]") {
    Bench b(std::make_shared<DoubleHandle>(drinfeld_double(group_algebra(FiniteGroup::cyclic(3), 3))));
    HopfPtr h = b.ctx.d->base;
    SemisimpleData sd_base = split_center(*h);
    std::vector<HModule> simples;
    for (std::size_t i = 0; i < sd_base.k; ++i) simples.push_back(simple_module(h, sd_base, i));

    std::vector<ModularWord> gens;
    for (char g : {'s', 't', 'r'})
        for (long e : {1l, -1l}) {
            ModularWord w;
            w.append(g, e);
            gens.push_back(w);
        }

    for (const auto& v : simples)
        for (long m = -2; m <= 2; ++m)
            for (long l = -2; l <= 2; ++l)
                for (std::size_t zi : {0ul, 4ul})
                    for (const auto& g : gens) {
                        Vec z = zero_vec(b.ctx.sd.k, b.ctx.sd.field_order);
                        z[zi] = Cyclotomic::one();
                        CHECK(check_equivariance(b.ctx, v, m, l, g, z));
                    }

    // the named special cases: g = t and g = r^{-1} and g = s
    const HModule& v = simples[1];
    for (long m : {1l, 2l})
        for (long l : {0l, 1l, 2l}) {
            Vec z = zero_vec(b.ctx.sd.k, b.ctx.sd.field_order);
            z[2] = Cyclotomic::one();
            // I((m, m+l), z) = I((m,l), u_D^{-1} z)
            Vec uz = z;
            for (std::size_t i = 0; i < b.ctx.sd.k; ++i) uz[i] *= b.ctx.md.T[i];
            CHECK(indicator(b.ctx, v, m, m + l, z) == indicator(b.ctx, v, m, l, uz));
            // I((m+l, l), z) = I((m,l), R^{-1}(z))
            Vec rz = matrix_inverse(*b.ctx.rep.R_mat) * z;
            CHECK(indicator(b.ctx, v, m + l, l, z) == indicator(b.ctx, v, m, l, rz));
            // I((l, m), S(z)) = I((m, -l), z)
            Vec sz = b.ctx.rep.S_mat * z;
            CHECK(indicator(b.ctx, v, l, m, sz) == indicator(b.ctx, v, m, -l, z));
        }
}

TEST_CASE("orbit checks with seeded Gamma(N) elements", "[galois][orbit]") {
    Bench b(std::make_shared<DoubleHandle>(drinfeld_double(group_algebra(FiniteGroup::symmetric3(), 6))));
    HopfPtr h = b.ctx.d->base;
    SemisimpleData sd_base = split_center(*h);
    HModule v = simple_module(h, sd_base, 2);
    long n = static_cast<long>(b.ctx.md.N);

    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<long> small(-2, 2);
    int produced = 0;
    while (produced < 6) {
        long a = small(rng), bb = small(rng), c = small(rng);
        // gamma = [[1 + Na, Nb], [Nc, 1 + Nd]] with determinant 1
        long num = n * bb * c - a;
        long den = 1 + n * a;
        if (den == 0 || num % den != 0) continue;
        long d0 = num / den;
        long bound = 5 * n;
        if (std::abs(1 + n * a) > bound || std::abs(n * bb) > bound || std::abs(n * c) > bound ||
            std::abs(1 + n * d0) > bound)
            continue;
        ++produced;
        LatticePoint p{small(rng), small(rng)};
        LatticePoint q = p.acted(1 + n * a, n * bb, n * c, 1 + n * d0);
        REQUIRE(gamma_orbit_equivalent(p, q, b.ctx.md.N));
        for (std::size_t zi : {0ul, 5ul}) {
            Vec z = zero_vec(b.ctx.sd.k, b.ctx.sd.field_order);
            z[zi] = Cyclotomic::one();
            CHECK(check_orbit(b.ctx, v, p, q, z));
        }
    }

    // precondition violation reported
    Vec z = zero_vec(b.ctx.sd.k, b.ctx.sd.field_order);
    z[0] = Cyclotomic::one();
    CHECK_THROWS_AS(check_orbit(b.ctx, v, {2, 4}, {5, 7}, z), NotSameOrbit);
}
