#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "hopfmod/cyclotomic.hpp"
#include "hopfmod/linalg.hpp"
#include "hopfmod/polynomial.hpp"
#include "hopfmod/roots.hpp"

using namespace hopfmod;

namespace {

Cyclotomic random_cyc(std::mt19937_64& rng, unsigned long order) {
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 4);
    std::vector<Rational> c(euler_phi(order));
    for (auto& q : c) q = rational(num(rng), den(rng));
    return Cyclotomic(order, std::move(c));
}

}  // namespace

TEST_CASE("cyclotomic polynomials match known small cases", "[cyclofield]") {
    // x - 1
    CHECK(cyclotomic_polynomial(1) == Polynomial(std::vector<Cyclotomic>{Cyclotomic(-1), Cyclotomic(1)}));
    // x^2 + 1
    CHECK(cyclotomic_polynomial(4) ==
          Polynomial(std::vector<Cyclotomic>{Cyclotomic(1), Cyclotomic(0), Cyclotomic(1)}));
    // Phi_6 via dividing x^6 - 1 by Phi_1 Phi_2 Phi_3.
    Polynomial x6m1 = Polynomial::x_power(6) - Polynomial(Cyclotomic(1));
    Polynomial denom = cyclotomic_polynomial(1) * cyclotomic_polynomial(2) * cyclotomic_polynomial(3);
    auto [expected, rem] = divmod(x6m1, denom);
    REQUIRE(rem.is_zero());
    CHECK(cyclotomic_polynomial(6) == expected);

    // Degrees are Euler phi.
    for (unsigned long m : {1ul, 2ul, 3ul, 4ul, 5ul, 6ul, 8ul, 9ul, 12ul, 15ul})
        CHECK(cyclotomic_polynomial(m).degree() == static_cast<long>(euler_phi(m)));
}

TEST_CASE("primitive roots of unity have the right order", "[cyclofield]") {
    for (unsigned long m : {3ul, 4ul, 5ul, 6ul, 7ul, 9ul, 12ul}) {
        Cyclotomic z = Cyclotomic::root_of_unity(m, 1);
        Cyclotomic p = Cyclotomic::one(m);
        for (unsigned long k = 1; k < m; ++k) {
            p *= z;
            CHECK(p != Cyclotomic::one(m));
            // separate accumulation from the closed form
            CHECK(p == Cyclotomic::root_of_unity(m, static_cast<long>(k)));
        }
        CHECK(p * z == Cyclotomic::one(m));
    }
}

TEST_CASE("field axioms on randomized triples", "[cyclofield][property]") {
    std::mt19937_64 rng(20240711);
    for (unsigned long order : {1ul, 3ul, 4ul, 6ul, 5ul, 12ul}) {
        for (int trial = 0; trial < 25; ++trial) {
            Cyclotomic a = random_cyc(rng, order);
            Cyclotomic b = random_cyc(rng, order);
            Cyclotomic c = random_cyc(rng, order);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            if (!a.is_zero()) {
                CHECK(a * a.inverse() == Cyclotomic::one(order));
                CHECK((b / a) * a == b);
            }
        }
    }
}

TEST_CASE("promotion embeds fields and round-trips", "[cyclofield]") {
    // 1 in Q_1 promotes to 1 in Q_12.
    CHECK(Cyclotomic::promote(Cyclotomic(1), 12) == Cyclotomic::one(12));

    // zeta_3 = zeta_6^2.
    Cyclotomic z3 = Cyclotomic::root_of_unity(3, 1);
    CHECK(Cyclotomic::promote(z3, 6) == Cyclotomic::root_of_unity(6, 2));

    // Non-divisible order rejected.
    CHECK_THROWS_AS(Cyclotomic::promote(Cyclotomic::root_of_unity(4, 1), 6), NonDivisibleOrder);

    // promote then reduce is the identity; equality is promotion invariant.
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        Cyclotomic a = random_cyc(rng, 6);
        Cyclotomic up = Cyclotomic::promote(a, 24);
        CHECK(up == a);
        Cyclotomic back;
        REQUIRE(Cyclotomic::try_reduce(up, 6, back));
        CHECK(back == a);
    }
    // reduce_to_minimal_order finds rationals hidden at high order.
    Cyclotomic hidden = Cyclotomic::promote(Cyclotomic(rational(3, 2)), 12);
    CHECK(Cyclotomic::reduce_to_minimal_order(hidden).order() == 1);
}

TEST_CASE("galois automorphisms", "[cyclofield]") {
    Cyclotomic z3 = Cyclotomic::root_of_unity(3, 1);
    CHECK(galois_apply(2, z3) == z3 * z3);

    std::mt19937_64 rng(99);
    for (unsigned long order : {5ul, 6ul, 12ul}) {
        for (int trial = 0; trial < 10; ++trial) {
            Cyclotomic a = random_cyc(rng, order);
            CHECK(galois_apply(1, a) == a);
            // additive and multiplicative
            Cyclotomic b = random_cyc(rng, order);
            std::vector<long> units;
            for (long q = 1; q < static_cast<long>(order); ++q)
                if (gcd(Integer(q), Integer(static_cast<long>(order))) == 1) units.push_back(q);
            for (long q : units) {
                CHECK(galois_apply(q, a + b) == galois_apply(q, a) + galois_apply(q, b));
                CHECK(galois_apply(q, a * b) == galois_apply(q, a) * galois_apply(q, b));
                // composition law
                for (long q2 : units)
                    CHECK(galois_apply(q, galois_apply(q2, a)) == galois_apply(q * q2, a));
            }
        }
    }

    // sigma_{-1} is complex conjugation: zeta + zeta^2 -> zeta^{-1} + zeta^{-2}.
    unsigned long n = 12;
    Cyclotomic z = Cyclotomic::root_of_unity(n, 1);
    Cyclotomic lhs = galois_apply(-1, z + z * z);
    CHECK(lhs == Cyclotomic::root_of_unity(n, -1) + Cyclotomic::root_of_unity(n, -2));
    CHECK(conjugate(z + z * z) == lhs);
    CHECK_THROWS_AS(galois_apply(2, Cyclotomic::root_of_unity(4, 1)), NotAUnit);
}

TEST_CASE("exact linear algebra kernels", "[cyclofield][linalg]") {
    Matrix m(1, 2);
    m(0, 0) = Cyclotomic(1);
    m(0, 1) = Cyclotomic(-1);
    auto kernel = matrix_kernel(m);
    REQUIRE(kernel.size() == 1);
    CHECK(kernel[0][0] == kernel[0][1]);
    CHECK(!kernel[0][0].is_zero());

    CHECK(matrix_inverse(Matrix::identity(3)) == Matrix::identity(3));

    Matrix r(2, 2);
    r(0, 0) = Cyclotomic(0);
    r(0, 1) = Cyclotomic(-1);
    r(1, 0) = Cyclotomic(1);
    r(1, 1) = Cyclotomic(0);
    Matrix rinv = matrix_inverse(r);
    CHECK(rinv(0, 0) == Cyclotomic(0));
    CHECK(rinv(0, 1) == Cyclotomic(1));
    CHECK(rinv(1, 0) == Cyclotomic(-1));
    CHECK(rinv(1, 1) == Cyclotomic(0));

    Matrix singular(2, 2);
    singular(0, 0) = Cyclotomic(1);
    singular(0, 1) = Cyclotomic(2);
    singular(1, 0) = Cyclotomic(2);
    singular(1, 1) = Cyclotomic(4);
    CHECK_THROWS_AS(matrix_inverse(singular), SingularMatrix);

    // Random solvable systems round-trip.
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        Matrix a(3, 3, 6);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) a(i, j) = random_cyc(rng, 6);
        Vec x{random_cyc(rng, 6), random_cyc(rng, 6), random_cyc(rng, 6)};
        Vec b = a * x;
        auto sol = matrix_solve(a, b);
        REQUIRE(sol.has_value());
        CHECK(a * *sol == b);
    }
}

TEST_CASE("roots in field: trivial cases", "[cyclofield][roots]") {
    // x^2 + 1 over Q_4 -> {i, -i}
    Polynomial p(std::vector<Cyclotomic>{Cyclotomic(1), Cyclotomic(0), Cyclotomic(1)});
    auto roots = find_roots_in_field(p, 4);
    REQUIRE(roots.size() == 2);
    Cyclotomic i = Cyclotomic::root_of_unity(4, 1);
    CHECK(((roots[0] == i && roots[1] == -i) || (roots[0] == -i && roots[1] == i)));

    // x^2 - x over Q_1 -> {0, 1}
    Polynomial q(std::vector<Cyclotomic>{Cyclotomic(0), Cyclotomic(-1), Cyclotomic(1)});
    auto roots01 = find_roots_in_field(q, 1);
    REQUIRE(roots01.size() == 2);
    CHECK(((roots01[0] == Cyclotomic(0) && roots01[1] == Cyclotomic(1)) ||
           (roots01[0] == Cyclotomic(1) && roots01[1] == Cyclotomic(0))));

    // x^2 + 1 has no roots in Q_1.
    CHECK(find_roots_in_field(p, 1).empty());

    // multiplicity: (x - 2)^3 (x - 1/3)
    Polynomial cube = Polynomial(std::vector<Cyclotomic>{Cyclotomic(-2), Cyclotomic(1)});
    Polynomial lin = Polynomial(std::vector<Cyclotomic>{Cyclotomic(rational(-1, 3)), Cyclotomic(1)});
    Polynomial prod = cube * cube * cube * lin;
    auto mroots = find_roots_in_field(prod, 1);
    REQUIRE(mroots.size() == 4);
    int twos = 0, thirds = 0;
    for (const auto& r : mroots) {
        if (r == Cyclotomic(2)) ++twos;
        if (r == Cyclotomic(rational(1, 3))) ++thirds;
    }
    CHECK(twos == 3);
    CHECK(thirds == 1);
}

TEST_CASE("roots in field: cyclotomic splittings", "[cyclofield][roots]") {
    // x^n - 1 splits completely over Q_n; every root verified by substitution.
    for (unsigned long n : {3ul, 5ul, 6ul, 7ul, 9ul}) {
        Polynomial p = Polynomial::x_power(n) - Polynomial(Cyclotomic(1));
        auto roots = find_roots_in_field(p, n);
        REQUIRE(roots.size() == n);
        for (const auto& r : roots) CHECK(p(r).is_zero());
        // all distinct
        for (std::size_t i = 0; i < roots.size(); ++i)
            for (std::size_t j = i + 1; j < roots.size(); ++j) CHECK(roots[i] != roots[j]);
    }

    // A quadratic with roots zeta_6 and 2 zeta_6^5 + 1/2, coefficients in Q_6.
    Cyclotomic r1 = Cyclotomic::root_of_unity(6, 1);
    Cyclotomic r2 = Cyclotomic(2) * Cyclotomic::root_of_unity(6, 5) + Cyclotomic(rational(1, 2));
    Polynomial p = Polynomial(std::vector<Cyclotomic>{r1 * r2, -(r1 + r2), Cyclotomic::one(6)});
    auto roots = find_roots_in_field(p, 6);
    REQUIRE(roots.size() == 2);
    CHECK(((roots[0] == r1 && roots[1] == r2) || (roots[0] == r2 && roots[1] == r1)));
}

TEST_CASE("minimal polynomial of exact matrices", "[cyclofield][linalg]") {
    Matrix m = Matrix::identity(3);
    m(0, 0) = Cyclotomic(2);
    Polynomial mu = minimal_polynomial(m);
    // (x-1)(x-2)
    Polynomial expected(std::vector<Cyclotomic>{Cyclotomic(2), Cyclotomic(-3), Cyclotomic(1)});
    CHECK(mu == expected);
}
