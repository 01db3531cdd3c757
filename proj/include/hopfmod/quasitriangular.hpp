#ifndef HOPFMOD_QUASITRIANGULAR_HPP
#define HOPFMOD_QUASITRIANGULAR_HPP

#include "hopfmod/hopf.hpp"

namespace hopfmod {

// A Hopf algebra together with an R-matrix R in A (x) A. The derived data
// (R^{-1}, flip, Drinfel'd element and its inverse) is computed once at
// construction; u u^{-1} = 1 and R R^{-1} = 1 (x) 1 are enforced there, the
// remaining axioms live in verify_quasitriangular.
struct QuasitriangularHopf {
    HopfPtr algebra;
    Tensor R;
    Tensor R_inv;   // (S (x) id)(R)
    Tensor R_flip;  // R'
    Vec u;          // sum S(b_i) a_i for R = sum a_i (x) b_i
    Vec u_inv;      // sum S^{-2}(b_i) a_i

    const HopfAlgebra& alg() const { return *algebra; }

    Tensor r_prime_r() const { return algebra->tensor_multiply(R_flip, R); }
};

inline Vec zero_basis_vec(std::size_t n, std::size_t i) {
    Vec v = zero_vec(n);
    v[i] = Cyclotomic::one();
    return v;
}

inline QuasitriangularHopf make_quasitriangular(HopfPtr h, Tensor r) {
    check(r.arity() == 2 && r.dim() == h->dim(), "R-matrix has wrong shape");
    QuasitriangularHopf qt;
    qt.algebra = std::move(h);
    const HopfAlgebra& a = *qt.algebra;
    qt.R = std::move(r);
    qt.R_flip = qt.R.flip();
    qt.R_inv = qt.R.map_leg(0, [&](std::size_t i) { return a.basis_antipode(i).to_vec(a.dim()); });
    check(a.tensor_multiply(qt.R, qt.R_inv) == a.tensor_unit(2), "R-matrix is not invertible by (S (x) id)(R)");

    std::size_t n = a.dim();
    qt.u = zero_vec(n, a.field_order());
    qt.u_inv = zero_vec(n, a.field_order());
    for (const auto& [idx, c] : qt.R.terms()) {
        Vec sb = a.basis_antipode(idx[1]).to_vec(n);
        Vec ssb = a.antipode_inv(a.antipode_inv(zero_basis_vec(n, idx[1])));
        Vec ai = zero_basis_vec(n, idx[0]);
        Vec term = a.multiply(sb, ai);
        Vec term_inv = a.multiply(ssb, ai);
        for (std::size_t k = 0; k < n; ++k) {
            qt.u[k] += c * term[k];
            qt.u_inv[k] += c * term_inv[k];
        }
    }
    check(a.multiply(qt.u, qt.u_inv) == a.unit(), "Drinfel'd element inverse formula failed");
    return qt;
}

inline Vec drinfeld_element(const QuasitriangularHopf& qt) { return qt.u; }

// The quasitriangularity axioms, checked exactly.
inline AxiomReport verify_quasitriangular(const QuasitriangularHopf& qt) {
    const HopfAlgebra& a = qt.alg();
    std::size_t n = a.dim();
    AxiomReport report;

    // Delta^cop(x) R = R Delta(x) on all basis elements.
    bool intertwine = true;
    for (std::size_t i = 0; i < n && intertwine; ++i) {
        Tensor d = a.basis_coproduct(i);
        intertwine = a.tensor_multiply(d.flip(), qt.R) == a.tensor_multiply(qt.R, d);
    }
    report.add("R-intertwines-coproduct", intertwine);

    // (Delta (x) id)(R) = sum a_i (x) a_j (x) b_i b_j
    Tensor lhs(3, n), rhs(3, n);
    for (const auto& [idx, c] : qt.R.terms())
        for (const auto& [duo, c2] : a.basis_coproduct(idx[0]).terms())
            lhs.add_term({duo[0], duo[1], idx[1]}, c * c2);
    for (const auto& [i1, c1] : qt.R.terms())
        for (const auto& [i2, c2] : qt.R.terms())
            for (const auto& [k, ck] : a.basis_product(i1[1], i2[1]).terms)
                rhs.add_term({i1[0], i2[0], k}, c1 * c2 * ck);
    report.add("hexagon-left", lhs == rhs);

    // (id (x) Delta)(R) = sum a_i a_j (x) b_j (x) b_i
    Tensor lhs2(3, n), rhs2(3, n);
    for (const auto& [idx, c] : qt.R.terms())
        for (const auto& [duo, c2] : a.basis_coproduct(idx[1]).terms())
            lhs2.add_term({idx[0], duo[0], duo[1]}, c * c2);
    for (const auto& [i1, c1] : qt.R.terms())
        for (const auto& [i2, c2] : qt.R.terms())
            for (const auto& [k, ck] : a.basis_product(i1[0], i2[0]).terms)
                rhs2.add_term({k, i2[1], i1[1]}, c1 * c2 * ck);
    report.add("hexagon-right", lhs2 == rhs2);

    // R^{-1} = (S (x) id)(R) = (id (x) S^{-1})(R)
    Tensor alt = qt.R.map_leg(1, [&](std::size_t i) { return a.basis_antipode_inv(i).to_vec(n); });
    report.add("R-inverse-forms-agree", alt == qt.R_inv);

    // S^2(x) = u x u^{-1}
    bool s2 = true;
    for (std::size_t i = 0; i < n && s2; ++i) {
        Vec b = zero_basis_vec(n, i);
        Vec lhs3 = a.antipode(a.antipode(b));
        Vec rhs3 = a.multiply(a.multiply(qt.u, b), qt.u_inv);
        s2 = lhs3 == rhs3;
    }
    report.add("antipode-square-is-u-conjugation", s2);

    // Delta(u) = (u (x) u)(R'R)^{-1} = (R'R)^{-1}(u (x) u),
    // with (R'R)^{-1} = R^{-1} flip(R^{-1}).
    Tensor rr_inv = a.tensor_multiply(qt.R_inv, qt.R_inv.flip());
    Tensor uu(2, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!qt.u[i].is_zero() && !qt.u[j].is_zero()) uu.add_term({i, j}, qt.u[i] * qt.u[j]);
    Tensor du = a.coproduct(qt.u);
    report.add("coproduct-of-u",
               du == a.tensor_multiply(uu, rr_inv) && du == a.tensor_multiply(rr_inv, uu));

    report.add("rr-inverse", a.tensor_multiply(qt.r_prime_r(), rr_inv) == a.tensor_unit(2));
    return report;
}

struct ExponentResult {
    std::size_t value;       // smallest N >= 1 with u^N = 1
    std::size_t iterations;  // multiplications performed; bounded by dim^3
};

// Order of the Drinfel'd element by iterated exact multiplication, with the
// dim^3 safety bound.
inline ExponentResult exponent(const QuasitriangularHopf& qt) {
    const HopfAlgebra& a = qt.alg();
    Vec one = a.unit();
    Vec p = qt.u;
    std::size_t bound = a.dim() * a.dim() * a.dim();
    for (std::size_t k = 1; k <= bound; ++k) {
        if (p == one) return {k, k};
        p = a.multiply(p, qt.u);
    }
    throw ExponentBoundExceeded("Drinfel'd element order exceeds dim^3");
}

// Radford's quasitriangular structure on K[Z_n] for odd n:
// R = (1/n) sum_{i,j} zeta^{-ij} g^i (x) g^j with zeta = zeta_M^{(M/n) a}.
inline QuasitriangularHopf radford_example(std::size_t n, unsigned long field_order = 0,
                                           long root_power = 1) {
    if (n % 2 == 0) throw EvenOrder("Radford example needs odd n");
    if (field_order == 0) field_order = n;
    check(field_order % n == 0, "field order must be divisible by n");
    HopfPtr h = group_algebra(FiniteGroup::cyclic(n), field_order);
    check(gcd(Integer(root_power), Integer(static_cast<long>(n))) == 1,
          "root power must be a unit mod n");
    Cyclotomic ninv = Cyclotomic(Rational(1, static_cast<long>(n)));
    Tensor r(2, n);
    long step = static_cast<long>(field_order / n) * root_power;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            long e = -static_cast<long>(i * j % n) * step;
            r.add_term({i, j}, ninv * Cyclotomic::root_of_unity(field_order, e));
        }
    return make_quasitriangular(h, std::move(r));
}

// The grouplike g = u S(u^{-1}).
inline Vec modular_grouplike(const QuasitriangularHopf& qt) {
    return qt.alg().multiply(qt.u, qt.alg().antipode(qt.u_inv));
}

}  // namespace hopfmod

#endif
