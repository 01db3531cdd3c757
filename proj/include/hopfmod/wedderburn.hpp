#ifndef HOPFMOD_WEDDERBURN_HPP
#define HOPFMOD_WEDDERBURN_HPP

#include <algorithm>
#include <random>

#include "hopfmod/drinfeld_double.hpp"
#include "hopfmod/roots.hpp"

namespace hopfmod {

// Exact basis of the center Z(A): solutions of z b_i = b_i z for all i.
inline std::vector<Vec> center(const HopfAlgebra& a) {
    std::size_t n = a.dim();
    Matrix sys(n * n, n, a.field_order());
    for (std::size_t i = 0; i < n; ++i) {
        // column j: coefficients of b_j b_i - b_i b_j
        for (std::size_t j = 0; j < n; ++j) {
            for (const auto& [k, c] : a.basis_product(j, i).terms) sys(i * n + k, j) += c;
            for (const auto& [k, c] : a.basis_product(i, j).terms) sys(i * n + k, j) -= c;
        }
    }
    return matrix_kernel(sys);
}

// Wedderburn data of a split semisimple algebra: centrally primitive
// idempotents, degrees, irreducible characters, and the character-ring side
// (class sums, idempotents p_i, xi_i) when an R-matrix is present.
struct SemisimpleData {
    std::size_t k = 0;
    unsigned long field_order = 1;
    std::vector<Vec> idempotents;      // e_i as elements of A
    std::vector<long> degrees;         // n_i
    std::vector<Vec> characters;       // chi_i as value vectors on the basis
    std::vector<std::size_t> dual;     // i -> i* with e_{i*} = S(e_i)
    Vec regular_character;             // chi_R = sum n_i chi_i

    // present for quasitriangular input
    bool has_character_ring = false;
    Cyclotomic kappa;                  // rho = kappa chi_R
    bool linear = false;               // chi_R(u) = chi_R(u^{-1})
    std::vector<Vec> class_sums;       // z_i in A
    std::vector<Vec> ring_idempotents; // p_i in A*, value vectors
    Matrix xi_table;                   // xi_i(chi_j)
    Vec adjoint_character;             // chi_A = sum chi_i chi_{i*}

    Cyclotomic omega(std::size_t i, const Vec& z) const {
        return evaluate_functional(characters[i], z) / Cyclotomic(degrees[i]);
    }
};

namespace detail {

struct SplitBlock {
    Vec idempotent;     // current central idempotent
    std::size_t rank;   // dim of its central component
};

// Splits the commutative center along the eigenspaces of multiplication by z.
inline bool refine_block(const HopfAlgebra& a, const std::vector<Vec>& zbasis, SplitBlock& block,
                         const Vec& z, std::vector<SplitBlock>& out, const RootConfig& roots_config,
                         Polynomial* failed_poly) {
    std::size_t n = a.dim();
    // zf = z e restricted to the component; represent the component through
    // the span of {z_j e} inside the center.
    Vec zf = a.multiply(z, block.idempotent);

    // Basis of the component subspace e Z: reduce {e z_j}.
    std::vector<Vec> component;
    {
        std::vector<Vec> cand;
        for (const auto& zb : zbasis) cand.push_back(a.multiply(block.idempotent, zb));
        Matrix m = Matrix::from_columns(cand);
        Matrix ech = m;
        auto pivots = ech.echelonize();
        // pivot columns of the original matrix give a basis
        for (auto c : pivots) component.push_back(m.column(c));
    }
    check(component.size() == block.rank, "component dimension drifted during splitting");
    if (block.rank == 1) {
        out.push_back(block);
        return true;
    }

    // Matrix of multiplication by zf on the component.
    Matrix compat = Matrix::from_columns(component);
    Matrix mult(block.rank, block.rank, a.field_order());
    for (std::size_t j = 0; j < block.rank; ++j) {
        Vec img = a.multiply(zf, component[j]);
        auto sol = matrix_solve(compat, img);
        check(sol.has_value(), "component is not closed under multiplication");
        for (std::size_t i = 0; i < block.rank; ++i) mult(i, j) = (*sol)[i];
    }

    Polynomial mu = minimal_polynomial(mult);
    auto roots = find_roots_in_field(mu, a.field_order(), roots_config);
    if (roots.size() != static_cast<std::size_t>(mu.degree())) {
        if (failed_poly) *failed_poly = mu;
        return false;  // does not split over this field
    }
    if (roots.size() == 1) {
        // z acts as a scalar: no refinement from this element
        out.push_back(block);
        return true;
    }

    // Eigenprojections pi_r = prod_{s != r} (zf - s e)/(r - s), exact.
    for (const auto& r : roots) {
        Vec proj = block.idempotent;
        for (const auto& s : roots) {
            if (s == r) continue;
            Vec shifted = zf;
            for (std::size_t t = 0; t < n; ++t) shifted[t] -= s * block.idempotent[t];
            proj = a.multiply(proj, shifted);
            Cyclotomic inv = (r - s).inverse();
            for (auto& c : proj) c *= inv;
        }
        if (is_zero_vec(proj)) continue;
        SplitBlock piece;
        piece.idempotent = proj;
        // rank of the new component
        std::vector<Vec> cand;
        for (const auto& zb : zbasis) cand.push_back(a.multiply(proj, zb));
        piece.rank = Matrix::from_columns(cand).rank();
        out.push_back(std::move(piece));
    }
    return true;
}

}  // namespace detail

// Splits the center into centrally primitive idempotents over Q_M by the
// deterministic element sweep: center basis vectors in index order, then
// pairwise sums, then seeded random combinations. Characters and degrees
// are read off the regular representation.
inline SemisimpleData split_center(const HopfAlgebra& a, const RootConfig& roots_config = RootConfig(),
                                   std::uint64_t seed = 0x5eed) {
    std::size_t n = a.dim();
    unsigned long order = a.field_order();
    std::vector<Vec> zbasis = center(a);
    std::size_t kdim = zbasis.size();
    check(kdim >= 1, "center is empty");

    std::vector<detail::SplitBlock> blocks{{a.unit(), kdim}};
    auto finished = [&] {
        for (const auto& b : blocks)
            if (b.rank > 1) return false;
        return true;
    };

    // Deterministic sweep of splitting elements.
    std::vector<Vec> sweep = zbasis;
    for (std::size_t i = 0; i < kdim && kdim > 1; ++i)
        for (std::size_t j = i + 1; j < kdim; ++j) {
            Vec s = zbasis[i];
            for (std::size_t t = 0; t < n; ++t) s[t] += zbasis[j][t];
            sweep.push_back(std::move(s));
        }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coeff(-4, 4);
    for (int extra = 0; extra < 16; ++extra) {
        Vec s = zero_vec(n, order);
        for (const auto& zb : zbasis) {
            Cyclotomic c{Rational(coeff(rng))};
            for (std::size_t t = 0; t < n; ++t) s[t] += c * zb[t];
        }
        sweep.push_back(std::move(s));
    }

    Polynomial last_failure;
    bool had_failure = false;
    for (const auto& z : sweep) {
        if (finished()) break;
        std::vector<detail::SplitBlock> next;
        for (auto& block : blocks) {
            if (block.rank == 1) {
                next.push_back(block);
                continue;
            }
            Polynomial failed;
            if (!detail::refine_block(a, zbasis, block, z, next, roots_config, &failed)) {
                had_failure = true;
                if (!failed.is_zero()) last_failure = failed;
                next.push_back(block);  // keep unrefined, another element may split it
            }
        }
        blocks = std::move(next);
    }
    if (!finished()) {
        std::string detail = "component stayed unsplit after the element sweep";
        if (had_failure && !last_failure.is_zero()) {
            std::ostringstream os;
            os << detail << "; offending minimal polynomial: " << last_failure;
            throw SplitFailure(os.str());
        }
        throw SplitFailure(detail);
    }

    SemisimpleData sd;
    sd.field_order = order;
    sd.k = blocks.size();
    for (auto& b : blocks) sd.idempotents.push_back(std::move(b.idempotent));

    // Degrees via n_i^2 = tr_reg(e_i); characters via chi_i(b) = tr_reg(b e_i)/n_i.
    std::vector<Vec> chars;
    std::vector<long> degs;
    for (const auto& e : sd.idempotents) {
        Cyclotomic t = a.regular_trace(e);
        if (!t.is_rational() || !is_integer(t.to_rational()))
            throw NonSquareDegree("tr_reg(e_i) is not an integer");
        long n2 = to_long(t.to_rational());
        long d = to_long(Integer(exact_isqrt(Integer(n2))));
        degs.push_back(d);
        Vec chi = zero_vec(n, order);
        Cyclotomic dinv = Cyclotomic(d).inverse();
        for (std::size_t b = 0; b < n; ++b) {
            Vec be = a.multiply(zero_basis_vec(n, b), e);
            chi[b] = a.regular_trace(be) * dinv;
        }
        chars.push_back(std::move(chi));
    }

    // Canonical order: the block carrying the integral first (the unique one
    // with eps(e_i) != 0), the rest by (degree, character value vector).
    std::vector<std::size_t> perm(sd.k);
    for (std::size_t i = 0; i < sd.k; ++i) perm[i] = i;
    std::size_t trivial = sd.k;
    for (std::size_t i = 0; i < sd.k; ++i)
        if (!a.counit(sd.idempotents[i]).is_zero()) {
            check(trivial == sd.k, "counit does not single out one idempotent");
            trivial = i;
        }
    check(trivial < sd.k, "no idempotent carries the counit");
    std::sort(perm.begin(), perm.end(), [&](std::size_t x, std::size_t y) {
        if (x == trivial || y == trivial) return x == trivial && y != trivial;
        if (degs[x] != degs[y]) return degs[x] < degs[y];
        for (std::size_t t = 0; t < n; ++t) {
            int c = Cyclotomic::compare(chars[x][t], chars[y][t]);
            if (c != 0) return c < 0;
        }
        return false;
    });

    std::vector<Vec> e_sorted, chi_sorted;
    std::vector<long> deg_sorted;
    for (auto p : perm) {
        e_sorted.push_back(sd.idempotents[p]);
        chi_sorted.push_back(chars[p]);
        deg_sorted.push_back(degs[p]);
    }
    sd.idempotents = std::move(e_sorted);
    sd.characters = std::move(chi_sorted);
    sd.degrees = std::move(deg_sorted);

    // dual involution from e_{i*} = S(e_i)
    sd.dual.assign(sd.k, sd.k);
    for (std::size_t i = 0; i < sd.k; ++i) {
        Vec s = a.antipode(sd.idempotents[i]);
        for (std::size_t j = 0; j < sd.k; ++j)
            if (s == sd.idempotents[j]) {
                sd.dual[i] = j;
                break;
            }
        check(sd.dual[i] < sd.k, "antipode does not permute the idempotents");
    }

    sd.regular_character = zero_vec(n, order);
    for (std::size_t i = 0; i < sd.k; ++i)
        for (std::size_t t = 0; t < n; ++t)
            sd.regular_character[t] += Cyclotomic(sd.degrees[i]) * sd.characters[i][t];
    return sd;
}

// Phi(phi) = (id (x) phi)(R'R) and Phi-bar(phi) = (phi (x) id)(R'R).
inline Vec phi_map(const QuasitriangularHopf& qt, const Vec& functional) {
    Tensor rr = qt.r_prime_r();
    return rr.contract_leg(1, functional).to_vec();
}

inline Vec phibar_map(const QuasitriangularHopf& qt, const Vec& functional) {
    Tensor rr = qt.r_prime_r();
    return rr.contract_leg(0, functional).to_vec();
}

// Matrix of Phi-bar as a map A* -> A on the dual basis.
inline Matrix phibar_matrix(const QuasitriangularHopf& qt) {
    std::size_t n = qt.alg().dim();
    Matrix m(n, n, qt.alg().field_order());
    Tensor rr = qt.r_prime_r();
    for (const auto& [idx, c] : rr.terms()) m(idx[0], idx[1]) += c;
    // Phi-bar(b*_j) = sum over terms with first leg evaluated at b*_j:
    // (b*_j (x) id)(R'R) -> column j.
    return m.transpose();
}

inline Matrix phi_matrix(const QuasitriangularHopf& qt) {
    std::size_t n = qt.alg().dim();
    Matrix m(n, n, qt.alg().field_order());
    Tensor rr = qt.r_prime_r();
    for (const auto& [idx, c] : rr.terms()) m(idx[1], idx[0]) += c;
    return m.transpose();
}

inline bool is_factorizable(const QuasitriangularHopf& qt) {
    return phibar_matrix(qt).rank() == qt.alg().dim();
}

// iota(a) = rho_(1)(a) rho_(2), i.e. iota(a)(b) = rho(a b), with rho = kappa chi_R.
inline Vec iota_map(const QuasitriangularHopf& qt, const Cyclotomic& kappa, const Vec& chi_r, const Vec& a_elem) {
    const HopfAlgebra& a = qt.alg();
    std::size_t n = a.dim();
    Vec out = zero_vec(n, a.field_order());
    for (std::size_t b = 0; b < n; ++b)
        out[b] = kappa * evaluate_functional(chi_r, a.multiply(a_elem, zero_basis_vec(n, b)));
    return out;
}

// Fills in the character-ring data (xi_i, p_i, z_i, chi_A, kappa) of a
// factorizable semisimple algebra. The kappa convention: if
// chi_R(u) = chi_R(u^{-1}), kappa = 1/chi_R(u) and the modular action is
// linear; otherwise kappa = 1 and all kappa-sensitive identities are only
// checked projectively.
inline void character_ring_data(const QuasitriangularHopf& qt, SemisimpleData& sd) {
    const HopfAlgebra& a = qt.alg();
    std::size_t n = a.dim();
    unsigned long order = a.field_order();

    Cyclotomic chi_u = evaluate_functional(sd.regular_character, qt.u);
    Cyclotomic chi_u_inv = evaluate_functional(sd.regular_character, qt.u_inv);
    sd.linear = chi_u == chi_u_inv;
    sd.kappa = sd.linear ? chi_u.inverse() : Cyclotomic::one();

    // xi_i(chi_j) = omega_i(Phi(chi_j))
    sd.xi_table = Matrix(sd.k, sd.k, order);
    for (std::size_t j = 0; j < sd.k; ++j) {
        Vec phi_chi = phi_map(qt, sd.characters[j]);
        for (std::size_t i = 0; i < sd.k; ++i) sd.xi_table(i, j) = sd.omega(i, phi_chi);
    }

    // class sums z_i = sum_j xi_i(chi_j)/n_j e_j
    sd.class_sums.clear();
    for (std::size_t i = 0; i < sd.k; ++i) {
        Vec z = zero_vec(n, order);
        for (std::size_t j = 0; j < sd.k; ++j) {
            Cyclotomic c = sd.xi_table(i, j) / Cyclotomic(sd.degrees[j]);
            for (std::size_t t = 0; t < n; ++t) z[t] += c * sd.idempotents[j][t];
        }
        sd.class_sums.push_back(std::move(z));
    }

    // chi_A = sum_i chi_i chi_{i*}
    sd.adjoint_character = zero_vec(n, order);
    for (std::size_t i = 0; i < sd.k; ++i) {
        Vec prod = a.functional_product(sd.characters[i], sd.characters[sd.dual[i]]);
        for (std::size_t t = 0; t < n; ++t) sd.adjoint_character[t] += prod[t];
    }

    // p_i = (1/xi_i(chi_A)) sum_j xi_i(chi_j) chi_{j*}
    sd.ring_idempotents.clear();
    for (std::size_t i = 0; i < sd.k; ++i) {
        Cyclotomic xi_chi_a = Cyclotomic::zero(order);
        for (std::size_t j = 0; j < sd.k; ++j)
            xi_chi_a += sd.xi_table(i, j) * sd.xi_table(i, sd.dual[j]);
        check(!xi_chi_a.is_zero(), "xi_i(chi_A) vanished");
        Cyclotomic inv = xi_chi_a.inverse();
        Vec p = zero_vec(n, order);
        for (std::size_t j = 0; j < sd.k; ++j) {
            Cyclotomic c = inv * sd.xi_table(i, j);
            for (std::size_t t = 0; t < n; ++t) p[t] += c * sd.characters[sd.dual[j]][t];
        }
        sd.ring_idempotents.push_back(std::move(p));
    }
    sd.has_character_ring = true;
}

inline Cyclotomic xi_of_functional(const QuasitriangularHopf& qt, const SemisimpleData& sd, std::size_t i,
                                   const Vec& functional) {
    return sd.omega(i, phi_map(qt, functional));
}

inline Cyclotomic xi_of_adjoint(const SemisimpleData& sd, std::size_t i) {
    Cyclotomic s = Cyclotomic::zero(sd.field_order);
    for (std::size_t j = 0; j < sd.k; ++j) s += sd.xi_table(i, j) * sd.xi_table(i, sd.dual[j]);
    return s;
}

// The bilinear form <chi, chi'>_* = (chi S*(chi'))(Lambda) with eps(Lambda)=1.
inline Cyclotomic character_pairing(const HopfAlgebra& a, const Vec& integral_eps1, const Vec& chi,
                                    const Vec& chi_prime) {
    std::size_t n = a.dim();
    // S*(chi') has values chi'(S(b_i))
    Vec schi = zero_vec(n, a.field_order());
    for (std::size_t i = 0; i < n; ++i)
        schi[i] = evaluate_functional(chi_prime, a.basis_antipode(i).to_vec(n));
    return evaluate_functional(a.functional_product(chi, schi), integral_eps1);
}

// Simple modules: action matrices on A f for a primitive idempotent f of each
// block, obtained by refining the centrally primitive idempotents through
// corner algebras f A f.
struct HModule {
    std::size_t dim = 0;
    std::vector<Matrix> action;  // one matrix per basis element of the algebra
    HopfPtr algebra;

    Matrix act(const Vec& x) const {
        Matrix m(dim, dim, algebra->field_order());
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i].is_zero()) continue;
            m = m + x[i] * action[i];
        }
        return m;
    }

    Vec character() const {
        Vec chi = zero_vec(algebra->dim(), algebra->field_order());
        for (std::size_t i = 0; i < algebra->dim(); ++i) chi[i] = action[i].trace();
        return chi;
    }
};

inline bool verify_module(const HModule& v) {
    const HopfAlgebra& a = *v.algebra;
    std::size_t n = a.dim();
    // rho(1) = id
    Matrix id = Matrix::identity(v.dim, a.field_order());
    if (v.act(a.unit()) != id) return false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Matrix lhs = v.action[i] * v.action[j];
            if (lhs != v.act(a.basis_product(i, j).to_vec(n))) return false;
        }
    return true;
}

namespace detail {

// Refines a (not necessarily central) idempotent f until f A f is one
// dimensional, sweeping corner elements f b_i f.
inline Vec primitive_idempotent(const HopfAlgebra& a, Vec f, const RootConfig& roots_config) {
    std::size_t n = a.dim();
    while (true) {
        // basis of f A f
        std::vector<Vec> corner;
        {
            std::vector<Vec> cand;
            for (std::size_t i = 0; i < n; ++i)
                cand.push_back(a.multiply(f, a.multiply(zero_basis_vec(n, i), f)));
            Matrix m = Matrix::from_columns(cand);
            Matrix ech = m;
            auto pivots = ech.echelonize();
            for (auto c : pivots) corner.push_back(m.column(c));
        }
        if (corner.size() == 1) return f;

        Matrix basis = Matrix::from_columns(corner);
        bool refined = false;
        for (std::size_t i = 0; i < n && !refined; ++i) {
            Vec t = a.multiply(f, a.multiply(zero_basis_vec(n, i), f));
            if (is_zero_vec(t)) continue;
            // multiplication by t on the corner, in the corner basis
            Matrix mult(corner.size(), corner.size(), a.field_order());
            bool closed = true;
            for (std::size_t j = 0; j < corner.size() && closed; ++j) {
                Vec img = a.multiply(t, corner[j]);
                auto sol = matrix_solve(basis, img);
                if (!sol) {
                    closed = false;
                    break;
                }
                for (std::size_t r = 0; r < corner.size(); ++r) mult(r, j) = (*sol)[r];
            }
            if (!closed) continue;
            Polynomial mu = minimal_polynomial(mult);
            auto roots = find_roots_in_field(mu, a.field_order(), roots_config);
            if (roots.size() != static_cast<std::size_t>(mu.degree()) || roots.size() < 2) continue;
            // eigenprojection onto the first eigenvalue, within the unital corner (unit f)
            Vec proj = f;
            const Cyclotomic& r0 = roots[0];
            for (const auto& s : roots) {
                if (s == r0) continue;
                Vec shifted = t;
                for (std::size_t q = 0; q < n; ++q) shifted[q] -= s * f[q];
                proj = a.multiply(proj, shifted);
                Cyclotomic inv = (r0 - s).inverse();
                for (auto& c : proj) c *= inv;
            }
            if (is_zero_vec(proj) || proj == f) continue;
            f = proj;
            refined = true;
        }
        if (!refined)
            throw SplitFailure("no corner element splits the idempotent over this field");
    }
}

}  // namespace detail

// The simple left module A f of the i-th block, with exact action matrices.
inline HModule simple_module(const HopfPtr& ap, const SemisimpleData& sd, std::size_t index,
                             const RootConfig& roots_config = RootConfig()) {
    const HopfAlgebra& a = *ap;
    std::size_t n = a.dim();
    Vec f = detail::primitive_idempotent(a, sd.idempotents[index], roots_config);
    // basis of A f
    std::vector<Vec> cols;
    {
        std::vector<Vec> cand;
        for (std::size_t i = 0; i < n; ++i) cand.push_back(a.multiply(zero_basis_vec(n, i), f));
        Matrix m = Matrix::from_columns(cand);
        Matrix ech = m;
        auto pivots = ech.echelonize();
        for (auto c : pivots) cols.push_back(m.column(c));
    }
    check(cols.size() == static_cast<std::size_t>(sd.degrees[index]),
          "module dimension does not match the block degree");
    Matrix basis = Matrix::from_columns(cols);

    HModule v;
    v.dim = cols.size();
    v.algebra = ap;
    for (std::size_t i = 0; i < n; ++i) {
        Matrix act(v.dim, v.dim, a.field_order());
        for (std::size_t j = 0; j < v.dim; ++j) {
            Vec img = a.multiply(zero_basis_vec(n, i), cols[j]);
            auto sol = matrix_solve(basis, img);
            check(sol.has_value(), "module is not closed under the action");
            for (std::size_t r = 0; r < v.dim; ++r) act(r, j) = (*sol)[r];
        }
        v.action.push_back(std::move(act));
    }
    check(verify_module(v), "extracted module fails the representation property");
    return v;
}

}  // namespace hopfmod

#endif
