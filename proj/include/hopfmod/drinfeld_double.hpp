#ifndef HOPFMOD_DRINFELD_DOUBLE_HPP
#define HOPFMOD_DRINFELD_DOUBLE_HPP

#include "hopfmod/quasitriangular.hpp"

namespace hopfmod {

// The Drinfel'd double D(H) on H* (x) H, with basis (b*_a (x) b_c) at the
// flat index a * dim(H) + c. Doubles of small algebras materialize their
// structure constants; above the threshold only operation closures are kept
// and entries are memoized on demand.
struct DoubleHandle {
    QuasitriangularHopf qt;  // the double with its canonical R-matrix
    HopfPtr base;            // H
    HopfPtr base_dual;       // H*
    Vec eval_form;           // e(phi (x) h) = phi(h), as values on the basis
    Vec eval_form_inv;       // e^{-1}(phi (x) h) = phi(S^{-1}(h))
    Vec integral;            // Lambda_D = lambda (x) Gamma, eps(Gamma) = 1, lambda(Gamma) = 1
    Vec right_integral_fun;  // rho_D(phi (x) h) = phi(Gamma) lambda(h)

    const HopfAlgebra& alg() const { return *qt.algebra; }
    std::size_t dim() const { return qt.algebra->dim(); }

    std::size_t index(std::size_t dual_part, std::size_t primal_part) const {
        return dual_part * base->dim() + primal_part;
    }
    std::pair<std::size_t, std::size_t> split_index(std::size_t flat) const {
        return {flat / base->dim(), flat % base->dim()};
    }
};

inline DoubleHandle drinfeld_double(const HopfPtr& h, std::size_t dense_threshold = 10) {
    check(h->materialized(), "double construction needs a materialized base algebra");
    std::size_t n = h->dim();
    unsigned long order = h->field_order();
    HopfPtr hs = dual_hopf(h);
    std::size_t dim = n * n;

    // Delta^2 on both factors, cached: the product formula consumes
    // the three-leg coproducts of each tensorand.
    auto comul3_dual = std::make_shared<std::vector<Tensor>>();
    auto comul3_base = std::make_shared<std::vector<Tensor>>();
    for (std::size_t i = 0; i < n; ++i) {
        comul3_dual->push_back(hs->coproduct_power(zero_basis_vec(n, i), 3));
        comul3_base->push_back(h->coproduct_power(zero_basis_vec(n, i), 3));
    }

    HopfAlgebra::Ops ops;

    // (phi (x) h)(phi' (x) h') = phi'_(1)(S^{-1}(h_(3))) phi'_(3)(h_(1)) phi phi'_(2) (x) h_(2) h'
    ops.mul = [h, hs, n, comul3_dual, comul3_base](std::size_t left, std::size_t right) {
        std::size_t a = left / n, c = left % n;
        std::size_t b = right / n, d = right % n;
        std::map<std::size_t, Cyclotomic> acc;
        for (const auto& [phi_legs, cphi] : (*comul3_dual)[b].terms()) {
            for (const auto& [h_legs, ch] : (*comul3_base)[c].terms()) {
                // phi'_(3)(h_(1)) = delta
                if (phi_legs[2] != h_legs[0]) continue;
                // phi'_(1)(S^{-1}(h_(3)))
                Cyclotomic f1 = Cyclotomic::zero();
                for (const auto& [k, cc] : h->basis_antipode_inv(h_legs[2]).terms)
                    if (k == phi_legs[0]) f1 += cc;
                if (f1.is_zero()) continue;
                Cyclotomic scale = cphi * ch * f1;
                for (const auto& [p, cp] : hs->basis_product(a, phi_legs[1]).terms)
                    for (const auto& [q, cq] : h->basis_product(h_legs[1], d).terms) {
                        Cyclotomic val = scale * cp * cq;
                        if (val.is_zero()) continue;
                        auto [it, fresh] = acc.emplace(p * n + q, val);
                        if (!fresh) it->second += val;
                    }
            }
        }
        SparseVec out;
        for (auto& [idx, c2] : acc)
            if (!c2.is_zero()) out.terms.emplace_back(idx, c2);
        return out;
    };

    // Coalgebra is H*^cop (x) H.
    ops.comul = [h, hs, n, dim](std::size_t flat) {
        std::size_t a = flat / n, c = flat % n;
        Tensor t(2, dim);
        for (const auto& [alegs, ca] : hs->basis_coproduct(a).terms())
            for (const auto& [clegs, cc] : h->basis_coproduct(c).terms())
                t.add_term({alegs[1] * n + clegs[0], alegs[0] * n + clegs[1]}, ca * cc);
        return t;
    };

    ops.counit = [h, hs, n](std::size_t flat) {
        return hs->basis_counit(flat / n) * h->basis_counit(flat % n);
    };

    ops.unit = [&] {
        SparseVec u;
        for (const auto& [a, ca] : hs->unit_sparse().terms)
            for (const auto& [c, cc] : h->unit_sparse().terms) u.terms.emplace_back(a * n + c, ca * cc);
        return u;
    }();

    // S_D(phi (x) h) = (eps (x) S(h)) (S^{-1*}(phi) (x) 1)
    auto mul_fn = ops.mul;
    SparseVec unit_sv = ops.unit;
    ops.antipode = [h, hs, n, mul_fn](std::size_t flat) {
        std::size_t a = flat / n, c = flat % n;
        std::map<std::size_t, Cyclotomic> acc;
        for (const auto& [k, ck] : h->basis_antipode(c).terms) {
            for (const auto& [e0, ce] : hs->unit_sparse().terms) {
                std::size_t left = e0 * n + k;
                for (const auto& [p, cp] : hs->basis_antipode_inv(a).terms) {
                    for (const auto& [o, co] : h->unit_sparse().terms) {
                        std::size_t right = p * n + o;
                        SparseVec prod = mul_fn(left, right);
                        for (const auto& [idx, cm] : prod.terms) {
                            Cyclotomic val = ck * ce * cp * co * cm;
                            if (val.is_zero()) continue;
                            auto [it, fresh] = acc.emplace(idx, val);
                            if (!fresh) it->second += val;
                        }
                    }
                }
            }
        }
        SparseVec out;
        for (auto& [idx, c2] : acc)
            if (!c2.is_zero()) out.terms.emplace_back(idx, c2);
        return out;
    };

    bool materialize = n <= dense_threshold;
    if (!materialize) {
        // Lazy doubles rely on S_D being an involution, which holds because H
        // is involutory (then u_D^{-1} = sum b*_i (x) b_i is central).
        for (std::size_t i = 0; i < n; ++i) {
            Vec bi = zero_basis_vec(n, i);
            check(h->antipode(h->antipode(bi)) == bi, "lazy double requires an involutory base antipode");
        }
        ops.antipode_inv = ops.antipode;
    } else {
        ops.antipode_inv = ops.antipode;  // patched below once the matrix is known
    }

    std::vector<std::string> labels;
    labels.reserve(dim);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t c = 0; c < n; ++c) labels.push_back(hs->labels()[a] + "(x)" + h->labels()[c]);

    HopfPtr d_alg = HopfAlgebra::make(dim, order, labels, ops, materialize);

    if (materialize) {
        // Exact inverse of the antipode from the materialized matrix.
        Matrix s = d_alg->antipode_matrix();
        Matrix s_inv = matrix_inverse(s);
        HopfAlgebra::Ops patched = ops;
        patched.antipode_inv = [s_inv, dim](std::size_t i) {
            SparseVec out;
            for (std::size_t k = 0; k < dim; ++k)
                if (!s_inv(k, i).is_zero()) out.terms.emplace_back(k, s_inv(k, i));
            return out;
        };
        d_alg = HopfAlgebra::make(dim, order, labels, patched, true);
    }

    // R = sum_i (eps (x) b_i) (x) (b*_i (x) 1)
    Tensor r(2, dim);
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& [a, ca] : hs->unit_sparse().terms)
            for (const auto& [c, cc] : h->unit_sparse().terms)
                r.add_term({a * n + i, i * n + c}, ca * cc);

    DoubleHandle handle;
    handle.qt = make_quasitriangular(d_alg, std::move(r));
    handle.base = h;
    handle.base_dual = hs;

    handle.eval_form = zero_vec(dim, order);
    handle.eval_form_inv = zero_vec(dim, order);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t c = 0; c < n; ++c) {
            if (a == c) handle.eval_form[a * n + c] = Cyclotomic::one();
            for (const auto& [k, cc] : h->basis_antipode_inv(c).terms)
                if (k == a) handle.eval_form_inv[a * n + c] += cc;
        }

    Integrals base_int = integrals(h);
    handle.integral = zero_vec(dim, order);
    handle.right_integral_fun = zero_vec(dim, order);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t c = 0; c < n; ++c) {
            handle.integral[a * n + c] = base_int.dual_integral[a] * base_int.integral[c];
            handle.right_integral_fun[a * n + c] = base_int.integral[a] * base_int.dual_integral[c];
        }
    return handle;
}

// (Lambda_D, rho_D) under the normalization eps(Gamma) = 1, lambda(Gamma) = 1.
inline std::pair<Vec, Vec> double_integrals(const DoubleHandle& d) {
    return {d.integral, d.right_integral_fun};
}

// The Hopf algebra retractions pi, pi' of the double of a quasitriangular
// algebra, and Psi = (pi (x) pi') Delta_D as a matrix into A (x) A (flat
// index i * dim(A) + j).
struct PsiMaps {
    Matrix pi;        // dim(A) x dim(A)^2
    Matrix pi_prime;  // dim(A) x dim(A)^2
    Matrix psi;       // dim(A)^2 x dim(A)^2
};

inline PsiMaps psi_maps(const QuasitriangularHopf& a, const DoubleHandle& d) {
    check(d.base.get() == a.algebra.get(), "psi_maps: double does not belong to this algebra");
    const HopfAlgebra& alg = a.alg();
    std::size_t n = alg.dim();
    std::size_t dim = n * n;

    PsiMaps maps;
    maps.pi = Matrix(n, dim, alg.field_order());
    maps.pi_prime = Matrix(n, dim, alg.field_order());

    for (std::size_t i = 0; i < n; ++i) {
        // (b*_i (x) id)(R) and (S (x) b*_i)(R)
        Vec contraction = zero_vec(n, alg.field_order());
        Vec contraction_prime = zero_vec(n, alg.field_order());
        for (const auto& [idx, c] : a.R.terms()) {
            if (idx[0] == i) contraction[idx[1]] += c;
            if (idx[1] == i) {
                for (const auto& [k, ck] : alg.basis_antipode(idx[0]).terms)
                    contraction_prime[k] += c * ck;
            }
        }
        for (std::size_t j = 0; j < n; ++j) {
            Vec pij = alg.multiply(contraction, zero_basis_vec(n, j));
            Vec ppij = alg.multiply(contraction_prime, zero_basis_vec(n, j));
            for (std::size_t k = 0; k < n; ++k) {
                maps.pi(k, i * n + j) = pij[k];
                maps.pi_prime(k, i * n + j) = ppij[k];
            }
        }
    }

    maps.psi = Matrix(dim, dim, alg.field_order());
    for (std::size_t flat = 0; flat < dim; ++flat) {
        Tensor dd = d.alg().basis_coproduct(flat);
        for (const auto& [idx, c] : dd.terms()) {
            // (pi (x) pi')(x_(1) (x) x_(2))
            for (std::size_t p = 0; p < n; ++p) {
                const Cyclotomic& cp = maps.pi(p, idx[0]);
                if (cp.is_zero()) continue;
                for (std::size_t q = 0; q < n; ++q) {
                    const Cyclotomic& cq = maps.pi_prime(q, idx[1]);
                    if (cq.is_zero()) continue;
                    maps.psi(p * n + q, flat) += c * cp * cq;
                }
            }
        }
    }
    return maps;
}

}  // namespace hopfmod

#endif
