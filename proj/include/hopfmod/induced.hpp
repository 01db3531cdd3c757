#ifndef HOPFMOD_INDUCED_HPP
#define HOPFMOD_INDUCED_HPP

#include "hopfmod/modular.hpp"

namespace hopfmod {

// Module constructions over a fixed Hopf algebra.

inline HModule trivial_module(const HopfPtr& h) {
    HModule v;
    v.dim = 1;
    v.algebra = h;
    for (std::size_t i = 0; i < h->dim(); ++i) {
        Matrix m(1, 1, h->field_order());
        m(0, 0) = h->basis_counit(i);
        v.action.push_back(std::move(m));
    }
    return v;
}

inline HModule regular_module(const HopfPtr& h) {
    HModule v;
    v.dim = h->dim();
    v.algebra = h;
    for (std::size_t i = 0; i < h->dim(); ++i)
        v.action.push_back(h->left_multiplication(zero_basis_vec(h->dim(), i)));
    return v;
}

inline HModule tensor_module(const HModule& v, const HModule& w) {
    check(v.algebra.get() == w.algebra.get(), "tensor_module: different algebras");
    const HopfAlgebra& h = *v.algebra;
    HModule t;
    t.dim = v.dim * w.dim;
    t.algebra = v.algebra;
    for (std::size_t i = 0; i < h.dim(); ++i) {
        Matrix m(t.dim, t.dim, h.field_order());
        for (const auto& [legs, c] : h.basis_coproduct(i).terms()) {
            const Matrix& a = v.action[legs[0]];
            const Matrix& b = w.action[legs[1]];
            for (std::size_t r1 = 0; r1 < v.dim; ++r1)
                for (std::size_t c1 = 0; c1 < v.dim; ++c1) {
                    if (a(r1, c1).is_zero()) continue;
                    for (std::size_t r2 = 0; r2 < w.dim; ++r2)
                        for (std::size_t c2 = 0; c2 < w.dim; ++c2) {
                            if (b(r2, c2).is_zero()) continue;
                            m(r1 * w.dim + r2, c1 * w.dim + c2) += c * a(r1, c1) * b(r2, c2);
                        }
                }
        }
        t.action.push_back(std::move(m));
    }
    return t;
}

inline HModule tensor_power_module(const HModule& v, unsigned m) {
    check(m >= 1, "tensor_power_module: m >= 1");
    HModule t = v;
    for (unsigned i = 1; i < m; ++i) t = tensor_module(t, v);
    return t;
}

inline HModule dual_module(const HModule& v) {
    const HopfAlgebra& h = *v.algebra;
    HModule d;
    d.dim = v.dim;
    d.algebra = v.algebra;
    for (std::size_t i = 0; i < h.dim(); ++i) {
        Matrix m(v.dim, v.dim, h.field_order());
        // rho_{V*}(b_i) = rho_V(S(b_i))^T
        for (const auto& [k, c] : h.basis_antipode(i).terms) m = m + c * v.action[k].transpose();
        d.action.push_back(std::move(m));
    }
    return d;
}

// The induced D-module on H* (x) V^{(x) m}, with the explicit module
// structure (phi (x) h).(phi' (x) v) =
// phi'_(1)(S(h_(3))) phi'_(3)(h_(1)) phi phi'_(2) (x) h_(2).v.
// Basis index of (b*_a (x) v_w) is a * dim(V^m) + w.
struct InducedRep {
    const DoubleHandle* d = nullptr;
    HModule base;      // V
    HModule power;     // V^{(x) m}; for m = 0 the trivial H-module
    unsigned m = 0;
    std::size_t n = 0;     // dim H
    std::size_t vdim = 0;  // dim V^{(x) m}
    std::size_t dim = 0;   // n * vdim

    std::size_t index(std::size_t dual_part, std::size_t vec_part) const {
        return dual_part * vdim + vec_part;
    }
};

inline InducedRep induce(const DoubleHandle& d, const HModule& v, unsigned m,
                         std::size_t size_cap = 4096) {
    check(v.algebra.get() == d.base.get(), "induce: module is not over the base algebra");
    InducedRep rep;
    rep.d = &d;
    rep.base = v;
    rep.power = m == 0 ? trivial_module(d.base) : tensor_power_module(v, m);
    rep.m = m;
    rep.n = d.base->dim();
    rep.vdim = rep.power.dim;
    rep.dim = rep.n * rep.vdim;
    if (rep.dim > size_cap)
        throw DimensionOverflow("induced module dimension " + std::to_string(rep.dim) +
                                " exceeds the cap " + std::to_string(size_cap));
    return rep;
}

// Action of the D-basis element b*_p (x) b_q on the induced module.
inline Matrix induced_action(const InducedRep& rep, std::size_t p, std::size_t q) {
    const HopfPtr& h = rep.d->base;
    const HopfPtr& hs = rep.d->base_dual;
    std::size_t n = rep.n;
    Matrix out(rep.dim, rep.dim, h->field_order());
    Tensor h3 = h->coproduct_power(zero_basis_vec(n, q), 3);
    for (std::size_t a = 0; a < n; ++a) {
        Tensor f3 = hs->coproduct_power(zero_basis_vec(n, a), 3);
        for (const auto& [fl, cf] : f3.terms()) {
            for (const auto& [hl, ch] : h3.terms()) {
                // phi'_(1)(S(h_(3))): coefficient of b_{fl[0]} in S(b_{hl[2]})
                Cyclotomic f1 = Cyclotomic::zero();
                for (const auto& [k, c] : h->basis_antipode(hl[2]).terms)
                    if (k == fl[0]) f1 += c;
                if (f1.is_zero()) continue;
                // phi'_(3)(h_(1)) = delta
                if (fl[2] != hl[0]) continue;
                Cyclotomic scale = cf * ch * f1;
                const Matrix& act = rep.power.action[hl[1]];
                for (const auto& [pp, cp] : hs->basis_product(p, fl[1]).terms)
                    for (std::size_t w = 0; w < rep.vdim; ++w)
                        for (std::size_t w2 = 0; w2 < rep.vdim; ++w2) {
                            if (act(w2, w).is_zero()) continue;
                            out(rep.index(pp, w2), rep.index(a, w)) += scale * cp * act(w2, w);
                        }
            }
        }
    }
    return out;
}

// rho_m(z) for a central z (coefficient vector over the D basis):
// rho_m(z)(phi (x) v) = sum_j phi phi_j (x) Delta legs of h_j acting on v.
inline Matrix induced_central_action(const InducedRep& rep, const Vec& z) {
    const HopfPtr& h = rep.d->base;
    const HopfPtr& hs = rep.d->base_dual;
    std::size_t n = rep.n;
    Matrix out(rep.dim, rep.dim, h->field_order());
    for (std::size_t flat = 0; flat < z.size(); ++flat) {
        if (z[flat].is_zero()) continue;
        std::size_t a0 = flat / n, c0 = flat % n;
        const Matrix& act = rep.power.action[c0];
        for (std::size_t a = 0; a < n; ++a) {
            for (const auto& [pp, cp] : hs->basis_product(a, a0).terms) {
                Cyclotomic scale = z[flat] * cp;
                for (std::size_t w = 0; w < rep.vdim; ++w)
                    for (std::size_t w2 = 0; w2 < rep.vdim; ++w2) {
                        if (act(w2, w).is_zero()) continue;
                        out(rep.index(pp, w2), rep.index(a, w)) += scale * act(w2, w);
                    }
            }
        }
    }
    return out;
}

// beta_{V,W}: Ind(V (x) W) -> Ind(W (x) V), phi (x) v (x) w -> sum_i phi b*_i (x) w (x) b_i.v.
// Both sides are identified with H* (x) V (x) W resp. H* (x) W (x) V flat indices.
inline Matrix beta_map(const DoubleHandle& d, const HModule& v, const HModule& w) {
    const HopfPtr& h = d.base;
    const HopfPtr& hs = d.base_dual;
    std::size_t n = h->dim();
    std::size_t dim = n * v.dim * w.dim;
    Matrix out(dim, dim, h->field_order());
    auto in_index = [&](std::size_t a, std::size_t vi, std::size_t wi) {
        return (a * v.dim + vi) * w.dim + wi;
    };
    auto out_index = [&](std::size_t a, std::size_t wi, std::size_t vi) {
        return (a * w.dim + wi) * v.dim + vi;
    };
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t i = 0; i < n; ++i)
            for (const auto& [pp, cp] : hs->basis_product(a, i).terms) {
                const Matrix& act = v.action[i];
                for (std::size_t vi = 0; vi < v.dim; ++vi)
                    for (std::size_t v2 = 0; v2 < v.dim; ++v2) {
                        if (act(v2, vi).is_zero()) continue;
                        for (std::size_t wi = 0; wi < w.dim; ++wi)
                            out(out_index(pp, wi, v2), in_index(a, vi, wi)) += cp * act(v2, vi);
                    }
            }
    return out;
}

// The closed-form inverse: phi (x) w (x) v -> sum_i phi b*_i (x) S(b_i).v (x) w.
inline Matrix beta_map_inverse(const DoubleHandle& d, const HModule& v, const HModule& w) {
    const HopfPtr& h = d.base;
    const HopfPtr& hs = d.base_dual;
    std::size_t n = h->dim();
    std::size_t dim = n * v.dim * w.dim;
    Matrix out(dim, dim, h->field_order());
    auto in_index = [&](std::size_t a, std::size_t wi, std::size_t vi) {
        return (a * w.dim + wi) * v.dim + vi;
    };
    auto out_index = [&](std::size_t a, std::size_t vi, std::size_t wi) {
        return (a * v.dim + vi) * w.dim + wi;
    };
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t i = 0; i < n; ++i)
            for (const auto& [pp, cp] : hs->basis_product(a, i).terms) {
                Matrix act(v.dim, v.dim, h->field_order());
                for (const auto& [k, c] : h->basis_antipode(i).terms) act = act + c * v.action[k];
                for (std::size_t vi = 0; vi < v.dim; ++vi)
                    for (std::size_t v2 = 0; v2 < v.dim; ++v2) {
                        if (act(v2, vi).is_zero()) continue;
                        for (std::size_t wi = 0; wi < w.dim; ++wi)
                            out(out_index(pp, v2, wi), in_index(a, wi, vi)) += cp * act(v2, vi);
                    }
            }
    return out;
}

// beta on Ind(V^{(x) m}), i.e. beta_{V, V^{(x)(m-1)}}.
inline Matrix beta_power_map(const InducedRep& rep) {
    check(rep.m >= 1, "beta needs m >= 1");
    if (rep.m == 1) {
        // beta coincides with the action of u_D^{-1}
        return induced_central_action(rep, rep.d->qt.u_inv);
    }
    HModule rest = tensor_power_module(rep.base, rep.m - 1);
    Matrix b = beta_map(*rep.d, rep.base, rest);
    return b;
}

// The induced module as a module over the double (one matrix per D basis element).
inline HModule induced_as_module(const InducedRep& rep) {
    HModule u;
    u.dim = rep.dim;
    u.algebra = rep.d->qt.algebra;
    std::size_t n = rep.n;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) u.action.push_back(induced_action(rep, p, q));
    return u;
}

// The pairing <phi (x) x, psi (x) y>_Lambda = (S*(phi) psi)(Lambda) <x, y>
// between Ind(X) and Ind(Y), given a base pairing X x Y -> K.
inline Matrix induced_pairing(const DoubleHandle& d, const Vec& integral_eps1, const Matrix& base_pairing) {
    const HopfPtr& h = d.base;
    std::size_t n = h->dim();
    std::size_t xd = base_pairing.rows(), yd = base_pairing.cols();
    Matrix dual_pair(n, n, h->field_order());
    for (std::size_t a = 0; a < n; ++a) {
        // S*(b*_a): values b*_a(S(b_t))
        Vec sa = zero_vec(n, h->field_order());
        for (std::size_t t = 0; t < n; ++t)
            for (const auto& [k, c] : h->basis_antipode(t).terms)
                if (k == a) sa[t] += c;
        for (std::size_t b = 0; b < n; ++b) {
            Vec db = zero_basis_vec(n, b);
            dual_pair(a, b) = evaluate_functional(h->functional_product(sa, db), integral_eps1);
        }
    }
    Matrix out(n * xd, n * yd, h->field_order());
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (dual_pair(a, b).is_zero()) continue;
            for (std::size_t x = 0; x < xd; ++x)
                for (std::size_t y = 0; y < yd; ++y)
                    out(a * xd + x, b * yd + y) = dual_pair(a, b) * base_pairing(x, y);
        }
    return out;
}

// c_{V,U}: V (x) U -> U (x) V, v (x) u -> sum_i (b*_i (x) 1).u (x) b_i.v,
// for an H-module V and a D-module U.
inline Matrix braiding_c(const DoubleHandle& d, const HModule& v, const HModule& u) {
    check(u.algebra.get() == d.qt.algebra.get(), "braiding_c: U must be a module over the double");
    std::size_t n = d.base->dim();
    std::size_t dim = v.dim * u.dim;
    Matrix out(dim, u.dim * v.dim, d.base->field_order());
    for (std::size_t i = 0; i < n; ++i) {
        // (b*_i (x) 1) as an element of D
        Vec x = zero_vec(d.dim(), d.base->field_order());
        for (const auto& [c0, cc] : d.base->unit_sparse().terms) x[i * n + c0] = cc;
        Matrix ux = u.act(x);
        const Matrix& va = v.action[i];
        for (std::size_t vi = 0; vi < v.dim; ++vi)
            for (std::size_t v2 = 0; v2 < v.dim; ++v2) {
                if (va(v2, vi).is_zero()) continue;
                for (std::size_t ui = 0; ui < u.dim; ++ui)
                    for (std::size_t u2 = 0; u2 < u.dim; ++u2) {
                        if (ux(u2, ui).is_zero()) continue;
                        out(u2 * v.dim + v2, vi * u.dim + ui) += va(v2, vi) * ux(u2, ui);
                    }
            }
    }
    return out;
}

inline Matrix braiding_c_inverse(const DoubleHandle& d, const HModule& v, const HModule& u) {
    std::size_t n = d.base->dim();
    Matrix out(v.dim * u.dim, u.dim * v.dim, d.base->field_order());
    for (std::size_t i = 0; i < n; ++i) {
        Vec x = zero_vec(d.dim(), d.base->field_order());
        for (const auto& [c0, cc] : d.base->unit_sparse().terms) x[i * n + c0] = cc;
        Matrix ux = u.act(x);
        Matrix sv(v.dim, v.dim, d.base->field_order());
        for (const auto& [k, c] : d.base->basis_antipode(i).terms) sv = sv + c * v.action[k];
        for (std::size_t ui = 0; ui < u.dim; ++ui)
            for (std::size_t u2 = 0; u2 < u.dim; ++u2) {
                if (ux(u2, ui).is_zero()) continue;
                for (std::size_t vi = 0; vi < v.dim; ++vi)
                    for (std::size_t v2 = 0; v2 < v.dim; ++v2) {
                        if (sv(v2, vi).is_zero()) continue;
                        out(v2 * u.dim + u2, ui * v.dim + vi) += ux(u2, ui) * sv(v2, vi);
                    }
            }
    }
    return out;
}

// r_{V,W}: Ind(V (x) W) -> Ind(V) (x) W on the identified spaces
// H* (x) V (x) W: phi (x) v (x) w -> phi_(2) (x) v (x) (phi_(1) (x) 1).w,
// for an H-module V and a D-module W.
inline Matrix r_iso(const DoubleHandle& d, const HModule& v, const HModule& w) {
    check(w.algebra.get() == d.qt.algebra.get(), "r_iso: W must be a module over the double");
    const HopfPtr& hs = d.base_dual;
    std::size_t n = d.base->dim();
    std::size_t dim = n * v.dim * w.dim;
    Matrix out(dim, dim, d.base->field_order());
    auto idx = [&](std::size_t a, std::size_t vi, std::size_t wi) {
        return (a * v.dim + vi) * w.dim + wi;
    };
    for (std::size_t a = 0; a < n; ++a) {
        for (const auto& [legs, c] : hs->basis_coproduct(a).terms()) {
            // phi_(1) = b*_{legs[0]}, phi_(2) = b*_{legs[1]}
            Vec x = zero_vec(d.dim(), d.base->field_order());
            for (const auto& [c0, cc] : d.base->unit_sparse().terms) x[legs[0] * n + c0] = cc;
            Matrix wx = w.act(x);
            for (std::size_t vi = 0; vi < v.dim; ++vi)
                for (std::size_t wi = 0; wi < w.dim; ++wi)
                    for (std::size_t w2 = 0; w2 < w.dim; ++w2) {
                        if (wx(w2, wi).is_zero()) continue;
                        out(idx(legs[1], vi, w2), idx(a, vi, wi)) += c * wx(w2, wi);
                    }
        }
    }
    return out;
}

// Inverse of r_{V,W}: phi (x) v (x) w -> phi_(2) (x) v (x) (S^{-1*}(phi_(1)) (x) 1).w.
inline Matrix r_iso_inverse(const DoubleHandle& d, const HModule& v, const HModule& w) {
    const HopfPtr& hs = d.base_dual;
    std::size_t n = d.base->dim();
    std::size_t dim = n * v.dim * w.dim;
    Matrix out(dim, dim, d.base->field_order());
    auto idx = [&](std::size_t a, std::size_t vi, std::size_t wi) {
        return (a * v.dim + vi) * w.dim + wi;
    };
    for (std::size_t a = 0; a < n; ++a) {
        for (const auto& [legs, c] : hs->basis_coproduct(a).terms()) {
            Matrix wx(w.dim, w.dim, d.base->field_order());
            for (const auto& [k, ck] : hs->basis_antipode_inv(legs[0]).terms) {
                Vec x = zero_vec(d.dim(), d.base->field_order());
                for (const auto& [c0, cc] : d.base->unit_sparse().terms) x[k * n + c0] = cc * ck;
                wx = wx + w.act(x);
            }
            for (std::size_t vi = 0; vi < v.dim; ++vi)
                for (std::size_t wi = 0; wi < w.dim; ++wi)
                    for (std::size_t w2 = 0; w2 < w.dim; ++w2) {
                        if (wx(w2, wi).is_zero()) continue;
                        out(idx(legs[1], vi, w2), idx(a, vi, wi)) += c * wx(w2, wi);
                    }
        }
    }
    return out;
}

}  // namespace hopfmod

#endif
