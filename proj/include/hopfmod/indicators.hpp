#ifndef HOPFMOD_INDICATORS_HPP
#define HOPFMOD_INDICATORS_HPP

#include <sstream>

#include "hopfmod/induced.hpp"

namespace hopfmod {

// Everything the equivariant indicators need about one double: the handle,
// its Wedderburn data, the modular matrices on the center, and the base
// integral with eps(Lambda) = 1 (the normalization of the indicator
// definition, which differs from the one carried by the handle itself).
struct IndicatorContext {
    std::shared_ptr<DoubleHandle> d;
    SemisimpleData sd;   // of the double
    ModularData md;
    ModularRep rep;
    Vec integral_eps1;   // Lambda in H
    std::size_t size_cap = 4096;
    bool grouplike = false;           // base coproducts are all one-term
    std::vector<std::size_t> group_mul;  // base multiplication when grouplike

    struct Memo {
        std::map<std::string, Cyclotomic> values;
        std::mutex mutex;
    };
    std::shared_ptr<Memo> memo = std::make_shared<Memo>();
};

inline IndicatorContext make_indicator_context(std::shared_ptr<DoubleHandle> d) {
    IndicatorContext ctx;
    ctx.d = std::move(d);
    ctx.sd = split_center(ctx.d->alg());
    character_ring_data(ctx.d->qt, ctx.sd);
    ctx.md = modular_data(ctx.d->qt, ctx.sd);
    ctx.rep = modular_rep(ctx.d->qt, ctx.sd, ctx.md, ctx.d.get());
    ctx.integral_eps1 = integrals(ctx.d->base).integral;

    const HopfPtr& h = ctx.d->base;
    std::size_t n = h->dim();
    ctx.grouplike = true;
    for (std::size_t i = 0; i < n && ctx.grouplike; ++i) {
        const Tensor& t = h->basis_coproduct(i);
        ctx.grouplike = t.terms().size() == 1 && t.terms().begin()->first == Tensor::Index{i, i} &&
                        t.terms().begin()->second == Cyclotomic::one();
    }
    if (ctx.grouplike) {
        ctx.group_mul.resize(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const SparseVec& p = h->basis_product(i, j);
                check(p.terms.size() == 1 && p.terms[0].second == Cyclotomic::one(),
                      "grouplike flag with non-group multiplication");
                ctx.group_mul[i * n + j] = p.terms[0].first;
            }
    }
    return ctx;
}

// Coordinates of lambda' (x) Lambda with eps(Lambda) = lambda'(1) = 1, the
// integral normalization entering the indicator/nu correspondence.
inline Vec indicator_integral_coords(const IndicatorContext& ctx) {
    const HopfPtr& h = ctx.d->base;
    std::size_t n = h->dim();
    Integrals in = integrals(h);
    Cyclotomic scale = evaluate_functional(in.dual_integral, h->unit()).inverse();
    Vec z = zero_vec(n * n, ctx.sd.field_order);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t c = 0; c < n; ++c) z[a * n + c] = scale * in.dual_integral[a] * in.integral[c];
    Vec coords = center_coords(ctx.sd, z);
    if (center_element(ctx.sd, coords) != z) throw NotCentral("integral is not central");
    return coords;
}

// Central elements are passed around in idempotent coordinates (length k).
inline Vec dual_coords(const IndicatorContext& ctx, const Vec& coords) {
    // S_D permutes the idempotents by the dual involution
    Vec out = zero_vec(ctx.sd.k, ctx.sd.field_order);
    for (std::size_t i = 0; i < ctx.sd.k; ++i) out[ctx.sd.dual[i]] = coords[i];
    return out;
}

namespace detail {

// Trace of an operator on V^{(x) m} that permutes slots by tau(j) = (j+q) mod m
// and applies per-slot maps, factorized over the cycles of tau.
inline Cyclotomic cycle_trace(const std::vector<const Matrix*>& slot_ops, long q) {
    long m = static_cast<long>(slot_ops.size());
    std::vector<bool> visited(m, false);
    Cyclotomic total = Cyclotomic::one();
    for (long start = 0; start < m; ++start) {
        if (visited[start]) continue;
        Matrix prod = *slot_ops[start];
        visited[start] = true;
        long j = (start + q) % m;
        while (j != start) {
            prod = prod * *slot_ops[j];
            visited[j] = true;
            j = (j + q) % m;
        }
        total *= prod.trace();
    }
    return total;
}

// I = tr(beta^q o rho_m(z)) for a grouplike base, without materializing the
// induced module: the operator splits into (right multiplication on H*)
// (x) (endomorphism of V^{(x) m}) per term of z, and the H* trace is
// dim(H) phi(Lambda).
inline Cyclotomic grouplike_trace(const IndicatorContext& ctx, const HModule& v, long m, long q,
                                  const Vec& z_vec) {
    const HopfPtr& h = ctx.d->base;
    std::size_t n = h->dim();
    Cyclotomic total = Cyclotomic::zero(ctx.sd.field_order);
    for (std::size_t flat = 0; flat < z_vec.size(); ++flat) {
        if (z_vec[flat].is_zero()) continue;
        std::size_t a = flat / n, c = flat % n;
        // (b*_a b*_i)(Lambda) collapses to i = a for a grouplike basis
        Cyclotomic lam = ctx.integral_eps1[a];
        if (lam.is_zero()) continue;
        const Matrix& slot_plain = v.action[c];
        const Matrix& slot_twisted = v.action[ctx.group_mul[a * n + c]];
        std::vector<const Matrix*> slots(m, &slot_plain);
        for (long j = m - q; j < m; ++j) slots[j] = &slot_twisted;
        total += z_vec[flat] * lam * cycle_trace(slots, q);
    }
    return Cyclotomic(static_cast<long>(n)) * total;
}

inline Cyclotomic dense_trace(const IndicatorContext& ctx, const HModule& v, long m, long q,
                              const Vec& z_vec) {
    InducedRep rep = induce(*ctx.d, v, static_cast<unsigned>(m), ctx.size_cap);
    Matrix op = induced_central_action(rep, z_vec);
    if (q > 0) {
        Matrix beta = beta_power_map(rep);
        op = matrix_power(beta, q) * op;
    }
    return op.trace();
}

}  // namespace detail

// The (m, l)-th equivariant Frobenius-Schur indicator of V and the central
// element with the given idempotent coordinates. All five branches of the
// definition are implemented; values lie in Q_N when the coordinates do.
inline Cyclotomic indicator(const IndicatorContext& ctx, const HModule& v, long m, long l,
                            const Vec& coords) {
    check(coords.size() == ctx.sd.k, "indicator: expected idempotent coordinates");
    if (m < 0) return indicator(ctx, v, -m, -l, dual_coords(ctx, coords));

    // key the module by its character: indicators only depend on the
    // isomorphism class, which the character determines here
    std::ostringstream key;
    key << v.dim << "[";
    for (const auto& c : v.character()) key << c.to_string() << ",";
    key << "]" << m << "|" << l << "|";
    for (const auto& c : coords) key << c.to_string() << ";";
    {
        std::lock_guard<std::mutex> lock(ctx.memo->mutex);
        auto it = ctx.memo->values.find(key.str());
        if (it != ctx.memo->values.end()) return it->second;
    }

    Cyclotomic result;
    const HopfPtr& h = ctx.d->base;
    std::size_t n = h->dim();
    if (m == 0) {
        Vec c0 = coords;
        long l0 = l;
        if (l0 < 0) {
            c0 = dual_coords(ctx, c0);
            l0 = -l0;
        }
        Vec z_vec = center_element(ctx.sd, c0);
        result = Cyclotomic::zero(ctx.sd.field_order);
        if (l0 == 0) {
            for (std::size_t flat = 0; flat < z_vec.size(); ++flat) {
                if (z_vec[flat].is_zero()) continue;
                std::size_t a = flat / n, c = flat % n;
                result += z_vec[flat] * h->basis_counit(c) * ctx.integral_eps1[a];
            }
        } else {
            Vec chi_pow = h->functional_power(v.character(), l0);
            for (std::size_t flat = 0; flat < z_vec.size(); ++flat) {
                if (z_vec[flat].is_zero()) continue;
                std::size_t a = flat / n, c = flat % n;
                // (b*_a chi^l)(Lambda)
                Vec delta_a = zero_vec(n, ctx.sd.field_order);
                delta_a[a] = Cyclotomic::one();
                Cyclotomic val = evaluate_functional(h->functional_product(delta_a, chi_pow),
                                                     ctx.integral_eps1);
                result += z_vec[flat] * h->basis_counit(c) * val;
            }
        }
        result = Cyclotomic(static_cast<long>(n)) * result;
    } else {
        // beta^{mN} = id: reduce l, split off the powers of beta^m = rho_m(u_D^{-1})
        long period = m * static_cast<long>(ctx.md.N);
        long lr = mod_nonneg(l, period);
        long p = lr / m, q = lr % m;
        Vec shifted = coords;
        for (std::size_t i = 0; i < ctx.sd.k; ++i) shifted[i] *= pow(ctx.md.T[i], p);
        Vec z_vec = center_element(ctx.sd, shifted);
        result = ctx.grouplike ? detail::grouplike_trace(ctx, v, m, q, z_vec)
                               : detail::dense_trace(ctx, v, m, q, z_vec);
    }

    std::lock_guard<std::mutex> lock(ctx.memo->mutex);
    ctx.memo->values.emplace(key.str(), result);
    return result;
}

// Indicator of a raw central element of the double (coefficients over the
// D basis); rejects non-central input.
inline Cyclotomic indicator_from_element(const IndicatorContext& ctx, const HModule& v, long m, long l,
                                         const Vec& z_vec) {
    Vec coords = center_coords(ctx.sd, z_vec);
    if (center_element(ctx.sd, coords) != z_vec) throw NotCentral("element is not central in the double");
    return indicator(ctx, v, m, l, coords);
}

// Independent oracle: nu-style indicator through the invariants
// (V^{(x) m})^H and the rotation alpha, without touching induced modules.
inline Cyclotomic nu_oracle(const IndicatorContext& ctx, const HModule& v, long m, long l) {
    check(m >= 1, "nu_oracle: m >= 1");
    const HopfPtr& h = ctx.d->base;
    HModule power = tensor_power_module(v, static_cast<unsigned>(m));
    Matrix proj = power.act(ctx.integral_eps1);
    // basis of the invariants = column space of the projection
    Matrix ech = proj;
    auto pivots = ech.echelonize();
    std::vector<Vec> cols;
    for (auto c : pivots) cols.push_back(proj.column(c));
    if (cols.empty()) return Cyclotomic::zero(h->field_order());
    Matrix basis = Matrix::from_columns(cols);

    // rotation alpha: v_1 (x) ... (x) v_m -> v_2 (x) ... (x) v_m (x) v_1
    std::size_t d = v.dim;
    std::size_t vd = power.dim;
    Matrix alpha(vd, vd, h->field_order());
    for (std::size_t w = 0; w < vd; ++w) {
        // digits of w in base d, most significant = first slot
        std::vector<std::size_t> digits(m);
        std::size_t tmp = w;
        for (long j = m - 1; j >= 0; --j) {
            digits[j] = tmp % d;
            tmp /= d;
        }
        std::vector<std::size_t> rotated(digits.begin() + 1, digits.end());
        rotated.push_back(digits[0]);
        std::size_t w2 = 0;
        for (long j = 0; j < m; ++j) w2 = w2 * d + rotated[j];
        alpha(w2, w) = Cyclotomic::one();
    }

    long lr = mod_nonneg(l, m);  // alpha^m = id on the invariants
    Matrix op = matrix_power(alpha, lr);
    // restrict to the invariants
    Matrix restricted(cols.size(), cols.size(), h->field_order());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        auto sol = matrix_solve(basis, op * cols[j]);
        check(sol.has_value(), "rotation does not preserve the invariants");
        for (std::size_t i = 0; i < cols.size(); ++i) restricted(i, j) = (*sol)[i];
    }
    return restricted.trace();
}

// I_V((m,l) g, z) = I_V((m,l), g.z) for a generator word g.
inline bool check_equivariance(const IndicatorContext& ctx, const HModule& v, long m, long l,
                               const ModularWord& g, const Vec& coords) {
    LatticePoint p{m, l};
    LatticePoint pg = p.acted_word(g);
    Matrix action = evaluate_word(g, ctx.rep);
    Vec gz = action * coords;
    Cyclotomic lhs = indicator(ctx, v, pg.m, pg.l, coords);
    Cyclotomic rhs = indicator(ctx, v, m, l, gz);
    return lhs == rhs;
}

// Orbit theorem instance: equal indicators on Gamma(N)-equivalent points.
inline bool check_orbit(const IndicatorContext& ctx, const HModule& v, const LatticePoint& p,
                        const LatticePoint& p2, const Vec& coords) {
    if (!gamma_orbit_equivalent(p, p2, ctx.md.N))
        throw NotSameOrbit("lattice points are not Gamma(N)-equivalent");
    return indicator(ctx, v, p.m, p.l, coords) == indicator(ctx, v, p2.m, p2.l, coords);
}

}  // namespace hopfmod

#endif
