#include <catch2/catch_amalgamated.hpp>

#include "hopfmod/indicators.hpp"

using namespace hopfmod;

namespace {

struct Fixture {
    std::shared_ptr<DoubleHandle> d;
    HopfPtr h;
    SemisimpleData sd_base;
    std::vector<HModule> simples;

    explicit Fixture(const FiniteGroup& g, unsigned long field) {
        h = group_algebra(g, field);
        d = std::make_shared<DoubleHandle>(drinfeld_double(h));
        sd_base = split_center(*h);
        for (std::size_t i = 0; i < sd_base.k; ++i) simples.push_back(simple_module(h, sd_base, i));
    }
};

// D-module structure on an H-module through phi (x) h -> phi(1) h.
HModule inflate_trivially(const DoubleHandle& d, const HModule& v) {
    std::size_t n = d.base->dim();
    HModule u;
    u.dim = v.dim;
    u.algebra = d.qt.algebra;
    Vec one = d.base->unit();
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            Matrix m = v.action[q];
            Cyclotomic scale = one[p];  // b*_p(1)
            u.action.push_back(scale * m);
        }
    return u;
}

// Restriction of a D-module along eps (x) h.
HModule restrict_to_base(const DoubleHandle& d, const HModule& u) {
    std::size_t n = d.base->dim();
    HModule v;
    v.dim = u.dim;
    v.algebra = d.base;
    for (std::size_t q = 0; q < n; ++q) {
        Vec x = zero_vec(d.dim(), d.base->field_order());
        for (const auto& [a, ca] : d.base_dual->unit_sparse().terms) x[a * n + q] = ca;
        v.action.push_back(u.act(x));
    }
    return v;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero()) continue;
            for (std::size_t p = 0; p < b.rows(); ++p)
                for (std::size_t q = 0; q < b.cols(); ++q)
                    if (!b(p, q).is_zero()) out(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
        }
    return out;
}

}  // namespace

TEST_CASE("induced modules carry honest representations", "[induced]") {
    Fixture f(FiniteGroup::symmetric3(), 6);
    const HModule& v = f.simples.back();  // the 2-dimensional simple
    REQUIRE(v.dim == 2);

    InducedRep rep = induce(*f.d, v, 1);
    CHECK(rep.dim == 12);
    HModule as_module = induced_as_module(rep);
    CHECK(verify_module(as_module));

    // m = 0 induces the n-dimensional Ind(K)
    InducedRep rep0 = induce(*f.d, v, 0);
    CHECK(rep0.dim == 6);

    // character of Ind(regular module) equals chi_R of the double
    HModule reg = regular_module(f.h);
    InducedRep rep_reg = induce(*f.d, reg, 1);
    HModule mod_reg = induced_as_module(rep_reg);
    Vec chi = mod_reg.character();
    Vec chi_r = zero_vec(36, 6);
    for (std::size_t i = 0; i < 36; ++i) chi_r[i] = f.d->alg().regular_trace(zero_basis_vec(36, i));
    CHECK(chi == chi_r);

    // size cap
    CHECK_THROWS_AS(induce(*f.d, v, 4, 64), DimensionOverflow);

    // rho_m of the eps(Lambda) = lambda'(1) = 1 integral is a projection
    Integrals in = integrals(f.h);
    Vec lam_d = zero_vec(36, 6);
    Cyclotomic scale = evaluate_functional(in.dual_integral, f.h->unit()).inverse();
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t c = 0; c < 6; ++c) lam_d[a * 6 + c] = scale * in.dual_integral[a] * in.integral[c];
    InducedRep rep2 = induce(*f.d, v, 2);
    Matrix proj = induced_central_action(rep2, lam_d);
    CHECK(proj * proj == proj);
}

TEST_CASE("beta is a D-linear isomorphism with the stated inverse", "[induced]") {
    Fixture f(FiniteGroup::symmetric3(), 6);
    const HModule& v2 = f.simples.back();
    const HModule& sgn = f.simples[1];

    for (const HModule* vp : {&v2, &sgn})
        for (const HModule* wp : {&v2, &sgn}) {
            const HModule& v = *vp;
            const HModule& w = *wp;
            Matrix b = beta_map(*f.d, v, w);
            Matrix binv = beta_map_inverse(*f.d, v, w);
            CHECK(binv * b == Matrix::identity(b.rows()));
            CHECK(b * binv == Matrix::identity(b.rows()));

            // beta_{W,V} o beta_{V,W} = action of u_D^{-1} on Ind(V (x) W)
            Matrix composite = beta_map(*f.d, w, v) * b;
            InducedRep vw = induce(*f.d, tensor_module(v, w), 1);
            Matrix u_inv_action = induced_central_action(vw, f.d->qt.u_inv);
            CHECK(composite == u_inv_action);

            // D-linearity on a spanning set: beta commutes with the action
            InducedRep wv = induce(*f.d, tensor_module(w, v), 1);
            for (std::size_t p = 0; p < 6; p += 2)
                for (std::size_t q = 0; q < 6; q += 3) {
                    Matrix av = induced_action(vw, p, q);
                    Matrix aw = induced_action(wv, p, q);
                    CHECK(aw * b == b * av);
                }
        }

    // beta_{K,V} is the identity under the canonical identification
    HModule triv = trivial_module(f.h);
    Matrix bkv = beta_map(*f.d, triv, v2);
    CHECK(bkv == Matrix::identity(12));

    // coherence: beta_{U (x) V, W} = beta_{V, W (x) U} o beta_{U, V (x) W}
    const HModule& u = f.simples[1];
    Matrix lhs = beta_map(*f.d, tensor_module(u, v2), sgn);
    Matrix rhs = beta_map(*f.d, v2, tensor_module(sgn, u)) * beta_map(*f.d, u, tensor_module(v2, sgn));
    CHECK(lhs == rhs);

    // beta^m = rho_m(u_D^{-1}) on Ind(V^{(x) m})
    InducedRep rep3 = induce(*f.d, v2, 3);
    Matrix beta3 = matrix_power(beta_power_map(rep3), 3);
    CHECK(beta3 == induced_central_action(rep3, f.d->qt.u_inv));
}

TEST_CASE("the Lambda pairing is nondegenerate and adjoint to the action", "[induced]") {
    Fixture f(FiniteGroup::symmetric3(), 6);
    const HModule& v = f.simples.back();
    HModule vdual = dual_module(v);
    Vec lambda = integrals(f.h).integral;

    Matrix pairing = induced_pairing(*f.d, lambda, Matrix::identity(v.dim, 6));
    CHECK(pairing.rank() == pairing.rows());

    // <x.a, b> = <a, S_D(x).b>
    InducedRep rv = induce(*f.d, v, 1);
    InducedRep rvd = induce(*f.d, vdual, 1);
    std::size_t dim = f.d->dim();
    for (std::size_t x = 0; x < dim; x += 7) {
        Matrix act_v = induced_action(rv, x / 6, x % 6);
        Vec sx = f.d->alg().basis_antipode(x).to_vec(dim);
        Matrix act_sd(rvd.dim, rvd.dim, 6);
        for (std::size_t t = 0; t < dim; ++t) {
            if (sx[t].is_zero()) continue;
            act_sd = act_sd + sx[t] * induced_action(rvd, t / 6, t % 6);
        }
        CHECK(act_v.transpose() * pairing == pairing * act_sd);
    }

    // beta^* = beta_{V*, W*} under the pairing: <beta(x), y> = <x, beta'(y)>
    const HModule& w = f.simples[1];
    HModule wdual = dual_module(w);
    // pairing between Ind(V (x) W) and Ind(W* (x) V*): base pairing
    // <v (x) w, w' (x) v'> = <v, v'><w, w'>
    std::size_t vd = v.dim, wd = w.dim;
    Matrix base_vw(vd * wd, wd * vd, 6);
    for (std::size_t a = 0; a < vd; ++a)
        for (std::size_t b = 0; b < wd; ++b) base_vw(a * wd + b, b * vd + a) = Cyclotomic::one();
    Matrix pair_vw = induced_pairing(*f.d, lambda, base_vw);
    Matrix base_wv(wd * vd, vd * wd, 6);
    for (std::size_t a = 0; a < wd; ++a)
        for (std::size_t b = 0; b < vd; ++b) base_wv(a * vd + b, b * wd + a) = Cyclotomic::one();
    Matrix pair_wv = induced_pairing(*f.d, lambda, base_wv);

    Matrix beta_vw = beta_map(*f.d, v, w);
    Matrix beta_dual = beta_map(*f.d, vdual, wdual);
    CHECK(beta_vw.transpose() * pair_wv == pair_vw * beta_dual);
}

TEST_CASE("braiding and the r isomorphism", "[induced]") {
    Fixture f(FiniteGroup::symmetric3(), 6);
    const HModule& v = f.simples.back();

    // c for a trivially inflated module is the flip
    HModule u_triv = inflate_trivially(*f.d, v);
    Matrix c = braiding_c(*f.d, v, u_triv);
    Matrix flip(v.dim * u_triv.dim, v.dim * u_triv.dim, 6);
    for (std::size_t a = 0; a < v.dim; ++a)
        for (std::size_t b = 0; b < u_triv.dim; ++b) flip(b * v.dim + a, a * u_triv.dim + b) = Cyclotomic::one();
    CHECK(c == flip);

    // c o c^{-1} = id on an induced D-module
    InducedRep ru = induce(*f.d, f.simples[1], 1);
    HModule u = induced_as_module(ru);
    Matrix cu = braiding_c(*f.d, v, u);
    Matrix cu_inv = braiding_c_inverse(*f.d, v, u);
    CHECK(cu * cu_inv == Matrix::identity(cu.rows()));
    CHECK(cu_inv * cu == Matrix::identity(cu.rows()));

    // r o r^{-1} = id
    Matrix r = r_iso(*f.d, v, u);
    Matrix rinv = r_iso_inverse(*f.d, v, u);
    CHECK(r * rinv == Matrix::identity(r.rows()));
    CHECK(rinv * r == Matrix::identity(r.rows()));

    // the tensor identity behind the pentagon-style diagram:
    // sum_i b*_{i(2)} (x) b_i (x) S^{-1*}(b*_{i(1)}) = sum_{i,j} b*_i (x) S(b_j) b_i (x) b*_j
    std::size_t n = 6;
    const HopfPtr& hs = f.d->base_dual;
    Tensor lhs(3, n), rhs(3, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& [legs, cc] : hs->basis_coproduct(i).terms())
            for (const auto& [k, ck] : hs->basis_antipode_inv(legs[0]).terms)
                lhs.add_term({legs[1], i, k}, cc * ck);
        for (std::size_t j = 0; j < n; ++j) {
            Vec sbj_bi = f.h->multiply(f.h->basis_antipode(j).to_vec(n), zero_basis_vec(n, i));
            for (std::size_t t = 0; t < n; ++t)
                if (!sbj_bi[t].is_zero()) rhs.add_term({i, t, j}, sbj_bi[t]);
        }
    }
    CHECK(lhs == rhs);

    // the diagram itself, on small modules:
    // r^{-1}_{W (x) V, U} o (beta_{V,W} (x) id_U) o r_{V (x) W, U}
    //   = Ind(id_W (x) c^{-1}_{V,U}) o beta_{V, W (x) U_H}
    const HModule& w = f.simples[1];
    HModule u_h = restrict_to_base(*f.d, u);
    Matrix left = r_iso_inverse(*f.d, tensor_module(w, v), u) *
                  kron(beta_map(*f.d, v, w), Matrix::identity(u.dim)) *
                  r_iso(*f.d, tensor_module(v, w), u);
    // Ind(id_W (x) c^{-1}): identity on H* and W legs, c^{-1} on U (x) V
    Matrix cinv = braiding_c_inverse(*f.d, v, u);
    Matrix ind_c = kron(Matrix::identity(n * w.dim), cinv);
    Matrix right = ind_c * beta_map(*f.d, v, tensor_module(w, u_h));
    CHECK(left == right);
}
