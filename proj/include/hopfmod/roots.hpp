#ifndef HOPFMOD_ROOTS_HPP
#define HOPFMOD_ROOTS_HPP

#include <algorithm>
#include <vector>

#include "hopfmod/bigfloat.hpp"
#include "hopfmod/linalg.hpp"
#include "hopfmod/polynomial.hpp"

namespace hopfmod {

struct RootConfig {
    mpfr_prec_t start_bits = 128;
    mpfr_prec_t max_bits = 2048;
};

namespace detail {

inline std::vector<BigComplex> embed_poly(const Polynomial& p, unsigned long m, long t, mpfr_prec_t prec) {
    std::vector<BigComplex> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
        Cyclotomic cm = Cyclotomic::promote(c, m);
        BigComplex v(prec);
        for (std::size_t j = 0; j < cm.coeffs().size(); ++j) {
            if (cm.coeffs()[j] == 0) continue;
            auto [co, si] = BigFloat::cos_sin_2pi(t * static_cast<long>(j), m, prec);
            BigFloat q = BigFloat::from_rational(cm.coeffs()[j], prec);
            v.re += q * co;
            v.im += q * si;
        }
        out.push_back(std::move(v));
    }
    return out;
}

// Durand-Kerner iteration on a monic complex polynomial.
inline std::vector<BigComplex> complex_roots(std::vector<BigComplex> p, mpfr_prec_t prec) {
    std::size_t d = p.size() - 1;
    if (d == 0) return {};
    BigComplex lead_inv = BigComplex(BigFloat::from_long(1, prec), BigFloat::from_long(0, prec)) / p[d];
    for (auto& c : p) c = c * lead_inv;

    auto eval = [&](const BigComplex& x) {
        BigComplex v = p[d];
        for (std::size_t i = d; i-- > 0;) v = v * x + p[i];
        return v;
    };

    std::vector<BigComplex> z;
    z.reserve(d);
    // Standard non-real, non-root-of-unity starting spiral.
    BigComplex seed(BigFloat::from_rational(rational(4, 10), prec), BigFloat::from_rational(rational(9, 10), prec));
    BigComplex cur(BigFloat::from_long(1, prec), BigFloat::from_long(0, prec));
    for (std::size_t i = 0; i < d; ++i) {
        cur = cur * seed;
        z.push_back(cur);
    }

    BigFloat tol = BigFloat::two_pow(-(prec - 24), prec);
    std::size_t max_iter = 200 + 30 * d;
    for (std::size_t iter = 0; iter < max_iter; ++iter) {
        BigFloat worst = BigFloat::from_long(0, prec);
        for (std::size_t i = 0; i < d; ++i) {
            BigComplex denom(BigFloat::from_long(1, prec), BigFloat::from_long(0, prec));
            for (std::size_t j = 0; j < d; ++j)
                if (j != i) denom = denom * (z[i] - z[j]);
            BigComplex delta = eval(z[i]) / denom;
            z[i] = z[i] - delta;
            BigFloat mag = delta.abs2();
            if (worst.less_than(mag)) worst = mag;
        }
        if (worst.less_than(tol * tol)) break;
    }
    return z;
}

}  // namespace detail

// All roots of p that lie in Q_m, with multiplicity. Each returned root is
// confirmed by exact substitution; numerics only locate candidates.
//
// Reconstruction: the squarefree part is embedded under one representative of
// each conjugate pair of complex embeddings of Q_m. A tuple that picks one
// numerical root per embedding determines the phi(m) rational coordinates
// through the power-basis linear system, which are recovered by
// continued-fraction rational reconstruction and then checked exactly.
// Candidates failing the exact check are dropped. The precision ladder starts
// at config.start_bits and doubles; the root set must either reach full degree
// or repeat across two consecutive rungs, otherwise PrecisionExhausted.
inline std::vector<Cyclotomic> find_roots_in_field(const Polynomial& p, unsigned long m,
                                                   const RootConfig& config = RootConfig()) {
    check(!p.is_zero(), "find_roots_in_field: zero polynomial");
    if (p.degree() == 0) return {};

    Polynomial sf = squarefree_part(p);
    std::size_t d = static_cast<std::size_t>(sf.degree());

    auto with_multiplicity = [&](const std::vector<Cyclotomic>& distinct) {
        std::vector<Cyclotomic> out;
        for (const auto& r : distinct) {
            std::vector<Cyclotomic> linear{-r, Cyclotomic::one(m)};
            Polynomial factor(linear);
            Polynomial rest = p;
            while (true) {
                auto [q, rem] = divmod(rest, factor);
                if (!rem.is_zero()) break;
                out.push_back(r);
                rest = q;
            }
        }
        return out;
    };

    if (d == 1) {
        Cyclotomic root = -(Cyclotomic::promote(sf.coeff(0), m) / Cyclotomic::promote(sf.coeff(1), m));
        if (!sf(root).is_zero()) return {};
        return with_multiplicity({root});
    }

    unsigned long phi = euler_phi(m);
    // One representative per conjugate pair of embeddings t <-> m - t.
    std::vector<long> embeddings;
    for (unsigned long t = 1; t <= m / 2 || (m <= 2 && t == 1); ++t) {
        if (t >= m && m > 1) break;
        if (gcd(Integer(static_cast<long>(t)), Integer(static_cast<long>(m))) != 1) continue;
        embeddings.push_back(static_cast<long>(t));
    }
    if (embeddings.empty()) embeddings.push_back(1);
    std::size_t rows = (m <= 2) ? 1 : 2 * embeddings.size();
    check(rows == phi, "embedding count does not match the field degree");

    std::vector<Cyclotomic> stable;
    bool have_previous = false;

    for (mpfr_prec_t prec = config.start_bits;; prec *= 2) {
        bool last_rung = prec * 2 > config.max_bits;
        // Power-basis system: rows are Re/Im of sum_j c_j zeta_t^j = root_t.
        std::vector<std::vector<BigFloat>> sys(rows, std::vector<BigFloat>(phi, BigFloat(prec)));
        for (std::size_t e = 0; e < embeddings.size(); ++e) {
            for (unsigned long j = 0; j < phi; ++j) {
                auto [co, si] = BigFloat::cos_sin_2pi(embeddings[e] * static_cast<long>(j), m, prec);
                sys[m <= 2 ? 0 : 2 * e][j] = co;
                if (m > 2) sys[2 * e + 1][j] = si;
            }
        }

        std::vector<std::vector<BigComplex>> roots_per_embedding;
        for (long t : embeddings)
            roots_per_embedding.push_back(detail::complex_roots(detail::embed_poly(sf, m, t, prec), prec));

        Integer den_bound = Integer(1) << static_cast<unsigned long>(prec / 3);
        std::vector<Cyclotomic> confirmed;
        auto record = [&](const Cyclotomic& r) {
            for (const auto& known : confirmed)
                if (known == r) return;
            confirmed.push_back(r);
        };

        std::size_t combos = 1;
        for (std::size_t e = 1; e < embeddings.size(); ++e) {
            combos *= d;
            check(combos <= (1u << 20), "root reconstruction: too many embedding combinations");
        }

        std::vector<std::size_t> pick(embeddings.size(), 0);
        for (std::size_t anchor = 0; anchor < d; ++anchor) {
            pick[0] = anchor;
            std::size_t total = combos;
            for (std::size_t combo = 0; combo < total; ++combo) {
                std::size_t rest = combo;
                for (std::size_t e = 1; e < embeddings.size(); ++e) {
                    pick[e] = rest % d;
                    rest /= d;
                }
                // Solve the phi x phi real system by elimination.
                std::vector<std::vector<BigFloat>> a = sys;
                std::vector<BigFloat> rhs(rows, BigFloat(prec));
                for (std::size_t e = 0; e < embeddings.size(); ++e) {
                    const BigComplex& rt = roots_per_embedding[e][pick[e]];
                    rhs[m <= 2 ? 0 : 2 * e] = rt.re;
                    if (m > 2) rhs[2 * e + 1] = rt.im;
                }
                bool singular = false;
                for (std::size_t colp = 0; colp < phi && !singular; ++colp) {
                    std::size_t piv = colp;
                    for (std::size_t r2 = colp + 1; r2 < rows; ++r2)
                        if (a[piv][colp].abs().less_than(a[r2][colp].abs())) piv = r2;
                    if (a[piv][colp].is_zero()) {
                        singular = true;
                        break;
                    }
                    std::swap(a[piv], a[colp]);
                    std::swap(rhs[piv], rhs[colp]);
                    for (std::size_t r2 = 0; r2 < rows; ++r2) {
                        if (r2 == colp) continue;
                        BigFloat f = a[r2][colp] / a[colp][colp];
                        for (std::size_t c2 = colp; c2 < phi; ++c2) a[r2][c2] -= f * a[colp][c2];
                        rhs[r2] -= f * rhs[colp];
                    }
                }
                if (singular) continue;
                std::vector<Rational> coords(phi);
                for (unsigned long j = 0; j < phi; ++j)
                    coords[j] = (rhs[j] / a[j][j]).to_rational_bounded(den_bound);
                Cyclotomic candidate(m, std::move(coords));
                if (sf(candidate).is_zero()) record(candidate);
            }
        }

        if (confirmed.size() == d) return with_multiplicity(confirmed);
        std::sort(confirmed.begin(), confirmed.end(),
                  [](const Cyclotomic& a, const Cyclotomic& b) { return Cyclotomic::compare(a, b) < 0; });
        if (have_previous && confirmed == stable) return with_multiplicity(confirmed);
        stable = std::move(confirmed);
        have_previous = true;
        if (last_rung)
            throw PrecisionExhausted("root set did not stabilize below the precision cap");
    }
}

}  // namespace hopfmod

#endif
