#ifndef HOPFMOD_MODULAR_HPP
#define HOPFMOD_MODULAR_HPP

#include <optional>
#include <string>

#include "hopfmod/wedderburn.hpp"

namespace hopfmod {

// Verlinde data of a factorizable semisimple algebra: the S and T matrices
// over Q_N, the charge conjugation C, the exponent, and the linearity flag.
struct ModularData {
    std::size_t k = 0;
    std::size_t N = 0;
    std::size_t dim = 0;
    Matrix S;                        // s_{ij} = (chi_i (x) chi_j)(R'R)
    std::vector<Cyclotomic> T;       // diagonal entries 1/u_i
    std::vector<std::size_t> C;      // permutation i -> i*
    std::vector<Cyclotomic> u_eigen; // u = sum u_i e_i
    Cyclotomic kappa;
    bool linear = false;

    Matrix charge_matrix() const {
        Matrix c(k, k);
        for (std::size_t i = 0; i < k; ++i) c(C[i], i) = Cyclotomic::one();
        return c;
    }

    Matrix t_matrix() const {
        Matrix t(k, k);
        for (std::size_t i = 0; i < k; ++i) t(i, i) = T[i];
        return t;
    }
};

inline ModularData modular_data(const QuasitriangularHopf& qt, const SemisimpleData& sd) {
    check(sd.has_character_ring, "modular_data needs character_ring_data first");
    const HopfAlgebra& a = qt.alg();
    ModularData md;
    md.k = sd.k;
    md.dim = a.dim();
    md.N = exponent(qt).value;
    md.kappa = sd.kappa;
    md.linear = sd.linear;
    md.C = sd.dual;

    Tensor rr = qt.r_prime_r();
    md.S = Matrix(sd.k, sd.k, a.field_order());
    for (std::size_t i = 0; i < sd.k; ++i) {
        Tensor partial = rr.contract_leg(0, sd.characters[i]);
        for (std::size_t j = 0; j < sd.k; ++j)
            md.S(i, j) = evaluate_functional(sd.characters[j], partial.to_vec());
    }

    for (std::size_t i = 0; i < sd.k; ++i) {
        Cyclotomic ui = sd.omega(i, qt.u);
        md.u_eigen.push_back(ui);
        md.T.push_back(sd.omega(i, qt.u_inv));
        check(md.T.back() * ui == Cyclotomic::one(), "u eigenvalues are not invertible");
        check(pow(ui, static_cast<long>(md.N)) == Cyclotomic::one(),
              "u eigenvalue is not an N-th root of unity");
    }
    check(md.u_eigen[0] == Cyclotomic::one(), "u_1 != 1");
    return md;
}

// Coordinates of a central element in the idempotent basis, and back.
inline Vec center_coords(const SemisimpleData& sd, const Vec& z) {
    Vec coords = zero_vec(sd.k, sd.field_order);
    for (std::size_t i = 0; i < sd.k; ++i) coords[i] = sd.omega(i, z);
    return coords;
}

inline Vec center_element(const SemisimpleData& sd, const Vec& coords) {
    std::size_t n = sd.idempotents[0].size();
    Vec z = zero_vec(n, sd.field_order);
    for (std::size_t i = 0; i < sd.k; ++i)
        for (std::size_t t = 0; t < n; ++t) z[t] += coords[i] * sd.idempotents[i][t];
    return z;
}

// The matrices of the maps S, T (and R on doubles) on the center in the
// idempotent basis. S is computed both from the definition S o Phibar o iota
// and from the closed form kappa (n_j/n_i) s_{j* i}; the two must agree.
struct ModularRep {
    std::size_t k = 0;
    std::size_t N = 0;
    bool linear = false;
    Matrix S_mat, T_mat;
    std::optional<Matrix> R_mat;  // only for doubles

    Matrix generator(char g, bool inverse) const {
        Matrix m(0, 0);
        switch (g) {
            case 's': m = S_mat; break;
            case 't': m = T_mat; break;
            case 'r':
                if (!R_mat) throw NotADouble("the r generator acts through the evaluation form of a double");
                m = *R_mat;
                break;
            default: throw BadInput("unknown generator");
        }
        return inverse ? matrix_inverse(m) : m;
    }
};

inline Matrix s_endo(const QuasitriangularHopf& qt, const SemisimpleData& sd) {
    const HopfAlgebra& a = qt.alg();
    Matrix closed(sd.k, sd.k, a.field_order());
    // S(e_j) = kappa sum_i (n_j / n_i) s_{j* i} e_i
    Tensor rr = qt.r_prime_r();
    Matrix s(sd.k, sd.k, a.field_order());
    for (std::size_t i = 0; i < sd.k; ++i) {
        Tensor partial = rr.contract_leg(0, sd.characters[i]);
        for (std::size_t j = 0; j < sd.k; ++j) s(i, j) = evaluate_functional(sd.characters[j], partial.to_vec());
    }
    for (std::size_t j = 0; j < sd.k; ++j)
        for (std::size_t i = 0; i < sd.k; ++i)
            closed(i, j) = sd.kappa * Cyclotomic(rational(sd.degrees[j], sd.degrees[i])) * s(sd.dual[j], i);

    // definition route: S = S_A o Phibar o iota
    Matrix defn(sd.k, sd.k, a.field_order());
    for (std::size_t j = 0; j < sd.k; ++j) {
        Vec image = a.antipode(phibar_map(qt, iota_map(qt, sd.kappa, sd.regular_character, sd.idempotents[j])));
        Vec coords = center_coords(sd, image);
        for (std::size_t i = 0; i < sd.k; ++i) defn(i, j) = coords[i];
    }
    check(defn == closed, "the two routes to the S endomorphism disagree");
    return closed;
}

inline Matrix t_endo(const SemisimpleData& sd, const ModularData& md) {
    Matrix t(sd.k, sd.k, sd.field_order);
    for (std::size_t i = 0; i < sd.k; ++i) t(i, i) = md.T[i];
    return t;
}

// R(a) = e(a_(1)) a_(2) on the center of a double.
inline Matrix r_endo(const DoubleHandle& d, const SemisimpleData& sd) {
    const HopfAlgebra& a = d.alg();
    Matrix r(sd.k, sd.k, a.field_order());
    for (std::size_t j = 0; j < sd.k; ++j) {
        Tensor dz = a.coproduct(sd.idempotents[j]);
        Vec image = dz.contract_leg(0, d.eval_form).to_vec();
        Vec coords = center_coords(sd, image);
        for (std::size_t i = 0; i < sd.k; ++i) r(i, j) = coords[i];
    }
    return r;
}

inline ModularRep modular_rep(const QuasitriangularHopf& qt, const SemisimpleData& sd,
                              const ModularData& md, const DoubleHandle* d = nullptr) {
    ModularRep rep;
    rep.k = sd.k;
    rep.N = md.N;
    rep.linear = md.linear;
    rep.S_mat = s_endo(qt, sd);
    rep.T_mat = t_endo(sd, md);
    if (d) rep.R_mat = r_endo(*d, sd);
    return rep;
}

// A free word in the generators s, t, r and their integer powers.
struct ModularWord {
    std::vector<std::pair<char, long>> factors;

    ModularWord& append(char g, long e = 1) {
        factors.emplace_back(g, e);
        return *this;
    }

    // g~ = a g a^{-1} acts on generators by inverting them.
    ModularWord tilde() const {
        ModularWord w;
        for (const auto& [g, e] : factors) w.factors.emplace_back(g, -e);
        return w;
    }

    std::string str() const {
        std::string s;
        for (const auto& [g, e] : factors) {
            if (!s.empty()) s += " ";
            s += g;
            if (e != 1) s += "^" + std::to_string(e);
        }
        return s.empty() ? "1" : s;
    }
};

inline Matrix evaluate_word(const ModularWord& w, const ModularRep& rep) {
    Matrix out = Matrix::identity(rep.k);
    for (const auto& [g, e] : w.factors) {
        if (e == 0) continue;
        out = out * matrix_power(rep.generator(g, e < 0), e < 0 ? -e : e);
    }
    return out;
}

// d(q) as the word s t^{q'} s^{-1} t^{q} s t^{q'} with q q' = 1 mod N.
inline ModularWord diagonal_word(long q, std::size_t n_level) {
    long qp = mod_inverse(q, static_cast<long>(n_level));
    ModularWord w;
    w.append('s').append('t', qp).append('s', -1).append('t', mod_nonneg(q, static_cast<long>(n_level)));
    w.append('s').append('t', qp);
    return w;
}

struct LatticePoint {
    long m = 0, l = 0;

    // transposed right action by the 2x2 integer matrix [[a, b], [c, d]]
    LatticePoint acted(long a, long b, long c, long d) const { return {m * a + l * c, m * b + l * d}; }

    LatticePoint acted_word(const ModularWord& w) const {
        // generator matrices: s = [[0,-1],[1,0]], t = [[1,1],[0,1]], r = [[1,0],[-1,1]]
        LatticePoint p = *this;
        for (const auto& [g, e] : w.factors) {
            long steps = e < 0 ? -e : e;
            for (long i = 0; i < steps; ++i) {
                switch (g) {
                    case 's': p = e > 0 ? p.acted(0, -1, 1, 0) : p.acted(0, 1, -1, 0); break;
                    case 't': p = e > 0 ? p.acted(1, 1, 0, 1) : p.acted(1, -1, 0, 1); break;
                    case 'r': p = e > 0 ? p.acted(1, 0, -1, 1) : p.acted(1, 0, 1, 1); break;
                    default: throw BadInput("unknown generator");
                }
            }
        }
        return p;
    }

    friend bool operator==(const LatticePoint& a, const LatticePoint& b) {
        return a.m == b.m && a.l == b.l;
    }
};

// Gamma(N)-orbit test: nonzero points are equivalent iff their gcds agree and
// the primitive parts are componentwise congruent mod N.
inline bool gamma_orbit_equivalent(const LatticePoint& p, const LatticePoint& q, std::size_t n_level) {
    bool pz = p.m == 0 && p.l == 0, qz = q.m == 0 && q.l == 0;
    if (pz || qz) return pz && qz;
    Integer tp = gcd(Integer(p.m), Integer(p.l));
    Integer tq = gcd(Integer(q.m), Integer(q.l));
    if (tp != tq) return false;
    long t = to_long(tp);
    long n = static_cast<long>(n_level);
    return mod_nonneg(p.m / t - q.m / t, n) == 0 && mod_nonneg(p.l / t - q.l / t, n) == 0;
}

struct CertificateCheck {
    std::string name;
    bool passed = false;
    std::string witness;  // set on failure
};

struct CertificateReport {
    std::size_t level = 0;
    bool projective = false;
    std::vector<CertificateCheck> checks;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

namespace detail {

inline bool matrices_match(const Matrix& lhs, const Matrix& rhs, bool projective) {
    if (!projective) return lhs == rhs;
    return proportional(lhs, rhs);
}

inline void add_relation(CertificateReport& report, const std::string& name, const Matrix& lhs,
                         const Matrix& rhs, bool projective) {
    CertificateCheck c;
    c.name = name;
    c.passed = matrices_match(lhs, rhs, projective);
    if (!c.passed) c.witness = "relation " + name + " fails as a matrix identity";
    report.checks.push_back(std::move(c));
}

// The reduced q-set of the presentation: q = 1 - 2d, 2 - d, 2d + 1 with
// d = 1 mod 2^e and d = 0 mod m, where N = 2^e m and m odd.
inline std::vector<long> reduced_q_set(std::size_t n_level) {
    long n = static_cast<long>(n_level);
    long e2 = 1;
    long m = n;
    while (m % 2 == 0) {
        m /= 2;
        e2 *= 2;
    }
    long d = 0;
    for (long cand = 0; cand < n; ++cand)
        if (cand % e2 == 1 % e2 && cand % m == 0) {
            d = cand;
            break;
        }
    std::vector<long> qs{mod_nonneg(1 - 2 * d, n), mod_nonneg(2 - d, n), mod_nonneg(2 * d + 1, n)};
    std::sort(qs.begin(), qs.end());
    qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
    return qs;
}

inline std::vector<long> all_units(std::size_t n_level) {
    std::vector<long> qs;
    for (long q = 1; q < static_cast<long>(n_level); ++q)
        if (gcd(Integer(q), Integer(static_cast<long>(n_level))) == 1) qs.push_back(q);
    if (qs.empty()) qs.push_back(1);  // N = 1
    return qs;
}

inline CertificateReport certificate_impl(const ModularRep& rep, bool projective, bool all_units_mode) {
    CertificateReport report;
    report.level = rep.N;
    report.projective = projective;
    std::size_t n = rep.N;
    Matrix id = Matrix::identity(rep.k);
    const Matrix& s = rep.S_mat;
    const Matrix& t = rep.T_mat;

    add_relation(report, "s^4 = 1", matrix_power(s, 4), id, projective);
    add_relation(report, "(t s)^3 = s^2", matrix_power(t * s, 3), s * s, projective);
    add_relation(report, "t^N = 1", matrix_power(t, static_cast<long>(n)), id, projective);

    // t^{2^e} commutes with s t^m s^{-1}, N = 2^e m
    long e2 = 1, modd = static_cast<long>(n);
    while (modd % 2 == 0) {
        modd /= 2;
        e2 *= 2;
    }
    Matrix t2e = matrix_power(t, e2);
    Matrix conj = s * matrix_power(t, modd) * matrix_inverse(s);
    add_relation(report, "t^{2^e} commutes with s t^m s^{-1}", t2e * conj, conj * t2e, projective);

    std::vector<long> qs = all_units_mode ? all_units(n) : reduced_q_set(n);
    for (long q : qs) {
        Matrix dq = evaluate_word(diagonal_word(q, n), rep);
        add_relation(report, "d(" + std::to_string(q) + ") s = s d(" + std::to_string(q) + ")^{-1}",
                     dq * s, s * matrix_inverse(dq), projective);
        long q2 = mod_nonneg(q * q, static_cast<long>(n));
        add_relation(report, "d(" + std::to_string(q) + ") t = t^{q^2} d(" + std::to_string(q) + ")",
                     dq * t, matrix_power(t, q2) * dq, projective);
    }

    // minimality: the order of T is exactly N
    CertificateCheck minimal;
    minimal.name = "order of t equals N";
    std::size_t ord = 1;
    Matrix p = t;
    while (p != id && ord <= n) {
        p = p * t;
        ++ord;
    }
    minimal.passed = ord == n;
    if (!minimal.passed) minimal.witness = "t has order " + std::to_string(ord) + ", expected " + std::to_string(n);
    report.checks.push_back(std::move(minimal));
    return report;
}

}  // namespace detail

// Exact matrix verification of the SL(2, Z_N) presentation on the center.
inline CertificateReport congruence_certificate(const ModularRep& rep, bool all_units_mode = false) {
    check(rep.linear, "linear certificate needs chi_R(u) = chi_R(u^{-1}); use projective_certificate");
    return detail::certificate_impl(rep, false, all_units_mode);
}

// The same relations, each up to one nonzero scalar.
inline CertificateReport projective_certificate(const ModularRep& rep, bool all_units_mode = false) {
    return detail::certificate_impl(rep, true, all_units_mode);
}

}  // namespace hopfmod

#endif
