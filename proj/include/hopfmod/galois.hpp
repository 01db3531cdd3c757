#ifndef HOPFMOD_GALOIS_HPP
#define HOPFMOD_GALOIS_HPP

#include "hopfmod/indicators.hpp"

namespace hopfmod {

// Lifts a unit q mod N to a representative coprime to the field order, so
// that sigma_q can act on coefficients represented in Q_M while restricting
// to the right automorphism of Q_N.
inline long lift_unit(long q, std::size_t n_level, unsigned long field_order) {
    long n = static_cast<long>(n_level);
    check(gcd(Integer(mod_nonneg(q, n == 0 ? 1 : n)), Integer(n)) == 1 || n == 1,
          "lift_unit: q is not a unit mod N");
    long m = static_cast<long>(field_order);
    for (long k = 0; k < m; ++k) {
        long cand = mod_nonneg(q + k * n, m);
        if (cand == 0) cand = m;  // q = 0 mod m only if m = 1
        if (gcd(Integer(cand), Integer(m)) == 1) return cand;
    }
    throw NotAUnit("no lift of q coprime to the field order");
}

// The permutation i -> sigma_q . i determined by
// sigma_q(xi_i(chi_j)) = xi_{sigma_q.i}(chi_j) for all j.
inline std::vector<std::size_t> galois_permutation(const SemisimpleData& sd, std::size_t n_level, long q) {
    check(sd.has_character_ring, "galois_permutation needs character ring data");
    long qq = lift_unit(q, n_level, sd.field_order);
    std::vector<std::size_t> perm(sd.k, sd.k);
    std::vector<bool> used(sd.k, false);
    for (std::size_t i = 0; i < sd.k; ++i) {
        for (std::size_t t = 0; t < sd.k; ++t) {
            bool match = true;
            for (std::size_t j = 0; j < sd.k && match; ++j)
                match = galois_apply(qq, sd.xi_table(i, j)) == sd.xi_table(t, j);
            if (match) {
                if (perm[i] != sd.k || used[t])
                    throw NoMatchingIndex("ambiguous Galois match: distinct simples share a value vector");
                perm[i] = t;
                used[t] = true;
            }
        }
        if (perm[i] == sd.k) throw NoMatchingIndex("no simple matches the transported central character");
    }
    return perm;
}

struct GaloisAction {
    std::size_t N = 1;
    unsigned long field_order = 1;
    std::vector<long> units;                          // units mod N
    std::map<long, std::vector<std::size_t>> perm;    // q -> (i -> sigma_q.i)

    const std::vector<std::size_t>& of(long q) const {
        auto it = perm.find(mod_nonneg(q, static_cast<long>(N)));
        check(it != perm.end(), "Galois action: q is not a unit mod N");
        return it->second;
    }
};

inline GaloisAction galois_action(const SemisimpleData& sd, std::size_t n_level) {
    GaloisAction ga;
    ga.N = n_level == 0 ? 1 : n_level;
    ga.field_order = sd.field_order;
    for (long q = 0; q < static_cast<long>(ga.N); ++q) {
        if (gcd(Integer(q), Integer(static_cast<long>(ga.N))) != 1) continue;
        ga.units.push_back(q);
        ga.perm[q] = galois_permutation(sd, ga.N, q);
    }
    if (ga.units.empty()) {
        ga.units.push_back(0);
        ga.perm[0] = galois_permutation(sd, 1, 1);
    }
    return ga;
}

// sigma_q . z on idempotent coordinates: sigma.e_i = e_{sigma^{-1}.i},
// extended linearly, so (sigma.z)_j = z_{sigma.j}.
inline Vec galois_act_center(const GaloisAction& ga, long q, const Vec& coords) {
    const auto& perm = ga.of(q);
    Vec out = zero_vec(coords.size(), ga.field_order);
    for (std::size_t j = 0; j < coords.size(); ++j) out[j] = coords[perm[j]];
    return out;
}

namespace detail {

inline Cyclotomic semilinear_coeff(const GaloisAction& ga, long q, const Cyclotomic& c) {
    long qq = lift_unit(q, ga.N, std::max<unsigned long>(ga.field_order, c.order()));
    // coefficients of central elements in Z_{Q_N} must lie in Q_N
    if (ga.field_order % ga.N == 0) {
        Cyclotomic reduced;
        if (!Cyclotomic::try_reduce(Cyclotomic::promote(c, ga.field_order), ga.N, reduced))
            throw CoefficientOutsideQN("coefficient does not lie in Q_N");
    }
    return galois_apply(qq, c);
}

}  // namespace detail

// pi'(sigma): applies sigma to the coefficients in the idempotent basis.
inline Vec pi_prime_action(const GaloisAction& ga, long q, const Vec& coords) {
    Vec out = coords;
    for (auto& c : out) c = detail::semilinear_coeff(ga, q, c);
    return out;
}

// pi(sigma): applies sigma to the coefficients in the class-sum basis.
inline Vec pi_action(const GaloisAction& ga, const SemisimpleData& sd, long q, const Vec& coords) {
    // base change: z = sum mu_i z_i with (z_i)_j = xi_i(chi_j)/n_j
    Matrix zmat(sd.k, sd.k, sd.field_order);
    for (std::size_t i = 0; i < sd.k; ++i)
        for (std::size_t j = 0; j < sd.k; ++j)
            zmat(j, i) = sd.xi_table(i, j) / Cyclotomic(sd.degrees[j]);
    auto mu = matrix_solve(zmat, coords);
    check(mu.has_value(), "class sums do not span the center");
    Vec smu = *mu;
    for (auto& c : smu) c = detail::semilinear_coeff(ga, q, c);
    return zmat * smu;
}

// The Hopf symbol (q/A) = chi_R(u^{-q}) / chi_R(u^{-1}) for gcd(q, N) = 1, else 0.
inline Cyclotomic hopf_symbol(const SemisimpleData& sd, const ModularData& md, long q) {
    long n = static_cast<long>(md.N);
    if (gcd(Integer(mod_nonneg(q, n)), Integer(n)) != 1) return Cyclotomic::zero(sd.field_order);
    Cyclotomic num = Cyclotomic::zero(sd.field_order);
    Cyclotomic den = Cyclotomic::zero(sd.field_order);
    for (std::size_t i = 0; i < sd.k; ++i) {
        // u^{-q} = sum u_i^{-q} e_i; T[i] = 1/u_i
        num += Cyclotomic(sd.degrees[i]) * pow(md.T[i], mod_nonneg(q, n));
        den += Cyclotomic(sd.degrees[i]) * md.T[i];
    }
    return num / den;
}

// Classical Jacobi symbol via reciprocity; n must be odd and positive.
inline int jacobi_symbol(long q, long n) {
    if (n <= 0 || n % 2 == 0) throw EvenModulus("Jacobi symbol needs an odd positive modulus");
    q = mod_nonneg(q, n);
    int result = 1;
    while (q != 0) {
        while (q % 2 == 0) {
            q /= 2;
            long r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(q, n);
        if (q % 4 == 3 && n % 4 == 3) result = -result;
        q %= n;
    }
    return n == 1 ? result : 0;
}

// sigma_q . z versus the diagonal word d(q) acting through the modular
// representation. On doubles these agree exactly; in the general linear case
// d(q).z = (q/A) sigma_q.z.
inline bool check_galois_vs_diagonal(const ModularRep& rep, const GaloisAction& ga,
                                     const SemisimpleData& sd, const ModularData& md, long q,
                                     const Vec& coords, bool is_double) {
    Matrix dq = evaluate_word(diagonal_word(q, md.N), rep);
    Vec lhs = dq * coords;
    Vec rhs = galois_act_center(ga, q, coords);
    if (!is_double) {
        check(rep.linear, "the Hopf-symbol comparison needs the linear case");
        Cyclotomic symbol = hopf_symbol(sd, md, q);
        for (auto& c : rhs) c *= symbol;
    }
    return lhs == rhs;
}

}  // namespace hopfmod

#endif
