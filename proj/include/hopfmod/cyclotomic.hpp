#ifndef HOPFMOD_CYCLOTOMIC_HPP
#define HOPFMOD_CYCLOTOMIC_HPP

#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hopfmod/rational.hpp"
#include "hopfmod/util.hpp"

namespace hopfmod {

namespace detail {

// Dense polynomials over Q, used only for the cyclotomic-polynomial cache
// and the extended gcd behind field inversion.
using QPoly = std::vector<Rational>;

inline void qpoly_trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline QPoly qpoly_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly c(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    qpoly_trim(c);
    return c;
}

// Division with remainder; divisor must be nonzero.
inline std::pair<QPoly, QPoly> qpoly_divmod(QPoly a, const QPoly& b) {
    check(!b.empty(), "qpoly_divmod: division by zero");
    qpoly_trim(a);
    QPoly q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
    while (a.size() >= b.size()) {
        Rational f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        qpoly_trim(a);
        if (a.size() >= b.size() && a.size() + b.size() == 0) break;
    }
    return {q, a};
}

struct CycContext {
    unsigned long order = 1;
    unsigned long phi = 1;
    QPoly minimal;                        // Phi_M, monic with integer coefficients
    std::vector<QPoly> power;             // x^t mod Phi_M, rows of length phi
    std::mutex mutex;

    const QPoly& power_row(unsigned long t) {
        std::lock_guard<std::mutex> lock(mutex);
        while (power.size() <= t) {
            unsigned long s = power.size();
            QPoly row(phi, Rational(0));
            if (s < phi) {
                row[s] = 1;
            } else {
                // x^s = x * x^{s-1}, reduced by the monic minimal polynomial
                const QPoly& prev = power[s - 1];
                QPoly shifted(phi + 1, Rational(0));
                for (unsigned long i = 0; i < phi; ++i) shifted[i + 1] = prev[i];
                Rational lead = shifted[phi];
                for (unsigned long i = 0; i < phi; ++i) row[i] = shifted[i] - lead * minimal[i];
            }
            power.push_back(std::move(row));
        }
        return power[t];
    }
};

// Global cache of cyclotomic polynomials and reduction tables, one entry per order.
inline CycContext& cyc_context(unsigned long m);

inline QPoly compute_cyclotomic(unsigned long m) {
    if (m == 1) return {Rational(-1), Rational(1)};  // x - 1
    QPoly num(m + 1, Rational(0));                   // x^m - 1
    num[0] = -1;
    num[m] = 1;
    QPoly den{Rational(1)};
    for (unsigned long d = 1; d < m; ++d)
        if (m % d == 0) den = qpoly_mul(den, cyc_context(d).minimal);
    auto [q, r] = qpoly_divmod(num, den);
    check(r.empty(), "cyclotomic polynomial division left a remainder");
    return q;
}

inline CycContext& cyc_context(unsigned long m) {
    static std::mutex registry_mutex;
    static std::map<unsigned long, CycContext*> registry;
    {
        std::lock_guard<std::mutex> lock(registry_mutex);
        auto it = registry.find(m);
        if (it != registry.end()) return *it->second;
    }
    // Build outside the registry lock; Phi_m needs the contexts of the divisors.
    auto* ctx = new CycContext;
    ctx->order = m;
    ctx->phi = euler_phi(m);
    ctx->minimal = compute_cyclotomic(m);
    check(ctx->minimal.size() == ctx->phi + 1, "cyclotomic degree mismatch");
    {
        std::lock_guard<std::mutex> lock(registry_mutex);
        auto [it, inserted] = registry.emplace(m, ctx);
        if (!inserted) delete ctx;
        return *it->second;
    }
}

}  // namespace detail

// Element of the cyclotomic field Q_M in the power basis 1, z, ..., z^{phi(M)-1}
// of a primitive M-th root of unity z, reduced modulo Phi_M. The representation
// is canonical: equal elements have equal coefficient vectors once both are
// promoted to a common order.
class Cyclotomic {
  public:
    Cyclotomic() : order_(1), coeffs_(1, Rational(0)) {}

    explicit Cyclotomic(const Rational& q) : order_(1), coeffs_(1, q) {}
    explicit Cyclotomic(long n) : order_(1), coeffs_(1, Rational(n)) {}

    Cyclotomic(unsigned long order, std::vector<Rational> coeffs)
        : order_(order), coeffs_(std::move(coeffs)) {
        check(coeffs_.size() == detail::cyc_context(order_).phi,
              "cyclotomic coefficient vector has wrong length");
    }

    static Cyclotomic zero(unsigned long order = 1) {
        return Cyclotomic(order, std::vector<Rational>(detail::cyc_context(order).phi, Rational(0)));
    }

    static Cyclotomic one(unsigned long order = 1) {
        auto c = zero(order);
        c.coeffs_[0] = 1;
        return c;
    }

    // zeta_M^k
    static Cyclotomic root_of_unity(unsigned long order, long k) {
        auto& ctx = detail::cyc_context(order);
        unsigned long e = static_cast<unsigned long>(mod_nonneg(k, static_cast<long>(order)));
        return Cyclotomic(order, ctx.power_row(e));
    }

    unsigned long order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    bool is_rational() const {
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return false;
        return true;
    }

    // The rational value, when the element lies in Q.
    Rational to_rational() const {
        check(is_rational(), "cyclotomic number is not rational");
        return coeffs_[0];
    }

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
        auto [x, y] = to_common_order(a, b);
        for (std::size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] += y.coeffs_[i];
        return x;
    }

    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
        auto [x, y] = to_common_order(a, b);
        for (std::size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] -= y.coeffs_[i];
        return x;
    }

    Cyclotomic operator-() const {
        Cyclotomic r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        auto [x, y] = to_common_order(a, b);
        auto& ctx = detail::cyc_context(x.order_);
        unsigned long phi = ctx.phi;
        std::vector<Rational> prod(2 * phi - 1, Rational(0));
        for (unsigned long i = 0; i < phi; ++i) {
            if (x.coeffs_[i] == 0) continue;
            for (unsigned long j = 0; j < phi; ++j) {
                if (y.coeffs_[j] == 0) continue;
                prod[i + j] += x.coeffs_[i] * y.coeffs_[j];
            }
        }
        std::vector<Rational> out(phi, Rational(0));
        for (unsigned long t = 0; t < prod.size(); ++t) {
            if (prod[t] == 0) continue;
            if (t < phi) {
                out[t] += prod[t];
            } else {
                const auto& row = ctx.power_row(t);
                for (unsigned long i = 0; i < phi; ++i) out[i] += prod[t] * row[i];
            }
        }
        return Cyclotomic(x.order_, std::move(out));
    }

    Cyclotomic inverse() const {
        check(!is_zero(), "division by zero in cyclotomic field");
        auto& ctx = detail::cyc_context(order_);
        // Extended Euclid in Q[x] against the irreducible Phi_M: a*u + Phi*v = 1.
        detail::QPoly a(coeffs_.begin(), coeffs_.end());
        detail::qpoly_trim(a);
        detail::QPoly r0 = ctx.minimal, r1 = a;
        detail::QPoly s0{}, s1{Rational(1)};
        while (!r1.empty()) {
            auto [q, r2] = detail::qpoly_divmod(r0, r1);
            detail::QPoly s2 = s0;
            detail::QPoly qs1 = detail::qpoly_mul(q, s1);
            if (s2.size() < qs1.size()) s2.resize(qs1.size(), Rational(0));
            for (std::size_t i = 0; i < qs1.size(); ++i) s2[i] -= qs1[i];
            detail::qpoly_trim(s2);
            r0 = std::move(r1);
            r1 = std::move(r2);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        check(r0.size() == 1, "inverse: gcd with the minimal polynomial is not constant");
        Rational g = r0[0];
        std::vector<Rational> inv(ctx.phi, Rational(0));
        // s0 may still have degree >= phi only if a did; reduce via power rows.
        for (std::size_t t = 0; t < s0.size(); ++t) {
            if (s0[t] == 0) continue;
            Rational c = s0[t] / g;
            if (t < ctx.phi) {
                inv[t] += c;
            } else {
                const auto& row = ctx.power_row(t);
                for (unsigned long i = 0; i < ctx.phi; ++i) inv[i] += c * row[i];
            }
        }
        return Cyclotomic(order_, std::move(inv));
    }

    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
    Cyclotomic& operator/=(const Cyclotomic& o) { return *this = *this / o; }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
        auto [x, y] = to_common_order(a, b);
        return x.coeffs_ == y.coeffs_;
    }
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    // Deterministic total order (used only for canonical sorting of data,
    // not meaningful as a field order). Compares at a common field order.
    static int compare(const Cyclotomic& a, const Cyclotomic& b) {
        auto [x, y] = to_common_order(a, b);
        for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
            int c = cmp(x.coeffs_[i], y.coeffs_[i]);
            if (c != 0) return c;
        }
        return 0;
    }

    std::string to_string() const {
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0) continue;
            if (!first) os << " + ";
            os << coeffs_[i].get_str();
            if (i >= 1) os << "*z" << order_ << (i > 1 ? "^" + std::to_string(i) : "");
            first = false;
        }
        if (first) os << "0";
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) { return os << c.to_string(); }

    static std::pair<Cyclotomic, Cyclotomic> to_common_order(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.order_ == b.order_) return {a, b};
        unsigned long m = to_long(lcm(Integer(static_cast<long>(a.order_)), Integer(static_cast<long>(b.order_))));
        return {promote(a, m), promote(b, m)};
    }

    // The same field element expressed in Q_{M'}; requires order | M'.
    static Cyclotomic promote(const Cyclotomic& x, unsigned long target) {
        if (x.order_ == target) return x;
        if (target % x.order_ != 0)
            throw NonDivisibleOrder("cannot promote order " + std::to_string(x.order_) + " to " +
                                    std::to_string(target));
        auto& ctx = detail::cyc_context(target);
        unsigned long step = target / x.order_;
        std::vector<Rational> out(ctx.phi, Rational(0));
        for (std::size_t j = 0; j < x.coeffs_.size(); ++j) {
            if (x.coeffs_[j] == 0) continue;
            const auto& row = ctx.power_row(step * j);
            for (unsigned long i = 0; i < ctx.phi; ++i) out[i] += x.coeffs_[j] * row[i];
        }
        return Cyclotomic(target, std::move(out));
    }

    // Attempts to express x in Q_target for target | order(x); returns false when
    // x does not lie in the subfield.
    static bool try_reduce(const Cyclotomic& x, unsigned long target, Cyclotomic& out);

    // Smallest divisor d of order(x) with x in Q_d; the result is expressed there.
    static Cyclotomic reduce_to_minimal_order(const Cyclotomic& x) {
        for (unsigned long d = 1; d <= x.order_; ++d) {
            if (x.order_ % d != 0) continue;
            Cyclotomic out;
            if (try_reduce(x, d, out)) return out;
        }
        return x;
    }

  private:
    unsigned long order_;
    std::vector<Rational> coeffs_;
};

// sigma_q: zeta -> zeta^q, the Galois automorphism of Q_M for gcd(q, M) = 1.
inline Cyclotomic galois_apply(long q, const Cyclotomic& x) {
    unsigned long m = x.order();
    long qm = mod_nonneg(q, static_cast<long>(m));
    if (gcd(Integer(qm), Integer(static_cast<long>(m))) != 1)
        throw NotAUnit("galois_apply: " + std::to_string(q) + " is not a unit mod " + std::to_string(m));
    auto& ctx = detail::cyc_context(m);
    std::vector<Rational> out(ctx.phi, Rational(0));
    const auto& coeffs = x.coeffs();
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        if (coeffs[j] == 0) continue;
        const auto& row = ctx.power_row(static_cast<unsigned long>(qm) * j % m);
        for (unsigned long i = 0; i < ctx.phi; ++i) out[i] += coeffs[j] * row[i];
    }
    return Cyclotomic(m, std::move(out));
}

// Complex conjugation on Q_M.
inline Cyclotomic conjugate(const Cyclotomic& x) {
    if (x.order() <= 2) return x;
    return galois_apply(-1, x);
}

inline Cyclotomic pow(const Cyclotomic& x, long e) {
    if (e < 0) return pow(x.inverse(), -e);
    Cyclotomic r = Cyclotomic::one(x.order()), base = x;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

}  // namespace hopfmod

#endif
