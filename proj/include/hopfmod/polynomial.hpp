#ifndef HOPFMOD_POLYNOMIAL_HPP
#define HOPFMOD_POLYNOMIAL_HPP

#include <ostream>
#include <utility>
#include <vector>

#include "hopfmod/cyclotomic.hpp"

namespace hopfmod {

// Dense polynomial over a cyclotomic field; trailing zeros are trimmed, the
// empty vector is the zero polynomial.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Cyclotomic> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    explicit Polynomial(const Cyclotomic& constant) : coeffs_{constant} { trim(); }

    static Polynomial x_power(unsigned long k, unsigned long order = 1) {
        std::vector<Cyclotomic> c(k + 1, Cyclotomic::zero(order));
        c[k] = Cyclotomic::one(order);
        return Polynomial(std::move(c));
    }

    const std::vector<Cyclotomic>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is reported as -1.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

    const Cyclotomic& leading() const {
        check(!coeffs_.empty(), "leading coefficient of zero polynomial");
        return coeffs_.back();
    }

    Cyclotomic coeff(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : Cyclotomic::zero();
    }

    Cyclotomic operator()(const Cyclotomic& x) const {
        Cyclotomic value = Cyclotomic::zero(x.order());
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) value = value * x + *it;
        return value;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Cyclotomic> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Cyclotomic::zero());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
        return Polynomial(std::move(c));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<Cyclotomic> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Cyclotomic::zero());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
        return Polynomial(std::move(c));
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<Cyclotomic> c(a.coeffs_.size() + b.coeffs_.size() - 1, Cyclotomic::zero());
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Polynomial(std::move(c));
    }

    friend Polynomial operator*(const Cyclotomic& s, const Polynomial& p) {
        std::vector<Cyclotomic> c = p.coeffs_;
        for (auto& x : c) x *= s;
        return Polynomial(std::move(c));
    }

    friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
        check(!b.is_zero(), "polynomial division by zero");
        Polynomial r = a, q;
        Cyclotomic lead_inv = b.leading().inverse();
        while (!r.is_zero() && r.degree() >= b.degree()) {
            std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
            Cyclotomic f = r.leading() * lead_inv;
            if (q.coeffs_.size() < shift + 1) q.coeffs_.resize(shift + 1, Cyclotomic::zero());
            q.coeffs_[shift] += f;
            std::vector<Cyclotomic> nr = r.coeffs_;
            for (std::size_t i = 0; i < b.coeffs_.size(); ++i) nr[shift + i] -= f * b.coeffs_[i];
            r = Polynomial(std::move(nr));
        }
        q.trim();
        return {q, r};
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.coeffs_.size() != b.coeffs_.size()) return false;
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            if (a.coeffs_[i] != b.coeffs_[i]) return false;
        return true;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial derivative() const {
        if (coeffs_.size() <= 1) return Polynomial();
        std::vector<Cyclotomic> c(coeffs_.size() - 1, Cyclotomic::zero());
        for (std::size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = Cyclotomic(Rational(static_cast<long>(i))) * coeffs_[i];
        return Polynomial(std::move(c));
    }

    Polynomial monic() const {
        check(!is_zero(), "monic of zero polynomial");
        return leading().inverse() * *this;
    }

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
        if (p.is_zero()) return os << "0";
        for (std::size_t i = p.coeffs_.size(); i-- > 0;) {
            os << "(" << p.coeffs_[i] << ")*x^" << i;
            if (i > 0) os << " + ";
        }
        return os;
    }

  private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<Cyclotomic> coeffs_;
};

inline Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

// p / gcd(p, p'), monic: the product of the distinct irreducible factors.
inline Polynomial squarefree_part(const Polynomial& p) {
    check(!p.is_zero(), "squarefree part of zero polynomial");
    Polynomial g = gcd(p, p.derivative());
    if (g.degree() <= 0) return p.monic();
    auto [q, r] = divmod(p, g);
    check(r.is_zero(), "squarefree division left a remainder");
    return q.monic();
}

// Phi_M as a polynomial over Q (coefficients at cyclotomic order 1).
inline Polynomial cyclotomic_polynomial(unsigned long m) {
    const auto& ctx = detail::cyc_context(m);
    std::vector<Cyclotomic> c;
    c.reserve(ctx.minimal.size());
    for (const auto& q : ctx.minimal) c.push_back(Cyclotomic(q));
    return Polynomial(std::move(c));
}

}  // namespace hopfmod

#endif
