#ifndef HOPFMOD_GROUP_HPP
#define HOPFMOD_GROUP_HPP

#include <numeric>
#include <string>
#include <vector>

#include "hopfmod/rational.hpp"
#include "hopfmod/util.hpp"

namespace hopfmod {

// Finite group given purely by its multiplication table. The table is checked
// to be a group law on construction.
class FiniteGroup {
  public:
    // check_associativity = false defers the associativity check to the Hopf
    // axiom verifier, so corrupted input tables fail with a named axiom.
    static FiniteGroup from_table(std::vector<std::vector<std::size_t>> table,
                                  std::vector<std::string> labels = {}, bool check_associativity = true) {
        FiniteGroup g;
        g.order_ = table.size();
        check(g.order_ >= 1, "group: empty table");
        g.table_.resize(g.order_ * g.order_);
        for (std::size_t i = 0; i < g.order_; ++i) {
            check(table[i].size() == g.order_, "group: table is not square");
            for (std::size_t j = 0; j < g.order_; ++j) {
                check(table[i][j] < g.order_, "group: index out of range");
                g.table_[i * g.order_ + j] = table[i][j];
            }
        }
        g.labels_ = std::move(labels);
        if (g.labels_.empty())
            for (std::size_t i = 0; i < g.order_; ++i) g.labels_.push_back("g" + std::to_string(i));
        g.validate(check_associativity);
        return g;
    }

    static FiniteGroup cyclic(std::size_t n) {
        std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
        return from_table(std::move(t));
    }

    // S_3 as permutations of three points, enumerated in one-line notation.
    static FiniteGroup symmetric3() {
        const int perms[6][3] = {{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
        auto compose = [&](int a, int b) {
            int c[3];
            for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
            for (int k = 0; k < 6; ++k)
                if (perms[k][0] == c[0] && perms[k][1] == c[1] && perms[k][2] == c[2]) return k;
            throw error("symmetric3: composition not found");
        };
        std::vector<std::vector<std::size_t>> t(6, std::vector<std::size_t>(6));
        for (int a = 0; a < 6; ++a)
            for (int b = 0; b < 6; ++b) t[a][b] = static_cast<std::size_t>(compose(a, b));
        return from_table(std::move(t), {"e", "(01)", "(12)", "(02)", "(012)", "(021)"});
    }

    // Dihedral group of order 8: r^4 = s^2 = 1, s r s = r^-1; element i*2+j <-> r^i s^j.
    static FiniteGroup dihedral4() {
        auto idx = [](std::size_t r, std::size_t s) { return r * 2 + s; };
        std::vector<std::vector<std::size_t>> t(8, std::vector<std::size_t>(8));
        for (std::size_t r1 = 0; r1 < 4; ++r1)
            for (std::size_t s1 = 0; s1 < 2; ++s1)
                for (std::size_t r2 = 0; r2 < 4; ++r2)
                    for (std::size_t s2 = 0; s2 < 2; ++s2) {
                        // (r^a s^b)(r^c s^d) = r^{a + c*(-1)^b} s^{b+d}
                        std::size_t r = (r1 + (s1 ? 4 - r2 : r2)) % 4;
                        std::size_t s = (s1 + s2) % 2;
                        t[idx(r1, s1)][idx(r2, s2)] = idx(r, s);
                    }
        return from_table(std::move(t));
    }

    // Quaternion group {1, -1, i, -i, j, -j, k, -k}.
    static FiniteGroup quaternion8() {
        // encode g = (sign, axis) with axis 0 = 1, 1 = i, 2 = j, 3 = k
        auto idx = [](int sign, int axis) { return static_cast<std::size_t>(axis * 2 + (sign < 0 ? 1 : 0)); };
        auto mul_axis = [](int a, int b, int& sign) {
            static const int table[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
            static const int signs[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
            sign = signs[a][b];
            return table[a][b];
        };
        std::vector<std::vector<std::size_t>> t(8, std::vector<std::size_t>(8));
        for (int a = 0; a < 4; ++a)
            for (int sa : {1, -1})
                for (int b = 0; b < 4; ++b)
                    for (int sb : {1, -1}) {
                        int sign;
                        int axis = mul_axis(a, b, sign);
                        t[idx(sa, a)][idx(sb, b)] = idx(sa * sb * sign, axis);
                    }
        return from_table(std::move(t), {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
    }

    std::size_t order() const { return order_; }
    std::size_t mul(std::size_t i, std::size_t j) const { return table_[i * order_ + j]; }
    std::size_t identity() const { return identity_; }
    std::size_t inverse(std::size_t i) const { return inverse_[i]; }
    const std::vector<std::string>& labels() const { return labels_; }

    // 0 when the powers of i never return to the identity (possible only for
    // corrupted tables that skipped the associativity check).
    std::size_t element_order(std::size_t i) const {
        std::size_t p = i, k = 1;
        while (p != identity_) {
            if (k > order_) return 0;
            p = mul(p, i);
            ++k;
        }
        return k;
    }

    std::size_t exponent() const {
        Integer e(1);
        for (std::size_t i = 0; i < order_; ++i) {
            std::size_t o = element_order(i);
            e = lcm(e, Integer(static_cast<long>(o == 0 ? order_ : o)));
        }
        return static_cast<std::size_t>(to_long(e));
    }

    std::vector<std::vector<std::size_t>> conjugacy_classes() const {
        std::vector<bool> seen(order_, false);
        std::vector<std::vector<std::size_t>> classes;
        for (std::size_t g = 0; g < order_; ++g) {
            if (seen[g]) continue;
            std::vector<std::size_t> cls;
            for (std::size_t h = 0; h < order_; ++h) {
                std::size_t c = mul(mul(h, g), inverse_[h]);
                if (!seen[c]) {
                    seen[c] = true;
                    cls.push_back(c);
                }
            }
            classes.push_back(std::move(cls));
        }
        return classes;
    }

    std::vector<std::size_t> centralizer(std::size_t g) const {
        std::vector<std::size_t> c;
        for (std::size_t h = 0; h < order_; ++h)
            if (mul(h, g) == mul(g, h)) c.push_back(h);
        return c;
    }

  private:
    void validate(bool check_associativity) {
        // identity
        bool found = false;
        for (std::size_t e = 0; e < order_ && !found; ++e) {
            bool ok = true;
            for (std::size_t i = 0; i < order_ && ok; ++i) ok = mul(e, i) == i && mul(i, e) == i;
            if (ok) {
                identity_ = e;
                found = true;
            }
        }
        check(found, "group: no identity element");
        // inverses
        inverse_.assign(order_, order_);
        for (std::size_t i = 0; i < order_; ++i) {
            for (std::size_t j = 0; j < order_; ++j)
                if (mul(i, j) == identity_ && mul(j, i) == identity_) {
                    inverse_[i] = j;
                    break;
                }
            check(inverse_[i] < order_, "group: missing inverse");
        }
        // associativity
        if (!check_associativity) return;
        for (std::size_t i = 0; i < order_; ++i)
            for (std::size_t j = 0; j < order_; ++j)
                for (std::size_t k = 0; k < order_; ++k)
                    check(mul(mul(i, j), k) == mul(i, mul(j, k)), "group: table is not associative");
    }

    std::size_t order_ = 0;
    std::size_t identity_ = 0;
    std::vector<std::size_t> table_;
    std::vector<std::size_t> inverse_;
    std::vector<std::string> labels_;
};

}  // namespace hopfmod

#endif
