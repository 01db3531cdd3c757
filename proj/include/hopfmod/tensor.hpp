#ifndef HOPFMOD_TENSOR_HPP
#define HOPFMOD_TENSOR_HPP

#include <map>
#include <vector>

#include "hopfmod/linalg.hpp"

namespace hopfmod {

// Sparse element of a tensor power of a based vector space: a map from
// multi-indices to nonzero coefficients. Zero coefficients are never stored,
// so equal tensors have equal term maps.
class Tensor {
  public:
    using Index = std::vector<std::size_t>;

    Tensor() : arity_(0), dim_(0) {}
    Tensor(unsigned arity, std::size_t dim) : arity_(arity), dim_(dim) {}

    unsigned arity() const { return arity_; }
    std::size_t dim() const { return dim_; }
    const std::map<Index, Cyclotomic>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Index& idx, const Cyclotomic& c) {
        check(idx.size() == arity_, "tensor term has wrong arity");
        if (c.is_zero()) return;
        auto it = terms_.find(idx);
        if (it == terms_.end()) {
            terms_.emplace(idx, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend Tensor operator+(const Tensor& a, const Tensor& b) {
        check(a.arity_ == b.arity_ && a.dim_ == b.dim_, "tensor sum: shape mismatch");
        Tensor r = a;
        for (const auto& [idx, c] : b.terms_) r.add_term(idx, c);
        return r;
    }

    friend Tensor operator-(const Tensor& a, const Tensor& b) {
        check(a.arity_ == b.arity_ && a.dim_ == b.dim_, "tensor difference: shape mismatch");
        Tensor r = a;
        for (const auto& [idx, c] : b.terms_) r.add_term(idx, -c);
        return r;
    }

    friend Tensor operator*(const Cyclotomic& s, const Tensor& t) {
        Tensor r(t.arity_, t.dim_);
        if (s.is_zero()) return r;
        for (const auto& [idx, c] : t.terms_) r.terms_.emplace(idx, s * c);
        return r;
    }

    friend bool operator==(const Tensor& a, const Tensor& b) {
        if (a.arity_ != b.arity_ || a.dim_ != b.dim_) return false;
        if (a.terms_.size() != b.terms_.size()) return false;
        auto it = a.terms_.begin(), jt = b.terms_.begin();
        for (; it != a.terms_.end(); ++it, ++jt)
            if (it->first != jt->first || it->second != jt->second) return false;
        return true;
    }
    friend bool operator!=(const Tensor& a, const Tensor& b) { return !(a == b); }

    // Outer product: (x_I)(y_J) -> (x (x) y)_{IJ}.
    friend Tensor outer(const Tensor& a, const Tensor& b) {
        check(a.dim_ == b.dim_, "outer: dimension mismatch");
        Tensor r(a.arity_ + b.arity_, a.dim_);
        for (const auto& [ia, ca] : a.terms_)
            for (const auto& [ib, cb] : b.terms_) {
                Index idx = ia;
                idx.insert(idx.end(), ib.begin(), ib.end());
                r.add_term(idx, ca * cb);
            }
        return r;
    }

    Tensor permute_legs(const std::vector<unsigned>& perm) const {
        check(perm.size() == arity_, "permute_legs: wrong permutation size");
        Tensor r(arity_, dim_);
        for (const auto& [idx, c] : terms_) {
            Index out(arity_);
            for (unsigned k = 0; k < arity_; ++k) out[k] = idx[perm[k]];
            r.add_term(out, c);
        }
        return r;
    }

    Tensor flip() const {
        check(arity_ == 2, "flip: arity-2 tensor expected");
        return permute_legs({1, 0});
    }

    // Applies a linear map, given by columns on basis indices, to one leg.
    Tensor map_leg(unsigned leg, const std::function<Vec(std::size_t)>& map) const {
        check(leg < arity_, "map_leg: leg out of range");
        Tensor r(arity_, dim_);
        for (const auto& [idx, c] : terms_) {
            Vec image = map(idx[leg]);
            for (std::size_t t = 0; t < image.size(); ++t) {
                if (image[t].is_zero()) continue;
                Index out = idx;
                out[leg] = t;
                r.add_term(out, c * image[t]);
            }
        }
        return r;
    }

    // Contracts one leg against a functional given by its values on the basis.
    Tensor contract_leg(unsigned leg, const Vec& values) const {
        check(leg < arity_, "contract_leg: leg out of range");
        check(values.size() == dim_, "contract_leg: functional has wrong length");
        check(arity_ >= 1, "contract_leg: nothing to contract");
        Tensor r(arity_ - 1, dim_);
        for (const auto& [idx, c] : terms_) {
            if (values[idx[leg]].is_zero()) continue;
            Index out;
            out.reserve(arity_ - 1);
            for (unsigned k = 0; k < arity_; ++k)
                if (k != leg) out.push_back(idx[k]);
            r.add_term(out, c * values[idx[leg]]);
        }
        return r;
    }

    // Full contraction of an arity-0 tensor.
    Cyclotomic scalar() const {
        check(arity_ == 0, "scalar: arity-0 tensor expected");
        if (terms_.empty()) return Cyclotomic::zero();
        return terms_.begin()->second;
    }

    static Tensor from_vec(const Vec& v) {
        Tensor t(1, v.size());
        for (std::size_t i = 0; i < v.size(); ++i) t.add_term({i}, v[i]);
        return t;
    }

    Vec to_vec() const {
        check(arity_ == 1, "to_vec: arity-1 tensor expected");
        Vec v = zero_vec(dim_);
        for (const auto& [idx, c] : terms_) v[idx[0]] = c;
        return v;
    }

  private:
    unsigned arity_;
    std::size_t dim_;
    std::map<Index, Cyclotomic> terms_;
};

}  // namespace hopfmod

#endif
