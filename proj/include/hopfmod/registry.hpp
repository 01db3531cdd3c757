#ifndef HOPFMOD_REGISTRY_HPP
#define HOPFMOD_REGISTRY_HPP

#include "hopfmod/galois.hpp"
#include "hopfmod/serialize.hpp"

namespace hopfmod {

// Built-in example registry: Z2, Z3, Z4, Z5, S3, D4, Q8, radford:n (odd n <= 9),
// and user-supplied multiplication tables.
inline FiniteGroup group_by_name(const std::string& name) {
    if (name == "Z2") return FiniteGroup::cyclic(2);
    if (name == "Z3") return FiniteGroup::cyclic(3);
    if (name == "Z4") return FiniteGroup::cyclic(4);
    if (name == "Z5") return FiniteGroup::cyclic(5);
    if (name == "S3") return FiniteGroup::symmetric3();
    if (name == "D4") return FiniteGroup::dihedral4();
    if (name == "Q8") return FiniteGroup::quaternion8();
    throw BadInput("unknown group name: " + name + " (known: Z2 Z3 Z4 Z5 S3 D4 Q8)");
}

struct ExampleSpec {
    std::string group;        // registry name, empty if table or radford
    std::string table_path;   // JSON multiplication table
    long radford_n = 0;       // radford:n when nonzero
    bool make_double = false;
    unsigned long field_order = 0;  // 0: pick the natural one

    std::string describe() const {
        std::ostringstream os;
        if (radford_n > 0) {
            os << "radford:" << radford_n;
        } else {
            os << (group.empty() ? "table:" + table_path : group);
            if (make_double) os << " (double)";
        }
        if (field_order > 0) os << " over Q_" << field_order;
        return os.str();
    }
};

struct Example {
    ExampleSpec spec;
    HopfPtr base;                       // the underlying Hopf algebra
    std::shared_ptr<DoubleHandle> dh;   // set when the object is a double
    bool has_qt = false;
    QuasitriangularHopf qt;             // the quasitriangular object under study
    unsigned long field_order = 1;

    const HopfAlgebra& alg() const { return has_qt ? qt.alg() : *base; }
    HopfPtr alg_ptr() const { return has_qt ? qt.algebra : base; }
};

inline Example build_example(const ExampleSpec& spec) {
    Example ex;
    ex.spec = spec;
    if (spec.radford_n > 0) {
        check(spec.radford_n % 2 == 1 && spec.radford_n <= 9, "radford:n needs odd n <= 9");
        unsigned long field = spec.field_order ? spec.field_order : static_cast<unsigned long>(spec.radford_n);
        ex.qt = radford_example(static_cast<std::size_t>(spec.radford_n), field);
        ex.has_qt = true;
        ex.base = ex.qt.algebra;
        ex.field_order = field;
        return ex;
    }
    FiniteGroup g = spec.table_path.empty() ? group_by_name(spec.group) : load_group_file(spec.table_path);
    unsigned long field = spec.field_order ? spec.field_order : static_cast<unsigned long>(g.exponent());
    ex.field_order = field;
    ex.base = group_algebra(g, field);
    if (spec.make_double) {
        ex.dh = std::make_shared<DoubleHandle>(drinfeld_double(ex.base));
        ex.qt = ex.dh->qt;
        ex.has_qt = true;
    }
    return ex;
}

// Wedderburn and modular analysis of a built example; only available when the
// object is quasitriangular (a double or a Radford algebra).
struct Analysis {
    SemisimpleData sd;
    ModularData md;
    ModularRep rep;
    GaloisAction ga;
    std::shared_ptr<IndicatorContext> ctx;  // doubles only
};

inline IndicatorContext assemble_indicator_context(std::shared_ptr<DoubleHandle> d, SemisimpleData sd,
                                                   ModularData md, ModularRep rep) {
    IndicatorContext ctx;
    ctx.d = std::move(d);
    ctx.sd = std::move(sd);
    ctx.md = std::move(md);
    ctx.rep = std::move(rep);
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

inline Analysis analyze(const Example& ex, const RootConfig& roots = RootConfig(),
                        std::uint64_t seed = 0x5eed) {
    check(ex.has_qt, "analysis needs a quasitriangular object: pass a double or radford:n");
    Analysis an;
    an.sd = split_center(ex.alg(), roots, seed);
    character_ring_data(ex.qt, an.sd);
    an.md = modular_data(ex.qt, an.sd);
    an.rep = modular_rep(ex.qt, an.sd, an.md, ex.dh.get());
    an.ga = galois_action(an.sd, an.md.N);
    if (ex.dh)
        an.ctx = std::make_shared<IndicatorContext>(
            assemble_indicator_context(ex.dh, an.sd, an.md, an.rep));
    return an;
}

}  // namespace hopfmod

#endif
