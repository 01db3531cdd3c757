#ifndef HOPFMOD_UTIL_HPP
#define HOPFMOD_UTIL_HPP

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace hopfmod {

struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

#define HOPFMOD_DEFINE_ERROR(Name)                                        \
    struct Name : error {                                                 \
        explicit Name(const std::string& what = #Name) : error(what) {}   \
    }

HOPFMOD_DEFINE_ERROR(NonDivisibleOrder);
HOPFMOD_DEFINE_ERROR(NotAUnit);
HOPFMOD_DEFINE_ERROR(PrecisionExhausted);
HOPFMOD_DEFINE_ERROR(SingularMatrix);
HOPFMOD_DEFINE_ERROR(NotMaterialized);
HOPFMOD_DEFINE_ERROR(NotSemisimple);
HOPFMOD_DEFINE_ERROR(NoIntegral);
HOPFMOD_DEFINE_ERROR(EvenOrder);
HOPFMOD_DEFINE_ERROR(ExponentBoundExceeded);
HOPFMOD_DEFINE_ERROR(SplitFailure);
HOPFMOD_DEFINE_ERROR(NonSquareDegree);
HOPFMOD_DEFINE_ERROR(NotADouble);
HOPFMOD_DEFINE_ERROR(DimensionOverflow);
HOPFMOD_DEFINE_ERROR(NotCentral);
HOPFMOD_DEFINE_ERROR(NoMatchingIndex);
HOPFMOD_DEFINE_ERROR(CoefficientOutsideQN);
HOPFMOD_DEFINE_ERROR(EvenModulus);
HOPFMOD_DEFINE_ERROR(NotSameOrbit);
HOPFMOD_DEFINE_ERROR(BadInput);

#undef HOPFMOD_DEFINE_ERROR

inline void check(bool cond, const std::string& what) {
    if (!cond) throw error(what);
}

// Runs f(i) for i in [0, count) on up to `jobs` threads. jobs <= 1 runs inline.
// f must be safe to call concurrently for distinct i.
inline void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& f) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) f(i);
        return;
    }
    unsigned workers = std::min<std::size_t>(jobs, count);
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < count; i += workers) f(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace hopfmod

#endif
