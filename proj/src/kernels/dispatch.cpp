#include "bdecomp/kernels.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace bdecomp::kernels {

std::string_view to_string(Isa isa)
{
    return isa == Isa::Avx2 ? "avx2" : "scalar";
}

bool supported(Isa isa)
{
    if (isa == Isa::Scalar) {
        return true;
    }
#if defined(__x86_64__) && defined(__GNUC__)
    static const bool avx2 = detail::avx2_table() != nullptr && __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    return avx2;
#else
    return false;
#endif
}

Isa best_isa()
{
    static const Isa best = [] {
        const char* force = std::getenv("BDECOMP_FORCE_SCALAR");
        if (force != nullptr && std::string(force) == "1") {
            return Isa::Scalar;
        }
        return supported(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
    }();
    return best;
}

const KernelTable& table(Isa isa)
{
    if (!supported(isa)) {
        throw std::invalid_argument("kernel variant not supported on this CPU: " + std::string(to_string(isa)));
    }
    return isa == Isa::Avx2 ? *detail::avx2_table() : detail::scalar_table();
}

void bernstein_eval(std::span<const double> coeffs, std::span<const double> xs, std::span<double> out, Isa isa)
{
    if (out.size() != xs.size()) {
        throw std::invalid_argument("bernstein_eval: output size mismatch");
    }
    table(isa).bernstein_eval(coeffs.data(), coeffs.size(), xs.data(), out.data(), xs.size());
}

double max_abs_diff(std::span<const double> a, std::span<const double> b, Isa isa)
{
    if (a.size() != b.size()) {
        throw std::invalid_argument("max_abs_diff: size mismatch");
    }
    return table(isa).max_abs_diff(a.data(), b.data(), a.size());
}

double weighted_sum_sq_diff(std::span<const double> a, std::span<const double> b, std::span<const double> w, Isa isa)
{
    if (a.size() != b.size() || a.size() != w.size()) {
        throw std::invalid_argument("weighted_sum_sq_diff: size mismatch");
    }
    return table(isa).weighted_sum_sq_diff(a.data(), b.data(), w.data(), a.size());
}

void accumulate_abs(std::span<double> acc, std::span<const double> v, Isa isa)
{
    if (acc.size() != v.size()) {
        throw std::invalid_argument("accumulate_abs: size mismatch");
    }
    table(isa).accumulate_abs(acc.data(), v.data(), v.size());
}

} // namespace bdecomp::kernels
