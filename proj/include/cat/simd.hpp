#pragma once

#include <cstddef>
#include <cstdint>

namespace cat::simd {

enum class Backend { scalar, avx2 };

/// Best backend supported by the running CPU.
Backend detect();

const char* backend_name(Backend backend);

/// True when this build carries code for `backend` and the CPU supports it.
bool available(Backend backend);

struct PairSums {
    double weighted;         // sum_e coeff[e]     * counts[j_e] * counts[k_e]
    double volume_weighted;  // sum_e coeff_vol[e] * counts[j_e] * counts[k_e]
};

/// Inner-loop kernels behind the rate evaluation. Scalar entries are the
/// reference; vector variants must agree within 1e-13 reassociation error.
struct Ops {
    double (*dot)(const double* a, const double* b, std::size_t n);
    PairSums (*pair_reduce)(const double* coeff, const double* coeff_vol,
                            const std::int32_t* j, const std::int32_t* k, std::size_t n,
                            const double* counts);
};

/// Kernel table for a backend; silently falls back to scalar when the
/// requested backend is not available.
const Ops& ops(Backend backend);

}  // namespace cat::simd
