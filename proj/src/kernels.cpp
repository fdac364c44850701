#include "tpk/kernels.hpp"

#include <bit>
#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

namespace tpk::kernels {

namespace {

uint64_t popcount_scalar(const uint64_t* a, size_t n) {
    uint64_t c = 0;
    for (size_t i = 0; i < n; ++i) c += std::popcount(a[i]);
    return c;
}

uint64_t and_popcount_scalar(const uint64_t* a, const uint64_t* b, size_t n) {
    uint64_t c = 0;
    for (size_t i = 0; i < n; ++i) c += std::popcount(a[i] & b[i]);
    return c;
}

void and_into_scalar(uint64_t* dst, const uint64_t* a, const uint64_t* b, size_t n) {
    for (size_t i = 0; i < n; ++i) dst[i] = a[i] & b[i];
}

void or_into_scalar(uint64_t* dst, const uint64_t* a, const uint64_t* b, size_t n) {
    for (size_t i = 0; i < n; ++i) dst[i] = a[i] | b[i];
}

void andnot_into_scalar(uint64_t* dst, const uint64_t* a, const uint64_t* b, size_t n) {
    for (size_t i = 0; i < n; ++i) dst[i] = a[i] & ~b[i];
}

bool is_zero_scalar(const uint64_t* a, size_t n) {
    for (size_t i = 0; i < n; ++i)
        if (a[i]) return false;
    return true;
}

bool is_subset_scalar(const uint64_t* a, const uint64_t* b, size_t n) {
    for (size_t i = 0; i < n; ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

bool intersects_scalar(const uint64_t* a, const uint64_t* b, size_t n) {
    for (size_t i = 0; i < n; ++i)
        if (a[i] & b[i]) return true;
    return false;
}

bool equals_scalar(const uint64_t* a, const uint64_t* b, size_t n) {
    return std::memcmp(a, b, n * sizeof(uint64_t)) == 0;
}

constexpr Ops kScalarOps{
    popcount_scalar, and_popcount_scalar, and_into_scalar,  or_into_scalar,
    andnot_into_scalar, is_zero_scalar,   is_subset_scalar, intersects_scalar,
    equals_scalar,   "scalar",
};

const Ops* g_active = nullptr;

const Ops* select_ops() {
    if (const char* env = std::getenv("TPK_KERNELS")) {
        std::string v(env);
        if (v == "scalar") return &kScalarOps;
        if (v == "avx2") {
            if (const Ops* ops = avx2_ops()) return ops;
            throw std::runtime_error("TPK_KERNELS=avx2 requested but AVX2 is unavailable");
        }
        if (!v.empty() && v != "auto")
            throw std::runtime_error("unknown TPK_KERNELS value: " + v);
    }
    if (const Ops* ops = avx2_ops()) return ops;
    return &kScalarOps;
}

}  // namespace

const Ops& scalar_ops() { return kScalarOps; }

const Ops& active() {
    if (!g_active) g_active = select_ops();
    return *g_active;
}

Backend active_backend() {
    return &active() == &kScalarOps ? Backend::Scalar : Backend::Avx2;
}

void force_backend(Backend b) {
    switch (b) {
        case Backend::Auto:
            g_active = select_ops();
            break;
        case Backend::Scalar:
            g_active = &kScalarOps;
            break;
        case Backend::Avx2: {
            const Ops* ops = avx2_ops();
            if (!ops) throw std::runtime_error("AVX2 kernels unavailable on this CPU");
            g_active = ops;
            break;
        }
    }
}

}  // namespace tpk::kernels
