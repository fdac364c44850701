#ifndef TPK_KERNELS_HPP
#define TPK_KERNELS_HPP

#include <cstddef>
#include <cstdint>

// Word-block kernels behind every bitset operation in the library.
// Scalar implementations are the reference; the AVX2 variants are selected
// at runtime when the CPU supports them and must be bit-identical to the
// scalar ones (equivalence-tested in tests/test_kernels.cpp).
//
// All buffers are little-endian arrays of 64-bit words; bit i of the set
// lives at word i/64, bit i%64. Callers keep bits past the logical size
// zeroed, so popcounts never need masking here.

namespace tpk::kernels {

struct Ops {
    uint64_t (*popcount)(const uint64_t* a, size_t n);
    uint64_t (*and_popcount)(const uint64_t* a, const uint64_t* b, size_t n);
    void (*and_into)(uint64_t* dst, const uint64_t* a, const uint64_t* b, size_t n);
    void (*or_into)(uint64_t* dst, const uint64_t* a, const uint64_t* b, size_t n);
    void (*andnot_into)(uint64_t* dst, const uint64_t* a, const uint64_t* b, size_t n);
    bool (*is_zero)(const uint64_t* a, size_t n);
    bool (*is_subset)(const uint64_t* a, const uint64_t* b, size_t n);
    bool (*intersects)(const uint64_t* a, const uint64_t* b, size_t n);
    bool (*equals)(const uint64_t* a, const uint64_t* b, size_t n);
    const char* name;
};

enum class Backend { Auto, Scalar, Avx2 };

// Active kernel table. Chosen once: TPK_KERNELS=scalar|avx2 overrides the
// CPU probe; force_backend() overrides both (tests use it to run each
// suite against both implementations).
const Ops& active();
Backend active_backend();
void force_backend(Backend b);

bool cpu_has_avx2();

const Ops& scalar_ops();
const Ops* avx2_ops();  // nullptr when not compiled in or CPU lacks AVX2

}  // namespace tpk::kernels

#endif
