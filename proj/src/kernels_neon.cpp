#if defined(__aarch64__)

#include <arm_neon.h>

#include "a4cx/kernels.hpp"

namespace a4cx::kern {

namespace {

void row_xor_neon(Word* dst, const Word* src, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        vst1q_u64(dst + i, veorq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
    for (; i < n; ++i) dst[i] ^= src[i];
}

void gf4_axpy_neon(Word* da, Word* db, const Word* sa, const Word* sb,
                   bool ca, bool cb, std::size_t n) {
    const Word wa = ca ? ~Word{0} : Word{0};
    const Word wb = cb ? ~Word{0} : Word{0};
    const uint64x2_t ma = vdupq_n_u64(wa);
    const uint64x2_t mb = vdupq_n_u64(wb);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const uint64x2_t a = vld1q_u64(sa + i), b = vld1q_u64(sb + i);
        const uint64x2_t ta = veorq_u64(vandq_u64(a, ma), vandq_u64(b, mb));
        const uint64x2_t tb = veorq_u64(
            veorq_u64(vandq_u64(a, mb), vandq_u64(b, ma)), vandq_u64(b, mb));
        vst1q_u64(da + i, veorq_u64(vld1q_u64(da + i), ta));
        vst1q_u64(db + i, veorq_u64(vld1q_u64(db + i), tb));
    }
    for (; i < n; ++i) {
        const Word a = sa[i], b = sb[i];
        da[i] ^= (a & wa) ^ (b & wb);
        db[i] ^= (a & wb) ^ (b & wa) ^ (b & wb);
    }
}

}  // namespace

const Backend& neon_backend() {
    static const Backend k{"neon", &row_xor_neon, &gf4_axpy_neon};
    return k;
}

}  // namespace a4cx::kern

#endif
