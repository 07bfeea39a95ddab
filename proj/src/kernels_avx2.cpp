#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "a4cx/kernels.hpp"

namespace a4cx::kern {

namespace {

inline __m256i load(const Word* p) {
    return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}
inline void store(Word* p, __m256i v) {
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

void row_xor_avx2(Word* dst, const Word* src, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        store(dst + i, _mm256_xor_si256(load(dst + i), load(src + i)));
    for (; i < n; ++i) dst[i] ^= src[i];
}

void gf4_axpy_avx2(Word* da, Word* db, const Word* sa, const Word* sb,
                   bool ca, bool cb, std::size_t n) {
    const Word wa = ca ? ~Word{0} : Word{0};
    const Word wb = cb ? ~Word{0} : Word{0};
    const __m256i ma = _mm256_set1_epi64x(static_cast<long long>(wa));
    const __m256i mb = _mm256_set1_epi64x(static_cast<long long>(wb));
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256i a = load(sa + i), b = load(sb + i);
        const __m256i ta = _mm256_xor_si256(_mm256_and_si256(a, ma),
                                            _mm256_and_si256(b, mb));
        const __m256i tb = _mm256_xor_si256(
            _mm256_xor_si256(_mm256_and_si256(a, mb), _mm256_and_si256(b, ma)),
            _mm256_and_si256(b, mb));
        store(da + i, _mm256_xor_si256(load(da + i), ta));
        store(db + i, _mm256_xor_si256(load(db + i), tb));
    }
    for (; i < n; ++i) {
        const Word a = sa[i], b = sb[i];
        da[i] ^= (a & wa) ^ (b & wb);
        db[i] ^= (a & wb) ^ (b & wa) ^ (b & wb);
    }
}

}  // namespace

const Backend& avx2_backend() {
    static const Backend k{"avx2", &row_xor_avx2, &gf4_axpy_avx2};
    return k;
}

}  // namespace a4cx::kern

#endif
