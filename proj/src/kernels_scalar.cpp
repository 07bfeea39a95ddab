#include "a4cx/kernels.hpp"

namespace a4cx::kern {

namespace {

void row_xor_scalar(Word* dst, const Word* src, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] ^= src[i];
}

// (a + b*w) * (ca + cb*w) = (a*ca + b*cb) + (a*cb + b*ca + b*cb)*w
void gf4_axpy_scalar(Word* da, Word* db, const Word* sa, const Word* sb,
                     bool ca, bool cb, std::size_t n) {
    const Word ma = ca ? ~Word{0} : Word{0};
    const Word mb = cb ? ~Word{0} : Word{0};
    for (std::size_t i = 0; i < n; ++i) {
        const Word a = sa[i], b = sb[i];
        da[i] ^= (a & ma) ^ (b & mb);
        db[i] ^= (a & mb) ^ (b & ma) ^ (b & mb);
    }
}

}  // namespace

const Backend& scalar_backend() {
    static const Backend k{"scalar", &row_xor_scalar, &gf4_axpy_scalar};
    return k;
}

}  // namespace a4cx::kern
