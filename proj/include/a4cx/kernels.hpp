#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace a4cx::kern {

using Word = std::uint64_t;

// Row kernels for bit-packed rows over F2 and GF(4).
// GF(4) rows are stored as two planes (a,b) encoding a + b*w per bit slot.
struct Backend {
    const char* name;
    // dst ^= src
    void (*row_xor)(Word* dst, const Word* src, std::size_t nwords);
    // (da,db) += (ca + cb*w) * (sa,sb), coefficient bits ca, cb
    void (*gf4_axpy)(Word* da, Word* db, const Word* sa, const Word* sb,
                     bool ca, bool cb, std::size_t nwords);
};

// Backend selected at startup (honors A4CX_SIMD=scalar|avx2|neon).
const Backend& active();

// All backends compiled into this binary; used by equivalence tests.
const std::vector<const Backend*>& available();

// Force a backend by name; returns false if unknown/unavailable.
bool select(const char* name);

}  // namespace a4cx::kern
