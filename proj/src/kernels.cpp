#include "a4cx/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace a4cx::kern {

const Backend& scalar_backend();
#if defined(__x86_64__) || defined(_M_X64)
const Backend& avx2_backend();
#endif
#if defined(__aarch64__)
const Backend& neon_backend();
#endif

namespace {

std::vector<const Backend*> build_list() {
    std::vector<const Backend*> v;
    v.push_back(&scalar_backend());
#if defined(__x86_64__) || defined(_M_X64)
    if (__builtin_cpu_supports("avx2")) v.push_back(&avx2_backend());
#endif
#if defined(__aarch64__)
    v.push_back(&neon_backend());
#endif
    return v;
}

const Backend* pick_default(const std::vector<const Backend*>& v) {
    if (const char* env = std::getenv("A4CX_SIMD")) {
        for (const Backend* b : v)
            if (std::strcmp(b->name, env) == 0) return b;
    }
    return v.back();  // best available: listed scalar first, SIMD after
}

const Backend*& current() {
    static const Backend* b = pick_default(available());
    return b;
}

}  // namespace

const std::vector<const Backend*>& available() {
    static const std::vector<const Backend*> v = build_list();
    return v;
}

const Backend& active() { return *current(); }

bool select(const char* name) {
    for (const Backend* b : available()) {
        if (std::strcmp(b->name, name) == 0) {
            current() = b;
            return true;
        }
    }
    return false;
}

}  // namespace a4cx::kern
