#include "cmlt/primes.hpp"

namespace cmlt {

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    if (limit < 2) return out;
    out.push_back(2);
    // composite[i] describes 2i+1
    const std::uint64_t half = (limit - 1) / 2 + 1;
    std::vector<bool> composite(half, false);
    for (std::uint64_t i = 1; i < half; ++i) {
        if (composite[i]) continue;
        const std::uint64_t p = 2 * i + 1;
        out.push_back(p);
        if (p > limit / p) continue;
        for (std::uint64_t j = (p * p) / 2; j < half; j += p) composite[j] = true;
    }
    return out;
}

} // namespace cmlt
