#pragma once

#include <cstdint>
#include <vector>

namespace cmlt {

// All primes <= limit, ascending (sieve of Eratosthenes, odd-only).
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

} // namespace cmlt
