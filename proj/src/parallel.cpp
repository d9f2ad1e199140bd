#include "cmlt/parallel.hpp"

#include <omp.h>

#include <atomic>
#include <cstdlib>
#include <string>

namespace cmlt {

namespace {
std::atomic<int> g_override{0};

int from_env() {
    const char* s = std::getenv("CM_THREADS");
    if (!s) return 0;
    try {
        int n = std::stoi(s);
        return n > 0 ? n : 0;
    } catch (...) {
        return 0;
    }
}
} // namespace

int worker_count() {
    if (int n = g_override.load(); n > 0) return n;
    static const int env = from_env();
    if (env > 0) return env;
    return omp_get_max_threads();
}

void set_worker_count(int n) { g_override.store(n > 0 ? n : 0); }

} // namespace cmlt
