#include "dlab/sweep.hpp"

#include <cstdlib>

namespace dlab::sweep {

long long default_jobs() {
    if (const char* env = std::getenv("DELANNOY_LAB_JOBS")) {
        char* end = nullptr;
        const long long v = std::strtoll(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? hc : 1;
}

}  // namespace dlab::sweep
