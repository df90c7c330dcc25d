#include "benford/parallel.hpp"

#include <cstdlib>
#include <string>

namespace benford {

unsigned worker_cap() {
    if (const char* env = std::getenv("BENFORD_WALK_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v >= 1)
                return static_cast<unsigned>(v);
        } catch (...) {
            // unparsable value falls through to the hardware default
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

}  // namespace benford
