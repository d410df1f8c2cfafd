#include "zakfiber/parallel.hpp"

#include <cstdlib>
#include <string>

namespace zakfiber {

int max_threads() {
    static const int cached = [] {
        int n = static_cast<int>(std::thread::hardware_concurrency());
        if (n < 1) n = 1;
        if (const char* env = std::getenv("ZAKFIBER_THREADS")) {
            try {
                const int cap = std::stoi(env);
                if (cap >= 1 && cap < n) n = cap;
            } catch (...) {
                // Unparsable values leave the hardware default in place.
            }
        }
        return n;
    }();
    return cached;
}

} // namespace zakfiber
