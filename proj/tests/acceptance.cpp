// Acceptance gate: runs the full verification matrix and prints one
// pass/fail line per criterion. Usage: acceptance [scope] [seed].

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>

#include "zakfiber/verify.hpp"

int main(int argc, char** argv) {
    const std::string scope = argc > 1 ? argv[1] : "all";
    const std::uint64_t seed = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 1;
    try {
        const auto results = zakfiber::verify::run_acceptance(scope, seed);
        const bool ok = zakfiber::verify::print_acceptance(results, std::cout);
        return ok ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "acceptance run failed to execute: " << e.what() << "\n";
        return 2;
    }
}
