#include <cstdint>
#include <cstdlib>
#include <iostream>

#include "efl/acceptance.hpp"

int main(int argc, char** argv) {
    const std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 20240611;
    int failed = 0;
    for (const auto& crit : efl::acceptance_suite()) {
        const efl::CriterionResult r = crit.run(seed);
        std::cout << r.line() << std::endl;
        if (!r.passed) ++failed;
    }
    std::cout << (failed == 0 ? "all acceptance criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
    return failed == 0 ? 0 : 1;
}
