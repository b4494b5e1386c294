#include <cstdio>

#include "deltagame/verify.hpp"

int main() {
    const auto results = deltagame::verify::run_suite(deltagame::verify::Level::full, 42);
    for (const auto& r : results) {
        std::printf("[%2d] %s  %s (%s)\n", r.id, r.pass ? "PASS" : "FAIL",
                    r.name.c_str(), r.detail.c_str());
    }
    return deltagame::verify::all_passed(results) ? 0 : 1;
}
