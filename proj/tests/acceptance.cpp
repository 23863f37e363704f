// Runs every acceptance check at full scale and prints one PASS/FAIL line each.

#include <cstdio>
#include <cstdlib>
#include <thread>

#include "pdskit/verify.hpp"

int main(int argc, char** argv) {
    using namespace pdskit::verify;
    const Level level = argc > 1 ? parse_level(argv[1]) : Level::Full;
    const unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    int failed = 0;
    for (int id : check_ids(level)) {
        const auto r = run_check(id, level, jobs);
        std::printf("%s\n", format_line(r).c_str());
        std::fflush(stdout);
        failed += !r.passed;
    }
    std::printf("%d check(s) failed\n", failed);
    return failed ? EXIT_FAILURE : EXIT_SUCCESS;
}
