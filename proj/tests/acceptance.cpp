// Runs acceptance criteria 1-10, one line each; nonzero exit if any fails.

#include <cstdio>

#include <hecke/verify.hpp>

int main()
{
    int failed = 0;
    for (const auto &check : hecke::verify::all_checks()) {
        const auto r = check();
        std::printf("%s  (%.2f s)\n", hecke::verify::format_result(r).c_str(), r.seconds);
        std::fflush(stdout);
        failed += r.passed ? 0 : 1;
    }
    std::printf("%d of 10 criteria failed\n", failed);
    return failed == 0 ? 0 : 1;
}
