// One line per criterion: PASS/FAIL, what was checked, the numbers, the time.
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "criteria.hpp"

int main(int argc, char** argv) {
    CLI::App app{"gravheun acceptance suite"};
    std::vector<int> ids;
    std::uint64_t seed = 1;
    app.add_option("--criterion", ids, "criterion id(s), default all")->check(CLI::Range(1, gravheun::acceptance::kCriterionCount));
    app.add_option("--seed", seed, "RNG seed for the randomized criteria");
    CLI11_PARSE(app, argc, argv);
    if (ids.empty())
        for (int i = 1; i <= gravheun::acceptance::kCriterionCount; ++i) ids.push_back(i);

    int failed = 0;
    for (int id : ids) {
        gravheun::acceptance::CriterionResult r;
        try {
            r = gravheun::acceptance::run_criterion(id, seed);
        } catch (const std::exception& e) {
            std::printf("criterion %d %-18s FAIL  exception: %s\n", id, gravheun::acceptance::criterion_name(id).c_str(),
                        e.what());
            ++failed;
            continue;
        }
        std::string verdict = r.passed() ? "PASS" : "FAIL";
        std::string timing = std::to_string(r.seconds).substr(0, 6) + " s / limit " +
                             std::to_string(static_cast<int>(r.time_limit)) + " s";
        if (!r.within_time()) timing += " (too slow)";
        std::printf("criterion %d %-18s %s  %s | %s | %s\n", id, r.name.c_str(), verdict.c_str(), r.title.c_str(),
                    r.detail.c_str(), timing.c_str());
        if (!r.passed()) ++failed;
    }
    std::fflush(stdout);
    return failed == 0 ? 0 : 1;
}
