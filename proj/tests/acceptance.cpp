// Acceptance runner: executes every verification check A1..A14 over the
// default configuration matrix and prints one line per criterion and
// configuration, plus a per-criterion summary. Exit code 0 iff everything
// passes.

#include <algorithm>
#include <cstdio>
#include <map>
#include <vector>

#include "dmf/verify.hpp"

int main() {
    using namespace dmf;
    const std::vector<SuiteConfig> matrix = acceptance_matrix();

    struct Agg {
        int pass = 0;
        int total = 0;
        std::string name;
    };
    std::map<std::string, Agg> agg;
    bool all = true;
    double total_ms = 0;

    for (const SuiteConfig& cfg : matrix) {
        const SuiteResult res = run_suite("all", cfg);
        total_ms += res.wall_ms;
        for (const auto& c : res.checks) {
            std::printf("%-4s [%-18s] %s  %s\n", c.id.c_str(), cfg.label().c_str(),
                        c.pass ? "PASS" : "FAIL", c.name.c_str());
            std::fflush(stdout);
            if (!c.pass) {
                std::printf("     details: %s\n", c.details.dump().c_str());
                all = false;
            }
            auto& a = agg[c.id];
            a.total += 1;
            a.pass += c.pass ? 1 : 0;
            a.name = c.name;
        }
    }

    std::vector<std::pair<std::string, Agg>> ordered(agg.begin(), agg.end());
    std::sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
        return std::stoi(x.first.substr(1)) < std::stoi(y.first.substr(1));
    });

    std::printf("\ncriterion summary:\n");
    for (const auto& [id, a] : ordered)
        std::printf("%-4s %s (%d/%d configurations)  %s\n", id.c_str(),
                    a.pass == a.total ? "PASS" : "FAIL", a.pass, a.total, a.name.c_str());

    std::printf("\nacceptance: %s (%.1f s total)\n", all ? "PASS" : "FAIL", total_ms / 1000.0);
    return all ? 0 : 1;
}
