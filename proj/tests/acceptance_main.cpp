// Acceptance runner: one pass/fail line per criterion, nonzero exit on any
// failure. Counts and time budgets are fixed here, not configurable.
#include <cstdio>
#include <string>

#include "ramres/suites.hpp"

using namespace ramres;

namespace {

int line(int number, const std::string& name, const SuiteResult& r, double budget = 0.0) {
    bool pass = r.pass;
    std::string extra;
    if (budget > 0.0 && r.seconds >= budget) {
        pass = false;
        extra = " OVER BUDGET " + std::to_string(budget) + "s";
    }
    std::printf("[%s] criterion-%d %-58s %5d cases %7.2fs%s\n", pass ? "PASS" : "FAIL", number,
                name.c_str(), r.cases, r.seconds, extra.c_str());
    if (!r.pass && !r.detail.empty()) std::printf("       %s\n", r.detail.c_str());
    if (r.pass && !r.detail.empty()) std::printf("       note: %s\n", r.detail.c_str());
    return pass ? 0 : 1;
}

} // namespace

int main() {
    const std::uint64_t seed = 0x5eedULL;
    int bad = 0;

    bad += line(1, "paper-example golden suite (exact)", suite_golden(), 1.0);
    bad += line(2, "oracle equivalence, 200x{Q,F2,F5}x{SL2,SL3}", suite_oracle_equivalence(seed, 200), 60.0);
    bad += line(3, "homomorphism / non-triviality / two-path agreement", suite_homomorphism(seed, 200));
    bad += line(4, "structure laws, 100 instances", suite_structure_laws(seed, 100));
    bad += line(5, "integrality, 300 instances per ring", suite_integrality(seed, 300));
    bad += line(6, "jet comparison at integral indices", suite_jets());
    bad += line(7, "grassmannian suite over {Q, F5}, 100 instances", suite_grassmannian(seed, 100), 60.0);

    if (bad) std::printf("ACCEPTANCE: %d criterion(s) failed\n", bad);
    else std::printf("ACCEPTANCE: all criteria passed\n");
    return bad ? 1 : 0;
}
