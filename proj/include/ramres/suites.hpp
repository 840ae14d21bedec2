#ifndef RAMRES_SUITES_HPP
#define RAMRES_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace ramres {

// Randomized verification suites shared by the acceptance runner and the
// CLI property-suite command. Each suite is deterministic for a fixed seed.
struct SuiteResult {
    std::string name;
    bool pass = true;
    int cases = 0;
    int failures = 0;
    double seconds = 0.0;
    std::string detail;
};

SuiteResult suite_golden();                                              // worked examples
SuiteResult suite_oracle_equivalence(std::uint64_t seed, int count);     // per ring/group cell
SuiteResult suite_homomorphism(std::uint64_t seed, int count);           // residues of the same stream
SuiteResult suite_structure_laws(std::uint64_t seed, int count);
SuiteResult suite_integrality(std::uint64_t seed, int count);
SuiteResult suite_jets();
SuiteResult suite_grassmannian(std::uint64_t seed, int count);

std::vector<SuiteResult> run_all_suites(std::uint64_t seed, int count);

} // namespace ramres

#endif
