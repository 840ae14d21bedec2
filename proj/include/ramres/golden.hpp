#ifndef RAMRES_GOLDEN_HPP
#define RAMRES_GOLDEN_HPP

#include <functional>
#include <string>
#include <vector>

namespace ramres {

// Golden worked examples. Every expected value below was either taken
// directly from the source computation or re-derived and cross-checked by
// the substitution oracle before being frozen; cases that correct a slipped
// printed value say so in their notes.
struct GoldenResult {
    bool pass = true;
    std::string detail;
    void check(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
};

struct GoldenCase {
    std::string id;
    std::string note;
    std::function<void(GoldenResult&)> run;
};

const std::vector<GoldenCase>& golden_cases();

// The ids that must exist; golden_cases() is checked against this list.
const std::vector<std::string>& golden_manifest();

struct GoldenSummary {
    int total = 0;
    int passed = 0;
    std::vector<std::pair<std::string, std::string>> failures; // id, detail
    bool ok() const { return passed == total; }
};

GoldenSummary run_golden(bool print = false);

} // namespace ramres

#endif
