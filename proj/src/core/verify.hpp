#ifndef PLANARCALC_VERIFY_HPP
#define PLANARCALC_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace planarcalc {

struct check_result {
    std::string name;
    bool pass = false;
    double defect = 0;  // measured quantity the check bounds
};

struct suite_result {
    std::string suite;
    std::vector<check_result> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

std::vector<std::string> verify_suite_names();

struct verify_options {
    int isometry_trials = 20;
    int isometry_level = 2;
};

/** Runs one module invariant suite with seeded sampling. */
suite_result run_verify_suite(const std::string& name, std::uint64_t seed,
                              const verify_options& opts = {});

/** Runs all suites (or the single named one when only != "";
 * "real-iso" is an alias for the realops suite). */
std::vector<suite_result> run_verify(const std::string& only, std::uint64_t seed,
                                     const verify_options& opts = {});

}  // namespace planarcalc

#endif
