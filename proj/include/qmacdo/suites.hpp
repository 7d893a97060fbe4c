#ifndef QMACDO_SUITES_HPP
#define QMACDO_SUITES_HPP

#include "kernels.hpp"

namespace qmacdo {

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Run parameters for one verification suite; every bound is inclusive.
// q0,t0 are consulted only when qt_given is set; otherwise a seeded
// non-special rational pair is drawn unless symbolic mode is requested.
struct SuiteConfig {
    std::string suite;
    int n = 1, m = 1;
    int N = 1, M = 0;
    int K = 1, L = 1;
    int rmax = 2;
    int order = 3;
    int deg = 2;
    Partition lam;
    bool lam_given = false;
    bool symbolic = false;
    QQ q0 = QQ(0), t0 = QQ(0);
    bool qt_given = false;
    unsigned long long seed = 1;
};

const std::vector<std::string>& suite_names();

// throws ConfigError on an unknown suite, a negative bound, or special
// evaluation parameters
void validate(const SuiteConfig& cfg);

// one sentence naming the identity family the suite checks
std::string suite_header(const std::string& suite);

std::vector<CheckRecord> run_suite(const SuiteConfig& cfg);

} // namespace qmacdo

#endif
