#ifndef CYCLO_VERIFY_HPP
#define CYCLO_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclo/codes.hpp"

namespace cyclo::verify {

enum class Tier { Fast, Full, Stretch };

struct Options {
    Tier tier = Tier::Fast;
    uint64_t convolution_budget = 10000; // max q for the convolution cross-check
    uint64_t codes_budget = 100000000;   // max q*length for full enumeration
    uint64_t seed = 12345;
    unsigned counts_max_n = 8; // three-way count checks run for n <= min(2^m, this)
    std::optional<std::string> instance_filter; // e.g. "p=3,s=4,m=4"
};

enum class Status { Pass, Fail, Skip };

struct Check {
    std::string name;
    Status status = Status::Pass;
    std::string detail; // reason for skip, or first counterexample on failure
};

struct InstanceReport {
    std::string key; // deterministic ordering / filtering handle
    std::string kind;
    std::string case_tag;
    std::vector<std::pair<std::string, std::string>> info; // display extras
    std::vector<Check> checks;
    double seconds = 0.0;

    bool all_passed() const;
};

struct FactorInstance {
    uint64_t p;
    unsigned s, m;
};

struct CodeInstance {
    uint64_t p;
    unsigned ell, s;
    uint64_t N;
};

InstanceReport verify_factor_instance(const FactorInstance& fi, const Options& opt);
InstanceReport verify_code_instance(const CodeInstance& ci, const Options& opt);
InstanceReport verify_semiprimitive_example(const Options& opt);
InstanceReport verify_char2_example(const Options& opt);
InstanceReport verify_subfield_example(const Options& opt);
InstanceReport verify_partitions(const Options& opt);

// The tiered instance matrix, in deterministic order.
std::vector<InstanceReport> run_verification(const Options& opt);

} // namespace cyclo::verify

#endif
