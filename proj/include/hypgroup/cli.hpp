#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "hypgroup/ball.hpp"
#include "hypgroup/constants.hpp"
#include "hypgroup/marked_group.hpp"

namespace hypgroup {

using ordered_json = nlohmann::ordered_json;

struct RunConfig {
    std::uint64_t seed = 0;
    std::uint64_t mem_cap = kDefaultMemCap;  // bytes
    unsigned precision_bits = 256;
    std::string nu_spec = "ceil";
    int threads = 1;
};

// Product of whitespace-separated generator names; "e" is the identity.
Element parse_element(const MarkedGroup& g, const std::string& text);

// Constants report with one entry per formula; every entry carries a
// provenance label: "paper-exact" for pure formulas, "consistency" for
// values that depend on the pluggable census function.
ordered_json constants_report_json(const ConstantsInput& in, const NuFn& nu);

inline constexpr const char* kProvenancePaperExact = "paper-exact";
inline constexpr const char* kProvenanceConsistency = "consistency";

// Exit codes: 0 success, 1 corpus failure, 2 usage error, 3 computation error.
int run_cli(int argc, char** argv);

} // namespace hypgroup
