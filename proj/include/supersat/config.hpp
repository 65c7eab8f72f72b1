#pragma once

#include <cstdint>
#include <string>

namespace supersat {

struct RunConfig {
    int perm_enum_cap = 8;     // largest n with explicit S_n families
    int set_n_cap = 64;        // ground-set cap for explicit set families
    int zeta_cap = 28;         // largest n for the subset-sum transform
    long family_enum_cap = 24; // C(n,k) cap for full family enumeration
    double time_budget_s = 0;  // 0 = unlimited
    int workers = 0;           // 0 = hardware concurrency
    std::string format = "plain"; // plain | json | csv
    std::uint64_t seed = 20250809;

    bool valid() const {
        return perm_enum_cap > 0 && set_n_cap > 0 && zeta_cap > 0 && family_enum_cap > 0 &&
               (format == "plain" || format == "json" || format == "csv");
    }
};

// Environment overrides (SUPERSAT_ZETA_CAP, SUPERSAT_ENUM_CAP,
// SUPERSAT_WORKERS, SUPERSAT_TIME_BUDGET); used by CI to shrink runs.
RunConfig config_from_env(RunConfig base = {});

} // namespace supersat
