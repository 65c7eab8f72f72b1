#include "supersat/config.hpp"

#include <cstdlib>

namespace supersat {

RunConfig config_from_env(RunConfig base) {
    if (const char* v = std::getenv("SUPERSAT_ZETA_CAP")) base.zeta_cap = std::atoi(v);
    if (const char* v = std::getenv("SUPERSAT_ENUM_CAP")) base.family_enum_cap = std::atol(v);
    if (const char* v = std::getenv("SUPERSAT_WORKERS")) base.workers = std::atoi(v);
    if (const char* v = std::getenv("SUPERSAT_TIME_BUDGET")) base.time_budget_s = std::atof(v);
    return base;
}

} // namespace supersat
