#pragma once

#include "fsop/coeffs.hpp"

#include <cmath>
#include <string>

namespace testing {

// One coefficient table per test binary; building it takes a few milliseconds.
inline const fsop::FreudTable& table() {
    static const fsop::FreudTable t = fsop::build_freud_table(210, 40);
    return t;
}

inline long double rel_err(long double got, long double want) {
    const long double s = std::fabs(want);
    return s > 0 ? std::fabs(got - want) / s : std::fabs(got);
}

inline std::string data_file(const std::string& name) { return std::string(FSOP_DATA_DIR) + "/" + name; }

}  // namespace testing
