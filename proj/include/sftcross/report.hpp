#pragma once

#include <string>
#include <vector>

namespace sftcross {

struct CheckLine {
    std::string name;
    bool pass = false;
    std::string detail;
};

using Report = std::vector<CheckLine>;

inline bool all_pass(const Report& r) {
    for (const auto& line : r)
        if (!line.pass) return false;
    return true;
}

}  // namespace sftcross
