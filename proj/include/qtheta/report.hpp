#pragma once

#include <string>
#include <vector>

namespace qtheta {

// One named verification with a pass/fail status. `residual_term_count`
// counts the nonzero terms left over by an identity check (0 on pass).
struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
    long residual_term_count = 0;
};

struct CheckList {
    std::vector<Check> checks;

    void add(std::string name, bool pass, std::string detail = "", long residual = 0) {
        checks.push_back({std::move(name), pass, std::move(detail), residual});
    }
    void merge(const CheckList& o) {
        checks.insert(checks.end(), o.checks.begin(), o.checks.end());
    }
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    long failures() const {
        long n = 0;
        for (const auto& c : checks)
            if (!c.pass) ++n;
        return n;
    }
};

} // namespace qtheta
