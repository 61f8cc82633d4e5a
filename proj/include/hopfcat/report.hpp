#ifndef HOPFCAT_REPORT_HPP
#define HOPFCAT_REPORT_HPP

#include <string>
#include <vector>

namespace hopfcat {

/// Accumulates named violations from a validator run. Empty = valid.
struct Report {
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
    void fail(std::string what) { violations.push_back(std::move(what)); }
    void require(bool cond, const std::string& what) {
        if (!cond) violations.push_back(what);
    }
    void merge(const Report& o) {
        violations.insert(violations.end(), o.violations.begin(), o.violations.end());
    }
};

} // namespace hopfcat

#endif
