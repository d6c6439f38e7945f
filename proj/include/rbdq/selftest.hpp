#pragma once

#include <string>
#include <vector>

#include "rbdq/structure_table.hpp"

namespace rbdq {

struct CheckResult {
    std::string name;
    bool mandatory = true;  // informational checks record findings about the reference data
    bool passed = false;
    std::string detail;
};

struct SelftestReport {
    std::vector<CheckResult> checks;
    [[nodiscard]] bool mandatory_passed() const;
};

/// Runs the invariant suite against `table` (normally the dual quaternion
/// table). All sampling is seeded, so reports are reproducible byte for byte.
SelftestReport run_selftest(const StructureTable& table = StructureTable::dual_quaternion());

}  // namespace rbdq
