#pragma once

#include <map>
#include <string>

#include "cyquot/rational.hpp"

namespace cyquot {

// Expected values of every intermediate count the pipeline produces.
// Single source of truth shared by the CLI (--no-pin disables enforcement)
// and the test suite.
inline const std::map<std::string, i64>& pinned_counts() {
    static const std::map<std::string, i64> table = {
        {"kernels.total", 15},
        {"kernels.z3x2.orbits", 4},
        {"kernels.heis3.invariant", 3},

        {"tuples.heis3.K1", 0},
        {"tuples.heis3.L1", 486},
        {"tuples.heis3.L2", 1458},
        {"tuples.z3x2.K1", 8},
        {"tuples.z3x2.K2", 36},
        {"tuples.z3x2.K3", 54},
        {"tuples.z3x2.K4", 54},

        {"cocycles.heis3.L1", 54},
        {"cocycles.heis3.L2", 18},
        {"cocycles.z3x2.K1", 8},
        {"cocycles.z3x2.K2", 12},
        {"cocycles.z3x2.K3", 18},
        {"cocycles.z3x2.K4", 6},

        {"classes.heis3.L1", 6},
        {"classes.heis3.L2", 6},
        {"classes.z3x2.K1", 8},
        {"classes.z3x2.K2", 4},
        {"classes.z3x2.K3", 6},
        {"classes.z3x2.K4", 2},

        {"normalizer.heis3.complex", 1296},
        {"normalizer.heis3.real", 2592},
        {"normalizer.z3x2.ambient", 1296},

        {"orbits.heis3.L1", 1},
        {"orbits.heis3.L2", 1},
        {"orbits.z3x2.K1", 1},
        {"orbits.z3x2.K2", 1},
        {"orbits.z3x2.K3", 1},
        {"orbits.z3x2.K4", 1},

        {"report.rows", 8},
        {"singularities.z7", 7},
        {"singularities.z3", 27},
        {"singularities.z3x2", 9},
        {"singularities.heis3", 3},
    };
    return table;
}

} // namespace cyquot
