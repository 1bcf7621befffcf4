#pragma once

// Test-only independence oracles. These recheck matroid claims from first
// principles - the raw (I1)(I2)(I3) axioms over the full 2^n lattice - and
// never go through the basis-exchange path they are used to validate.

#include <cstdint>
#include <vector>

#include "core/matroid.hpp"

namespace pavemat::testing {

/// Down-closure of a basis family as a 2^n bitmap: indep[mask] is true iff
/// the subset is contained in some member. Computed by direct containment
/// scans, independently of the Matroid class.
std::vector<bool> downclosure(const SetFamily& bases);

struct AxiomCheck {
    bool i1 = false;
    bool i2 = false;
    bool i3 = false;
    bool all() const { return i1 && i2 && i3; }
};

/// Checks the three independence axioms literally on a 2^n bitmap.
AxiomCheck check_axioms(int n, const std::vector<bool>& indep);

/// Rank of a subset straight from the bitmap: the size of the largest
/// independent subset of x.
int bitmap_rank(int n, const std::vector<bool>& indep, std::uint64_t x);

}  // namespace pavemat::testing
