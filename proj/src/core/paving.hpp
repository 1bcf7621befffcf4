#pragma once

// Construction of paving matroids from hyperplane seeds, the sparse-paving
// circuit construction, the d-partition test and the randomized greedy seed
// search with its deterministic completion pass.

#include <cstdint>
#include <optional>

#include "matroid.hpp"

namespace pavemat {

/// H': the hyperplanes of size >= r from which a rank-r paving matroid is
/// rebuilt. Valid when 2 <= r <= n, every member has size in [r, n-1] and
/// distinct members intersect in at most r-2 elements.
struct PavingSeed {
    GroundSet ground;
    int r;
    SetFamily large_hyperplanes;
};

/// A family of r-sets destined to become the r-circuits of a sparse-paving
/// matroid; distinct members must intersect in at most r-2 elements.
struct CircuitSeed {
    GroundSet ground;
    int r;
    SetFamily circuits_r;
};

struct SeedViolation {
    std::string message;
};

/// nullopt when all PavingSeed invariants hold; otherwise the first
/// violating set or pair, in canonical order.
std::optional<SeedViolation> validate_seed(const PavingSeed& seed);

std::optional<SeedViolation> validate_circuit_seed(const CircuitSeed& seed);

struct PavingConstruction {
    Matroid matroid;
    SetFamily hyperplanes;  // H' together with the uncovered (r-1)-sets
    SetFamily circuits_r;   // the r-sets covered by some member of H'
};

/// Builds the rank-r paving matroid whose large hyperplanes are the seed:
/// the r-circuits are the r-sets covered by H', the bases are the remaining
/// r-sets, and the hyperplane family is H' plus every (r-1)-set all of whose
/// r-supersets are bases. The result is re-validated through the exchange
/// oracle and the derived-structure postconditions before it is returned.
PavingConstruction construct_paving(const PavingSeed& seed);

/// Same construction without the oracle re-validation; for internally
/// generated seeds on hot enumeration paths. The acceptance suite
/// re-validates this path against brute force at small n.
PavingConstruction construct_paving_unchecked(const PavingSeed& seed);

/// Sparse-paving matroid with basis family binom(S,r) minus the given
/// r-circuits; validated the same way.
Matroid construct_sparse(const CircuitSeed& seed);

/// Every member has size >= d and every d-subset of the union lies in
/// exactly one member; families with fewer than two members fail.
bool is_d_partition(const SetFamily& f, int d);

/// Inverse of construct_paving: the hyperplanes of size >= r. Requires a
/// paving matroid of rank >= 2.
PavingSeed seed_of(const Matroid& m);

struct GreedyConfig {
    int n = 0;
    int r = 0;
    std::optional<std::uint64_t> bound;  // iteration budget; default 50*C(n,r)
    std::uint64_t rng_seed = 0;
    bool complete = true;  // run the deterministic completion pass
};

/// Randomized greedy search for a seed family: each iteration draws a size
/// m in [r, n-1] and an m-subset, and keeps it when compatible with every
/// member found so far. Deterministic for a fixed rng_seed.
PavingSeed greedy_seed(const GreedyConfig& cfg);

/// Deterministic completion: scan all candidate subsets with sizes in
/// [r, n-1] in canonical order and add every compatible one. The result is
/// maximal: nothing further can be added without breaking the intersection
/// bound.
PavingSeed complete_seed(const PavingSeed& seed);

}  // namespace pavemat
