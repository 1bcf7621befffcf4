#include "paving.hpp"

#include <random>

namespace pavemat {

namespace {

std::optional<SeedViolation> check_family(const SetFamily& family, int n, int r, int lo, int hi,
                                          const char* what) {
    if (r < 2 || r > n)
        return SeedViolation{"rank " + std::to_string(r) + " outside 2.." + std::to_string(n)};
    for (const ElementSet& x : family) {
        if (x.card() < lo || x.card() > hi)
            return SeedViolation{std::string(what) + " {" + to_literal(x) + "} has size " +
                                 std::to_string(x.card()) + ", required " + std::to_string(lo) +
                                 ".." + std::to_string(hi)};
    }
    for (std::size_t i = 0; i < family.size(); ++i) {
        for (std::size_t j = i + 1; j < family.size(); ++j) {
            int isz = intersection_size(family[i], family[j]);
            if (isz > r - 2)
                return SeedViolation{"pair {" + to_literal(family[i]) + "} and {" +
                                     to_literal(family[j]) + "} intersect in " +
                                     std::to_string(isz) + " > r-2 = " + std::to_string(r - 2)};
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<SeedViolation> validate_seed(const PavingSeed& seed) {
    int n = seed.ground.size();
    // r = n is legal only for the empty seed: the size window [r, n-1] is empty.
    return check_family(seed.large_hyperplanes, n, seed.r, seed.r, n - 1, "seed set");
}

std::optional<SeedViolation> validate_circuit_seed(const CircuitSeed& seed) {
    int n = seed.ground.size();
    return check_family(seed.circuits_r, n, seed.r, seed.r, seed.r, "circuit");
}

namespace {

PavingConstruction build_paving(const PavingSeed& seed) {
    if (auto v = validate_seed(seed)) throw std::domain_error("invalid seed: " + v->message);
    GroundSet g = seed.ground;
    int r = seed.r;

    SetFamily circuits_r(g);
    SetFamily bases(g);
    for (const ElementSet& a : k_subsets(g, r)) {
        bool covered = false;
        for (const ElementSet& x : seed.large_hyperplanes) {
            if (a.subset_of(x)) {
                covered = true;
                break;
            }
        }
        if (covered)
            circuits_r.insert(a);
        else
            bases.insert(a);
    }
    if (bases.empty()) throw std::domain_error("seed admits no rank-" + std::to_string(r) +
                                               " matroid: every r-set is covered");

    SetFamily hyperplanes(g);
    for (const ElementSet& x : seed.large_hyperplanes) hyperplanes.insert(x);
    for (const ElementSet& a : k_subsets(g, r - 1)) {
        bool always_basis = true;
        for (int e = 1; e <= g.size() && always_basis; ++e) {
            if (a.contains(e)) continue;
            if (circuits_r.contains(a.with(e))) always_basis = false;
        }
        if (always_basis) hyperplanes.insert(a);
    }

    Matroid m = Matroid::from_bases_unchecked(g, std::move(bases));
    return PavingConstruction{std::move(m), std::move(hyperplanes), std::move(circuits_r)};
}

}  // namespace

PavingConstruction construct_paving(const PavingSeed& seed) {
    PavingConstruction built = build_paving(seed);
    // The construction is a claim; check it through the oracle and the
    // derived structure.
    const Matroid& m = Matroid::from_bases(built.matroid.ground(), built.matroid.bases());
    if (m.rank() != seed.r) throw std::logic_error("constructed matroid has wrong rank");
    if (!m.is_paving()) throw std::logic_error("constructed matroid is not paving");
    if (!(m.hyperplanes() == built.hyperplanes))
        throw std::logic_error("constructed hyperplane family mismatch");
    if (!(m.circuits_of_size(seed.r) == built.circuits_r))
        throw std::logic_error("constructed r-circuit family mismatch");
    return built;
}

PavingConstruction construct_paving_unchecked(const PavingSeed& seed) {
    return build_paving(seed);
}

Matroid construct_sparse(const CircuitSeed& seed) {
    if (auto v = validate_circuit_seed(seed))
        throw std::domain_error("invalid circuit seed: " + v->message);
    GroundSet g = seed.ground;
    int r = seed.r;

    SetFamily bases(g);
    for (const ElementSet& a : k_subsets(g, r))
        if (!seed.circuits_r.contains(a)) bases.insert(a);
    if (bases.empty()) throw std::domain_error("circuit seed excludes all bases");

    Matroid m = Matroid::from_bases(g, bases);
    if (m.rank() != r) throw std::logic_error("constructed matroid has wrong rank");
    if (!m.is_sparse_paving()) throw std::logic_error("constructed matroid is not sparse-paving");
    if (!(m.circuits_of_size(r) == seed.circuits_r))
        throw std::logic_error("constructed r-circuit family mismatch");
    return m;
}

bool is_d_partition(const SetFamily& f, int d) {
    if (d < 1) throw std::invalid_argument("d-partition requires d >= 1");
    if (f.size() < 2) return false;
    ElementSet support = ElementSet::empty(f.ground());
    for (const ElementSet& x : f) {
        if (x.card() < d) return false;
        support = support | x;
    }
    // every d-subset of the support lies in exactly one member
    for (const ElementSet& a : k_subsets(f.ground(), d)) {
        if (!a.subset_of(support)) continue;
        int covers = 0;
        for (const ElementSet& x : f)
            if (a.subset_of(x)) ++covers;
        if (covers != 1) return false;
    }
    return true;
}

PavingSeed seed_of(const Matroid& m) {
    if (m.rank() < 2) throw std::domain_error("seed extraction requires rank >= 2");
    if (!m.is_paving()) throw std::domain_error("seed extraction requires a paving matroid");
    SetFamily large(m.ground());
    for (const ElementSet& h : m.hyperplanes())
        if (h.card() >= m.rank()) large.insert(h);
    return PavingSeed{m.ground(), m.rank(), std::move(large)};
}

namespace {

bool compatible(const SetFamily& family, const ElementSet& candidate, int r) {
    for (const ElementSet& x : family)
        if (intersection_size(x, candidate) > r - 2) return false;
    return true;
}

}  // namespace

PavingSeed complete_seed(const PavingSeed& seed) {
    if (auto v = validate_seed(seed)) throw std::domain_error("invalid seed: " + v->message);
    GroundSet g = seed.ground;
    SetFamily family = seed.large_hyperplanes;
    for (int size = seed.r; size <= g.size() - 1; ++size) {
        for (const ElementSet& candidate : k_subsets(g, size)) {
            if (family.contains(candidate)) continue;
            if (compatible(family, candidate, seed.r)) family.insert(candidate);
        }
    }
    return PavingSeed{g, seed.r, std::move(family)};
}

PavingSeed greedy_seed(const GreedyConfig& cfg) {
    GroundSet g(cfg.n);
    if (cfg.r < 2 || cfg.r > cfg.n - 1)
        throw std::invalid_argument("greedy seed requires 2 <= r <= n-1");
    std::uint64_t bound = cfg.bound ? *cfg.bound : 50 * binomial(cfg.n, cfg.r);

    std::mt19937_64 rng(cfg.rng_seed);
    std::vector<int> pool(static_cast<std::size_t>(cfg.n));
    SetFamily family(g);

    for (std::uint64_t k = 0; k < bound; ++k) {
        int m = cfg.r + static_cast<int>(rng() % static_cast<std::uint64_t>(cfg.n - cfg.r));
        // uniform m-subset by partial Fisher-Yates
        for (int i = 0; i < cfg.n; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
        ElementSet candidate = ElementSet::empty(g);
        for (int i = 0; i < m; ++i) {
            std::size_t j = static_cast<std::size_t>(i) +
                            static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(cfg.n - i));
            std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
            candidate = candidate.with(pool[static_cast<std::size_t>(i)]);
        }
        // the pairwise bound applies to distinct sets only; repeats are skipped
        if (family.contains(candidate)) continue;
        if (compatible(family, candidate, cfg.r)) family.insert(candidate);
    }

    PavingSeed seed{g, cfg.r, std::move(family)};
    if (cfg.complete) seed = complete_seed(seed);
    return seed;
}

}  // namespace pavemat
