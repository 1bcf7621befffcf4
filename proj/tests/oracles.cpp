#include "oracles.hpp"

#include <bit>

namespace pavemat::testing {

std::vector<bool> downclosure(const SetFamily& bases) {
    int n = bases.ground().size();
    std::vector<bool> indep(std::size_t{1} << n, false);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        for (const ElementSet& b : bases) {
            if ((mask & ~b.bits()) == 0) {
                indep[mask] = true;
                break;
            }
        }
    }
    return indep;
}

AxiomCheck check_axioms(int n, const std::vector<bool>& indep) {
    AxiomCheck result;
    const std::uint64_t total = std::uint64_t{1} << n;

    result.i1 = indep[0];

    result.i2 = true;
    for (std::uint64_t x = 0; x < total && result.i2; ++x) {
        if (!indep[x]) continue;
        for (std::uint64_t b = x; b != 0; b &= b - 1) {
            std::uint64_t lowest = b & (~b + 1);
            if (!indep[x ^ lowest]) {
                result.i2 = false;
                break;
            }
        }
    }

    result.i3 = true;
    for (std::uint64_t u = 0; u < total && result.i3; ++u) {
        if (!indep[u]) continue;
        for (std::uint64_t v = 0; v < total; ++v) {
            if (!indep[v] || std::popcount(u) != std::popcount(v) + 1) continue;
            bool extended = false;
            for (std::uint64_t b = u & ~v; b != 0; b &= b - 1) {
                std::uint64_t lowest = b & (~b + 1);
                if (indep[v | lowest]) {
                    extended = true;
                    break;
                }
            }
            if (!extended) {
                result.i3 = false;
                break;
            }
        }
    }
    return result;
}

int bitmap_rank(int n, const std::vector<bool>& indep, std::uint64_t x) {
    int best = 0;
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t a = 0; a < total; ++a)
        if ((a & ~x) == 0 && indep[a]) best = std::max(best, std::popcount(a));
    return best;
}

}  // namespace pavemat::testing
