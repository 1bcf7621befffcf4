#include "enumerate.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <set>
#include <thread>

namespace pavemat {

namespace {

constexpr int kSeedCapN = 8;
constexpr int kBruteForceCapChoose = 22;
constexpr int kCanonicalCapN = 7;

void backtrack_seeds(GroundSet g, int r, const std::vector<ElementSet>& candidates,
                     std::size_t next, std::vector<ElementSet>& stack,
                     const std::function<void(const PavingSeed&)>& emit) {
    // stack is already in canonical order: candidates are visited in
    // canonical order and indices only grow along a branch
    SetFamily family(g);
    for (const ElementSet& x : stack) family.insert(x);
    emit(PavingSeed{g, r, std::move(family)});

    for (std::size_t i = next; i < candidates.size(); ++i) {
        const ElementSet& c = candidates[i];
        bool ok = true;
        for (const ElementSet& x : stack) {
            if (intersection_size(x, c) > r - 2) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        stack.push_back(c);
        backtrack_seeds(g, r, candidates, i + 1, stack, emit);
        stack.pop_back();
    }
}

}  // namespace

void enumerate_seeds(GroundSet g, int r, const std::function<void(const PavingSeed&)>& emit) {
    if (g.size() > kSeedCapN)
        throw CapExceeded("seed enumeration capped at n <= " + std::to_string(kSeedCapN) +
                          ", got n = " + std::to_string(g.size()));
    if (r < 2 || r > g.size())
        throw std::invalid_argument("seed enumeration requires 2 <= r <= n");
    std::vector<ElementSet> candidates;
    for (int size = r; size <= g.size() - 1; ++size)
        for (const ElementSet& s : k_subsets(g, size)) candidates.push_back(s);
    std::vector<ElementSet> stack;
    backtrack_seeds(g, r, candidates, 0, stack, emit);
}

void enumerate_paving(GroundSet g, int r,
                      const std::function<void(const PavingConstruction&)>& emit) {
    // trusted construction on the hot path; the acceptance suite re-derives
    // this stream from brute force at small n
    enumerate_seeds(g, r,
                    [&](const PavingSeed& seed) { emit(construct_paving_unchecked(seed)); });
}

namespace {

// Precomputed index-level exchange tables over the fixed list of r-sets.
// For r-set indices i != j and each x in B_i\B_j, targets holds the mask of
// indices {(B_i\{x}) ∪ {y} : y in B_j\B_i}; a family mask F satisfies the
// exchange axiom iff every applicable target mask meets F.
struct ExchangeTables {
    int count = 0;
    std::vector<std::vector<std::uint32_t>> per_pair;  // [i*count+j] -> masks per x

    explicit ExchangeTables(const std::vector<ElementSet>& r_sets) {
        count = static_cast<int>(r_sets.size());
        per_pair.resize(static_cast<std::size_t>(count) * static_cast<std::size_t>(count));
        std::vector<std::pair<std::uint64_t, int>> index;
        index.reserve(r_sets.size());
        for (int i = 0; i < count; ++i)
            index.emplace_back(r_sets[static_cast<std::size_t>(i)].bits(), i);
        std::sort(index.begin(), index.end());
        auto index_of = [&](std::uint64_t bits) {
            auto it = std::lower_bound(index.begin(), index.end(),
                                       std::make_pair(bits, 0));
            return it->second;
        };
        for (int i = 0; i < count; ++i) {
            for (int j = 0; j < count; ++j) {
                if (i == j) continue;
                const ElementSet& b1 = r_sets[static_cast<std::size_t>(i)];
                const ElementSet& b2 = r_sets[static_cast<std::size_t>(j)];
                ElementSet only1 = b1 - b2;
                ElementSet only2 = b2 - b1;
                if (only1.is_empty()) continue;
                auto& masks = per_pair[static_cast<std::size_t>(i * count + j)];
                for (int x : only1.elements()) {
                    std::uint32_t target = 0;
                    ElementSet stem = b1.without(x);
                    for (int y : only2.elements())
                        target |= std::uint32_t{1} << index_of(stem.with(y).bits());
                    masks.push_back(target);
                }
            }
        }
    }

    bool exchange_ok(std::uint32_t family) const {
        for (std::uint32_t fi = family; fi != 0; fi &= fi - 1) {
            int i = std::countr_zero(fi);
            for (std::uint32_t fj = family; fj != 0; fj &= fj - 1) {
                int j = std::countr_zero(fj);
                if (i == j) continue;
                for (std::uint32_t target : per_pair[static_cast<std::size_t>(i * count + j)])
                    if ((target & family) == 0) return false;
            }
        }
        return true;
    }
};

// Masks of r-set indices containing each singleton / pair, for the
// simplicity filters.
struct SimplicityMasks {
    std::vector<std::uint32_t> singleton;             // [e-1]
    std::vector<std::uint32_t> pair;                  // flattened upper triangle
    int n = 0;

    SimplicityMasks(GroundSet g, const std::vector<ElementSet>& r_sets) : n(g.size()) {
        singleton.assign(static_cast<std::size_t>(n), 0);
        pair.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
        for (int idx = 0; idx < static_cast<int>(r_sets.size()); ++idx) {
            const ElementSet& b = r_sets[static_cast<std::size_t>(idx)];
            std::vector<int> elems = b.elements();
            for (std::size_t a = 0; a < elems.size(); ++a) {
                singleton[static_cast<std::size_t>(elems[a] - 1)] |= std::uint32_t{1} << idx;
                for (std::size_t c = a + 1; c < elems.size(); ++c)
                    pair[static_cast<std::size_t>((elems[a] - 1) * n + (elems[c] - 1))] |=
                        std::uint32_t{1} << idx;
            }
        }
    }

    bool passes(std::uint32_t family, SimplicityFilter f) const {
        if (f == SimplicityFilter::none) return true;
        for (int e = 0; e < n; ++e)
            if ((singleton[static_cast<std::size_t>(e)] & family) == 0) return false;
        if (f == SimplicityFilter::paper) return true;
        for (int a = 0; a < n; ++a)
            for (int c = a + 1; c < n; ++c)
                if ((pair[static_cast<std::size_t>(a * n + c)] & family) == 0) return false;
        return true;
    }
};

Matroid family_from_mask(GroundSet g, const std::vector<ElementSet>& r_sets,
                         std::uint32_t mask) {
    SetFamily bases(g);
    for (int i = 0; i < static_cast<int>(r_sets.size()); ++i)
        if ((mask >> i) & 1) bases.insert(r_sets[static_cast<std::size_t>(i)]);
    return Matroid::from_bases_unchecked(g, bases);
}

}  // namespace

int max_workers() {
    if (const char* env = std::getenv("MATROID_MAX_WORKERS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void enumerate_all_matroids(GroundSet g, int r, SimplicityFilter simplicity,
                            const std::function<void(const Matroid&)>& emit) {
    if (r < 0 || r > g.size())
        throw std::invalid_argument("rank outside 0..n");
    std::uint64_t k = binomial(g.size(), r);
    if (k > kBruteForceCapChoose)
        throw CapExceeded("brute-force enumeration capped at C(n,r) <= " +
                          std::to_string(kBruteForceCapChoose) + ", got C(" +
                          std::to_string(g.size()) + "," + std::to_string(r) + ") = " +
                          std::to_string(k));

    std::vector<ElementSet> r_sets = k_subsets_vec(g, r);
    ExchangeTables tables(r_sets);
    SimplicityMasks simple(g, r_sets);
    const std::uint64_t total = std::uint64_t{1} << k;

    auto survives = [&](std::uint32_t mask) {
        return tables.exchange_ok(mask) && simple.passes(mask, simplicity);
    };

    int workers = std::min<int>(max_workers(), 16);
    if (workers <= 1 || total < 4096) {
        for (std::uint64_t mask = 1; mask < total; ++mask)
            if (survives(static_cast<std::uint32_t>(mask)))
                emit(family_from_mask(g, r_sets, static_cast<std::uint32_t>(mask)));
        return;
    }

    // Contiguous chunks, survivors merged back in ascending mask order.
    std::vector<std::vector<std::uint32_t>> found(static_cast<std::size_t>(workers));
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(workers));
    const std::uint64_t chunk = (total + static_cast<std::uint64_t>(workers) - 1) /
                                static_cast<std::uint64_t>(workers);
    for (int w = 0; w < workers; ++w) {
        threads.emplace_back([&, w] {
            std::uint64_t lo = std::max<std::uint64_t>(1, chunk * static_cast<std::uint64_t>(w));
            std::uint64_t hi = std::min(total, chunk * static_cast<std::uint64_t>(w + 1));
            for (std::uint64_t mask = lo; mask < hi; ++mask)
                if (survives(static_cast<std::uint32_t>(mask)))
                    found[static_cast<std::size_t>(w)].push_back(
                        static_cast<std::uint32_t>(mask));
        });
    }
    for (std::thread& t : threads) t.join();
    for (const auto& chunk_masks : found)
        for (std::uint32_t mask : chunk_masks) emit(family_from_mask(g, r_sets, mask));
}

namespace {

// lexicographic order on two equal-cardinality bit sets
bool mask_lex_less(std::uint64_t a, std::uint64_t b) {
    if (a == b) return false;
    std::uint64_t diff = a ^ b;
    return (a & (diff & (~diff + 1))) != 0;
}

}  // namespace

SetFamily canonical_form(const Matroid& m) {
    int n = m.size();
    if (n > kCanonicalCapN)
        throw CapExceeded("canonical form capped at n <= " + std::to_string(kCanonicalCapN) +
                          ", got n = " + std::to_string(n));
    std::vector<std::uint64_t> original;
    original.reserve(m.bases().size());
    for (const ElementSet& b : m.bases()) original.push_back(b.bits());

    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;

    std::vector<std::uint64_t> best, relabeled;
    bool have_best = false;
    do {
        relabeled.clear();
        for (std::uint64_t bits : original) {
            std::uint64_t out = 0;
            for (std::uint64_t b = bits; b != 0; b &= b - 1)
                out |= std::uint64_t{1} << perm[static_cast<std::size_t>(std::countr_zero(b))];
            relabeled.push_back(out);
        }
        std::sort(relabeled.begin(), relabeled.end(), mask_lex_less);
        if (!have_best || std::lexicographical_compare(relabeled.begin(), relabeled.end(),
                                                       best.begin(), best.end(),
                                                       mask_lex_less)) {
            best = relabeled;
            have_best = true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    SetFamily out(m.ground());
    for (std::uint64_t bits : best) out.insert(ElementSet(m.ground(), bits));
    return out;
}

CountRecord count_matroids(const EnumerationQuery& query) {
    auto start = std::chrono::steady_clock::now();
    GroundSet g(query.n);
    std::uint64_t count = 0;
    std::set<std::vector<std::uint64_t>> classes;

    auto tally = [&](const Matroid& m) {
        if (query.simplicity == SimplicityFilter::paper &&
            !m.is_simple(Matroid::Simplicity::paper))
            return;
        if (query.simplicity == SimplicityFilter::standard &&
            !m.is_simple(Matroid::Simplicity::standard))
            return;
        if (query.mode == CountMode::labeled) {
            ++count;
            return;
        }
        std::vector<std::uint64_t> form;
        for (const ElementSet& b : canonical_form(m)) form.push_back(b.bits());
        classes.insert(std::move(form));
    };

    switch (query.cls) {
        case MatroidClass::paving:
            enumerate_paving(g, query.r,
                             [&](const PavingConstruction& c) { tally(c.matroid); });
            break;
        case MatroidClass::sparse_paving:
            enumerate_paving(g, query.r, [&](const PavingConstruction& c) {
                if (c.matroid.is_sparse_paving()) tally(c.matroid);
            });
            break;
        case MatroidClass::all_matroids:
            enumerate_all_matroids(g, query.r, SimplicityFilter::none, tally);
            break;
    }

    CountRecord record;
    record.query = query;
    record.count = query.mode == CountMode::labeled ? count : classes.size();
    record.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return record;
}

BoundCheck verify_counting_inequality(int n, int r, SimplicityFilter convention) {
    if (r < 2 || r > n)
        throw std::invalid_argument("counting inequality requires 2 <= r <= n");
    BoundCheck check;
    check.n = n;
    check.r = r;
    check.convention = convention;

    GroundSet g(n);
    enumerate_all_matroids(g, r, convention,
                           [&](const Matroid&) { ++check.matroid_count; });

    unsigned __int128 product = 1;
    for (int t = r; t <= n - 1; ++t) {
        std::uint64_t sparse = 0;
        enumerate_paving(g, t, [&](const PavingConstruction& c) {
            if (c.matroid.is_sparse_paving()) ++sparse;
        });
        check.sparse_counts.push_back(sparse);
        product *= sparse;
    }
    check.product = static_cast<std::uint64_t>(product);
    check.holds = check.matroid_count <= check.product;
    return check;
}

}  // namespace pavemat
