#pragma once

// Basis-represented matroids. The basis family is the single source of truth;
// rank, closure, circuits, hyperplanes and the dual are derived from it on
// demand. Construction through from_bases runs the basis-exchange oracle, so
// a Matroid value is always a real matroid.

#include <map>
#include <optional>
#include <stdexcept>

#include "sets.hpp"

namespace pavemat {

/// Failure witness of the exchange axiom: for x in b1\b2 no y in b2\b1 makes
/// (b1\{x}) ∪ {y} a basis.
struct ExchangeWitness {
    ElementSet b1, b2;
    int x;
};

class NotAMatroid : public std::domain_error {
  public:
    NotAMatroid(std::string msg, std::optional<ExchangeWitness> w)
        : std::domain_error(std::move(msg)), witness(std::move(w)) {}
    std::optional<ExchangeWitness> witness;
};

/// Basis-exchange oracle. Returns a witness for the first violated instance,
/// or nullopt when `bases` satisfies the exchange axiom. Members must be
/// nonempty-many and of equal cardinality (checked by the caller).
std::optional<ExchangeWitness> exchange_violation(const SetFamily& bases);

class Matroid {
  public:
    /// Validating constructor. Throws NotAMatroid with message "no bases",
    /// "rank mismatch" or "not a matroid" (with witness) as appropriate.
    static Matroid from_bases(GroundSet g, SetFamily bases);

    /// Trusted constructor for internally generated families; skips the
    /// exchange oracle but still rejects empty/mixed-cardinality input.
    static Matroid from_bases_unchecked(GroundSet g, SetFamily bases);

    static Matroid uniform(GroundSet g, int r);

    GroundSet ground() const { return bases_.ground(); }
    int size() const { return bases_.ground().size(); }
    int rank() const { return rank_; }
    const SetFamily& bases() const { return bases_; }

    /// rank of a subset: size of the largest independent subset of x, which
    /// for a basis family equals max over bases of |x ∩ B|.
    int rank_of(const ElementSet& x) const;

    /// x is independent iff it is contained in some basis.
    bool is_independent(const ElementSet& x) const;

    /// {e : rank(x ∪ {e}) = rank(x)}; idempotent, contains x.
    ElementSet closure(const ElementSet& x) const;

    /// All minimal dependent sets; each has cardinality ≤ rank+1.
    SetFamily circuits() const;

    /// Circuits of exactly cardinality k.
    SetFamily circuits_of_size(int k) const;

    /// Maximal sets of rank r−1, computed as closures of independent
    /// (r−1)-sets. Requires rank ≥ 1.
    SetFamily hyperplanes() const;

    /// Matroid with complemented bases; rank n − r.
    Matroid dual() const;

    /// No circuit smaller than the rank; equivalently every (r−1)-set is
    /// independent.
    bool is_paving() const;

    /// The hyperplane criterion: every pair of distinct hyperplanes of size
    /// ≥ r intersects in ≤ r−2 elements. Requires rank ≥ 2.
    bool is_paving_by_hyperplanes() const;

    struct NPartition {
        SetFamily circuits_r1;  // (r+1)-circuits
        SetFamily n1;           // exactly one r-circuit inside
        SetFamily n2;           // every r-subset is an r-circuit
    };

    /// Classifies every (r+1)-subset of a paving matroid. Throws on
    /// non-paving input. Also enforces the uniqueness claim for N1 members.
    NPartition n1_n2_partition() const;

    /// Definitional test: the matroid and its dual are both paving.
    bool is_sparse_paving() const;

    enum class Simplicity { paper, standard };

    /// paper: no 1-circuits (loops). standard: no circuits of size ≤ 2.
    bool is_simple(Simplicity convention) const;

    bool is_uniform() const;

    friend bool operator==(const Matroid& a, const Matroid& b) {
        return a.bases_ == b.bases_;
    }

  private:
    Matroid(SetFamily bases, int rank) : bases_(std::move(bases)), rank_(rank) {}

    SetFamily bases_;
    int rank_;
};

/// Full derived-structure snapshot used by the verify command and reports.
struct StructureReport {
    int n = 0;
    int rank = 0;
    bool simple_paper = false;
    bool simple_standard = false;
    bool paving = false;
    std::optional<bool> paving_by_hyperplanes;        // rank ≥ 2 only
    bool sparse_paving = false;                       // dual-paving definition
    std::optional<bool> sparse_by_n2_empty;           // paving only
    std::optional<bool> sparse_by_hyperplane_sizes;   // paving only, Prop II.2(b)
    bool uniform = false;
    std::map<int, SetFamily> circuits_by_size;
    std::optional<SetFamily> hyperplanes;             // rank ≥ 1 only
    std::optional<Matroid::NPartition> npartition;    // paving with r ≤ n only
};

StructureReport analyze(const Matroid& m);

}  // namespace pavemat
