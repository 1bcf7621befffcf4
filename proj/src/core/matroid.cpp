#include "matroid.hpp"

namespace pavemat {

std::optional<ExchangeWitness> exchange_violation(const SetFamily& bases) {
    for (const ElementSet& b1 : bases) {
        for (const ElementSet& b2 : bases) {
            ElementSet only_b1 = b1 - b2;
            if (only_b1.is_empty()) continue;
            ElementSet only_b2 = b2 - b1;
            for (int x : only_b1.elements()) {
                ElementSet stem = b1.without(x);
                bool exchanged = false;
                for (int y : only_b2.elements()) {
                    if (bases.contains(stem.with(y))) {
                        exchanged = true;
                        break;
                    }
                }
                if (!exchanged) return ExchangeWitness{b1, b2, x};
            }
        }
    }
    return std::nullopt;
}

namespace {

int checked_rank(const SetFamily& bases) {
    if (bases.empty()) throw NotAMatroid("no bases", std::nullopt);
    int r = bases[0].card();
    for (const ElementSet& b : bases)
        if (b.card() != r)
            throw NotAMatroid("rank mismatch: bases of cardinality " + std::to_string(r) +
                                  " and " + std::to_string(b.card()),
                              std::nullopt);
    return r;
}

}  // namespace

Matroid Matroid::from_bases(GroundSet g, SetFamily bases) {
    if (!(bases.ground() == g)) throw std::invalid_argument("mismatched ground sets");
    int r = checked_rank(bases);
    if (auto w = exchange_violation(bases)) {
        throw NotAMatroid("not a matroid: B1={" + to_literal(w->b1) + "}, B2={" +
                              to_literal(w->b2) + "}, x=" + std::to_string(w->x) +
                              " admits no exchange",
                          w);
    }
    return Matroid(std::move(bases), r);
}

Matroid Matroid::from_bases_unchecked(GroundSet g, SetFamily bases) {
    if (!(bases.ground() == g)) throw std::invalid_argument("mismatched ground sets");
    int r = checked_rank(bases);
    return Matroid(std::move(bases), r);
}

Matroid Matroid::uniform(GroundSet g, int r) {
    SetFamily bases(g);
    for (const ElementSet& s : k_subsets(g, r)) bases.insert(s);
    return Matroid(std::move(bases), r);
}

int Matroid::rank_of(const ElementSet& x) const {
    x.require_same_ground(ElementSet::empty(ground()));
    int best = 0;
    for (const ElementSet& b : bases_) best = std::max(best, intersection_size(x, b));
    return best;
}

bool Matroid::is_independent(const ElementSet& x) const {
    x.require_same_ground(ElementSet::empty(ground()));
    for (const ElementSet& b : bases_)
        if (x.subset_of(b)) return true;
    return false;
}

ElementSet Matroid::closure(const ElementSet& x) const {
    int rx = rank_of(x);
    ElementSet cl = x;
    for (int e = 1; e <= size(); ++e) {
        if (x.contains(e)) continue;
        if (rank_of(x.with(e)) == rx) cl = cl.with(e);
    }
    return cl;
}

SetFamily Matroid::circuits() const {
    SetFamily out(ground());
    int max_size = std::min(rank_ + 1, size());
    for (int k = 1; k <= max_size; ++k) {
        for (const ElementSet& x : k_subsets(ground(), k)) {
            if (is_independent(x)) continue;
            bool minimal = true;
            for (int e : x.elements()) {
                if (!is_independent(x.without(e))) {
                    minimal = false;
                    break;
                }
            }
            if (minimal) out.insert(x);
        }
    }
    return out;
}

SetFamily Matroid::circuits_of_size(int k) const {
    SetFamily out(ground());
    if (k < 1 || k > size()) return out;
    for (const ElementSet& x : k_subsets(ground(), k)) {
        if (is_independent(x)) continue;
        bool minimal = true;
        for (int e : x.elements()) {
            if (!is_independent(x.without(e))) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.insert(x);
    }
    return out;
}

SetFamily Matroid::hyperplanes() const {
    if (rank_ < 1) throw std::domain_error("no hyperplanes: matroid has rank 0");
    SetFamily out(ground());
    for (const ElementSet& a : k_subsets(ground(), rank_ - 1)) {
        if (!is_independent(a)) continue;
        out.insert(closure(a));
    }
    return out;
}

Matroid Matroid::dual() const {
    SetFamily co(ground());
    for (const ElementSet& b : bases_) co.insert(b.complement());
    return Matroid(std::move(co), size() - rank_);
}

bool Matroid::is_paving() const {
    // no circuit below the rank <=> every (r-1)-subset is independent
    if (rank_ == 0) return true;
    for (const ElementSet& a : k_subsets(ground(), rank_ - 1))
        if (!is_independent(a)) return false;
    return true;
}

bool Matroid::is_paving_by_hyperplanes() const {
    if (rank_ < 2) throw std::domain_error("hyperplane paving criterion requires rank >= 2");
    SetFamily h = hyperplanes();
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (h[i].card() < rank_) continue;
        for (std::size_t j = i + 1; j < h.size(); ++j) {
            if (h[j].card() < rank_) continue;
            if (intersection_size(h[i], h[j]) > rank_ - 2) return false;
        }
    }
    return true;
}

Matroid::NPartition Matroid::n1_n2_partition() const {
    if (!is_paving())
        throw std::domain_error("N-partition defined for paving matroids only");
    NPartition p{SetFamily(ground()), SetFamily(ground()), SetFamily(ground())};
    if (rank_ + 1 > size()) return p;  // no (r+1)-subsets exist
    for (const ElementSet& x : k_subsets(ground(), rank_ + 1)) {
        int circuit_subsets = 0, basis_subsets = 0;
        for (int e : x.elements()) {
            ElementSet a = x.without(e);
            if (is_independent(a))
                ++basis_subsets;
            else
                ++circuit_subsets;
        }
        if (circuit_subsets == 0) {
            p.circuits_r1.insert(x);  // x itself is a circuit
        } else if (basis_subsets == 0) {
            p.n2.insert(x);
        } else {
            if (circuit_subsets != 1)
                throw std::logic_error("N1 member {" + to_literal(x) +
                                       "} contains more than one r-circuit");
            p.n1.insert(x);
        }
    }
    return p;
}

bool Matroid::is_sparse_paving() const { return is_paving() && dual().is_paving(); }

bool Matroid::is_simple(Simplicity convention) const {
    for (int e = 1; e <= size(); ++e)
        if (!is_independent(ElementSet::of(ground(), {e}))) return false;
    if (convention == Simplicity::paper) return true;
    if (size() >= 2)
        for (const ElementSet& pair : k_subsets(ground(), 2))
            if (!is_independent(pair)) return false;
    return true;
}

bool Matroid::is_uniform() const {
    return bases_.size() == binomial(size(), rank_);
}

StructureReport analyze(const Matroid& m) {
    StructureReport rep;
    rep.n = m.size();
    rep.rank = m.rank();
    rep.simple_paper = m.is_simple(Matroid::Simplicity::paper);
    rep.simple_standard = m.is_simple(Matroid::Simplicity::standard);
    rep.paving = m.is_paving();
    if (m.rank() >= 2) rep.paving_by_hyperplanes = m.is_paving_by_hyperplanes();
    rep.sparse_paving = m.is_sparse_paving();
    rep.uniform = m.is_uniform();

    SetFamily all_circuits = m.circuits();
    for (const ElementSet& c : all_circuits) {
        auto [it, inserted] =
            rep.circuits_by_size.try_emplace(c.card(), SetFamily(m.ground()));
        it->second.insert(c);
    }
    if (m.rank() >= 1) rep.hyperplanes = m.hyperplanes();
    if (rep.paving) {
        rep.npartition = m.n1_n2_partition();
        rep.sparse_by_n2_empty = rep.npartition->n2.empty();
        bool small_hyperplanes = true;
        if (rep.hyperplanes)
            for (const ElementSet& h : *rep.hyperplanes)
                if (h.card() > m.rank()) small_hyperplanes = false;
        rep.sparse_by_hyperplane_sizes = small_hyperplanes;
    }
    return rep;
}

}  // namespace pavemat
