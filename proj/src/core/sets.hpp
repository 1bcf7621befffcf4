#pragma once

// Ground-set and subset-family primitives. Elements are labeled 1..n and a
// subset is one 64-bit word, so n is capped at 64. Canonical order of subsets
// is (cardinality, then lexicographic on the sorted element list); families
// keep their members in that order with no duplicates.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pavemat {

class GroundSet {
  public:
    explicit GroundSet(int n) : n_(n) {
        if (n < 1 || n > 64)
            throw std::invalid_argument("ground set size must be in [1,64], got " +
                                        std::to_string(n));
    }

    int size() const { return n_; }
    std::uint64_t full_mask() const {
        return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    }

    friend bool operator==(GroundSet, GroundSet) = default;

  private:
    int n_;
};

class ElementSet {
  public:
    ElementSet(GroundSet g, std::uint64_t bits) : bits_(bits), n_(g.size()) {
        if (bits & ~g.full_mask())
            throw std::invalid_argument("element outside ground set");
    }

    static ElementSet empty(GroundSet g) { return ElementSet(g, 0); }
    static ElementSet full(GroundSet g) { return ElementSet(g, g.full_mask()); }

    /// Build from 1-based element labels.
    static ElementSet of(GroundSet g, std::initializer_list<int> elems) {
        ElementSet s = empty(g);
        for (int e : elems) s = s.with(e);
        return s;
    }

    GroundSet ground() const { return GroundSet(n_); }
    std::uint64_t bits() const { return bits_; }
    int card() const { return std::popcount(bits_); }
    bool is_empty() const { return bits_ == 0; }

    bool contains(int e) const { return (bits_ >> check_label(e)) & 1; }
    ElementSet with(int e) const { return raw(n_, bits_ | (std::uint64_t{1} << check_label(e))); }
    ElementSet without(int e) const {
        return raw(n_, bits_ & ~(std::uint64_t{1} << check_label(e)));
    }

    bool subset_of(const ElementSet& other) const {
        require_same_ground(other);
        return (bits_ & ~other.bits_) == 0;
    }

    ElementSet complement() const { return raw(n_, ~bits_ & GroundSet(n_).full_mask()); }

    ElementSet operator&(const ElementSet& o) const {
        require_same_ground(o);
        return raw(n_, bits_ & o.bits_);
    }
    ElementSet operator|(const ElementSet& o) const {
        require_same_ground(o);
        return raw(n_, bits_ | o.bits_);
    }
    ElementSet operator-(const ElementSet& o) const {
        require_same_ground(o);
        return raw(n_, bits_ & ~o.bits_);
    }

    /// Sorted 1-based labels.
    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(card()));
        for (std::uint64_t b = bits_; b != 0; b &= b - 1)
            out.push_back(std::countr_zero(b) + 1);
        return out;
    }

    friend bool operator==(const ElementSet& a, const ElementSet& b) {
        return a.n_ == b.n_ && a.bits_ == b.bits_;
    }

    void require_same_ground(const ElementSet& other) const {
        if (n_ != other.n_) throw std::invalid_argument("mismatched ground sets");
    }

  private:
    static ElementSet raw(int n, std::uint64_t bits) {
        ElementSet s = ElementSet(GroundSet(n), bits);
        return s;
    }

    int check_label(int e) const {
        if (e < 1 || e > n_)
            throw std::invalid_argument("element label " + std::to_string(e) +
                                        " outside 1.." + std::to_string(n_));
        return e - 1;
    }

    std::uint64_t bits_;
    int n_;
};

/// Canonical order: by cardinality, then lexicographic on the sorted element
/// lists. For equal cardinalities the set holding the smallest element of the
/// symmetric difference comes first.
inline bool canonical_less(const ElementSet& a, const ElementSet& b) {
    a.require_same_ground(b);
    if (a.card() != b.card()) return a.card() < b.card();
    std::uint64_t diff = a.bits() ^ b.bits();
    if (diff == 0) return false;
    std::uint64_t lowest = diff & (~diff + 1);
    return (a.bits() & lowest) != 0;
}

inline int intersection_size(const ElementSet& a, const ElementSet& b) {
    a.require_same_ground(b);
    return std::popcount(a.bits() & b.bits());
}

/// An ordered, duplicate-free collection of subsets over one ground set.
class SetFamily {
  public:
    explicit SetFamily(GroundSet g) : ground_(g) {}

    static SetFamily of(GroundSet g, std::initializer_list<std::initializer_list<int>> sets) {
        SetFamily f(g);
        for (const auto& s : sets) f.insert(ElementSet::of(g, s));
        return f;
    }

    GroundSet ground() const { return ground_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    const ElementSet& operator[](std::size_t i) const { return members_.at(i); }
    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    /// Insert keeping canonical order; duplicates are ignored. Returns true
    /// if the member was new.
    bool insert(const ElementSet& s) {
        s.require_same_ground(ElementSet::empty(ground_));
        auto it = std::lower_bound(members_.begin(), members_.end(), s, canonical_less);
        if (it != members_.end() && *it == s) return false;
        members_.insert(it, s);
        return true;
    }

    bool contains(const ElementSet& s) const {
        auto it = std::lower_bound(members_.begin(), members_.end(), s, canonical_less);
        return it != members_.end() && *it == s;
    }

    /// Max of |X∩Y| over unordered pairs of distinct members; nullopt when
    /// fewer than two members exist.
    std::optional<int> max_pairwise_intersection() const {
        if (members_.size() < 2) return std::nullopt;
        int best = 0;
        for (std::size_t i = 0; i < members_.size(); ++i)
            for (std::size_t j = i + 1; j < members_.size(); ++j)
                best = std::max(best, intersection_size(members_[i], members_[j]));
        return best;
    }

    friend bool operator==(const SetFamily& a, const SetFamily& b) {
        return a.ground_ == b.ground_ && a.members_ == b.members_;
    }

  private:
    GroundSet ground_;
    std::vector<ElementSet> members_;
};

std::uint64_t binomial(int n, int k);

/// Set literal used in files, CLI output and logs: space-separated 1-based
/// labels in increasing order; the empty set is "-".
std::string to_literal(const ElementSet& s);
ElementSet parse_literal(GroundSet g, std::string_view text);

/// Lazy stream over the k-subsets of the ground set in canonical
/// (lexicographic) order. Usable in range-for; materialize on demand.
class KSubsetRange {
  public:
    KSubsetRange(GroundSet g, int k) : ground_(g), k_(k) {
        if (k < 0 || k > g.size())
            throw std::invalid_argument("k-subset size " + std::to_string(k) +
                                        " outside 0.." + std::to_string(g.size()));
    }

    class iterator {
      public:
        using value_type = ElementSet;
        using difference_type = std::ptrdiff_t;

        iterator() : n_(0), done_(true) {}
        iterator(GroundSet g, int k) : n_(g.size()), done_(false) {
            labels_.resize(static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i) labels_[static_cast<std::size_t>(i)] = i + 1;
        }

        ElementSet operator*() const {
            std::uint64_t bits = 0;
            for (int e : labels_) bits |= std::uint64_t{1} << (e - 1);
            return ElementSet(GroundSet(n_), bits);
        }

        iterator& operator++() {
            int k = static_cast<int>(labels_.size());
            int i = k - 1;
            while (i >= 0 && labels_[static_cast<std::size_t>(i)] == n_ - k + i + 1) --i;
            if (i < 0) {
                done_ = true;
                return *this;
            }
            ++labels_[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                labels_[static_cast<std::size_t>(j)] = labels_[static_cast<std::size_t>(j - 1)] + 1;
            return *this;
        }

        iterator operator++(int) {
            iterator tmp = *this;
            ++*this;
            return tmp;
        }

        friend bool operator==(const iterator& a, const iterator& b) {
            if (a.done_ || b.done_) return a.done_ == b.done_;
            return a.n_ == b.n_ && a.labels_ == b.labels_;
        }

      private:
        std::vector<int> labels_;
        int n_;
        bool done_;
    };

    iterator begin() const { return iterator(ground_, k_); }
    iterator end() const { return iterator(); }

  private:
    GroundSet ground_;
    int k_;
};

inline KSubsetRange k_subsets(GroundSet g, int k) { return KSubsetRange(g, k); }

/// Materialized k-subsets in canonical order.
std::vector<ElementSet> k_subsets_vec(GroundSet g, int k);

}  // namespace pavemat
