#pragma once

// Integer compositions and partitions, descent sets, the refinement order,
// and the enumeration utilities that underpin basis indexing.
//
// The descent set of a composition c = (c_1, ..., c_k) is the set of proper
// partial sums {c_1, c_1+c_2, ..., c_1+...+c_{k-1}}.  Refinement is defined
// by a <= b iff D(b) is a subset of D(a); the coarsenings of a are exactly
// the compositions b of the same degree with b >= a.

#include <cstdint>
#include <string>
#include <vector>

#include "cnsf/errors.hpp"

namespace cnsf {

// Guard on 2^(n-1)-sized enumerations.
inline constexpr int kDefaultEnumCap = 12;

class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int degree() const;
    bool empty() const { return parts_.empty(); }

    static Composition concat(const Composition& a, const Composition& b);

    bool operator==(const Composition&) const = default;

private:
    std::vector<int> parts_;
};

class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int degree() const;
    bool empty() const { return parts_.empty(); }

    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

// Canonical order used for term output and enumeration: by degree, then
// lexicographically on the part sequence.
bool graded_lex_less(const std::vector<int>& a, const std::vector<int>& b);

struct CompositionOrder {
    bool operator()(const Composition& a, const Composition& b) const {
        return graded_lex_less(a.parts(), b.parts());
    }
};

struct PartitionOrder {
    bool operator()(const Partition& a, const Partition& b) const {
        return graded_lex_less(a.parts(), b.parts());
    }
};

// Proper partial sums of c, ascending; empty for length <= 1.
std::vector<int> descent_set(const Composition& c);

// Inverse of descent_set for a fixed degree; descents must be a strictly
// increasing subset of {1, ..., degree-1}.
Composition composition_from_descents(int degree, const std::vector<int>& descents);

// a <= b in the refinement order. Degrees must match.
bool refines(const Composition& a, const Composition& b);

// All compositions b >= a, one per subset of D(a).  Ordered by the merge
// mask: bit i of the mask drops the i-th descent of a, masks ascending, so
// a itself comes first and the single-part composition last.
std::vector<Composition> coarsenings(const Composition& a);

Partition sort_to_partition(const Composition& a);

// All 2^(n-1) compositions of n in canonical (graded lex) order.
std::vector<Composition> compositions_of(int n, int cap = kDefaultEnumCap);

// "[1,2,1]", "[]"
std::string to_text(const Composition& c);
std::string to_text(const Partition& p);

} // namespace cnsf
