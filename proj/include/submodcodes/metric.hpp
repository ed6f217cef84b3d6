#pragma once

#include <algorithm>
#include <span>
#include <vector>

#include "submodcodes/submodule.hpp"

namespace submod {

/// Least m >= 0 with π^m·rep(a) ⊆ rep(b); always <= r since π^r kills everything.
inline int half_distance(const HomothetyClass& a, const HomothetyClass& b) {
    check_compatible(a.rep, b.rep);
    for (std::uint32_t m = 0;; ++m)
        if (scaled_subset(a.rep, m, b.rep)) return static_cast<int>(m);
}

/// The homothety-class metric: half_distance both ways, summed.
inline int distance(const HomothetyClass& a, const HomothetyClass& b) {
    return half_distance(a, b) + half_distance(b, a);
}

inline int distance_to_set(const HomothetyClass& c, std::span<const HomothetyClass> set) {
    if (set.empty()) throw ValidationError("distance_to_set: empty set");
    int best = distance(c, set.front());
    for (std::size_t i = 1; i < set.size() && best > 0; ++i)
        best = std::min(best, distance(c, set[i]));
    return best;
}

/// Half-distance matrix N and distance matrix D = N + N^t of an ordered code.
struct DistanceMatrix {
    std::vector<std::vector<int>> half;
    std::vector<std::vector<int>> full;

    int min_positive() const {
        int best = -1;
        for (std::size_t i = 0; i < full.size(); ++i)
            for (std::size_t j = i + 1; j < full.size(); ++j)
                if (full[i][j] > 0 && (best < 0 || full[i][j] < best)) best = full[i][j];
        if (best < 0) throw ValidationError("min_positive: no positive entries");
        return best;
    }
};

inline DistanceMatrix half_distance_matrix(std::span<const HomothetyClass> members) {
    std::size_t n = members.size();
    DistanceMatrix out;
    out.half.assign(n, std::vector<int>(n, 0));
    out.full.assign(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) out.half[i][j] = half_distance(members[i], members[j]);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.full[i][j] = out.half[i][j] + out.half[j][i];
    if (n >= 2) {
        int r = static_cast<int>(members[0].rep.ring().r());
        int md = out.min_positive();
        if (md > 2 * r) throw std::runtime_error("distance exceeds 2r");
        if (md == 2 * r) {
            // A code of maximal distance has constant half-distances r.
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (i != j && out.half[i][j] != r)
                        throw std::runtime_error("half-distance matrix violates the r·J shape");
        }
    }
    return out;
}

inline int min_distance(std::span<const HomothetyClass> members) {
    if (members.size() < 2) throw ValidationError("min_distance needs at least two classes");
    return half_distance_matrix(members).min_positive();
}

/// Classes at distance exactly ell from the class of the full module. The
/// two characterizations (distance and class cardinality r - ell + 1) are
/// both evaluated and must agree.
inline std::vector<HomothetyClass> sphere(const RingPtr& ring, int d, int ell,
                                          std::uint64_t budget = kDefaultEnumBudget) {
    const int r = static_cast<int>(ring->r());
    if (ell < 0 || ell > r) throw ValidationError("sphere radius out of range");
    HomothetyClass full = homothety_class(Submodule::full_module(ring, d));
    std::vector<HomothetyClass> out;
    for (const HomothetyClass& c : enumerate_classes(ring, d, budget)) {
        bool by_distance = distance(c, full) == ell;
        bool by_size = c.size == r - ell + 1;
        if (by_distance != by_size)
            throw std::runtime_error("sphere characterizations disagree");
        if (by_distance) out.push_back(c);
    }
    if (ell == r) {
        for (const HomothetyClass& c : out)
            if (!is_boundary(c.rep))
                throw std::runtime_error("sphere of radius r is not the boundary");
    }
    return out;
}

inline std::vector<HomothetyClass> ball(const RingPtr& ring, int d, int ell,
                                        std::uint64_t budget = kDefaultEnumBudget) {
    const int r = static_cast<int>(ring->r());
    if (ell < 0 || ell > r) throw ValidationError("ball radius out of range");
    HomothetyClass full = homothety_class(Submodule::full_module(ring, d));
    std::vector<HomothetyClass> out;
    for (const HomothetyClass& c : enumerate_classes(ring, d, budget))
        if (distance(c, full) <= ell) out.push_back(c);
    return out;
}

/// Characterization of maximal-distance pairs: both classes on the boundary
/// and neither π^{r-1}·U_i inside the intersection.
inline bool is_max_distance_pair(const HomothetyClass& a, const HomothetyClass& b) {
    check_compatible(a.rep, b.rep);
    const ChainRing& R = a.rep.ring();
    if (!is_boundary(a.rep) || !is_boundary(b.rep)) return false;
    Submodule common = intersect(a.rep, b.rep);
    std::uint32_t t = R.r() - 1;
    return !is_subset(scale_pi(a.rep, t), common) && !is_subset(scale_pi(b.rep, t), common);
}

}  // namespace submod
