// Boundary-divisor combinatorics of the moduli spaces of stable pointed
// rational curves: canonical boundary indices, the inductive Picard basis,
// and the n = 5 dictionary into the surface lattice.
#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qdp5/lattice.hpp"

namespace qdp5 {

/// A boundary divisor class delta_S of the n-pointed moduli space,
/// S a marked-point subset with 2 <= |S| <= n-2.  Since delta_S equals
/// delta on the complement, the stored representative is the one of
/// {S, S^c} not containing n.
struct BoundaryIndex {
    int n = 0;
    std::vector<int> s; // sorted, canonical representative

    BoundaryIndex() = default;
    BoundaryIndex(int n_, std::set<int> labels) : n(n_) {
        if (n < 3) throw std::domain_error("BoundaryIndex: n < 3");
        for (int x : labels)
            if (x < 1 || x > n) throw std::domain_error("BoundaryIndex: label out of range");
        int size = static_cast<int>(labels.size());
        if (size < 2 || size > n - 2)
            throw std::domain_error("BoundaryIndex: subset size out of range");
        if (labels.count(n)) {
            for (int x = 1; x <= n; ++x)
                if (!labels.count(x)) s.push_back(x);
        } else {
            s.assign(labels.begin(), labels.end());
        }
    }

    auto operator<=>(const BoundaryIndex&) const = default;

    std::vector<int> complement() const {
        std::vector<int> c;
        for (int x = 1; x <= n; ++x)
            if (!std::binary_search(s.begin(), s.end(), x)) c.push_back(x);
        return c;
    }

    /// Display label "d{i,j,...}" using the smaller of the two
    /// representatives (ties broken lexicographically), which matches the
    /// labels delta_{1,5}, delta_{2,5} used in print.
    std::string label() const {
        std::vector<int> c = complement();
        const std::vector<int>& rep = (c.size() < s.size() || (c.size() == s.size() && c < s)) ? c : s;
        std::string out = "d{";
        for (size_t i = 0; i < rep.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(rep[i]);
        }
        out += "}";
        return out;
    }
};

/// All boundary classes of the n-pointed space; there are 2^{n-1} - n - 1.
inline std::set<BoundaryIndex> boundary_classes(int n) {
    if (n < 3) throw std::domain_error("boundary_classes: n < 3");
    std::set<BoundaryIndex> out;
    // Enumerate subsets of {1..n-1}: exactly the canonical representatives.
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        int size = __builtin_popcount(mask);
        if (size < 2 || size > n - 2) continue;
        std::set<int> labels;
        for (int i = 1; i <= n - 1; ++i)
            if (mask & (1u << (i - 1))) labels.insert(i);
        out.insert(BoundaryIndex(n, std::move(labels)));
    }
    return out;
}

/// The inductive basis B_n of the Picard group, as an ordered list.
///
/// B_4 = {delta_{2,3}}; passing from level i-1 to i adds (a) delta_B for
/// every B inside {1..i-1} containing {i-2, i-1} with 2 <= |B| <= i-2 and
/// (b) delta_{B^c \ {i}} (complement in {1..i}) for every class newly
/// added at the previous level.
inline std::vector<BoundaryIndex> pic_basis(int n) {
    if (n < 4) throw std::domain_error("pic_basis: n < 4");
    if (n > 12) throw std::domain_error("pic_basis: n > 12 not supported");
    // Raw subsets never contain the current top label, so set equality is
    // class equality at every level.
    std::vector<std::set<int>> basis = {{2, 3}};
    std::vector<std::set<int>> fresh = basis; // added at the previous step
    for (int i = 5; i <= n; ++i) {
        std::set<std::set<int>> seen(basis.begin(), basis.end());
        std::vector<std::set<int>> added;
        auto push = [&](std::set<int> B) {
            if (seen.insert(B).second) {
                basis.push_back(B);
                added.push_back(std::move(B));
            }
        };
        // (a) subsets of {1..i-1} containing {i-2, i-1}
        std::vector<int> rest;
        for (int x = 1; x <= i - 3; ++x) rest.push_back(x);
        for (unsigned mask = 0; mask < (1u << rest.size()); ++mask) {
            std::set<int> B = {i - 2, i - 1};
            for (size_t k = 0; k < rest.size(); ++k)
                if (mask & (1u << k)) B.insert(rest[k]);
            int size = static_cast<int>(B.size());
            if (size >= 2 && size <= i - 2) push(std::move(B));
        }
        // (b) complements (inside {1..i}, minus i) of the previous step's additions
        for (const std::set<int>& B : fresh) {
            std::set<int> C;
            for (int x = 1; x <= i - 1; ++x)
                if (!B.count(x)) C.insert(x);
            push(std::move(C));
        }
        fresh = std::move(added);
    }
    std::vector<BoundaryIndex> out;
    out.reserve(basis.size());
    for (const std::set<int>& B : basis) out.emplace_back(n, B);
    return out;
}

/// The n = 5 identification of boundary classes with surface classes
/// (marked point 5 playing the special role).
inline const std::map<BoundaryIndex, SurfaceClass>& kapranov_dictionary_5() {
    static const std::map<BoundaryIndex, SurfaceClass> dict = {
        {BoundaryIndex(5, {2, 3}), line_class(1, 4)},
        {BoundaryIndex(5, {3, 4}), line_class(1, 2)},
        {BoundaryIndex(5, {1, 5}), exceptional(1)},
        {BoundaryIndex(5, {2, 5}), exceptional(2)},
        {BoundaryIndex(5, {1, 4}), line_class(2, 3)},
    };
    return dict;
}

inline SurfaceClass kapranov_image(const BoundaryIndex& ix) {
    auto it = kapranov_dictionary_5().find(ix);
    if (it == kapranov_dictionary_5().end())
        throw std::out_of_range("kapranov_image: not a basis element of the 5-pointed space");
    return it->second;
}

/// The five products of basis classes that vanish classically, in the
/// order defining the relations f1..f5.
inline std::vector<std::pair<BoundaryIndex, BoundaryIndex>> keel_vanishing_pairs_5() {
    auto d = [](int a, int b) { return BoundaryIndex(5, {a, b}); };
    return {
        {d(2, 3), d(3, 4)},
        {d(2, 3), d(2, 5)},
        {d(3, 4), d(1, 4)},
        {d(1, 5), d(2, 5)},
        {d(1, 5), d(1, 4)},
    };
}

/// True iff every vanishing pair really pairs to zero under the dictionary.
inline bool verify_keel_5() {
    for (const auto& [a, b] : keel_vanishing_pairs_5())
        if (intersect(kapranov_image(a), kapranov_image(b)) != 0) return false;
    return true;
}

} // namespace qdp5
