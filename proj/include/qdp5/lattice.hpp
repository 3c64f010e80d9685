// The rank-5 intersection lattice of the projective plane blown up at
// four general points, together with its effective cone.
//
// A class is stored as (d; b1..b4) meaning d*H - sum_i b_i * E_i, so the
// exceptional curve E_i itself carries b_i = -1.  The pairing is the
// standard blow-up Gram form diag(1, -1, -1, -1, -1).
#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace qdp5 {

struct SurfaceClass {
    std::int64_t d = 0;
    std::array<std::int64_t, 4> b{0, 0, 0, 0};

    // Lexicographic (d, b1..b4); doubles as the canonical q-exponent order.
    auto operator<=>(const SurfaceClass&) const = default;

    friend SurfaceClass operator+(const SurfaceClass& x, const SurfaceClass& y) {
        SurfaceClass r{x.d + y.d, {}};
        for (int i = 0; i < 4; ++i) r.b[i] = x.b[i] + y.b[i];
        return r;
    }
    friend SurfaceClass operator-(const SurfaceClass& x, const SurfaceClass& y) {
        SurfaceClass r{x.d - y.d, {}};
        for (int i = 0; i < 4; ++i) r.b[i] = x.b[i] - y.b[i];
        return r;
    }
    friend SurfaceClass operator*(std::int64_t k, const SurfaceClass& x) {
        SurfaceClass r{k * x.d, {}};
        for (int i = 0; i < 4; ++i) r.b[i] = k * x.b[i];
        return r;
    }
    SurfaceClass operator-() const { return std::int64_t(-1) * (*this); }
    SurfaceClass& operator+=(const SurfaceClass& y) { return *this = *this + y; }

    bool is_zero() const { return *this == SurfaceClass{}; }
};

/// The hyperplane pullback H.
inline SurfaceClass hyperplane() { return SurfaceClass{1, {0, 0, 0, 0}}; }

/// The i-th exceptional curve E_i, i in 1..4.
inline SurfaceClass exceptional(int i) {
    if (i < 1 || i > 4) throw std::out_of_range("exceptional index");
    SurfaceClass r;
    r.b[i - 1] = -1;
    return r;
}

/// The line class H - E_i - E_j, i != j.
inline SurfaceClass line_class(int i, int j) {
    if (i == j) throw std::invalid_argument("line_class needs distinct indices");
    return hyperplane() - exceptional(i) - exceptional(j);
}

/// H - sum eps_i E_i for a bitmask eps over {1..4} (bit i-1 <-> E_i).
inline SurfaceClass h_minus(unsigned mask, std::int64_t h = 1) {
    SurfaceClass r{h, {0, 0, 0, 0}};
    for (int i = 0; i < 4; ++i)
        if (mask & (1u << i)) r.b[i] = 1;
    return r;
}

/// -K = 3H - E1 - E2 - E3 - E4.
inline SurfaceClass anticanonical() { return SurfaceClass{3, {1, 1, 1, 1}}; }

inline std::int64_t intersect(const SurfaceClass& x, const SurfaceClass& y) {
    std::int64_t r = x.d * y.d;
    for (int i = 0; i < 4; ++i) r -= x.b[i] * y.b[i];
    return r;
}

inline std::int64_t self_intersection(const SurfaceClass& x) { return intersect(x, x); }

inline std::int64_t anticanonical_degree(const SurfaceClass& x) {
    return intersect(anticanonical(), x);
}

/// The ten generators of the effective cone, in the fixed order
/// H-E1-E2, H-E1-E3, H-E1-E4, H-E2-E3, H-E2-E4, H-E3-E4, E1, E2, E3, E4.
inline const std::array<SurfaceClass, 10>& cone_generators() {
    static const std::array<SurfaceClass, 10> gens = [] {
        std::array<SurfaceClass, 10> g;
        int k = 0;
        for (int i = 1; i <= 4; ++i)
            for (int j = i + 1; j <= 4; ++j) g[k++] = line_class(i, j);
        for (int i = 1; i <= 4; ++i) g[k++] = exceptional(i);
        return g;
    }();
    return gens;
}

namespace detail {

// Visit every c in N^10 with sum c_i = total.
template <typename F>
void for_each_composition(std::int64_t total, std::array<std::int64_t, 10>& c, int pos, F&& f) {
    if (pos == 9) {
        c[9] = total;
        f(c);
        return;
    }
    for (std::int64_t v = 0; v <= total; ++v) {
        c[pos] = v;
        for_each_composition(total - v, c, pos + 1, f);
    }
}

} // namespace detail

/// All c in N^10 with sum_i c_i D_i = beta.  Empty means beta is not
/// effective.  Since every generator has anticanonical degree 1, any
/// decomposition has sum c_i = -K.beta, which bounds the search.
inline std::vector<std::array<std::int64_t, 10>> effective_decompositions(const SurfaceClass& beta) {
    std::vector<std::array<std::int64_t, 10>> out;
    std::int64_t k = anticanonical_degree(beta);
    if (k < 0) return out;
    std::array<std::int64_t, 10> c{};
    detail::for_each_composition(k, c, 0, [&](const std::array<std::int64_t, 10>& cc) {
        SurfaceClass s;
        for (int i = 0; i < 10; ++i) s += cc[i] * cone_generators()[i];
        if (s == beta) out.push_back(cc);
    });
    return out;
}

namespace detail {

// The composition search is exponential in -K.beta, so cache membership
// answers; invariant tables and checkers query the same classes repeatedly.
inline bool is_effective_uncached(const SurfaceClass& beta) {
    if (beta.is_zero()) return true;
    std::int64_t k = anticanonical_degree(beta);
    if (k < 0) return false;
    std::array<std::int64_t, 10> c{};
    bool found = false;
    detail::for_each_composition(k, c, 0, [&](const std::array<std::int64_t, 10>& cc) {
        if (found) return;
        SurfaceClass s;
        for (int i = 0; i < 10; ++i) s += cc[i] * cone_generators()[i];
        if (s == beta) found = true;
    });
    return found;
}

} // namespace detail

inline bool is_effective(const SurfaceClass& beta) {
    static std::map<SurfaceClass, bool> cache;
    auto it = cache.find(beta);
    if (it != cache.end()) return it->second;
    bool r = detail::is_effective_uncached(beta);
    cache.emplace(beta, r);
    return r;
}

/// All effective classes beta with -K.beta = k.
inline std::set<SurfaceClass> classes_of_anticanonical_degree(std::int64_t k) {
    std::set<SurfaceClass> out;
    if (k < 0) return out;
    std::array<std::int64_t, 10> c{};
    detail::for_each_composition(k, c, 0, [&](const std::array<std::int64_t, 10>& cc) {
        SurfaceClass s;
        for (int i = 0; i < 10; ++i) s += cc[i] * cone_generators()[i];
        out.insert(s);
    });
    return out;
}

/// All effective beta with beta^2 = -1 and -K.beta = 1; equals the
/// generator list as a set.
inline std::set<SurfaceClass> minus_one_curves() {
    std::set<SurfaceClass> out;
    for (const SurfaceClass& beta : classes_of_anticanonical_degree(1))
        if (self_intersection(beta) == -1) out.insert(beta);
    return out;
}

/// Exponent vector used in the printed name q^{a,(b1,b2,b3,b4)}.  Purely
/// exceptional classes are displayed with positive entries, matching the
/// q^{0,e_i} notation.
inline std::array<std::int64_t, 4> q_display_vector(const SurfaceClass& beta) {
    auto v = beta.b;
    if (beta.d == 0)
        for (auto& x : v) x = -x;
    return v;
}

/// Unchecked q^{a,(b1,b2,b3,b4)} rendering.  The literal product formula
/// ranges over some non-effective exponents (e.g. H - E1 - E2 - E4), so
/// serialization must not insist on cone membership.
inline std::string q_display_name(const SurfaceClass& beta) {
    auto v = q_display_vector(beta);
    std::string s = "q^{" + std::to_string(beta.d) + ",(";
    for (int i = 0; i < 4; ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    s += ")}";
    return s;
}

/// The display string of an effective class.
inline std::string q_name(const SurfaceClass& beta) {
    if (!is_effective(beta))
        throw std::domain_error("q_name: class is not effective");
    return q_display_name(beta);
}

} // namespace qdp5
