// Rule-based triple intersections on the blow-up of 3-space at five
// points, with the line-type exceptional symbols of the cord blow-ups
// carried formally.  Supports exactly the computation showing that every
// cord's strict transform has anticanonical degree 0.
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qdp5 {

/// Formal divisor: h * (pullback hyperplane) + sum_i p_i E_i
/// + sum_{i<j} l_{ij} E_{ij}, labels in {1..5}.
struct ThreefoldDivisor {
    std::int64_t h = 0;
    std::array<std::int64_t, 5> p{};
    std::map<std::pair<int, int>, std::int64_t> l;

    static ThreefoldDivisor pullback_hyperplane(std::int64_t c = 1) {
        ThreefoldDivisor d;
        d.h = c;
        return d;
    }
    static ThreefoldDivisor point_exceptional(int i, std::int64_t c = 1) {
        check_label(i);
        ThreefoldDivisor d;
        d.p[i - 1] = c;
        return d;
    }
    static ThreefoldDivisor line_exceptional(int i, int j, std::int64_t c = 1) {
        check_label(i);
        check_label(j);
        if (i == j) throw std::domain_error("line exceptional needs distinct labels");
        if (i > j) std::swap(i, j);
        ThreefoldDivisor d;
        d.l[{i, j}] = c;
        return d;
    }

    friend ThreefoldDivisor operator+(const ThreefoldDivisor& a, const ThreefoldDivisor& b) {
        ThreefoldDivisor r = a;
        r.h += b.h;
        for (int i = 0; i < 5; ++i) r.p[i] += b.p[i];
        for (const auto& [k, v] : b.l) r.l[k] += v;
        return r;
    }
    friend ThreefoldDivisor operator-(const ThreefoldDivisor& a, const ThreefoldDivisor& b) {
        return a + (std::int64_t(-1) * b);
    }
    friend ThreefoldDivisor operator*(std::int64_t k, const ThreefoldDivisor& a) {
        ThreefoldDivisor r = a;
        r.h *= k;
        for (auto& x : r.p) x *= k;
        for (auto& [key, v] : r.l) v *= k;
        return r;
    }

private:
    static void check_label(int i) {
        if (i < 1 || i > 5) throw std::domain_error("point label out of range");
    }
};

namespace detail {

// Symbols of the monomial rule table.
struct TfSymbol {
    enum class Kind { Hyperplane, Point, Line } kind;
    int a = 0, b = 0; // Point: a; Line: (a, b)
    std::int64_t coeff = 0;
};

inline std::vector<TfSymbol> tf_symbols(const ThreefoldDivisor& d) {
    std::vector<TfSymbol> out;
    if (d.h != 0) out.push_back({TfSymbol::Kind::Hyperplane, 0, 0, d.h});
    for (int i = 0; i < 5; ++i)
        if (d.p[i] != 0) out.push_back({TfSymbol::Kind::Point, i + 1, 0, d.p[i]});
    for (const auto& [key, v] : d.l)
        if (v != 0) out.push_back({TfSymbol::Kind::Line, key.first, key.second, v});
    return out;
}

// The rule table on a monomial of three symbols:
//   P^3 = 1 (pullback hyperplane), E_i^3 = 1, mixed E_i / hyperplane
//   powers vanish, any two distinct exceptional symbols vanish, a single
//   line symbol against anything else vanishes.  A repeated line symbol
//   is outside the supported rules.
inline std::int64_t tf_rule(const TfSymbol& s1, const TfSymbol& s2, const TfSymbol& s3) {
    const TfSymbol* s[3] = {&s1, &s2, &s3};
    auto same = [](const TfSymbol& x, const TfSymbol& y) {
        return x.kind == y.kind && x.a == y.a && x.b == y.b;
    };
    int lines = 0;
    for (auto* t : s)
        if (t->kind == TfSymbol::Kind::Line) ++lines;
    if (lines >= 2) {
        bool same_line = false;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (s[i]->kind == TfSymbol::Kind::Line && s[j]->kind == TfSymbol::Kind::Line &&
                    same(*s[i], *s[j]))
                    same_line = true;
        if (same_line)
            throw std::domain_error("triple_product: self-intersection of a line-type "
                                    "exceptional is outside the supported rules");
        return 0; // two distinct exceptional symbols
    }
    if (lines == 1) return 0; // line symbol against pullback or point factors
    int points = 0;
    for (auto* t : s)
        if (t->kind == TfSymbol::Kind::Point) ++points;
    if (points == 0) return 1; // (p*H)^3
    // Any two distinct exceptional symbols annihilate.
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (s[i]->kind == TfSymbol::Kind::Point && s[j]->kind == TfSymbol::Kind::Point &&
                !same(*s[i], *s[j]))
                return 0;
    if (points == 3) return 1; // E_i^3
    return 0;                  // E_i^2 . p*H and E_i . (p*H)^2
}

} // namespace detail

/// Trilinear extension of the rule table.
inline std::int64_t triple_product(const ThreefoldDivisor& t1, const ThreefoldDivisor& t2,
                                   const ThreefoldDivisor& t3) {
    std::int64_t total = 0;
    for (const auto& s1 : detail::tf_symbols(t1))
        for (const auto& s2 : detail::tf_symbols(t2))
            for (const auto& s3 : detail::tf_symbols(t3))
                total += s1.coeff * s2.coeff * s3.coeff * detail::tf_rule(s1, s2, s3);
    return total;
}

/// -K of the five-point, ten-cord blow-up: 4 p*H - 2 sum E_i - 2 sum E_{ij}.
inline ThreefoldDivisor threefold_anticanonical() {
    ThreefoldDivisor k = ThreefoldDivisor::pullback_hyperplane(4);
    for (int i = 1; i <= 5; ++i) k = k - std::int64_t(2) * ThreefoldDivisor::point_exceptional(i);
    for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j)
            k = k - std::int64_t(2) * ThreefoldDivisor::line_exceptional(i, j);
    return k;
}

/// -K . C for the strict transform C of the cord through points a and b,
/// written as (p*pi - E_a - E_b).(p*rho - E_a - E_b) with pi, rho two
/// planes cutting out the cord.  Always 0.
inline std::int64_t cord_anticanonical_degree(int a, int b) {
    if (a == b) throw std::domain_error("cord needs two distinct points");
    ThreefoldDivisor plane = ThreefoldDivisor::pullback_hyperplane() -
                             ThreefoldDivisor::point_exceptional(a) -
                             ThreefoldDivisor::point_exceptional(b);
    return triple_product(threefold_anticanonical(), plane, plane);
}

/// 1-point invariant of a d-fold cover of an exceptional fiber:
/// -1 for d = 1, 0 for every d >= 2.
inline std::int64_t exceptional_fiber_invariant(std::int64_t d) {
    if (d < 1) throw std::domain_error("exceptional_fiber_invariant: d must be positive");
    return d == 1 ? -1 : 0;
}

} // namespace qdp5
