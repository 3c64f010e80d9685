// The small quantum product on the 7-dimensional cohomology basis
// (1, H, E1..E4, pt) with scalars in the semigroup ring of effective
// curve classes, in both literal and strict mode, plus the relation
// generator and the consistency checkers.
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qdp5/gw.hpp"
#include "qdp5/lattice.hpp"
#include "qdp5/moduli.hpp"
#include "qdp5/rational.hpp"

namespace qdp5 {

/// Rational polynomial in the q-variables; monomials are effective curve
/// classes and multiply by adding exponents in the lattice.
class QPolynomial {
public:
    QPolynomial() = default;
    QPolynomial(const Rational& c) {
        if (!c.is_zero()) terms_[SurfaceClass{}] = c;
    }

    static QPolynomial monomial(const SurfaceClass& beta, const Rational& c = 1) {
        QPolynomial p;
        if (!c.is_zero()) p.terms_[beta] = c;
        return p;
    }

    const std::map<SurfaceClass, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const SurfaceClass& beta, const Rational& c) {
        if (c.is_zero()) return;
        Rational& slot = terms_[beta];
        slot += c;
        if (slot.is_zero()) terms_.erase(beta);
    }

    Rational coefficient(const SurfaceClass& beta) const {
        auto it = terms_.find(beta);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    friend QPolynomial operator+(const QPolynomial& a, const QPolynomial& b) {
        QPolynomial r = a;
        for (const auto& [beta, c] : b.terms_) r.add(beta, c);
        return r;
    }
    friend QPolynomial operator-(const QPolynomial& a, const QPolynomial& b) {
        QPolynomial r = a;
        for (const auto& [beta, c] : b.terms_) r.add(beta, -c);
        return r;
    }
    friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
        QPolynomial r;
        for (const auto& [ba, ca] : a.terms_)
            for (const auto& [bb, cb] : b.terms_) r.add(ba + bb, ca * cb);
        return r;
    }
    QPolynomial operator-() const { return QPolynomial() - *this; }
    QPolynomial& operator+=(const QPolynomial& o) { return *this = *this + o; }

    friend bool operator==(const QPolynomial& a, const QPolynomial& b) {
        return a.terms_ == b.terms_;
    }

private:
    std::map<SurfaceClass, Rational> terms_;
};

/// The fixed ordered cohomology basis.
enum class Basis : int { One = 0, H = 1, E1 = 2, E2 = 3, E3 = 4, E4 = 5, Pt = 6 };

inline constexpr std::array<Basis, 7> all_basis = {Basis::One, Basis::H,  Basis::E1, Basis::E2,
                                                   Basis::E3,  Basis::E4, Basis::Pt};

inline const char* basis_name(Basis t) {
    static const char* names[7] = {"1", "H", "E1", "E2", "E3", "E4", "pt"};
    return names[static_cast<int>(t)];
}

/// Cohomological codimension: 0 for 1, 1 for divisors, 2 for pt.
inline int basis_codim(Basis t) {
    if (t == Basis::One) return 0;
    if (t == Basis::Pt) return 2;
    return 1;
}

inline bool basis_is_divisor(Basis t) { return basis_codim(t) == 1; }

inline SurfaceClass basis_divisor_class(Basis t) {
    if (t == Basis::H) return hyperplane();
    if (basis_is_divisor(t)) return exceptional(static_cast<int>(t) - 1);
    throw std::invalid_argument("basis element is not a divisor");
}

/// Element of the quantum cohomology module: one q-polynomial coefficient
/// per basis element.
struct QClass {
    std::array<QPolynomial, 7> coeff;

    QPolynomial& operator[](Basis t) { return coeff[static_cast<int>(t)]; }
    const QPolynomial& operator[](Basis t) const { return coeff[static_cast<int>(t)]; }

    bool is_zero() const {
        for (const auto& p : coeff)
            if (!p.is_zero()) return false;
        return true;
    }

    friend QClass operator+(const QClass& a, const QClass& b) {
        QClass r;
        for (int i = 0; i < 7; ++i) r.coeff[i] = a.coeff[i] + b.coeff[i];
        return r;
    }
    friend QClass operator-(const QClass& a, const QClass& b) {
        QClass r;
        for (int i = 0; i < 7; ++i) r.coeff[i] = a.coeff[i] - b.coeff[i];
        return r;
    }
    friend QClass operator*(const QPolynomial& s, const QClass& x) {
        QClass r;
        for (int i = 0; i < 7; ++i) r.coeff[i] = s * x.coeff[i];
        return r;
    }
    friend bool operator==(const QClass& a, const QClass& b) { return a.coeff == b.coeff; }
};

inline QClass basis_qclass(Basis t, const QPolynomial& s = QPolynomial(Rational(1))) {
    QClass r;
    r[t] = s;
    return r;
}

/// Embed a divisor class d*H - sum b_i E_i into the module.
inline QClass divisor_qclass(const SurfaceClass& delta,
                             const QPolynomial& s = QPolynomial(Rational(1))) {
    QClass r;
    r[Basis::H] = QPolynomial::monomial(SurfaceClass{}, Rational(delta.d)) * s;
    for (int i = 0; i < 4; ++i)
        r[static_cast<Basis>(static_cast<int>(Basis::E1) + i)] =
            QPolynomial::monomial(SurfaceClass{}, Rational(-delta.b[i])) * s;
    return r;
}

/// Scale a basis element by a rational times a q-monomial.
inline QClass term_qclass(Basis t, const SurfaceClass& expo, const Rational& c) {
    return basis_qclass(t, QPolynomial::monomial(expo, c));
}

// ---------------------------------------------------------------------------
// Literal product
// ---------------------------------------------------------------------------

/// The published closed formula for the quantum product of two divisor
/// classes, signs and all: the cup part, minus the E_i q^{E_i} sum, plus
/// the (H+E_i+E_j) q^{H-E_i-E_j} sum, plus the two scalar sums over
/// H - sum eps E and 2H - sum eps E.
inline QClass qmul_literal(const SurfaceClass& d1, const SurfaceClass& d2) {
    QClass out;
    out[Basis::Pt] = QPolynomial(Rational(intersect(d1, d2)));
    for (int i = 1; i <= 4; ++i) {
        SurfaceClass e = exceptional(i);
        Rational c = Rational(intersect(d1, e)) * Rational(intersect(d2, e));
        Basis t = static_cast<Basis>(static_cast<int>(Basis::E1) + i - 1);
        out = out - term_qclass(t, e, c);
    }
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j) {
            SurfaceClass c_ij = line_class(i, j);
            Rational c = Rational(intersect(d1, c_ij)) * Rational(intersect(d2, c_ij));
            if (c.is_zero()) continue;
            Basis ti = static_cast<Basis>(static_cast<int>(Basis::E1) + i - 1);
            Basis tj = static_cast<Basis>(static_cast<int>(Basis::E1) + j - 1);
            out = out + term_qclass(Basis::H, c_ij, c) + term_qclass(ti, c_ij, c) +
                  term_qclass(tj, c_ij, c);
        }
    for (std::int64_t h : {1, 2})
        for (unsigned mask = 0; mask < 16; ++mask) {
            SurfaceClass beta = h_minus(mask, h);
            Rational c = Rational(intersect(d1, beta)) * Rational(intersect(d2, beta));
            out = out + term_qclass(Basis::One, beta, c);
        }
    return out;
}

// ---------------------------------------------------------------------------
// Strict product
// ---------------------------------------------------------------------------

inline Insertion basis_insertion(Basis t) {
    if (t == Basis::One) return Insertion::fundamental();
    if (t == Basis::Pt) return Insertion::point();
    return Insertion::divisor(basis_divisor_class(t));
}

/// Poincare dual of a basis element under diag(1,-1,-1,-1,-1) and 1<->pt.
inline QClass basis_dual(Basis t) {
    if (t == Basis::One) return basis_qclass(Basis::Pt);
    if (t == Basis::Pt) return basis_qclass(Basis::One);
    if (t == Basis::H) return basis_qclass(Basis::H);
    return QPolynomial(Rational(-1)) * basis_qclass(t);
}

namespace detail {

/// Structure constants: T_i * T_j as a QClass, from the axiom-derived
/// invariant table with the dimension filter.
inline const QClass& qmul_strict_basis(Basis x, Basis y) {
    static const std::array<std::array<QClass, 7>, 7> table = [] {
        std::array<std::array<QClass, 7>, 7> tab;
        std::vector<SurfaceClass> candidates;
        for (std::int64_t deg = 1; deg <= 4; ++deg)
            for (const SurfaceClass& beta : classes_of_anticanonical_degree(deg))
                if (!beta.is_zero()) candidates.push_back(beta);
        for (Basis x : all_basis)
            for (Basis y : all_basis) {
                QClass out;
                // Classical cup part.
                if (x == Basis::One) {
                    out = basis_qclass(y);
                } else if (y == Basis::One) {
                    out = basis_qclass(x);
                } else if (basis_is_divisor(x) && basis_is_divisor(y)) {
                    out[Basis::Pt] = QPolynomial(
                        Rational(intersect(basis_divisor_class(x), basis_divisor_class(y))));
                }
                // Quantum corrections (vanish when either factor is 1).
                if (x != Basis::One && y != Basis::One) {
                    for (const SurfaceClass& beta : candidates)
                        for (Basis t : all_basis) {
                            Rational v = three_point(Mode::Strict, beta, basis_insertion(x),
                                                     basis_insertion(y), basis_insertion(t));
                            if (v.is_zero()) continue;
                            out = out + QPolynomial::monomial(beta, v) * basis_dual(t);
                        }
                }
                tab[static_cast<int>(x)][static_cast<int>(y)] = out;
            }
        return tab;
    }();
    return table[static_cast<int>(x)][static_cast<int>(y)];
}

} // namespace detail

/// The strict quantum product, bilinear over q-polynomial scalars.
inline QClass qmul_strict(const QClass& x, const QClass& y) {
    QClass out;
    for (Basis i : all_basis) {
        if (x[i].is_zero()) continue;
        for (Basis j : all_basis) {
            if (y[j].is_zero()) continue;
            out = out + (x[i] * y[j]) * detail::qmul_strict_basis(i, j);
        }
    }
    return out;
}

inline QClass qmul_strict(const SurfaceClass& d1, const SurfaceClass& d2) {
    return qmul_strict(divisor_qclass(d1), divisor_qclass(d2));
}

inline QClass qmul(Mode mode, const SurfaceClass& d1, const SurfaceClass& d2) {
    return mode == Mode::Literal ? qmul_literal(d1, d2) : qmul_strict(d1, d2);
}

// ---------------------------------------------------------------------------
// Presentation
// ---------------------------------------------------------------------------

/// One relation f_i^*: the product monomial of two boundary generators
/// minus every term of their quantum product.
struct Relation {
    std::string name;
    BoundaryIndex lhs1, lhs2;
    QClass product; // quantum product of the dictionary images
};

struct Presentation {
    Mode mode;
    std::vector<std::pair<std::string, SurfaceClass>> generators; // label -> image
    std::vector<Relation> relations;
};

/// The five relations obtained by pushing the classical vanishing pairs
/// through the dictionary and the quantum product in the given mode.
inline Presentation relations(Mode mode, int n = 5) {
    if (n != 5) throw std::domain_error("relations: only the 5-pointed space is supported");
    Presentation pres;
    pres.mode = mode;
    for (const auto& [ix, image] : kapranov_dictionary_5())
        pres.generators.emplace_back(ix.label(), image);
    int i = 0;
    for (const auto& [a, b] : keel_vanishing_pairs_5()) {
        Relation rel;
        rel.name = "f" + std::to_string(++i) + "*";
        rel.lhs1 = a;
        rel.lhs2 = b;
        rel.product = qmul(mode, kapranov_image(a), kapranov_image(b));
        pres.relations.push_back(std::move(rel));
    }
    return pres;
}

// ---------------------------------------------------------------------------
// Checkers
// ---------------------------------------------------------------------------

struct AssociativityFailure {
    Basis a, b, c;
    QClass difference;
};

/// Evaluates (a*b)*c - a*(b*c) for all 343 ordered basis triples in the
/// strict product; an empty report is the correctness oracle for the
/// invariant table.
inline std::vector<AssociativityFailure> check_associativity_strict() {
    std::vector<AssociativityFailure> failures;
    for (Basis a : all_basis)
        for (Basis b : all_basis)
            for (Basis c : all_basis) {
                QClass left = qmul_strict(qmul_strict(basis_qclass(a), basis_qclass(b)), basis_qclass(c));
                QClass right = qmul_strict(basis_qclass(a), qmul_strict(basis_qclass(b), basis_qclass(c)));
                QClass diff = left - right;
                if (!diff.is_zero()) failures.push_back({a, b, c, std::move(diff)});
            }
    return failures;
}

/// A product term whose total degree does not match the sum of the input
/// degrees, under deg 1 = 0, deg divisor = 1, deg pt = 2 and
/// deg q^beta = -K.beta.
struct GradingViolation {
    std::string pair_label;
    Basis basis;
    SurfaceClass exponent;
    std::int64_t term_degree;
    std::int64_t expected_degree;
};

inline std::int64_t term_degree(Basis t, const SurfaceClass& expo) {
    return basis_codim(t) + anticanonical_degree(expo);
}

namespace detail {

inline void collect_grading(const std::string& label, const QClass& product,
                            std::int64_t expected, std::vector<GradingViolation>& out) {
    for (Basis t : all_basis)
        for (const auto& [beta, c] : product[t].terms()) {
            std::int64_t deg = term_degree(t, beta);
            if (deg != expected) out.push_back({label, t, beta, deg, expected});
        }
}

} // namespace detail

/// Homogeneity report.  Strict mode sweeps all 49 basis pairs; literal
/// mode sweeps the five dictionary-image pairs, the inputs the published
/// formula is applied to.
inline std::vector<GradingViolation> check_grading(Mode mode) {
    std::vector<GradingViolation> out;
    if (mode == Mode::Strict) {
        for (Basis x : all_basis)
            for (Basis y : all_basis) {
                std::string label = std::string(basis_name(x)) + "*" + basis_name(y);
                detail::collect_grading(label, detail::qmul_strict_basis(x, y),
                                        basis_codim(x) + basis_codim(y), out);
            }
        return out;
    }
    for (const auto& [a, b] : keel_vanishing_pairs_5()) {
        std::string label = a.label() + "*" + b.label();
        detail::collect_grading(label, qmul_literal(kapranov_image(a), kapranov_image(b)), 2, out);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Discrepancy report
// ---------------------------------------------------------------------------

/// Display-granularity term of a product: at each q-exponent, the scalar
/// part (coefficient of 1), the divisor part (the H, E1..E4 column, as a
/// lattice class) and the pt part are separate terms.
struct DisplayTerm {
    enum class Kind { Scalar, DivisorClass, Point } kind;
    SurfaceClass exponent;
    Rational scalar;     // Scalar / Point payload
    SurfaceClass divisor; // DivisorClass payload

    auto operator<=>(const DisplayTerm&) const = default;
};

inline std::vector<DisplayTerm> display_terms(const QClass& x) {
    std::map<SurfaceClass, DisplayTerm> divisors;
    std::vector<DisplayTerm> out;
    for (const auto& [beta, c] : x[Basis::One].terms())
        out.push_back({DisplayTerm::Kind::Scalar, beta, c, {}});
    for (Basis t : {Basis::H, Basis::E1, Basis::E2, Basis::E3, Basis::E4})
        for (const auto& [beta, c] : x[t].terms()) {
            if (!c.is_integer())
                throw std::domain_error("display_terms: non-integral divisor coefficient");
            auto [it, _] = divisors.try_emplace(
                beta, DisplayTerm{DisplayTerm::Kind::DivisorClass, beta, {}, {}});
            SurfaceClass unit = t == Basis::H ? hyperplane()
                                             : exceptional(static_cast<int>(t) - 1);
            it->second.divisor += c.num() * unit;
        }
    for (auto& [beta, term] : divisors) out.push_back(term);
    for (const auto& [beta, c] : x[Basis::Pt].terms())
        out.push_back({DisplayTerm::Kind::Point, beta, c, {}});
    std::sort(out.begin(), out.end());
    return out;
}

struct PairDiscrepancy {
    std::string pair_label;
    std::vector<DisplayTerm> literal_only;
    std::vector<DisplayTerm> strict_only;
    std::vector<SurfaceClass> shared_exponents;
    // exponents where both sides carry a divisor class, but different ones
    std::vector<std::array<SurfaceClass, 3>> class_mismatches; // {exponent, literal, strict}
};

/// Symmetric difference of the literal and strict products over the five
/// vanishing pairs, at display-term granularity.
inline std::vector<PairDiscrepancy> discrepancy_report() {
    std::vector<PairDiscrepancy> out;
    for (const auto& [a, b] : keel_vanishing_pairs_5()) {
        SurfaceClass d1 = kapranov_image(a), d2 = kapranov_image(b);
        std::vector<DisplayTerm> lit = display_terms(qmul_literal(d1, d2));
        std::vector<DisplayTerm> str = display_terms(qmul_strict(d1, d2));
        PairDiscrepancy pd;
        pd.pair_label = a.label() + "*" + b.label();
        std::set_difference(lit.begin(), lit.end(), str.begin(), str.end(),
                            std::back_inserter(pd.literal_only));
        std::set_difference(str.begin(), str.end(), lit.begin(), lit.end(),
                            std::back_inserter(pd.strict_only));
        std::set<SurfaceClass> lit_sup, str_sup;
        for (const auto& t : lit) lit_sup.insert(t.exponent);
        for (const auto& t : str) str_sup.insert(t.exponent);
        for (const SurfaceClass& e : lit_sup)
            if (str_sup.count(e)) pd.shared_exponents.push_back(e);
        std::map<SurfaceClass, SurfaceClass> lit_div, str_div;
        for (const auto& t : lit)
            if (t.kind == DisplayTerm::Kind::DivisorClass) lit_div[t.exponent] = t.divisor;
        for (const auto& t : str)
            if (t.kind == DisplayTerm::Kind::DivisorClass) str_div[t.exponent] = t.divisor;
        for (const auto& [e, dl] : lit_div) {
            auto it = str_div.find(e);
            if (it != str_div.end() && it->second != dl)
                pd.class_mismatches.push_back({e, dl, it->second});
        }
        out.push_back(std::move(pd));
    }
    return out;
}

/// Specialize every q-variable to 0: only the exponent-zero part survives.
inline QClass classical_part(const QClass& x) {
    QClass out;
    for (Basis t : all_basis)
        out[t] = QPolynomial(x[t].coefficient(SurfaceClass{}));
    return out;
}

} // namespace qdp5
