// Canonical text and JSON serialization, and parsing of class literals.
//
// The canonical term order is basis-major (1 < H < E1 < E2 < E3 < E4 < pt)
// with q-exponents sorted lexicographically by (a, b1..b4); rationals are
// printed in lowest terms.  Identical data always serializes to identical
// bytes, which is what the golden-file comparison relies on.
#pragma once

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "qdp5/qring.hpp"

namespace qdp5 {

struct TextTerm {
    Rational coeff;
    Basis basis;
    SurfaceClass exponent;
};

/// Flatten a QClass into canonically ordered terms.
inline std::vector<TextTerm> canonical_terms(const QClass& x) {
    std::vector<TextTerm> out;
    for (Basis t : all_basis)
        for (const auto& [beta, c] : x[t].terms()) out.push_back({c, t, beta});
    return out;
}

namespace detail {

inline std::string term_body(const TextTerm& t) {
    std::vector<std::string> parts;
    Rational mag = t.coeff < Rational(0) ? -t.coeff : t.coeff;
    bool has_basis = t.basis != Basis::One;
    bool has_q = !t.exponent.is_zero();
    if (mag != Rational(1) || (!has_basis && !has_q)) parts.push_back(mag.str());
    if (has_basis) parts.push_back(basis_name(t.basis));
    if (has_q) parts.push_back(q_display_name(t.exponent));
    std::string body;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) body += " ";
        body += parts[i];
    }
    return body;
}

inline void append_terms(std::string& out, const std::vector<TextTerm>& terms, bool leading_sign) {
    bool first = !leading_sign;
    for (const TextTerm& t : terms) {
        bool neg = t.coeff < Rational(0);
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        out += term_body(t);
    }
}

} // namespace detail

/// Canonical one-line rendering of a module element.
inline std::string qclass_text(const QClass& x) {
    std::vector<TextTerm> terms = canonical_terms(x);
    if (terms.empty()) return "0";
    std::string out;
    detail::append_terms(out, terms, false);
    return out;
}

/// Canonical one-line rendering of a relation: the generator-pair
/// monomial minus every term of the quantum product.
inline std::string relation_text(const Relation& rel) {
    std::string out = rel.name + " = " + rel.lhs1.label() + "*" + rel.lhs2.label();
    std::vector<TextTerm> terms = canonical_terms(rel.product);
    for (TextTerm& t : terms) t.coeff = -t.coeff;
    detail::append_terms(out, terms, true);
    return out;
}

inline std::vector<std::string> presentation_lines(const Presentation& pres) {
    std::vector<std::string> out;
    for (const Relation& rel : pres.relations) out.push_back(relation_text(rel));
    return out;
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

inline nlohmann::json term_json(const TextTerm& t) {
    auto v = q_display_vector(t.exponent);
    return {{"coeff", t.coeff.str()},
            {"basis", basis_name(t.basis)},
            {"q", {t.exponent.d, v[0], v[1], v[2], v[3]}}};
}

inline nlohmann::json qclass_json(const QClass& x) {
    nlohmann::json terms = nlohmann::json::array();
    for (const TextTerm& t : canonical_terms(x)) terms.push_back(term_json(t));
    return {{"terms", terms}};
}

inline nlohmann::json presentation_json(const Presentation& pres) {
    nlohmann::json rels = nlohmann::json::array();
    for (const Relation& rel : pres.relations) {
        nlohmann::json terms = nlohmann::json::array();
        std::vector<TextTerm> ts = canonical_terms(rel.product);
        for (TextTerm& t : ts) {
            t.coeff = -t.coeff;
            terms.push_back(term_json(t));
        }
        rels.push_back({{"name", rel.name},
                        {"pair", {rel.lhs1.label(), rel.lhs2.label()}},
                        {"terms", terms}});
    }
    return {{"mode", pres.mode == Mode::Literal ? "literal" : "strict"}, {"relations", rels}};
}

/// Inverse of the display convention: purely exceptional exponents are
/// printed with positive entries.
inline SurfaceClass exponent_from_display(std::int64_t a, std::array<std::int64_t, 4> v) {
    SurfaceClass beta{a, v};
    if (a == 0)
        for (auto& x : beta.b) x = -x;
    return beta;
}

inline TextTerm term_from_json(const nlohmann::json& j) {
    TextTerm t;
    std::string coeff = j.at("coeff").get<std::string>();
    auto slash = coeff.find('/');
    if (slash == std::string::npos)
        t.coeff = Rational(std::stoll(coeff));
    else
        t.coeff = Rational(std::stoll(coeff.substr(0, slash)), std::stoll(coeff.substr(slash + 1)));
    std::string basis = j.at("basis").get<std::string>();
    bool found = false;
    for (Basis b : all_basis)
        if (basis == basis_name(b)) {
            t.basis = b;
            found = true;
        }
    if (!found) throw std::invalid_argument("unknown basis element: " + basis);
    const auto& q = j.at("q");
    t.exponent = exponent_from_display(
        q.at(0).get<std::int64_t>(),
        {q.at(1).get<std::int64_t>(), q.at(2).get<std::int64_t>(), q.at(3).get<std::int64_t>(),
         q.at(4).get<std::int64_t>()});
    return t;
}

inline QClass qclass_from_json(const nlohmann::json& j) {
    QClass x;
    for (const auto& jt : j.at("terms")) {
        TextTerm t = term_from_json(jt);
        x[t.basis].add(t.exponent, t.coeff);
    }
    return x;
}

// ---------------------------------------------------------------------------
// Class literals
// ---------------------------------------------------------------------------

/// Render a lattice class in the H/E literal notation, e.g. "H-E1-E2",
/// "2H-E1+E3", "-E4", "0".  Inverse of parse_surface_class.
inline std::string divisor_literal(const SurfaceClass& c) {
    std::string out;
    auto append = [&](std::int64_t coeff, const std::string& sym) {
        if (coeff == 0) return;
        if (coeff < 0)
            out += "-";
        else if (!out.empty())
            out += "+";
        std::int64_t mag = coeff < 0 ? -coeff : coeff;
        if (mag != 1) out += std::to_string(mag);
        out += sym;
    };
    append(c.d, "H");
    for (int i = 0; i < 4; ++i) append(-c.b[i], "E" + std::to_string(i + 1));
    return out.empty() ? "0" : out;
}

/// Parse literals like "H-E1-E4", "2H-E1-E2-E3-E4", "E3", "0", or a
/// boundary label "d{1,5}" (resolved through the n = 5 dictionary).
inline SurfaceClass parse_surface_class(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty class literal");
    if (text == "0") return SurfaceClass{};
    if (text.rfind("d{", 0) == 0) {
        if (text.back() != '}') throw std::invalid_argument("malformed boundary label: " + text);
        std::set<int> labels;
        std::string body = text.substr(2, text.size() - 3);
        std::stringstream ss(body);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
                throw std::invalid_argument("malformed boundary label: " + text);
            labels.insert(std::stoi(item));
        }
        return kapranov_image(BoundaryIndex(5, labels));
    }
    SurfaceClass out;
    size_t i = 0;
    bool any = false;
    while (i < text.size()) {
        std::int64_t sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
        } else if (any) {
            throw std::invalid_argument("malformed class literal: " + text);
        }
        std::int64_t mag = 1;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            mag = std::stoll(text.substr(i, j - i));
            i = j;
        }
        if (i >= text.size()) throw std::invalid_argument("malformed class literal: " + text);
        if (text[i] == 'H') {
            out += sign * mag * hyperplane();
            ++i;
        } else if (text[i] == 'E' && i + 1 < text.size() && text[i + 1] >= '1' &&
                   text[i + 1] <= '4') {
            out += sign * mag * exceptional(text[i + 1] - '0');
            i += 2;
        } else {
            throw std::invalid_argument("malformed class literal: " + text);
        }
        any = true;
    }
    return out;
}

} // namespace qdp5
