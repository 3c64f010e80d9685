// Command-line front end: every computation of the library, canonical and
// JSON serialization, and the exit-coded consistency checks.
//
// Exit codes: 0 success / check passed, 1 check failed, 2 usage error.

#include <algorithm>
#include <array>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "qdp5/format.hpp"
#include "qdp5/gw.hpp"
#include "qdp5/lattice.hpp"
#include "qdp5/moduli.hpp"
#include "qdp5/qring.hpp"
#include "qdp5/threefold.hpp"

namespace {

using namespace qdp5;

struct Options {
    std::string mode = "literal";
    std::string format = "text";
    int n = 5;
    std::string golden_dir = "golden";
};

Mode parse_mode(const std::string& m) { return m == "strict" ? Mode::Strict : Mode::Literal; }

int cmd_present(const Options& opt) {
    Presentation pres = relations(parse_mode(opt.mode), opt.n);
    if (opt.format == "json") {
        std::cout << presentation_json(pres).dump() << "\n";
    } else {
        for (const std::string& line : presentation_lines(pres)) std::cout << line << "\n";
    }
    return 0;
}

int cmd_qmul(const Options& opt, const std::string& lhs, const std::string& rhs) {
    SurfaceClass d1 = parse_surface_class(lhs);
    SurfaceClass d2 = parse_surface_class(rhs);
    QClass prod = qmul(parse_mode(opt.mode), d1, d2);
    if (opt.format == "json")
        std::cout << qclass_json(prod).dump() << "\n";
    else
        std::cout << qclass_text(prod) << "\n";
    return 0;
}

int cmd_basis(const Options& opt) {
    std::vector<BoundaryIndex> basis = pic_basis(opt.n);
    if (opt.format == "json") {
        nlohmann::json out = nlohmann::json::array();
        for (const BoundaryIndex& ix : basis) out.push_back(ix.label());
        std::cout << out.dump() << "\n";
    } else {
        for (const BoundaryIndex& ix : basis) std::cout << ix.label() << "\n";
    }
    return 0;
}

int cmd_invariants(const Options& opt) {
    // Literal 1-point table over its full support, then the strict
    // dimension-matched counts, both in canonical class order.
    struct LitRow {
        SurfaceClass beta;
        std::string insertion;
        Rational value;
    };
    std::vector<LitRow> lit;
    std::vector<SurfaceClass> support;
    for (int i = 1; i <= 4; ++i) support.push_back(exceptional(i));
    for (std::int64_t h : {1, 2})
        for (unsigned mask = 0; mask < 16; ++mask) support.push_back(h_minus(mask, h));
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    for (const SurfaceClass& beta : support) {
        if (!is_effective(beta)) continue;
        Rational v = one_point_literal(beta, Insertion::point());
        if (!v.is_zero()) lit.push_back({beta, "pt", v});
        for (Basis t : {Basis::H, Basis::E1, Basis::E2, Basis::E3, Basis::E4}) {
            Rational w = one_point_literal(beta, Insertion::divisor(basis_divisor_class(t)));
            if (!w.is_zero()) lit.push_back({beta, basis_name(t), w});
        }
    }
    struct StrictRow {
        SurfaceClass beta;
        std::int64_t m;
        Rational value;
    };
    std::vector<StrictRow> str;
    for (std::int64_t deg = 1; deg <= 4; ++deg)
        for (const SurfaceClass& beta : classes_of_anticanonical_degree(deg)) {
            Rational v = base_count(beta, deg - 1);
            if (!v.is_zero()) str.push_back({beta, deg - 1, v});
        }
    if (opt.format == "json") {
        nlohmann::json jlit = nlohmann::json::array(), jstr = nlohmann::json::array();
        for (const auto& r : lit) {
            auto v = q_display_vector(r.beta);
            jlit.push_back({{"class", {r.beta.d, v[0], v[1], v[2], v[3]}},
                            {"insertion", r.insertion},
                            {"value", r.value.str()}});
        }
        for (const auto& r : str) {
            auto v = q_display_vector(r.beta);
            jstr.push_back({{"class", {r.beta.d, v[0], v[1], v[2], v[3]}},
                            {"points", r.m},
                            {"value", r.value.str()}});
        }
        std::cout << nlohmann::json{{"one_point_literal", jlit}, {"base_count", jstr}}.dump()
                  << "\n";
        return 0;
    }
    std::cout << "# literal 1-point invariants (class, insertion, value)\n";
    for (const auto& r : lit)
        std::cout << "I " << q_display_name(r.beta) << " " << r.insertion << " = " << r.value.str()
                  << "\n";
    std::cout << "# strict point counts (class, points, value)\n";
    for (const auto& r : str)
        std::cout << "N " << q_display_name(r.beta) << " m=" << r.m << " = " << r.value.str()
                  << "\n";
    return 0;
}

int cmd_threefold_cords(const Options& opt) {
    bool all_zero = true;
    std::vector<std::pair<std::string, std::int64_t>> rows;
    for (int a = 1; a <= 5; ++a)
        for (int b = a + 1; b <= 5; ++b) {
            std::int64_t deg = cord_anticanonical_degree(a, b);
            if (deg != 0) all_zero = false;
            rows.emplace_back("l{" + std::to_string(a) + "," + std::to_string(b) + "}", deg);
        }
    if (opt.format == "json") {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& [pair, deg] : rows) out.push_back({{"pair", pair}, {"degree", deg}});
        std::cout << out.dump() << "\n";
    } else {
        for (const auto& [pair, deg] : rows) std::cout << pair << " " << deg << "\n";
    }
    return all_zero ? 0 : 1;
}

int check_corollary1(const Options& opt) {
    std::string path = opt.golden_dir + "/corollary1.txt";
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot open golden file: " << path << "\n";
        return 2;
    }
    std::vector<std::string> golden;
    std::string line;
    while (std::getline(in, line)) golden.push_back(line);
    Presentation pres = relations(Mode::Literal, 5);
    std::vector<std::string> computed = presentation_lines(pres);
    if (golden.size() != computed.size()) {
        std::cerr << "golden file has " << golden.size() << " lines, expected " << computed.size()
                  << "\n";
        return 1;
    }
    bool ok = true;
    for (size_t i = 0; i < computed.size(); ++i) {
        if (computed[i] == golden[i]) {
            std::cout << pres.relations[i].name << ": MATCH\n";
        } else {
            ok = false;
            std::cout << pres.relations[i].name << ": MISMATCH\n";
            std::cerr << "expected: " << golden[i] << "\n";
            std::cerr << "computed: " << computed[i] << "\n";
        }
    }
    return ok ? 0 : 1;
}

int check_associativity() {
    std::vector<AssociativityFailure> failures = check_associativity_strict();
    std::cout << (343 - failures.size()) << "/343 triples associative\n";
    for (const auto& f : failures)
        std::cerr << "associator (" << basis_name(f.a) << "," << basis_name(f.b) << ","
                  << basis_name(f.c) << ") = " << qclass_text(f.difference) << "\n";
    return failures.empty() ? 0 : 1;
}

int check_grading_cmd() {
    std::vector<GradingViolation> strict = check_grading(Mode::Strict);
    std::cout << "strict: " << strict.size() << " violations\n";
    for (const auto& v : strict)
        std::cerr << v.pair_label << " term " << basis_name(v.basis) << " "
                  << q_display_name(v.exponent) << " degree " << v.term_degree << " expected "
                  << v.expected_degree << "\n";
    std::vector<GradingViolation> literal = check_grading(Mode::Literal);
    std::cout << "literal: " << literal.size() << " violations (expected inhomogeneity)\n";
    bool flagged = false;
    for (const auto& v : literal)
        if (v.pair_label == "d{2,3}*d{3,4}" && v.exponent == hyperplane()) flagged = true;
    std::cout << "literal flags q^{1,(0,0,0,0)} in d{2,3}*d{3,4}: " << (flagged ? "yes" : "no")
              << "\n";
    return (strict.empty() && flagged) ? 0 : 1;
}

int check_keel() {
    bool ok = true;
    for (const auto& [a, b] : keel_vanishing_pairs_5()) {
        std::int64_t v = intersect(kapranov_image(a), kapranov_image(b));
        if (v != 0) ok = false;
        std::cout << a.label() << "*" << b.label() << " = " << v << "\n";
    }
    return ok ? 0 : 1;
}

int check_cone() {
    bool ok = true;
    auto report = [&](const std::string& what, bool pass) {
        std::cout << what << ": " << (pass ? "pass" : "FAIL") << "\n";
        if (!pass) ok = false;
    };
    std::set<SurfaceClass> gens(cone_generators().begin(), cone_generators().end());
    report("minus_one_curves equals the ten generators", minus_one_curves() == gens);
    report("degree-1 classes equal the ten generators", classes_of_anticanonical_degree(1) == gens);
    size_t n2 = classes_of_anticanonical_degree(2).size();
    std::cout << "degree-2 class count: " << n2 << "\n";
    report("degree-2 class count is 15", n2 == 15);
    std::mt19937 rng(20240517);
    std::uniform_int_distribution<int> pick(0, 9);
    std::uniform_int_distribution<std::int64_t> total_dist(0, 6);
    bool degrees_ok = true;
    for (int trial = 0; trial < 1000; ++trial) {
        std::array<std::int64_t, 10> c{};
        std::int64_t total = total_dist(rng);
        for (std::int64_t k = 0; k < total; ++k) c[pick(rng)]++;
        SurfaceClass beta;
        for (int i = 0; i < 10; ++i) beta += c[i] * cone_generators()[i];
        std::int64_t lines = 0;
        for (int i = 0; i < 6; ++i) lines += c[i];
        if (anticanonical_degree(beta) != total || beta.d != lines) degrees_ok = false;
    }
    report("random combinations satisfy the degree identities", degrees_ok);
    return ok ? 0 : 1;
}

int cmd_report(const Options& opt) {
    std::vector<PairDiscrepancy> report = discrepancy_report();
    if (opt.format == "json") {
        nlohmann::json out = nlohmann::json::array();
        auto jterm = [](const DisplayTerm& t) -> nlohmann::json {
            auto e = q_display_vector(t.exponent);
            nlohmann::json j{{"q", {t.exponent.d, e[0], e[1], e[2], e[3]}}};
            switch (t.kind) {
            case DisplayTerm::Kind::Scalar:
                j["kind"] = "scalar";
                j["coeff"] = t.scalar.str();
                break;
            case DisplayTerm::Kind::DivisorClass:
                j["kind"] = "class";
                j["class"] = divisor_literal(t.divisor);
                break;
            case DisplayTerm::Kind::Point:
                j["kind"] = "pt";
                j["coeff"] = t.scalar.str();
                break;
            }
            return j;
        };
        for (const PairDiscrepancy& pd : report) {
            nlohmann::json jp{{"pair", pd.pair_label}};
            nlohmann::json lo = nlohmann::json::array(), so = nlohmann::json::array();
            for (const auto& t : pd.literal_only) lo.push_back(jterm(t));
            for (const auto& t : pd.strict_only) so.push_back(jterm(t));
            jp["literal_only"] = lo;
            jp["strict_only"] = so;
            nlohmann::json sh = nlohmann::json::array();
            for (const SurfaceClass& e : pd.shared_exponents) {
                auto v = q_display_vector(e);
                sh.push_back({e.d, v[0], v[1], v[2], v[3]});
            }
            jp["shared_exponents"] = sh;
            nlohmann::json mm = nlohmann::json::array();
            for (const auto& m : pd.class_mismatches)
                mm.push_back({{"q", q_display_name(m[0])},
                              {"literal", divisor_literal(m[1])},
                              {"strict", divisor_literal(m[2])}});
            jp["class_mismatches"] = mm;
            out.push_back(jp);
        }
        std::cout << out.dump() << "\n";
        return 0;
    }
    auto print_term = [](const DisplayTerm& t) {
        std::cout << "    " << q_display_name(t.exponent) << " ";
        switch (t.kind) {
        case DisplayTerm::Kind::Scalar:
            std::cout << "scalar " << t.scalar.str();
            break;
        case DisplayTerm::Kind::DivisorClass:
            std::cout << "class " << divisor_literal(t.divisor);
            break;
        case DisplayTerm::Kind::Point:
            std::cout << "pt " << t.scalar.str();
            break;
        }
        std::cout << "\n";
    };
    for (const PairDiscrepancy& pd : report) {
        std::cout << pd.pair_label << "\n";
        std::cout << "  literal-only (" << pd.literal_only.size() << "):\n";
        for (const auto& t : pd.literal_only) print_term(t);
        std::cout << "  strict-only (" << pd.strict_only.size() << "):\n";
        for (const auto& t : pd.strict_only) print_term(t);
        std::cout << "  shared exponents (" << pd.shared_exponents.size() << "):";
        for (const SurfaceClass& e : pd.shared_exponents) std::cout << " " << q_display_name(e);
        std::cout << "\n";
        std::cout << "  class mismatches (" << pd.class_mismatches.size() << "):\n";
        for (const auto& m : pd.class_mismatches)
            std::cout << "    " << q_display_name(m[0]) << " literal " << divisor_literal(m[1])
                      << " vs strict " << divisor_literal(m[2]) << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum cohomology of the 4-point blow-up of the plane"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--mode", opt.mode, "Product mode")
        ->check(CLI::IsMember({"literal", "strict"}))
        ->capture_default_str();
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    CLI::App* present = app.add_subcommand("present", "Print the ring presentation");
    present->add_option("--n", opt.n, "Number of marked points")->capture_default_str();

    CLI::App* qmul_cmd = app.add_subcommand("qmul", "Quantum product of two divisor classes");
    std::string lhs, rhs;
    qmul_cmd->add_option("lhs", lhs, "First class, e.g. H-E1-E4 or d{2,3}")->required();
    qmul_cmd->add_option("rhs", rhs, "Second class")->required();

    CLI::App* basis = app.add_subcommand("basis", "Print the boundary basis of the Picard group");
    basis->add_option("--n", opt.n, "Number of marked points")->required();

    app.add_subcommand("invariants", "Dump the invariant tables");

    CLI::App* threefold = app.add_subcommand("threefold", "Threefold intersection computations");
    std::string tf_what;
    threefold->add_option("what", tf_what, "cords")->required()->check(CLI::IsMember({"cords"}));

    CLI::App* check = app.add_subcommand("check", "Run a named consistency check");
    std::string check_what;
    check->add_option("what", check_what, "Check name")
        ->required()
        ->check(CLI::IsMember({"corollary1", "associativity", "grading", "keel", "cone"}));
    check->add_option("--golden", opt.golden_dir, "Golden file directory")->capture_default_str();

    CLI::App* report = app.add_subcommand("report", "Structured reports");
    std::string report_what;
    report->add_option("what", report_what, "discrepancies")
        ->required()
        ->check(CLI::IsMember({"discrepancies"}));

    // Let --mode / --format appear after the subcommand as well.
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (present->parsed()) return cmd_present(opt);
        if (qmul_cmd->parsed()) return cmd_qmul(opt, lhs, rhs);
        if (basis->parsed()) return cmd_basis(opt);
        if (app.get_subcommand("invariants")->parsed()) return cmd_invariants(opt);
        if (threefold->parsed()) return cmd_threefold_cords(opt);
        if (report->parsed()) return cmd_report(opt);
        if (check->parsed()) {
            if (check_what == "corollary1") return check_corollary1(opt);
            if (check_what == "associativity") return check_associativity();
            if (check_what == "grading") return check_grading_cmd();
            if (check_what == "keel") return check_keel();
            return check_cone();
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
