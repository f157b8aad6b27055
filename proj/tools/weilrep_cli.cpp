// weilrep: command-line front end.
//
// Exit codes: 0 success, 1 domain error, 2 parse error, 3 verification failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "weilrep/curves.hpp"
#include "weilrep/errors.hpp"
#include "weilrep/fixtures.hpp"
#include "weilrep/io.hpp"
#include "weilrep/reconstruct.hpp"
#include "weilrep/rootnumbers.hpp"

using namespace weilrep;
using nlohmann::ordered_json;

namespace {

enum class Format { text, json };

struct Out {
    Format format = Format::text;
    ordered_json json = ordered_json::object();

    void line(const std::string& s) const {
        if (format == Format::text) std::cout << s << "\n";
    }
    void raw(const std::string& s) const {
        if (format == Format::text) std::cout << s;
    }
    void finish() const {
        if (format == Format::json) std::cout << json.dump(2) << "\n";
    }
};

ordered_json document_json(const io::Document& doc) {
    ordered_json lines = ordered_json::array();
    for (const auto& l : doc.lines) lines.push_back({l.key, l.value});
    return {{"kind", doc.kind}, {"lines", lines}};
}

ordered_json factor_json(const EulerFactor& f) {
    ordered_json j = {{"polynomial", f.poly.pretty()}};
    if (f.roots) {
        ordered_json roots = ordered_json::array();
        for (const auto& r : f.roots->roots()) roots.push_back(r.str());
        j["roots"] = roots;
    }
    return j;
}

std::string value_str(const Cyclotomic& c) { return c.is_rational() ? c.to_rational().get_str() : c.str(); }

// "(1 - T)^2", "(1 + 2T)(1 - 3T)"; empty when no roots are certified.
std::string factored(const EulerFactor& f) {
    if (!f.roots || f.roots->empty()) return "";
    std::string out;
    const auto& roots = f.roots->roots();
    for (std::size_t i = 0; i < roots.size();) {
        std::size_t j = i;
        while (j < roots.size() && roots[j] == roots[i]) ++j;
        out += "(" + ExactPolynomial::linear_factor(roots[i]).pretty() + ")";
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

std::string load(const std::string& arg) {
    const std::string prefix = "fixture:";
    if (arg.rfind(prefix, 0) == 0) {
        return io::catalog_document(arg.substr(prefix.size()));
    }
    std::ifstream in(arg);
    if (!in) throw DomainError("cannot read '" + arg + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

io::Document load_document(const std::string& arg) { return io::parse_document(load(arg)); }

// ---------------------------------------------------------------------------
// Commands

int cmd_euler(Out& out, const std::string& rep_arg, const std::string& desc_arg) {
    io::RepFile file = io::parse_rep(load_document(rep_arg));
    FieldDescriptor field = io::parse_descriptor(file.rep.quotient(), desc_arg);
    EulerFactor f = file.monodromy ? wd_euler_factor({file.rep, *file.monodromy}, field) : euler_factor(file.rep, field);
    out.line(f.poly.pretty());
    if (f.roots) out.line("roots " + f.roots->str());
    out.json = factor_json(f);
    out.json["descriptor"] = field.str();
    return 0;
}

std::unique_ptr<EulerOracle> load_oracle(const std::string& arg) {
    if (arg == "fixture:genus2_13_curves") return std::make_unique<CurveOracle>(fixtures::genus2_13_curve_oracle());
    return std::make_unique<TableOracle>(io::parse_table(load_document(arg)));
}

int cmd_reconstruct(Out& out, const std::string& table_arg, bool trace) {
    auto oracle = load_oracle(table_arg);
    ReconstructOptions options;
    if (trace) options.trace = [](const std::string& s) { std::cerr << "trace: " << s << "\n"; };
    ReconstructionResult r = reconstruct(*oracle, oracle->quotient(), options);
    io::Document rep = io::rep_document(r.rep);
    io::Document log = io::query_log_document(r.query_log);
    out.raw(io::print_document(rep));
    out.raw(io::print_document(log));
    out.json = {{"rep", document_json(rep)}, {"queries", ordered_json::array()}};
    for (const auto& q : r.query_log) {
        ordered_json j = factor_json(q.answer);
        j["descriptor"] = q.field.str();
        out.json["queries"].push_back(j);
    }
    return 0;
}

// First descriptor where the two reps have different local factors.
std::optional<FieldDescriptor> witness(const WeilRep& a, const EulerOracle& oracle) {
    for (const auto& d : all_descriptors(a.quotient())) {
        if (!(euler_factor(a, d) == oracle.query(d))) return d;
    }
    return std::nullopt;
}

int cmd_roundtrip(Out& out, const std::string& rep_arg, const std::string& table_arg, std::optional<std::uint64_t> seed,
                  int count) {
    if (seed) {
        int pass = 0;
        auto corpus = generate_corpus(*seed, count);
        ordered_json failures = ordered_json::array();
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            RepOracle oracle(corpus[i]);
            auto r = reconstruct(oracle, corpus[i].quotient());
            if (equal(r.rep, canonical_decomposition(corpus[i]))) {
                ++pass;
            } else {
                failures.push_back(i);
                out.line("FAIL corpus[" + std::to_string(i) + "] " + corpus[i].str());
            }
        }
        bool ok = pass == static_cast<int>(corpus.size());
        out.line(std::string(ok ? "PASS" : "FAIL") + " " + std::to_string(pass) + "/" + std::to_string(corpus.size()) +
                 " (seed " + std::to_string(*seed) + ")");
        out.json = {{"result", ok ? "PASS" : "FAIL"}, {"passed", pass}, {"total", corpus.size()}, {"failures", failures}};
        return ok ? 0 : 3;
    }
    if (rep_arg.empty()) throw DomainError("roundtrip needs a rep or --seed");
    io::RepFile file = io::parse_rep(load_document(rep_arg));
    const WeilRep& rep = file.rep;
    std::unique_ptr<EulerOracle> source;
    if (table_arg.empty()) {
        source = std::make_unique<RepOracle>(rep);
    } else {
        TableOracle parsed = io::parse_table(load_document(table_arg));
        // Re-read the table against the rep's quotient so descriptors are comparable.
        std::vector<TableEntry> entries;
        for (const auto& e : parsed.entries()) entries.push_back({io::parse_descriptor(rep.quotient(), e.field.str()), e.answer});
        source = std::make_unique<TableOracle>(rep.quotient(), std::move(entries));
    }
    ReconstructionResult r = reconstruct(*source, rep.quotient());
    if (equal(r.rep, rep)) {
        out.line("PASS");
        out.json = {{"result", "PASS"}, {"queries", r.query_log.size()}};
        return 0;
    }
    auto w = witness(rep, RepOracle(r.rep));
    std::string where = w ? w->str() : "none";
    out.line("FAIL witness " + where);
    if (w) {
        out.line("  rep    " + euler_factor(rep, *w).poly.pretty());
        out.line("  oracle " + euler_factor(r.rep, *w).poly.pretty());
    }
    out.json = {{"result", "FAIL"}, {"witness", where}};
    return 3;
}

int cmd_count(Out& out, const std::string& curve_arg, int degree, bool affine) {
    io::CurveSpec spec = io::parse_curve(load_document(curve_arg));
    bool elliptic = spec.model == io::CurveSpec::Model::elliptic;
    if (degree <= 0) degree = elliptic ? 1 : 2;
    auto counts = io::curve_counts(spec, degree, affine ? CountMode::affine_only : CountMode::projective);
    out.json = {{"counts", ordered_json::array()}};
    for (std::size_t i = 0; i < counts.size(); ++i) {
        const auto& c = counts[i];
        out.line("N_" + std::to_string(i + 1) + " = " + std::to_string(c.count) + "  (q = " + std::to_string(c.q) + ")");
        out.json["counts"].push_back({{"q", c.q}, {"count", c.count}});
    }
    if (elliptic) {
        long a = counts[0].q + 1 - counts[0].count;
        out.line("a = " + std::to_string(a));
        out.json["a"] = a;
    }
    return 0;
}

int cmd_zeta(Out& out, const std::string& curve_arg) {
    EulerFactor f = io::curve_zeta(io::parse_curve(load_document(curve_arg)));
    out.line(f.poly.pretty());
    std::string fac = factored(f);
    if (!fac.empty()) out.line("factored " + fac);
    out.json = factor_json(f);
    if (!fac.empty()) out.json["factored"] = fac;
    return 0;
}

IntPoly parse_quartic(const std::string& arg) {
    ExactPolynomial p = ExactPolynomial::parse(arg);
    IntPoly out;
    for (const auto& c : p.coeffs()) {
        Rational r = c.to_rational();
        if (r.get_den() != 1) throw ParseError("quartic coefficients must be integers");
        out.push_back(r.get_num());
    }
    return out;
}

int cmd_stoll(Out& out, const std::string& arg) {
    IntPoly f = parse_quartic(arg);
    StollVerdict v = stoll_criterion(f);
    out.line("f = " + int_poly_str(f, 'T'));
    out.line("modified resultant = " + v.factorization.monic_str());
    ordered_json offending = ordered_json::array();
    for (const auto& g : v.constant_term_one) offending.push_back(int_poly_str(g));
    if (v.holds()) {
        out.line("absolutely simple: criterion holds");
    } else {
        std::string list;
        for (const auto& g : v.constant_term_one) list += (list.empty() ? "" : ", ") + int_poly_str(g);
        out.line("criterion fails: monic factors with constant term 1: " + list);
    }
    out.json = {{"f", int_poly_str(f, 'T')},
                {"resultant", int_poly_str(v.resultant)},
                {"factorization", v.factorization.monic_str()},
                {"holds", v.holds()},
                {"constant_term_one", offending}};
    return 0;
}

int cmd_rootnumber(Out& out, const std::string& arg, const std::string& chi_arg) {
    TwistData data = io::parse_root_data(load_document(arg));
    std::vector<std::pair<std::string, QuadCharDatum>> cases;
    if (chi_arg.empty() || chi_arg == "all") {
        cases = {{"trivial", {true, 1}}, {"even", {false, 1}}, {"odd", {false, -1}}};
    } else if (chi_arg == "trivial") {
        cases = {{"trivial", {true, 1}}};
    } else if (chi_arg == "even") {
        cases = {{"even", {false, 1}}};
    } else if (chi_arg == "odd") {
        cases = {{"odd", {false, -1}}};
    } else {
        throw ParseError("--chi must be trivial, even, odd or all");
    }
    out.json = {{"twists", ordered_json::array()}};
    for (const auto& [name, chi] : cases) {
        RootNumberReport r = j_twist_root_number(chi, data);
        std::string ledger;
        ordered_json places = ordered_json::object();
        for (const auto& pv : r.ledger) {
            ledger += (ledger.empty() ? "" : ", ") + pv.place + ": " + value_str(pv.value);
            places[pv.place] = value_str(pv.value);
        }
        out.line("chi " + name + " (" + chi.str() + "): " + value_str(r.value) + "  {" + ledger + "}");
        out.json["twists"].push_back({{"chi", name}, {"value", value_str(r.value)}, {"places", places}});
    }
    return 0;
}

// ---------------------------------------------------------------------------
// Worked examples

struct Report {
    Out& out;
    bool ok = true;
    ordered_json checks = ordered_json::array();

    void check(const std::string& what, bool passed, const std::string& detail = "") {
        ok = ok && passed;
        out.line(std::string(passed ? "ok   " : "FAIL ") + what + (detail.empty() ? "" : ": " + detail));
        checks.push_back({{"check", what}, {"passed", passed}, {"detail", detail}});
    }
};

void verify_3_1(Report& rep) {
    auto q = fixtures::zhat_c4();
    TableOracle table = fixtures::example_3_1_table();
    ReconstructionResult r = reconstruct(table, q);
    rep.check("reconstruction equals the fixture", equal(r.rep, fixtures::example_3_1()),
              std::to_string(r.query_log.size()) + " queries");
    int g = q->group()->parse_element("g");
    Matrix rg = evaluate(r.rep, {g, 0});
    Matrix phi_inv = evaluate(r.rep, {0, -1});
    rep.out.line("  rho(g)     = " + rg.str());
    rep.out.line("  rho(Phi^-1) = " + phi_inv.str());
    const Cyclotomic i = Cyclotomic::root_of_unity(4);
    bool paired = true;
    for (int k = 0; k < rg.rows(); ++k) {
        if (rg(k, k) == i) paired = paired && phi_inv(k, k) == Cyclotomic(-2) + Cyclotomic(3) * i;
        if (rg(k, k) == -i) paired = paired && phi_inv(k, k) == Cyclotomic(-2) - Cyclotomic(3) * i;
    }
    rep.check("Phi^-1 acts by -2+3i on the i-eigenspace of g", paired);
    rep.check("P over L", euler_factor(r.rep, fixtures::example_3_1_L()).poly.pretty() == "1 + 4T + 13T^2",
              euler_factor(r.rep, fixtures::example_3_1_L()).poly.pretty());
    rep.check("P over L'", euler_factor(r.rep, fixtures::example_3_1_L_prime()).poly.pretty() == "1 - 6T + 13T^2",
              euler_factor(r.rep, fixtures::example_3_1_L_prime()).poly.pretty());
}

void verify_3_2(Report& rep) {
    auto q = fixtures::sd16();
    TableOracle table = fixtures::example_3_2_table();
    auto l = fixtures::example_3_2_L();
    rep.check("table answer over <(s^5,1)>", table.query(l).poly.pretty() == "1 + " + fixtures::sqrt_minus_2().str() + "T - T^2",
              table.query(l).poly.pretty());
    ReconstructionResult r = reconstruct(table, q);
    WeilRep rho_prime(q);
    rho_prime.add("rho'", Twist(1));
    rep.check("A = rho", equal(r.rep, fixtures::example_3_2_untwisted()));
    rep.check("A != rho'", !equal(r.rep, rho_prime));
    WeilRep twisted = twist(r.rep, Twist(fixtures::sqrt_minus_2()).inverse());
    std::string p = euler_factor(twisted, l).poly.pretty();
    rep.check("twist by eta^-1 gives 1 - 2T + 2T^2", p == "1 - 2T + 2T^2", p);
    rep.check("twist equals the fixture", equal(twisted, fixtures::example_3_2()));
}

void verify_4(Report& rep) {
    // (b) counts and the Stoll criterion
    CountRecord rec = genus2_counts(fixtures::genus2_curve(), 3);
    std::string p3 = genus2_lpoly_from_counts(rec).poly.pretty();
    rep.check("counts over F3, F9", rec.n1 == 3 && rec.n2 == 13, std::to_string(rec.n1) + ", " + std::to_string(rec.n2));
    rep.check("local factor at 3", p3 == "1 - T + 2T^2 - 3T^3 + 9T^4", p3);
    StollVerdict v = stoll_criterion(fixtures::genus2_quartic());
    rep.check("modified resultant", v.factorization.monic_str() ==
                                        "6561 (x^4 + 4/3x^3 + x^2 + 4/3x + 1)^2(x^4 + x^3 + 16/9x^2 + x + 1)",
              v.factorization.monic_str());
    rep.check("Stoll criterion holds", v.holds());
    // (c) the fiber at 2633
    auto w = fixtures::genus2_2633();
    std::string p2633 = wd_euler_factor(w, FieldDescriptor::base(w.rho.quotient())).poly.pretty();
    long q = 2633;
    std::string pcount = lpoly_from_counts(q, {split_node_fiber_count(q, 2), split_node_fiber_count(q * q, 2)}, 2).pretty();
    rep.check("factor at 2633", p2633 == "1 - 2T + T^2" && pcount == p2633, p2633);
    // (d) the fiber at 13
    FqField f13 = fq_build(13, 1);
    auto fiber = fixtures::fiber_13();
    std::string e1 = euler_factor_good(fiber.e1, f13).poly.pretty();
    std::string e2 = euler_factor_good(fiber.e2, f13).poly.pretty();
    std::string e2p = euler_factor_good(fiber.e2_prime, f13).poly.pretty();
    rep.check("components at 13", e1 == "1 + 4T + 13T^2" && e2 == e1 && e2p == "1 - 6T + 13T^2", e1 + ", " + e2 + ", " + e2p);
    CurveOracle oracle = fixtures::genus2_13_curve_oracle();
    ExactPolynomial a = ExactPolynomial::parse("1 + 4T + 13T^2");
    ExactPolynomial b = ExactPolynomial::parse("1 - 6T + 13T^2");
    rep.check("assembled over L", oracle.query(fixtures::example_3_1_L()).poly == a * a);
    rep.check("assembled over L'", oracle.query(fixtures::example_3_1_L_prime()).poly == a * b);
    ReconstructionResult r = reconstruct(oracle, fixtures::zhat_c4());
    rep.check("reconstruction at 13 equals the fixture", equal(r.rep, fixtures::genus2_13()));
    // (e) root numbers
    bool all_minus = true;
    for (const QuadCharDatum& chi : {QuadCharDatum{true, 1}, QuadCharDatum{true, -1}, QuadCharDatum{false, 1},
                                     QuadCharDatum{false, -1}}) {
        all_minus = all_minus && j_twist_root_number(chi).value == Cyclotomic(-1);
    }
    rep.check("root number of every quadratic twist is -1", all_minus);
}

int cmd_verify_example(Out& out, const std::string& name) {
    Report rep{out};
    if (name == "3.1") {
        verify_3_1(rep);
    } else if (name == "3.2") {
        verify_3_2(rep);
    } else if (name == "4") {
        verify_4(rep);
    } else {
        throw DomainError("unknown example '" + name + "' (expected 3.1, 3.2 or 4)");
    }
    out.line(rep.ok ? "PASS" : "FAIL");
    out.json = {{"example", name}, {"result", rep.ok ? "PASS" : "FAIL"}, {"checks", rep.checks}};
    return rep.ok ? 0 : 3;
}

int cmd_fixture(Out& out, const std::string& action, const std::string& name) {
    if (action == "list") {
        out.json = ordered_json::array();
        for (const auto& k : io::catalog_names()) {
            out.line(k);
            out.json.push_back(k);
        }
        return 0;
    }
    if (action != "dump") throw DomainError("fixture action must be list or dump");
    std::string text = io::catalog_document(name);
    out.raw(text);
    out.json = document_json(io::parse_document(text));
    return 0;
}

int cmd_reprint(Out& out, const std::string& arg) {
    std::string text = io::reprint(load(arg));
    out.raw(text);
    out.json = document_json(io::parse_document(text));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Local Galois representations from Euler factors"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

    std::string rep_arg, desc_arg, table_arg, curve_arg, data_arg, chi_arg, example, action, name, quartic;
    bool trace = false, affine = false;
    std::optional<std::uint64_t> seed;
    int count = 200, degree = 0;

    auto* euler = app.add_subcommand("euler", "Local polynomial of a rep over a descriptor");
    euler->add_option("rep", rep_arg, "Rep file or fixture:<name>")->required();
    euler->add_option("descriptor", desc_arg, "desc(M; (word,m), ...), base or top")->required();

    auto* recon = app.add_subcommand("reconstruct", "Reconstruct a rep from an oracle table");
    recon->add_option("table", table_arg, "Oracle-table file or fixture:<name>")->required();
    recon->add_flag("--trace", trace, "Print each query and class as it is processed");

    auto* round = app.add_subcommand("roundtrip", "Check that reconstruction recovers a rep");
    round->add_option("rep", rep_arg, "Rep file or fixture:<name>");
    round->add_option("--table", table_arg, "Oracle table to reconstruct from instead of the rep itself");
    round->add_option("--seed", seed, "Run a random corpus instead");
    round->add_option("--count", count, "Corpus size")->check(CLI::PositiveNumber);

    auto* cnt = app.add_subcommand("count", "Point counts of a curve");
    cnt->add_option("curve", curve_arg, "Curve file or fixture:<name>")->required();
    cnt->add_option("--degree", degree, "Count over F_q^i for i up to this degree");
    cnt->add_flag("--affine", affine, "Affine points only (singular models allowed)");

    auto* zeta = app.add_subcommand("zeta", "Local L-polynomial of a curve");
    zeta->add_option("curve", curve_arg, "Curve file or fixture:<name>")->required();

    auto* stoll = app.add_subcommand("stoll", "Stoll's absolute-simplicity criterion for a genus-2 factor");
    stoll->add_option("quartic", quartic, "Integer quartic, e.g. \"1 - T + 2T^2 - 3T^3 + 9T^4\"")->required();

    auto* root = app.add_subcommand("rootnumber", "Root numbers of quadratic twists");
    root->add_option("data", data_arg, "Root-data file or fixture:<name>")->required();
    root->add_option("--chi", chi_arg, "trivial, even, odd or all");

    auto* verify = app.add_subcommand("verify-example", "Replay a worked example end to end");
    verify->add_option("name", example, "3.1, 3.2 or 4")->required();

    auto* fixture = app.add_subcommand("fixture", "List or print built-in fixtures");
    fixture->add_option("action", action, "list or dump")->required();
    fixture->add_option("name", name, "Fixture name");

    auto* reprint = app.add_subcommand("reprint", "Parse a document and print it canonically");
    reprint->add_option("file", data_arg, "Any weilrep v1 document")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    Out out;
    out.format = format == "json" ? Format::json : Format::text;
    int rc = 0;
    try {
        if (*euler) rc = cmd_euler(out, rep_arg, desc_arg);
        if (*recon) rc = cmd_reconstruct(out, table_arg, trace);
        if (*round) rc = cmd_roundtrip(out, rep_arg, table_arg, seed, count);
        if (*cnt) rc = cmd_count(out, curve_arg, degree, affine);
        if (*zeta) rc = cmd_zeta(out, curve_arg);
        if (*stoll) rc = cmd_stoll(out, quartic);
        if (*root) rc = cmd_rootnumber(out, data_arg, chi_arg);
        if (*verify) rc = cmd_verify_example(out, example);
        if (*fixture) rc = cmd_fixture(out, action, name);
        if (*reprint) rc = cmd_reprint(out, data_arg);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const VerificationError& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return 3;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    out.finish();
    return rc;
}
