// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "weilrep/curves.hpp"
#include "weilrep/errors.hpp"
#include "weilrep/fixtures.hpp"
#include "weilrep/group.hpp"
#include "weilrep/reconstruct.hpp"
#include "weilrep/rootnumbers.hpp"

using namespace weilrep;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string pretty(const EulerFactor& f) { return f.poly.pretty(); }

Outcome euler_regression() {
    WeilRep rho = fixtures::example_3_1();
    std::string l = pretty(euler_factor(rho, fixtures::example_3_1_L()));
    std::string lp = pretty(euler_factor(rho, fixtures::example_3_1_L_prime()));
    return {l == "1 + 4T + 13T^2" && lp == "1 - 6T + 13T^2", "L: " + l + "; L': " + lp};
}

Outcome reconstruct_3_1() {
    auto q = fixtures::zhat_c4();
    TableOracle table = fixtures::example_3_1_table();
    if (table.entries().size() != 3) return {false, "table has " + std::to_string(table.entries().size()) + " entries"};
    ReconstructionResult r = reconstruct(table, q);
    int g = q->group()->parse_element("g");
    Matrix rg = evaluate(r.rep, {g, 0});
    Matrix phi_inv = evaluate(r.rep, {0, -1});
    const Cyclotomic i = Cyclotomic::root_of_unity(4);
    const Cyclotomic a = Cyclotomic(-2) + Cyclotomic(3) * i;
    // Diagonal in a common basis; pair each g-eigenvalue with its Phi^-1 eigenvalue.
    bool diagonal = rg.rows() == 2 && rg(0, 1).is_zero() && rg(1, 0).is_zero() && phi_inv(0, 1).is_zero() &&
                    phi_inv(1, 0).is_zero();
    bool paired = diagonal;
    for (int k = 0; diagonal && k < 2; ++k) {
        if (rg(k, k) == i) paired = paired && phi_inv(k, k) == a;
        else if (rg(k, k) == -i) paired = paired && phi_inv(k, k) == a.conj();
        else paired = false;
    }
    bool same = equal(r.rep, fixtures::example_3_1());
    return {paired && same, "rho(g) = " + rg.str() + ", rho(Phi^-1) = " + phi_inv.str() + ", " +
                                std::to_string(r.query_log.size()) + " queries"};
}

Outcome discriminate_3_2() {
    auto q = fixtures::sd16();
    TableOracle table = fixtures::example_3_2_table();
    auto l = fixtures::example_3_2_L();
    std::string entry = pretty(table.query(l));
    Cyclotomic s2 = fixtures::sqrt_minus_2();
    ExactPolynomial expected({Cyclotomic(1), s2, Cyclotomic(-1)});
    ReconstructionResult r = reconstruct(table, q);
    WeilRep rho_prime(q);
    rho_prime.add("rho'", Twist(1));
    bool is_rho = equal(r.rep, fixtures::example_3_2_untwisted()) && !equal(r.rep, rho_prime);
    WeilRep twisted = twist(r.rep, Twist(s2).inverse());
    std::string p = pretty(euler_factor(twisted, l));
    bool ok = table.query(l).poly == expected && is_rho && p == "1 - 2T + 2T^2" && equal(twisted, fixtures::example_3_2());
    return {ok, "entry " + entry + ", A = " + std::string(is_rho ? "rho" : "?") + ", twisted " + p};
}

Outcome round_trip() {
    const int count = 240;
    auto start = std::chrono::steady_clock::now();
    auto corpus = generate_corpus(20111220, count);
    int pass = 0;
    for (const auto& rep : corpus) {
        RepOracle oracle(rep);
        ReconstructionResult r = reconstruct(oracle, rep.quotient());
        if (equal(r.rep, canonical_decomposition(rep))) ++pass;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char buf[96];
    std::snprintf(buf, sizeof buf, "%d/%zu exact in %.1f s", pass, corpus.size(), secs);
    return {corpus.size() >= 200 && pass == static_cast<int>(corpus.size()) && secs < 300.0, buf};
}

Outcome descent_postconditions() {
    auto corpus = generate_corpus(314159, 200);
    int checked = 0;
    int good = 0;
    std::string first_bad;
    for (const auto& rep : corpus) {
        RepOracle oracle(rep);
        ReconstructionResult r = reconstruct(oracle, rep.quotient());
        for (const auto& d : r.descents) {
            DescentCheck c = check_descent(d.cyclic, d.descent);
            ++checked;
            if (c.ok()) ++good;
            else if (first_bad.empty()) first_bad = d.cyclic.str() + ": " + c.str();
        }
    }
    // The whole-extension descent for every cyclic fixture quotient.
    for (const auto& q : fixtures::corpus_quotients()) {
        if (!q->group()->is_cyclic()) continue;
        FieldDescriptor top = FieldDescriptor::base(q, q->f());
        DescentCheck c = check_descent(top, descent_descriptor(q));
        ++checked;
        if (c.ok()) ++good;
        else if (first_bad.empty()) first_bad = top.str() + ": " + c.str();
    }
    std::string detail = std::to_string(good) + "/" + std::to_string(checked) + " descents";
    if (!first_bad.empty()) detail += ", first failure " + first_bad;
    return {checked > 0 && good == checked, detail};
}

Outcome genus2_counts_check() {
    CountRecord rec = genus2_counts(fixtures::genus2_curve(), 3);
    std::string p3 = pretty(genus2_lpoly_from_counts(rec));
    FqField f13 = fq_build(13, 1);
    auto fiber = fixtures::fiber_13();
    std::string e1 = pretty(euler_factor_good(fiber.e1, f13));
    std::string e2 = pretty(euler_factor_good(fiber.e2, f13));
    std::string e2p = pretty(euler_factor_good(fiber.e2_prime, f13));
    CurveOracle oracle = fixtures::genus2_13_curve_oracle();
    ExactPolynomial a = ExactPolynomial::parse("1 + 4T + 13T^2");
    ExactPolynomial b = ExactPolynomial::parse("1 - 6T + 13T^2");
    bool products = oracle.query(fixtures::example_3_1_L()).poly == a * a &&
                    oracle.query(fixtures::example_3_1_L_prime()).poly == a * b &&
                    oracle.query(FieldDescriptor::base(fixtures::zhat_c4())).poly == a;
    bool ok = p3 == "1 - T + 2T^2 - 3T^3 + 9T^4" && e1 == "1 + 4T + 13T^2" && e2 == e1 && e2p == "1 - 6T + 13T^2" &&
              products;
    return {ok, "N = " + std::to_string(rec.n1) + ", " + std::to_string(rec.n2) + "; " + p3 + "; " + e1 + ", " + e2 +
                    ", " + e2p};
}

Outcome stoll_check() {
    IntPoly f = fixtures::genus2_quartic();
    StollVerdict v = stoll_criterion(f);
    // The displayed factorization, expanded independently.
    IntPoly a = int_poly({3, 4, 3, 4, 3});
    IntPoly b = int_poly({9, 9, 16, 9, 9});
    IntFactorization shown{mpz_class(81), {{a, 2}, {b, 1}}};
    bool ok = v.holds() && v.resultant == shown.expand() &&
              v.factorization.monic_str() == "6561 (x^4 + 4/3x^3 + x^2 + 4/3x + 1)^2(x^4 + x^3 + 16/9x^2 + x + 1)";
    return {ok, v.factorization.monic_str()};
}

Outcome root_numbers() {
    bool all = true;
    for (const QuadCharDatum& chi :
         {QuadCharDatum{true, 1}, QuadCharDatum{true, -1}, QuadCharDatum{false, 1}, QuadCharDatum{false, -1}}) {
        all = all && j_twist_root_number(chi).value == Cyclotomic(-1);
    }
    // Ledger: w(E) w(E') at 13, +1 at 2633, (-1)^2 at infinity.
    Cyclotomic product = global_root_number({{"inf", Cyclotomic(1)}, {"13", Cyclotomic(-1)}, {"2633", Cyclotomic(1)}});
    return {all && product == Cyclotomic(-1), "four twists -1, ledger product " + product.str()};
}

Outcome wd_blindness() {
    int checked = 0;
    int good = 0;
    for (const char* name : {"tate_split_5", "tate_nonsplit_5", "tate_ramified_5", "genus2_2633"}) {
        WeilDeligneRep w = fixtures::lookup(name).wd();
        WeilRep ker = kernel_subrep(w);
        for (const auto& d : all_descriptors(w.rho.quotient())) {
            ++checked;
            if (wd_euler_factor(w, d) == euler_factor(ker, d)) ++good;
        }
    }
    return {checked > 0 && good == checked, std::to_string(good) + "/" + std::to_string(checked) + " descriptors"};
}

Outcome character_table() {
    SD16 sd = build_sd16();
    bool orthogonal = true;
    for (std::size_t i = 0; i < sd.table.size(); ++i) {
        for (std::size_t j = 0; j < sd.table.size(); ++j) {
            Cyclotomic ip = inner_product(sd.table[i], sd.table[j]);
            orthogonal = orthogonal && ip == Cyclotomic(i == j ? 1 : 0);
        }
    }
    Cyclotomic dims(0);
    for (const auto& chi : sd.table) dims = dims + chi.degree() * chi.degree();
    bool ok = orthogonal && sd.table.size() == 7 && dims == Cyclotomic(16) && sd.group->order() == 16;
    return {ok, std::to_string(sd.table.size()) + " characters, sum of squared degrees " + dims.str()};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"euler factors of the conductor-13 example", euler_regression},
        {"reconstruction of the conductor-13 example from three answers", reconstruct_3_1},
        {"semidihedral discrimination and twist", discriminate_3_2},
        {"round trip over the random corpus", round_trip},
        {"descent field postconditions", descent_postconditions},
        {"genus-2 point counts and fiber components", genus2_counts_check},
        {"absolute simplicity criterion", stoll_check},
        {"root numbers of quadratic twists", root_numbers},
        {"local factors do not see the monodromy", wd_blindness},
        {"semidihedral character table", character_table},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) ++failures;
        std::printf("criterion %2zu %s  %s  [%s]\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                    o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
