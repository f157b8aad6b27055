#include <gtest/gtest.h>

#include "weilrep/errors.hpp"
#include "weilrep/fixtures.hpp"
#include "weilrep/reconstruct.hpp"

using namespace weilrep;

namespace weilrep {
void PrintTo(const ExactPolynomial& p, std::ostream* os) { *os << p.pretty(); }
}  // namespace weilrep

namespace {

Cyclotomic I() { return Cyclotomic::root_of_unity(4); }
Cyclotomic gaussian(long a, long b) { return Cyclotomic(a) + Cyclotomic(b) * I(); }
ExactPolynomial poly(const char* text) { return ExactPolynomial::parse(text); }

QuotientPtr c6_quotient() {
    static const QuotientPtr q = [] {
        auto g = FiniteGroup::cyclic(6, "g");
        LocalGaloisQuotient::Options o;
        o.name = "c6";
        o.tame_check = true;
        return LocalGaloisQuotient::make(g, generate_subgroup(g, {g->parse_element("g^2")}), g->parse_element("g"), 7, o);
    }();
    return q;
}

QuotientPtr unramified_c3() {
    static const QuotientPtr q = [] {
        auto g = FiniteGroup::cyclic(3, "g");
        return LocalGaloisQuotient::make(g, generate_subgroup(g, {}), g->parse_element("g"), 5);
    }();
    return q;
}

// The oracle table of the worked example: answers without certified roots.
TableOracle worked_example_table() {
    auto q = fixtures::zhat_c4();
    return TableOracle(q, {{FieldDescriptor::base(q), EulerFactor(poly("1"))},
                           {fixtures::example_3_1_L(), EulerFactor(poly("1 + 4T + 13T^2"))},
                           {fixtures::example_3_1_L_prime(), EulerFactor(poly("1 - 6T + 13T^2"))}});
}

}  // namespace

TEST(Descent, WorkedExampleTotallyRamified) {
    auto q = fixtures::zhat_c4();
    auto l = descent_descriptor(q);
    EXPECT_EQ(l.f(), 1);
    EXPECT_EQ(FieldDescriptor::base(q).order() / l.order(), 4);
    EXPECT_EQ(l.frob(), (WeilElement{q->group()->parse_element("g"), 1}));
    EXPECT_TRUE(l.same_field(fixtures::example_3_1_L_prime()));
    EXPECT_TRUE(check_descent(FieldDescriptor::base(q, 1), l).ok());
}

TEST(Descent, UnramifiedGivesBase) {
    auto q = unramified_c3();
    auto l = descent_descriptor(q);
    EXPECT_TRUE(l.same_field(FieldDescriptor::base(q)));
}

TEST(Descent, MixedPrimeOrder) {
    auto q = c6_quotient();
    auto c = FieldDescriptor::base(q, q->f());
    auto l = descent_descriptor(c);
    auto check = check_descent(c, l);
    EXPECT_TRUE(check.ok()) << check.str();
    EXPECT_EQ(check.index, 3);
    EXPECT_EQ(l.f(), 1);
    // Over L the 2-part and the 3-part of G are both unramified of full degree.
    EXPECT_EQ(l.e(), 1);
    EXPECT_EQ(q->group()->element_order(l.frob().g), 6);
}

TEST(Descent, ModulusTooSmall) {
    auto q = c6_quotient();
    EXPECT_THROW(descent_descriptor(q, 4), ConfigurationError);
    EXPECT_THROW(descent_descriptor(FieldDescriptor::base(q, 2), 4), ConfigurationError);
}

TEST(Descent, EveryCyclicSubgroupOfSemidihedralLevel) {
    auto q = fixtures::sd16();
    for (const auto& d : all_descriptors(q, 4)) {
        bool cyclic = false;
        for (const auto& [m, g] : d.elements())
            if (FieldDescriptor::generated(q, 4, {{g, m}}).order() == d.order()) cyclic = true;
        if (!cyclic) continue;
        auto check = check_descent(d, descent_descriptor(d));
        EXPECT_TRUE(check.ok()) << d.str() << ": " << check.str();
    }
}

TEST(ReconstructCyclic, Character) {
    auto q = fixtures::zhat_c4();
    WeilRep rho(q);
    rho.add("chi(1)", Twist(1));
    auto chi = reconstruct_cyclic(RepOracle(rho), q);
    EXPECT_EQ(chi.at(q->group()->parse_element("g")), I());
    WeilRep triv(q);
    triv.add("chi(0)", Twist(1)).add("chi(0)", Twist(1));
    EXPECT_EQ(reconstruct_cyclic(RepOracle(triv), q), ClassFunction::constant(q->group(), Cyclotomic(2)));
}

TEST(ReconstructCyclic, RejectsInfiniteOrderRoots) {
    EXPECT_THROW(reconstruct_cyclic(RepOracle(fixtures::example_3_1()), fixtures::zhat_c4()), DomainError);
}

TEST(ReconstructArtin, SemidihedralRows) {
    auto q = fixtures::sd16();
    auto sd = build_sd16();
    WeilRep rho(q);
    rho.add("rho", Twist(1));
    EXPECT_EQ(reconstruct_artin(RepOracle(rho), q), sd.table[5]);
    WeilRep sum(q);
    sum.add("U", Twist(1)).add("eps2", Twist(1));
    EXPECT_EQ(reconstruct_artin(RepOracle(sum), q), sd.table[4] + sd.table[2]);
    WeilRep triv(q);
    triv.add("triv", Twist(1));
    EXPECT_EQ(reconstruct_artin(RepOracle(triv), q), ClassFunction::constant(q->group(), Cyclotomic(1)));
}

TEST(SplitByMuClass, Examples) {
    EXPECT_EQ(split_by_mu_class(InverseRootMultiset({gaussian(-2, 3), gaussian(-2, -3)})).size(), 2u);
    Cyclotomic l = gaussian(3, 1);
    auto one = split_by_mu_class(InverseRootMultiset({l, I() * l, -l}));
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0].roots.size(), 3u);
    EXPECT_EQ(split_by_mu_class(InverseRootMultiset({gaussian(1, 1), Cyclotomic(2)})).size(), 2u);
    EXPECT_THROW(split_by_mu_class(InverseRootMultiset({Cyclotomic(0)})), DomainError);
}

TEST(CertifyRoots, Fallbacks) {
    auto r = certify_roots(EulerFactor(poly("1 + 4T + 13T^2").pow(2)));
    EXPECT_EQ(r, InverseRootMultiset({gaussian(-2, 3), gaussian(-2, 3), gaussian(-2, -3), gaussian(-2, -3)}));
    auto p = poly("1 - T") * poly("1 + 4T + 13T^2") * poly("1 - 6T + 13T^2");
    EXPECT_THROW(certify_roots(EulerFactor(p)), UnsupportedError);
    auto partial = certify_roots(EulerFactor(p), {Cyclotomic(1)}, false);
    EXPECT_EQ(partial, InverseRootMultiset({Cyclotomic(1)}));
}

TEST(TwistedOracle, Examples) {
    auto q = fixtures::sd16();
    auto l = fixtures::example_3_2_L();
    TableOracle table(q, {{l, EulerFactor(poly("1 - 2T + 2T^2"))}});
    Twist eta(fixtures::sqrt_minus_2());
    auto s2 = fixtures::sqrt_minus_2();
    EXPECT_EQ(TwistedOracle(table, eta).query(l).poly, ExactPolynomial({Cyclotomic(1), s2, Cyclotomic(-1)}));
    EXPECT_EQ(TwistedOracle(table, Twist(1)).query(l).poly, poly("1 - 2T + 2T^2"));
    TwistedOracle there(table, eta);
    EXPECT_EQ(TwistedOracle(there, eta.inverse()).query(l).poly, poly("1 - 2T + 2T^2"));
}

TEST(Reconstruct, WorkedExampleFromTable) {
    auto table = worked_example_table();
    auto result = reconstruct(table, fixtures::zhat_c4());
    EXPECT_TRUE(equal(result.rep, fixtures::example_3_1()));
    // Phi^-1 acts by -2+3i on the i-eigenspace of g
    int g = fixtures::zhat_c4()->group()->parse_element("g");
    auto rg = evaluate(result.rep, {g, 0});
    auto phi_inv = evaluate(result.rep, {0, -1});
    for (int k = 0; k < rg.rows(); ++k) {
        if (rg(k, k) == I()) EXPECT_EQ(phi_inv(k, k), gaussian(-2, 3));
        if (rg(k, k) == -I()) EXPECT_EQ(phi_inv(k, k), gaussian(-2, -3));
    }
    EXPECT_EQ(result.query_log.size(), 2u);
}

TEST(Reconstruct, Genus2FromTable) {
    auto q = fixtures::zhat_c4();
    auto p13 = poly("1 + 4T + 13T^2");
    TableOracle table(q, {{FieldDescriptor::base(q), EulerFactor(p13)},
                          {fixtures::example_3_1_L(), EulerFactor(p13 * p13)},
                          {fixtures::example_3_1_L_prime(), EulerFactor(p13 * poly("1 - 6T + 13T^2"))}});
    auto result = reconstruct(table, q);
    EXPECT_TRUE(equal(result.rep, fixtures::genus2_13()));
}

TEST(Reconstruct, MissingDescriptorIsExplicit) {
    auto q = fixtures::zhat_c4();
    TableOracle table(q, {{fixtures::example_3_1_L(), EulerFactor(poly("1 + 4T + 13T^2"))}});
    EXPECT_THROW(reconstruct(table, q), MissingDataError);
}

TEST(Reconstruct, SemidihedralDiscrimination) {
    auto q = fixtures::sd16();
    auto result = reconstruct(RepOracle(fixtures::example_3_2()), q);
    EXPECT_TRUE(equal(result.rep, fixtures::example_3_2()));
    EXPECT_FALSE(equal(result.rep, fixtures::example_3_2_prime()));
    auto result_prime = reconstruct(RepOracle(fixtures::example_3_2_prime()), q);
    EXPECT_TRUE(equal(result_prime.rep, fixtures::example_3_2_prime()));
}

TEST(Reconstruct, Deterministic) {
    auto a = reconstruct(RepOracle(fixtures::genus2_13()), fixtures::zhat_c4());
    auto b = reconstruct(RepOracle(fixtures::genus2_13()), fixtures::zhat_c4());
    ASSERT_EQ(a.query_log.size(), b.query_log.size());
    for (std::size_t i = 0; i < a.query_log.size(); ++i) {
        EXPECT_EQ(a.query_log[i].field.str(), b.query_log[i].field.str());
        EXPECT_EQ(a.query_log[i].answer.poly, b.query_log[i].answer.poly);
    }
}

TEST(Reconstruct, InconsistentOracleRejected) {
    auto q = fixtures::zhat_c4();
    auto p13 = poly("1 + 4T + 13T^2");
    // L' answer incompatible with any rep having these L roots
    TableOracle table(q, {{fixtures::example_3_1_L(), EulerFactor(p13)},
                          {fixtures::example_3_1_L_prime(), EulerFactor(poly("1 - 2T + 13T^2"))}});
    EXPECT_THROW(reconstruct(table, q), VerificationError);
}

TEST(VerifyReconstruction, Examples) {
    auto rho = fixtures::example_3_1();
    std::vector<FieldDescriptor> fields = {fixtures::example_3_1_L(), fixtures::example_3_1_L_prime(),
                                           FieldDescriptor::base(rho.quotient())};
    EXPECT_TRUE(verify_reconstruction(rho, RepOracle(rho), fields));
    WeilRep swapped(rho.quotient());
    swapped.add("chi(1)", Twist(gaussian(-2, -3).inverse())).add("chi(3)", Twist(gaussian(-2, 3).inverse()));
    EXPECT_FALSE(verify_reconstruction(swapped, worked_example_table(), fields));
    EXPECT_TRUE(verify_reconstruction(swapped, worked_example_table(), {}));
}

TEST(Reconstruct, SmallCorpusRoundTrip) {
    for (const auto& rho : generate_corpus(7, 24)) {
        auto result = reconstruct(RepOracle(rho), rho.quotient());
        EXPECT_TRUE(equal(result.rep, rho)) << rho.str();
        for (const auto& d : result.descents) EXPECT_TRUE(check_descent(d.cyclic, d.descent).ok());
    }
}
