#include <gtest/gtest.h>

#include "weilrep/errors.hpp"
#include "weilrep/fixtures.hpp"
#include "weilrep/weilrep.hpp"

using namespace weilrep;

namespace weilrep {
void PrintTo(const ExactPolynomial& p, std::ostream* os) { *os << p.pretty(); }
void PrintTo(const Matrix& m, std::ostream* os) { *os << m.str(); }
}  // namespace weilrep

namespace {

Cyclotomic I() { return Cyclotomic::root_of_unity(4); }
Cyclotomic gaussian(long a, long b) { return Cyclotomic(a) + Cyclotomic(b) * I(); }
ExactPolynomial poly(const char* text) { return ExactPolynomial::parse(text); }

// Independent route: restrict rho(frob)^-1 to the image of the averaged
// inertia projector and take its reversed characteristic polynomial.
ExactPolynomial matrix_route(const WeilRep& rho, const FieldDescriptor& field, const WeilElement& frob) {
    const int d = rho.dim();
    Matrix avg(d, d);
    for (int h : field.inertia()) avg = avg + evaluate(rho, {h, 0});
    avg = avg * Cyclotomic(Rational(1, static_cast<long>(field.inertia().size())));
    Matrix basis = (avg - Matrix::identity(d)).nullspace();
    if (basis.cols() == 0) return ExactPolynomial::one();
    Matrix f_inv = evaluate(rho, frob).inverse();
    return basis.solve(f_inv * basis).reverse_charpoly();
}

std::vector<WeilRep> plain_fixtures() {
    return {fixtures::example_3_1(), fixtures::genus2_13(), fixtures::example_3_2(), fixtures::example_3_2_prime()};
}

// Smaller levels keep the exhaustive descriptor loops quick.
long test_level(const QuotientPtr& q) { return q->name() == "sd16" ? 4 : q->modulus(); }

}  // namespace

TEST(Quotient, FixturesValidate) {
    for (const auto& q : fixtures::corpus_quotients()) {
        auto report = validate_quotient(q->group(), q->inertia(), q->phi(), q->q(), q->modulus(), q->tame_check());
        EXPECT_TRUE(report.ok) << q->name();
    }
    EXPECT_EQ(fixtures::sd16()->inertia().order(), 8);
    EXPECT_EQ(fixtures::sd16()->f(), 2);
    EXPECT_EQ(fixtures::zhat_c4()->f(), 1);
}

TEST(Quotient, NonNormalInertiaReported) {
    auto s3 = FiniteGroup::from_permutations({"a", "b"}, {parse_cycles("(1 2)", 3), parse_cycles("(1 2 3)", 3)});
    Subgroup i(s3, generate_subgroup(s3, {s3->parse_element("a")}).elements());
    auto report = validate_quotient(s3, i, s3->parse_element("b"), 3, 3, false);
    EXPECT_FALSE(report.ok);
    EXPECT_FALSE(report.violations.empty());
    EXPECT_THROW(LocalGaloisQuotient::make(s3, i, s3->parse_element("b"), 3), DomainError);
}

TEST(Quotient, TameRelationChecked) {
    auto g = FiniteGroup::cyclic(3, "g");
    // Frobenius acting trivially on C3 needs q = 1 mod 3.
    EXPECT_FALSE(validate_quotient(g, whole_group(g), 0, 5, 3, true).ok);
    EXPECT_TRUE(validate_quotient(g, whole_group(g), 0, 7, 3, true).ok);
}

TEST(Descriptor, BasicInvariants) {
    auto q = fixtures::zhat_c4();
    auto base = FieldDescriptor::base(q, 4);
    EXPECT_EQ(base.order(), 16);
    EXPECT_EQ(base.f(), 1);
    EXPECT_EQ(base.e(), 4);
    auto lp = fixtures::example_3_1_L_prime();
    EXPECT_EQ(lp.e(), 1);
    EXPECT_EQ(lp.f(), 1);
    EXPECT_EQ(lp.frob(), (WeilElement{q->group()->parse_element("g"), 1}));
    EXPECT_TRUE(lp.same_field(lp.lift(12)));
    EXPECT_TRUE(base.is_subfield_of(lp));
    EXPECT_FALSE(lp.is_subfield_of(base));
    for (const auto& d : all_descriptors(q, 4)) {
        for (const auto& [m, g] : d.elements())
            if (m == 0) EXPECT_TRUE(q->inertia().contains(g));
        EXPECT_TRUE(d.same_field(d.canonical()));
    }
}

TEST(Evaluate, WorkedExampleMatrices) {
    auto rho = fixtures::example_3_1();
    int g = rho.quotient()->group()->parse_element("g");
    EXPECT_EQ(evaluate(rho, {g, 0}), Matrix::diagonal({I(), -I()}));
    EXPECT_EQ(evaluate(rho, {0, 0}), Matrix::identity(2));
    EXPECT_EQ(evaluate(rho, {0, -1}), Matrix::diagonal({gaussian(-2, 3), gaussian(-2, -3)}));
    EXPECT_THROW(evaluate(fixtures::example_3_2(), {0, 1}), DomainError);
}

TEST(Evaluate, Genus2FrobeniusDisplay) {
    EXPECT_EQ(evaluate(fixtures::genus2_13(), {0, -1}),
              Matrix::diagonal({gaussian(-2, -3), gaussian(-2, 3), gaussian(-2, -3), gaussian(-2, 3)}));
}

TEST(InertiaInvariants, Examples) {
    auto base = FieldDescriptor::base(fixtures::zhat_c4());
    EXPECT_EQ(inertia_invariants(fixtures::example_3_1(), base).dimension, 0);
    EXPECT_EQ(inertia_invariants(fixtures::genus2_13(), base).dimension, 2);
    auto top = fixtures::example_3_1_L();
    EXPECT_EQ(inertia_invariants(fixtures::genus2_13(), top).dimension, 4);
    auto inv = inertia_invariants(fixtures::example_3_2(), FieldDescriptor::base(fixtures::sd16()));
    EXPECT_EQ(inv.projector * inv.projector, inv.projector);
}

TEST(EulerFactor, WorkedExampleRegression) {
    auto rho = fixtures::example_3_1();
    EXPECT_EQ(euler_factor(rho, fixtures::example_3_1_L()).poly, poly("1 + 4T + 13T^2"));
    EXPECT_EQ(euler_factor(rho, fixtures::example_3_1_L_prime()).poly, poly("1 - 6T + 13T^2"));
    EXPECT_EQ(euler_factor(rho, FieldDescriptor::base(rho.quotient())).poly, ExactPolynomial::one());
    auto ef = euler_factor(rho, fixtures::example_3_1_L_prime());
    ASSERT_TRUE(ef.roots.has_value());
    EXPECT_EQ(*ef.roots, InverseRootMultiset({gaussian(3, 2), gaussian(3, -2)}));
}

TEST(EulerFactor, Genus2At13) {
    auto rho = fixtures::genus2_13();
    EXPECT_EQ(euler_factor(rho, FieldDescriptor::base(rho.quotient())).poly, poly("1 + 4T + 13T^2"));
    EXPECT_EQ(euler_factor(rho, fixtures::example_3_1_L()).poly, poly("1 + 4T + 13T^2").pow(2));
    EXPECT_EQ(euler_factor(rho, fixtures::example_3_1_L_prime()).poly,
              poly("1 + 4T + 13T^2") * poly("1 - 6T + 13T^2"));
}

TEST(EulerFactor, SemidihedralDescent) {
    auto l = fixtures::example_3_2_L();
    EXPECT_EQ(euler_factor(fixtures::example_3_2(), l).poly, poly("1 - 2T + 2T^2"));
    WeilRep a(fixtures::sd16());
    a.add("rho", Twist(1));
    WeilRep b(fixtures::sd16());
    b.add("rho'", Twist(1));
    auto s2 = fixtures::sqrt_minus_2();
    EXPECT_EQ(euler_factor(a, l).poly, ExactPolynomial({Cyclotomic(1), s2, Cyclotomic(-1)}));
    EXPECT_EQ(euler_factor(b, l).poly, ExactPolynomial({Cyclotomic(1), -s2, Cyclotomic(-1)}));
}

TEST(EulerFactor, AgreesWithMatrixRouteOnEveryDescriptor) {
    for (const auto& rho : plain_fixtures()) {
        for (const auto& d : all_descriptors(rho.quotient(), test_level(rho.quotient()))) {
            auto ef = euler_factor(rho, d);
            EXPECT_EQ(ef.poly, matrix_route(rho, d, d.frob())) << d.str();
            EXPECT_EQ(ef.poly.degree(), inertia_invariants(rho, d).dimension) << d.str();
            ASSERT_TRUE(ef.roots.has_value());
            EXPECT_EQ(expand_from_inverse_roots(*ef.roots), ef.poly);
        }
    }
}

TEST(EulerFactor, FrobeniusChoiceIndependence) {
    for (const auto& rho : plain_fixtures()) {
        for (const auto& d : all_descriptors(rho.quotient(), test_level(rho.quotient()))) {
            auto expected = euler_factor(rho, d).poly;
            for (const auto& w : d.frobenius_candidates()) {
                EXPECT_EQ(euler_factor(rho, d, w).poly, expected) << d.str();
                EXPECT_EQ(matrix_route(rho, d, w), expected) << d.str();
            }
        }
    }
}

TEST(EulerFactor, Multiplicativity) {
    auto a = fixtures::example_3_1();
    auto b = fixtures::genus2_13();
    auto sum = direct_sum(a, b);
    for (const auto& d : all_descriptors(a.quotient()))
        EXPECT_EQ(euler_factor(sum, d).poly, euler_factor(a, d).poly * euler_factor(b, d).poly);
}

TEST(Twist, LawOnEveryDescriptor) {
    const std::vector<Twist> psis = {Twist(gaussian(1, 1)), Twist(Cyclotomic(-2)), Twist(fixtures::sqrt_minus_2())};
    for (const auto& rho : plain_fixtures()) {
        for (const auto& psi : psis) {
            auto twisted = twist(rho, psi);
            for (const auto& d : all_descriptors(rho.quotient(), test_level(rho.quotient()))) {
                auto scaled = euler_factor(rho, d).poly.scale_variable(psi.power(-d.f()));
                EXPECT_EQ(euler_factor(twisted, d).poly, scaled);
                EXPECT_EQ(matrix_route(twisted, d, d.frob()), scaled);
            }
        }
    }
}

TEST(Twist, InverseUndoes) {
    Twist psi(gaussian(2, -1));
    auto rho = fixtures::genus2_13();
    EXPECT_TRUE(equal(twist(twist(rho, psi), psi.inverse()), rho));
}

TEST(Twist, SemidihedralFixtureIsTwistOfRho) {
    WeilRep a(fixtures::sd16());
    a.add("rho", Twist(1));
    Twist eta(fixtures::sqrt_minus_2());
    EXPECT_TRUE(equal(twist(a, eta.inverse()), fixtures::example_3_2()));
    EXPECT_TRUE(equal(twist(fixtures::example_3_2(), eta), a));
}

TEST(Twist, FormalRadicalPowers) {
    auto r = Twist::radical(Cyclotomic(2), 3);
    EXPECT_EQ(r.power(6), Cyclotomic(4));
    EXPECT_THROW(r.power(1), UnsupportedError);
    EXPECT_EQ((r * r * r).power(3), Cyclotomic(8));
    EXPECT_EQ((r * r * r).index(), 3);  // radicals are never normalized
    EXPECT_TRUE(mu_class_equal(r, Twist::radical(Cyclotomic(-2), 3)));
    EXPECT_FALSE(mu_class_equal(r, Twist(Cyclotomic(2))));
    EXPECT_EQ(Twist::parse(r.str()), r);
    EXPECT_THROW(Twist(Cyclotomic(0)), DomainError);
}

TEST(Twist, RadicalFixtureEulerFactorNeedsIntegralPower) {
    auto q = fixtures::c4_half_ramified();  // f = 2
    WeilRep rho(q);
    rho.add("chi(0)", Twist::radical(Cyclotomic(3), 2));
    // base Frobenius has degree 1: sqrt(3) is not cyclotomic-integral here
    EXPECT_THROW(euler_factor(rho, FieldDescriptor::base(q)), UnsupportedError);
    EXPECT_EQ(euler_factor(rho, FieldDescriptor::unramified_top(q)).poly, poly("1 - 1/3T"));
}

TEST(Dual, InvertsTwistsAndTransposes) {
    auto rho = fixtures::example_3_1();
    auto d = dual(rho);
    EXPECT_TRUE(equal(dual(d), rho));
    int g = rho.quotient()->group()->parse_element("g");
    EXPECT_EQ(evaluate(d, {g, 0}), Matrix::diagonal({-I(), I()}));
    EXPECT_EQ(evaluate(d, {0, 1}), Matrix::diagonal({gaussian(-2, 3), gaussian(-2, -3)}));
}

TEST(Canonical, MergesMuEquivalentTwists) {
    auto q = fixtures::zhat_c4();
    Cyclotomic lambda = gaussian(2, 1);
    WeilRep rho(q);
    rho.add("chi(1)", Twist(lambda)).add("chi(2)", Twist(I() * lambda));
    auto comps = canonical_components(rho);
    ASSERT_EQ(comps.size(), 1u);
    // characters of both sides agree on W_M
    auto canon = canonical_decomposition(rho);
    auto level = FieldDescriptor::base(q, 4);
    for (const auto& [m, g] : level.elements())
        for (long k : {0L, 4L}) {
            EXPECT_EQ(evaluate(canon, {g, m + k}).trace(), evaluate(rho, {g, m + k}).trace());
        }
    EXPECT_TRUE(equal(canon, rho));
}

TEST(Canonical, Idempotent) {
    for (const auto& rho : plain_fixtures()) {
        auto c = canonical_decomposition(rho);
        auto cc = canonical_decomposition(c);
        EXPECT_EQ(canonical_components(c), canonical_components(cc));
        ASSERT_EQ(c.atoms().size(), cc.atoms().size());
        for (std::size_t i = 0; i < c.atoms().size(); ++i) {
            EXPECT_EQ(c.atoms()[i].label, cc.atoms()[i].label);
            EXPECT_EQ(c.atoms()[i].lambda, cc.atoms()[i].lambda);
        }
    }
}

TEST(Canonical, WorkedExampleHasTwoComponents) {
    auto comps = canonical_components(fixtures::example_3_1());
    ASSERT_EQ(comps.size(), 2u);
    EXPECT_FALSE(mu_class_equal(comps[0].nu, comps[1].nu));
    // twists are Frob -> lambda with lambda^-1 = -2 +- 3i
    Twist a(gaussian(-2, 3).inverse()), b(gaussian(-2, -3).inverse());
    EXPECT_TRUE((mu_class_equal(comps[0].nu, a) && mu_class_equal(comps[1].nu, b)) ||
                (mu_class_equal(comps[0].nu, b) && mu_class_equal(comps[1].nu, a)));
    for (const auto& c : comps) {
        ASSERT_EQ(c.atoms.size(), 1u);
        EXPECT_EQ(c.atoms[0].multiplicity, 1);
    }
}

TEST(Equal, EquivalenceOnFixtures) {
    auto fx = plain_fixtures();
    for (std::size_t i = 0; i < fx.size(); ++i) {
        EXPECT_TRUE(equal(fx[i], fx[i]));
        for (std::size_t j = 0; j < fx.size(); ++j) EXPECT_EQ(equal(fx[i], fx[j]), equal(fx[j], fx[i]));
    }
    EXPECT_FALSE(equal(fixtures::example_3_2(), fixtures::example_3_2_prime()));
}

TEST(Equal, ConjugatedBasisCopy) {
    auto rho = fixtures::example_3_2();
    const auto& atom = rho.atoms()[0];
    Matrix p({{Cyclotomic(1), Cyclotomic(2)}, {Cyclotomic(3), I()}});
    WeilRep copy(rho.quotient());
    copy.add(atom.artin.change_basis(p), atom.lambda);
    EXPECT_TRUE(equal(copy, rho));
}

TEST(Equal, UnramifiedSignAbsorbed) {
    // rho' differs from rho by the unramified character eps2; the sign of the
    // twist absorbs it.
    WeilRep a(fixtures::sd16());
    a.add("rho'", Twist(-fixtures::sqrt_minus_2().inverse()));
    EXPECT_TRUE(equal(a, fixtures::example_3_2()));
}

TEST(FromUnramified, Examples) {
    auto q = fixtures::sd16();
    auto p = EulerFactor::from_roots(InverseRootMultiset({gaussian(1, 1), gaussian(1, -1)}));
    auto rho = from_unramified_polynomial(p, q);
    EXPECT_EQ(rho.dim(), 2);
    EXPECT_EQ(euler_factor(rho, FieldDescriptor::base(q)).poly, poly("1 - 2T + 2T^2"));
    EXPECT_EQ(from_unramified_polynomial(EulerFactor(), q).dim(), 0);
    auto lin = from_unramified_polynomial(EulerFactor::from_roots(InverseRootMultiset({Cyclotomic(1)})), q);
    EXPECT_EQ(lin.atoms()[0].label, "triv");
    EXPECT_THROW(from_unramified_polynomial(EulerFactor(poly("1 - T")), q), UnsupportedError);
}

TEST(EulerFactorType, CertifiedRootsChecked) {
    EXPECT_THROW(EulerFactor(poly("1 - T"), InverseRootMultiset({Cyclotomic(2)})), VerificationError);
    EXPECT_THROW(EulerFactor(poly("2 - T")), DomainError);
}

TEST(WeilDeligne, TateCurve) {
    auto w = tate_curve_rep(5, TateCharacter::trivial);
    auto base = FieldDescriptor::base(w.rho.quotient());
    EXPECT_FALSE(w.N.is_zero());
    EXPECT_EQ(evaluate(w.rho, base.frob()), Matrix::diagonal({Cyclotomic(1), Cyclotomic(Rational(1, 5))}));
    auto phi = evaluate(w.rho, base.frob());
    EXPECT_EQ(phi * w.N * phi.inverse(), w.N * Cyclotomic(5));
    auto k = kernel_subrep(w);
    EXPECT_EQ(k.dim(), 1);
    EXPECT_EQ(euler_factor(k, base).poly, poly("1 - T"));
    EXPECT_EQ(wd_euler_factor(w, base).poly, poly("1 - T"));
    auto ns = tate_curve_rep(5, TateCharacter::unramified_quadratic);
    EXPECT_EQ(wd_euler_factor(ns, base).poly, poly("1 + T"));
    auto ram = tate_curve_rep(5, TateCharacter::ramified_quadratic);
    EXPECT_EQ(wd_euler_factor(ram, base).poly, ExactPolynomial::one());
}

TEST(WeilDeligne, Genus2At2633) {
    auto w = fixtures::genus2_2633();
    EXPECT_EQ(w.N.rank(), 2);
    auto base = FieldDescriptor::base(w.rho.quotient());
    EXPECT_EQ(wd_euler_factor(w, base).poly, poly("1 - T").pow(2));
    EXPECT_EQ(euler_factor(w.rho, base).poly, poly("1 - T").pow(2) * poly("1 - 2633T").pow(2));
}

TEST(WeilDeligne, IndistinguishableFromKernel) {
    std::vector<WeilDeligneRep> ws = {fixtures::genus2_2633(), tate_curve_rep(5, TateCharacter::trivial),
                                      tate_curve_rep(5, TateCharacter::unramified_quadratic),
                                      tate_curve_rep(5, TateCharacter::ramified_quadratic),
                                      tate_curve_rep(2, TateCharacter::trivial)};
    for (const auto& w : ws) {
        auto k = kernel_subrep(w);
        for (const auto& d : all_descriptors(w.rho.quotient(), 4))
            EXPECT_EQ(wd_euler_factor(w, d).poly, euler_factor(k, d).poly) << d.str();
    }
}

TEST(WeilDeligne, InvalidMonodromyRejected) {
    auto w = tate_curve_rep(5, TateCharacter::trivial);
    w.N = Matrix(2, 2);
    w.N(1, 0) = Cyclotomic(1);  // wrong direction: Phi N Phi^-1 = N / q
    EXPECT_THROW(validate_wd(w), DomainError);
}
