#include <gtest/gtest.h>

#include <random>

#include "weilrep/cyclotomic.hpp"
#include "weilrep/errors.hpp"

using namespace weilrep;

namespace {

const Cyclotomic I = Cyclotomic::root_of_unity(4);
Cyclotomic z(int n, long k = 1) { return Cyclotomic::root_of_unity(n, k); }
Cyclotomic gi(long a, long b) { return Cyclotomic(a) + Cyclotomic(b) * I; }

// Random element of Q(zeta_n) with small rational coordinates.
Cyclotomic random_element(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> coef(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    std::vector<std::pair<long, Rational>> terms;
    for (int k = 0; k < n; ++k) {
        if (rng() % 3 == 0) terms.emplace_back(k, Rational(coef(rng), den(rng)));
    }
    return Cyclotomic::from_terms(n, terms);
}

}  // namespace

TEST(CyclotomicArith, DefiningRelations) {
    EXPECT_EQ(I * I, Cyclotomic(-1));
    EXPECT_EQ(gi(-2, 3) * gi(-2, -3), Cyclotomic(13));
    Cyclotomic s = z(8) + z(8, -1);
    EXPECT_EQ(s * s, Cyclotomic(2));
}

TEST(CyclotomicArith, DivisionByZeroIsDomainError) {
    EXPECT_THROW(Cyclotomic(1) / Cyclotomic(0), DomainError);
    EXPECT_THROW(Cyclotomic(0).inverse(), DomainError);
}

TEST(CyclotomicArith, NormalizesToLeastConductor) {
    // zeta_24^6 = i lives in Q(i)
    Cyclotomic v = z(24, 6);
    EXPECT_EQ(v.conductor(), 4);
    EXPECT_EQ(v, I);
    // zeta_3 + zeta_3^2 = -1
    EXPECT_EQ(z(3) + z(3, 2), Cyclotomic(-1));
    // conductor 6 is canonicalised to 3
    EXPECT_EQ(z(6).conductor(), 3);
    EXPECT_EQ(z(6), -z(3, 2));
    // sum of primitive 5th roots is -1
    EXPECT_EQ(z(5) + z(5, 2) + z(5, 3) + z(5, 4), Cyclotomic(-1));
    // zeta_8 * zeta_3 * zeta_3^-1 drops back to conductor 8
    EXPECT_EQ((z(8) * z(3)) * z(3, -1), z(8));
}

TEST(CyclotomicArith, ConductorCeilingIsEnforced) {
    EXPECT_THROW(z(241), ConfigurationError);
    EXPECT_THROW(z(16) * z(17), ConfigurationError);
    EXPECT_NO_THROW(z(16) * z(15));
}

TEST(CyclotomicArith, FieldAxiomsOnRandomTriples) {
    std::mt19937 rng(20111220);
    const int conductors[] = {1, 3, 4, 5, 8, 12, 16, 20};
    for (int trial = 0; trial < 60; ++trial) {
        int n1 = conductors[rng() % 8], n2 = conductors[rng() % 8], n3 = conductors[rng() % 8];
        Cyclotomic a = random_element(rng, n1), b = random_element(rng, n2), c = random_element(rng, n3);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), Cyclotomic(1));
        EXPECT_EQ(a - a, Cyclotomic(0));
    }
}

TEST(CyclotomicArith, ConjugationAndGalois) {
    EXPECT_EQ(I.conj(), -I);
    EXPECT_EQ(gi(3, 2).conj(), gi(3, -2));
    EXPECT_EQ(z(8).galois(3), z(8, 3));
    EXPECT_THROW(z(8).galois(2), DomainError);
}

TEST(RootOfUnity, Examples) {
    EXPECT_EQ(is_root_of_unity(I), 4);
    EXPECT_EQ(is_root_of_unity(Cyclotomic(1)), 1);
    EXPECT_EQ(is_root_of_unity(Cyclotomic(-1)), 2);
    EXPECT_EQ(is_root_of_unity(z(3)), 3);
    EXPECT_EQ(is_root_of_unity(-z(3)), 6);
    EXPECT_EQ(is_root_of_unity(z(16, 3)), 16);
    // (-5-12i)/13 has modulus 1 but is not among {1, i, -1, -i}
    EXPECT_FALSE(is_root_of_unity(gi(-5, -12) / Cyclotomic(13)).has_value());
    EXPECT_FALSE(is_root_of_unity(Cyclotomic(2)).has_value());
    EXPECT_FALSE(is_root_of_unity(Cyclotomic(0)).has_value());
}

TEST(MuClass, Examples) {
    Cyclotomic lambda = gi(-2, 3);
    EXPECT_TRUE(mu_class_equal(lambda, I * lambda));
    EXPECT_FALSE(mu_class_equal(gi(-2, 3), gi(-2, -3)));
    EXPECT_TRUE(mu_class_equal(Cyclotomic(1), Cyclotomic(1)));
    EXPECT_THROW(mu_class_equal(Cyclotomic(0), Cyclotomic(1)), DomainError);
}

TEST(MuClass, EquivalenceRelationOnFiniteSet) {
    std::vector<Cyclotomic> values = {gi(-2, 3), gi(3, 2), gi(-2, -3), gi(2, 3),    Cyclotomic(2),
                                      Cyclotomic(-2), z(8) * Cyclotomic(2), gi(1, 1), z(3),   Cyclotomic(1)};
    for (const auto& a : values) {
        EXPECT_TRUE(mu_class_equal(a, a));
        for (const auto& b : values) {
            EXPECT_EQ(mu_class_equal(a, b), mu_class_equal(b, a));
            for (const auto& c : values) {
                if (mu_class_equal(a, b) && mu_class_equal(b, c)) EXPECT_TRUE(mu_class_equal(a, c));
            }
        }
    }
}

TEST(MuClass, RepresentativeIsClassInvariant) {
    std::vector<Cyclotomic> values = {gi(-2, 3), Cyclotomic(Rational(-1, 2)), z(8) + z(8, 3), gi(1, 1) * z(3)};
    for (const auto& a : values) {
        Cyclotomic rep = mu_class_representative(a);
        EXPECT_TRUE(mu_class_equal(rep, a));
        for (long k = 0; k < 24; ++k) EXPECT_EQ(mu_class_representative(a * z(24, k)), rep);
    }
    EXPECT_EQ(mu_class_representative(Cyclotomic(-2)), Cyclotomic(2));
    EXPECT_EQ(mu_class_representative(z(5, 2) * Cyclotomic(3)), Cyclotomic(3));
}

TEST(SqrtRational, Examples) {
    EXPECT_EQ(sqrt_rational(Rational(-1)), I);
    EXPECT_EQ(sqrt_rational(Rational(-2)), z(8) + z(8, 3));
    EXPECT_THROW(sqrt_rational(Rational(0)), DomainError);

    // independent oracle: the quadratic Gauss sum for 13 squares to 13
    std::vector<std::pair<long, Rational>> terms;
    for (long a = 1; a < 13; ++a) {
        bool residue = false;
        for (long x = 1; x < 13; ++x) residue = residue || (x * x % 13 == a);
        terms.emplace_back(a, Rational(residue ? 1 : -1));
    }
    Cyclotomic gauss = Cyclotomic::from_terms(13, terms);
    EXPECT_EQ(gauss * gauss, Cyclotomic(13));
    Cyclotomic s = sqrt_rational(Rational(13));
    EXPECT_EQ(s * s, Cyclotomic(13));
    EXPECT_TRUE(s == gauss || s == -gauss);
}

TEST(SqrtRational, SquaresBackForManyRationals) {
    for (long p = -30; p <= 30; ++p) {
        for (long q : {1L, 2L, 3L, 5L, 9L}) {
            if (p == 0) continue;
            Rational r(p, q);
            r.canonicalize();
            Cyclotomic s;
            try {
                s = sqrt_rational(r);
            } catch (const ConfigurationError&) {
                continue;  // square-free part needs a conductor above the ceiling
            }
            EXPECT_EQ(s * s, Cyclotomic(r)) << r.get_str();
            EXPECT_TRUE(canonical_less(s, -s));
        }
    }
}

TEST(NthRoot, Examples) {
    EXPECT_EQ(nth_root(Cyclotomic(-2), 2), z(8) + z(8, 3));
    EXPECT_EQ(nth_root(Cyclotomic(1), 5), Cyclotomic(1));
    EXPECT_FALSE(nth_root(gi(-2, 3), 2).has_value());
    auto r = nth_root(Cyclotomic(Rational(-1, 2)), 2);
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(*r * *r, Cyclotomic(Rational(-1, 2)));
    auto r4 = nth_root(Cyclotomic(-4) * I, 4);
    ASSERT_TRUE(r4.has_value());
    EXPECT_EQ(r4->pow(4), Cyclotomic(-4) * I);
}

TEST(Polynomials, ExpandFromInverseRoots) {
    EXPECT_EQ(expand_from_inverse_roots({}), ExactPolynomial::one());
    EXPECT_EQ(expand_from_inverse_roots(InverseRootMultiset({gi(-2, 3), gi(-2, -3)})),
              ExactPolynomial({Cyclotomic(1), Cyclotomic(4), Cyclotomic(13)}));
    EXPECT_EQ(expand_from_inverse_roots(InverseRootMultiset({Cyclotomic(1), Cyclotomic(1)})),
              ExactPolynomial({Cyclotomic(1), Cyclotomic(-2), Cyclotomic(1)}));
}

TEST(Polynomials, QuadraticInverseRoots) {
    EXPECT_EQ(quadratic_inverse_roots(ExactPolynomial::parse("1 - 6T + 13T^2")),
              InverseRootMultiset({gi(3, 2), gi(3, -2)}));
    EXPECT_EQ(quadratic_inverse_roots(ExactPolynomial::parse("1 + 4T + 13T^2")),
              InverseRootMultiset({gi(-2, 3), gi(-2, -3)}));
    EXPECT_EQ(quadratic_inverse_roots(ExactPolynomial::parse("1 - T")), InverseRootMultiset({Cyclotomic(1)}));
    EXPECT_THROW(quadratic_inverse_roots(ExactPolynomial::parse("2 - T")), DomainError);
    EXPECT_THROW(quadratic_inverse_roots(ExactPolynomial::parse("1 + T + T^2 + T^3")), DomainError);
    // 1 + i T + T^2: discriminant -1 - 4 is rational, but 1 + T + iT^2 has b^2 - 4c = 1 - 4i
    EXPECT_THROW(quadratic_inverse_roots(ExactPolynomial({Cyclotomic(1), Cyclotomic(1), I})), UnsupportedError);
}

TEST(Polynomials, QuadraticRoundTrip) {
    for (long b = -8; b <= 8; ++b) {
        for (long c = -9; c <= 13; ++c) {
            if (c == 0) continue;
            ExactPolynomial p({Cyclotomic(1), Cyclotomic(b), Cyclotomic(c)});
            Rational disc = b * b - 4 * c;
            bool small = false;
            for (long n = 1; n <= 15 && !small; ++n) {
                Rational ratio = disc / (n * n);
                small = ratio.get_den() == 1 && abs(ratio) <= 60;
            }
            if (!small) continue;
            EXPECT_EQ(expand_from_inverse_roots(quadratic_inverse_roots(p)), p);
        }
    }
    ExactPolynomial sd16 = ExactPolynomial({Cyclotomic(1), z(8) + z(8, 3), Cyclotomic(-1)});
    EXPECT_EQ(expand_from_inverse_roots(quadratic_inverse_roots(sd16)), sd16);
}

TEST(TextFormat, CyclotomicRoundTrip) {
    for (const char* s : {"cyc(1;)", "cyc(1; 0:13)", "cyc(4; 0:-2, 1:3)", "cyc(8; 1:1, 3:1)", "cyc(4; 0:3/13, 1:-2/13)",
                          "cyc(13; 0:-2, 1:-2, 2:-1/2)"}) {
        Cyclotomic v = Cyclotomic::parse(s);
        EXPECT_EQ(v.str(), s);
    }
    EXPECT_EQ(Cyclotomic::parse("-3/6"), Cyclotomic(Rational(-1, 2)));
    EXPECT_EQ(Cyclotomic::parse("cyc(24; 6:1)"), I);
    EXPECT_THROW(Cyclotomic::parse("cyc(4 0:1)"), ParseError);
    EXPECT_THROW(Cyclotomic::parse("1/0"), ParseError);
    EXPECT_THROW(Cyclotomic::parse("abc"), ParseError);
}

TEST(TextFormat, RandomRoundTrip) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        Cyclotomic a = random_element(rng, 24);
        EXPECT_EQ(Cyclotomic::parse(a.str()), a);
        EXPECT_EQ(Cyclotomic::parse(a.str()).str(), a.str());
    }
}

TEST(TextFormat, PolynomialForms) {
    ExactPolynomial p = ExactPolynomial::parse("1 - T + 2T^2 - 3T^3 + 9T^4");
    EXPECT_EQ(p.pretty(), "1 - T + 2T^2 - 3T^3 + 9T^4");
    EXPECT_EQ(ExactPolynomial::parse(p.str()), p);
    ExactPolynomial q({Cyclotomic(1), z(8) + z(8, 3), Cyclotomic(-1)});
    EXPECT_EQ(q.pretty(), "1 + cyc(8; 1:1, 3:1)T - T^2");
    EXPECT_EQ(ExactPolynomial::parse(q.pretty()), q);
    EXPECT_EQ(ExactPolynomial::one().pretty(), "1");
}
