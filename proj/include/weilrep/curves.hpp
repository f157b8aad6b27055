#pragma once

// Finite fields, point counts of elliptic and genus-2 curves in odd
// characteristic, local factors from counts, and the Stoll criterion for
// absolute simplicity of a genus-2 Jacobian.

#include <gmpxx.h>

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "weilrep/cyclotomic.hpp"
#include "weilrep/oracle.hpp"

namespace weilrep {

/// F_q with q = p^k, elements encoded as integers sum c_i p^i for the
/// coordinates c_i on the basis 1, x, ..., x^(k-1) modulo `modulus`.
class FqField {
public:
    using Elem = long;

    long p() const noexcept { return p_; }
    int k() const noexcept { return k_; }
    long q() const noexcept { return q_; }
    /// Monic, constant term first.
    const std::vector<long>& modulus() const noexcept { return modulus_; }

    Elem from_int(long a) const { return ((a % p_) + p_) % p_; }
    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const { return sub(0, a); }
    Elem mul(Elem a, Elem b) const;
    Elem pow(Elem a, long e) const;
    Elem inv(Elem a) const;
    /// 0 for zero, 1 for a nonzero square, -1 otherwise.
    int legendre(Elem a) const;

    std::string str() const;

private:
    friend FqField fq_build(long p, int k);
    long p_ = 3;
    int k_ = 1;
    long q_ = 3;
    std::vector<long> modulus_;
};

/// p odd prime, p^k <= 10^7; the modulus is the least irreducible one in
/// coefficient encoding.  ConfigurationError past the bound.
FqField fq_build(long p, int k);

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6, integer coefficients read
/// in the prime field.
struct EllipticCurve {
    long a1 = 0, a2 = 0, a3 = 0, a4 = 0, a6 = 0;
    static EllipticCurve short_form(long a, long b) { return {0, 0, 0, a, b}; }
    std::string str() const;
};

bool is_singular(const EllipticCurve& e, const FqField& field);
/// Projective count; DomainError for a singular curve.
long count_points_elliptic(const EllipticCurve& e, const FqField& field);
/// 1 - aT + qT^2 with a = q + 1 - #E(F_q); roots certified when the square
/// root of the discriminant fits under the conductor ceiling.
EulerFactor euler_factor_good(const EllipticCurve& e, const FqField& field);

/// y^2 + h(x) y = f(x), coefficient lists constant term first.
struct HyperellipticCurve {
    std::vector<long> f;
    std::vector<long> h;
    std::string str() const;
};

enum class CountMode { projective, affine_only };

/// Genus-2 models with deg(h^2 + 4f) in {5, 6}.  Projective mode needs a
/// smooth model: one point at infinity in degree 5, two or none in degree 6
/// by the leading coefficient's residue.  Even characteristic is unsupported.
long count_points_hyperelliptic(const HyperellipticCurve& c, const FqField& field, CountMode mode = CountMode::projective);
bool is_smooth(const HyperellipticCurve& c, const FqField& field);

struct CountRecord {
    long q;
    long n1;
    long n2;
};

/// Counts over F_p and F_p^2.
CountRecord genus2_counts(const HyperellipticCurve& c, long p);
/// 1 - e1 T + e2 T^2 - q e1 T^3 + q^2 T^4.  VerificationError on
/// non-integral e2 or a Weil-bound violation.
EulerFactor genus2_lpoly_from_counts(const CountRecord& rec);
/// Degree-d factor of a curve whose H^0 and H^2 contribute 1 + q^n to N_n,
/// from N_1..N_d by Newton's identities.
ExactPolynomial lpoly_from_counts(long q, const std::vector<long>& counts, int degree);
/// Points of a P^1 with `nodes` self-intersections of rational slopes.
long split_node_fiber_count(long q, int nodes);

/// (a, b) -> (a u^-4, b u^-6) for u^4 = u4, reduced mod p.  DomainError when
/// a coefficient is not p-integral, u^6 is not rational while b != 0, or the
/// reduction is singular.
EllipticCurve rescale_weierstrass(const Rational& a, const Rational& b, const Rational& u4, long p);

// ---------------------------------------------------------------------------
// Integer polynomials

using IntPoly = std::vector<mpz_class>;  // constant term first, trimmed

IntPoly int_poly(const std::vector<long>& coeffs);
std::string int_poly_str(const IntPoly& p, char var = 'x');

struct IntFactorization {
    mpz_class content;
    std::vector<std::pair<IntPoly, int>> factors;  // primitive, positive leading coefficient
    IntPoly expand() const;
    std::string str(char var = 'x') const;
    /// Leading coefficient times monic factors, e.g. "6561 (x^4 + 4/3x^3 + ...)^2".
    std::string monic_str(char var = 'x') const;
};

/// Kronecker's method on each square-free part.  Sample points are those
/// with 0 < |value| <= 10^6 among 0, 1, -1, 2, -2, ...; InconclusiveError if
/// fewer than needed are found.
IntFactorization factor_integer_polynomial(const IntPoly& p);

/// Res_T(f(T), f(Tx)) / (x - 1)^(2 genus).  DomainError on a non-exact division.
IntPoly modified_resultant(const IntPoly& f, int genus);

struct StollVerdict {
    IntPoly resultant;
    IntFactorization factorization;
    std::vector<IntPoly> constant_term_one;  // monic irreducible factors with constant term 1
    bool holds() const { return constant_term_one.empty(); }
};

/// f an integer quartic with f(0) = 1.  DomainError if f is reducible.
StollVerdict stoll_criterion(const IntPoly& f);

// ---------------------------------------------------------------------------

/// Answers from good-reduction models: over each tagged descriptor the local
/// polynomial is the product of the components' factors over the residue
/// field F_(p^(k f_H)).
class CurveOracle : public EulerOracle {
public:
    struct Tag {
        FieldDescriptor field;
        std::vector<EllipticCurve> components;
    };
    CurveOracle(QuotientPtr quotient, long p, int k, std::vector<Tag> tags);
    EulerFactor query(const FieldDescriptor& field) const override;
    const QuotientPtr& quotient() const override { return quotient_; }

private:
    QuotientPtr quotient_;
    long p_;
    int k_;
    std::vector<Tag> tags_;
};

}  // namespace weilrep
