#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_N).
//
// Every value is stored at its least conductor N (N = 1 or N != 2 mod 4) as
// rational coordinates on the power basis 1, z, ..., z^(phi(N)-1) of
// Q[z]/Phi_N(z).  Two equal values therefore have identical encodings, and
// the textual form `cyc(N; k1:c1, k2:c2, ...)` round-trips byte-exactly.

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace weilrep {

using Rational = mpq_class;

/// Conductor ceiling applied to every intermediate field.  Defaults to 240;
/// WEILREP_CONDUCTOR_CEILING overrides it (read once per process).
int conductor_ceiling();

class Cyclotomic {
public:
    Cyclotomic();  // zero
    Cyclotomic(long value);  // NOLINT(google-explicit-constructor)
    Cyclotomic(const Rational& value);  // NOLINT(google-explicit-constructor)

    /// zeta_order^k for any integer k.
    static Cyclotomic root_of_unity(int order, long k = 1);

    /// sum c * zeta_conductor^k over the given (k, c) terms; k may be any integer.
    static Cyclotomic from_terms(int conductor, const std::vector<std::pair<long, Rational>>& terms);

    /// Parse `cyc(N; k:c, ...)`, a bare rational `p/q`, or an integer.
    static Cyclotomic parse(std::string_view text);

    int conductor() const noexcept { return conductor_; }
    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const noexcept { return conductor_ == 1; }
    /// Throws DomainError if the value is not rational.
    Rational to_rational() const;

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& other);
    Cyclotomic& operator-=(const Cyclotomic& other);
    Cyclotomic& operator*=(const Cyclotomic& other);
    Cyclotomic& operator/=(const Cyclotomic& other);

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

    Cyclotomic inverse() const;
    Cyclotomic pow(long exponent) const;
    /// Complex conjugation, zeta -> zeta^-1.
    Cyclotomic conj() const;
    /// The automorphism zeta_N -> zeta_N^a of the value's own field; gcd(a, N) = 1.
    Cyclotomic galois(long a) const;

    std::string str() const;

private:
    Cyclotomic(int conductor, std::vector<Rational> coeffs);
    friend struct CyclotomicAccess;

    int conductor_;
    std::vector<Rational> coeffs_;
};

/// Total order on encodings: conductor first, then coordinates compared from
/// the constant term upward with the larger coordinate first.  Used for every
/// deterministic choice (square-root signs, mu-class representatives).
bool canonical_less(const Cyclotomic& a, const Cyclotomic& b);

struct CanonicalLess {
    bool operator()(const Cyclotomic& a, const Cyclotomic& b) const { return canonical_less(a, b); }
};

/// The multiplicative order of `a` when it is a root of unity.
std::optional<int> is_root_of_unity(const Cyclotomic& a);

/// a / b is a root of unity.  Zero inputs throw DomainError.
bool mu_class_equal(const Cyclotomic& a, const Cyclotomic& b);

/// Deterministic representative of a * mu_infinity: the canonically least
/// element of {zeta * a} over the roots of unity of a's field, iterated until
/// the conductor stops dropping.
Cyclotomic mu_class_representative(const Cyclotomic& a);

/// s with s^2 = r, built from zeta_4, zeta_8 - zeta_8^3 and quadratic Gauss
/// sums; of the two roots the canonically least is returned.
Cyclotomic sqrt_rational(const Rational& r);

/// An exact n-th root of a when a = (root of unity) * (positive rational) and
/// the rational part has a rational or square-root-expressible n-th root.
/// Absent otherwise, or when the result would exceed the conductor ceiling.
std::optional<Cyclotomic> nth_root(const Cyclotomic& a, int n);

/// Integer helpers shared by the field code.
long euler_phi(long n);
std::vector<long> prime_factors(long n);

// ---------------------------------------------------------------------------
// Polynomials over cyclotomic numbers, constant term first.

class ExactPolynomial {
public:
    ExactPolynomial() = default;  // zero polynomial
    explicit ExactPolynomial(std::vector<Cyclotomic> coeffs);
    static ExactPolynomial one() { return ExactPolynomial({Cyclotomic(1)}); }
    /// 1 - beta*T
    static ExactPolynomial linear_factor(const Cyclotomic& beta);

    const std::vector<Cyclotomic>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    Cyclotomic coeff(int i) const;
    bool has_rational_coefficients() const;

    ExactPolynomial operator+(const ExactPolynomial& other) const;
    ExactPolynomial operator-(const ExactPolynomial& other) const;
    ExactPolynomial operator*(const ExactPolynomial& other) const;
    ExactPolynomial pow(int e) const;
    bool operator==(const ExactPolynomial& other) const = default;

    Cyclotomic evaluate(const Cyclotomic& x) const;
    /// P(c*T)
    ExactPolynomial scale_variable(const Cyclotomic& c) const;
    ExactPolynomial derivative() const;
    /// Quotient and remainder; DomainError for a zero divisor.
    std::pair<ExactPolynomial, ExactPolynomial> divmod(const ExactPolynomial& divisor) const;
    /// Scaled to constant term 1; DomainError when the constant term is 0.
    ExactPolynomial normalized() const;

    /// "1 + 4T + 13T^2"; non-rational coefficients appear in cyc(...) form.
    std::string pretty() const;
    /// "[c0, c1, ...]" with each entry in cyc(...) form.
    std::string str() const;
    static ExactPolynomial parse(std::string_view text);

private:
    void trim();
    std::vector<Cyclotomic> coeffs_;
};

/// Multiset of inverse roots beta with P(T) = prod (1 - beta T), kept sorted
/// by canonical_less so that equal multisets compare equal.
class InverseRootMultiset {
public:
    InverseRootMultiset() = default;
    explicit InverseRootMultiset(std::vector<Cyclotomic> roots);

    const std::vector<Cyclotomic>& roots() const noexcept { return roots_; }
    std::size_t size() const noexcept { return roots_.size(); }
    bool empty() const noexcept { return roots_.empty(); }
    void add(const Cyclotomic& beta, int multiplicity = 1);
    InverseRootMultiset merged(const InverseRootMultiset& other) const;
    /// Each root multiplied by c.
    InverseRootMultiset scaled(const Cyclotomic& c) const;
    bool operator==(const InverseRootMultiset& other) const = default;

    std::string str() const;
    static InverseRootMultiset parse(std::string_view text);

private:
    std::vector<Cyclotomic> roots_;
};

ExactPolynomial expand_from_inverse_roots(const InverseRootMultiset& roots);

/// Greatest common divisor, scaled to constant term 1 (inputs with nonzero
/// constant terms), or to leading coefficient 1 otherwise.
ExactPolynomial poly_gcd(ExactPolynomial a, ExactPolynomial b);

/// Inverse roots of 1 + bT + cT^2 (or lower degree) by the quadratic formula.
/// Throws UnsupportedError when b^2 - 4c is not rational, DomainError when the
/// constant term is not 1 or the degree exceeds 2.
InverseRootMultiset quadratic_inverse_roots(const ExactPolynomial& p);

}  // namespace weilrep
