#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weilrep/cyclotomic.hpp"
#include "weilrep/group.hpp"
#include "weilrep/matrix.hpp"
#include "weilrep/quotient.hpp"

namespace weilrep {

/// Value of an unramified character at Frobenius.  Either a cyclotomic number
/// or a formal radical base^(1/index), kept symbolic; powers are exact when
/// the exponent is a multiple of the index.
class Twist {
public:
    Twist() : base_(1) {}
    Twist(Cyclotomic value);  // NOLINT(google-explicit-constructor)
    static Twist radical(Cyclotomic base, int index);

    bool is_radical() const noexcept { return index_ > 1; }
    const Cyclotomic& base() const noexcept { return base_; }
    int index() const noexcept { return index_; }
    /// The cyclotomic value; UnsupportedError for a radical.
    const Cyclotomic& value() const;
    /// lambda^m; UnsupportedError unless index divides m.
    Cyclotomic power(long m) const;

    Twist operator*(const Twist& other) const;
    Twist inverse() const;
    bool operator==(const Twist& other) const { return index_ == other.index_ && base_ == other.base_; }

    /// `cyc(...)` or `root(k; cyc(...))`.
    std::string str() const;
    static Twist parse(std::string_view text);

private:
    Cyclotomic base_;
    int index_ = 1;
};

bool mu_class_equal(const Twist& a, const Twist& b);

/// One summand A (x) psi of a Weil representation: an Artin representation of
/// G twisted by the unramified character Frob -> lambda.
struct Atom {
    MatrixRep artin;
    Twist lambda;
    /// Name of the irreducible when the Artin part is one of the quotient's irreps.
    std::string label;
};

class WeilRep {
public:
    explicit WeilRep(QuotientPtr quotient, std::vector<Atom> atoms = {});

    const QuotientPtr& quotient() const noexcept { return quotient_; }
    const std::vector<Atom>& atoms() const noexcept { return atoms_; }
    int dim() const;

    /// Atom with the quotient's irreducible of this name.
    WeilRep& add(const std::string& irrep, const Twist& lambda);
    WeilRep& add(const MatrixRep& artin, const Twist& lambda, std::string label = "");

    std::string str() const;

private:
    QuotientPtr quotient_;
    std::vector<Atom> atoms_;
};

struct EulerFactor {
    ExactPolynomial poly;
    std::optional<InverseRootMultiset> roots;

    EulerFactor() : poly(ExactPolynomial::one()), roots(InverseRootMultiset()) {}
    explicit EulerFactor(ExactPolynomial p);
    /// Checks that the roots expand to p.
    EulerFactor(ExactPolynomial p, InverseRootMultiset certified);
    static EulerFactor from_roots(const InverseRootMultiset& roots);

    bool operator==(const EulerFactor& other) const { return poly == other.poly; }
    std::string str() const;
};

/// Block-diagonal matrix of A_i(g) * lambda_i^m.
Matrix evaluate(const WeilRep& rho, const WeilElement& w);

struct InertiaInvariants {
    int dimension;
    Matrix projector;
};
InertiaInvariants inertia_invariants(const WeilRep& rho, const FieldDescriptor& field);

/// det(1 - rho(frob)^-1 T) on the inertia invariants, with certified roots.
EulerFactor euler_factor(const WeilRep& rho, const FieldDescriptor& field);
/// Same, using the given element of degree f_H as Frobenius.
EulerFactor euler_factor(const WeilRep& rho, const FieldDescriptor& field, const WeilElement& frob);

WeilRep twist(const WeilRep& rho, const Twist& psi);
WeilRep direct_sum(const WeilRep& a, const WeilRep& b);
WeilRep dual(const WeilRep& rho);

/// A component of the canonical decomposition: a mu-class representative nu
/// and the Artin part as multiplicities of irreducibles A (x) chi_zeta, where
/// chi_zeta(g, m) = zeta^m.
struct CanonicalAtom {
    int irrep;          // index into the quotient's irreps
    int zeta_order;     // zeta = zeta_order-th root of unity ...
    int zeta_exponent;  // ... raised to this power, coprime to the order
    int multiplicity;
    bool operator==(const CanonicalAtom&) const = default;
};

struct CanonicalComponent {
    Twist nu;
    std::vector<CanonicalAtom> atoms;
    bool operator==(const CanonicalComponent&) const = default;
};

/// Decompose a class function on W_M (values in FieldDescriptor::base(Q, M)
/// element order) into irreducibles A (x) chi_zeta.  Among irreducibles with
/// equal characters the first in (irrep, order, exponent) order is used.
std::vector<CanonicalAtom> decompose_artin_character(const QuotientPtr& quotient, long modulus,
                                                     const std::vector<Cyclotomic>& values);

/// Merge mu-equivalent twists, decompose each Artin part into irreducibles of
/// W_M', order components by the encoding of nu.
std::vector<CanonicalComponent> canonical_components(const WeilRep& rho);
/// The canonical components expanded back into a WeilRep.
WeilRep canonical_decomposition(const WeilRep& rho);
bool equal(const WeilRep& a, const WeilRep& b);

/// Unramified rep whose base Euler factor is p; needs certified roots.
WeilRep from_unramified_polynomial(const EulerFactor& p, const QuotientPtr& quotient);

// ---------------------------------------------------------------------------
// Weil-Deligne representations

struct WeilDeligneRep {
    WeilRep rho;
    Matrix N;
};

/// Checks nilpotency of N, Phi N Phi^-1 = q N for the base Frobenius, and
/// that N commutes with inertia.  Throws DomainError on failure.
void validate_wd(const WeilDeligneRep& w);

/// The sub-representation ker N; requires ker N to be a union of atom blocks.
WeilRep kernel_subrep(const WeilDeligneRep& w);

/// Euler factor on (inertia invariants) intersected with ker N.
EulerFactor wd_euler_factor(const WeilDeligneRep& w, const FieldDescriptor& field);

enum class TateCharacter { trivial, unramified_quadratic, ramified_quadratic };

/// Quotient shared by the Tate-curve fixtures: G = I = C2, f = 1.
QuotientPtr tate_quotient(long q);
/// chi + chi * (Frob -> 1/q) with N the off-diagonal nilpotent.
WeilDeligneRep tate_curve_rep(long q, TateCharacter chi);

}  // namespace weilrep
