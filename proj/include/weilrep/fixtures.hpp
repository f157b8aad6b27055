#pragma once

// Worked examples used by the tests, the acceptance suite and the CLI.

#include <functional>
#include <string>
#include <vector>

#include "weilrep/curves.hpp"
#include "weilrep/oracle.hpp"
#include "weilrep/quotient.hpp"
#include "weilrep/weilrep.hpp"

namespace weilrep::fixtures {

/// Zhat x C4 at q = 13: G = I = C4 = <g>, Frobenius acting trivially.
QuotientPtr zhat_c4();
/// C4 = <g> with inertia <g^2>, phi = g, q = 5.
QuotientPtr c4_half_ramified();
/// C2 x C2 = <a, b> with inertia <a>, phi = b, q = 3.
QuotientPtr klein();
/// SD16 with inertia Q8, phi = s^5, q = 2, modulus 16.
QuotientPtr sd16();
/// Trivial group at q = 2633.
QuotientPtr trivial_2633();

/// The four quotients the round-trip corpus is drawn from.
std::vector<QuotientPtr> corpus_quotients();

/// chi(1) x (Frob^-1 -> -2+3i) + chi(3) x (Frob^-1 -> -2-3i) on zhat_c4.
WeilRep example_3_1();
/// Descriptors of the worked example on zhat_c4: the kernel of inertia and
/// the field whose Frobenius maps to g.
FieldDescriptor example_3_1_L();
FieldDescriptor example_3_1_L_prime();

/// Answers over the base, L and L' only, without certified roots.
TableOracle example_3_1_table();

/// rho (x) eta^-1 with eta(Frob) = sqrt(-2).
WeilRep example_3_2();
WeilRep example_3_2_prime();
Cyclotomic sqrt_minus_2();
/// <(s^5, 1)>: totally ramified, Frobenius image generating <s>.
FieldDescriptor example_3_2_L();

/// rho alone, untwisted.
WeilRep example_3_2_untwisted();
/// Answers of rho over every descriptor the driver asks about, plus
/// example_3_2_L.
TableOracle example_3_2_table();

/// The genus-2 Jacobian at 13: Frob^-1 = diag(-2-3i, -2+3i, -2-3i, -2+3i).
WeilRep genus2_13();
/// The genus-2 Jacobian at 2633: two split multiplicative blocks.
WeilDeligneRep genus2_2633();

/// y^2 + y = x^5 - 11x^4 - 6x^3 + 9x^2 + x - 1, good reduction at 3.
HyperellipticCurve genus2_curve();
/// Its local factor at 3, as an integer quartic in T.
IntPoly genus2_quartic();

/// Components of the special fiber at 13: the normalization E1 and the curve
/// acquiring good reduction over L (E2) and over L' (E2').
struct Fiber13 {
    EllipticCurve e1;
    EllipticCurve e2;
    EllipticCurve e2_prime;
};
Fiber13 fiber_13();
/// The base tagged with E1, L with E1 and E2, L' with E1 and E2'.
CurveOracle genus2_13_curve_oracle();

struct Named {
    std::string name;
    std::string description;
    std::function<WeilRep()> rep;                 // empty for WD fixtures
    std::function<WeilDeligneRep()> wd;           // empty for plain fixtures
};

const std::vector<Named>& registry();
const Named& lookup(const std::string& name);

}  // namespace weilrep::fixtures
