#pragma once

// Root-number identities for quadratic twists and the global product over
// places.  Local inputs are data; nothing here computes an epsilon factor.

#include <string>
#include <vector>

#include "weilrep/cyclotomic.hpp"

namespace weilrep {

struct QuadCharDatum {
    bool trivial = true;
    int chi_minus_one = 1;  // chi(-1), +1 or -1

    static QuadCharDatum make(bool trivial, int chi_minus_one);
    std::string str() const;
};

struct LocalRootDatum {
    Cyclotomic w_V;
    Cyclotomic w_V_over_F;
    int g = 1;
};

/// w(chi)^2 = chi(-1).
Cyclotomic w_chi_squared(const QuadCharDatum& chi);

/// w(V (x) chi) = w(V/F) chi(-1)^g / w(V), F the field cut out by chi.
/// DomainError for trivial chi or values outside mu_4.
Cyclotomic twisted_root_number(const LocalRootDatum& d, const QuadCharDatum& chi);

struct PlaceValue {
    std::string place;
    Cyclotomic value;
};

/// Product of the listed local values; unlisted places contribute +1.
Cyclotomic global_root_number(const std::vector<PlaceValue>& locals);

/// Local inputs for quadratic twists of an abelian surface whose only
/// additive place splits into two elliptic components.
struct TwistData {
    std::string additive_place = "13";
    LocalRootDatum first;   // E
    LocalRootDatum second;  // E'
    int dimension = 2;
    std::vector<PlaceValue> semistable;  // overridable, +1 by default
};

/// w(E) = +1, w(E') = -1, w(E/F) = w(E'/F) = +1 at 13; 2633 semistable.
TwistData genus2_twist_data();

struct RootNumberReport {
    Cyclotomic value;
    std::vector<PlaceValue> ledger;  // infinity, then the additive place, then semistable places
};

/// Accepts a trivial datum with either chi(-1); only the twisted branch reads it.
RootNumberReport j_twist_root_number(const QuadCharDatum& chi, const TwistData& data = genus2_twist_data());

}  // namespace weilrep
