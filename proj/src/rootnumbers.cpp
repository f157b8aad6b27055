#include "weilrep/rootnumbers.hpp"

#include "weilrep/errors.hpp"

namespace weilrep {

namespace {

void require_unit(const Cyclotomic& v, const char* what) {
    Cyclotomic sq = v * v;
    if (!(sq * sq).is_one()) throw DomainError(std::string(what) + " = " + v.str() + " is not in mu_4");
}

Cyclotomic sign_power(int sign, int exponent) { return (sign == -1 && exponent % 2 != 0) ? Cyclotomic(-1) : Cyclotomic(1); }

}  // namespace

QuadCharDatum QuadCharDatum::make(bool trivial, int chi_minus_one) {
    if (chi_minus_one != 1 && chi_minus_one != -1) throw DomainError("chi(-1) must be +1 or -1");
    if (trivial && chi_minus_one != 1) throw DomainError("the trivial character has chi(-1) = +1");
    return {trivial, chi_minus_one};
}

std::string QuadCharDatum::str() const {
    return std::string(trivial ? "trivial" : "quadratic") + ", chi(-1) = " + (chi_minus_one == 1 ? "+1" : "-1");
}

Cyclotomic w_chi_squared(const QuadCharDatum& chi) { return Cyclotomic(QuadCharDatum::make(chi.trivial, chi.chi_minus_one).chi_minus_one); }

Cyclotomic twisted_root_number(const LocalRootDatum& d, const QuadCharDatum& chi) {
    QuadCharDatum c = QuadCharDatum::make(chi.trivial, chi.chi_minus_one);
    if (c.trivial) throw DomainError("twisted root number needs a nontrivial character");
    require_unit(d.w_V, "w(V)");
    require_unit(d.w_V_over_F, "w(V/F)");
    return d.w_V_over_F * sign_power(c.chi_minus_one, d.g) / d.w_V;
}

Cyclotomic global_root_number(const std::vector<PlaceValue>& locals) {
    Cyclotomic out(1);
    for (const auto& [place, value] : locals) {
        require_unit(value, ("w_" + place).c_str());
        out *= value;
    }
    return out;
}

TwistData genus2_twist_data() {
    TwistData d;
    d.first = {Cyclotomic(1), Cyclotomic(1), 1};
    d.second = {Cyclotomic(-1), Cyclotomic(1), 1};
    d.semistable = {{"2633", Cyclotomic(1)}};
    return d;
}

RootNumberReport j_twist_root_number(const QuadCharDatum& chi, const TwistData& data) {
    // The untwisted branch never reads chi(-1), so a trivial datum is accepted with either sign.
    QuadCharDatum c = QuadCharDatum::make(false, chi.chi_minus_one);
    c.trivial = chi.trivial;
    RootNumberReport out;
    out.ledger.push_back({"inf", sign_power(-1, data.dimension)});
    Cyclotomic additive = c.trivial ? data.first.w_V * data.second.w_V
                                    : twisted_root_number(data.first, c) * twisted_root_number(data.second, c);
    out.ledger.push_back({data.additive_place, additive});
    for (const auto& pv : data.semistable) out.ledger.push_back(pv);
    out.value = global_root_number(out.ledger);
    return out;
}

}  // namespace weilrep
