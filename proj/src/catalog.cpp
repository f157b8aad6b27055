#include <functional>
#include <map>

#include "weilrep/errors.hpp"
#include "weilrep/fixtures.hpp"
#include "weilrep/io.hpp"

namespace weilrep::io {

namespace {

CurveSpec elliptic_spec(long p, const EllipticCurve& e) {
    CurveSpec s;
    s.p = p;
    s.elliptic = e;
    return s;
}

std::map<std::string, std::function<std::string()>> entries() {
    auto text = [](const Document& d) { return print_document(d); };
    std::map<std::string, std::function<std::string()>> out;
    for (const auto& named : fixtures::registry()) {
        out[named.name] = [named, text] {
            if (named.rep) return text(rep_document(named.rep()));
            WeilDeligneRep wd = named.wd();
            return text(rep_document(wd.rho, wd.N));
        };
    }
    out["zhat_c4"] = [text] { return text(quotient_document(fixtures::zhat_c4())); };
    out["c4_half_ramified"] = [text] { return text(quotient_document(fixtures::c4_half_ramified())); };
    out["klein"] = [text] { return text(quotient_document(fixtures::klein())); };
    out["sd16"] = [text] { return text(quotient_document(fixtures::sd16())); };
    out["trivial_2633"] = [text] { return text(quotient_document(fixtures::trivial_2633())); };
    out["example_3_1_table"] = [text] { return text(table_document(fixtures::example_3_1_table())); };
    out["example_3_2_table"] = [text] { return text(table_document(fixtures::example_3_2_table())); };
    out["genus2_curve"] = [text] {
        CurveSpec s;
        s.model = CurveSpec::Model::hyperelliptic;
        s.hyperelliptic = fixtures::genus2_curve();
        return text(curve_document(s));
    };
    out["fiber_13_e1"] = [text] { return text(curve_document(elliptic_spec(13, fixtures::fiber_13().e1))); };
    out["fiber_13_e2"] = [text] { return text(curve_document(elliptic_spec(13, fixtures::fiber_13().e2))); };
    out["fiber_13_e2_prime"] = [text] {
        return text(curve_document(elliptic_spec(13, fixtures::fiber_13().e2_prime)));
    };
    out["node_fiber_2633"] = [text] {
        CurveSpec s;
        s.model = CurveSpec::Model::node_fiber;
        s.p = 2633;
        s.nodes = 2;
        return text(curve_document(s));
    };
    out["genus2_root_data"] = [text] { return text(root_data_document(genus2_twist_data())); };
    return out;
}

}  // namespace

std::vector<std::string> catalog_names() {
    std::vector<std::string> names;
    for (const auto& [name, make] : entries()) names.push_back(name);
    return names;
}

std::string catalog_document(const std::string& name) {
    auto all = entries();
    auto it = all.find(name);
    if (it == all.end()) throw DomainError("unknown fixture '" + name + "'");
    return it->second();
}

}  // namespace weilrep::io
