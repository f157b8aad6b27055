#include "weilrep/fixtures.hpp"

#include "weilrep/errors.hpp"
#include "weilrep/reconstruct.hpp"

namespace weilrep::fixtures {

namespace {

Cyclotomic gaussian(long a, long b) { return Cyclotomic(a) + Cyclotomic(b) * Cyclotomic::root_of_unity(4); }

LocalGaloisQuotient::Options named(std::string name, bool tame) {
    LocalGaloisQuotient::Options o;
    o.name = std::move(name);
    o.tame_check = tame;
    return o;
}

}  // namespace

QuotientPtr zhat_c4() {
    static const QuotientPtr q = [] {
        auto g = FiniteGroup::cyclic(4, "g");
        return LocalGaloisQuotient::make(g, whole_group(g), 0, 13, named("zhat_c4", true));
    }();
    return q;
}

QuotientPtr c4_half_ramified() {
    static const QuotientPtr q = [] {
        auto g = FiniteGroup::cyclic(4, "g");
        int gen = g->parse_element("g");
        return LocalGaloisQuotient::make(g, generate_subgroup(g, {g->parse_element("g^2")}), gen, 5,
                                         named("c4_half_ramified", true));
    }();
    return q;
}

QuotientPtr klein() {
    static const QuotientPtr q = [] {
        auto g = FiniteGroup::from_permutations({"a", "b"}, {parse_cycles("(1 2)", 4), parse_cycles("(3 4)", 4)});
        return LocalGaloisQuotient::make(g, generate_subgroup(g, {g->parse_element("a")}), g->parse_element("b"), 3,
                                         named("klein", true));
    }();
    return q;
}

QuotientPtr sd16() {
    static const QuotientPtr q = [] {
        auto sd = build_sd16();
        auto opts = named("sd16", false);
        opts.irreps = sd.irreps;
        opts.modulus = 16;
        return LocalGaloisQuotient::make(sd.group, sd.inertia, sd.group->parse_element("s^5"), 2, opts);
    }();
    return q;
}

QuotientPtr trivial_2633() {
    static const QuotientPtr q = [] {
        auto g = FiniteGroup::trivial();
        return LocalGaloisQuotient::make(g, whole_group(g), 0, 2633, named("trivial_2633", true));
    }();
    return q;
}

std::vector<QuotientPtr> corpus_quotients() { return {c4_half_ramified(), klein(), sd16(), zhat_c4()}; }

WeilRep example_3_1() {
    WeilRep rho(zhat_c4());
    rho.add("chi(1)", Twist(gaussian(-2, 3).inverse()));
    rho.add("chi(3)", Twist(gaussian(-2, -3).inverse()));
    return rho;
}

FieldDescriptor example_3_1_L() { return FieldDescriptor::unramified_top(zhat_c4(), 4); }

FieldDescriptor example_3_1_L_prime() {
    auto q = zhat_c4();
    return FieldDescriptor::generated(q, 4, {{q->group()->parse_element("g"), 1}});
}

Cyclotomic sqrt_minus_2() { return Cyclotomic::root_of_unity(8) + Cyclotomic::root_of_unity(8, 3); }

WeilRep example_3_2() {
    WeilRep a(sd16());
    a.add("rho", Twist(1));
    return twist(a, Twist(sqrt_minus_2().inverse()));
}

WeilRep example_3_2_prime() {
    WeilRep a(sd16());
    a.add("rho'", Twist(1));
    return twist(a, Twist(sqrt_minus_2().inverse()));
}

FieldDescriptor example_3_2_L() {
    auto q = sd16();
    return FieldDescriptor::generated(q, 16, {{q->group()->parse_element("s^5"), 1}});
}

WeilRep genus2_13() {
    WeilRep rho(zhat_c4());
    rho.add("chi(0)", Twist(gaussian(-2, -3).inverse()));
    rho.add("chi(0)", Twist(gaussian(-2, 3).inverse()));
    rho.add("chi(3)", Twist(gaussian(-2, -3).inverse()));
    rho.add("chi(1)", Twist(gaussian(-2, 3).inverse()));
    return rho;
}

WeilDeligneRep genus2_2633() {
    WeilRep rho(trivial_2633());
    const Cyclotomic inv_q(Rational(1, 2633));
    rho.add("triv", Twist(1)).add("triv", Twist(1)).add("triv", Twist(inv_q)).add("triv", Twist(inv_q));
    Matrix n(4, 4);
    n(0, 2) = Cyclotomic(1);
    n(1, 3) = Cyclotomic(1);
    WeilDeligneRep w{rho, n};
    validate_wd(w);
    return w;
}

TableOracle example_3_1_table() {
    auto q = zhat_c4();
    auto answer = [](const char* text) { return EulerFactor(ExactPolynomial::parse(text)); };
    return TableOracle(q, {{FieldDescriptor::base(q), answer("1")},
                           {example_3_1_L(), answer("1 + 4T + 13T^2")},
                           {example_3_1_L_prime(), answer("1 - 6T + 13T^2")}});
}

WeilRep example_3_2_untwisted() {
    WeilRep rho(sd16());
    rho.add("rho", Twist(1));
    return rho;
}

TableOracle example_3_2_table() {
    WeilRep rho = example_3_2_untwisted();
    RepOracle source(rho);
    std::vector<FieldDescriptor> fields;
    for (const auto& r : reconstruct(source, sd16()).query_log) fields.push_back(r.field);
    bool has_l = false;
    for (const auto& f : fields) has_l |= f.same_field(example_3_2_L());
    if (!has_l) fields.push_back(example_3_2_L());
    return tabulate(rho, fields);
}

HyperellipticCurve genus2_curve() { return {{-1, 1, 9, -6, -11, 1}, {1}}; }

IntPoly genus2_quartic() { return int_poly({1, -1, 2, -3, 9}); }

Fiber13 fiber_13() {
    // y^2 = (x + 2)(x^2 + 9x + 6); y^2 = x^3 - 26x rescaled by u^4 = 13 and u^4 = 26
    return {EllipticCurve{0, 11, 0, 24, 12}, rescale_weierstrass(Rational(-26), Rational(0), Rational(13), 13),
            rescale_weierstrass(Rational(-26), Rational(0), Rational(26), 13)};
}

CurveOracle genus2_13_curve_oracle() {
    auto q = zhat_c4();
    Fiber13 f = fiber_13();
    return CurveOracle(q, 13, 1,
                       {{FieldDescriptor::base(q), {f.e1}},
                        {example_3_1_L(), {f.e1, f.e2}},
                        {example_3_1_L_prime(), {f.e1, f.e2_prime}}});
}

const std::vector<Named>& registry() {
    static const std::vector<Named> entries = {
        {"example_3_1", "additive reduction over Zhat x C4, q = 13", example_3_1, {}},
        {"example_3_2", "rho (x) eta^-1 over SD16, q = 2", example_3_2, {}},
        {"example_3_2_untwisted", "rho over SD16, q = 2", example_3_2_untwisted, {}},
        {"example_3_2_prime", "rho' (x) eta^-1 over SD16, q = 2", example_3_2_prime, {}},
        {"genus2_13", "genus-2 Jacobian at 13", genus2_13, {}},
        {"genus2_2633", "genus-2 Jacobian at 2633 (Weil-Deligne)", {}, genus2_2633},
        {"tate_split_5", "Tate curve, split, q = 5", {}, [] { return tate_curve_rep(5, TateCharacter::trivial); }},
        {"tate_nonsplit_5", "Tate curve, nonsplit, q = 5", {},
         [] { return tate_curve_rep(5, TateCharacter::unramified_quadratic); }},
        {"tate_ramified_5", "Tate curve twisted by a ramified quadratic character, q = 5", {},
         [] { return tate_curve_rep(5, TateCharacter::ramified_quadratic); }},
    };
    return entries;
}

const Named& lookup(const std::string& name) {
    for (const auto& e : registry())
        if (e.name == name) return e;
    throw DomainError("unknown fixture '" + name + "'");
}

}  // namespace weilrep::fixtures
