#include "weilrep/reconstruct.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "weilrep/errors.hpp"
#include "weilrep/fixtures.hpp"

namespace weilrep {

namespace {

using Elem = std::pair<long, int>;  // (m mod M, g)

long mod(long a, long n) { return ((a % n) + n) % n; }

long position(const FieldDescriptor& d, const Elem& e) {
    const auto& el = d.elements();
    auto it = std::lower_bound(el.begin(), el.end(), e);
    if (it == el.end() || *it != e) return -1;
    return it - el.begin();
}

std::vector<std::pair<long, long>> prime_powers(long n) {
    std::vector<std::pair<long, long>> out;
    for (long p : prime_factors(n)) {
        long pk = 1;
        while (n % (pk * p) == 0) pk *= p;
        out.emplace_back(p, pk);
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Descent

std::string DescentCheck::str() const {
    std::ostringstream os;
    os << "index " << index << " (want " << expected_index << "), f_L " << f_L << " (want " << expected_f
       << "), image " << (image_is_C ? "ok" : "wrong") << ", inertia " << (inertia_trivial ? "trivial" : "nontrivial");
    return os.str();
}

FieldDescriptor descent_descriptor(const FieldDescriptor& cyclic, long target_modulus) {
    const auto& q = cyclic.quotient();
    const auto& group = q->group();
    const long level = cyclic.modulus();
    const auto& el = cyclic.elements();
    const long n = cyclic.order();
    auto mul = [&](const Elem& a, const Elem& b) { return Elem{(a.first + b.first) % level, group->mul(a.second, b.second)}; };

    // least-index generator and discrete logarithms relative to it
    std::vector<long> dlog(el.size(), -1);
    bool found = false;
    for (const auto& c0 : el) {
        std::vector<long> logs(el.size(), -1);
        Elem cur{0, 0};
        long k = 0;
        do {
            logs[position(cyclic, cur)] = k++;
            cur = mul(cur, c0);
        } while (cur != Elem{0, 0});
        if (k == n) {
            dlog = std::move(logs);
            found = true;
            break;
        }
    }
    if (!found) throw DomainError("descriptor " + cyclic.str() + " is not cyclic");

    const long f_c = cyclic.f();
    Elem frob{f_c % level, group->pow(q->phi(), f_c)};
    if (position(cyclic, frob) < 0) frob = {f_c % level, cyclic.frob().g};
    const long d_frob = dlog[position(cyclic, frob)];

    struct Part {
        long pk;
        long a;
    };
    std::vector<Part> parts;
    for (auto [p, pk] : prime_powers(n)) {
        bool totally_ramified = false;
        for (std::size_t i = 0; i < el.size(); ++i)
            if (el[i].first == 0 && dlog[i] % p != 0) totally_ramified = true;
        parts.push_back({pk, totally_ramified ? pk - 1 : mod(-d_frob, pk)});
    }

    const long required = std::lcm(level, n * f_c);
    if (target_modulus == 0) target_modulus = required;
    if (target_modulus % required != 0) {
        throw ConfigurationError("descent for " + cyclic.str() + " needs a modulus divisible by " +
                                 std::to_string(required) + ", got " + std::to_string(target_modulus));
    }
    auto whole = FieldDescriptor::base(q, target_modulus);
    std::vector<WeilElement> members;
    for (const auto& [m, g] : whole.elements()) {
        long pos = position(cyclic, {m % level, g});
        if (pos < 0) continue;
        bool in = true;
        for (const auto& part : parts)
            if (mod(dlog[pos] + part.a * (m / f_c), part.pk) != 0) in = false;
        if (in) members.push_back({g, m});
    }
    return FieldDescriptor::generated(q, target_modulus, members);
}

FieldDescriptor descent_descriptor(const QuotientPtr& quotient, long modulus) {
    if (!quotient->group()->is_cyclic()) throw DomainError("descent of the whole extension needs a cyclic G");
    if (modulus == 0) modulus = quotient->modulus();
    const long n = quotient->group()->order();
    if (modulus % n != 0) {
        throw ConfigurationError("modulus " + std::to_string(modulus) + " is too small: the descent needs a multiple of " +
                                 std::to_string(n));
    }
    return descent_descriptor(FieldDescriptor::base(quotient, quotient->f()), modulus);
}

DescentCheck check_descent(const FieldDescriptor& cyclic, const FieldDescriptor& descent) {
    DescentCheck c;
    c.expected_index = cyclic.e();
    c.expected_f = cyclic.f();
    c.f_L = descent.f();
    c.inertia_trivial = descent.e() == 1;
    auto lifted = cyclic.lift(descent.modulus());
    bool inside = true;
    std::vector<Elem> image;
    for (const auto& [m, g] : descent.elements()) {
        if (!lifted.contains(g, m)) inside = false;
        image.emplace_back(m % cyclic.modulus(), g);
    }
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    c.index = inside ? lifted.order() / descent.order() : -1;
    c.image_is_C = image == cyclic.elements();
    return c;
}

// ---------------------------------------------------------------------------
// Cyclic and Artin steps

std::vector<Cyclotomic> reconstruct_cyclic(const EulerOracle& oracle, const FieldDescriptor& cyclic,
                                           std::vector<DescentRecord>* descents) {
    auto l = descent_descriptor(cyclic);
    auto check = check_descent(cyclic, l);
    if (!check.ok()) throw VerificationError("descent field " + l.str() + " fails its postconditions: " + check.str());
    if (descents) descents->push_back({cyclic, l});
    auto roots = certify_roots(oracle.query(l));
    for (const auto& b : roots.roots())
        if (!is_root_of_unity(b)) {
            throw DomainError("root " + b.str() + " over " + l.str() + " is not of finite order; untwist first");
        }
    const auto& group = cyclic.quotient()->group();
    const long level = cyclic.modulus();
    const Elem h{l.frob().m % level, l.frob().g};
    std::vector<Cyclotomic> values(cyclic.order());
    std::vector<bool> filled(cyclic.order(), false);
    Elem cur{0, 0};
    for (long k = 0; k < cyclic.order(); ++k) {
        long pos = position(cyclic, cur);
        Cyclotomic v;
        for (const auto& b : roots.roots()) v += b.pow(-k);
        values[pos] = v;
        filled[pos] = true;
        cur = {(cur.first + h.first) % level, group->mul(cur.second, h.second)};
    }
    if (std::find(filled.begin(), filled.end(), false) != filled.end()) {
        throw VerificationError("Frobenius of " + l.str() + " does not generate " + cyclic.str());
    }
    return values;
}

ClassFunction reconstruct_cyclic(const EulerOracle& oracle, const QuotientPtr& quotient) {
    if (!quotient->group()->is_cyclic()) throw DomainError("reconstruct_cyclic needs a cyclic G");
    auto c = FieldDescriptor::base(quotient, quotient->f());
    auto values = reconstruct_cyclic(oracle, c);
    std::vector<Cyclotomic> per_g(quotient->group()->order());
    for (std::size_t i = 0; i < values.size(); ++i) per_g[c.elements()[i].second] = values[i];
    return ClassFunction::from_element_values(quotient->group(), per_g);
}

std::vector<Cyclotomic> reconstruct_artin_level(const EulerOracle& oracle, const QuotientPtr& quotient, long level,
                                                std::vector<DescentRecord>* descents) {
    const auto& group = quotient->group();
    auto base = FieldDescriptor::base(quotient, level);
    const auto& el = base.elements();
    // Conjugation in W only moves the G-coordinate: classes are (m, class of g).
    std::vector<int> class_id(el.size(), -1);
    std::vector<std::vector<long>> classes;
    for (std::size_t i = 0; i < el.size(); ++i) {
        if (class_id[i] >= 0) continue;
        std::vector<long> members;
        for (int x : group->conjugacy_classes()[group->class_of(el[i].second)]) {
            long pos = position(base, {el[i].first, x});
            if (pos >= 0 && class_id[pos] < 0) {
                class_id[pos] = static_cast<int>(classes.size());
                members.push_back(pos);
            }
        }
        classes.push_back(std::move(members));
    }
    auto order_of = [&](long pos) {
        auto [m, g] = el[pos];
        return std::lcm(static_cast<long>(group->element_order(g)), level / std::gcd(m, level));
    };
    std::vector<std::size_t> sequence(classes.size());
    std::iota(sequence.begin(), sequence.end(), 0);
    std::stable_sort(sequence.begin(), sequence.end(),
                     [&](std::size_t a, std::size_t b) { return order_of(classes[a][0]) > order_of(classes[b][0]); });

    std::vector<std::optional<Cyclotomic>> class_value(classes.size());
    for (std::size_t c : sequence) {
        if (class_value[c]) continue;
        auto [m, g] = el[classes[c][0]];
        auto cyc = FieldDescriptor::generated(quotient, level, {{g, m}});
        auto values = reconstruct_cyclic(oracle, cyc, descents);
        for (std::size_t i = 0; i < values.size(); ++i) {
            int id = class_id[position(base, cyc.elements()[i])];
            if (!class_value[id]) class_value[id] = values[i];
        }
    }
    std::vector<Cyclotomic> out(el.size());
    for (std::size_t i = 0; i < el.size(); ++i) out[i] = *class_value[class_id[i]];
    return out;
}

ClassFunction reconstruct_artin(const EulerOracle& oracle, const QuotientPtr& quotient) {
    auto values = reconstruct_artin_level(oracle, quotient, quotient->f());
    auto base = FieldDescriptor::base(quotient, quotient->f());
    std::vector<Cyclotomic> per_g(quotient->group()->order());
    for (std::size_t i = 0; i < values.size(); ++i) per_g[base.elements()[i].second] = values[i];
    return ClassFunction::from_element_values(quotient->group(), per_g);
}

// ---------------------------------------------------------------------------
// Roots and twisting

std::vector<MuClass> split_by_mu_class(const InverseRootMultiset& roots) {
    std::vector<MuClass> out;
    for (const auto& b : roots.roots()) {
        if (b.is_zero()) throw DomainError("zero inverse root");
        auto it = std::find_if(out.begin(), out.end(), [&](const MuClass& c) { return mu_class_equal(c.representative, b); });
        if (it == out.end()) {
            out.push_back({b, {b}});
        } else {
            it->roots.push_back(b);
            if (canonical_less(b, it->representative)) it->representative = b;
        }
    }
    return out;
}

namespace {

bool divide_out(ExactPolynomial& p, const Cyclotomic& beta) {
    if (p.degree() < 1) return false;
    auto [quot, rem] = p.divmod(ExactPolynomial::linear_factor(beta));
    if (!rem.is_zero()) return false;
    p = quot;
    return true;
}

std::optional<std::vector<Cyclotomic>> small_roots(const ExactPolynomial& p) {
    try {
        return quadratic_inverse_roots(p.normalized()).roots();
    } catch (const UnsupportedError&) {
        return std::nullopt;
    }
}

}  // namespace

InverseRootMultiset certify_roots(const EulerFactor& answer, const std::vector<Cyclotomic>& candidates, bool complete) {
    if (answer.roots) return *answer.roots;
    ExactPolynomial p = answer.poly;
    if (p.degree() <= 2) {
        if (auto r = small_roots(p)) return InverseRootMultiset(*r);
    }
    std::vector<Cyclotomic> found;
    for (const auto& c : candidates)
        while (divide_out(p, c)) found.push_back(c);
    if (p.degree() > 0) {
        ExactPolynomial squarefree = p.divmod(poly_gcd(p, p.derivative())).first;
        if (squarefree.degree() <= 2) {
            if (auto r = small_roots(squarefree)) {
                for (const auto& b : *r)
                    while (divide_out(p, b)) found.push_back(b);
            }
        }
    }
    if (p.degree() > 0 && complete) {
        throw UnsupportedError("cannot certify the inverse roots of " + answer.poly.pretty() +
                               "; give them explicitly");
    }
    return InverseRootMultiset(std::move(found));
}

TwistedOracle::TwistedOracle(const EulerOracle& inner, Twist psi, bool finite_only, long root_order)
    : inner_(inner), psi_(std::move(psi)), finite_only_(finite_only), root_order_(root_order) {}

EulerFactor TwistedOracle::query(const FieldDescriptor& field) const {
    EulerFactor answer = inner_.query(field);
    const Cyclotomic scale = psi_.power(-field.f());
    std::vector<Cyclotomic> candidates;
    if (!answer.roots && root_order_ > 0) {
        const Cyclotomic unscale = scale.inverse();
        for (long j = 0; j < root_order_; ++j) candidates.push_back(Cyclotomic::root_of_unity(static_cast<int>(root_order_), j) * unscale);
    }
    auto roots = certify_roots(answer, candidates, !finite_only_);
    InverseRootMultiset out;
    for (const auto& b : roots.roots()) {
        Cyclotomic x = b * scale;
        if (finite_only_ && !is_root_of_unity(x)) continue;
        out.add(x);
    }
    return EulerFactor::from_roots(out);
}

// ---------------------------------------------------------------------------
// Driver

namespace {

class RecordingOracle : public EulerOracle {
public:
    RecordingOracle(const EulerOracle& inner, const std::function<void(const std::string&)>& trace)
        : inner_(inner), trace_(trace) {}

    EulerFactor query(const FieldDescriptor& field) const override {
        auto canon = field.canonical();
        auto key = std::make_pair(canon.modulus(), canon.elements());
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        EulerFactor answer = inner_.query(field);
        memo_.emplace(key, answer);
        log_.push_back({field, answer});
        if (trace_) trace_("query " + field.str() + " -> " + answer.poly.pretty());
        return answer;
    }
    const QuotientPtr& quotient() const override { return inner_.quotient(); }
    const std::vector<QueryRecord>& log() const { return log_; }

private:
    const EulerOracle& inner_;
    const std::function<void(const std::string&)>& trace_;
    mutable std::map<std::pair<long, std::vector<Elem>>, EulerFactor> memo_;
    mutable std::vector<QueryRecord> log_;
};

std::optional<Twist> probe_twist(const RecordingOracle& oracle, const QuotientPtr& q, const Cyclotomic& beta) {
    const long f = q->f();
    const long modulus = std::lcm(f, static_cast<long>(q->group()->element_order(q->phi())));
    auto probe = FieldDescriptor::generated(q, modulus, {{q->phi(), 1}});
    auto roots = certify_roots(oracle.query(probe), {}, false);
    for (const auto& x : roots.roots())
        if (mu_class_equal(x.pow(f), beta)) return Twist(x.inverse());
    return std::nullopt;
}

}  // namespace

ReconstructionResult reconstruct(const EulerOracle& oracle, const QuotientPtr& quotient, const ReconstructOptions& options) {
    if (oracle.quotient() != quotient) throw DomainError("oracle belongs to another quotient");
    RecordingOracle recorder(oracle, options.trace);
    const long f = quotient->f();
    std::vector<DescentRecord> descents;

    auto top = FieldDescriptor::unramified_top(quotient);
    auto top_roots = certify_roots(recorder.query(top));
    WeilRep assembled(quotient);
    for (const auto& cls : split_by_mu_class(top_roots)) {
        const Cyclotomic& beta = cls.representative;
        std::optional<Twist> lambda;
        if (auto r = nth_root(beta.inverse(), static_cast<int>(f))) lambda = Twist(*r);
        if (!lambda) lambda = probe_twist(recorder, quotient, beta);
        if (!lambda) lambda = Twist::radical(beta.inverse(), static_cast<int>(f));

        long orders = 1;
        for (const auto& b : cls.roots) {
            auto o = is_root_of_unity(b * lambda->power(f));
            if (!o) throw VerificationError("inverse roots over " + top.str() + " are inconsistent");
            orders = std::lcm(orders, static_cast<long>(*o));
        }
        const long level = f * orders;
        if (options.trace) {
            options.trace("class " + beta.str() + ": " + std::to_string(cls.roots.size()) + " roots, lambda " +
                          lambda->str() + ", level " + std::to_string(level));
        }
        TwistedOracle untwisted(recorder, lambda->inverse(), true, std::lcm(static_cast<long>(quotient->group()->exponent()), level));
        auto values = reconstruct_artin_level(untwisted, quotient, level, &descents);
        auto atoms = decompose_artin_character(quotient, level, values);
        long dim = 0;
        for (const auto& a : atoms) dim += static_cast<long>(a.multiplicity) * quotient->irreps()[a.irrep].rep.dim();
        if (dim != static_cast<long>(cls.roots.size())) {
            throw VerificationError("class of " + beta.str() + " reconstructs to dimension " + std::to_string(dim) +
                                    ", expected " + std::to_string(cls.roots.size()));
        }
        for (const auto& a : atoms) {
            if (lambda->is_radical() && a.zeta_order != 1) {
                throw UnsupportedError("formal radical twist " + lambda->str() + " with a nontrivial root-of-unity factor");
            }
            Twist t = *lambda * Twist(Cyclotomic::root_of_unity(a.zeta_order, a.zeta_exponent));
            for (int k = 0; k < a.multiplicity; ++k) assembled.add(quotient->irreps()[a.irrep].name, t);
        }
    }

    ReconstructionResult result{canonical_decomposition(assembled), recorder.log(), std::move(descents)};
    for (const auto& rec : result.query_log) {
        if (!(euler_factor(result.rep, rec.field).poly == rec.answer.poly)) {
            throw VerificationError("reconstruction does not reproduce the answer over " + rec.field.str());
        }
    }
    return result;
}

bool verify_reconstruction(const WeilRep& rep, const EulerOracle& oracle, const std::vector<FieldDescriptor>& fields) {
    for (const auto& d : fields)
        if (!(euler_factor(rep, d).poly == oracle.query(d).poly)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Corpus

std::vector<WeilRep> generate_corpus(std::uint64_t seed, int count) {
    std::mt19937_64 rng(seed);
    auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
    const Cyclotomic i = Cyclotomic::root_of_unity(4);
    const Cyclotomic s2 = fixtures::sqrt_minus_2();
    const std::vector<Cyclotomic> scalars = {
        Cyclotomic(1),       Cyclotomic(-2),      Cyclotomic(2) + Cyclotomic(3) * i, Cyclotomic(2) - Cyclotomic(3) * i,
        Cyclotomic(-2) + Cyclotomic(3) * i, Cyclotomic(-2) - Cyclotomic(3) * i, s2, Cyclotomic(1) + s2, s2.inverse()};
    const std::vector<int> root_orders = {1, 2, 4, 8};
    auto quotients = fixtures::corpus_quotients();
    std::vector<WeilRep> out;
    for (int k = 0; k < count; ++k) {
        const auto& q = quotients[k % quotients.size()];
        WeilRep rho(q);
        const int target = 1 + static_cast<int>(pick(4));
        while (rho.dim() < target) {
            const auto& irreps = q->irreps();
            const auto& named = irreps[pick(irreps.size())];
            if (rho.dim() + named.rep.dim() > target) continue;
            int o = root_orders[pick(root_orders.size())];
            Cyclotomic lambda = scalars[pick(scalars.size())] * Cyclotomic::root_of_unity(o, static_cast<long>(pick(o)));
            if (pick(2) == 0) lambda = lambda.inverse();
            if (named.rep.dim() == 2 && pick(3) == 0) {
                long a = static_cast<long>(pick(5)) - 2, b = static_cast<long>(pick(5)) - 2;
                Matrix p({{Cyclotomic(1), Cyclotomic(a)}, {Cyclotomic(b), Cyclotomic(1 + a * b)}});
                rho.add(named.rep.change_basis(p), Twist(lambda));
            } else {
                rho.add(named.name, Twist(lambda));
            }
        }
        out.push_back(std::move(rho));
    }
    return out;
}

}  // namespace weilrep
