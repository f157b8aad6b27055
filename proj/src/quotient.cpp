#include "weilrep/quotient.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "weilrep/errors.hpp"

namespace weilrep {

namespace {

long mod(long a, long n) { return ((a % n) + n) % n; }

bool is_prime_power(long q) {
    if (q < 2) return false;
    auto ps = prime_factors(q);
    return ps.size() == 1;
}

std::vector<NamedRep> auto_irreps(const GroupPtr& group) {
    std::vector<NamedRep> out;
    for (auto& rep : abelian_characters(group)) {
        std::string name = "chi(";
        const auto& gens = group->generators();
        for (std::size_t i = 0; i < gens.size(); ++i) {
            int o = group->element_order(gens[i]);
            const Cyclotomic& v = rep(gens[i])(0, 0);
            int k = 0;
            while (k < o && !(Cyclotomic::root_of_unity(o, k) == v)) ++k;
            name += (i ? "," : "") + std::to_string(k);
        }
        name += ")";
        if (gens.empty()) name = "triv";
        out.push_back({name, std::move(rep)});
    }
    return out;
}

}  // namespace

QuotientReport validate_quotient(const GroupPtr& group, const Subgroup& inertia, int phi, long q, long modulus,
                                 bool tame_check) {
    QuotientReport report;
    auto fail = [&](std::string msg) {
        report.ok = false;
        report.violations.push_back(std::move(msg));
    };
    if (inertia.parent() != group) fail("inertia is not a subgroup of G");
    if (!inertia.is_normal()) fail("inertia subgroup is not normal");
    if (phi < 0 || phi >= group->order()) {
        fail("phi is not an element of G");
        return report;
    }
    const int f = group->order() / inertia.order();
    int m = 1;
    int x = phi;
    while (!inertia.contains(x)) {
        x = group->mul(x, phi);
        ++m;
    }
    if (m != f) fail("phi does not generate G/I (order " + std::to_string(m) + ", index " + std::to_string(f) + ")");
    if (!is_prime_power(q)) fail("q = " + std::to_string(q) + " is not a prime power");
    if (modulus <= 0 || modulus % f != 0) fail("modulus " + std::to_string(modulus) + " is not a positive multiple of f");
    if (tame_check && report.ok) {
        for (int g : inertia.elements()) {
            if (group->conjugate(g, phi) != group->pow(g, q)) {
                fail("tame relation fails at " + group->name(g));
                break;
            }
        }
    }
    return report;
}

QuotientPtr LocalGaloisQuotient::make(GroupPtr group, Subgroup inertia, int phi, long q, Options options) {
    const int f = group->order() / inertia.order();
    long modulus = options.modulus ? options.modulus : static_cast<long>(f) * group->exponent();
    auto report = validate_quotient(group, inertia, phi, q, modulus, options.tame_check);
    if (!report.ok) {
        std::string msg = "invalid quotient:";
        for (const auto& v : report.violations) msg += " " + v + ";";
        throw DomainError(msg);
    }
    auto out = std::shared_ptr<LocalGaloisQuotient>(new LocalGaloisQuotient());
    out->group_ = group;
    out->inertia_ = inertia;
    out->phi_ = phi;
    out->q_ = q;
    out->modulus_ = modulus;
    out->tame_check_ = options.tame_check;
    out->name_ = options.name;
    out->degree_.assign(group->order(), -1);
    int coset = 0;
    for (int k = 0; k < f; ++k) {
        for (int i : inertia.elements()) out->degree_[group->mul(coset, i)] = k;
        coset = group->mul(coset, phi);
    }
    if (options.irreps.empty()) {
        if (!group->is_abelian()) throw DomainError("non-abelian quotient needs an explicit irreducible list");
        out->irreps_ = auto_irreps(group);
    } else {
        out->irreps_ = std::move(options.irreps);
    }
    long sum = 0;
    for (std::size_t i = 0; i < out->irreps_.size(); ++i) {
        const auto& r = out->irreps_[i].rep;
        if (r.group() != group) throw DomainError("irrep " + out->irreps_[i].name + " lives on another group");
        sum += static_cast<long>(r.dim()) * r.dim();
        for (std::size_t j = 0; j <= i; ++j) {
            Cyclotomic ip = inner_product(r.character(), out->irreps_[j].rep.character());
            if (!(ip == Cyclotomic(i == j ? 1 : 0))) throw DomainError("irreducible list is not orthonormal");
        }
    }
    if (sum != group->order()) throw DomainError("irreducible list is incomplete");
    return out;
}

int LocalGaloisQuotient::irrep_index(const std::string& name) const {
    for (std::size_t i = 0; i < irreps_.size(); ++i)
        if (irreps_[i].name == name) return static_cast<int>(i);
    throw DomainError("unknown irreducible representation '" + name + "'");
}

// ---------------------------------------------------------------------------

FieldDescriptor FieldDescriptor::generated(QuotientPtr quotient, long modulus, const std::vector<WeilElement>& generators) {
    const int f = quotient->f();
    const int n = quotient->group()->order();
    if (modulus <= 0 || modulus % f != 0) {
        throw DomainError("descriptor modulus " + std::to_string(modulus) + " is not a positive multiple of f = " +
                          std::to_string(f));
    }
    for (const auto& w : generators) {
        if (w.g < 0 || w.g >= n) throw DomainError("descriptor generator outside G");
        if (mod(w.m, f) != quotient->degree_of(w.g)) {
            throw DomainError("(" + quotient->group()->name(w.g) + ", " + std::to_string(w.m) +
                              ") is not in the Weil group: wrong Frobenius coset");
        }
    }
    std::vector<bool> seen(static_cast<std::size_t>(modulus) * n, false);
    std::vector<std::pair<long, int>> elems{{0, 0}};
    seen[0] = true;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (const auto& w : generators) {
            long m = mod(elems[i].first + w.m, modulus);
            int g = quotient->group()->mul(elems[i].second, w.g);
            std::size_t key = static_cast<std::size_t>(m) * n + g;
            if (!seen[key]) {
                seen[key] = true;
                elems.emplace_back(m, g);
            }
        }
    }
    std::sort(elems.begin(), elems.end());
    FieldDescriptor d;
    d.quotient_ = std::move(quotient);
    d.modulus_ = modulus;
    d.elements_ = std::move(elems);
    d.derive();
    return d;
}

FieldDescriptor FieldDescriptor::base(QuotientPtr quotient, long modulus) {
    if (modulus == 0) modulus = quotient->modulus();
    std::vector<WeilElement> gens{{quotient->phi(), 1}};
    for (int g : quotient->inertia().elements()) gens.push_back({g, 0});
    return generated(std::move(quotient), modulus, gens);
}

FieldDescriptor FieldDescriptor::unramified_top(QuotientPtr quotient, long modulus) {
    if (modulus == 0) modulus = quotient->modulus();
    long f = quotient->f();
    return generated(std::move(quotient), modulus, {{0, f}});
}

void FieldDescriptor::derive() {
    f_ = modulus_;
    for (const auto& [m, g] : elements_) {
        if (m > 0) {
            f_ = m;
            break;
        }
    }
    inertia_.clear();
    for (const auto& [m, g] : elements_)
        if (m == 0) inertia_.push_back(g);
    long target = f_ % modulus_;
    frob_ = {-1, f_};
    for (const auto& [m, g] : elements_) {
        if (m == target) {
            frob_.g = g;
            break;
        }
    }
}

bool FieldDescriptor::contains(int g, long m) const {
    return std::binary_search(elements_.begin(), elements_.end(), std::make_pair(mod(m, modulus_), g));
}

std::vector<WeilElement> FieldDescriptor::frobenius_candidates() const {
    std::vector<WeilElement> out;
    long target = f_ % modulus_;
    for (const auto& [m, g] : elements_)
        if (m == target) out.push_back({g, f_});
    return out;
}

FieldDescriptor FieldDescriptor::canonical() const {
    long m0 = modulus_;
    for (const auto& [m, g] : elements_) {
        if (g == 0 && m > 0) {
            m0 = m;
            break;
        }
    }
    if (m0 == modulus_) return *this;
    std::vector<std::pair<long, int>> reduced;
    for (const auto& [m, g] : elements_)
        if (m < m0) reduced.emplace_back(m, g);
    FieldDescriptor d;
    d.quotient_ = quotient_;
    d.modulus_ = m0;
    d.elements_ = std::move(reduced);
    d.derive();
    return d;
}

FieldDescriptor FieldDescriptor::lift(long modulus) const {
    if (modulus % modulus_ != 0) throw DomainError("lift target is not a multiple of the descriptor modulus");
    std::vector<std::pair<long, int>> out;
    for (long k = 0; k < modulus / modulus_; ++k)
        for (const auto& [m, g] : elements_) out.emplace_back(m + k * modulus_, g);
    std::sort(out.begin(), out.end());
    FieldDescriptor d;
    d.quotient_ = quotient_;
    d.modulus_ = modulus;
    d.elements_ = std::move(out);
    d.derive();
    return d;
}

bool FieldDescriptor::same_field(const FieldDescriptor& other) const {
    if (quotient_ != other.quotient_) return false;
    FieldDescriptor a = canonical(), b = other.canonical();
    return a.modulus_ == b.modulus_ && a.elements_ == b.elements_;
}

bool FieldDescriptor::is_subfield_of(const FieldDescriptor& other) const {
    if (quotient_ != other.quotient_) return false;
    long common = std::lcm(modulus_, other.modulus_);
    FieldDescriptor a = lift(common), b = other.lift(common);
    return std::includes(a.elements_.begin(), a.elements_.end(), b.elements_.begin(), b.elements_.end());
}

std::vector<WeilElement> FieldDescriptor::generators() const {
    std::vector<WeilElement> gens;
    std::set<std::pair<long, int>> reached{{0, 0}};
    for (const auto& [m, g] : elements_) {
        if (reached.count({m, g})) continue;
        gens.push_back({g, m});
        auto closure = generated(quotient_, modulus_, gens);
        reached = std::set<std::pair<long, int>>(closure.elements_.begin(), closure.elements_.end());
    }
    return gens;
}

std::string FieldDescriptor::str() const {
    FieldDescriptor c = canonical();
    std::ostringstream os;
    os << "desc(" << c.modulus_ << ";";
    auto gens = c.generators();
    for (std::size_t i = 0; i < gens.size(); ++i) {
        os << (i ? ", " : " ") << "(" << quotient_->group()->name(gens[i].g) << "," << gens[i].m << ")";
    }
    os << ")";
    return os.str();
}

std::vector<FieldDescriptor> all_descriptors(const QuotientPtr& quotient, long modulus) {
    if (modulus == 0) modulus = quotient->modulus();
    auto whole = FieldDescriptor::base(quotient, modulus);
    std::vector<FieldDescriptor> found;
    std::set<std::vector<std::pair<long, int>>> keys;
    auto add = [&](FieldDescriptor d) {
        if (keys.insert(d.elements()).second) found.push_back(std::move(d));
    };
    for (const auto& [m, g] : whole.elements()) add(FieldDescriptor::generated(quotient, modulus, {{g, m}}));
    for (std::size_t i = 0; i < found.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            auto gi = found[i].generators();
            auto gj = found[j].generators();
            gi.insert(gi.end(), gj.begin(), gj.end());
            add(FieldDescriptor::generated(quotient, modulus, gi));
        }
    }
    std::sort(found.begin(), found.end(), [](const FieldDescriptor& a, const FieldDescriptor& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.elements() < b.elements();
    });
    return found;
}

}  // namespace weilrep
