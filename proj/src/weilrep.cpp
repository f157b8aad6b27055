#include "weilrep/weilrep.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "weilrep/errors.hpp"
#include "weilrep/text.hpp"

namespace weilrep {

namespace {

long mod(long a, long n) { return ((a % n) + n) % n; }

bool is_integer(const Cyclotomic& c) { return c.is_rational() && c.to_rational().get_den() == 1; }

}  // namespace

// ---------------------------------------------------------------------------
// Twist

Twist::Twist(Cyclotomic value) : base_(std::move(value)) {
    if (base_.is_zero()) throw DomainError("twist value must be nonzero");
}

Twist Twist::radical(Cyclotomic base, int index) {
    if (index < 1) throw DomainError("radical index must be positive");
    Twist t(std::move(base));
    t.index_ = index;
    return t;
}

const Cyclotomic& Twist::value() const {
    if (is_radical()) throw UnsupportedError("twist " + str() + " is a formal radical");
    return base_;
}

Cyclotomic Twist::power(long m) const {
    if (m % index_ != 0) {
        throw UnsupportedError("power " + std::to_string(m) + " of formal radical " + str() + " is not integral");
    }
    return base_.pow(m / index_);
}

Twist Twist::operator*(const Twist& other) const {
    int l = std::lcm(index_, other.index_);
    return radical(base_.pow(l / index_) * other.base_.pow(l / other.index_), l);
}

Twist Twist::inverse() const { return radical(base_.inverse(), index_); }

std::string Twist::str() const {
    if (!is_radical()) return base_.str();
    return "root(" + std::to_string(index_) + "; " + base_.str() + ")";
}

Twist Twist::parse(std::string_view input) {
    std::string_view s = text::strip(input);
    if (text::starts_with(s, "root(")) {
        if (s.back() != ')') throw ParseError("unterminated root(...)");
        auto body = s.substr(5, s.size() - 6);
        auto semi = body.find(';');
        if (semi == std::string_view::npos) throw ParseError("root(k; value) needs ';'");
        long k = text::parse_long(body.substr(0, semi));
        if (k < 1) throw ParseError("radical index must be positive");
        return radical(Cyclotomic::parse(body.substr(semi + 1)), static_cast<int>(k));
    }
    Cyclotomic v = Cyclotomic::parse(s);
    if (v.is_zero()) throw ParseError("twist value must be nonzero");
    return Twist(v);
}

bool mu_class_equal(const Twist& a, const Twist& b) {
    int l = std::lcm(a.index(), b.index());
    return mu_class_equal(a.base().pow(l / a.index()), b.base().pow(l / b.index()));
}

// ---------------------------------------------------------------------------
// WeilRep and EulerFactor

WeilRep::WeilRep(QuotientPtr quotient, std::vector<Atom> atoms) : quotient_(std::move(quotient)), atoms_(std::move(atoms)) {
    for (const auto& a : atoms_)
        if (a.artin.group() != quotient_->group()) throw DomainError("atom is a representation of another group");
}

int WeilRep::dim() const {
    int d = 0;
    for (const auto& a : atoms_) d += a.artin.dim();
    return d;
}

WeilRep& WeilRep::add(const std::string& irrep, const Twist& lambda) {
    const auto& named = quotient_->irreps()[quotient_->irrep_index(irrep)];
    atoms_.push_back({named.rep, lambda, named.name});
    return *this;
}

WeilRep& WeilRep::add(const MatrixRep& artin, const Twist& lambda, std::string label) {
    if (artin.group() != quotient_->group()) throw DomainError("atom is a representation of another group");
    atoms_.push_back({artin, lambda, std::move(label)});
    return *this;
}

std::string WeilRep::str() const {
    std::ostringstream os;
    os << "WeilRep(dim " << dim();
    for (const auto& a : atoms_) os << "; " << (a.label.empty() ? "<matrix>" : a.label) << " x " << a.lambda.str();
    os << ")";
    return os.str();
}

EulerFactor::EulerFactor(ExactPolynomial p) : poly(std::move(p)) {
    if (poly.is_zero() || !poly.coeff(0).is_one()) throw DomainError("Euler factor must have constant term 1");
}

EulerFactor::EulerFactor(ExactPolynomial p, InverseRootMultiset certified) : EulerFactor(std::move(p)) {
    if (!(expand_from_inverse_roots(certified) == poly)) {
        throw VerificationError("certified roots " + certified.str() + " do not expand to " + poly.pretty());
    }
    roots = std::move(certified);
}

EulerFactor EulerFactor::from_roots(const InverseRootMultiset& roots) {
    EulerFactor out;
    out.poly = expand_from_inverse_roots(roots);
    out.roots = roots;
    return out;
}

std::string EulerFactor::str() const {
    std::string s = poly.pretty();
    if (roots) s += " " + roots->str();
    return s;
}

Matrix evaluate(const WeilRep& rho, const WeilElement& w) {
    const auto& q = rho.quotient();
    if (w.g < 0 || w.g >= q->group()->order() || mod(w.m, q->f()) != q->degree_of(w.g)) {
        throw DomainError("element (" + std::to_string(w.g) + ", " + std::to_string(w.m) +
                          ") is not in the Weil group of the quotient");
    }
    Matrix out(0, 0);
    for (const auto& a : rho.atoms()) out = Matrix::direct_sum(out, a.artin(w.g) * a.lambda.power(w.m));
    return out;
}

InertiaInvariants inertia_invariants(const WeilRep& rho, const FieldDescriptor& field) {
    if (field.quotient() != rho.quotient()) throw DomainError("descriptor belongs to another quotient");
    Matrix sum(rho.dim(), rho.dim());
    for (int h : field.inertia()) sum = sum + evaluate(rho, {h, 0});
    Matrix projector = sum * Cyclotomic(Rational(1, static_cast<long>(field.inertia().size())));
    Cyclotomic tr = projector.trace();
    return {static_cast<int>(tr.to_rational().get_num().get_si()), projector};
}

EulerFactor euler_factor(const WeilRep& rho, const FieldDescriptor& field) {
    return euler_factor(rho, field, field.frob());
}

EulerFactor euler_factor(const WeilRep& rho, const FieldDescriptor& field, const WeilElement& frob) {
    if (field.quotient() != rho.quotient()) throw DomainError("descriptor belongs to another quotient");
    if (!field.contains(frob.g, frob.m) || frob.m != field.f()) throw DomainError("not a Frobenius element of the descriptor");
    const auto& group = rho.quotient()->group();
    const auto& inertia = field.inertia();
    const int x = frob.g;
    const int o = group->element_order(x);
    InverseRootMultiset roots;
    for (const auto& a : rho.atoms()) {
        // c[s] = sum over inertia h of trace A(x^s h)
        std::vector<Cyclotomic> c(o);
        int xs = 0;
        for (int s = 0; s < o; ++s) {
            for (int h : inertia) c[s] += a.artin(group->mul(xs, h)).trace();
            xs = group->mul(xs, x);
        }
        Cyclotomic scale = a.lambda.power(-frob.m);
        Cyclotomic denom(static_cast<long>(inertia.size()) * o);
        for (int t = 0; t < o; ++t) {
            Cyclotomic mult;
            for (int s = 0; s < o; ++s) mult += Cyclotomic::root_of_unity(o, -static_cast<long>(t) * s) * c[s];
            mult /= denom;
            if (!is_integer(mult) || sgn(mult.to_rational()) < 0) {
                throw VerificationError("non-integral eigenvalue multiplicity " + mult.str());
            }
            long k = mult.to_rational().get_num().get_si();
            if (k > 0) roots.add(Cyclotomic::root_of_unity(o, -t) * scale, static_cast<int>(k));
        }
    }
    return EulerFactor::from_roots(roots);
}

WeilRep twist(const WeilRep& rho, const Twist& psi) {
    std::vector<Atom> atoms = rho.atoms();
    for (auto& a : atoms) a.lambda = a.lambda * psi;
    return WeilRep(rho.quotient(), std::move(atoms));
}

WeilRep direct_sum(const WeilRep& a, const WeilRep& b) {
    if (a.quotient() != b.quotient()) throw DomainError("direct sum of reps on different quotients");
    std::vector<Atom> atoms = a.atoms();
    atoms.insert(atoms.end(), b.atoms().begin(), b.atoms().end());
    return WeilRep(a.quotient(), std::move(atoms));
}

WeilRep dual(const WeilRep& rho) {
    std::vector<Atom> atoms;
    for (const auto& a : rho.atoms()) {
        MatrixRep d = a.artin.dual();
        std::string label;
        for (const auto& named : rho.quotient()->irreps())
            if (named.rep.character() == d.character()) label = named.name;
        atoms.push_back({d, a.lambda.inverse(), label});
    }
    return WeilRep(rho.quotient(), std::move(atoms));
}

// ---------------------------------------------------------------------------
// Canonical decomposition

namespace {

struct Candidate {
    int irrep, order, exponent;
};

struct RootIndex {
    int order;
    int exponent;
};

RootIndex root_index(const Cyclotomic& zeta) {
    auto o = is_root_of_unity(zeta);
    if (!o) throw DomainError("ratio " + zeta.str() + " is not a root of unity");
    for (int k = 0; k < *o; ++k)
        if (Cyclotomic::root_of_unity(*o, k) == zeta) return {*o, k};
    throw DomainError("root of unity index not found");
}

}  // namespace

std::vector<CanonicalAtom> decompose_artin_character(const QuotientPtr& quotient, long modulus,
                                                     const std::vector<Cyclotomic>& values) {
    auto level = FieldDescriptor::base(quotient, modulus);
    const auto& elems = level.elements();
    if (values.size() != elems.size()) throw DomainError("character length does not match W_M");
    const auto& irreps = quotient->irreps();
    std::vector<std::vector<Cyclotomic>> chi(irreps.size());
    for (std::size_t i = 0; i < irreps.size(); ++i)
        for (int g = 0; g < quotient->group()->order(); ++g) chi[i].push_back(irreps[i].rep(g).trace());

    std::vector<Candidate> kept;
    std::vector<std::vector<Cyclotomic>> kept_values;
    std::vector<long> divisors;
    for (long d = 1; d <= modulus; ++d)
        if (modulus % d == 0) divisors.push_back(d);
    for (std::size_t i = 0; i < irreps.size(); ++i) {
        for (long o : divisors) {
            for (long k = 0; k < o; ++k) {
                if (std::gcd(k, o) != 1) continue;
                std::vector<Cyclotomic> v;
                v.reserve(elems.size());
                for (const auto& [m, g] : elems) v.push_back(chi[i][g] * Cyclotomic::root_of_unity(static_cast<int>(o), k * m));
                if (std::find(kept_values.begin(), kept_values.end(), v) != kept_values.end()) continue;
                kept.push_back({static_cast<int>(i), static_cast<int>(o), static_cast<int>(k)});
                kept_values.push_back(std::move(v));
            }
        }
    }
    std::vector<CanonicalAtom> out;
    Cyclotomic total_dim;
    const Cyclotomic size(static_cast<long>(elems.size()));
    for (std::size_t c = 0; c < kept.size(); ++c) {
        Cyclotomic ip;
        for (std::size_t w = 0; w < elems.size(); ++w) ip += values[w] * kept_values[c][w].conj();
        ip /= size;
        if (ip.is_zero()) continue;
        if (!is_integer(ip) || sgn(ip.to_rational()) < 0) {
            throw VerificationError("class function is not a character (multiplicity " + ip.str() + ")");
        }
        int mult = static_cast<int>(ip.to_rational().get_num().get_si());
        out.push_back({kept[c].irrep, kept[c].order, kept[c].exponent, mult});
        total_dim += Cyclotomic(static_cast<long>(mult) * irreps[kept[c].irrep].rep.dim());
    }
    if (!(total_dim == values[0])) throw VerificationError("irreducible decomposition does not exhaust the character");
    return out;
}

std::vector<CanonicalComponent> canonical_components(const WeilRep& rho) {
    const auto& quotient = rho.quotient();
    std::vector<std::vector<const Atom*>> classes;
    for (const auto& a : rho.atoms()) {
        bool placed = false;
        for (auto& cls : classes) {
            if (mu_class_equal(cls[0]->lambda, a.lambda)) {
                cls.push_back(&a);
                placed = true;
                break;
            }
        }
        if (!placed) classes.push_back({&a});
    }
    std::vector<CanonicalComponent> out;
    for (const auto& cls : classes) {
        CanonicalComponent comp;
        std::vector<RootIndex> zetas;
        if (cls[0]->lambda.is_radical()) {
            for (const Atom* a : cls) {
                if (!(a->lambda == cls[0]->lambda)) {
                    throw UnsupportedError("distinct formal radicals in one mu-class: " + a->lambda.str() + ", " +
                                           cls[0]->lambda.str());
                }
                zetas.push_back({1, 0});
            }
            comp.nu = cls[0]->lambda;
        } else {
            comp.nu = Twist(mu_class_representative(cls[0]->lambda.value()));
            for (const Atom* a : cls) zetas.push_back(root_index(a->lambda.value() / comp.nu.value()));
        }
        long level = quotient->f();
        for (const auto& z : zetas) level = std::lcm(level, static_cast<long>(z.order));
        auto base = FieldDescriptor::base(quotient, level);
        std::vector<Cyclotomic> values(base.elements().size());
        for (std::size_t j = 0; j < cls.size(); ++j) {
            for (std::size_t w = 0; w < values.size(); ++w) {
                auto [m, g] = base.elements()[w];
                values[w] += cls[j]->artin(g).trace() * Cyclotomic::root_of_unity(zetas[j].order, zetas[j].exponent * m);
            }
        }
        comp.atoms = decompose_artin_character(quotient, level, values);
        out.push_back(std::move(comp));
    }
    std::sort(out.begin(), out.end(), [](const CanonicalComponent& a, const CanonicalComponent& b) {
        if (a.nu.index() != b.nu.index()) return a.nu.index() < b.nu.index();
        return canonical_less(a.nu.base(), b.nu.base());
    });
    return out;
}

WeilRep canonical_decomposition(const WeilRep& rho) {
    WeilRep out(rho.quotient());
    for (const auto& comp : canonical_components(rho)) {
        for (const auto& a : comp.atoms) {
            Twist lambda = comp.nu * Twist(Cyclotomic::root_of_unity(a.zeta_order, a.zeta_exponent));
            for (int k = 0; k < a.multiplicity; ++k) out.add(rho.quotient()->irreps()[a.irrep].name, lambda);
        }
    }
    return out;
}

bool equal(const WeilRep& a, const WeilRep& b) {
    if (a.quotient() != b.quotient()) return false;
    if (a.dim() != b.dim()) return false;
    return canonical_components(a) == canonical_components(b);
}

WeilRep from_unramified_polynomial(const EulerFactor& p, const QuotientPtr& quotient) {
    if (!p.roots) throw UnsupportedError("from_unramified_polynomial needs certified inverse roots");
    std::string triv;
    for (const auto& named : quotient->irreps()) {
        bool all_one = true;
        const ClassFunction chi = named.rep.character();
        for (const auto& v : chi.values()) all_one = all_one && v.is_one();
        if (all_one && named.rep.dim() == 1) {
            triv = named.name;
            break;
        }
    }
    WeilRep out(quotient);
    for (const auto& beta : p.roots->roots()) out.add(triv, Twist(beta.inverse()));
    return out;
}

// ---------------------------------------------------------------------------
// Weil-Deligne

void validate_wd(const WeilDeligneRep& w) {
    const int d = w.rho.dim();
    if (w.N.rows() != d || w.N.cols() != d) throw DomainError("N has the wrong shape");
    if (!w.N.pow(std::max(d, 1)).is_zero()) throw DomainError("N is not nilpotent");
    const auto& q = w.rho.quotient();
    auto base = FieldDescriptor::base(q);
    Matrix phi = evaluate(w.rho, base.frob());
    if (!(phi * w.N * phi.inverse() == w.N * Cyclotomic(q->q()))) throw DomainError("Frob N Frob^-1 != q N");
    for (int g : q->inertia().elements()) {
        Matrix r = evaluate(w.rho, {g, 0});
        if (!(r * w.N == w.N * r)) throw DomainError("N does not commute with inertia");
    }
}

WeilRep kernel_subrep(const WeilDeligneRep& w) {
    WeilRep out(w.rho.quotient());
    int start = 0, kernel_dim = 0;
    for (const auto& a : w.rho.atoms()) {
        bool in_kernel = true;
        for (int c = start; c < start + a.artin.dim() && in_kernel; ++c)
            for (int r = 0; r < w.N.rows(); ++r)
                if (!w.N(r, c).is_zero()) {
                    in_kernel = false;
                    break;
                }
        if (in_kernel) {
            out.add(a.artin, a.lambda, a.label);
            kernel_dim += a.artin.dim();
        }
        start += a.artin.dim();
    }
    if (kernel_dim != w.rho.dim() - w.N.rank()) throw UnsupportedError("ker N is not a union of atom blocks");
    return out;
}

EulerFactor wd_euler_factor(const WeilDeligneRep& w, const FieldDescriptor& field) {
    const int d = w.rho.dim();
    auto inv = inertia_invariants(w.rho, field);
    Matrix stacked(2 * d, d);
    Matrix shifted = inv.projector - Matrix::identity(d);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) {
            stacked(r, c) = shifted(r, c);
            stacked(d + r, c) = w.N(r, c);
        }
    Matrix basis = stacked.nullspace();
    if (basis.cols() == 0) return EulerFactor();
    Matrix frob_inv = evaluate(w.rho, field.frob()).inverse();
    Matrix restricted = basis.solve(frob_inv * basis);
    return EulerFactor(restricted.reverse_charpoly());
}

QuotientPtr tate_quotient(long q) {
    static std::mutex lock;
    static std::map<long, QuotientPtr> cache;
    std::lock_guard<std::mutex> guard(lock);
    auto it = cache.find(q);
    if (it != cache.end()) return it->second;
    auto c2 = FiniteGroup::cyclic(2, "g");
    LocalGaloisQuotient::Options opts;
    opts.name = "tate";
    opts.tame_check = q % 2 == 1;
    return cache[q] = LocalGaloisQuotient::make(c2, whole_group(c2), 0, q, opts);
}

WeilDeligneRep tate_curve_rep(long q, TateCharacter chi) {
    auto quotient = tate_quotient(q);
    WeilRep rho(quotient);
    std::string irrep = chi == TateCharacter::ramified_quadratic ? "chi(1)" : "chi(0)";
    Cyclotomic sign = chi == TateCharacter::unramified_quadratic ? Cyclotomic(-1) : Cyclotomic(1);
    rho.add(irrep, Twist(sign));
    rho.add(irrep, Twist(sign / Cyclotomic(q)));
    Matrix n(2, 2);
    n(0, 1) = Cyclotomic(1);
    WeilDeligneRep w{rho, n};
    validate_wd(w);
    return w;
}

}  // namespace weilrep
