#include "weilrep/curves.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

#include "weilrep/errors.hpp"

namespace weilrep {

namespace {

constexpr long kFieldBound = 10'000'000;
constexpr long kSampleBound = 1'000'000;
constexpr int kSampleCount = 9;

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

// Polynomials over a field, constant term first, trimmed.
using FqPoly = std::vector<long>;

void trim(FqPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

FqPoly pmul(const FqField& F, const FqPoly& a, const FqPoly& b) {
    if (a.empty() || b.empty()) return {};
    FqPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
    }
    trim(out);
    return out;
}

FqPoly pmod(const FqField& F, FqPoly a, const FqPoly& m) {
    trim(a);
    long lead_inv = F.inv(m.back());
    while (a.size() >= m.size()) {
        long c = F.mul(a.back(), lead_inv);
        std::size_t shift = a.size() - m.size();
        for (std::size_t j = 0; j < m.size(); ++j) a[shift + j] = F.sub(a[shift + j], F.mul(c, m[j]));
        trim(a);
    }
    return a;
}

FqPoly pgcd(const FqField& F, FqPoly a, FqPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        FqPoly r = pmod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

FqPoly ppowmod(const FqField& F, FqPoly base, long e, const FqPoly& m) {
    FqPoly result{1};
    base = pmod(F, base, m);
    while (e > 0) {
        if (e & 1) result = pmod(F, pmul(F, result, base), m);
        base = pmod(F, pmul(F, base, base), m);
        e >>= 1;
    }
    return result;
}

FqPoly pderivative(const FqField& F, const FqPoly& a) {
    FqPoly out;
    for (std::size_t i = 1; i < a.size(); ++i) out.push_back(F.mul(F.from_int(static_cast<long>(i)), a[i]));
    trim(out);
    return out;
}

long peval(const FqField& F, const FqPoly& a, long x) {
    long acc = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = F.add(F.mul(acc, x), *it);
    return acc;
}

FqPoly reduce_coeffs(const FqField& F, const std::vector<long>& c) {
    FqPoly out;
    for (long v : c) out.push_back(F.from_int(v));
    trim(out);
    return out;
}

bool irreducible_over_prime_field(const FqField& Fp, const FqPoly& m) {
    int k = static_cast<int>(m.size()) - 1;
    FqPoly x{0, 1};
    FqPoly r = x;
    for (int d = 1; d <= k / 2; ++d) {
        r = ppowmod(Fp, r, Fp.p(), m);
        FqPoly diff = r;
        diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
        diff[1] = Fp.sub(diff[1], 1);
        trim(diff);
        if (pgcd(Fp, m, diff).size() > 1) return false;
    }
    return true;
}

long ipow(long b, int e) {
    long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// FqField

FqField::Elem FqField::add(Elem a, Elem b) const {
    if (k_ == 1) return (a + b) % p_;
    Elem out = 0, scale = 1;
    for (int i = 0; i < k_; ++i) {
        out += ((a % p_ + b % p_) % p_) * scale;
        a /= p_;
        b /= p_;
        scale *= p_;
    }
    return out;
}

FqField::Elem FqField::sub(Elem a, Elem b) const {
    if (k_ == 1) return (a - b + p_) % p_;
    Elem out = 0, scale = 1;
    for (int i = 0; i < k_; ++i) {
        out += ((a % p_ - b % p_ + p_) % p_) * scale;
        a /= p_;
        b /= p_;
        scale *= p_;
    }
    return out;
}

FqField::Elem FqField::mul(Elem a, Elem b) const {
    if (k_ == 1) return a * b % p_;
    std::vector<long> da(k_), db(k_), prod(2 * k_ - 1, 0);
    for (int i = 0; i < k_; ++i) {
        da[i] = a % p_;
        db[i] = b % p_;
        a /= p_;
        b /= p_;
    }
    for (int i = 0; i < k_; ++i) {
        if (da[i] == 0) continue;
        for (int j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    }
    for (int d = 2 * k_ - 2; d >= k_; --d) {
        long c = prod[d];
        if (c == 0) continue;
        for (int j = 0; j < k_; ++j) prod[d - k_ + j] = ((prod[d - k_ + j] - c * modulus_[j]) % p_ + p_) % p_;
        prod[d] = 0;
    }
    Elem out = 0;
    for (int i = k_ - 1; i >= 0; --i) out = out * p_ + prod[i];
    return out;
}

FqField::Elem FqField::pow(Elem a, long e) const {
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    Elem r = 1;
    while (e > 0) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

FqField::Elem FqField::inv(Elem a) const {
    if (a == 0) throw DomainError("division by zero in " + str());
    return pow(a, q_ - 2);
}

int FqField::legendre(Elem a) const {
    if (a == 0) return 0;
    return pow(a, (q_ - 1) / 2) == 1 ? 1 : -1;
}

std::string FqField::str() const {
    std::ostringstream os;
    os << "F_" << p_;
    if (k_ > 1) {
        os << "^" << k_ << " mod ";
        bool first = true;
        for (int i = k_; i >= 0; --i) {
            long c = modulus_[i];
            if (c == 0) continue;
            if (!first) os << " + ";
            first = false;
            if (c != 1 || i == 0) os << c;
            if (i > 0) os << "x" << (i > 1 ? "^" + std::to_string(i) : "");
        }
    }
    return os.str();
}

FqField fq_build(long p, int k) {
    if (!is_prime(p) || p == 2) throw DomainError("field characteristic must be an odd prime, got " + std::to_string(p));
    if (k < 1) throw DomainError("field degree must be positive");
    long q = 1;
    for (int i = 0; i < k; ++i) {
        if (q > kFieldBound / p) {
            throw ConfigurationError("field size " + std::to_string(p) + "^" + std::to_string(k) + " exceeds 10^7");
        }
        q *= p;
    }
    FqField prime;
    prime.p_ = p;
    prime.k_ = 1;
    prime.q_ = p;
    prime.modulus_ = {0, 1};
    if (k == 1) return prime;

    for (long c = 1; c < q; ++c) {
        FqPoly m(k + 1);
        long rest = c;
        for (int i = 0; i < k; ++i) {
            m[i] = rest % p;
            rest /= p;
        }
        m[k] = 1;
        if (m[0] == 0) continue;
        if (!irreducible_over_prime_field(prime, m)) continue;
        FqField out;
        out.p_ = p;
        out.k_ = k;
        out.q_ = q;
        out.modulus_ = m;
        return out;
    }
    throw VerificationError("no irreducible modulus found for F_" + std::to_string(p) + "^" + std::to_string(k));
}

// ---------------------------------------------------------------------------
// Elliptic curves

namespace {

struct Invariants {
    long b2, b4, b6, disc;
};

Invariants invariants(const EllipticCurve& e, const FqField& F) {
    long a1 = F.from_int(e.a1), a2 = F.from_int(e.a2), a3 = F.from_int(e.a3);
    long a4 = F.from_int(e.a4), a6 = F.from_int(e.a6);
    auto m = [&](long a, long b) { return F.mul(a, b); };
    auto s = [&](long c) { return F.from_int(c); };
    long b2 = F.add(m(a1, a1), m(s(4), a2));
    long b4 = F.add(m(s(2), a4), m(a1, a3));
    long b6 = F.add(m(a3, a3), m(s(4), a6));
    long b8 = F.sub(F.add(F.sub(F.add(m(m(a1, a1), a6), m(s(4), m(a2, a6))), m(a1, m(a3, a4))), m(a2, m(a3, a3))),
                    m(a4, a4));
    long d = F.neg(m(m(b2, b2), b8));
    d = F.sub(d, m(s(8), m(b4, m(b4, b4))));
    d = F.sub(d, m(s(27), m(b6, b6)));
    d = F.add(d, m(s(9), m(b2, m(b4, b6))));
    return {b2, b4, b6, d};
}

}  // namespace

std::string EllipticCurve::str() const {
    std::ostringstream os;
    os << "[" << a1 << ", " << a2 << ", " << a3 << ", " << a4 << ", " << a6 << "]";
    return os.str();
}

bool is_singular(const EllipticCurve& e, const FqField& field) { return invariants(e, field).disc == 0; }

long count_points_elliptic(const EllipticCurve& e, const FqField& F) {
    Invariants inv = invariants(e, F);
    if (inv.disc == 0) throw DomainError("elliptic curve " + e.str() + " is singular over " + F.str());
    // (2y + a1 x + a3)^2 = 4x^3 + b2 x^2 + 2 b4 x + b6
    FqPoly r{inv.b6, F.mul(F.from_int(2), inv.b4), inv.b2, F.from_int(4)};
    long count = 1;
    for (long x = 0; x < F.q(); ++x) count += 1 + F.legendre(peval(F, r, x));
    return count;
}

EulerFactor euler_factor_good(const EllipticCurve& e, const FqField& field) {
    long q = field.q();
    long a = q + 1 - count_points_elliptic(e, field);
    ExactPolynomial poly({Cyclotomic(1), Cyclotomic(-a), Cyclotomic(q)});
    try {
        return EulerFactor(poly, quadratic_inverse_roots(poly));
    } catch (const ConfigurationError&) {
        return EulerFactor(poly);
    } catch (const UnsupportedError&) {
        return EulerFactor(poly);
    }
}

// ---------------------------------------------------------------------------
// Genus 2

std::string HyperellipticCurve::str() const {
    auto poly = [](const std::vector<long>& c) { return int_poly_str(int_poly(c), 'x'); };
    std::string out = "y^2";
    if (!int_poly(h).empty()) out += " + (" + poly(h) + ")y";
    return out + " = " + poly(f);
}

namespace {

FqPoly discriminant_model(const HyperellipticCurve& c, const FqField& F) {
    FqPoly h = reduce_coeffs(F, c.h);
    FqPoly f = reduce_coeffs(F, c.f);
    FqPoly d = pmul(F, h, h);
    d.resize(std::max(d.size(), f.size()), 0);
    for (std::size_t i = 0; i < f.size(); ++i) d[i] = F.add(d[i], F.mul(F.from_int(4), f[i]));
    trim(d);
    return d;
}

}  // namespace

bool is_smooth(const HyperellipticCurve& c, const FqField& F) {
    FqPoly d = discriminant_model(c, F);
    int deg = static_cast<int>(d.size()) - 1;
    if (deg != 5 && deg != 6) return false;
    return pgcd(F, d, pderivative(F, d)).size() == 1;
}

long count_points_hyperelliptic(const HyperellipticCurve& c, const FqField& F, CountMode mode) {
    FqPoly d = discriminant_model(c, F);
    int deg = static_cast<int>(d.size()) - 1;
    long affine = 0;
    for (long x = 0; x < F.q(); ++x) affine += 1 + F.legendre(peval(F, d, x));
    if (mode == CountMode::affine_only) return affine;
    if (!is_smooth(c, F)) throw DomainError("curve " + c.str() + " is not a smooth genus-2 model over " + F.str());
    long infinity = deg == 5 ? 1 : 1 + F.legendre(d.back());
    return affine + infinity;
}

CountRecord genus2_counts(const HyperellipticCurve& c, long p) {
    FqField f1 = fq_build(p, 1);
    FqField f2 = fq_build(p, 2);
    return {p, count_points_hyperelliptic(c, f1), count_points_hyperelliptic(c, f2)};
}

EulerFactor genus2_lpoly_from_counts(const CountRecord& rec) {
    long q = rec.q;
    long e1 = q + 1 - rec.n1;
    long p2 = q * q + 1 - rec.n2;
    if (e1 * e1 > 16 * q || std::labs(p2) > 4 * q) {
        throw VerificationError("point counts " + std::to_string(rec.n1) + ", " + std::to_string(rec.n2) +
                                " violate the Weil bound for q = " + std::to_string(q));
    }
    long twice_e2 = e1 * e1 - p2;
    if (twice_e2 % 2 != 0) throw VerificationError("point counts give a non-integral second coefficient");
    long e2 = twice_e2 / 2;
    return EulerFactor(ExactPolynomial(
        {Cyclotomic(1), Cyclotomic(-e1), Cyclotomic(e2), Cyclotomic(-q * e1), Cyclotomic(q * q)}));
}

ExactPolynomial lpoly_from_counts(long q, const std::vector<long>& counts, int degree) {
    if (static_cast<int>(counts.size()) < degree) throw DomainError("need one count per degree");
    std::vector<Rational> power_sums(degree + 1), e(degree + 1);
    mpz_class qn = 1;
    for (int n = 1; n <= degree; ++n) {
        qn *= q;
        power_sums[n] = Rational(qn + 1 - counts[n - 1]);
    }
    e[0] = 1;
    for (int n = 1; n <= degree; ++n) {
        Rational acc = 0;
        for (int i = 1; i <= n; ++i) acc += ((i % 2) ? 1 : -1) * e[n - i] * power_sums[i];
        e[n] = acc / n;
    }
    std::vector<Cyclotomic> coeffs;
    for (int n = 0; n <= degree; ++n) coeffs.emplace_back(Rational((n % 2 ? -1 : 1) * e[n]));
    return ExactPolynomial(std::move(coeffs));
}

long split_node_fiber_count(long q, int nodes) { return q + 1 - nodes; }

EllipticCurve rescale_weierstrass(const Rational& a, const Rational& b, const Rational& u4, long p) {
    if (u4 == 0) throw DomainError("rescaling factor must be nonzero");
    Rational a2 = a / u4;
    Rational b2 = 0;
    if (b != 0) {
        if (u4 < 0 || !mpz_perfect_square_p(u4.get_num_mpz_t()) || !mpz_perfect_square_p(u4.get_den_mpz_t())) {
            throw DomainError("u^6 is not rational for u^4 = " + u4.get_str());
        }
        mpz_class n = sqrt(mpz_class(u4.get_num())), d = sqrt(mpz_class(u4.get_den()));
        Rational u2(n, d);
        u2.canonicalize();
        b2 = b / (u2 * u2 * u2);
    }
    auto reduce = [p](const Rational& r) -> long {
        mpz_class den = r.get_den();
        if (den % p == 0) throw DomainError("coefficient " + r.get_str() + " is not " + std::to_string(p) + "-integral");
        mpz_class pz = p, inv;
        mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t());
        mpz_class v = r.get_num() * inv % pz;
        if (v < 0) v += pz;
        return v.get_si();
    };
    EllipticCurve out = EllipticCurve::short_form(reduce(a2), reduce(b2));
    if (is_singular(out, fq_build(p, 1))) {
        throw DomainError("rescaled model y^2 = x^3 + " + a2.get_str() + "x + " + b2.get_str() +
                          " has bad reduction at " + std::to_string(p));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Integer polynomials

namespace {

void trim(IntPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

using QPoly = std::vector<Rational>;

void trim(QPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

QPoly to_q(const IntPoly& a) { return QPoly(a.begin(), a.end()); }

IntPoly imul(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) return {};
    IntPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    trim(out);
    return out;
}

std::pair<QPoly, QPoly> qdivmod(QPoly a, const QPoly& b) {
    trim(a);
    QPoly quot(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    while (a.size() >= b.size() && !a.empty()) {
        Rational c = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        quot[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
        trim(a);
    }
    trim(quot);
    return {quot, a};
}

std::optional<IntPoly> exact_divide(const IntPoly& a, const IntPoly& b) {
    auto [quot, rem] = qdivmod(to_q(a), to_q(b));
    if (!rem.empty()) return std::nullopt;
    IntPoly out;
    for (const auto& c : quot) {
        if (c.get_den() != 1) return std::nullopt;
        out.push_back(c.get_num());
    }
    return out;
}

mpz_class content(const IntPoly& a) {
    mpz_class g = 0;
    for (const auto& c : a) g = gcd(g, c);
    return g;
}

IntPoly primitive(const IntPoly& a) {
    mpz_class g = content(a);
    if (g == 0) return a;
    if (a.back() < 0) g = -g;
    IntPoly out;
    for (const auto& c : a) out.push_back(c / g);
    return out;
}

IntPoly from_q_primitive(QPoly a) {
    trim(a);
    mpz_class den = 1;
    for (const auto& c : a) den = lcm(den, mpz_class(c.get_den()));
    IntPoly out;
    for (const auto& c : a) out.push_back(mpz_class(c * den));
    return primitive(out);
}

IntPoly iderivative(const IntPoly& a) {
    IntPoly out;
    for (std::size_t i = 1; i < a.size(); ++i) out.push_back(a[i] * static_cast<long>(i));
    trim(out);
    return out;
}

IntPoly igcd(const IntPoly& a, const IntPoly& b) {
    QPoly x = to_q(a), y = to_q(b);
    trim(x);
    trim(y);
    while (!y.empty()) {
        QPoly r = qdivmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return from_q_primitive(x);
}

mpz_class ieval(const IntPoly& a, const mpz_class& x) {
    mpz_class acc = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::vector<long> positive_divisors(long n) {
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

struct Sample {
    long x;
    long value;
    std::vector<long> divisors;
};

// Lagrange basis for the nodes xs, scaled to a common integer denominator.
struct Basis {
    mpz_class den;
    std::vector<IntPoly> numerators;
};

Basis lagrange_basis(const std::vector<long>& xs) {
    std::size_t n = xs.size();
    std::vector<QPoly> polys;
    for (std::size_t i = 0; i < n; ++i) {
        QPoly num{1};
        Rational scale = 1;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            QPoly next(num.size() + 1, 0);
            for (std::size_t t = 0; t < num.size(); ++t) {
                next[t] -= num[t] * xs[j];
                next[t + 1] += num[t];
            }
            num = std::move(next);
            scale *= xs[i] - xs[j];
        }
        for (auto& c : num) c /= scale;
        polys.push_back(std::move(num));
    }
    mpz_class den = 1;
    for (const auto& p : polys)
        for (const auto& c : p) den = lcm(den, mpz_class(c.get_den()));
    Basis out{den, {}};
    for (const auto& p : polys) {
        IntPoly ip;
        for (const auto& c : p) ip.push_back(mpz_class(c * den));
        out.numerators.push_back(std::move(ip));
    }
    return out;
}

// A proper factor of a primitive square-free polynomial, or nullopt if it is irreducible.
std::optional<IntPoly> find_factor(const IntPoly& s) {
    int n = static_cast<int>(s.size()) - 1;
    if (n <= 1) return std::nullopt;
    std::vector<Sample> samples;
    for (long step = 0; step < 400 && static_cast<int>(samples.size()) < kSampleCount; ++step) {
        long x = (step % 2 == 0) ? step / 2 : -(step + 1) / 2;
        mpz_class v = ieval(s, x);
        if (v == 0) return IntPoly{mpz_class(-x), mpz_class(1)};
        if (abs(v) > kSampleBound) continue;
        long value = v.get_si();
        samples.push_back({x, value, positive_divisors(std::labs(value))});
    }
    std::vector<Sample> ordered = samples;
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const Sample& a, const Sample& b) { return a.divisors.size() < b.divisors.size(); });

    const mpz_class& lead = s.back();
    const mpz_class& constant = s.front();
    for (int k = 1; k <= n / 2; ++k) {
        if (static_cast<int>(ordered.size()) < k + 1) {
            throw InconclusiveError("factor search for degree " + std::to_string(k) + " needs " +
                                    std::to_string(k + 1) + " sample values of size at most 10^6");
        }
        std::vector<long> xs;
        for (int i = 0; i <= k; ++i) xs.push_back(ordered[i].x);
        Basis basis = lagrange_basis(xs);
        std::vector<std::size_t> idx(k + 1, 0);
        std::vector<int> sign(k + 1, 1);
        // Odometer over (divisor, sign) choices; the first node keeps a positive value.
        while (true) {
            IntPoly cand(k + 1, 0);
            for (int i = 0; i <= k; ++i) {
                long d = sign[i] * ordered[i].divisors[idx[i]];
                for (std::size_t j = 0; j < basis.numerators[i].size(); ++j) cand[j] += d * basis.numerators[i][j];
            }
            bool ok = true;
            for (auto& c : cand) {
                if (!mpz_divisible_p(c.get_mpz_t(), basis.den.get_mpz_t())) {
                    ok = false;
                    break;
                }
                c /= basis.den;
            }
            if (ok) {
                trim(cand);
                ok = static_cast<int>(cand.size()) == k + 1 && mpz_divisible_p(lead.get_mpz_t(), cand.back().get_mpz_t()) &&
                     cand.front() != 0 && mpz_divisible_p(constant.get_mpz_t(), cand.front().get_mpz_t());
            }
            if (ok) {
                for (std::size_t i = k + 1; i < ordered.size() && ok; ++i) {
                    mpz_class cv = ieval(cand, ordered[i].x);
                    ok = cv != 0 && mpz_divisible_p(mpz_class(ordered[i].value).get_mpz_t(), cv.get_mpz_t());
                }
            }
            if (ok && exact_divide(s, cand)) return primitive(cand);

            int pos = 0;
            while (pos <= k) {
                if (pos > 0 && sign[pos] == 1) {
                    sign[pos] = -1;
                    break;
                }
                sign[pos] = 1;
                if (++idx[pos] < ordered[pos].divisors.size()) break;
                idx[pos] = 0;
                ++pos;
            }
            if (pos > k) break;
        }
    }
    return std::nullopt;
}

void factor_square_free(const IntPoly& s, std::vector<IntPoly>& out) {
    auto f = find_factor(s);
    if (!f) {
        out.push_back(primitive(s));
        return;
    }
    factor_square_free(*f, out);
    factor_square_free(primitive(*exact_divide(s, *f)), out);
}

bool poly_less(const IntPoly& a, const IntPoly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

mpz_class bareiss_det(std::vector<std::vector<mpz_class>> m) {
    std::size_t n = m.size();
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m[pivot][k] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

// Res(a, b) by the Sylvester matrix, coefficients constant term first with formal degrees.
mpz_class sylvester_resultant(const IntPoly& a, const IntPoly& b) {
    std::size_t da = a.size() - 1, db = b.size() - 1, n = da + db;
    std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n, 0));
    for (std::size_t r = 0; r < db; ++r)
        for (std::size_t j = 0; j <= da; ++j) m[r][r + j] = a[da - j];
    for (std::size_t r = 0; r < da; ++r)
        for (std::size_t j = 0; j <= db; ++j) m[db + r][r + j] = b[db - j];
    return bareiss_det(std::move(m));
}

}  // namespace

IntPoly int_poly(const std::vector<long>& coeffs) {
    IntPoly out;
    for (long c : coeffs) out.emplace_back(c);
    trim(out);
    return out;
}

namespace {

template <typename Coeff>
std::string poly_str(const std::vector<Coeff>& p, char var) {
    if (p.empty()) return "0";
    std::string out;
    for (std::size_t i = p.size(); i-- > 0;) {
        const Coeff& c = p[i];
        if (c == 0) continue;
        bool negative = c < 0;
        Coeff mag = negative ? Coeff(-c) : c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        if (mag != 1 || i == 0) out += mag.get_str();
        if (i > 0) {
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace

std::string int_poly_str(const IntPoly& p, char var) { return poly_str(p, var); }

IntPoly IntFactorization::expand() const {
    IntPoly out{content};
    for (const auto& [f, m] : factors)
        for (int i = 0; i < m; ++i) out = imul(out, f);
    trim(out);
    return out;
}

std::string IntFactorization::str(char var) const {
    std::string out = content.get_str();
    for (const auto& [f, m] : factors) {
        out += " * (" + int_poly_str(f, var) + ")";
        if (m > 1) out += "^" + std::to_string(m);
    }
    return out;
}

std::string IntFactorization::monic_str(char var) const {
    mpz_class lead = content;
    std::string tail;
    for (const auto& [f, m] : factors) {
        QPoly monic;
        for (const auto& c : f) monic.push_back(Rational(c, f.back()));
        for (auto& c : monic) c.canonicalize();
        for (int i = 0; i < m; ++i) lead *= f.back();
        tail += "(" + poly_str(monic, var) + ")";
        if (m > 1) tail += "^" + std::to_string(m);
    }
    return lead.get_str() + (tail.empty() ? "" : " " + tail);
}

IntFactorization factor_integer_polynomial(const IntPoly& p0) {
    IntPoly p = p0;
    trim(p);
    if (p.empty()) throw DomainError("cannot factor the zero polynomial");
    IntFactorization out;
    out.content = content(p);
    if (p.back() < 0) out.content = -out.content;
    IntPoly prim = primitive(p);
    if (prim.size() == 1) return out;

    IntPoly g = igcd(prim, iderivative(prim));
    IntPoly square_free = primitive(*exact_divide(prim, g));
    std::vector<IntPoly> irreducible;
    factor_square_free(square_free, irreducible);
    std::sort(irreducible.begin(), irreducible.end(), poly_less);
    for (const auto& f : irreducible) {
        int mult = 0;
        IntPoly rest = prim;
        while (auto q = exact_divide(rest, f)) {
            rest = *q;
            ++mult;
        }
        out.factors.emplace_back(f, mult);
    }
    if (out.expand() != p) throw VerificationError("factorization does not multiply back to the input");
    return out;
}

IntPoly modified_resultant(const IntPoly& f0, int genus) {
    IntPoly f = f0;
    trim(f);
    int n = static_cast<int>(f.size()) - 1;
    if (n != 2 * genus) throw DomainError("expected a polynomial of degree " + std::to_string(2 * genus));
    int points = n * n + 1;
    std::vector<Rational> xs, ys;
    for (int i = 0; i < points; ++i) {
        IntPoly g = f;
        mpz_class pw = 1;
        for (auto& c : g) {
            c *= pw;
            pw *= i;
        }
        xs.emplace_back(i);
        ys.emplace_back(sylvester_resultant(f, g));
    }
    // Newton divided differences.
    std::vector<Rational> coef = ys;
    for (int j = 1; j < points; ++j)
        for (int i = points - 1; i >= j; --i) coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j]);
    QPoly poly{coef[points - 1]};
    for (int i = points - 2; i >= 0; --i) {
        QPoly next(poly.size() + 1, 0);
        for (std::size_t t = 0; t < poly.size(); ++t) {
            next[t] -= poly[t] * xs[i];
            next[t + 1] += poly[t];
        }
        next[0] += coef[i];
        poly = std::move(next);
    }
    trim(poly);
    IntPoly res;
    for (const auto& c : poly) {
        if (c.get_den() != 1) throw VerificationError("resultant interpolation is not integral");
        res.push_back(c.get_num());
    }
    IntPoly x_minus_1{mpz_class(-1), mpz_class(1)};
    for (int i = 0; i < 2 * genus; ++i) {
        auto q = exact_divide(res, x_minus_1);
        if (!q) throw DomainError("resultant is not divisible by (x - 1)^" + std::to_string(2 * genus));
        res = *q;
    }
    return res;
}

StollVerdict stoll_criterion(const IntPoly& f0) {
    IntPoly f = f0;
    trim(f);
    if (f.size() != 5 || f.front() != 1) throw DomainError("expected an integer quartic with constant term 1");
    IntFactorization ff = factor_integer_polynomial(f);
    if (ff.factors.size() != 1 || ff.factors[0].second != 1) {
        throw DomainError("precondition failed: " + int_poly_str(f, 'T') + " is reducible as " + ff.str('T'));
    }
    StollVerdict out;
    out.resultant = modified_resultant(f, 2);
    out.factorization = factor_integer_polynomial(out.resultant);
    for (const auto& [g, m] : out.factorization.factors) {
        if (g.back() == 1 && g.front() == 1) out.constant_term_one.push_back(g);
    }
    return out;
}

// ---------------------------------------------------------------------------

CurveOracle::CurveOracle(QuotientPtr quotient, long p, int k, std::vector<Tag> tags)
    : quotient_(std::move(quotient)), p_(p), k_(k), tags_(std::move(tags)) {
    if (ipow(p, k) != quotient_->q()) {
        throw ConfigurationError("residue field size " + std::to_string(p) + "^" + std::to_string(k) +
                                 " does not match q = " + std::to_string(quotient_->q()));
    }
}

EulerFactor CurveOracle::query(const FieldDescriptor& field) const {
    for (const auto& tag : tags_) {
        if (!tag.field.same_field(field)) continue;
        FqField residue = fq_build(p_, static_cast<int>(k_ * field.f()));
        ExactPolynomial poly = ExactPolynomial::one();
        InverseRootMultiset roots;
        bool certified = true;
        for (const auto& e : tag.components) {
            EulerFactor part = euler_factor_good(e, residue);
            poly = poly * part.poly;
            if (part.roots) {
                roots = roots.merged(*part.roots);
            } else {
                certified = false;
            }
        }
        return certified ? EulerFactor(poly, roots) : EulerFactor(poly);
    }
    throw MissingDataError("no good-reduction model tagged for " + field.str());
}

}  // namespace weilrep
