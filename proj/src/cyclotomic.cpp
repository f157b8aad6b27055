#include "weilrep/cyclotomic.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "weilrep/errors.hpp"

namespace weilrep {

int conductor_ceiling() {
    static const int ceiling = [] {
        if (const char* env = std::getenv("WEILREP_CONDUCTOR_CEILING")) {
            int v = std::atoi(env);
            if (v > 0) return v;
        }
        return 240;
    }();
    return ceiling;
}

long euler_phi(long n) {
    long result = n;
    for (long p : prime_factors(n)) result -= result / p;
    return result;
}

std::vector<long> prime_factors(long n) {
    std::vector<long> out;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

namespace {

long mod(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

long inverse_mod(long a, long m) {
    if (m == 1) return 0;
    long t = 0, new_t = 1, r = m, new_r = mod(a, m);
    while (new_r != 0) {
        long q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    return mod(t, m);
}

// Coefficients of Phi_n, constant term first.  Memoised; the cache only ever
// grows and entries are never modified once inserted.
const std::vector<long>& cyclotomic_polynomial(long n) {
    static std::mutex mu;
    static std::map<long, std::vector<long>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    std::vector<long> num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        const std::vector<long>& den = cyclotomic_polynomial(d);
        // exact division of monic integer polynomials
        std::size_t dn = den.size() - 1;
        std::vector<long> quot(num.size() - dn, 0);
        for (std::size_t i = num.size(); i-- > dn;) {
            long c = num[i];
            quot[i - dn] = c;
            if (c == 0) continue;
            for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
        }
        num = std::move(quot);
    }
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(n, std::move(num)).first->second;
}

void check_ceiling(long n) {
    if (n > conductor_ceiling()) {
        throw ConfigurationError("conductor " + std::to_string(n) + " exceeds ceiling " +
                                 std::to_string(conductor_ceiling()));
    }
}

// Reduce a dense exponent vector (any length) modulo z^n - 1 and Phi_n.
std::vector<Rational> reduce_dense(std::vector<Rational> v, long n) {
    if (static_cast<long>(v.size()) > n) {
        for (std::size_t i = n; i < v.size(); ++i) v[i % n] += v[i];
        v.resize(n);
    }
    const std::vector<long>& phi = cyclotomic_polynomial(n);
    const std::size_t deg = phi.size() - 1;
    for (std::size_t i = v.size(); i-- > deg;) {
        if (sgn(v[i]) == 0) continue;
        Rational c = v[i];
        for (std::size_t j = 0; j <= deg; ++j) {
            if (phi[j] != 0) v[i - deg + j] -= c * phi[j];
        }
    }
    v.resize(deg);
    return v;
}

std::vector<Rational> lift(const std::vector<Rational>& coeffs, long from, long to) {
    if (from == to) return coeffs;
    long step = to / from;
    std::vector<Rational> dense(to);
    for (std::size_t j = 0; j < coeffs.size(); ++j) dense[j * step] = coeffs[j];
    return reduce_dense(std::move(dense), to);
}

long canonical_conductor(long n) { return (n % 4 == 2) ? n / 2 : n; }

// Attempt to move an element of Q(zeta_n) into Q(zeta_{n/p}) (or the
// appropriate canonical subfield).  Returns true and fills `out` on success.
bool try_descend(long n, const std::vector<Rational>& c, long p, long& new_n, std::vector<Rational>& out) {
    bool square_case = (p == 2) ? (n % 8 == 0) : (n % (p * p) == 0);
    if (square_case) {
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (k % p != 0 && sgn(c[k]) != 0) return false;
        }
        new_n = n / p;
        out.assign(c.size() / p, Rational(0));
        for (std::size_t k = 0; k < c.size(); k += p) out[k / p] = c[k];
        return true;
    }
    long P = (p == 2) ? 4 : p;
    long m = n / P;
    long inv_p = inverse_mod(P, m);
    long inv_m = inverse_mod(m, P);
    std::vector<Rational> y(m);
    Rational off = (p == 2) ? Rational(0) : Rational(-1, p - 1);
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (sgn(c[k]) == 0) continue;
        long s = m == 1 ? 0 : mod(static_cast<long>(k) * inv_p, m);
        long t = mod(static_cast<long>(k) * inv_m, P);
        if (t == 0) {
            y[s] += c[k];
        } else if (p == 2) {
            if (t == 2) y[s] -= c[k];
        } else {
            y[s] += c[k] * off;
        }
    }
    std::vector<Rational> reduced = reduce_dense(std::move(y), m);
    if (lift(reduced, m, n) != c) return false;
    new_n = m;
    out = std::move(reduced);
    return true;
}

}  // namespace

struct CyclotomicAccess {
    static Cyclotomic make(long n, std::vector<Rational> coeffs) {
        // coeffs are already reduced modulo Phi_n; n is canonical
        bool changed = true;
        while (changed && n > 1) {
            changed = false;
            for (long p : prime_factors(n)) {
                long new_n = 0;
                std::vector<Rational> out;
                if (try_descend(n, coeffs, p, new_n, out)) {
                    n = new_n;
                    coeffs = std::move(out);
                    changed = true;
                    break;
                }
            }
        }
        return Cyclotomic(static_cast<int>(n), std::move(coeffs));
    }
    static Cyclotomic from_dense(long n, std::vector<Rational> dense) {
        check_ceiling(n);
        for (auto& c : dense) c.canonicalize();
        return make(n, reduce_dense(std::move(dense), n));
    }
};

Cyclotomic::Cyclotomic() : conductor_(1), coeffs_{Rational(0)} {}
Cyclotomic::Cyclotomic(long value) : conductor_(1), coeffs_{Rational(value)} {}
Cyclotomic::Cyclotomic(const Rational& value) : conductor_(1), coeffs_{value} {
    coeffs_[0].canonicalize();
}
Cyclotomic::Cyclotomic(int conductor, std::vector<Rational> coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {}

Cyclotomic Cyclotomic::root_of_unity(int order, long k) {
    if (order <= 0) throw DomainError("root of unity order must be positive");
    return from_terms(order, {{k, Rational(1)}});
}

Cyclotomic Cyclotomic::from_terms(int conductor, const std::vector<std::pair<long, Rational>>& terms) {
    if (conductor <= 0) throw DomainError("conductor must be positive");
    long n = canonical_conductor(conductor);
    std::vector<Rational> dense(n);
    for (const auto& [k, c] : terms) {
        if (n == conductor) {
            dense[mod(k, n)] += c;
        } else {
            // zeta_{2m} = -zeta_m^{(m+1)/2} for odd m
            long kk = mod(k, 2 * n);
            long e = mod(kk * ((n + 1) / 2), n);
            if (kk % 2 == 0) {
                dense[e] += c;
            } else {
                dense[e] -= c;
            }
        }
    }
    return CyclotomicAccess::from_dense(n, std::move(dense));
}

bool Cyclotomic::is_zero() const { return conductor_ == 1 && sgn(coeffs_[0]) == 0; }
bool Cyclotomic::is_one() const { return conductor_ == 1 && coeffs_[0] == 1; }

Rational Cyclotomic::to_rational() const {
    if (conductor_ != 1) throw DomainError("value " + str() + " is not rational");
    return coeffs_[0];
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& other) {
    if (conductor_ == 1 && other.conductor_ == 1) {
        coeffs_[0] += other.coeffs_[0];
        return *this;
    }
    long n = std::lcm<long>(conductor_, other.conductor_);
    check_ceiling(n);
    std::vector<Rational> a = lift(coeffs_, conductor_, n);
    std::vector<Rational> b = lift(other.coeffs_, other.conductor_, n);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    *this = CyclotomicAccess::make(n, std::move(a));
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& other) { return *this += -other; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& other) {
    if (other.conductor_ == 1) {
        if (conductor_ == 1) {
            coeffs_[0] *= other.coeffs_[0];
            return *this;
        }
        if (sgn(other.coeffs_[0]) == 0) return *this = Cyclotomic();
        for (auto& c : coeffs_) c *= other.coeffs_[0];
        return *this;
    }
    if (conductor_ == 1) {
        Rational r = coeffs_[0];
        *this = other;
        if (sgn(r) == 0) return *this = Cyclotomic();
        for (auto& c : coeffs_) c *= r;
        return *this;
    }
    long n = std::lcm<long>(conductor_, other.conductor_);
    check_ceiling(n);
    std::vector<Rational> a = lift(coeffs_, conductor_, n);
    std::vector<Rational> b = lift(other.coeffs_, other.conductor_, n);
    std::vector<Rational> prod(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (sgn(b[j]) != 0) prod[i + j] += a[i] * b[j];
        }
    }
    *this = CyclotomicAccess::from_dense(n, std::move(prod));
    return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& other) { return *this *= other.inverse(); }

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.conductor_ == b.conductor_ && a.coeffs_ == b.coeffs_;
}

namespace {

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

// quotient and remainder of a / b over Q, b nonzero
std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
    trim(a);
    QPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
    const Rational& lead = b.back();
    while (a.size() >= b.size() && !a.empty()) {
        std::size_t shift = a.size() - b.size();
        Rational c = a.back() / lead;
        q[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
        a.pop_back();
        trim(a);
    }
    return {q, a};
}

QPoly sub_mul(const QPoly& a, const QPoly& q, const QPoly& b) {
    QPoly out = a;
    if (!q.empty() && !b.empty()) {
        if (out.size() < q.size() + b.size() - 1) out.resize(q.size() + b.size() - 1);
        for (std::size_t i = 0; i < q.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) out[i + j] -= q[i] * b[j];
    }
    trim(out);
    return out;
}

}  // namespace

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw DomainError("division by zero");
    if (conductor_ == 1) return Cyclotomic(Rational(1) / coeffs_[0]);
    const std::vector<long>& phi = cyclotomic_polynomial(conductor_);
    QPoly r0(phi.begin(), phi.end());
    QPoly r1 = coeffs_;
    trim(r1);
    QPoly s0, s1{Rational(1)};
    while (!r1.empty()) {
        auto [q, r] = divmod(r0, r1);
        QPoly s2 = sub_mul(s0, q, s1);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 is a nonzero constant since Phi_n is irreducible
    Rational c = r0[0];
    std::vector<Rational> dense(conductor_);
    for (std::size_t i = 0; i < s0.size(); ++i) dense[i] = s0[i] / c;
    return CyclotomicAccess::from_dense(conductor_, std::move(dense));
}

Cyclotomic Cyclotomic::pow(long exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    Cyclotomic result(1);
    Cyclotomic base = *this;
    while (exponent > 0) {
        if (exponent & 1) result *= base;
        exponent >>= 1;
        if (exponent > 0) base *= base;
    }
    return result;
}

Cyclotomic Cyclotomic::galois(long a) const {
    if (conductor_ == 1) return *this;
    if (std::gcd(mod(a, conductor_), static_cast<long>(conductor_)) != 1) {
        throw DomainError("galois: exponent not coprime to conductor");
    }
    std::vector<Rational> dense(conductor_);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (sgn(coeffs_[k]) != 0) dense[mod(static_cast<long>(k) * a, conductor_)] += coeffs_[k];
    }
    return CyclotomicAccess::from_dense(conductor_, std::move(dense));
}

Cyclotomic Cyclotomic::conj() const { return galois(-1); }

std::string Cyclotomic::str() const {
    std::ostringstream os;
    os << "cyc(" << conductor_ << ";";
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (sgn(coeffs_[k]) == 0) continue;
        os << (first ? " " : ", ") << k << ":" << coeffs_[k].get_str();
        first = false;
    }
    os << ")";
    return os.str();
}

namespace {

std::string_view strip(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

Rational parse_rational(std::string_view s) {
    s = strip(s);
    if (s.empty()) throw ParseError("empty rational");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    bool slash = false;
    if (start == s.size()) throw ParseError("malformed rational '" + std::string(s) + "'");
    for (std::size_t i = start; i < s.size(); ++i) {
        char ch = s[i];
        if (ch == '/' && !slash && i > start && i + 1 < s.size()) {
            slash = true;
        } else if (!std::isdigit(static_cast<unsigned char>(ch))) {
            throw ParseError("malformed rational '" + std::string(s) + "'");
        }
    }
    std::string text(s[0] == '+' ? s.substr(1) : s);
    Rational r;
    if (r.set_str(text, 10) != 0) throw ParseError("malformed rational '" + text + "'");
    if (sgn(r.get_den()) == 0) throw ParseError("zero denominator in '" + text + "'");
    r.canonicalize();
    return r;
}

}  // namespace

Cyclotomic Cyclotomic::parse(std::string_view text) {
    std::string_view s = strip(text);
    if (s.rfind("cyc(", 0) != 0) return Cyclotomic(parse_rational(s));
    if (s.back() != ')') throw ParseError("missing ')' in '" + std::string(s) + "'");
    std::string_view body = s.substr(4, s.size() - 5);
    std::size_t semi = body.find(';');
    if (semi == std::string_view::npos) throw ParseError("missing ';' in '" + std::string(s) + "'");
    std::string_view nstr = strip(body.substr(0, semi));
    int n = 0;
    auto [ptr, ec] = std::from_chars(nstr.data(), nstr.data() + nstr.size(), n);
    if (ec != std::errc() || ptr != nstr.data() + nstr.size() || n <= 0) {
        throw ParseError("bad conductor in '" + std::string(s) + "'");
    }
    std::vector<std::pair<long, Rational>> terms;
    std::string_view rest = body.substr(semi + 1);
    while (!strip(rest).empty()) {
        std::size_t comma = rest.find(',');
        std::string_view item = strip(rest.substr(0, comma));
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        std::size_t colon = item.find(':');
        if (colon == std::string_view::npos) throw ParseError("term without ':' in '" + std::string(s) + "'");
        std::string_view kstr = strip(item.substr(0, colon));
        long k = 0;
        auto [p2, ec2] = std::from_chars(kstr.data(), kstr.data() + kstr.size(), k);
        if (ec2 != std::errc() || p2 != kstr.data() + kstr.size()) {
            throw ParseError("bad exponent in '" + std::string(s) + "'");
        }
        terms.emplace_back(k, parse_rational(item.substr(colon + 1)));
    }
    return from_terms(n, terms);
}

bool canonical_less(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.conductor() != b.conductor()) return a.conductor() < b.conductor();
    const auto& x = a.coefficients();
    const auto& y = b.coefficients();
    for (std::size_t i = 0; i < x.size(); ++i) {
        int c = cmp(x[i], y[i]);
        if (c != 0) return c > 0;
    }
    return false;
}

std::optional<int> is_root_of_unity(const Cyclotomic& a) {
    if (a.is_zero()) return std::nullopt;
    if (!(a * a.conj()).is_one()) return std::nullopt;
    long n = a.conductor();
    long m = (n % 2 == 1) ? 2 * n : n;
    for (long k = 0; k < m; ++k) {
        if (Cyclotomic::root_of_unity(static_cast<int>(m), k) == a) {
            return static_cast<int>(m / std::gcd(m, k));
        }
    }
    return std::nullopt;
}

bool mu_class_equal(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.is_zero() || b.is_zero()) throw DomainError("mu_class_equal: zero argument");
    return is_root_of_unity(a / b).has_value();
}

Cyclotomic mu_class_representative(const Cyclotomic& a) {
    if (a.is_zero()) throw DomainError("mu_class_representative: zero argument");
    Cyclotomic best = a;
    while (true) {
        long n = best.conductor();
        long m = (n % 2 == 1) ? 2 * n : n;
        Cyclotomic candidate = best;
        for (long k = 1; k < m; ++k) {
            Cyclotomic c = best * Cyclotomic::root_of_unity(static_cast<int>(m), k);
            if (canonical_less(c, candidate)) candidate = c;
        }
        if (candidate == best) return best;
        best = candidate;
    }
}

namespace {

Cyclotomic sqrt_prime(long p) {
    if (p == 2) {
        return Cyclotomic::root_of_unity(8, 1) - Cyclotomic::root_of_unity(8, 3);
    }
    // quadratic Gauss sum: g^2 = (-1|p) p
    std::vector<std::pair<long, Rational>> terms;
    for (long a = 1; a < p; ++a) {
        // Euler's criterion by repeated multiplication
        long e = (p - 1) / 2, base = a % p, acc = 1;
        while (e > 0) {
            if (e & 1) acc = acc * base % p;
            base = base * base % p;
            e >>= 1;
        }
        terms.emplace_back(a, Rational(acc == 1 ? 1 : -1));
    }
    Cyclotomic g = Cyclotomic::from_terms(static_cast<int>(p), terms);
    if (p % 4 == 1) return g;
    return -Cyclotomic::root_of_unity(4, 1) * g;
}

// n = square^2 * squarefree
void split_square(mpz_class n, mpz_class& square, std::vector<long>& squarefree_primes) {
    square = 1;
    for (long p = 2; mpz_class(p) * p <= n; ++p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) square *= p;
        if (e % 2 == 1) squarefree_primes.push_back(p);
    }
    if (n > 1) {
        if (!n.fits_slong_p()) throw UnsupportedError("sqrt_rational: prime factor too large");
        squarefree_primes.push_back(n.get_si());
    }
}

std::optional<mpz_class> exact_root(const mpz_class& v, unsigned long n) {
    mpz_class r;
    if (mpz_root(r.get_mpz_t(), v.get_mpz_t(), n) != 0) return r;
    return std::nullopt;
}

std::optional<Rational> rational_root(const Rational& r, unsigned long n) {
    auto num = exact_root(r.get_num(), n);
    auto den = exact_root(r.get_den(), n);
    if (!num || !den) return std::nullopt;
    return Rational(*num, *den);
}

}  // namespace

Cyclotomic sqrt_rational(const Rational& r) {
    if (sgn(r) == 0) throw DomainError("sqrt_rational: zero argument");
    Rational q = r;
    q.canonicalize();
    mpz_class n = abs(q.get_num()) * q.get_den();
    mpz_class square;
    std::vector<long> primes;
    split_square(n, square, primes);
    Cyclotomic s(Rational(square, q.get_den()));
    for (long p : primes) s *= sqrt_prime(p);
    if (sgn(q) < 0) s *= Cyclotomic::root_of_unity(4, 1);
    Cyclotomic neg = -s;
    return canonical_less(neg, s) ? neg : s;
}

std::optional<Cyclotomic> nth_root(const Cyclotomic& a, int n) {
    if (a.is_zero()) throw DomainError("nth_root: zero argument");
    if (n <= 0) throw DomainError("nth_root: index must be positive");
    if (n == 1) return a;
    try {
        long cond = a.conductor();
        long m = (cond % 2 == 1) ? 2 * cond : cond;
        for (long k = 0; k < m; ++k) {
            Cyclotomic xi = Cyclotomic::root_of_unity(static_cast<int>(m), k);
            Cyclotomic t = a / xi;
            if (!t.is_rational() || sgn(t.to_rational()) <= 0) continue;
            Rational r = t.to_rational();
            std::optional<Cyclotomic> radial;
            if (auto w = rational_root(r, n)) {
                radial = Cyclotomic(*w);
            } else if (n % 2 == 0) {
                if (auto w2 = rational_root(r, n / 2)) radial = sqrt_rational(*w2);
            }
            if (!radial) return std::nullopt;
            Cyclotomic root = Cyclotomic::root_of_unity(static_cast<int>(m * n), k) * *radial;
            Cyclotomic best = root;
            for (int j = 1; j < n; ++j) {
                Cyclotomic c = root * Cyclotomic::root_of_unity(n, j);
                if (canonical_less(c, best)) best = c;
            }
            return best;
        }
        return std::nullopt;
    } catch (const ConfigurationError&) {
        return std::nullopt;
    }
}

}  // namespace weilrep
