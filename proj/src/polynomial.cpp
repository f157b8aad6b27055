#include <algorithm>
#include <cctype>
#include <sstream>

#include "weilrep/cyclotomic.hpp"
#include "weilrep/errors.hpp"
#include "weilrep/text.hpp"

namespace weilrep {

ExactPolynomial::ExactPolynomial(std::vector<Cyclotomic> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

ExactPolynomial ExactPolynomial::linear_factor(const Cyclotomic& beta) { return ExactPolynomial({Cyclotomic(1), -beta}); }

void ExactPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Cyclotomic ExactPolynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Cyclotomic();
    return coeffs_[i];
}

bool ExactPolynomial::has_rational_coefficients() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Cyclotomic& c) { return c.is_rational(); });
}

ExactPolynomial ExactPolynomial::operator+(const ExactPolynomial& other) const {
    std::vector<Cyclotomic> out(std::max(coeffs_.size(), other.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(static_cast<int>(i)) + other.coeff(static_cast<int>(i));
    return ExactPolynomial(std::move(out));
}

ExactPolynomial ExactPolynomial::operator-(const ExactPolynomial& other) const {
    std::vector<Cyclotomic> out(std::max(coeffs_.size(), other.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(static_cast<int>(i)) - other.coeff(static_cast<int>(i));
    return ExactPolynomial(std::move(out));
}

ExactPolynomial ExactPolynomial::operator*(const ExactPolynomial& other) const {
    if (is_zero() || other.is_zero()) return {};
    std::vector<Cyclotomic> out(coeffs_.size() + other.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
    }
    return ExactPolynomial(std::move(out));
}

ExactPolynomial ExactPolynomial::pow(int e) const {
    ExactPolynomial out = one();
    for (int i = 0; i < e; ++i) out = out * *this;
    return out;
}

Cyclotomic ExactPolynomial::evaluate(const Cyclotomic& x) const {
    Cyclotomic acc;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

ExactPolynomial ExactPolynomial::scale_variable(const Cyclotomic& c) const {
    std::vector<Cyclotomic> out = coeffs_;
    Cyclotomic power(1);
    for (auto& coeff : out) {
        coeff *= power;
        power *= c;
    }
    return ExactPolynomial(std::move(out));
}

ExactPolynomial ExactPolynomial::derivative() const {
    std::vector<Cyclotomic> out;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) out.push_back(coeffs_[i] * Cyclotomic(static_cast<long>(i)));
    return ExactPolynomial(std::move(out));
}

std::pair<ExactPolynomial, ExactPolynomial> ExactPolynomial::divmod(const ExactPolynomial& divisor) const {
    if (divisor.is_zero()) throw DomainError("polynomial division by zero");
    std::vector<Cyclotomic> rem = coeffs_;
    const int dd = divisor.degree();
    if (degree() < dd) return {ExactPolynomial(), *this};
    std::vector<Cyclotomic> quot(degree() - dd + 1);
    const Cyclotomic lead_inv = divisor.coeffs_.back().inverse();
    for (int i = degree(); i >= dd; --i) {
        if (rem[i].is_zero()) continue;
        Cyclotomic c = rem[i] * lead_inv;
        quot[i - dd] = c;
        for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= c * divisor.coeffs_[j];
    }
    return {ExactPolynomial(std::move(quot)), ExactPolynomial(std::move(rem))};
}

ExactPolynomial ExactPolynomial::normalized() const {
    if (is_zero() || coeffs_[0].is_zero()) throw DomainError("cannot normalize: constant term is zero");
    std::vector<Cyclotomic> out = coeffs_;
    const Cyclotomic inv = coeffs_[0].inverse();
    for (auto& c : out) c *= inv;
    return ExactPolynomial(std::move(out));
}

std::string ExactPolynomial::pretty() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Cyclotomic& c = coeffs_[i];
        if (c.is_zero()) continue;
        std::string mono = i == 0 ? "" : (i == 1 ? "T" : "T^" + std::to_string(i));
        if (c.is_rational()) {
            Rational r = c.to_rational();
            bool negative = sgn(r) < 0;
            Rational mag = abs(r);
            if (first) {
                os << (negative ? "-" : "");
            } else {
                os << (negative ? " - " : " + ");
            }
            if (i == 0 || mag != 1) os << mag.get_str();
        } else {
            os << (first ? "" : " + ") << c.str();
        }
        os << mono;
        first = false;
    }
    return os.str();
}

std::string ExactPolynomial::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) os << (i ? ", " : "") << coeffs_[i].str();
    os << "]";
    return os.str();
}

namespace {

ExactPolynomial parse_pretty(std::string_view s) {
    // split into signed terms at depth zero
    std::vector<std::pair<bool, std::string_view>> terms;
    int depth = 0;
    std::size_t start = 0;
    bool negative = false;
    std::size_t i = 0;
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
        negative = s[i] == '-';
        ++i;
    }
    start = i;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
        bool exponent_sign = i > 0 && s[i - 1] == '^';
        if (depth == 0 && (c == '+' || c == '-') && !exponent_sign && i > start) {
            terms.emplace_back(negative, text::strip(s.substr(start, i - start)));
            negative = c == '-';
            start = i + 1;
        }
    }
    terms.emplace_back(negative, text::strip(s.substr(start)));
    std::vector<Cyclotomic> coeffs;
    for (auto [neg, body] : terms) {
        if (body.empty()) throw ParseError("empty term in polynomial");
        std::size_t tpos = std::string_view::npos;
        int d = 0;
        for (std::size_t k = 0; k < body.size(); ++k) {
            if (body[k] == '(') ++d;
            if (body[k] == ')') --d;
            if (d == 0 && body[k] == 'T') tpos = k;
        }
        Cyclotomic c(1);
        long degree = 0;
        if (tpos == std::string_view::npos) {
            c = Cyclotomic::parse(body);
        } else {
            std::string_view cs = text::strip(body.substr(0, tpos));
            if (!cs.empty() && cs.back() == '*') cs = text::strip(cs.substr(0, cs.size() - 1));
            if (!cs.empty()) c = Cyclotomic::parse(cs);
            std::string_view rest = text::strip(body.substr(tpos + 1));
            degree = 1;
            if (!rest.empty()) {
                if (rest[0] != '^') throw ParseError("unexpected '" + std::string(rest) + "' after T");
                degree = text::parse_long(rest.substr(1));
            }
        }
        if (degree < 0) throw ParseError("negative exponent in polynomial");
        if (neg) c = -c;
        if (static_cast<long>(coeffs.size()) <= degree) coeffs.resize(degree + 1);
        coeffs[degree] += c;
    }
    return ExactPolynomial(std::move(coeffs));
}

}  // namespace

ExactPolynomial ExactPolynomial::parse(std::string_view input) {
    std::string_view s = text::strip(input);
    if (s.empty()) throw ParseError("empty polynomial");
    if (s.front() != '[') return parse_pretty(s);
    if (s.back() != ']') throw ParseError("missing ']' in polynomial");
    std::string_view body = text::strip(s.substr(1, s.size() - 2));
    std::vector<Cyclotomic> coeffs;
    if (!body.empty()) {
        for (auto item : text::split_top_level(body, ',')) coeffs.push_back(Cyclotomic::parse(item));
    }
    return ExactPolynomial(std::move(coeffs));
}

InverseRootMultiset::InverseRootMultiset(std::vector<Cyclotomic> roots) : roots_(std::move(roots)) {
    std::sort(roots_.begin(), roots_.end(), CanonicalLess{});
}

void InverseRootMultiset::add(const Cyclotomic& beta, int multiplicity) {
    for (int i = 0; i < multiplicity; ++i) {
        auto pos = std::upper_bound(roots_.begin(), roots_.end(), beta, CanonicalLess{});
        roots_.insert(pos, beta);
    }
}

InverseRootMultiset InverseRootMultiset::merged(const InverseRootMultiset& other) const {
    std::vector<Cyclotomic> all = roots_;
    all.insert(all.end(), other.roots_.begin(), other.roots_.end());
    return InverseRootMultiset(std::move(all));
}

InverseRootMultiset InverseRootMultiset::scaled(const Cyclotomic& c) const {
    std::vector<Cyclotomic> all;
    all.reserve(roots_.size());
    for (const auto& r : roots_) all.push_back(r * c);
    return InverseRootMultiset(std::move(all));
}

std::string InverseRootMultiset::str() const {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < roots_.size(); ++i) os << (i ? "; " : "") << roots_[i].str();
    os << "}";
    return os.str();
}

InverseRootMultiset InverseRootMultiset::parse(std::string_view input) {
    std::string_view s = text::strip(input);
    if (s.size() < 2 || s.front() != '{' || s.back() != '}') throw ParseError("root multiset must be {..}");
    std::string_view body = text::strip(s.substr(1, s.size() - 2));
    std::vector<Cyclotomic> roots;
    if (!body.empty()) {
        for (auto item : text::split_top_level(body, ';')) roots.push_back(Cyclotomic::parse(item));
    }
    return InverseRootMultiset(std::move(roots));
}

ExactPolynomial expand_from_inverse_roots(const InverseRootMultiset& roots) {
    ExactPolynomial p = ExactPolynomial::one();
    for (const auto& beta : roots.roots()) p = p * ExactPolynomial::linear_factor(beta);
    return p;
}

ExactPolynomial poly_gcd(ExactPolynomial a, ExactPolynomial b) {
    while (!b.is_zero()) {
        auto r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    if (!a.coeff(0).is_zero()) return a.normalized();
    const Cyclotomic inv = a.coeffs().back().inverse();
    std::vector<Cyclotomic> out = a.coeffs();
    for (auto& c : out) c *= inv;
    return ExactPolynomial(std::move(out));
}

InverseRootMultiset quadratic_inverse_roots(const ExactPolynomial& p) {
    if (p.is_zero() || !p.coeff(0).is_one()) throw DomainError("quadratic_inverse_roots: constant term must be 1");
    if (p.degree() > 2) throw DomainError("quadratic_inverse_roots: degree exceeds 2");
    if (p.degree() == 0) return {};
    if (p.degree() == 1) return InverseRootMultiset({-p.coeff(1)});
    // (1 - b1 T)(1 - b2 T): b1 + b2 = -c1, b1 b2 = c2
    const Cyclotomic b = p.coeff(1);
    const Cyclotomic c = p.coeff(2);
    Cyclotomic disc = b * b - Cyclotomic(4) * c;
    if (!disc.is_rational()) {
        throw UnsupportedError("quadratic_inverse_roots: discriminant " + disc.str() + " is not rational");
    }
    Cyclotomic s = disc.is_zero() ? Cyclotomic() : sqrt_rational(disc.to_rational());
    Cyclotomic half(Rational(1, 2));
    return InverseRootMultiset({(-b + s) * half, (-b - s) * half});
}

}  // namespace weilrep
