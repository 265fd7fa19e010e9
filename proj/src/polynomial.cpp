#include "lielap/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace lielap {

namespace {

using IntPoly = std::vector<Integer>;  // low degree first, no trailing zeros

void trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int deg(const IntPoly& p) { return static_cast<int>(p.size()) - 1; }

Integer content(const IntPoly& p) {
    Integer g = 0;
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

void divide_exact(IntPoly& p, const Integer& d) {
    if (d == 1) return;
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
}

/// Primitive part with positive leading coefficient.
IntPoly primitive(IntPoly p) {
    trim(p);
    if (p.empty()) return p;
    divide_exact(p, content(p));
    if (p.back() < 0)
        for (auto& c : p) c = -c;
    return p;
}

/// Clears denominators: p = P / scale with P integral and scale > 0.
IntPoly clear_denominators(const Polynomial& p, Integer& scale) {
    scale = 1;
    for (const auto& c : p.coefficients()) {
        Integer d = c.denominator();
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), d.get_mpz_t());
    }
    IntPoly out;
    out.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients()) {
        Integer v = c.numerator() * (scale / c.denominator());
        out.push_back(v);
    }
    return out;
}

Polynomial to_rational(const IntPoly& p) {
    std::vector<Rational> c;
    c.reserve(p.size());
    for (const auto& v : p) c.emplace_back(v);
    return Polynomial(std::move(c));
}

/// Standard pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + r.
IntPoly prem(IntPoly a, const IntPoly& b) {
    const int db = deg(b);
    const int delta = deg(a) - db;
    if (delta < 0) return a;
    const Integer& lb = b.back();
    int steps = 0;
    while (deg(a) >= db && !a.empty()) {
        const int shift = deg(a) - db;
        Integer la = a.back();
        for (auto& c : a) c *= lb;
        for (int i = 0; i <= db; ++i) a[shift + i] -= la * b[i];
        trim(a);
        ++steps;
    }
    Integer extra;
    mpz_pow_ui(extra.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(delta + 1 - steps));
    if (extra != 1)
        for (auto& c : a) c *= extra;
    return a;
}

Integer ipow(const Integer& base, long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

/// Resultant over Z, subresultant algorithm (Collins/Brown, as in Cohen 3.3.7).
Integer int_resultant(IntPoly a, IntPoly b) {
    if (a.empty() || b.empty()) return 0;
    Integer ca = content(a), cb = content(b);
    divide_exact(a, ca);
    divide_exact(b, cb);
    Integer g = 1, h = 1;
    int s = 1;
    Integer t = ipow(ca, deg(b)) * ipow(cb, deg(a));
    if (deg(a) < deg(b)) {
        std::swap(a, b);
        if ((deg(a) & 1) && (deg(b) & 1)) s = -1;
    }
    while (deg(b) > 0) {
        const int delta = deg(a) - deg(b);
        if ((deg(a) & 1) && (deg(b) & 1)) s = -s;
        IntPoly r = prem(a, b);
        a = std::move(b);
        Integer divisor = g * ipow(h, delta);
        divide_exact(r, divisor);
        b = std::move(r);
        g = a.back();
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = g;
        } else {
            Integer num = ipow(g, delta), den = ipow(h, delta - 1);
            mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        }
    }
    if (b.empty()) return 0;
    // b is a nonzero constant
    const int da = deg(a);
    Integer num = ipow(b.back(), da);
    Integer hfinal;
    if (da == 0) {
        // h^(1) * lb^0
        hfinal = h;
    } else {
        Integer den = ipow(h, da - 1);
        mpz_divexact(hfinal.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    return s * t * hfinal;
}

IntPoly int_gcd(IntPoly a, IntPoly b) {
    a = primitive(std::move(a));
    b = primitive(std::move(b));
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (deg(a) < deg(b)) std::swap(a, b);
    while (!b.empty()) {
        IntPoly r = primitive(prem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

int sign_of(const Integer& v) { return sgn(v); }

}  // namespace

Polynomial::Polynomial(std::vector<Rational> coefficients) : c_(std::move(coefficients)) { trim(); }

void Polynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational Polynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
    return c_[static_cast<std::size_t>(i)];
}

const Rational& Polynomial::leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return c_.back();
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

double Polynomial::eval(double x) const {
    long double acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_double();
    return static_cast<double>(acc);
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d;
    d.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Rational(static_cast<long long>(i)));
    return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
    if (c_.empty()) return {};
    Polynomial out = *this;
    Rational lc = c_.back();
    for (auto& c : out.c_) c /= lc;
    return out;
}

Polynomial Polynomial::compose_affine(const Rational& a, const Rational& b) const {
    // Horner in the polynomial ring: acc = acc*(aX+b) + c_i.
    Polynomial lin({b, a});
    Polynomial acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= lin;
        acc += Polynomial::constant(*it);
    }
    return acc;
}

std::string Polynomial::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = c_[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        Rational mag = abs(c);
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << mag;
            continue;
        }
        if (!mag.is_one()) os << mag << "*";
        os << var;
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
    if (c_.empty() || rhs.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<Rational> out(c_.size() + rhs.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < rhs.c_.size(); ++j) out[i + j] += c_[i] * rhs.c_[j];
    }
    c_ = std::move(out);
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> r = a.coefficients();
    const int db = b.degree();
    const int da = a.degree();
    if (da < db) return {Polynomial(), a};
    std::vector<Rational> q(static_cast<std::size_t>(da - db + 1));
    const Rational& lb = b.leading();
    for (int i = da; i >= db; --i) {
        const Rational& top = r[static_cast<std::size_t>(i)];
        if (top.is_zero()) continue;
        Rational factor = top / lb;
        for (int j = 0; j <= db; ++j)
            r[static_cast<std::size_t>(i - db + j)] -= factor * b.coefficients()[static_cast<std::size_t>(j)];
        q[static_cast<std::size_t>(i - db)] = std::move(factor);
    }
    return {Polynomial(std::move(q)), Polynomial(std::move(r))};
}

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::logic_error("polynomial division is not exact");
    return q;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    Integer sa, sb;
    IntPoly g = int_gcd(clear_denominators(a, sa), clear_denominators(b, sb));
    return to_rational(g).monic();
}

Rational resultant(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() && q.is_zero()) throw std::invalid_argument("resultant of two zero polynomials");
    if (p.is_zero() || q.is_zero()) {
        // Sylvester matrix of a zero polynomial against a constant is empty.
        const Polynomial& other = p.is_zero() ? q : p;
        return other.degree() == 0 ? Rational(1) : Rational(0);
    }
    Integer sp, sq;
    IntPoly ip = clear_denominators(p, sp), iq = clear_denominators(q, sq);
    Integer r = int_resultant(std::move(ip), std::move(iq));
    // res(P/sp, Q/sq) = res(P, Q) / (sp^deg q * sq^deg p)
    Integer den = ipow(sp, q.degree()) * ipow(sq, p.degree());
    return Rational(r, den);
}

std::vector<std::pair<int, Polynomial>> squarefree_decomposition(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("square-free decomposition of zero");
    std::vector<std::pair<int, Polynomial>> out;
    if (p.degree() == 0) return out;
    Polynomial f = p.monic();
    Polynomial df = f.derivative();
    Polynomial a = gcd(f, df);
    Polynomial b = exact_quotient(f, a);
    Polynomial c = exact_quotient(df, a);
    Polynomial d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        Polynomial g = gcd(b, d);
        if (g.degree() > 0) out.emplace_back(i, g);
        b = exact_quotient(b, g);
        c = exact_quotient(d, g);
        d = c - b.derivative();
        ++i;
    }
    return out;
}

SturmChain::SturmChain(const Polynomial& squarefree) {
    if (squarefree.is_zero()) throw std::invalid_argument("Sturm chain of zero polynomial");
    Integer s;
    IntPoly p0 = primitive(clear_denominators(squarefree, s));
    IntPoly p1 = primitive(clear_denominators(squarefree.derivative(), s));
    chain_.push_back(p0);
    if (p1.empty()) return;
    chain_.push_back(p1);
    while (true) {
        const IntPoly& a = chain_[chain_.size() - 2];
        const IntPoly& b = chain_.back();
        if (deg(b) == 0) break;
        IntPoly r = prem(a, b);
        // prem carries lc(b)^(delta+1); keep the sign of the true remainder.
        const int delta = deg(a) - deg(b);
        if (sign_of(b.back()) < 0 && ((delta + 1) & 1)) {
            for (auto& c : r) c = -c;
        }
        for (auto& c : r) c = -c;
        trim(r);
        if (r.empty()) break;
        Integer ct = content(r);
        divide_exact(r, ct);
        chain_.push_back(std::move(r));
    }
}

int SturmChain::variations_at(const Rational& x) const {
    const Integer num = x.numerator(), den = x.denominator();
    int changes = 0, last = 0;
    for (const auto& p : chain_) {
        // sign of den^deg * p(num/den)
        Integer acc = 0, dpow = 1;
        const int d = deg(p);
        std::vector<Integer> dens(static_cast<std::size_t>(d + 1));
        for (int i = 0; i <= d; ++i) {
            dens[static_cast<std::size_t>(i)] = dpow;
            dpow *= den;
        }
        for (int i = d; i >= 0; --i) acc = acc * num + p[static_cast<std::size_t>(i)] * dens[static_cast<std::size_t>(d - i)];
        int sg = sign_of(acc);
        if (sg == 0) continue;
        if (last != 0 && sg != last) ++changes;
        last = sg;
    }
    return changes;
}

int SturmChain::variations_at_infinity(int direction) const {
    int changes = 0, last = 0;
    for (const auto& p : chain_) {
        int sg = sign_of(p.back());
        if (direction < 0 && (deg(p) & 1)) sg = -sg;
        if (last != 0 && sg != last) ++changes;
        last = sg;
    }
    return changes;
}

int SturmChain::count_at_most(const Rational& x) const { return variations_at_infinity(-1) - variations_at(x); }

int SturmChain::count_in(const Rational& a, const Rational& b) const { return variations_at(a) - variations_at(b); }

int SturmChain::count_real() const { return variations_at_infinity(-1) - variations_at_infinity(1); }

}  // namespace lielap
