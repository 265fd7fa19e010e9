#include "lielap/rational.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace lielap {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();
constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

u128 uabs(i128 v) { return v < 0 ? u128(-(v + 1)) + 1 : u128(v); }

u128 gcd128(u128 a, u128 b) {
    if (a == 0) return b;
    if (b == 0) return a;
    if ((a >> 64) == 0 && (b >> 64) == 0) {
        std::uint64_t x = std::uint64_t(a), y = std::uint64_t(b);
        int shift = __builtin_ctzll(x | y);
        x >>= __builtin_ctzll(x);
        do {
            y >>= __builtin_ctzll(y);
            if (x > y) std::swap(x, y);
            y -= x;
        } while (y != 0);
        return u128(x) << shift;
    }
    auto ctz = [](u128 v) {
        auto lo = std::uint64_t(v);
        return lo ? __builtin_ctzll(lo) : 64 + __builtin_ctzll(std::uint64_t(v >> 64));
    };
    int shift = ctz(a | b);
    a >>= ctz(a);
    do {
        b >>= ctz(b);
        if (a > b) std::swap(a, b);
        b -= a;
    } while (b != 0);
    return a << shift;
}

mpz_class mpz_from(i128 v) {
    u128 mag = uabs(v);
    mpz_class z;
    std::uint64_t words[2] = {std::uint64_t(mag), std::uint64_t(mag >> 64)};
    mpz_import(z.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, words);
    if (v < 0) z = -z;
    return z;
}

bool fits_small(i128 num, i128 den) { return num > kMin && num <= kMax && den > 0 && den <= kMax; }

mpq_class small_to_mpq(std::int64_t num, std::int64_t den) {
    mpq_class q;
    mpq_set_si(q.get_mpq_t(), num, static_cast<unsigned long>(den));
    return q;
}

}  // namespace

Rational::Rational(long long num, long long den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    normalize_small(num, den);
}

Rational::Rational(const mpz_class& v) { set_big(mpq_class(v)); }

Rational::Rational(const mpq_class& v) {
    mpq_class c(v);
    c.canonicalize();
    set_big(std::move(c));
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    set_big(std::move(q));
}

Rational::Rational(const Rational& other)
    : num_(other.num_), den_(other.den_), big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

Rational& Rational::operator=(const Rational& other) {
    if (this == &other) return *this;
    num_ = other.num_;
    den_ = other.den_;
    if (other.big_) {
        if (big_)
            *big_ = *other.big_;
        else
            big_ = std::make_unique<mpq_class>(*other.big_);
    } else {
        big_.reset();
    }
    return *this;
}

void Rational::set_big(mpq_class&& v) {
    const mpz_srcptr n = mpq_numref(v.get_mpq_t());
    const mpz_srcptr d = mpq_denref(v.get_mpq_t());
    if (mpz_fits_slong_p(n) && mpz_fits_slong_p(d)) {
        long ns = mpz_get_si(n);
        if (ns != kMin) {
            num_ = ns;
            den_ = mpz_get_si(d);
            big_.reset();
            return;
        }
    }
    num_ = 0;
    den_ = 1;
    if (big_)
        *big_ = std::move(v);
    else
        big_ = std::make_unique<mpq_class>(std::move(v));
}

void Rational::normalize_small(i128 num, i128 den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num == 0) {
        num_ = 0;
        den_ = 1;
        big_.reset();
        return;
    }
    u128 g = gcd128(uabs(num), u128(den));
    if (g > 1) {
        num /= i128(g);
        den /= i128(g);
    }
    if (fits_small(num, den)) {
        num_ = std::int64_t(num);
        den_ = std::int64_t(den);
        big_.reset();
    } else {
        mpq_class q;
        mpz_class nz = mpz_from(num), dz = mpz_from(den);
        mpq_set_num(q.get_mpq_t(), nz.get_mpz_t());
        mpq_set_den(q.get_mpq_t(), dz.get_mpz_t());
        num_ = 0;
        den_ = 1;
        big_ = std::make_unique<mpq_class>(std::move(q));
    }
}

Rational Rational::parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto valid_int = [](std::string_view t) {
        std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i >= t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    auto to_mpz = [&](std::string t) {
        if (!valid_int(t)) throw std::invalid_argument("malformed rational literal: " + std::string(text));
        if (t[0] == '+') t.erase(0, 1);
        return mpz_class(t, 10);
    };
    if (auto slash = s.find('/'); slash != std::string::npos) {
        mpz_class den = to_mpz(s.substr(slash + 1));
        if (den == 0) throw std::domain_error("rational with zero denominator");
        return Rational(to_mpz(s.substr(0, slash)), den);
    }
    if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string whole = s.substr(0, dot), fraction = s.substr(dot + 1);
        bool negative = !whole.empty() && whole[0] == '-';
        if (!whole.empty() && (whole[0] == '-' || whole[0] == '+')) whole.erase(0, 1);
        if (whole.empty()) whole = "0";
        if (fraction.empty()) fraction = "0";
        mpz_class w = to_mpz(whole), f = to_mpz(fraction);
        if (fraction[0] == '-' || fraction[0] == '+') throw std::invalid_argument("malformed decimal: " + s);
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, fraction.size());
        mpz_class num = w * scale + f;
        if (negative) num = -num;
        return Rational(num, scale);
    }
    return Rational(to_mpz(s));
}

bool Rational::is_integer() const { return big_ ? mpz_cmp_ui(mpq_denref(big_->get_mpq_t()), 1) == 0 : den_ == 1; }

int Rational::sign() const noexcept {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

mpz_class Rational::numerator() const { return big_ ? mpz_class(big_->get_num()) : mpz_class(static_cast<long>(num_)); }

mpz_class Rational::denominator() const { return big_ ? mpz_class(big_->get_den()) : mpz_class(static_cast<long>(den_)); }

mpq_class Rational::to_mpq() const { return big_ ? *big_ : small_to_mpq(num_, den_); }

double Rational::to_double() const {
    if (big_) return big_->get_d();
    return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::str() const {
    if (big_) return big_->get_str();
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

Rational& Rational::operator+=(const Rational& rhs) {
    if (rhs.is_zero()) return *this;
    if (!big_ && !rhs.big_) {
        if (den_ == 1 && rhs.den_ == 1) {
            std::int64_t out;
            if (!__builtin_add_overflow(num_, rhs.num_, &out) && out != kMin) {
                num_ = out;
                return *this;
            }
        }
        if (den_ == rhs.den_) {
            normalize_small(i128(num_) + rhs.num_, den_);
            return *this;
        }
        normalize_small(i128(num_) * rhs.den_ + i128(rhs.num_) * den_, i128(den_) * rhs.den_);
        return *this;
    }
    set_big(to_mpq() + rhs.to_mpq());
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    if (rhs.is_zero()) return *this;
    if (!big_ && !rhs.big_) {
        if (den_ == 1 && rhs.den_ == 1) {
            std::int64_t out;
            if (!__builtin_sub_overflow(num_, rhs.num_, &out) && out != kMin) {
                num_ = out;
                return *this;
            }
        }
        normalize_small(i128(num_) * rhs.den_ - i128(rhs.num_) * den_, i128(den_) * rhs.den_);
        return *this;
    }
    set_big(to_mpq() - rhs.to_mpq());
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    if (is_zero()) return *this;
    if (rhs.is_zero()) {
        num_ = 0;
        den_ = 1;
        big_.reset();
        return *this;
    }
    if (!big_ && !rhs.big_) {
        normalize_small(i128(num_) * rhs.num_, i128(den_) * rhs.den_);
        return *this;
    }
    set_big(to_mpq() * rhs.to_mpq());
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("division by zero rational");
    if (!big_ && !rhs.big_) {
        normalize_small(i128(num_) * rhs.den_, i128(den_) * rhs.num_);
        return *this;
    }
    set_big(to_mpq() / rhs.to_mpq());
    return *this;
}

Rational operator-(Rational v) {
    if (v.big_)
        mpq_neg(v.big_->get_mpq_t(), v.big_->get_mpq_t());
    else
        v.num_ = -v.num_;
    return v;
}

bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return mpq_equal(a.big_->get_mpq_t(), b.big_->get_mpq_t()) != 0;
    return false;  // canonical forms: a big value never equals a small one
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        i128 l = i128(a.num_) * b.den_, r = i128(b.num_) * a.den_;
        return l <=> r;
    }
    int c = cmp(a.to_mpq(), b.to_mpq());
    return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& base, long exponent) {
    if (exponent < 0) return pow(Rational(1) / base, -exponent);
    Rational result(1), b = base;
    while (exponent > 0) {
        if (exponent & 1) result *= b;
        exponent >>= 1;
        if (exponent) b *= b;
    }
    return result;
}

mpz_class floor(const Rational& r) {
    mpz_class q;
    mpz_class n = r.numerator(), d = r.denominator();
    mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return q;
}

Rational frac(const Rational& r) { return r - Rational(floor(r)); }

Rational dyadic_floor(double x, int bits) {
    if (!std::isfinite(x)) throw std::domain_error("dyadic_floor of non-finite value");
    mpz_class scaled(std::floor(std::ldexp(x, bits)));
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, static_cast<unsigned long>(bits));
    return Rational(scaled, den);
}

std::string GaussRational::str() const {
    if (im_.is_zero()) return re_.str();
    std::string imag = im_.str() + "i";
    if (re_.is_zero()) return imag;
    return re_.str() + (im_.sign() > 0 ? "+" : "") + imag;
}

GaussRational& GaussRational::operator+=(const GaussRational& rhs) {
    re_ += rhs.re_;
    im_ += rhs.im_;
    return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& rhs) {
    re_ -= rhs.re_;
    im_ -= rhs.im_;
    return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& rhs) {
    // Generator entries are almost always purely real or purely imaginary.
    if (rhs.im_.is_zero()) {
        re_ *= rhs.re_;
        im_ *= rhs.re_;
        return *this;
    }
    if (rhs.re_.is_zero()) {
        Rational new_re = -(im_ * rhs.im_);
        im_ = re_ * rhs.im_;
        re_ = std::move(new_re);
        return *this;
    }
    Rational new_re = re_ * rhs.re_ - im_ * rhs.im_;
    im_ = re_ * rhs.im_ + im_ * rhs.re_;
    re_ = std::move(new_re);
    return *this;
}

GaussRational& GaussRational::operator/=(const GaussRational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("division by zero gaussian rational");
    if (rhs.im_.is_zero()) {
        re_ /= rhs.re_;
        im_ /= rhs.re_;
        return *this;
    }
    Rational n = rhs.norm2();
    *this *= rhs.conj();
    re_ /= n;
    im_ /= n;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const GaussRational& z) { return os << z.str(); }

GSparse drop_zeros(const GSparse& m) {
    std::vector<Eigen::Triplet<GaussRational>> triplets;
    for (Eigen::Index k = 0; k < m.outerSize(); ++k)
        for (GSparse::InnerIterator it(m, k); it; ++it)
            if (!it.value().is_zero()) triplets.emplace_back(it.row(), it.col(), it.value());
    GSparse out(m.rows(), m.cols());
    out.setFromTriplets(triplets.begin(), triplets.end());
    return out;
}

GMatrix to_gauss(const QMatrix& m) {
    GMatrix out(m.rows(), m.cols());
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i) out(i, j) = GaussRational(m(i, j));
    return out;
}

Eigen::MatrixXd to_double(const QMatrix& m) {
    Eigen::MatrixXd out(m.rows(), m.cols());
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i) out(i, j) = m(i, j).to_double();
    return out;
}

Eigen::MatrixXcd to_complex(const GMatrix& m) {
    Eigen::MatrixXcd out(m.rows(), m.cols());
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            out(i, j) = {m(i, j).real().to_double(), m(i, j).imag().to_double()};
    return out;
}

}  // namespace lielap
