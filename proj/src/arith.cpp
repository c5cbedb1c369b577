#include "brauer/arith.hpp"

#include <sstream>

namespace brauer {

namespace {

template <class T>
std::string coeff_str(const T& c) { return c.get_str(); }

}  // namespace

template <class T>
std::string Poly<T>::str() const
{
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        auto [e, c] = *it;
        T a = abs(c);
        bool neg = c < 0;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        if (e == 0) {
            os << coeff_str(a);
            continue;
        }
        if (a != 1) os << coeff_str(a) << "*";
        os << "d";
        if (e > 1) os << "^" << e;
    }
    return os.str();
}

template class Poly<Int>;
template class Poly<Rat>;

PolyQ to_polyq(const PolyZ& p)
{
    PolyQ q;
    for (auto& [e, c] : p.terms()) q += PolyQ::monomial(Rat(c), e);
    return q;
}

static PolyQ make_monic(const PolyQ& p)
{
    if (p.is_zero()) return p;
    Rat lc = p.lead();
    return p.scaled(Rat(1) / lc);
}

PolyQ poly_gcd(PolyQ a, PolyQ b)
{
    while (!b.is_zero()) {
        PolyQ r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

RatFunc::RatFunc(PolyQ num, PolyQ den) : num_(std::move(num)), den_(std::move(den))
{
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = PolyQ(1);
        return;
    }
    PolyQ g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divmod(g).first;
        den_ = den_.divmod(g).first;
    }
    Rat lc = den_.lead();
    if (lc != 1) {
        Rat inv = Rat(1) / lc;
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

RatFunc operator+(const RatFunc& a, const RatFunc& b)
{
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b)
{
    if (a.is_zero() || b.is_zero()) return RatFunc();
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b)
{
    if (b.is_zero()) throw std::domain_error("division by zero in Q(d)");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

std::optional<Rat> RatFunc::eval(const Rat& d0) const
{
    Rat dv = den_.eval(d0);
    if (dv == 0) return std::nullopt;
    return Rat(num_.eval(d0) / dv);
}

std::string RatFunc::str() const
{
    if (den_ == PolyQ(1)) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

Fp Fp::inverse() const
{
    if (!p) {
        if (v == 1 || v == -1) return *this;
        throw std::domain_error("inverse of unbound integer");
    }
    std::int64_t a = norm(v, p), m = p, x0 = 1, x1 = 0;
    if (a == 0) throw std::domain_error("inverse of zero mod p");
    while (m) {
        std::int64_t q = a / m;
        std::int64_t t = a - q * m;
        a = m, m = t;
        t = x0 - q * x1;
        x0 = x1, x1 = t;
    }
    if (a != 1) throw std::domain_error("modulus is not prime");
    return Fp(x0, p);
}

Int div_exact(const Int& a, const Int& b)
{
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

PolyZ div_exact(const PolyZ& a, const PolyZ& b)
{
    auto [q, r] = a.divmod(b);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
}

PolyQ div_exact(const PolyQ& a, const PolyQ& b)
{
    auto [q, r] = a.divmod(b);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
}

std::string to_string(const Int& x) { return x.get_str(); }
std::string to_string(const Rat& x) { return x.get_str(); }
std::string to_string(const Fp& x) { return std::to_string(Fp::norm(x.v, x.p)); }

Int poly_eval(const PolyZ& p, const Int& d0) { return p.eval(d0); }

std::optional<Rat> ratfunc_eval(const RatFunc& f, const Rat& d0) { return f.eval(d0); }

}  // namespace brauer
