#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace brauer {

using Int = mpz_class;
using Rat = mpq_class;

// Sparse univariate polynomial in the loop parameter. Terms are kept sorted
// by exponent with no zero coefficient, so equality is structural.
template <class T>
class Poly {
public:
    using Term = std::pair<unsigned, T>;

    Poly() = default;
    Poly(long c) { if (c != 0) t_.emplace_back(0u, T(c)); }
    Poly(const T& c) { if (c != 0) t_.emplace_back(0u, c); }

    static Poly monomial(const T& c, unsigned e)
    {
        Poly p;
        if (c != 0) p.t_.emplace_back(e, c);
        return p;
    }
    static Poly x() { return monomial(T(1), 1); }

    const std::vector<Term>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].first == 0); }
    int degree() const { return t_.empty() ? -1 : int(t_.back().first); }
    T lead() const { return t_.empty() ? T(0) : t_.back().second; }
    T coeff(unsigned e) const
    {
        for (auto& [k, c] : t_)
            if (k == e) return c;
        return T(0);
    }
    T constant() const { return coeff(0); }

    bool operator==(const Poly& o) const { return t_ == o.t_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator-() const
    {
        Poly p = *this;
        for (auto& tm : p.t_) tm.second = -tm.second;
        return p;
    }

    Poly& operator+=(const Poly& o) { *this = combine(*this, o, 1); return *this; }
    Poly& operator-=(const Poly& o) { *this = combine(*this, o, -1); return *this; }
    friend Poly operator+(const Poly& a, const Poly& b) { return combine(a, b, 1); }
    friend Poly operator-(const Poly& a, const Poly& b) { return combine(a, b, -1); }

    friend Poly operator*(const Poly& a, const Poly& b)
    {
        if (a.t_.empty() || b.t_.empty()) return Poly();
        if (a.t_.size() == 1) return b.scaled(a.t_[0].second, a.t_[0].first);
        if (b.t_.size() == 1) return a.scaled(b.t_[0].second, b.t_[0].first);
        std::vector<T> dense(a.degree() + b.degree() + 1);
        for (auto& [ea, ca] : a.t_)
            for (auto& [eb, cb] : b.t_) dense[ea + eb] += ca * cb;
        Poly p;
        for (unsigned e = 0; e < dense.size(); ++e)
            if (dense[e] != 0) p.t_.emplace_back(e, std::move(dense[e]));
        return p;
    }
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }

    // c * delta^shift * this
    Poly scaled(const T& c, unsigned shift = 0) const
    {
        Poly p;
        if (c == 0) return p;
        p.t_.reserve(t_.size());
        for (auto& [e, v] : t_) p.t_.emplace_back(e + shift, v * c);
        return p;
    }

    template <class X>
    X eval(const X& d0) const
    {
        X acc = 0;
        unsigned e = degree() < 0 ? 0 : unsigned(degree());
        std::size_t k = t_.size();
        for (int i = int(e); i >= 0; --i) {
            acc *= d0;
            if (k > 0 && t_[k - 1].first == unsigned(i)) {
                acc += X(t_[k - 1].second);
                --k;
            }
        }
        return acc;
    }

    // Long division; for integer coefficients every step must divide exactly.
    std::pair<Poly, Poly> divmod(const Poly& d) const
    {
        if (d.is_zero()) throw std::domain_error("polynomial division by zero");
        Poly q, r = *this;
        T lc = d.lead();
        int dd = d.degree();
        while (!r.is_zero() && r.degree() >= dd) {
            T c = r.lead();
            T qc = exact_quo(c, lc);
            unsigned sh = unsigned(r.degree() - dd);
            q += monomial(qc, sh);
            r -= d.scaled(qc, sh);
        }
        return {q, r};
    }

    std::string str() const;

private:
    std::vector<Term> t_;

    static T exact_quo(const T& a, const T& b);

    static Poly combine(const Poly& a, const Poly& b, int sign)
    {
        Poly p;
        p.t_.reserve(a.t_.size() + b.t_.size());
        std::size_t i = 0, j = 0;
        while (i < a.t_.size() || j < b.t_.size()) {
            if (j == b.t_.size() || (i < a.t_.size() && a.t_[i].first < b.t_[j].first)) {
                p.t_.push_back(a.t_[i++]);
            } else if (i == a.t_.size() || b.t_[j].first < a.t_[i].first) {
                p.t_.emplace_back(b.t_[j].first, sign > 0 ? T(b.t_[j].second) : T(-b.t_[j].second));
                ++j;
            } else {
                T c = sign > 0 ? T(a.t_[i].second + b.t_[j].second) : T(a.t_[i].second - b.t_[j].second);
                if (c != 0) p.t_.emplace_back(a.t_[i].first, std::move(c));
                ++i, ++j;
            }
        }
        return p;
    }
};

template <>
inline Int Poly<Int>::exact_quo(const Int& a, const Int& b)
{
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
        throw std::domain_error("inexact polynomial division over Z");
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

template <>
inline Rat Poly<Rat>::exact_quo(const Rat& a, const Rat& b) { return a / b; }

using PolyZ = Poly<Int>;
using PolyQ = Poly<Rat>;

PolyQ to_polyq(const PolyZ& p);
PolyQ poly_gcd(PolyQ a, PolyQ b);  // monic, gcd(0,0) = 0

// Element of Q(delta) in lowest terms with monic denominator.
class RatFunc {
public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(long c) : num_(c), den_(1) {}
    RatFunc(const PolyZ& p) : num_(to_polyq(p)), den_(1) {}
    RatFunc(const PolyQ& p) : num_(p), den_(1) {}
    RatFunc(PolyQ num, PolyQ den);

    const PolyQ& num() const { return num_; }
    const PolyQ& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }
    bool operator==(long c) const { return *this == RatFunc(c); }
    bool operator!=(long c) const { return !(*this == c); }

    RatFunc operator-() const { RatFunc f = *this; f.num_ = -f.num_; return f; }
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    // nullopt is the not-evaluable result
    std::optional<Rat> eval(const Rat& d0) const;
    std::string str() const;

private:
    PolyQ num_, den_;
};

// Integers mod p. p == 0 marks a plain integer constant not yet bound to a
// modulus; it adopts the modulus of whatever it is combined with.
struct Fp {
    std::int64_t v = 0;
    std::int64_t p = 0;

    Fp() = default;
    Fp(long c) : v(c), p(0) {}
    Fp(long c, std::int64_t mod) : v(norm(c, mod)), p(mod) {}

    static std::int64_t norm(std::int64_t c, std::int64_t mod)
    {
        if (mod == 0) return c;
        c %= mod;
        return c < 0 ? c + mod : c;
    }
    static std::int64_t pick(const Fp& a, const Fp& b)
    {
        if (a.p && b.p && a.p != b.p) throw std::invalid_argument("mixed moduli");
        return a.p ? a.p : b.p;
    }
    bool is_zero() const { return p ? v == 0 : v == 0; }
    friend bool operator==(const Fp& a, const Fp& b)
    {
        std::int64_t m = pick(a, b);
        return norm(a.v, m) == norm(b.v, m);
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }
    friend Fp operator+(const Fp& a, const Fp& b) { std::int64_t m = pick(a, b); return Fp(norm(a.v, m) + norm(b.v, m), m); }
    friend Fp operator-(const Fp& a, const Fp& b) { std::int64_t m = pick(a, b); return Fp(norm(a.v, m) - norm(b.v, m), m); }
    friend Fp operator*(const Fp& a, const Fp& b)
    {
        std::int64_t m = pick(a, b);
        if (!m) return Fp(a.v * b.v);
        return Fp(std::int64_t((__int128)norm(a.v, m) * norm(b.v, m) % m), m);
    }
    Fp operator-() const { return Fp(-v, p); }
    Fp inverse() const;
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }
};

// Uniform helpers used by the generic matrix and algebra code.
template <class T> struct is_field : std::false_type {};
template <> struct is_field<Rat> : std::true_type {};
template <> struct is_field<RatFunc> : std::true_type {};
template <> struct is_field<Fp> : std::true_type {};

inline bool is_zero(const Int& x) { return sgn(x) == 0; }
inline bool is_zero(const Rat& x) { return sgn(x) == 0; }
inline bool is_zero(const Fp& x) { return x.is_zero(); }
template <class T> bool is_zero(const Poly<T>& x) { return x.is_zero(); }
inline bool is_zero(const RatFunc& x) { return x.is_zero(); }

// Units usable as pivots without leaving the ring.
inline bool is_unit(const Int& x) { return x == 1 || x == -1; }
inline bool is_unit(const PolyZ& x) { return x.is_constant() && is_unit(x.constant()); }
inline bool is_unit(const Rat& x) { return !is_zero(x); }
inline bool is_unit(const PolyQ& x) { return x.is_constant() && !x.is_zero(); }
inline bool is_unit(const Fp& x) { return !x.is_zero(); }
inline bool is_unit(const RatFunc& x) { return !x.is_zero(); }

Int div_exact(const Int& a, const Int& b);
inline Rat div_exact(const Rat& a, const Rat& b) { return a / b; }
inline Fp div_exact(const Fp& a, const Fp& b) { return a / b; }
PolyZ div_exact(const PolyZ& a, const PolyZ& b);
PolyQ div_exact(const PolyQ& a, const PolyQ& b);
inline RatFunc div_exact(const RatFunc& a, const RatFunc& b) { return a / b; }

std::string to_string(const Int& x);
std::string to_string(const Rat& x);
std::string to_string(const Fp& x);
inline std::string to_string(const PolyZ& x) { return x.str(); }
inline std::string to_string(const PolyQ& x) { return x.str(); }
inline std::string to_string(const RatFunc& x) { return x.str(); }

Int poly_eval(const PolyZ& p, const Int& d0);
std::optional<Rat> ratfunc_eval(const RatFunc& f, const Rat& d0);

// Specialization helpers.
inline Int specialize(const PolyZ& p, long d0) { return poly_eval(p, Int(d0)); }

}  // namespace brauer
