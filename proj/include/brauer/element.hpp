#pragma once

#include "brauer/arith.hpp"
#include "brauer/diagram.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace brauer {

// Finite formal sum of diagrams of B_r. Terms are sorted by diagram code and
// carry no zero coefficient.
template <class C>
class Element {
public:
    using Term = std::pair<std::uint64_t, C>;

    Element() = default;
    explicit Element(int r) : r_(r) {}
    Element(const Diagram& d, C c = C(1)) : r_(d.r())
    {
        if (!brauer::is_zero(c)) t_.emplace_back(d.code(), std::move(c));
    }
    static Element one(int r) { return Element(Diagram(r)); }

    int r() const { return r_; }
    const std::vector<Term>& terms() const { return t_; }
    std::size_t size() const { return t_.size(); }
    bool is_zero() const { return t_.empty(); }
    Diagram diagram(std::size_t k) const { return Diagram::from_code(r_, t_[k].first); }

    C coeff(const Diagram& d) const
    {
        auto it = std::lower_bound(t_.begin(), t_.end(), d.code(), [](const Term& t, std::uint64_t c) { return t.first < c; });
        if (it != t_.end() && it->first == d.code()) return it->second;
        return C(0);
    }

    bool operator==(const Element& o) const { return (t_.empty() && o.t_.empty()) || (r_ == o.r_ && t_ == o.t_); }
    bool operator!=(const Element& o) const { return !(*this == o); }

    Element operator-() const
    {
        Element e = *this;
        for (auto& t : e.t_) t.second = -t.second;
        return e;
    }
    friend Element operator+(const Element& a, const Element& b) { return combine(a, b, false); }
    friend Element operator-(const Element& a, const Element& b) { return combine(a, b, true); }
    Element& operator+=(const Element& o) { return *this = *this + o; }
    Element& operator-=(const Element& o) { return *this = *this - o; }

    Element scaled(const C& c) const
    {
        Element e(r_);
        for (auto& [k, v] : t_) {
            C x = v * c;
            if (!brauer::is_zero(x)) e.t_.emplace_back(k, std::move(x));
        }
        return e;
    }

    Element star() const
    {
        std::unordered_map<std::uint64_t, C> acc;
        for (auto& [k, v] : t_) acc[Diagram::from_code(r_, k).star().code()] = v;
        return from_map(r_, std::move(acc));
    }

    Element embed(int r_new) const
    {
        std::unordered_map<std::uint64_t, C> acc;
        for (auto& [k, v] : t_) acc[Diagram::from_code(r_, k).embed(r_new).code()] = v;
        return from_map(r_new, std::move(acc));
    }

    // Restrict to diagrams satisfying a predicate.
    Element filter(const std::function<bool(const Diagram&)>& keep) const
    {
        Element e(r_);
        for (auto& t : t_)
            if (keep(Diagram::from_code(r_, t.first))) e.t_.push_back(t);
        return e;
    }

    template <class D, class F>
    Element<D> map_coeffs(F f) const
    {
        std::unordered_map<std::uint64_t, D> acc;
        for (auto& [k, v] : t_) acc.emplace(k, f(v));
        return Element<D>::from_map(r_, std::move(acc));
    }

    static Element from_map(int r, std::unordered_map<std::uint64_t, C> acc)
    {
        Element e(r);
        e.t_.reserve(acc.size());
        for (auto& [k, v] : acc)
            if (!brauer::is_zero(v)) e.t_.emplace_back(k, std::move(v));
        std::sort(e.t_.begin(), e.t_.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
        return e;
    }

    // Terms in the canonical diagram order (for output).
    std::vector<std::pair<Diagram, C>> canonical_terms() const
    {
        std::vector<std::pair<Diagram, C>> out;
        for (auto& [k, v] : t_) out.emplace_back(Diagram::from_code(r_, k), v);
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return diagram_index(a.first) < diagram_index(b.first); });
        return out;
    }

private:
    int r_ = 0;
    std::vector<Term> t_;

    static Element combine(const Element& a, const Element& b, bool sub)
    {
        if (a.t_.empty()) return sub ? -b : b;
        if (b.t_.empty()) return a;
        if (a.r_ != b.r_) throw std::invalid_argument("element strand counts differ");
        Element e(a.r_);
        std::size_t i = 0, j = 0;
        while (i < a.t_.size() || j < b.t_.size()) {
            if (j == b.t_.size() || (i < a.t_.size() && a.t_[i].first < b.t_[j].first)) {
                e.t_.push_back(a.t_[i++]);
            } else if (i == a.t_.size() || b.t_[j].first < a.t_[i].first) {
                e.t_.emplace_back(b.t_[j].first, sub ? C(-b.t_[j].second) : b.t_[j].second);
                ++j;
            } else {
                C v = sub ? C(a.t_[i].second - b.t_[j].second) : C(a.t_[i].second + b.t_[j].second);
                if (!brauer::is_zero(v)) e.t_.emplace_back(a.t_[i].first, std::move(v));
                ++i, ++j;
            }
        }
        return e;
    }
};

// B_r over a coefficient ring with a fixed value of the loop parameter.
template <class C>
class Algebra {
public:
    explicit Algebra(C delta) : delta_(std::move(delta))
    {
        pow_.push_back(C(1));
        for (int k = 1; k <= kMaxStrands; ++k) pow_.push_back(pow_.back() * delta_);
    }
    const C& delta() const { return delta_; }
    const C& delta_pow(int k) const { return pow_.at(k); }

    Element<C> mult(const Element<C>& a, const Element<C>& b) const
    {
        if (a.is_zero() || b.is_zero()) return Element<C>(a.is_zero() ? b.r() : a.r());
        if (a.r() != b.r()) throw std::invalid_argument("element_mult: mismatched strand counts");
        int r = a.r();
        std::unordered_map<std::uint64_t, C> acc;
        acc.reserve(a.size() * b.size());
        for (auto& [ka, ca] : a.terms()) {
            Diagram da = Diagram::from_code(r, ka);
            for (auto& [kb, cb] : b.terms()) {
                auto [d, loops] = diagram_mult(da, Diagram::from_code(r, kb));
                C c = ca * cb;
                if (loops) c = c * pow_[loops];
                auto it = acc.find(d.code());
                if (it == acc.end())
                    acc.emplace(d.code(), std::move(c));
                else
                    it->second += c;
            }
        }
        return Element<C>::from_map(r, std::move(acc));
    }

    // left-to-right product of a list of factors
    Element<C> product(const std::vector<Element<C>>& fs, int r) const
    {
        Element<C> acc = Element<C>::one(r);
        for (auto& f : fs) acc = mult(acc, f);
        return acc;
    }

private:
    C delta_;
    std::vector<C> pow_;
};

inline Algebra<PolyZ> generic_algebra() { return Algebra<PolyZ>(PolyZ::x()); }

inline Element<Int> specialize_element(const Element<PolyZ>& a, long d0)
{
    return a.map_coeffs<Int>([d0](const PolyZ& p) { return specialize(p, d0); });
}

template <class C>
Element<Rat> to_rational(const Element<C>& a)
{
    return a.template map_coeffs<Rat>([](const C& c) { return Rat(c); });
}

inline Element<PolyZ> to_generic(const Element<Int>& a)
{
    return a.map_coeffs<PolyZ>([](const Int& c) { return PolyZ(c); });
}

// Element of Z S_r spanned by permutations
inline Element<PolyZ> perm_element(const std::vector<int>& w, long c = 1)
{
    return Element<PolyZ>(Diagram::from_perm(w), PolyZ(c));
}

}  // namespace brauer
