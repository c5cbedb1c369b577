#include "brauer/diagram.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace brauer {

namespace {

std::uint64_t pack(int r, const std::uint8_t* p)
{
    std::uint64_t c = 0;
    for (int v = 0; v < 2 * r; ++v) c |= std::uint64_t(p[v]) << (4 * v);
    return c;
}

void check_r(int r)
{
    if (r < 0 || r > kMaxStrands) throw std::out_of_range("strand count out of range");
}

struct UnionFind {
    std::array<std::uint8_t, 3 * kMaxStrands> up;
    explicit UnionFind(int n) { for (int i = 0; i < n; ++i) up[i] = std::uint8_t(i); }
    int find(int x)
    {
        while (up[x] != x) {
            up[x] = up[up[x]];
            x = up[x];
        }
        return x;
    }
    void unite(int a, int b) { up[find(a)] = std::uint8_t(find(b)); }
};

}  // namespace

Diagram::Diagram(int r) : r_(r)
{
    check_r(r);
    std::array<std::uint8_t, 2 * kMaxStrands> p{};
    for (int i = 0; i < r; ++i) p[i] = std::uint8_t(i + r), p[i + r] = std::uint8_t(i);
    code_ = pack(r, p.data());
}

Diagram Diagram::from_partners(int r, const std::array<std::uint8_t, 2 * kMaxStrands>& p)
{
    check_r(r);
    for (int v = 0; v < 2 * r; ++v)
        if (p[v] >= 2 * r || p[v] == v || p[p[v]] != v) throw std::invalid_argument("not a perfect matching");
    Diagram d;
    d.r_ = r;
    d.code_ = pack(r, p.data());
    return d;
}

Diagram Diagram::from_pairs(int r, const std::vector<std::pair<int, int>>& pairs)
{
    check_r(r);
    if (int(pairs.size()) != r) throw std::invalid_argument("wrong number of strands");
    std::array<std::uint8_t, 2 * kMaxStrands> p{};
    std::vector<bool> seen(2 * r, false);
    for (auto [i, j] : pairs) {
        if (i < 1 || j < 1 || i > 2 * r || j > 2 * r || i == j || seen[i - 1] || seen[j - 1])
            throw std::invalid_argument("not a perfect matching");
        seen[i - 1] = seen[j - 1] = true;
        p[i - 1] = std::uint8_t(j - 1), p[j - 1] = std::uint8_t(i - 1);
    }
    return from_partners(r, p);
}

Diagram Diagram::from_code(int r, std::uint64_t code)
{
    Diagram d;
    d.r_ = r;
    d.code_ = code;
    return d;
}

Diagram Diagram::from_perm(const std::vector<int>& w)
{
    int r = int(w.size());
    check_r(r);
    std::array<std::uint8_t, 2 * kMaxStrands> p{};
    std::vector<bool> seen(r, false);
    for (int i = 0; i < r; ++i) {
        if (w[i] < 0 || w[i] >= r || seen[w[i]]) throw std::invalid_argument("not a permutation");
        seen[w[i]] = true;
        p[i] = std::uint8_t(r + w[i]), p[r + w[i]] = std::uint8_t(i);
    }
    Diagram d;
    d.r_ = r;
    d.code_ = pack(r, p.data());
    return d;
}

Diagram Diagram::s(int r, int i)
{
    if (i < 1 || i >= r) throw std::out_of_range("generator index");
    std::vector<int> w(r);
    std::iota(w.begin(), w.end(), 0);
    std::swap(w[i - 1], w[i]);
    return from_perm(w);
}

Diagram Diagram::e(int r, int i)
{
    if (i < 1 || i >= r || r > kMaxStrands) throw std::out_of_range("generator index");
    std::array<std::uint8_t, 2 * kMaxStrands> p{};
    for (int k = 0; k < r; ++k) p[k] = std::uint8_t(k + r), p[k + r] = std::uint8_t(k);
    p[i - 1] = std::uint8_t(i), p[i] = std::uint8_t(i - 1);
    p[r + i - 1] = std::uint8_t(r + i), p[r + i] = std::uint8_t(r + i - 1);
    return from_partners(r, p);
}

std::vector<std::pair<int, int>> Diagram::pairs() const
{
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < 2 * r_; ++v) {
        int w = partner(v);
        if (v < w) out.emplace_back(v + 1, w + 1);
    }
    return out;
}

Diagram Diagram::star() const
{
    std::array<std::uint8_t, 2 * kMaxStrands> p{};
    auto flip = [&](int v) { return v < r_ ? v + r_ : v - r_; };
    for (int v = 0; v < 2 * r_; ++v) p[flip(v)] = std::uint8_t(flip(partner(v)));
    Diagram d;
    d.r_ = r_;
    d.code_ = pack(r_, p.data());
    return d;
}

Diagram Diagram::embed(int r_new) const
{
    if (r_new < r_) throw std::invalid_argument("cannot embed into fewer strands");
    check_r(r_new);
    std::array<std::uint8_t, 2 * kMaxStrands> p{};
    auto relabel = [&](int v) { return v < r_ ? v : v - r_ + r_new; };
    for (int v = 0; v < 2 * r_; ++v) p[relabel(v)] = std::uint8_t(relabel(partner(v)));
    for (int k = r_; k < r_new; ++k) p[k] = std::uint8_t(k + r_new), p[k + r_new] = std::uint8_t(k);
    Diagram d;
    d.r_ = r_new;
    d.code_ = pack(r_new, p.data());
    return d;
}

bool Diagram::is_permutation() const { return rank() == r_; }

std::vector<int> Diagram::to_perm() const
{
    if (!is_permutation()) throw std::invalid_argument("diagram is not a permutation");
    std::vector<int> w(r_);
    for (int i = 0; i < r_; ++i) w[i] = partner(i) - r_;
    return w;
}

int Diagram::rank() const
{
    int n = 0;
    for (int i = 0; i < r_; ++i)
        if (partner(i) >= r_) ++n;
    return n;
}

int Diagram::length() const
{
    // position on the boundary circle: top left to right, then bottom right to left
    auto pos = [&](int v) { return v < r_ ? v : 3 * r_ - 1 - v; };
    std::vector<std::pair<int, int>> chords;
    for (auto [i, j] : pairs()) {
        int a = pos(i - 1), b = pos(j - 1);
        chords.emplace_back(std::min(a, b), std::max(a, b));
    }
    int n = 0;
    for (std::size_t x = 0; x < chords.size(); ++x)
        for (std::size_t y = x + 1; y < chords.size(); ++y) {
            auto [a, b] = chords[x];
            auto [c, d] = chords[y];
            if ((a < c && c < b && b < d) || (c < a && a < d && d < b)) ++n;
        }
    return n;
}

int Diagram::sign() const
{
    // sigma_D sends i to h_i and i+r to k_i for the pairs h_i < k_i sorted by h
    auto ps = pairs();
    std::vector<int> sigma(2 * r_);
    for (int i = 0; i < r_; ++i) {
        sigma[i] = ps[i].first - 1;
        sigma[i + r_] = ps[i].second - 1;
    }
    return perm_sign(sigma);
}

std::string Diagram::str() const
{
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (auto [i, j] : pairs()) {
        os << (first ? "" : ",") << "(" << i << "," << j << ")";
        first = false;
    }
    os << "}";
    return os.str();
}

std::pair<Diagram, int> diagram_mult(const Diagram& a, const Diagram& b)
{
    int r = a.r();
    if (b.r() != r) throw std::invalid_argument("diagram_mult: mismatched strand counts");
    // glued vertex ids: a-top 0..r-1, middle r..2r-1, b-bottom 2r..3r-1
    UnionFind uf(3 * r);
    for (int v = 0; v < 2 * r; ++v) {
        int w = a.partner(v);
        if (v < w) uf.unite(v, w);
        int x = b.partner(v);
        if (v < x) uf.unite(v + r, x + r);
    }
    std::array<int, 3 * kMaxStrands> first;
    first.fill(-1);
    std::array<std::uint8_t, 2 * kMaxStrands> p{};
    auto outer = [&](int id) { return id < r ? id : id - r; };  // id in a-top or b-bottom
    for (int id = 0; id < 3 * r; ++id) {
        if (id >= r && id < 2 * r) continue;
        int root = uf.find(id);
        if (first[root] < 0) {
            first[root] = id;
        } else {
            int u = outer(first[root]), v = outer(id);
            p[u] = std::uint8_t(v), p[v] = std::uint8_t(u);
        }
    }
    int loops = 0;
    for (int id = r; id < 2 * r; ++id) {
        int root = uf.find(id);
        if (first[root] == -1) {
            first[root] = -2;
            ++loops;
        }
    }
    Diagram c = Diagram::from_code(r, pack(r, p.data()));
    return {c, loops};
}

Diagram juxtapose(const Diagram& a, const Diagram& b)
{
    int ra = a.r(), rb = b.r(), r = ra + rb;
    check_r(r);
    std::array<std::uint8_t, 2 * kMaxStrands> p{};
    auto la = [&](int v) { return v < ra ? v : v - ra + r; };
    auto lb = [&](int v) { return v < rb ? v + ra : v - rb + r + ra; };
    for (int v = 0; v < 2 * ra; ++v) p[la(v)] = std::uint8_t(la(a.partner(v)));
    for (int v = 0; v < 2 * rb; ++v) p[lb(v)] = std::uint8_t(lb(b.partner(v)));
    return Diagram::from_partners(r, p);
}

bool canonical_less(const Diagram& a, const Diagram& b)
{
    if (a.r() != b.r()) return a.r() < b.r();
    return a.pairs() < b.pairs();
}

namespace {

void enumerate(int r, std::vector<std::pair<int, int>>& cur, std::vector<bool>& used, std::vector<Diagram>& out)
{
    int v = 0;
    while (v < 2 * r && used[v]) ++v;
    if (v == 2 * r) {
        out.push_back(Diagram::from_pairs(r, cur));
        return;
    }
    used[v] = true;
    for (int w = v + 1; w < 2 * r; ++w) {
        if (used[w]) continue;
        used[w] = true;
        cur.emplace_back(v + 1, w + 1);
        enumerate(r, cur, used, out);
        cur.pop_back();
        used[w] = false;
    }
    used[v] = false;
}

struct DiagramTables {
    std::vector<Diagram> list;
    std::unordered_map<std::uint64_t, int> index;
};

DiagramTables& tables(int r)
{
    static std::array<DiagramTables, kMaxStrands + 1> t;
    static std::array<std::once_flag, kMaxStrands + 1> once;
    check_r(r);
    std::call_once(once[r], [r] {
        std::vector<std::pair<int, int>> cur;
        std::vector<bool> used(2 * r, false);
        // pairs are generated with increasing first coordinate and, at each
        // position, increasing partner: this is the canonical lexicographic order
        enumerate(r, cur, used, t[r].list);
        for (int k = 0; k < int(t[r].list.size()); ++k) t[r].index.emplace(t[r].list[k].code(), k);
    });
    return t[r];
}

}  // namespace

const std::vector<Diagram>& all_diagrams(int r) { return tables(r).list; }

int diagram_index(const Diagram& d)
{
    auto& t = tables(d.r());
    auto it = t.index.find(d.code());
    if (it == t.index.end()) throw std::logic_error("unknown diagram");
    return it->second;
}

WallInfo walled_filter(int r1, int r2, const Diagram& d)
{
    int r = d.r();
    if (r1 < 0 || r2 < 0 || r1 + r2 != r) throw std::invalid_argument("wall does not split the strands");
    auto left = [&](int v) { return (v < r ? v : v - r) < r1; };
    for (int v = 0; v < 2 * r; ++v) {
        int w = d.partner(v);
        bool vertical = (v < r) != (w < r);
        if (vertical && left(v) != left(w)) return {};
        if (!vertical && left(v) == left(w)) return {};
    }
    // exchange top and bottom vertices right of the wall
    auto swap_right = [&](int v) {
        if (left(v)) return v;
        return v < r ? v + r : v - r;
    };
    std::array<std::uint8_t, 2 * kMaxStrands> p{};
    for (int v = 0; v < 2 * r; ++v) p[swap_right(v)] = std::uint8_t(swap_right(d.partner(v)));
    Diagram q = Diagram::from_partners(r, p);
    return {true, perm_sign(q.to_perm())};
}

int perm_sign(const std::vector<int>& w)
{
    int n = int(w.size()), s = 1;
    std::vector<bool> seen(n, false);
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = w[j]) seen[j] = true, ++len;
        if (len % 2 == 0) s = -s;
    }
    return s;
}

std::vector<int> perm_compose(const std::vector<int>& p, const std::vector<int>& q)
{
    std::vector<int> out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[i] = q[p[i]];
    return out;
}

std::vector<int> perm_inverse(const std::vector<int>& p)
{
    std::vector<int> out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[p[i]] = int(i);
    return out;
}

std::vector<std::vector<int>> all_perms(int n)
{
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 0);
    std::vector<std::vector<int>> out;
    do out.push_back(w);
    while (std::next_permutation(w.begin(), w.end()));
    return out;
}

long double_factorial_odd(int r)
{
    long x = 1;
    for (int k = 1; k <= 2 * r - 1; k += 2) x *= k;
    return x;
}

}  // namespace brauer
