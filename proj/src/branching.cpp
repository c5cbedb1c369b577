#include "brauer/branching.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace brauer {

int size(const Partition& p)
{
    int n = 0;
    for (int x : p) n += x;
    return n;
}

Partition conjugate(const Partition& p)
{
    Partition c;
    if (p.empty()) return c;
    for (int j = 0; j < p[0]; ++j) {
        int n = 0;
        while (n < int(p.size()) && p[n] > j) ++n;
        c.push_back(n);
    }
    return c;
}

bool dominates(const Partition& a, const Partition& b)
{
    if (size(a) != size(b)) throw std::invalid_argument("dominance of partitions of different sizes");
    int sa = 0, sb = 0;
    std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        sa += i < a.size() ? a[i] : 0;
        sb += i < b.size() ? b[i] : 0;
        if (sa < sb) return false;
    }
    return true;
}

bool col_dominates(const Partition& a, const Partition& b) { return dominates(conjugate(a), conjugate(b)); }

static void gen_partitions(int n, int maxpart, Partition& cur, std::vector<Partition>& out)
{
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int k = std::min(n, maxpart); k >= 1; --k) {
        cur.push_back(k);
        gen_partitions(n - k, k, cur, out);
        cur.pop_back();
    }
}

std::vector<Partition> partitions_of(int n)
{
    std::vector<Partition> out;
    Partition cur;
    gen_partitions(n, n, cur, out);
    return out;
}

std::string partition_str(const Partition& p)
{
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
    os << ")";
    return os.str();
}

std::string Vertex::str() const { return "(" + partition_str(lam) + "," + std::to_string(l) + ")"; }

bool vertex_less(const Vertex& a, const Vertex& b)
{
    if (a.l != b.l) return a.l < b.l;
    return a.lam > b.lam;  // lexicographically larger partitions first
}

bool vertex_dominates(const Vertex& a, const Vertex& b, bool dual)
{
    if (a.l != b.l) return a.l > b.l;
    if (size(a.lam) != size(b.lam)) return false;
    return dual ? col_dominates(a.lam, b.lam) : dominates(a.lam, b.lam);
}

std::vector<Vertex> successors(const Vertex& v, Graph g)
{
    std::vector<Vertex> out;
    const Partition& p = v.lam;
    for (std::size_t i = 0; i <= p.size(); ++i) {
        int cur = i < p.size() ? p[i] : 0;
        if (i == 0 || p[i - 1] > cur) {
            Partition q = p;
            if (i < q.size())
                ++q[i];
            else
                q.push_back(1);
            out.push_back({q, v.l});
        }
    }
    if (g == Graph::Brauer) {
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (i + 1 == p.size() || p[i + 1] < p[i]) {
                Partition q = p;
                if (--q[i] == 0) q.pop_back();
                out.push_back({q, v.l + 1});
            }
        }
    }
    std::sort(out.begin(), out.end(), vertex_less);
    return out;
}

std::vector<Vertex> vertices_at_level(int k, Graph g)
{
    std::vector<Vertex> out;
    int lmax = g == Graph::Brauer ? k / 2 : 0;
    for (int l = 0; l <= lmax; ++l)
        for (auto& p : partitions_of(k - 2 * l)) out.push_back({p, l});
    std::sort(out.begin(), out.end(), vertex_less);
    return out;
}

namespace {

bool path_less(const Path& a, const Path& b)
{
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
        if (vertex_less(a[i], b[i])) return true;
        if (vertex_less(b[i], a[i])) return false;
    }
    return a.size() < b.size();
}

}  // namespace

std::vector<Path> enumerate_paths(const Vertex& target, Graph g)
{
    int r = target.level();
    // extend all paths level by level, keeping only those that can still reach
    // the target: a vertex (μ,m) at level k reaches (λ,l) at level r iff the
    // Young-diagram distance fits in r-k steps with matching parity
    auto can_reach = [&](const Vertex& v, int k) {
        int steps = r - k;
        if (g == Graph::Young) {
            if (v.lam.size() > target.lam.size()) return false;
            for (std::size_t i = 0; i < v.lam.size(); ++i)
                if (v.lam[i] > target.lam[i]) return false;
            return true;
        }
        int common = 0;
        for (std::size_t i = 0; i < std::min(v.lam.size(), target.lam.size()); ++i)
            common += std::min(v.lam[i], target.lam[i]);
        int dist = size(v.lam) + size(target.lam) - 2 * common;
        return dist <= steps && (steps - dist) % 2 == 0 && v.l <= target.l;
    };
    std::vector<Path> cur{{Vertex{{}, 0}}};
    for (int k = 0; k < r; ++k) {
        std::vector<Path> next;
        for (auto& p : cur)
            for (auto& w : successors(p.back(), g)) {
                if (!can_reach(w, k + 1)) continue;
                Path q = p;
                q.push_back(w);
                next.push_back(std::move(q));
            }
        cur = std::move(next);
    }
    std::vector<Path> out;
    for (auto& p : cur)
        if (p.back() == target) out.push_back(std::move(p));
    std::sort(out.begin(), out.end(), path_less);
    return out;
}

bool path_dominates(const Path& s, const Path& t, bool dual)
{
    for (std::size_t j = 0; j < s.size(); ++j)
        if (!vertex_dominates(s[j], t[j], dual)) return false;
    return true;
}

bool path_revlex_greater(const Path& s, const Path& t, bool dual)
{
    for (std::size_t j = s.size(); j-- > 0;)
        if (s[j] != t[j]) return vertex_dominates(s[j], t[j], dual);
    return false;
}

bool permissible_symplectic(const Vertex& v, int N) { return v.lam.empty() || v.lam[0] <= N; }

bool permissible_orthogonal(const Vertex& v, int N)
{
    Partition c = conjugate(v.lam);
    int a = c.size() > 0 ? c[0] : 0, b = c.size() > 1 ? c[1] : 0;
    return a + b <= N;
}

bool permissible(const Vertex& v, int N, bool orthogonal)
{
    return orthogonal ? permissible_orthogonal(v, N) : permissible_symplectic(v, N);
}

bool path_permissible(const Path& t, int N, bool orthogonal) { return first_nonpermissible(t, N, orthogonal) < 0; }

int first_nonpermissible(const Path& t, int N, bool orthogonal)
{
    for (std::size_t k = 0; k < t.size(); ++k)
        if (!permissible(t[k], N, orthogonal)) return int(k);
    return -1;
}

PolyZ edge_content(const Vertex& u, const Vertex& v)
{
    const Partition& a = u.lam;
    const Partition& b = v.lam;
    // locate the row where the partitions differ
    std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        int x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
        if (x == y) continue;
        if (y == x + 1 && v.l == u.l) return PolyZ(long(x) - long(i));  // added box at (i, x), col - row
        if (x == y + 1 && v.l == u.l + 1) return PolyZ(1L - (long(y) - long(i))) - PolyZ::x();
        break;
    }
    throw std::invalid_argument("not an edge of the branching graph");
}

std::vector<PolyZ> sn_contents(const Path& t)
{
    std::vector<PolyZ> out;
    for (std::size_t k = 1; k < t.size(); ++k) out.push_back(edge_content(t[k - 1], t[k]));
    return out;
}

bool separation_check(int level, Graph g)
{
    std::set<std::vector<std::pair<unsigned, std::string>>> seen;
    std::size_t count = 0;
    for (auto& v : vertices_at_level(level, g))
        for (auto& p : enumerate_paths(v, g)) {
            std::vector<std::pair<unsigned, std::string>> key;
            unsigned i = 0;
            for (auto& c : sn_contents(p)) key.emplace_back(i++, c.str());
            seen.insert(key);
            ++count;
        }
    return seen.size() == count;
}

std::vector<ContentCollision> residue_collisions(int level, long d0, int N, bool orthogonal)
{
    std::vector<ContentCollision> out;
    for (int k = 0; k < level; ++k)
        for (auto& v : vertices_at_level(k, Graph::Brauer))
            for (auto& pre : enumerate_paths(v, Graph::Brauer)) {
                if (!path_permissible(pre, N, orthogonal)) continue;
                auto succ = successors(v, Graph::Brauer);
                for (std::size_t i = 0; i < succ.size(); ++i)
                    for (std::size_t j = i + 1; j < succ.size(); ++j) {
                        if (!permissible(succ[i], N, orthogonal) && !permissible(succ[j], N, orthogonal)) continue;
                        Int ci = specialize(edge_content(v, succ[i]), d0);
                        Int cj = specialize(edge_content(v, succ[j]), d0);
                        if (ci == cj) out.push_back({pre, succ[i], succ[j], ci.get_str()});
                    }
            }
    return out;
}

}  // namespace brauer
