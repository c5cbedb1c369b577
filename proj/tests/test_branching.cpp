#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "brauer/branching.hpp"
#include "brauer/diagram.hpp"
#include "oracles.hpp"

#include <set>

using namespace brauer;

namespace {

// brute force: all up-down sequences of Young diagrams of length r, filtered by endpoint
void walk(Path& cur, int r, const Vertex& target, Graph g, int& count)
{
    if (int(cur.size()) == r + 1) {
        count += cur.back() == target;
        return;
    }
    const Vertex v = cur.back();
    // add a box in any row, or remove one
    for (std::size_t i = 0; i <= v.lam.size(); ++i) {
        Partition p = v.lam;
        if (i == p.size()) p.push_back(0);
        ++p[i];
        if (i > 0 && p[i] > p[i - 1]) continue;
        cur.push_back({p, v.l});
        walk(cur, r, target, g, count);
        cur.pop_back();
    }
    if (g == Graph::Brauer)
        for (std::size_t i = 0; i < v.lam.size(); ++i) {
            Partition p = v.lam;
            --p[i];
            if (i + 1 < p.size() && p[i + 1] > p[i]) continue;
            if (p[i] == 0) p.pop_back();
            cur.push_back({p, v.l + 1});
            walk(cur, r, target, g, count);
            cur.pop_back();
        }
}

int brute_path_count(const Vertex& target, Graph g)
{
    Path cur{Vertex{{}, 0}};
    int count = 0;
    walk(cur, target.level(), target, g, count);
    return count;
}

long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST_CASE("dominance")
{
    CHECK(dominates({2}, {1, 1}));
    CHECK(col_dominates({1, 1}, {2}));
    CHECK(dominates({3, 1}, {2, 2}));
    CHECK_FALSE(dominates({2, 2}, {3, 1}));
    CHECK_THROWS(dominates({2}, {1}));
}

TEST_CASE("dominance orders are partial orders")
{
    for (int n = 1; n <= 6; ++n) {
        auto ps = partitions_of(n);
        for (auto& a : ps) {
            CHECK(dominates(a, a));
            CHECK(col_dominates(a, a));
            for (auto& b : ps) {
                if (a != b) {
                    CHECK_FALSE((dominates(a, b) && dominates(b, a)));
                    CHECK_FALSE((col_dominates(a, b) && col_dominates(b, a)));
                }
                for (auto& c : ps) {
                    if (dominates(a, b) && dominates(b, c)) CHECK(dominates(a, c));
                    if (col_dominates(a, b) && col_dominates(b, c)) CHECK(col_dominates(a, c));
                }
            }
        }
    }
}

TEST_CASE("conjugation is an involution")
{
    for (int n = 0; n <= 8; ++n)
        for (auto& p : partitions_of(n)) {
            CHECK(conjugate(conjugate(p)) == p);
            CHECK(size(conjugate(p)) == n);
        }
    CHECK(partitions_of(5).size() == 7);
    CHECK(partitions_of(8).size() == 22);
}

TEST_CASE("brauer_edges")
{
    auto s0 = successors({{}, 0}, Graph::Brauer);
    REQUIRE(s0.size() == 1);
    CHECK(s0[0] == Vertex{{1}, 0});

    auto s1 = successors({{1}, 0}, Graph::Brauer);
    std::set<std::string> got, want{"((2),0)", "((1,1),0)", "((),1)"};
    for (auto& v : s1) got.insert(v.str());
    CHECK(got == want);

    auto s2 = successors({{2}, 1}, Graph::Brauer);
    got.clear();
    for (auto& v : s2) got.insert(v.str());
    CHECK(got == std::set<std::string>{"((3),1)", "((2,1),1)", "((1),2)"});
}

TEST_CASE("enumerate_paths")
{
    CHECK(enumerate_paths({{1, 1}, 0}, Graph::Brauer).size() == 1);
    auto p = enumerate_paths({{1}, 1}, Graph::Brauer);
    CHECK(p.size() == 3);
    for (auto& t : p) {
        CHECK(t.size() == 4);
        CHECK(t.front() == Vertex{{}, 0});
        CHECK(t.back() == Vertex{{1}, 1});
    }
    // deterministic: a second call gives the same order
    CHECK(enumerate_paths({{2, 1}, 1}, Graph::Brauer).size() == enumerate_paths({{2, 1}, 1}, Graph::Brauer).size());
    CHECK(enumerate_paths({{2, 1}, 1}, Graph::Brauer) == enumerate_paths({{2, 1}, 1}, Graph::Brauer));
}

TEST_CASE("path counts match brute force and the dimension identities")
{
    for (int r = 1; r <= 5; ++r) {
        long sum = 0;
        for (auto& v : vertices_at_level(r, Graph::Brauer)) {
            long n = long(enumerate_paths(v, Graph::Brauer).size());
            CHECK(n == brute_path_count(v, Graph::Brauer));
            sum += n * n;
        }
        CHECK(sum == oracle::count_matchings(2 * r));
        long ssum = 0;
        for (auto& v : vertices_at_level(r, Graph::Young)) {
            long n = long(enumerate_paths(v, Graph::Young).size());
            CHECK(n == brute_path_count(v, Graph::Young));
            ssum += n * n;
        }
        CHECK(ssum == factorial(r));
    }
}

TEST_CASE("permissibility")
{
    CHECK_FALSE(permissible_symplectic({{2}, 0}, 1));
    CHECK(permissible_symplectic({{1, 1}, 0}, 1));
    CHECK(permissible_orthogonal({{1, 1}, 0}, 2));
    CHECK_FALSE(permissible_orthogonal({{1, 1, 1}, 0}, 2));
    CHECK(permissible_orthogonal({{}, 3}, 1));
}

TEST_CASE("permissible vertices have permissible neighbours")
{
    for (int N = 1; N <= 3; ++N)
        for (bool orth : {false, true})
            for (int k = 1; k <= 6; ++k)
                for (auto& v : vertices_at_level(k, Graph::Brauer)) {
                    if (!permissible(v, N, orth)) continue;
                    bool up = false, down = false;
                    for (auto& w : successors(v, Graph::Brauer)) up |= permissible(w, N, orth);
                    for (auto& u : vertices_at_level(k - 1, Graph::Brauer))
                        for (auto& w : successors(u, Graph::Brauer))
                            if (w == v && permissible(u, N, orth)) down = true;
                    CHECK(up);
                    CHECK(down);
                }
}

TEST_CASE("edge contents")
{
    CHECK(edge_content({{}, 0}, {{1}, 0}) == PolyZ(0));
    CHECK(edge_content({{1}, 0}, {{2}, 0}) == PolyZ(1));
    CHECK(edge_content({{1}, 0}, {{1, 1}, 0}) == PolyZ(-1));
    CHECK(edge_content({{1}, 0}, {{}, 1}) == PolyZ(1) - PolyZ::x());
    CHECK(edge_content({{2, 1}, 0}, {{2}, 1}) == PolyZ(2) - PolyZ::x());  // box (2,1): c = -1
    CHECK_THROWS(edge_content({{1}, 0}, {{3}, 0}));
    auto t = enumerate_paths({{1, 1}, 0}, Graph::Brauer)[0];
    auto c = sn_contents(t);
    REQUIRE(c.size() == 2);
    CHECK(c[0] == PolyZ(0));
    CHECK(c[1] == PolyZ(-1));
}

TEST_CASE("separation of paths by contents")
{
    for (int k = 1; k <= 6; ++k) CHECK(separation_check(k));
}

TEST_CASE("symplectic residues separate siblings")
{
    for (int N = 1; N <= 3; ++N) CHECK(residue_collisions(6, -2 * N, N, false).empty());
}

TEST_CASE("orthogonal even N reports collisions")
{
    bool any = false;
    for (int k = 1; k <= 5; ++k) any |= !residue_collisions(k, 2, 2, true).empty();
    CHECK(any);
    for (int N : {1, 3})
        CHECK(residue_collisions(5, N, N, true).empty());
}
