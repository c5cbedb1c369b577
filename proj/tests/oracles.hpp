#pragma once

// Independent brute-force routines used only by the tests.

#include "brauer/arith.hpp"
#include "brauer/diagram.hpp"

#include <functional>
#include <random>
#include <vector>

namespace oracle {

using brauer::Int;

// Number of perfect matchings of 2r points, by direct recursion on the first point.
inline long count_matchings(int points)
{
    if (points == 0) return 1;
    return (points - 1) * count_matchings(points - 2);
}

// Stack a over b by walking strands one step at a time (no union-find).
inline std::pair<std::vector<std::pair<int, int>>, int> stack(int r, const std::vector<std::pair<int, int>>& a,
                                                               const std::vector<std::pair<int, int>>& b)
{
    // 1-based labels; partner tables
    std::vector<int> pa(2 * r + 1), pb(2 * r + 1);
    for (auto [i, j] : a) pa[i] = j, pa[j] = i;
    for (auto [i, j] : b) pb[i] = j, pb[j] = i;
    // outer points: ("a", top i) and ("b", bottom i); middle point m shared
    std::vector<bool> mid_seen(r + 1, false);
    std::vector<std::pair<int, int>> out;
    std::vector<bool> done(2 * r + 1, false);
    auto walk = [&](bool in_a, int v) -> int {
        // returns the outer label (1..2r in the product) where the strand ends
        while (true) {
            if (in_a) {
                int w = pa[v];
                if (w <= r) return w;  // a-top
                mid_seen[w - r] = true;
                in_a = false;
                v = w - r;  // b-top label
            } else {
                int w = pb[v];
                if (w > r) return w;  // b-bottom
                mid_seen[w] = true;
                in_a = true;
                v = w + r;  // a-bottom label
            }
        }
    };
    for (int i = 1; i <= 2 * r; ++i) {
        if (done[i]) continue;
        int end = i <= r ? walk(true, i) : walk(false, i);
        done[i] = done[end] = true;
        out.emplace_back(std::min(i, end), std::max(i, end));
    }
    int loops = 0;
    for (int m = 1; m <= r; ++m) {
        if (mid_seen[m]) continue;
        ++loops;
        int v = m;  // b-top m
        do {
            mid_seen[v] = true;
            int w = pb[v];  // a closed loop never reaches an outer point
            mid_seen[w] = true;
            v = pa[w + r] - r;
        } while (v != m);
    }
    std::sort(out.begin(), out.end());
    return {out, loops};
}

inline Int cofactor_det(const std::vector<std::vector<Int>>& m)
{
    std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    Int acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<Int>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Int> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(row);
        }
        Int c = m[0][j] * cofactor_det(minor);
        acc += (j % 2 == 0) ? c : Int(-c);
    }
    return acc;
}

// Pfaffian by expansion along the first row.
inline Int recursive_pfaffian(const std::vector<std::vector<Int>>& a)
{
    std::size_t n = a.size();
    if (n == 0) return 1;
    if (n % 2) return 0;
    Int acc = 0;
    for (std::size_t j = 1; j < n; ++j) {
        if (a[0][j] == 0) continue;
        std::vector<std::size_t> keep;
        for (std::size_t k = 1; k < n; ++k)
            if (k != j) keep.push_back(k);
        std::vector<std::vector<Int>> sub(keep.size(), std::vector<Int>(keep.size()));
        for (std::size_t x = 0; x < keep.size(); ++x)
            for (std::size_t y = 0; y < keep.size(); ++y) sub[x][y] = a[keep[x]][keep[y]];
        Int c = a[0][j] * recursive_pfaffian(sub);
        acc += (j % 2 == 1) ? c : Int(-c);
    }
    return acc;
}

inline std::mt19937_64& rng()
{
    static std::mt19937_64 g(20240611);
    return g;
}

inline int rand_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline brauer::Diagram random_diagram(int r)
{
    const auto& all = brauer::all_diagrams(r);
    return all[rand_int(0, int(all.size()) - 1)];
}

}  // namespace oracle
