#pragma once

#include "brauer/arith.hpp"

#include <string>
#include <vector>

namespace brauer {

using Partition = std::vector<int>;  // weakly decreasing, no trailing zeros

int size(const Partition& p);
Partition conjugate(const Partition& p);
bool dominates(const Partition& a, const Partition& b);      // a ⊵ b
bool col_dominates(const Partition& a, const Partition& b);  // a' ⊵ b'
std::vector<Partition> partitions_of(int n);                 // reverse lexicographic
std::string partition_str(const Partition& p);

// Graph flavor: the Young graph (add boxes only) or the Brauer graph.
enum class Graph { Young, Brauer };

struct Vertex {
    Partition lam;
    int l = 0;

    int level() const { return size(lam) + 2 * l; }
    bool operator==(const Vertex& o) const { return l == o.l && lam == o.lam; }
    bool operator!=(const Vertex& o) const { return !(*this == o); }
    std::string str() const;
};

// fixed total order: l first, then λ reverse-lexicographically
bool vertex_less(const Vertex& a, const Vertex& b);

// (λ,l) ⊵ (μ,m): l > m, or l = m and λ ⊵ μ (column dominance for the dual flavor)
bool vertex_dominates(const Vertex& a, const Vertex& b, bool dual);

using Path = std::vector<Vertex>;  // v(0) = (∅,0), ..., v(r)

std::vector<Vertex> successors(const Vertex& v, Graph g);
std::vector<Vertex> vertices_at_level(int k, Graph g);  // in vertex_less order
std::vector<Path> enumerate_paths(const Vertex& target, Graph g);

bool path_dominates(const Path& s, const Path& t, bool dual);  // s(j) ⊵ t(j) for all j
// s ≻ t: at the last index where they differ, s(j) ▷ t(j)
bool path_revlex_greater(const Path& s, const Path& t, bool dual);

bool permissible_symplectic(const Vertex& v, int N);
bool permissible_orthogonal(const Vertex& v, int N);
bool permissible(const Vertex& v, int N, bool orthogonal);
bool path_permissible(const Path& t, int N, bool orthogonal);
int first_nonpermissible(const Path& t, int N, bool orthogonal);  // -1 if none

// Content of the edge u -> v: c(a) when a box is added, 1 - δ - c(a) when removed.
PolyZ edge_content(const Vertex& u, const Vertex& v);
std::vector<PolyZ> sn_contents(const Path& t);
bool separation_check(int level, Graph g = Graph::Brauer);

// Sibling edges out of a common vertex whose contents collide after δ -> d0.
struct ContentCollision {
    Path prefix;
    Vertex a, b;
    std::string content;
};
std::vector<ContentCollision> residue_collisions(int level, long d0, int N, bool orthogonal);

}  // namespace brauer
