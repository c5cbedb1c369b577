#pragma once

#include "brauer/branching.hpp"
#include "brauer/element.hpp"
#include "brauer/matrix.hpp"

#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace brauer {

using Elem = Element<PolyZ>;

struct BasisKind {
    bool brauer = true;
    bool dual = false;

    Graph graph() const { return brauer ? Graph::Brauer : Graph::Young; }
    std::string name() const;
};

// --- symmetric group pieces, lifted to permutation diagrams of B_r ---

// s_{x,y} = s_x s_{x+1} ... s_{y-1} (x <= y) or s_{x-1} ... s_y (x > y), 1-based
std::vector<int> cycle_perm(int x, int y, int r);
// Σ over the Young subgroup of the composition `blocks` (consecutive strands from `offset`)
Elem young_sum(const Partition& blocks, int r, bool signed_sum, int offset = 0);
Elem sym_x(const Partition& lam, int r);  // unsigned sum over S_λ
Elem sym_y(const Partition& lam, int r);  // signed sum over S_λ'

// Branching factors for mu -> lam in Z S_n, n = |lam|, as elements of B_r.
// Murphy flavor returns (d, u); dual flavor returns (b, v).
std::pair<Elem, Elem> sym_factors(const Partition& mu, const Partition& lam, bool dual, int r);

// --- Brauer pieces ---

// e_j^{(l)} = e_{j-2l+2} e_{j-2l+4} ... e_j in B_r
Elem e_chain(int j, int l, int r);
// x_{(λ,l)} = x_λ e_{k-1}^{(l)} (or y_λ ...) at level k = |λ| + 2l, as an element of B_r
Elem cell_generator(const Vertex& v, BasisKind kind, int r);
// (d, u) for the edge from -> to, with to at level k+1, as elements of B_r
std::pair<Elem, Elem> edge_factors(const Vertex& from, const Vertex& to, BasisKind kind, int r);

// d_{t(hi-1)->t(hi)} ... d_{t(lo)->t(lo+1)}, as an element of B_r
Elem path_factor(const Path& t, int lo, int hi, BasisKind kind, int r);

// L_i = Σ_{j<i} (s_{ji} - e_{ji}) for Brauer, Σ_{j<i} (j,i) for symmetric
Elem jm_element(int i, int r, bool brauer);

// Exact inverse of the transition matrix on one block of diagrams, by
// Gauss-Jordan with unit pivots only, so it never leaves the coefficient ring.
class BlockInverse {
public:
    // rows[i] = expansion of basis element ids[i] over diagram codes
    BlockInverse(const std::vector<int>& ids, const std::vector<SparseVec<PolyZ>>& rows);

    PolyZ det() const { return det_; }
    // expansion of a diagram in the basis (global basis indices)
    const SparseVec<PolyZ>* diagram_row(std::uint64_t code) const;
    // the coordinate functional of basis element j, over diagram codes
    const SparseVec<PolyZ>* functional(int j) const;

private:
    PolyZ det_;
    std::map<std::uint64_t, SparseVec<PolyZ>> inv_;
    std::map<int, SparseVec<PolyZ>> fun_;
};

class MurphyBasis {
public:
    MurphyBasis(int r, BasisKind kind, int max_r = 6);

    int r() const { return r_; }
    BasisKind kind() const { return kind_; }

    // vertices in a linear extension of ⊵ (or ⊵_col), most dominant first
    const std::vector<Vertex>& vertices() const { return verts_; }
    int vertex_index(const Vertex& v) const;
    const std::vector<Path>& paths(int vi) const { return paths_[vi]; }
    const Elem& generator(int vi) const { return gen_[vi]; }
    const Elem& d(int vi, int t) const { return d_[vi][t]; }

    std::size_t size() const { return elems_.size(); }
    int index(int vi, int s, int t) const { return offset_[vi] + s * int(paths_[vi].size()) + t; }
    struct Entry {
        int vertex, s, t;
    };
    const Entry& entry(int i) const { return entries_[i]; }
    const Elem& element(int i) const { return elems_[i]; }
    const Elem& element(int vi, int s, int t) const { return elems_[index(vi, s, t)]; }

    // transition matrix rows are basis elements, columns the diagram order
    ExactMatrix<PolyZ> transition_matrix() const;
    PolyZ transition_det() const;
    std::vector<int> corank_blocks() const;  // corank of each basis element's support block

    SparseVec<PolyZ> expand(const Elem& a) const;  // over basis indices
    PolyZ coordinate(int i, const Elem& a) const;
    const SparseVec<PolyZ>& functional(int i) const;  // over diagram codes

    // right cell-module action in the Murphy basis, read off through the first path
    std::vector<PolyZ> cell_coords(int vi, const Elem& y, int s = 0) const;
    ExactMatrix<PolyZ> cell_action(int vi, const Elem& a, int s = 0) const;
    ExactMatrix<PolyZ> gram_matrix(int vi) const;
    ExactMatrix<PolyZ> jm_action(int i, int vi) const;

    bool dominates(int vi, int vj) const { return vertex_dominates(verts_[vi], verts_[vj], kind_.dual); }

    const Algebra<PolyZ>& algebra() const { return alg_; }

private:
    int r_;
    BasisKind kind_;
    Algebra<PolyZ> alg_;
    std::vector<Vertex> verts_;
    std::vector<std::vector<Path>> paths_;
    std::vector<Elem> gen_;
    std::vector<std::vector<Elem>> d_;
    std::vector<int> offset_;
    std::vector<Entry> entries_;
    std::vector<Elem> elems_;
    std::map<int, std::unique_ptr<BlockInverse>> blocks_;  // keyed by corank

    const BlockInverse& block_for(std::uint64_t code) const;
};

// Specialization δ -> d0 of the basis and its inverse, for coordinates of
// rational elements in the specialized algebra.
class SpecializedBasis {
public:
    SpecializedBasis(const MurphyBasis& b, long d0);

    const MurphyBasis& basis() const { return b_; }
    long d0() const { return d0_; }
    const Algebra<Rat>& algebra() const { return alg_; }
    const Element<Rat>& element(int i) const { return elems_[i]; }
    Element<Rat> d(int vi, int t) const;

    Rat coordinate(int i, const Element<Rat>& a) const;
    std::vector<Rat> cell_coords(int vi, const Element<Rat>& y, int s = 0) const;

private:
    const MurphyBasis& b_;
    long d0_;
    Algebra<Rat> alg_;
    std::vector<Element<Rat>> elems_;
    mutable std::map<int, SparseVec<Rat>> fun_;
    const SparseVec<Rat>& functional(int i) const;
};

}  // namespace brauer
