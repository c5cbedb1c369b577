#pragma once

#include "brauer/element.hpp"
#include "brauer/matrix.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace brauer {

// symplectic: V = k^{2N}, δ = -2N; orthogonal: V = k^N, δ = N;
// symmetric: unsigned place permutations of Z S_r on (k^N)^{⊗r}
enum class Flavor { symplectic, orthogonal, symmetric };

std::string flavor_name(Flavor f);
std::optional<Flavor> parse_flavor(const std::string& s);
long flavor_delta(Flavor f, int N);

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Square sparse integer matrix acting on row vectors from the right.
struct SparseMat {
    using Row = std::vector<std::pair<std::uint32_t, std::int64_t>>;

    std::size_t n = 0;
    std::vector<Row> rows;

    SparseMat() = default;
    explicit SparseMat(std::size_t dim) : n(dim), rows(dim) {}
    static SparseMat identity(std::size_t dim);

    bool operator==(const SparseMat& o) const { return n == o.n && rows == o.rows; }
    bool operator!=(const SparseMat& o) const { return !(*this == o); }
    SparseMat operator*(const SparseMat& o) const;
    SparseMat operator+(const SparseMat& o) const;
    SparseMat scaled(std::int64_t c) const;
    SparseMat transpose() const;
    std::int64_t get(std::size_t i, std::size_t j) const;
    bool is_zero() const;
    std::size_t nnz() const;
};

class TensorRep {
public:
    TensorRep(Flavor f, int N, int r, std::size_t max_dim = 65536);

    Flavor flavor() const { return flavor_; }
    int N() const { return N_; }
    int r() const { return r_; }
    int dim_v() const { return dimv_; }
    std::size_t dim() const { return dim_; }
    long delta() const { return flavor_delta(flavor_, N_); }
    int epsilon() const { return flavor_ == Flavor::symplectic ? -1 : 1; }

    // [v_i, v_j] on basis vectors (0-based)
    int form(int i, int j) const;
    // v_i^* = coeff * v_index
    std::pair<int, int> dual(int i) const;

    std::vector<int> digits(std::size_t x) const;
    std::size_t index(const std::vector<int>& digits) const;

    // E_i and ε S_i on tensor places i, i+1 (1-based)
    const SparseMat& gen_e(int i) const { return e_.at(i - 1); }
    const SparseMat& gen_s(int i) const { return s_.at(i - 1); }

    // Φ(D) as a product of generator matrices along a loop-free word for D
    const SparseMat& diagram(const Diagram& d) const;
    // Φ(D) read off directly from the strands
    SparseMat closed_form(const Diagram& d) const;

    SparseMat element(const Element<Int>& a) const;
    // Φ(a) flattened to one sparse row, keyed by row * dim + col
    SparseVec<Int> image(const Element<Int>& a) const;
    bool in_kernel(const Element<Int>& a) const { return image(a).empty(); }

private:
    Flavor flavor_;
    int N_, r_, dimv_;
    std::size_t dim_;
    std::vector<SparseMat> e_, s_;
    mutable std::mutex mu_;
    mutable std::map<std::uint64_t, std::shared_ptr<const SparseMat>> cache_;
};

// A loop-free word in the generators for every diagram of B_r: entries are
// +i for s_i and -i for e_i, read left to right.
const std::vector<int>& diagram_word(const Diagram& d);

// rank of {Φ(g)} over Q (p = 0) or F_p; stops early once `stop_at` is reached
std::size_t image_rank(const std::vector<Element<Int>>& gens, const TensorRep& rep, long p = 0,
                       std::size_t stop_at = SIZE_MAX, int jobs = 1);

// Σ_D sgn(σ_D) Π_{(i,j)∈D} a_ij over r-strand diagrams, for a 2r x 2r matrix
Int diagram_pfaffian(const std::vector<std::vector<Int>>& a);
// the same with a_ij = <x_i, x_j> for symplectic basis vectors x
Int pfaffian_functional(int r, int N, const std::vector<int>& x);
// Σ over (a,b)-walled D of sgn(D) Π_{(i,j)∈D} w_ij, for a symmetric 2r x 2r matrix
Int walled_minor(int a, int b, const std::vector<std::vector<Int>>& w);

// run f(0..n-1) on up to `jobs` threads
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& f);

}  // namespace brauer
