#pragma once

#include "brauer/certificate.hpp"
#include "brauer/murphy.hpp"
#include "brauer/tensor.hpp"

#include <memory>
#include <vector>

namespace brauer {

// symplectic: Murphy basis of B_r; orthogonal: dual Murphy basis of B_r;
// symmetric: dual Murphy basis of Z S_r
BasisKind flavor_kind(Flavor f);
bool flavor_permissible(const Vertex& v, Flavor f, int N);
bool flavor_path_permissible(const Path& t, Flavor f, int N);
// index of the first non-permissible vertex on t, -1 if none
int flavor_first_bad(const Path& t, Flavor f, int N);

// A kernel element attached to a marginal vertex (mu, m) at level k, with its
// splitting full = cell generator + prime and the factorization
// full = cell generator * (1 + beta_prime).
struct KernelGenerator {
    Vertex vertex;
    int level = 0;
    Elem full;
    Elem prime;
    Element<Rat> beta_prime;  // in B_k, rational coefficients
};

// the unsigned sum of all diagrams on r strands
Elem diagram_sum(int r);
// the signed sum of (a,b)-walled diagrams
Elem walled_sum(int a, int b);
// Σ over orbit representatives x of `terms` under left multiplication by the
// Young subgroup `blocks`: coeff(x) x / |Stab x|
Element<Rat> orbit_quotient(const Elem& terms, const Partition& blocks, bool signed_group);

// kernel generator of a marginal vertex; throws if the vertex is not marginal
KernelGenerator kernel_generator(const Vertex& v, Flavor f, int N);
bool is_marginal(const Vertex& v, Flavor f, int N);
// the generating set of the kernel ideal, embedded in B_r (empty if r is too small)
std::vector<Element<Int>> ideal_generators(Flavor f, int N, int r);

struct SplitEntry {
    int vertex, s, t;
    bool kernel;
};

// The basis ñ adapted to the kernel of the tensor representation, over Z at
// δ = δ_0 of the flavor. Entries follow the order of the Murphy basis.
class SplitBasis {
public:
    SplitBasis(Flavor f, int N, int r, int jobs = 1);

    Flavor flavor() const { return flavor_; }
    int N() const { return N_; }
    int r() const { return r_; }
    long d0() const { return d0_; }
    const MurphyBasis& murphy() const { return *basis_; }
    const SpecializedBasis& specialized() const { return *spec_; }

    std::size_t size() const { return entries_.size(); }
    const SplitEntry& entry(std::size_t i) const { return entries_[i]; }
    const Element<Int>& element(std::size_t i) const { return elems_[i]; }
    bool path_permissible(int vi, int t) const { return perm_[vi][t]; }
    std::size_t permissible_count(int vi) const;
    // a_t for a path; d_t on permissible paths
    const Element<Rat>& correction(int vi, int t) const { return a_[vi][t]; }
    // m_λ a_t, integral
    const Element<Int>& row_generator(int vi, int t) const { return x_[vi][t]; }
    const std::vector<KernelGenerator>& marginal() const { return marginal_; }

private:
    Flavor flavor_;
    int N_, r_;
    long d0_;
    std::unique_ptr<MurphyBasis> basis_;
    std::unique_ptr<SpecializedBasis> spec_;
    std::vector<std::vector<bool>> perm_;
    std::vector<std::vector<Element<Rat>>> a_;
    std::vector<std::vector<Element<Int>>> x_;
    std::vector<SplitEntry> entries_;
    std::vector<Element<Int>> elems_;
    std::vector<KernelGenerator> marginal_;
};

struct CertifyOptions {
    long p = 0;  // 0 for Q
    std::size_t max_tensor_dim = 65536;
    int ideal_max_r = 4;
    int seminormal_max_r = 4;
    int jobs = 1;
};

// Full certificate: splitting identities, integrality, triangularity, image
// and kernel ranks, ideal generation, quotient cell modules. Throws
// CapExceeded when the tensor space is over the cap.
Certificate certify_sft(Flavor f, int N, int r, const CertifyOptions& opt = {});

// the span of D1 g D2 over diagrams D1, D2 and generators g, computed at δ = d0
std::size_t ideal_rank(const std::vector<Element<Int>>& gens, int r, long d0, std::size_t stop_at = SIZE_MAX,
                       bool perms_only = false);

struct DimsRow {
    int r;
    long algebra_dim;
    long permissible_sum;        // Σ (#Std_perm)^2
    long image_rank = -1;        // -1 when not computed
    std::vector<std::pair<Vertex, long>> permissible_paths;
};
// dimension table; image ranks only where the tensor space and r allow
std::vector<DimsRow> dims_table(Flavor f, int N, int max_r, int rank_max_r, std::size_t max_tensor_dim, long p = 0,
                                int jobs = 1);

}  // namespace brauer
