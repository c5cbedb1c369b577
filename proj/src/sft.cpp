#include "brauer/sft.hpp"
#include "brauer/seminormal.hpp"

#include <set>
#include <sstream>
#include <unordered_set>

namespace brauer {

BasisKind flavor_kind(Flavor f)
{
    switch (f) {
    case Flavor::symplectic: return {true, false};
    case Flavor::orthogonal: return {true, true};
    case Flavor::symmetric: return {false, true};
    }
    return {};
}

bool flavor_permissible(const Vertex& v, Flavor f, int N)
{
    switch (f) {
    case Flavor::symplectic: return permissible_symplectic(v, N);
    case Flavor::orthogonal: return permissible_orthogonal(v, N);
    case Flavor::symmetric: return int(v.lam.size()) <= N;
    }
    return false;
}

int flavor_first_bad(const Path& t, Flavor f, int N)
{
    for (std::size_t k = 0; k < t.size(); ++k)
        if (!flavor_permissible(t[k], f, N)) return int(k);
    return -1;
}

bool flavor_path_permissible(const Path& t, Flavor f, int N) { return flavor_first_bad(t, f, N) < 0; }

namespace {

Elem juxtapose_elements(const Elem& a, const Elem& b)
{
    std::unordered_map<std::uint64_t, PolyZ> acc;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            acc[juxtapose(a.diagram(i), b.diagram(j)).code()] += a.terms()[i].second * b.terms()[j].second;
    return Elem::from_map(a.r() + b.r(), std::move(acc));
}

Element<Rat> juxtapose_rational(const Element<Rat>& a, int r_right)
{
    std::unordered_map<std::uint64_t, Rat> acc;
    for (std::size_t i = 0; i < a.size(); ++i)
        acc[juxtapose(a.diagram(i), Diagram(r_right)).code()] += a.terms()[i].second;
    return Element<Rat>::from_map(a.r() + r_right, std::move(acc));
}

Partition drop_zeros(Partition p)
{
    p.erase(std::remove(p.begin(), p.end(), 0), p.end());
    return p;
}

bool all_integral(const Element<Rat>& a)
{
    for (auto& [k, c] : a.terms())
        if (c.get_den() != 1) return false;
    return true;
}

Element<Int> to_integral(const Element<Rat>& a)
{
    return a.map_coeffs<Int>([](const Rat& c) { return Int(c.get_num()); });
}

Element<Rat> rational_at(const Elem& a, long d0) { return to_rational(specialize_element(a, d0)); }

std::string str(long x) { return std::to_string(x); }

}  // namespace

Elem diagram_sum(int r)
{
    std::unordered_map<std::uint64_t, PolyZ> acc;
    for (auto& d : all_diagrams(r)) acc[d.code()] = PolyZ(1);
    return Elem::from_map(r, std::move(acc));
}

Elem walled_sum(int a, int b)
{
    std::unordered_map<std::uint64_t, PolyZ> acc;
    for (auto& d : all_diagrams(a + b)) {
        auto w = walled_filter(a, b, d);
        if (w.walled) acc[d.code()] = PolyZ(long(w.sign));
    }
    return Elem::from_map(a + b, std::move(acc));
}

Element<Rat> orbit_quotient(const Elem& terms, const Partition& blocks, bool signed_group)
{
    int r = terms.r();
    Elem group = young_sum(drop_zeros(blocks), r, signed_group);
    long order = long(group.size());
    std::unordered_set<std::uint64_t> seen;
    std::unordered_map<std::uint64_t, Rat> acc;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (seen.count(terms.terms()[i].first)) continue;
        Diagram x = terms.diagram(i);
        std::set<std::uint64_t> orbit;
        for (std::size_t g = 0; g < group.size(); ++g) orbit.insert(diagram_mult(group.diagram(g), x).first.code());
        seen.insert(orbit.begin(), orbit.end());
        long stab = order / long(orbit.size());
        acc[x.code()] = Rat(terms.terms()[i].second.constant()) / Rat(stab);
    }
    return Element<Rat>::from_map(r, std::move(acc));
}

bool is_marginal(const Vertex& v, Flavor f, int N)
{
    switch (f) {
    case Flavor::symplectic: return !v.lam.empty() && v.lam[0] == N + 1;
    case Flavor::orthogonal: {
        auto c = conjugate(v.lam);
        int a = c.size() > 0 ? c[0] : 0, b = c.size() > 1 ? c[1] : 0;
        return a + b == N + 1;
    }
    case Flavor::symmetric: return v.l == 0 && int(v.lam.size()) == N + 1;
    }
    return false;
}

KernelGenerator kernel_generator(const Vertex& v, Flavor f, int N)
{
    if (!is_marginal(v, f, N)) throw std::invalid_argument("kernel_generator: " + v.str() + " is not marginal");
    KernelGenerator kg;
    kg.vertex = v;
    kg.level = v.level();
    int k = kg.level;
    BasisKind kind = flavor_kind(f);
    Elem cell = cell_generator(v, kind, k);

    if (f == Flavor::symmetric) {
        kg.full = cell;
        kg.prime = Elem(k);
        kg.beta_prime = Element<Rat>(k);
        return kg;
    }

    Elem head, head_prime, head_group, tail;
    Element<Rat> head_beta;
    int width = 0;
    if (f == Flavor::symplectic) {
        width = v.lam[0];
        head = diagram_sum(width);
        head_prime = head.filter([](const Diagram& d) { return d.corank() >= 1; });
        head_beta = orbit_quotient(head_prime, {width}, false);
        head_group = young_sum({width}, width, false);
        Partition rest(v.lam.begin() + 1, v.lam.end());
        tail = young_sum(rest, size(rest), false);
    } else {
        auto c = conjugate(v.lam);
        int a = c[0], b = c.size() > 1 ? c[1] : 0;
        width = a + b;
        head = walled_sum(a, b);
        head_prime = head.filter([](const Diagram& d) { return d.corank() >= 1; });
        head_beta = orbit_quotient(head_prime, {a, b}, true);
        head_group = young_sum(drop_zeros({a, b}), width, true);
        // columns beyond the second, as a signed column-group sum
        Partition right;
        for (int x : v.lam)
            if (x > 2) right.push_back(x - 2);
        tail = young_sum(conjugate(right), size(right), true);
    }

    // the head factorization must hold before anything is embedded
    long d0 = flavor_delta(f, N);
    Algebra<Rat> qa{Rat(d0)};
    if (qa.mult(rational_at(head_group, d0), head_beta) != rational_at(head_prime, d0))
        throw std::logic_error("kernel_generator: head does not factor through the group sum at " + v.str());

    int mu = size(v.lam);
    Elem full = (mu > width ? juxtapose_elements(head, tail) : head).embed(k);
    Elem prime = (mu > width ? juxtapose_elements(head_prime, tail) : head_prime).embed(k);
    if (v.l > 0) {
        Elem chain = e_chain(k - 1, v.l, k);
        auto alg = generic_algebra();
        full = alg.mult(full, chain);
        prime = alg.mult(prime, chain);
    }
    kg.full = full;
    kg.prime = prime;
    kg.beta_prime = (mu > width ? juxtapose_rational(head_beta, mu - width) : head_beta).embed(k);

    if (full - prime != cell) throw std::logic_error("kernel_generator: splitting fails at " + v.str());
    for (std::size_t i = 0; i < prime.size(); ++i)
        if (prime.diagram(i).corank() < v.l + 1)
            throw std::logic_error("kernel_generator: correction has low corank at " + v.str());
    Element<Rat> beta = Element<Rat>::one(k) + kg.beta_prime;
    if (qa.mult(rational_at(cell, d0), beta) != rational_at(full, d0))
        throw std::logic_error("kernel_generator: factorization fails at " + v.str());
    return kg;
}

std::vector<Element<Int>> ideal_generators(Flavor f, int N, int r)
{
    std::vector<Element<Int>> out;
    if (r < N + 1) return out;
    auto integral = [r](const Elem& e) { return specialize_element(e.embed(r), 0); };
    switch (f) {
    case Flavor::symplectic: out.push_back(integral(diagram_sum(N + 1))); break;
    case Flavor::orthogonal:
        for (int a = N + 1; 2 * a >= N + 1; --a) out.push_back(integral(walled_sum(a, N + 1 - a)));
        break;
    case Flavor::symmetric: out.push_back(integral(young_sum({N + 1}, N + 1, true))); break;
    }
    return out;
}

// ---------------------------------------------------------------------------

std::size_t SplitBasis::permissible_count(int vi) const
{
    return std::size_t(std::count(perm_[vi].begin(), perm_[vi].end(), true));
}

SplitBasis::SplitBasis(Flavor f, int N, int r, int jobs) : flavor_(f), N_(N), r_(r), d0_(flavor_delta(f, N))
{
    BasisKind kind = flavor_kind(f);
    basis_ = std::make_unique<MurphyBasis>(r, kind);
    spec_ = std::make_unique<SpecializedBasis>(*basis_, d0_);
    const MurphyBasis& B = *basis_;
    Algebra<Rat> qa{Rat(d0_)};

    std::map<std::string, std::size_t> marginal_index;
    int nv = int(B.vertices().size());
    perm_.resize(nv);
    a_.resize(nv);
    x_.resize(nv);
    for (int vi = 0; vi < nv; ++vi) {
        const auto& paths = B.paths(vi);
        for (auto& t : paths) {
            int k = flavor_first_bad(t, f, N);
            perm_[vi].push_back(k < 0);
            if (k >= 0 && !marginal_index.count(t[k].str())) {
                marginal_index[t[k].str()] = marginal_.size();
                marginal_.push_back(kernel_generator(t[k], f, N));
            }
        }
        a_[vi].resize(paths.size());
        x_[vi].resize(paths.size());
    }

    // a_t and m_λ a_t per path
    std::vector<std::pair<int, int>> todo;
    for (int vi = 0; vi < nv; ++vi)
        for (std::size_t t = 0; t < B.paths(vi).size(); ++t) todo.emplace_back(vi, int(t));
    parallel_for(todo.size(), jobs, [&](std::size_t j) {
        auto [vi, t] = todo[j];
        const Path& p = B.paths(vi)[t];
        int k = flavor_first_bad(p, f, N);
        Element<Rat> a;
        if (k < 0) {
            a = spec_->d(vi, t);
        } else {
            const KernelGenerator& kg = marginal_[marginal_index.at(p[k].str())];
            Element<Rat> beta = (Element<Rat>::one(k) + kg.beta_prime).embed(r);
            a = qa.product({rational_at(path_factor(p, k, r, kind, r), d0_), beta,
                            rational_at(path_factor(p, 0, k, kind, r), d0_)},
                           r);
        }
        Element<Rat> x = qa.mult(rational_at(B.generator(vi), d0_), a);
        if (!all_integral(x))
            throw std::logic_error("split basis: m_λ a_t is not integral on path " + std::to_string(t) + " of " +
                                   B.vertices()[vi].str());
        a_[vi][t] = std::move(a);
        x_[vi][t] = to_integral(x);
    });

    entries_.resize(B.size());
    elems_.resize(B.size());
    parallel_for(B.size(), jobs, [&](std::size_t i) {
        auto e = B.entry(int(i));
        bool kernel = !perm_[e.vertex][e.s] || !perm_[e.vertex][e.t];
        entries_[i] = {e.vertex, e.s, e.t, kernel};
        if (!kernel) {
            elems_[i] = specialize_element(B.element(int(i)), d0_);
            return;
        }
        Element<Rat> n = qa.mult(a_[e.vertex][e.s].star(), to_rational(x_[e.vertex][e.t]));
        if (!all_integral(n))
            throw std::logic_error("split basis: element " + std::to_string(i) + " is not integral");
        elems_[i] = to_integral(n);
    });
}

// ---------------------------------------------------------------------------

std::size_t ideal_rank(const std::vector<Element<Int>>& gens, int r, long d0, std::size_t stop_at, bool perms_only)
{
    if (gens.empty() || stop_at == 0) return 0;
    Algebra<Int> alg{Int(d0)};
    std::vector<Element<Int>> diagrams;
    for (auto& d : all_diagrams(r))
        if (!perms_only || d.is_permutation()) diagrams.emplace_back(d);

    Echelon<Int> right;
    std::vector<Element<Int>> right_basis;
    for (auto& g : gens)
        for (auto& d : diagrams) {
            Element<Int> v = alg.mult(g, d);
            if (right.add(v.terms())) right_basis.push_back(std::move(v));
        }
    Echelon<Int> two;
    for (auto& v : right_basis) {
        two.add(v.terms());
        if (two.rank() >= stop_at) return two.rank();
    }
    for (auto& d : diagrams)
        for (auto& v : right_basis) {
            two.add(alg.mult(d, v).terms());
            if (two.rank() >= stop_at) return two.rank();
        }
    return two.rank();
}

namespace {

std::vector<Element<Int>> algebra_spanning_set(Flavor f, int r)
{
    std::vector<Element<Int>> out;
    for (auto& d : all_diagrams(r))
        if (f != Flavor::symmetric || d.is_permutation()) out.emplace_back(d);
    return out;
}

std::string field_name(long p) { return p ? "F_" + std::to_string(p) : "Q"; }

}  // namespace

Certificate certify_sft(Flavor f, int N, int r, const CertifyOptions& opt)
{
    if (opt.p == 2 && f == Flavor::orthogonal) throw std::invalid_argument("orthogonal checks exclude characteristic 2");
    if (opt.p < 0 || opt.p == 1) throw std::invalid_argument("p must be a prime");
    Certificate cert;
    long d0 = flavor_delta(f, N);
    cert.params = {{"flavor", flavor_name(f)}, {"N", str(N)}, {"r", str(r)}, {"field", field_name(opt.p)}};
    if (f != Flavor::symmetric) cert.params.emplace_back("delta", str(d0));

    TensorRep rep(f, N, r, opt.max_tensor_dim);

    // marginal vertices up to level r
    {
        long count = 0;
        std::string failure;
        Graph g = flavor_kind(f).graph();
        for (int k = 1; k <= r && failure.empty(); ++k)
            for (auto& v : vertices_at_level(k, g)) {
                if (!is_marginal(v, f, N)) continue;
                try {
                    kernel_generator(v, f, N);
                    ++count;
                } catch (const std::logic_error& e) {
                    failure = e.what();
                    break;
                }
            }
        if (failure.empty())
            cert.add("marginal splitting and factorization", "all marginal vertices", str(count) + " verified", true);
        else
            cert.add("marginal splitting and factorization", "all marginal vertices", failure, false);
    }

    auto gens = ideal_generators(f, N, r);
    {
        bool ok = true;
        for (auto& g : gens) ok &= rep.in_kernel(g);
        cert.add("kernel generators vanish", str(long(gens.size())) + " zero images",
                 ok ? str(long(gens.size())) + " zero images" : "nonzero image", ok);
    }

    std::unique_ptr<SplitBasis> sb;
    try {
        sb = std::make_unique<SplitBasis>(f, N, r, opt.jobs);
        cert.add("split basis integral", "integral", "integral", true);
    } catch (const std::logic_error& e) {
        cert.add("split basis integral", "integral", e.what(), false);
        return cert;
    }
    const MurphyBasis& B = sb->murphy();
    const SpecializedBasis& S = sb->specialized();
    bool dual = B.kind().dual;
    int nv = int(B.vertices().size());

    long perm_sum = 0;
    for (int vi = 0; vi < nv; ++vi) {
        long n = long(sb->permissible_count(vi));
        perm_sum += n * n;
    }

    // triangularity of m_λ a_t in the cell module, and the radical
    std::vector<std::vector<std::vector<Rat>>> coords(nv);
    {
        bool ok = true;
        std::string where;
        for (int vi = 0; vi < nv; ++vi) {
            const auto& paths = B.paths(vi);
            Element<Rat> left = S.d(vi, 0).star();
            coords[vi].resize(paths.size());
            parallel_for(paths.size(), opt.jobs, [&](std::size_t t) {
                coords[vi][t] = S.cell_coords(vi, S.algebra().mult(left, to_rational(sb->row_generator(vi, int(t)))));
            });
            for (std::size_t t = 0; t < paths.size(); ++t)
                for (std::size_t v = 0; v < paths.size(); ++v) {
                    const Rat& c = coords[vi][t][v];
                    bool good = v == t ? c == 1 : (c == 0 || path_revlex_greater(paths[v], paths[t], dual));
                    if (!good && ok) {
                        ok = false;
                        where = B.vertices()[vi].str() + " path " + str(long(t));
                    }
                }
        }
        cert.add("split basis unitriangular", "unitriangular", ok ? "unitriangular" : "fails at " + where, ok);
    }

    std::size_t dim_alg = f == Flavor::symmetric ? B.size() : std::size_t(double_factorial_odd(r));
    std::size_t dim_im = image_rank(algebra_spanning_set(f, r), rep, opt.p, SIZE_MAX, opt.jobs);
    cert.add_eq("image rank equals permissible count", str(perm_sum), str(long(dim_im)));

    std::vector<Element<Int>> perm_elems, kernel_elems;
    for (std::size_t i = 0; i < sb->size(); ++i)
        (sb->entry(i).kernel ? kernel_elems : perm_elems).push_back(sb->element(i));
    std::size_t perm_rank = image_rank(perm_elems, rep, opt.p, SIZE_MAX, opt.jobs);
    cert.add_eq("permissible images independent", str(long(perm_elems.size())), str(long(perm_rank)));

    {
        std::vector<char> zero(kernel_elems.size());
        parallel_for(kernel_elems.size(), opt.jobs, [&](std::size_t i) { zero[i] = rep.in_kernel(kernel_elems[i]); });
        long vanish = long(std::count(zero.begin(), zero.end(), 1));
        cert.add_eq("kernel basis vanishes", str(long(kernel_elems.size())), str(vanish));
    }
    cert.add_eq("kernel count", str(long(dim_alg) - long(dim_im)), str(long(kernel_elems.size())));
    cert.add_eq("basis size", str(long(dim_alg)), str(long(sb->size())));

    std::size_t dim_ker = dim_alg - std::min(dim_alg, dim_im);
    if (r <= opt.ideal_max_r) {
        std::size_t got = ideal_rank(gens, r, d0, dim_ker, f == Flavor::symmetric);
        cert.add_eq("ideal generation", str(long(dim_ker)), str(long(got)));
    } else {
        cert.notes.push_back("ideal generation skipped for r > " + str(opt.ideal_max_r));
    }

    // quotient cell modules: specialized Gram rank and the radical
    {
        bool ok = true;
        std::ostringstream got;
        for (int vi = 0; vi < nv; ++vi) {
            long np = long(sb->permissible_count(vi));
            if (!np) continue;
            auto G = B.gram_matrix(vi).map([d0](const PolyZ& p) { return Rat(specialize(p, d0)); });
            long rank = long(matrix_rank(G));
            bool radical = true;
            for (std::size_t t = 0; t < B.paths(vi).size(); ++t) {
                if (sb->path_permissible(vi, int(t))) continue;
                for (std::size_t u = 0; u < G.cols(); ++u) {
                    Rat acc = 0;
                    for (std::size_t v = 0; v < G.rows(); ++v) acc += coords[vi][t][v] * G(v, u);
                    radical &= acc == 0;
                }
            }
            ok &= rank == np && radical;
            got << (got.tellp() ? " " : "") << B.vertices()[vi].str() << ":" << rank << "/" << np
                << (radical ? "" : "(radical fails)");
        }
        cert.add("quotient cell modules", "Gram rank = permissible paths, kernel rows in radical", got.str(), ok);
    }

    if (f != Flavor::symmetric && r <= opt.seminormal_max_r) cert.merge(specialize_quotient(B, f, N));
    return cert;
}

std::vector<DimsRow> dims_table(Flavor f, int N, int max_r, int rank_max_r, std::size_t max_tensor_dim, long p, int jobs)
{
    std::vector<DimsRow> out;
    Graph g = flavor_kind(f).graph();
    for (int r = 1; r <= max_r; ++r) {
        DimsRow row;
        row.r = r;
        row.permissible_sum = 0;
        long total = 0;
        for (auto& v : vertices_at_level(r, g)) {
            long all = 0, good = 0;
            for (auto& t : enumerate_paths(v, g)) {
                ++all;
                good += flavor_path_permissible(t, f, N);
            }
            total += all * all;
            if (good) {
                row.permissible_paths.emplace_back(v, good);
                row.permissible_sum += good * good;
            }
        }
        row.algebra_dim = total;
        if (r <= rank_max_r) {
            try {
                TensorRep rep(f, N, r, max_tensor_dim);
                row.image_rank = long(image_rank(algebra_spanning_set(f, r), rep, p, SIZE_MAX, jobs));
            } catch (const CapExceeded&) {
            }
        }
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace brauer
