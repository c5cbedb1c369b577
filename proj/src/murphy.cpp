#include "brauer/murphy.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace brauer {

std::string BasisKind::name() const
{
    if (!brauer) return dual ? "symmetric-dual-murphy" : "symmetric-murphy";
    return dual ? "brauer-dual-murphy" : "brauer-murphy";
}

std::vector<int> cycle_perm(int x, int y, int r)
{
    std::vector<int> w(r);
    std::iota(w.begin(), w.end(), 0);
    auto apply_s = [&](int i) {
        std::vector<int> s(r);
        std::iota(s.begin(), s.end(), 0);
        std::swap(s[i - 1], s[i]);
        w = perm_compose(w, s);
    };
    if (x <= y)
        for (int i = x; i < y; ++i) apply_s(i);
    else
        for (int i = x - 1; i >= y; --i) apply_s(i);
    return w;
}

Elem young_sum(const Partition& blocks, int r, bool signed_sum, int offset)
{
    std::vector<std::vector<int>> acc{std::vector<int>(r)};
    std::iota(acc[0].begin(), acc[0].end(), 0);
    std::vector<int> signs{1};
    int start = offset;
    for (int b : blocks) {
        std::vector<std::vector<int>> next;
        std::vector<int> next_signs;
        for (auto& p : all_perms(b)) {
            int sg = perm_sign(p);
            for (std::size_t k = 0; k < acc.size(); ++k) {
                std::vector<int> w = acc[k];
                for (int i = 0; i < b; ++i) w[start + i] = start + p[i];
                next.push_back(std::move(w));
                next_signs.push_back(signs[k] * sg);
            }
        }
        acc = std::move(next);
        signs = std::move(next_signs);
        start += b;
    }
    std::unordered_map<std::uint64_t, PolyZ> m;
    for (std::size_t k = 0; k < acc.size(); ++k)
        m[Diagram::from_perm(acc[k]).code()] += PolyZ(signed_sum ? long(signs[k]) : 1L);
    return Elem::from_map(r, std::move(m));
}

Elem sym_x(const Partition& lam, int r) { return young_sum(lam, r, false); }
Elem sym_y(const Partition& lam, int r) { return young_sum(conjugate(lam), r, true); }

std::pair<Elem, Elem> sym_factors(const Partition& mu, const Partition& lam, bool dual, int r)
{
    // row j (1-based) of the added box
    int j = 0;
    for (std::size_t k = 0; k < lam.size(); ++k) {
        int m = k < mu.size() ? mu[k] : 0;
        if (lam[k] == m + 1) {
            j = int(k) + 1;
            break;
        }
    }
    if (j == 0 || size(lam) != size(mu) + 1) throw std::invalid_argument("sym_factors: not a one-box extension");
    for (std::size_t k = 0; k < lam.size(); ++k)
        if (int(k) + 1 != j && lam[k] != (k < mu.size() ? mu[k] : 0))
            throw std::invalid_argument("sym_factors: not a one-box extension");
    int i = size(lam);
    auto perm = [&](int x, int y, long c) { return perm_element(cycle_perm(x, y, r), c); };
    if (!dual) {
        int a = 0;
        for (int k = 0; k < j; ++k) a += lam[k];
        int muj = j - 1 < int(mu.size()) ? mu[j - 1] : 0;
        Elem d = perm(a, i, 1);
        Elem sum(r);
        for (int k = 0; k <= muj; ++k) sum += perm(a, a - k, 1);
        Elem u = generic_algebra().mult(perm(i, a, 1), sum);
        return {d, u};
    }
    Partition lc = conjugate(lam);
    int b = 0;
    for (int k = 0; k < lam[j - 1]; ++k) b += lc[k];
    long sg = (b - i) % 2 == 0 ? 1 : -1;
    Elem bf = perm(b, i, sg);
    Elem sum(r);
    // the column of the new box has j-1 boxes in mu
    for (int k = 0; k <= j - 1; ++k) sum += perm(b, b - k, (k + b - i) % 2 == 0 ? 1 : -1);
    Elem v = generic_algebra().mult(perm(i, b, 1), sum);
    return {bf, v};
}

Elem e_chain(int j, int l, int r)
{
    if (l == 0) return Elem::one(r);
    Elem acc = Elem::one(r);
    auto alg = generic_algebra();
    for (int k = j - 2 * l + 2; k <= j; k += 2) acc = alg.mult(acc, Elem(Diagram::e(r, k)));
    return acc;
}

Elem cell_generator(const Vertex& v, BasisKind kind, int r)
{
    int k = v.level();
    Elem g = kind.dual ? sym_y(v.lam, r) : sym_x(v.lam, r);
    if (v.l == 0) return g;
    return generic_algebra().mult(g, e_chain(k - 1, v.l, r));
}

std::pair<Elem, Elem> edge_factors(const Vertex& from, const Vertex& to, BasisKind kind, int r)
{
    int k = from.level();
    if (to.level() != k + 1) throw std::invalid_argument("edge_factors: levels do not match");
    if (!kind.brauer) {
        if (to.l != 0 || from.l != 0) throw std::invalid_argument("edge_factors: not a Young-graph edge");
        return sym_factors(from.lam, to.lam, kind.dual, r);
    }
    auto alg = generic_algebra();
    int l = from.l;
    if (to.l == l) {
        auto [d, u] = sym_factors(from.lam, to.lam, kind.dual, r);
        return {alg.mult(d, e_chain(k - 1, l, r)), alg.mult(u, e_chain(k, l, r))};
    }
    if (to.l != l + 1) throw std::invalid_argument("edge_factors: not a Brauer-graph edge");
    auto [d, u] = sym_factors(to.lam, from.lam, kind.dual, r);
    return {alg.mult(u, e_chain(k - 1, l, r)), alg.mult(d, e_chain(k, l + 1, r))};
}

Elem path_factor(const Path& t, int lo, int hi, BasisKind kind, int r)
{
    auto alg = generic_algebra();
    Elem acc = Elem::one(r);
    for (int j = hi; j > lo; --j) acc = alg.mult(acc, edge_factors(t[j - 1], t[j], kind, r).first);
    return acc;
}

Elem jm_element(int i, int r, bool brauer)
{
    if (r > kMaxStrands) throw std::out_of_range("strand count out of range");
    Elem L(r);
    for (int j = 1; j < i; ++j) {
        std::vector<int> w(r);
        std::iota(w.begin(), w.end(), 0);
        std::swap(w[j - 1], w[i - 1]);
        L += perm_element(w);
        if (brauer) {
            std::array<std::uint8_t, 2 * kMaxStrands> p{};
            for (int k = 0; k < r; ++k) p[k] = std::uint8_t(k + r), p[k + r] = std::uint8_t(k);
            p[j - 1] = std::uint8_t(i - 1), p[i - 1] = std::uint8_t(j - 1);
            p[r + j - 1] = std::uint8_t(r + i - 1), p[r + i - 1] = std::uint8_t(r + j - 1);
            L -= Elem(Diagram::from_partners(r, p));
        }
    }
    return L;
}

// ---------------------------------------------------------------------------

namespace {

// 1/u for a unit u = ±1
PolyZ unit_inverse(const PolyZ& u) { return u; }

SparseVec<PolyZ> combo_axpy(const SparseVec<PolyZ>& x, const PolyZ& q, const SparseVec<PolyZ>& y)
{
    return sparse_axpby(PolyZ(1), x, PolyZ(-q), y);
}

}  // namespace

BlockInverse::BlockInverse(const std::vector<int>& ids, const std::vector<SparseVec<PolyZ>>& rows)
{
    struct Row {
        std::uint64_t pcode;
        PolyZ pval;
        SparseVec<PolyZ> vec, combo;
    };
    std::vector<Row> R;
    R.reserve(rows.size());
    std::map<std::uint64_t, int> pivot_row;
    for (std::size_t n = 0; n < rows.size(); ++n) {
        SparseVec<PolyZ> v = rows[n];
        SparseVec<PolyZ> combo{{std::uint64_t(ids[n]), PolyZ(1)}};
        // forward: clear every existing pivot column
        bool again = true;
        while (again) {
            again = false;
            for (auto& [code, c] : v) {
                auto it = pivot_row.find(code);
                if (it == pivot_row.end()) continue;
                Row& k = R[it->second];
                PolyZ q = c * unit_inverse(k.pval);
                v = combo_axpy(v, q, k.vec);
                combo = combo_axpy(combo, q, k.combo);
                again = true;
                break;
            }
        }
        auto piv = std::find_if(v.begin(), v.end(), [](const auto& e) { return is_unit(e.second); });
        if (piv == v.end())
            throw std::runtime_error(v.empty() ? "transition matrix is singular" : "no unit pivot available");
        pivot_row[piv->first] = int(R.size());
        R.push_back({piv->first, piv->second, std::move(v), std::move(combo)});
    }

    // determinant: product of pivots times the sign of the pivot-column permutation
    std::vector<std::uint64_t> cols;
    for (auto& row : R) cols.push_back(row.pcode);
    std::vector<std::uint64_t> sorted = cols;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> pos(cols.size());
    for (std::size_t i = 0; i < cols.size(); ++i)
        pos[i] = int(std::lower_bound(sorted.begin(), sorted.end(), cols[i]) - sorted.begin());
    det_ = PolyZ(long(perm_sign(pos)));
    for (auto& row : R) det_ *= row.pval;

    // backward: clear pivot columns above
    for (std::size_t k = R.size(); k-- > 0;) {
        for (std::size_t j = 0; j < k; ++j) {
            PolyZ c = sparse_get(R[j].vec, R[k].pcode);
            if (c.is_zero()) continue;
            PolyZ q = c * unit_inverse(R[k].pval);
            R[j].vec = combo_axpy(R[j].vec, q, R[k].vec);
            R[j].combo = combo_axpy(R[j].combo, q, R[k].combo);
        }
    }
    for (auto& row : R) {
        if (row.vec.size() != 1) throw std::logic_error("block is not square");
        SparseVec<PolyZ> inv;
        for (auto& [j, c] : row.combo) inv.emplace_back(j, c * unit_inverse(row.pval));
        inv_[row.pcode] = std::move(inv);
    }
    for (auto& [code, inv] : inv_)
        for (auto& [j, c] : inv) fun_[int(j)].emplace_back(code, c);
}

const SparseVec<PolyZ>* BlockInverse::diagram_row(std::uint64_t code) const
{
    auto it = inv_.find(code);
    return it == inv_.end() ? nullptr : &it->second;
}

const SparseVec<PolyZ>* BlockInverse::functional(int j) const
{
    static const SparseVec<PolyZ> empty;
    auto it = fun_.find(j);
    return it == fun_.end() ? &empty : &it->second;
}

// ---------------------------------------------------------------------------

MurphyBasis::MurphyBasis(int r, BasisKind kind, int max_r) : r_(r), kind_(kind), alg_(generic_algebra())
{
    if (r < 1 || r > max_r) throw std::out_of_range("murphy_basis: r outside the configured cap");
    verts_ = vertices_at_level(r, kind.graph());
    std::stable_sort(verts_.begin(), verts_.end(), [&](const Vertex& a, const Vertex& b) {
        if (a.l != b.l) return a.l > b.l;
        if (kind.dual) return conjugate(a.lam) > conjugate(b.lam);
        return a.lam > b.lam;
    });
    for (auto& v : verts_) {
        paths_.push_back(enumerate_paths(v, kind.graph()));
        gen_.push_back(cell_generator(v, kind, r));
        std::vector<Elem> ds;
        for (auto& t : paths_.back()) ds.push_back(path_factor(t, 0, r, kind, r));
        d_.push_back(std::move(ds));
    }
    for (std::size_t vi = 0; vi < verts_.size(); ++vi) {
        offset_.push_back(int(elems_.size()));
        int n = int(paths_[vi].size());
        std::vector<Elem> right;
        for (int t = 0; t < n; ++t) right.push_back(alg_.mult(gen_[vi], d_[vi][t]));
        for (int s = 0; s < n; ++s) {
            Elem ds = d_[vi][s].star();
            for (int t = 0; t < n; ++t) {
                entries_.push_back({int(vi), s, t});
                elems_.push_back(alg_.mult(ds, right[t]));
            }
        }
    }

    // one inverse per corank block; the symmetric flavor has only corank 0
    std::map<int, std::pair<std::vector<int>, std::vector<SparseVec<PolyZ>>>> groups;
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        int l = verts_[entries_[i].vertex].l;
        SparseVec<PolyZ> row;
        for (auto& [code, c] : elems_[i].terms()) {
            if (Diagram::from_code(r, code).corank() != l)
                throw std::logic_error("Murphy element not supported on its corank block");
            row.emplace_back(code, c);
        }
        groups[l].first.push_back(int(i));
        groups[l].second.push_back(std::move(row));
    }
    for (auto& [l, g] : groups) blocks_[l] = std::make_unique<BlockInverse>(g.first, g.second);
}

int MurphyBasis::vertex_index(const Vertex& v) const
{
    for (std::size_t i = 0; i < verts_.size(); ++i)
        if (verts_[i] == v) return int(i);
    return -1;
}

ExactMatrix<PolyZ> MurphyBasis::transition_matrix() const
{
    const auto& diags = all_diagrams(r_);
    std::vector<int> cols;
    for (std::size_t k = 0; k < diags.size(); ++k)
        if (kind_.brauer || diags[k].is_permutation()) cols.push_back(int(k));
    std::map<int, int> colpos;
    for (std::size_t c = 0; c < cols.size(); ++c) colpos[cols[c]] = int(c);
    ExactMatrix<PolyZ> T(elems_.size(), cols.size());
    for (std::size_t i = 0; i < elems_.size(); ++i)
        for (auto& [code, c] : elems_[i].terms()) T(i, colpos.at(diagram_index(Diagram::from_code(r_, code)))) = c;
    return T;
}

PolyZ MurphyBasis::transition_det() const
{
    // block diagonal after a permutation of rows and columns that preserves
    // the relative order inside each block; each block contributes its own
    // determinant and the reordering contributes a sign
    PolyZ det(1);
    for (auto& [l, b] : blocks_) det *= b->det();
    // row order: basis order; column order: diagram order. Compute the sign of
    // the block-grouping permutations on both sides.
    auto grouping_sign = [](const std::vector<int>& keys) {
        std::vector<int> idx(keys.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return keys[a] < keys[b]; });
        return perm_sign(idx);
    };
    std::vector<int> rowkeys, colkeys;
    for (auto& e : entries_) rowkeys.push_back(verts_[e.vertex].l);
    for (auto& d : all_diagrams(r_))
        if (kind_.brauer || d.is_permutation()) colkeys.push_back(d.corank());
    // inside a block the inverse used code order for columns; convert to the
    // diagram order by the sign of that reordering
    int s = grouping_sign(rowkeys) * grouping_sign(colkeys);
    std::map<int, std::vector<std::pair<int, std::uint64_t>>> cols_by_block;
    for (auto& d : all_diagrams(r_))
        if (kind_.brauer || d.is_permutation()) cols_by_block[d.corank()].emplace_back(diagram_index(d), d.code());
    for (auto& [l, v] : cols_by_block) {
        std::vector<std::uint64_t> codes;
        for (auto& p : v) codes.push_back(p.second);
        std::vector<std::uint64_t> sorted = codes;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> perm;
        for (auto c : codes) perm.push_back(int(std::lower_bound(sorted.begin(), sorted.end(), c) - sorted.begin()));
        s *= perm_sign(perm);
    }
    return det.scaled(Int(s));
}

std::vector<int> MurphyBasis::corank_blocks() const
{
    std::vector<int> out;
    for (auto& e : entries_) out.push_back(verts_[e.vertex].l);
    return out;
}

const BlockInverse& MurphyBasis::block_for(std::uint64_t code) const
{
    int l = Diagram::from_code(r_, code).corank();
    auto it = blocks_.find(l);
    if (it == blocks_.end()) throw std::invalid_argument("element outside the span of the basis");
    return *it->second;
}

SparseVec<PolyZ> MurphyBasis::expand(const Elem& a) const
{
    std::map<std::uint64_t, PolyZ> acc;
    for (auto& [code, c] : a.terms()) {
        const SparseVec<PolyZ>* row = block_for(code).diagram_row(code);
        if (!row) throw std::invalid_argument("element outside the span of the basis");
        for (auto& [j, x] : *row) acc[j] += c * x;
    }
    SparseVec<PolyZ> out;
    for (auto& [j, x] : acc)
        if (!x.is_zero()) out.emplace_back(j, x);
    return out;
}

namespace {

template <class C, class F>
C dot_by_code(const std::vector<std::pair<std::uint64_t, C>>& a, const std::vector<std::pair<std::uint64_t, F>>& f)
{
    C acc(0);
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < f.size()) {
        if (a[i].first < f[j].first)
            ++i;
        else if (f[j].first < a[i].first)
            ++j;
        else {
            acc += a[i].second * f[j].second;
            ++i, ++j;
        }
    }
    return acc;
}

}  // namespace

const SparseVec<PolyZ>& MurphyBasis::functional(int i) const
{
    return *blocks_.at(verts_[entries_[i].vertex].l)->functional(i);
}

PolyZ MurphyBasis::coordinate(int i, const Elem& a) const { return dot_by_code(a.terms(), functional(i)); }

std::vector<PolyZ> MurphyBasis::cell_coords(int vi, const Elem& y, int s) const
{
    std::vector<PolyZ> out;
    for (std::size_t v = 0; v < paths_[vi].size(); ++v) out.push_back(coordinate(index(vi, s, int(v)), y));
    return out;
}

ExactMatrix<PolyZ> MurphyBasis::cell_action(int vi, const Elem& a, int s) const
{
    std::size_t n = paths_[vi].size();
    ExactMatrix<PolyZ> M(n, n);
    for (std::size_t t = 0; t < n; ++t) {
        auto row = cell_coords(vi, alg_.mult(element(vi, s, int(t)), a), s);
        for (std::size_t v = 0; v < n; ++v) M(t, v) = row[v];
    }
    return M;
}

ExactMatrix<PolyZ> MurphyBasis::gram_matrix(int vi) const
{
    std::size_t n = paths_[vi].size();
    ExactMatrix<PolyZ> G(n, n);
    int target = index(vi, 0, 0);
    for (std::size_t t = 0; t < n; ++t)
        for (std::size_t u = 0; u < n; ++u)
            G(t, u) = coordinate(target, alg_.mult(element(vi, 0, int(t)), element(vi, int(u), 0)));
    return G;
}

ExactMatrix<PolyZ> MurphyBasis::jm_action(int i, int vi) const
{
    return cell_action(vi, jm_element(i, r_, kind_.brauer));
}

// ---------------------------------------------------------------------------

SpecializedBasis::SpecializedBasis(const MurphyBasis& b, long d0) : b_(b), d0_(d0), alg_(Rat(d0))
{
    for (std::size_t i = 0; i < b.size(); ++i) {
        elems_.push_back(to_rational(specialize_element(b.element(int(i)), d0)));
        functional(int(i));
    }
}

Element<Rat> SpecializedBasis::d(int vi, int t) const { return to_rational(specialize_element(b_.d(vi, t), d0_)); }

const SparseVec<Rat>& SpecializedBasis::functional(int i) const
{
    auto it = fun_.find(i);
    if (it != fun_.end()) return it->second;
    // the generic inverse has polynomial entries, so it specializes
    SparseVec<Rat> f;
    for (auto& [code, c] : b_.functional(i)) {
        Int v = specialize(c, d0_);
        if (v != 0) f.emplace_back(code, Rat(v));
    }
    return fun_[i] = std::move(f);
}

Rat SpecializedBasis::coordinate(int i, const Element<Rat>& a) const { return dot_by_code(a.terms(), functional(i)); }

std::vector<Rat> SpecializedBasis::cell_coords(int vi, const Element<Rat>& y, int s) const
{
    std::vector<Rat> out;
    for (std::size_t v = 0; v < b_.paths(vi).size(); ++v) out.push_back(coordinate(b_.index(vi, s, int(v)), y));
    return out;
}

}  // namespace brauer
