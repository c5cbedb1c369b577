#include "brauer/seminormal.hpp"
#include "brauer/sft.hpp"

#include <set>
#include <sstream>

namespace brauer {

namespace {

RatMatrix to_rat(const ExactMatrix<PolyZ>& m)
{
    return m.map([](const PolyZ& p) { return RatFunc(p); });
}

std::optional<ExactMatrix<Rat>> eval_matrix(const RatMatrix& m, const Rat& d0)
{
    ExactMatrix<Rat> out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            auto v = m(i, j).eval(d0);
            if (!v) return std::nullopt;
            out(i, j) = *v;
        }
    return out;
}

}  // namespace

std::vector<PolyZ> path_contents(const Path& t)
{
    std::vector<PolyZ> c;
    for (std::size_t k = 1; k < t.size(); ++k) c.push_back(edge_content(t[k - 1], t[k]));
    return c;
}

RatMatrix rat_inverse(const RatMatrix& m)
{
    std::size_t n = m.rows();
    if (m.cols() != n) throw std::invalid_argument("rat_inverse: not square");
    RatMatrix a = m, inv = RatMatrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c).is_zero()) ++p;
        if (p == n) throw std::domain_error("rat_inverse: singular");
        if (p != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(p, j), a(c, j));
                std::swap(inv(p, j), inv(c, j));
            }
        RatFunc s = RatFunc(1) / a(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            a(c, j) *= s;
            inv(c, j) *= s;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a(i, c).is_zero()) continue;
            RatFunc f = a(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(c, j);
                inv(i, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

SeminormalModule gz_idempotents(const MurphyBasis& b, int vi)
{
    SeminormalModule sm;
    sm.vertex = vi;
    const auto& paths = b.paths(vi);
    std::size_t n = paths.size();
    int r = b.r();
    for (int i = 1; i <= r; ++i) sm.jm.push_back(to_rat(b.jm_action(i, vi)));
    sm.gram = b.gram_matrix(vi);

    RatMatrix id = RatMatrix::identity(n);
    sm.f = RatMatrix(n, n);
    for (std::size_t t = 0; t < n; ++t) {
        RatMatrix F = id;
        for (int k = 1; k <= r; ++k) {
            // siblings of t(k) inside this module: s(k) over paths s agreeing with t before k
            std::set<std::string> done;
            PolyZ ct = edge_content(paths[t][k - 1], paths[t][k]);
            for (auto& s : paths) {
                if (!std::equal(s.begin(), s.begin() + k, paths[t].begin())) continue;
                if (s[k] == paths[t][k] || !done.insert(s[k].str()).second) continue;
                PolyZ cs = edge_content(s[k - 1], s[k]);
                RatFunc scale = RatFunc(1) / RatFunc(ct - cs);
                F = F * (sm.jm[k - 1] - id.scaled(RatFunc(cs))).scaled(scale);
            }
        }
        for (std::size_t v = 0; v < n; ++v) sm.f(t, v) = F(t, v);
        sm.F.push_back(std::move(F));
    }
    RatMatrix G = to_rat(sm.gram);
    RatMatrix fg = sm.f * G * sm.f.transpose();
    for (std::size_t t = 0; t < n; ++t) sm.gamma.push_back(fg(t, t));
    return sm;
}

Certificate seminormal_checks(const MurphyBasis& b)
{
    Certificate cert;
    bool idem = true, jm = true, tri = true, diag = true;
    std::string where;
    auto fail = [&](bool& flag, const std::string& what) {
        if (flag && where.empty()) where = what;
        flag = false;
    };
    bool dual = b.kind().dual;
    for (int vi = 0; vi < int(b.vertices().size()); ++vi) {
        auto sm = gz_idempotents(b, vi);
        const auto& paths = b.paths(vi);
        std::size_t n = paths.size();
        std::string at = b.vertices()[vi].str();
        RatMatrix sum(n, n);
        for (std::size_t s = 0; s < n; ++s) {
            sum = sum + sm.F[s];
            for (std::size_t t = 0; t < n; ++t) {
                RatMatrix prod = sm.F[s] * sm.F[t];
                if (s == t ? prod != sm.F[s] : !prod.is_zero_matrix()) fail(idem, at);
            }
        }
        if (sum != RatMatrix::identity(n)) fail(idem, at);

        for (std::size_t t = 0; t < n; ++t) {
            auto c = path_contents(paths[t]);
            for (std::size_t i = 0; i < sm.jm.size(); ++i) {
                RatMatrix row(1, n);
                for (std::size_t v = 0; v < n; ++v) row(0, v) = sm.f(t, v);
                if (row * sm.jm[i] != row.scaled(RatFunc(c[i]))) fail(jm, at);
            }
        }

        // f_t = m_t + Σ_{s ≻ t} r_s m_s, and the inverse has the same shape
        RatMatrix inv = rat_inverse(sm.f);
        for (std::size_t t = 0; t < n; ++t)
            for (std::size_t s = 0; s < n; ++s) {
                bool allowed = s == t || path_revlex_greater(paths[s], paths[t], dual);
                if (s == t && (sm.f(t, s) != 1 || inv(t, s) != 1)) fail(tri, at);
                if (!allowed && (!sm.f(t, s).is_zero() || !inv(t, s).is_zero())) fail(tri, at);
            }

        RatMatrix fg = sm.f * to_rat(sm.gram) * sm.f.transpose();
        RatFunc prod(1);
        for (std::size_t s = 0; s < n; ++s) {
            prod *= fg(s, s);
            for (std::size_t t = 0; t < n; ++t)
                if (s != t && !fg(s, t).is_zero()) fail(diag, at);
        }
        if (prod != RatFunc(matrix_det(sm.gram))) fail(diag, at);
    }
    std::string suffix = where.empty() ? "" : " (first failure at " + where + ")";
    cert.add("idempotents orthogonal and complete", "holds", idem ? "holds" : "fails" + suffix, idem);
    cert.add("JM diagonal on seminormal vectors", "holds", jm ? "holds" : "fails" + suffix, jm);
    cert.add("seminormal transition unitriangular", "holds", tri ? "holds" : "fails" + suffix, tri);
    cert.add("seminormal Gram diagonal with Murphy determinant", "holds", diag ? "holds" : "fails" + suffix, diag);
    return cert;
}

Certificate specialize_quotient(const MurphyBasis& b, Flavor f, int N)
{
    Certificate cert;
    if (f == Flavor::symmetric) return cert;
    long d0 = flavor_delta(f, N);
    bool orth = f == Flavor::orthogonal;
    auto collisions = residue_collisions(b.r(), d0, N, orth);
    if (!collisions.empty()) {
        std::ostringstream os;
        os << "seminormal specialization skipped: " << collisions.size() << " residue collision(s) up to level "
           << b.r() << ", first " << collisions.front().a.str() << " vs " << collisions.front().b.str() << " after "
           << collisions.front().prefix.back().str() << " with content " << collisions.front().content;
        cert.notes.push_back(os.str());
        return cert;
    }

    bool evaluable = true, norms = true, units = true, rank_ok = true;
    std::ostringstream ranks;
    std::string where;
    auto fail = [&](bool& flag, const std::string& what) {
        if (flag && where.empty()) where = what;
        flag = false;
    };
    Rat x0(d0);
    for (int vi = 0; vi < int(b.vertices().size()); ++vi) {
        const auto& paths = b.paths(vi);
        std::vector<std::size_t> good;
        for (std::size_t t = 0; t < paths.size(); ++t)
            if (flavor_path_permissible(paths[t], f, N)) good.push_back(t);
        if (good.empty()) continue;
        std::string at = b.vertices()[vi].str();
        auto sm = gz_idempotents(b, vi);
        std::size_t n = paths.size();
        ExactMatrix<Rat> G0 = sm.gram.map([d0](const PolyZ& p) { return Rat(specialize(p, d0)); });

        std::vector<ExactMatrix<Rat>> F0(n);
        std::vector<Rat> g0(n);
        bool ok = true;
        for (auto t : good) {
            auto m = eval_matrix(sm.F[t], x0);
            auto g = sm.gamma[t].eval(x0);
            if (!m || !g) {
                fail(evaluable, at);
                ok = false;
                continue;
            }
            if (*g == 0) {
                fail(norms, at);
                ok = false;
            }
            F0[t] = *m;
            g0[t] = *g;
        }
        if (!ok) continue;

        // E_uv = F_u m_uv F_v / γ_v, where m_uv acts by e_t -> G[t][u] e_v
        auto unit = [&](std::size_t u, std::size_t v) {
            ExactMatrix<Rat> M(n, n);
            for (std::size_t t = 0; t < n; ++t) M(t, v) = G0(t, u);
            return (F0[u] * M * F0[v]).scaled(Rat(1) / g0[v]);
        };
        std::vector<std::vector<ExactMatrix<Rat>>> E(n, std::vector<ExactMatrix<Rat>>(n));
        for (auto u : good)
            for (auto v : good) E[u][v] = unit(u, v);
        ExactMatrix<Rat> sum(n, n);
        for (auto u : good) {
            sum = sum + E[u][u];
            for (auto v : good)
                for (auto w : good)
                    for (auto x : good) {
                        ExactMatrix<Rat> prod = E[u][v] * E[w][x];
                        if (v == w ? prod != E[u][x] : !prod.is_zero_matrix()) fail(units, at);
                    }
        }
        // on the quotient by the radical the units sum to the identity
        if (!((sum - ExactMatrix<Rat>::identity(n)) * G0).is_zero_matrix()) fail(units, at);

        ExactMatrix<Rat> fperm(good.size(), n);
        for (std::size_t i = 0; i < good.size(); ++i) {
            RatMatrix row(1, n);
            for (std::size_t v = 0; v < n; ++v) row(0, v) = sm.f(good[i], v);
            auto row0 = eval_matrix(row, x0);
            for (std::size_t v = 0; v < n; ++v) fperm(i, v) = (*row0)(0, v);
        }
        std::size_t rank = matrix_rank(fperm * G0 * fperm.transpose());
        if (rank != good.size()) fail(rank_ok, at);
        ranks << (ranks.tellp() ? " " : "") << at << ":" << rank << "/" << good.size();
    }
    std::string suffix = where.empty() ? "" : " (first failure at " + where + ")";
    cert.add("idempotents evaluable on permissible paths", "holds", evaluable ? "holds" : "fails" + suffix, evaluable);
    cert.add("seminormal norms nonzero at delta_0", "holds", norms ? "holds" : "fails" + suffix, norms);
    cert.add("quotient matrix units", "holds", units ? "holds" : "fails" + suffix, units);
    cert.add("quotient seminormal Gram rank", "rank = permissible paths", ranks.str(), rank_ok);
    return cert;
}

}  // namespace brauer
