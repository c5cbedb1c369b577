// One line per acceptance criterion. Exit status is nonzero if any fails.

#include "brauer/seminormal.hpp"
#include "brauer/sft.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

using namespace brauer;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    void fail(const std::string& what)
    {
        if (pass) detail = what;
        pass = false;
    }
};

using Elem = Element<PolyZ>;
Elem E(const Diagram& d) { return Elem(d, PolyZ(1)); }

std::string key(Flavor f, int N, int r)
{
    return std::string(flavor_name(f)) + " N=" + std::to_string(N) + " r=" + std::to_string(r);
}

// criterion grids
struct Grid {
    Flavor f;
    int N, max_r;
};
const std::vector<Grid> kSftGrid{{Flavor::symplectic, 1, 5},
                                 {Flavor::symplectic, 2, 4},
                                 {Flavor::orthogonal, 2, 4},
                                 {Flavor::orthogonal, 3, 3},
                                 {Flavor::symmetric, 2, 4}};

constexpr std::size_t kCap = 65536;

long image_rank_of(Flavor f, int N, int r, long p = 0)
{
    return dims_table(f, N, r, r, kCap, p, 4).back().image_rank;
}

Outcome c1()
{
    Outcome o;
    auto alg = generic_algebra();
    PolyZ d = PolyZ::x();
    for (int r = 2; r <= 5; ++r)
        for (int i = 1; i < r; ++i) {
            auto e = E(Diagram::e(r, i)), s = E(Diagram::s(r, i));
            if (alg.mult(e, e) != e.scaled(d)) o.fail("e^2 at r=" + std::to_string(r));
            if (alg.mult(s, s) != Elem::one(r)) o.fail("s^2 at r=" + std::to_string(r));
            if (alg.mult(s, e) != e || alg.mult(e, s) != e) o.fail("se at r=" + std::to_string(r));
            for (int j = 1; j < r; ++j) {
                auto ej = E(Diagram::e(r, j)), sj = E(Diagram::s(r, j));
                if (std::abs(i - j) == 1) {
                    if (alg.product({e, ej, e}, r) != e) o.fail("eee");
                    if (alg.product({s, sj, s}, r) != alg.product({sj, s, sj}, r)) o.fail("braid");
                    if (alg.product({s, ej, e}, r) != alg.product({sj, e}, r)) o.fail("s e e");
                } else if (std::abs(i - j) > 1) {
                    if (alg.mult(e, ej) != alg.mult(ej, e) || alg.mult(s, sj) != alg.mult(sj, s) ||
                        alg.mult(s, ej) != alg.mult(ej, s))
                        o.fail("commuting");
                }
            }
        }
    // the product against strand walking, every pair at r = 3
    for (auto& a : all_diagrams(3))
        for (auto& b : all_diagrams(3)) {
            auto [ab, loops] = diagram_mult(a, b);
            auto [pairs, l2] = oracle::stack(3, a.pairs(), b.pairs());
            if (ab.pairs() != pairs || loops != l2) o.fail("product at r=3");
        }
    std::ostringstream os;
    for (int r = 1; r <= 6; ++r) {
        long n = long(all_diagrams(r).size());
        if (n != oracle::count_matchings(2 * r)) o.fail("count at r=" + std::to_string(r));
        os << (r > 1 ? "," : "") << n;
    }
    if (o.pass) o.detail = "relations r<=5, |B_r| = " + os.str();
    return o;
}

Outcome c2()
{
    Outcome o;
    long n = 0;
    for (int r = 1; r <= 5; ++r)
        for (auto& d : all_diagrams(r)) {
            ++n;
            int expect = (d.corank() + d.length()) % 2 ? -1 : 1;
            if (d.sign() != expect) o.fail("at " + d.str());
        }
    if (o.pass) o.detail = std::to_string(n) + " diagrams";
    return o;
}

Outcome c3()
{
    Outcome o;
    for (bool dual : {false, true}) {
        for (int r = 1; r <= 5; ++r) {
            MurphyBasis b(r, BasisKind{true, dual});
            PolyZ det = b.transition_det();
            if (det != PolyZ(1) && det != PolyZ(-1)) o.fail("det " + det.str() + " at r=" + std::to_string(r));
            auto blocks = b.corank_blocks();
            for (std::size_t i = 0; i < b.size(); ++i)
                for (auto& [code, c] : b.element(int(i)).terms())
                    if (Diagram::from_code(r, code).corank() != blocks[i]) o.fail("block at r=" + std::to_string(r));
        }
        BasisKind kind{true, dual};
        auto alg = generic_algebra();
        for (int k = 0; k < 5; ++k)
            for (auto& from : vertices_at_level(k, kind.graph()))
                for (auto& to : successors(from, kind.graph())) {
                    int r = k + 1;
                    auto [d, u] = edge_factors(from, to, kind, r);
                    Elem lhs = alg.mult(cell_generator(to, kind, r), d);
                    Elem rhs = alg.mult(u.star(), k == 0 ? Elem::one(r) : cell_generator(from, kind, k).embed(r));
                    if (lhs != rhs) o.fail("edge " + from.str() + " -> " + to.str());
                }
    }
    if (o.pass) o.detail = "det = +-1 and corank blocks r<=5, compatibility to level 5, both flavors";
    return o;
}

Outcome c4()
{
    Outcome o;
    for (int r = 1; r <= 3; ++r)
        for (int it = 0; it < 50; ++it) {
            std::vector<std::vector<Int>> a(2 * r, std::vector<Int>(2 * r));
            for (int i = 0; i < 2 * r; ++i)
                for (int j = i + 1; j < 2 * r; ++j) {
                    a[i][j] = oracle::rand_int(-5, 5);
                    a[j][i] = -a[i][j];
                }
            // sigma_D in block order differs from the usual Pfaffian by (-1)^{r(r-1)/2}
            int block = (r * (r - 1) / 2) % 2 ? -1 : 1;
            if (diagram_pfaffian(a) != block * oracle::recursive_pfaffian(a)) o.fail("Pfaffian at r=" + std::to_string(r));
        }
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; a + b <= 3; ++b) {
            int r = a + b;
            if (!r) continue;
            for (int it = 0; it < 50; ++it) {
                std::vector<std::vector<Int>> w(2 * r, std::vector<Int>(2 * r));
                for (int i = 0; i < 2 * r; ++i)
                    for (int j = i; j < 2 * r; ++j) w[i][j] = w[j][i] = oracle::rand_int(-5, 5);
                std::vector<int> xs, ys;
                for (int i = 0; i < a; ++i) xs.push_back(i);
                for (int i = r + a; i < 2 * r; ++i) xs.push_back(i);
                for (int i = r; i < r + a; ++i) ys.push_back(i);
                for (int i = a; i < r; ++i) ys.push_back(i);
                std::vector<std::vector<Int>> m(r, std::vector<Int>(r));
                for (int i = 0; i < r; ++i)
                    for (int j = 0; j < r; ++j) m[i][j] = w[xs[i]][ys[j]];
                if (walled_minor(a, b, w) != oracle::cofactor_det(m))
                    o.fail("walled (" + std::to_string(a) + "," + std::to_string(b) + ")");
            }
        }
    if (o.pass) o.detail = "Pfaffian r<=3 and walled minors a+b<=3, 50 samples each";
    return o;
}

Outcome c5()
{
    Outcome o;
    std::ostringstream os;
    for (int N = 1; N <= 2; ++N) {
        TensorRep rep(Flavor::symplectic, N, N + 1, kCap);
        if (!rep.in_kernel(specialize_element(diagram_sum(N + 1), -2 * N))) o.fail("b at N=" + std::to_string(N));
        os << " b_" << N + 1;
    }
    for (int N = 1; N <= 3; ++N) {
        long dim = 1;
        for (int k = 0; k <= N; ++k) dim *= N;
        if (std::size_t(dim) > kCap) continue;
        TensorRep rep(Flavor::orthogonal, N, N + 1, kCap);
        for (int a = 0; a <= N + 1; ++a) {
            if (!rep.in_kernel(specialize_element(walled_sum(a, N + 1 - a), N)))
                o.fail("d_{" + std::to_string(a) + "," + std::to_string(N + 1 - a) + "}");
            os << " d_" << a << "," << N + 1 - a;
        }
    }
    if (o.pass) o.detail = "zero images:" + os.str();
    return o;
}

Outcome c6()
{
    Outcome o;
    std::ostringstream os;
    for (auto& g : kSftGrid) {
        auto rows = dims_table(g.f, g.N, g.max_r, g.max_r, kCap, 0, 4);
        os << " " << flavor_name(g.f) << g.N << ":";
        for (auto& row : rows) {
            if (row.image_rank != row.permissible_sum) o.fail(key(g.f, g.N, row.r));
            os << (row.r > 1 ? "," : "") << row.image_rank;
        }
    }
    // pinned values
    auto sp1 = dims_table(Flavor::symplectic, 1, 5, 5, kCap, 0, 4);
    std::vector<long> catalan{1, 2, 5, 14, 42};
    for (int r = 1; r <= 5; ++r)
        if (sp1[r - 1].image_rank != catalan[r - 1]) o.fail("Catalan at r=" + std::to_string(r));
    auto sym = dims_table(Flavor::symmetric, 2, 4, 4, kCap, 0, 4);
    std::vector<long> avoiding{1, 2, 5, 14};
    for (int r = 1; r <= 4; ++r)
        if (sym[r - 1].image_rank != avoiding[r - 1]) o.fail("symmetric N=2 at r=" + std::to_string(r));
    if (o.pass) o.detail = "rank = sum of squares;" + os.str();
    return o;
}

Outcome c7()
{
    Outcome o;
    int runs = 0;
    for (auto& g : kSftGrid)
        for (int r = 1; r <= g.max_r; ++r) {
            CertifyOptions opt;
            opt.jobs = 4;
            auto cert = certify_sft(g.f, g.N, r, opt);
            ++runs;
            for (auto& ch : cert.checks)
                if (!ch.pass) o.fail(key(g.f, g.N, r) + ": " + ch.name + " got " + ch.got);
        }
    if (o.pass) o.detail = std::to_string(runs) + " certificates passed";
    return o;
}

Outcome c8()
{
    Outcome o;
    struct Case {
        Flavor f;
        int N, r;
    };
    std::vector<Case> cases{{Flavor::symplectic, 1, 2}, {Flavor::symplectic, 1, 3}, {Flavor::symplectic, 1, 4},
                            {Flavor::orthogonal, 2, 3}, {Flavor::orthogonal, 2, 4}, {Flavor::symmetric, 2, 3},
                            {Flavor::symmetric, 2, 4}};
    std::ostringstream os;
    for (auto& c : cases) {
        long dim = c.f == Flavor::symmetric ? long(all_perms(c.r).size()) : long(all_diagrams(c.r).size());
        long ker = dim - image_rank_of(c.f, c.N, c.r);
        long d0 = c.f == Flavor::symmetric ? 0 : flavor_delta(c.f, c.N);
        long got = long(ideal_rank(ideal_generators(c.f, c.N, c.r), c.r, d0, SIZE_MAX, c.f == Flavor::symmetric));
        if (got != ker) o.fail(key(c.f, c.N, c.r) + ": " + std::to_string(got) + " vs " + std::to_string(ker));
        os << " " << got;
    }
    if (o.pass) o.detail = "ideal rank = dim ker:" + os.str();
    return o;
}

Outcome c9()
{
    Outcome o;
    int n = 0;
    for (Flavor f : {Flavor::symplectic, Flavor::orthogonal})
        for (int N = 1; N <= 2; ++N)
            for (int r = 1; r <= 4; ++r) {
                long q = image_rank_of(f, N, r);
                for (long p : {2L, 3L, 5L, 7L}) {
                    if (p == 2 && f == Flavor::orthogonal) continue;
                    ++n;
                    long got = image_rank_of(f, N, r, p);
                    if (got != q) o.fail(key(f, N, r) + " p=" + std::to_string(p));
                }
            }
    if (o.pass) o.detail = std::to_string(n) + " ranks over F_p agree with Q";
    return o;
}

Outcome c10()
{
    Outcome o;
    for (int r = 1; r <= 4; ++r)
        for (BasisKind kind : {BasisKind{true, false}, BasisKind{true, true}, BasisKind{false, false}}) {
            MurphyBasis b(r, kind);
            for (auto& ch : seminormal_checks(b).checks)
                if (!ch.pass) o.fail(kind.name() + " r=" + std::to_string(r) + ": " + ch.name);
            if (kind.brauer && !kind.dual)
                for (int N = 1; N <= 2; ++N) {
                    auto c = specialize_quotient(b, Flavor::symplectic, N);
                    if (c.checks.empty()) o.fail("specialization skipped at N=" + std::to_string(N));
                    for (auto& ch : c.checks)
                        if (!ch.pass) o.fail(key(Flavor::symplectic, N, r) + ": " + ch.name);
                }
        }
    if (o.pass) o.detail = "generic r<=4, specialized symplectic N<=2 r<=4";
    return o;
}

}  // namespace

int main()
{
    std::vector<std::function<Outcome()>> criteria{c1, c2, c3, c4, c5, c6, c7, c8, c9, c10};
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i]();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("criterion %2zu: %s  %s  (%.2fs)\n", i + 1, o.pass ? "PASS" : "FAIL", o.detail.c_str(), s);
        std::fflush(stdout);
        failed += !o.pass;
    }
    return failed ? 1 : 0;
}
