#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "brauer/arith.hpp"
#include "brauer/matrix.hpp"
#include "oracles.hpp"

using namespace brauer;

namespace {

PolyZ random_poly()
{
    PolyZ p;
    int deg = oracle::rand_int(0, 3);
    for (int e = 0; e <= deg; ++e) p += PolyZ::monomial(Int(oracle::rand_int(-4, 4)), unsigned(e));
    return p;
}

RatFunc random_ratfunc()
{
    PolyZ den = random_poly();
    if (den.is_zero()) den = PolyZ(1);
    return RatFunc(to_polyq(random_poly()), to_polyq(den));
}

bool coprime(const RatFunc& f)
{
    PolyQ g = poly_gcd(f.num(), f.den());
    return f.num().is_zero() ? f.den() == PolyQ(1) : g == PolyQ(1);
}

}  // namespace

TEST_CASE("poly_eval")
{
    PolyZ d = PolyZ::x();
    CHECK(poly_eval(d * d + PolyZ(1), Int(-2)) == 5);
    CHECK(poly_eval(PolyZ(), Int(7)) == 0);
    for (long N = 1; N <= 4; ++N) CHECK(poly_eval(d + PolyZ(2 * N), Int(-2 * N)) == 0);
}

TEST_CASE("ratfunc_eval")
{
    PolyQ d = PolyQ::x();
    auto f = RatFunc(PolyQ(1), d + PolyQ(2));
    CHECK_FALSE(ratfunc_eval(f, Rat(-2)).has_value());

    // (d^2-4)/(d-2) reduces to d+2 on construction
    auto g = RatFunc(d * d - PolyQ(4), d - PolyQ(2));
    CHECK(g.den() == PolyQ(1));
    REQUIRE(ratfunc_eval(g, Rat(2)).has_value());
    CHECK(*ratfunc_eval(g, Rat(2)) == 4);

    CHECK(*ratfunc_eval(RatFunc(d), Rat(3)) == 3);
}

TEST_CASE("ring axioms on random polynomials")
{
    for (int it = 0; it < 200; ++it) {
        PolyZ a = random_poly(), b = random_poly(), c = random_poly();
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a - a == PolyZ());
        Int x(oracle::rand_int(-5, 5));
        CHECK(poly_eval(a * b, x) == poly_eval(a, x) * poly_eval(b, x));
    }
}

TEST_CASE("ring axioms and canonical form for rational functions")
{
    for (int it = 0; it < 100; ++it) {
        RatFunc a = random_ratfunc(), b = random_ratfunc(), c = random_ratfunc();
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) + c == a + (b + c));
        CHECK(coprime(a + b));
        CHECK(coprime(a * b));
        CHECK(coprime(a - c));
        if (!b.is_zero()) {
            CHECK((a / b) * b == a);
            CHECK(coprime(a / b));
        }
        CHECK(a.den().lead() == 1);
    }
}

TEST_CASE("Fp arithmetic")
{
    Fp a(3, 7), b(5, 7);
    CHECK(a * b == Fp(1, 7));
    CHECK(a / b == Fp(2, 7));  // 3 * 5^-1 = 3 * 3
    CHECK(a - b == Fp(5, 7));
    CHECK(Fp(14, 7).is_zero());
}

TEST_CASE("matrix_rank")
{
    CHECK(matrix_rank(ExactMatrix<Int>::identity(2)) == 2);
    ExactMatrix<Int> m(2, 2);
    m(0, 0) = 1, m(0, 1) = 2, m(1, 0) = 2, m(1, 1) = 4;
    CHECK(matrix_rank(m) == 1);
    ExactMatrix<PolyZ> g(1, 1);
    g(0, 0) = PolyZ::x();
    CHECK(matrix_rank(g) == 1);
}

TEST_CASE("matrix_det")
{
    CHECK(matrix_det(ExactMatrix<Int>::identity(3)) == 1);
    ExactMatrix<PolyZ> m(2, 2);
    m(0, 0) = PolyZ::x(), m(1, 1) = PolyZ(1);
    CHECK(matrix_det(m) == PolyZ::x());
    CHECK_THROWS(matrix_det(ExactMatrix<Int>(2, 3)));
}

TEST_CASE("rank is transpose invariant and det matches cofactor expansion")
{
    for (int it = 0; it < 200; ++it) {
        int rows = oracle::rand_int(1, 5), cols = oracle::rand_int(1, 5);
        ExactMatrix<Int> m(rows, cols);
        bool sparse = it % 2;
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m(i, j) = sparse && oracle::rand_int(0, 2) ? 0 : oracle::rand_int(-3, 3);
        CHECK(matrix_rank(m) == matrix_rank(m.transpose()));

        int n = oracle::rand_int(1, 4);
        ExactMatrix<Int> s(n, n);
        std::vector<std::vector<Int>> raw(n, std::vector<Int>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) raw[i][j] = s(i, j) = sparse && oracle::rand_int(0, 2) ? 0 : oracle::rand_int(-3, 3);
        CHECK(matrix_det(s) == oracle::cofactor_det(raw));
    }
}

TEST_CASE("rank and det over Q(d) and Fp")
{
    ExactMatrix<RatFunc> m(2, 2);
    PolyQ d = PolyQ::x();
    m(0, 0) = RatFunc(PolyQ(1), d), m(0, 1) = RatFunc(PolyQ(1));
    m(1, 0) = RatFunc(PolyQ(1)), m(1, 1) = RatFunc(d);
    CHECK(matrix_rank(m) == 1);  // (1/d) d - 1 = 0
    CHECK(matrix_det(m) == RatFunc(PolyQ(0)));
    m(1, 1) = RatFunc(PolyQ(2) * d);
    CHECK(matrix_det(m) == RatFunc(PolyQ(1)));

    ExactMatrix<Fp> f(2, 2);
    f(0, 0) = Fp(1, 3), f(0, 1) = Fp(2, 3), f(1, 0) = Fp(2, 3), f(1, 1) = Fp(1, 3);
    CHECK(matrix_rank(f) == 1);  // det = -3
}

TEST_CASE("sparse echelon agrees with dense rank")
{
    for (int it = 0; it < 100; ++it) {
        int rows = oracle::rand_int(1, 6), cols = oracle::rand_int(1, 6);
        ExactMatrix<Int> m(rows, cols);
        Echelon<Int> ez;
        Echelon<Fp> e5;
        for (int i = 0; i < rows; ++i) {
            SparseVec<Int> v;
            SparseVec<Fp> w;
            for (int j = 0; j < cols; ++j) {
                int x = oracle::rand_int(0, 1) ? oracle::rand_int(-6, 6) : 0;
                m(i, j) = x;
                if (x) v.emplace_back(j, Int(x));
                if (x % 5) w.emplace_back(j, Fp(x, 5));
            }
            ez.add(v);
            e5.add(w);
        }
        CHECK(ez.rank() == matrix_rank(m));
        auto mp = m.map([](const Int& x) { return Fp(x.get_si(), 5); });
        CHECK(e5.rank() == matrix_rank(mp));
    }
}
