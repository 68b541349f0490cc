#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "mackey/burnside.hpp"

using namespace mackey;

namespace {

// independent oracle: integer basis of {A : P_b A = A P_a} via the kernel of
// the commuting-constraint linear system
long equivariant_rank(long a, long b) {
    IntMatrix sys(a * b, a * b);  // rows: constraints, cols: entries of A (row-major)
    long row = 0;
    for (long r = 0; r < b; ++r)
        for (long c = 0; c < a; ++c) {
            // (P_b A)[r][c] = A[(r-1) mod b][c],  (A P_a)[r][c] = A[r][(c-1) mod a]
            sys.at(row, ((r - 1 + b) % b) * a + c) += 1;
            sys.at(row, r * a + (c - 1 + a) % a) -= 1;
            ++row;
        }
    return kernel_lattice(sys).cols();
}

BzMor random_mor(std::mt19937& rng, long n, long a, long b) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::vector<Int> c(static_cast<size_t>(std::gcd(a, b)));
    for (auto& x : c) x = coeff(rng);
    return from_span_coefficients(n, a, b, c);
}

}  // namespace

TEST_CASE("generators and the index relations") {
    // over C_6: t has order 6 on Theta_6
    CHECK(generator_R_t(6, 6, 6).mat.isIdentity());

    // R_t(Theta_d, i) = I_t applied to t^{d-i}: Rt = I(t^{-1})
    for (long d : {2L, 3L, 6L})
        for (long i = 0; i < d; ++i)
            CHECK(generator_R_t(6, d, i).mat == dual(generator_R_t(6, d, (d - i) % d)).mat);

    // Rp ∘ Rt = Rp and Rt ∘ Ip = Ip for the projection to the point
    for (long l : {2L, 3L, 5L}) {
        BzMor rp = generator_R_proj(l, l, 1);
        BzMor ip = generator_I_proj(l, l, 1);
        BzMor rt = generator_R_t(l, l, 1);
        CHECK(compose(rp, rt) == rp);
        CHECK(compose(rt, ip) == ip);
        // p^* ∘ p_* = 1 + t + ... + t^{l-1} on the free orbit
        IntMatrix norm(l, l);
        for (long i = 0; i < l; ++i)
            for (long j = 0; j < l; ++j) norm.at(i, j) = 1;
        CHECK(compose(ip, rp).mat == norm);
        // p_* ∘ p^* = l on the point
        CHECK(compose(rp, ip).mat.at(0, 0) == l);
    }

    CHECK_THROWS_AS(generator_R_proj(6, 2, 4), MackeyError);
}

TEST_CASE("hom basis has rank (a,b) and spans the equivariant maps") {
    CHECK(hom_basis(1, 1, 1).size() == 1);
    CHECK(hom_basis(1, 1, 1)[0].mat.isIdentity());
    CHECK(hom_basis(6, 2, 3).size() == 1);
    CHECK(hom_basis(12, 6, 4).size() == 2);

    for (long n : {12L, 45L, 60L})
        for (long a : divisors(n))
            for (long b : divisors(n)) {
                auto basis = hom_basis(n, a, b);
                CHECK(static_cast<long>(basis.size()) == std::gcd(a, b));
                CHECK(equivariant_rank(a, b) == std::gcd(a, b));
                for (const auto& e : basis) CHECK(is_equivariant(e.src, e.dst, e.mat));
                // basis elements have unimodular span-coefficient decomposition
                for (size_t i = 0; i < basis.size(); ++i) {
                    auto c = span_coefficients(basis[i].mat, a, b);
                    for (size_t j = 0; j < c.size(); ++j) CHECK(c[j] == (i == j ? 1 : 0));
                }
            }
}

TEST_CASE("every basis element factors through the lcm orbit") {
    for (long n : {12L, 30L})
        for (long a : divisors(n))
            for (long b : divisors(n)) {
                const long L = std::lcm(a, b);
                for (long i = 0; i < std::gcd(a, b); ++i) {
                    BzMor factored = compose(generator_R_proj(n, L, b),
                                             compose(generator_R_t(n, L, i), generator_I_proj(n, L, a)));
                    CHECK(factored.mat == span_basis_matrix(a, b, i));
                }
            }
}

TEST_CASE("composition is associative and bilinear; dual is an involution") {
    std::mt19937 rng(99);
    const long n = 12;
    auto divs = divisors(n);
    std::uniform_int_distribution<size_t> pick(0, divs.size() - 1);
    for (int trial = 0; trial < 40; ++trial) {
        long a = divs[pick(rng)], b = divs[pick(rng)], c = divs[pick(rng)], d = divs[pick(rng)];
        BzMor f = random_mor(rng, n, a, b), g = random_mor(rng, n, b, c), h = random_mor(rng, n, c, d);
        CHECK(compose(h, compose(g, f)) == compose(compose(h, g), f));
        BzMor g2 = random_mor(rng, n, b, c);
        CHECK(compose(add(g, g2), f) == add(compose(g, f), compose(g2, f)));
        CHECK(dual(dual(f)) == f);
        CHECK(dual(compose(g, f)) == compose(dual(f), dual(g)));
    }
    CHECK(dual(generator_R_proj(12, 6, 2)) == generator_I_proj(12, 6, 2));
    CHECK_THROWS_AS(compose(random_mor(rng, n, 2, 3), random_mor(rng, n, 2, 2)), MackeyError);
}

TEST_CASE("orbit product decomposition") {
    // Theta_2 x Theta_3 over C_6 is one copy of Theta_6
    ProductDecomp p23 = product_decompose(GSet::orbit(6, 2), GSet::orbit(6, 3));
    CHECK(p23.prod.orbits == std::vector<long>{6});

    // Theta_6 x Theta_6 over C_6: enumerate the 36 points and their t-orbits
    ProductDecomp p66 = product_decompose(GSet::orbit(6, 6), GSet::orbit(6, 6));
    CHECK(p66.prod.orbits == std::vector<long>(6, 6));

    // Theta_4 x Theta_6 over C_12 gives 2 copies of Theta_12
    ProductDecomp p46 = product_decompose(GSet::orbit(12, 4), GSet::orbit(12, 6));
    CHECK(p46.prod.orbits == std::vector<long>(2, 12));

    // the union of embeddings is a bijection onto the product grid
    for (auto [a, b] : std::vector<std::pair<long, long>>{{4, 6}, {12, 12}, {1, 12}, {6, 6}}) {
        ProductDecomp pd = product_decompose(GSet::orbit(12, a), GSet::orbit(12, b));
        CHECK(pd.prod.points() == a * b);
        CHECK((pd.fromPairs * pd.toPairs).isIdentity());
        CHECK((pd.toPairs * pd.fromPairs).isIdentity());
        // each embedded copy is t-equivariant: pair (x mod a, (x+i) mod b)
        for (size_t t = 0; t < pd.recs.size(); ++t) {
            const auto& rec = pd.recs[t];
            for (long j = 0; j < rec.d; ++j) {
                long pair = 0;
                for (long p = 0; p < pd.toPairs.rows(); ++p)
                    if (pd.toPairs.at(p, pd.prod.orbitOffset(static_cast<long>(t)) + j) == 1) pair = p;
                CHECK(pair == pd.pairPoint(j % a, (j + rec.i) % b));
            }
        }
    }
}

TEST_CASE("product morphisms respect composition") {
    std::mt19937 rng(5);
    const long n = 12;
    BzMor f = random_mor(rng, n, 4, 6), g = random_mor(rng, n, 6, 12);
    BzMor u = random_mor(rng, n, 3, 2), v = random_mor(rng, n, 2, 4);
    ProductDecomp p43 = product_decompose(GSet::orbit(n, 4), GSet::orbit(n, 3));
    ProductDecomp p62 = product_decompose(GSet::orbit(n, 6), GSet::orbit(n, 2));
    ProductDecomp p124 = product_decompose(GSet::orbit(n, 12), GSet::orbit(n, 4));
    BzMor fu = product_mor(p43, p62, f, u);
    BzMor gv = product_mor(p62, p124, g, v);
    CHECK(compose(gv, fu) == product_mor(p43, p124, compose(g, f), compose(v, u)));
}

TEST_CASE("adjoint shuffle") {
    const long n = 12;
    std::mt19937 rng(11);
    GSet A = GSet::orbit(n, 6), B = GSet::orbit(n, 4), X = GSet::orbit(n, 12);
    ProductDecomp pdAB = product_decompose(A, B);
    ProductDecomp pdAX = product_decompose(A, X);
    // build a random morphism X -> A x B from span coefficients blockwise
    IntMatrix m(pdAB.prod.points(), X.points());
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (size_t t = 0; t < pdAB.recs.size(); ++t) {
        long d = pdAB.recs[t].d, off = pdAB.prod.orbitOffset(static_cast<long>(t));
        std::vector<Int> c(static_cast<size_t>(std::gcd(12L, d)));
        for (auto& x : c) x = coeff(rng);
        IntMatrix blk = from_span_coefficients(n, 12, d, c).mat;
        for (long r = 0; r < d; ++r)
            for (long s = 0; s < 12; ++s) m.at(off + r, s) = blk.at(r, s);
    }
    BzMor T(X, pdAB.prod, m);
    BzMor hat = adjoint_shuffle(pdAB, pdAX, T, B);
    CHECK(is_equivariant(hat.src, hat.dst, hat.mat));
    // shuffling is a bijection on matrix entries
    IntMatrix grid = pdAB.toPairs * T.mat;
    IntMatrix grid2 = hat.mat * pdAX.fromPairs;
    for (long pa = 0; pa < A.points(); ++pa)
        for (long pb = 0; pb < B.points(); ++pb)
            for (long px = 0; px < X.points(); ++px)
                CHECK(grid.at(pa * B.points() + pb, px) == grid2.at(pb, pa * X.points() + px));
}
