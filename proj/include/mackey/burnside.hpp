#pragma once

#include "mackey/divisors.hpp"
#include "mackey/intmat.hpp"

namespace mackey {

// Finite C_n-set presented as an ordered list of orbits; the orbit of size d
// is Theta_d = C_n/C_{n/d} with point basis (e, t, t^2, ...) * C_{n/d}, so the
// generator acts on point indices as j -> j+1 (mod d).
struct GSet {
    long n = 1;
    std::vector<long> orbits;

    GSet() = default;
    GSet(long n_, std::vector<long> orbits_);
    static GSet orbit(long n, long d) { return GSet(n, {d}); }
    static GSet point(long n) { return GSet(n, {1}); }
    static GSet empty(long n) { return GSet(n, {}); }

    long points() const;
    long orbitOffset(long k) const;  // index of the first point of orbit k
    bool operator==(const GSet& o) const { return n == o.n && orbits == o.orbits; }
    bool operator!=(const GSet& o) const { return !(*this == o); }
    GSet disjointUnion(const GSet& o) const;
    std::string toString() const;
};

// Morphism in the linearized Burnside category: an equivariant homomorphism
// of permutation modules Z<src> -> Z<dst>, stored as the full integer matrix
// on the point bases (dst.points() x src.points()).
struct BzMor {
    GSet src, dst;
    IntMatrix mat;

    BzMor() = default;
    BzMor(GSet s, GSet d, IntMatrix m, bool check = true);

    static BzMor zero(const GSet& s, const GSet& d);
    static BzMor identity(const GSet& s);

    bool operator==(const BzMor& o) const { return src == o.src && dst == o.dst && mat == o.mat; }
};

bool is_equivariant(const GSet& src, const GSet& dst, const IntMatrix& m);

// R of the canonical projection p: Theta_a -> Theta_b (b | a): point relabeling.
BzMor generator_R_proj(long n, long a, long b);
// I of the same projection, a morphism Theta_b -> Theta_a: sum over fibers.
BzMor generator_I_proj(long n, long a, long b);
// R of the rotation t^i on Theta_d.
BzMor generator_R_t(long n, long d, long i);

BzMor compose(const BzMor& g, const BzMor& f);
BzMor dual(const BzMor& f);  // transpose; D(Rf) = If
BzMor add(const BzMor& f, const BzMor& g);
BzMor sub(const BzMor& f, const BzMor& g);
BzMor negate(const BzMor& f);

// Basis element i of BZ(Theta_a, Theta_b): the span through Theta_[a,b]
// projecting to Theta_b and projecting-after-t^i to Theta_a.  Its matrix is
// R(p_b) . R(t)^i . I(p_a), explicitly [r][s] = 1 iff r-s ≡ i mod (a,b).
struct SpanBasisElement {
    long a, b, i;
};
IntMatrix span_basis_matrix(long a, long b, long i);
std::vector<BzMor> hom_basis(long n, long a, long b);

// Coefficients of an equivariant block Theta_a -> Theta_b in the span basis;
// throws if the matrix is not in the span of the basis (not equivariant).
std::vector<Int> span_coefficients(const IntMatrix& block, long a, long b);
BzMor from_span_coefficients(long n, long a, long b, const std::vector<Int>& c);

// Orbit decomposition of a product: A x B = ⊔_{(k,m)} ⊔_{i<(a_k,b_m)} Theta_[a_k,b_m],
// where copy i of Theta_[a,b] embeds by x -> (x, t^i x).
struct ProductDecomp {
    struct OrbitRec {
        long k, m, i, d;
    };
    GSet left, right, prod;
    std::vector<OrbitRec> recs;
    IntMatrix toPairs;    // pair-grid coords <- prod orbit coords (permutation)
    IntMatrix fromPairs;  // inverse

    long pairPoint(long pl, long pr) const { return pl * right.points() + pr; }
};

ProductDecomp product_decompose(const GSet& a, const GSet& b);

// f x g as a morphism between decomposed products.
BzMor product_mor(const ProductDecomp& src, const ProductDecomp& dst, const BzMor& f, const BzMor& g);

// Adjunction BZ(X, A x B) ≅ BZ(A x X, B) by index shuffling.
BzMor adjoint_shuffle(const ProductDecomp& pdAB, const ProductDecomp& pdAX, const BzMor& t, const GSet& b);

}  // namespace mackey
