#include "mackey/burnside.hpp"

#include <numeric>
#include <sstream>

namespace mackey {

GSet::GSet(long n_, std::vector<long> orbits_) : n(n_), orbits(std::move(orbits_)) {
    for (long d : orbits)
        if (!divides(d, n)) throw MackeyError("GSet: orbit size must divide n");
}

long GSet::points() const { return std::accumulate(orbits.begin(), orbits.end(), 0L); }

long GSet::orbitOffset(long k) const {
    long off = 0;
    for (long j = 0; j < k; ++j) off += orbits[static_cast<size_t>(j)];
    return off;
}

GSet GSet::disjointUnion(const GSet& o) const {
    if (n != o.n) throw MackeyError("disjointUnion: different groups");
    std::vector<long> all = orbits;
    all.insert(all.end(), o.orbits.begin(), o.orbits.end());
    return GSet(n, std::move(all));
}

std::string GSet::toString() const {
    std::ostringstream os;
    os << "{";
    for (size_t k = 0; k < orbits.size(); ++k) os << (k ? "," : "") << "Theta_" << orbits[k];
    os << "}";
    return os.str();
}

bool is_equivariant(const GSet& src, const GSet& dst, const IntMatrix& m) {
    if (m.rows() != dst.points() || m.cols() != src.points()) return false;
    // shift-by-one on every source/target orbit must commute with the matrix
    for (size_t ks = 0; ks < src.orbits.size(); ++ks) {
        const long a = src.orbits[ks], so = src.orbitOffset(static_cast<long>(ks));
        for (size_t kd = 0; kd < dst.orbits.size(); ++kd) {
            const long b = dst.orbits[kd], od = dst.orbitOffset(static_cast<long>(kd));
            for (long r = 0; r < b; ++r)
                for (long c = 0; c < a; ++c)
                    if (m.at(od + r, so + c) != m.at(od + (r + 1) % b, so + (c + 1) % a)) return false;
        }
    }
    return true;
}

BzMor::BzMor(GSet s, GSet d, IntMatrix m, bool check) : src(std::move(s)), dst(std::move(d)), mat(std::move(m)) {
    if (src.n != dst.n) throw MackeyError("BzMor: different groups");
    if (mat.rows() != dst.points() || mat.cols() != src.points()) throw MackeyError("BzMor: matrix shape mismatch");
    if (check && !is_equivariant(src, dst, mat)) throw MackeyError("BzMor: matrix is not equivariant");
}

BzMor BzMor::zero(const GSet& s, const GSet& d) { return BzMor(s, d, IntMatrix::zero(d.points(), s.points()), false); }

BzMor BzMor::identity(const GSet& s) { return BzMor(s, s, IntMatrix::identity(s.points()), false); }

BzMor generator_R_proj(long n, long a, long b) {
    if (!divides(b, a) || !divides(a, n)) throw MackeyError("R_proj: need b | a | n");
    IntMatrix m(b, a);
    for (long j = 0; j < a; ++j) m.at(j % b, j) = 1;
    return BzMor(GSet::orbit(n, a), GSet::orbit(n, b), std::move(m), false);
}

BzMor generator_I_proj(long n, long a, long b) {
    BzMor r = generator_R_proj(n, a, b);
    return BzMor(GSet::orbit(n, b), GSet::orbit(n, a), r.mat.transpose(), false);
}

BzMor generator_R_t(long n, long d, long i) {
    if (!divides(d, n)) throw MackeyError("R_t: need d | n");
    if (i < 0 || i >= n) throw MackeyError("R_t: need 0 <= i < n");
    IntMatrix m(d, d);
    for (long j = 0; j < d; ++j) m.at((j + i) % d, j) = 1;
    return BzMor(GSet::orbit(n, d), GSet::orbit(n, d), std::move(m), false);
}

BzMor compose(const BzMor& g, const BzMor& f) {
    if (f.dst != g.src) throw MackeyError("compose: mismatched middle object");
    return BzMor(f.src, g.dst, g.mat * f.mat, false);
}

BzMor dual(const BzMor& f) { return BzMor(f.dst, f.src, f.mat.transpose(), false); }

BzMor add(const BzMor& f, const BzMor& g) {
    if (f.src != g.src || f.dst != g.dst) throw MackeyError("add: shape mismatch");
    return BzMor(f.src, f.dst, f.mat + g.mat, false);
}

BzMor sub(const BzMor& f, const BzMor& g) {
    if (f.src != g.src || f.dst != g.dst) throw MackeyError("sub: shape mismatch");
    return BzMor(f.src, f.dst, f.mat - g.mat, false);
}

BzMor negate(const BzMor& f) { return BzMor(f.src, f.dst, -f.mat, false); }

IntMatrix span_basis_matrix(long a, long b, long i) {
    const long g = std::gcd(a, b);
    IntMatrix m(b, a);
    for (long r = 0; r < b; ++r)
        for (long s = 0; s < a; ++s)
            if (((r - s - i) % g + g) % g == 0) m.at(r, s) = 1;
    return m;
}

std::vector<BzMor> hom_basis(long n, long a, long b) {
    if (!divides(a, n) || !divides(b, n)) throw MackeyError("hom_basis: orbits must divide n");
    std::vector<BzMor> basis;
    const long g = std::gcd(a, b);
    basis.reserve(static_cast<size_t>(g));
    for (long i = 0; i < g; ++i)
        basis.emplace_back(GSet::orbit(n, a), GSet::orbit(n, b), span_basis_matrix(a, b, i), false);
    return basis;
}

std::vector<Int> span_coefficients(const IntMatrix& block, long a, long b) {
    const long g = std::gcd(a, b);
    std::vector<Int> c(static_cast<size_t>(g));
    for (long i = 0; i < g; ++i) c[static_cast<size_t>(i)] = block.at(i, 0);
    // the coefficients must reconstruct the block exactly
    for (long r = 0; r < b; ++r)
        for (long s = 0; s < a; ++s)
            if (block.at(r, s) != c[static_cast<size_t>(((r - s) % g + g) % g)])
                throw MackeyError("span_coefficients: block is not an equivariant morphism");
    return c;
}

BzMor from_span_coefficients(long n, long a, long b, const std::vector<Int>& c) {
    const long g = std::gcd(a, b);
    if (static_cast<long>(c.size()) != g) throw MackeyError("from_span_coefficients: wrong length");
    IntMatrix m(b, a);
    for (long r = 0; r < b; ++r)
        for (long s = 0; s < a; ++s) m.at(r, s) = c[static_cast<size_t>(((r - s) % g + g) % g)];
    return BzMor(GSet::orbit(n, a), GSet::orbit(n, b), std::move(m), false);
}

ProductDecomp product_decompose(const GSet& a, const GSet& b) {
    if (a.n != b.n) throw MackeyError("product_decompose: different groups");
    ProductDecomp pd;
    pd.left = a;
    pd.right = b;
    std::vector<long> orbitSizes;
    for (size_t k = 0; k < a.orbits.size(); ++k)
        for (size_t m = 0; m < b.orbits.size(); ++m) {
            const long ak = a.orbits[k], bm = b.orbits[m];
            const long g = std::gcd(ak, bm), l = std::lcm(ak, bm);
            for (long i = 0; i < g; ++i) {
                pd.recs.push_back({static_cast<long>(k), static_cast<long>(m), i, l});
                orbitSizes.push_back(l);
            }
        }
    pd.prod = GSet(a.n, orbitSizes);

    const long gridPts = a.points() * b.points();
    pd.toPairs = IntMatrix::zero(gridPts, pd.prod.points());
    pd.fromPairs = IntMatrix::zero(pd.prod.points(), gridPts);
    for (size_t t = 0; t < pd.recs.size(); ++t) {
        const auto& rec = pd.recs[t];
        const long ao = a.orbitOffset(rec.k), bo = b.orbitOffset(rec.m);
        const long ak = a.orbits[static_cast<size_t>(rec.k)], bm = b.orbits[static_cast<size_t>(rec.m)];
        const long po = pd.prod.orbitOffset(static_cast<long>(t));
        for (long j = 0; j < rec.d; ++j) {
            // copy i of Theta_[ak,bm] embeds by x -> (x, t^i x)
            const long pl = ao + j % ak;
            const long pr = bo + (j + rec.i) % bm;
            const long pair = pd.pairPoint(pl, pr);
            pd.toPairs.at(pair, po + j) = 1;
            pd.fromPairs.at(po + j, pair) = 1;
        }
    }
    return pd;
}

BzMor product_mor(const ProductDecomp& src, const ProductDecomp& dst, const BzMor& f, const BzMor& g) {
    if (f.src != src.left || g.src != src.right || f.dst != dst.left || g.dst != dst.right)
        throw MackeyError("product_mor: object mismatch");
    IntMatrix grid = f.mat.kronecker(g.mat);
    return BzMor(src.prod, dst.prod, dst.fromPairs * grid * src.toPairs, false);
}

BzMor adjoint_shuffle(const ProductDecomp& pdAB, const ProductDecomp& pdAX, const BzMor& t, const GSet& b) {
    if (t.dst != pdAB.prod) throw MackeyError("adjoint_shuffle: morphism target mismatch");
    const GSet& a = pdAB.left;
    const GSet& x = t.src;
    if (pdAX.left != a || pdAX.right != x || pdAB.right != b) throw MackeyError("adjoint_shuffle: object mismatch");
    IntMatrix grid = pdAB.toPairs * t.mat;  // (|A||B|) x |X|
    IntMatrix shuffled(b.points(), a.points() * x.points());
    for (long pa = 0; pa < a.points(); ++pa)
        for (long pb = 0; pb < b.points(); ++pb)
            for (long px = 0; px < x.points(); ++px)
                shuffled.at(pb, pa * x.points() + px) = grid.at(pa * b.points() + pb, px);
    return BzMor(pdAX.prod, b, shuffled * pdAX.toPairs, false);
}

}  // namespace mackey
