#include "mackey/abelian.hpp"

#include <algorithm>
#include <sstream>

namespace mackey {

Int FgAbGroup::order() const {
    if (rank != 0) throw MackeyError("order(): infinite group");
    Int o = 1;
    for (const auto& f : factors) o *= f;
    return o;
}

FgAbGroup FgAbGroup::cyclic(const Int& m) {
    if (m == 0) return freeGroup(1);
    Int a = abs(m);
    if (a == 1) return zero();
    return {0, {a}};
}

std::vector<Int> FgAbGroup::reduced(std::vector<Int> v) const {
    if (static_cast<long>(v.size()) != dim()) throw MackeyError("reduced: dimension mismatch");
    for (size_t i = 0; i < factors.size(); ++i) {
        Int& x = v[static_cast<size_t>(rank) + i];
        mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), factors[i].get_mpz_t());
    }
    return v;
}

std::string FgAbGroup::toString() const {
    if (isZero()) return "0";
    std::ostringstream os;
    bool first = true;
    if (rank == 1) {
        os << "Z";
        first = false;
    } else if (rank > 1) {
        os << "Z^" << rank;
        first = false;
    }
    for (const auto& f : factors) {
        if (!first) os << " + ";
        os << "Z/" << f;
        first = false;
    }
    return os.str();
}

bool hom_well_defined(const FgAbGroup& src, const FgAbGroup& dst, const IntMatrix& m) {
    if (m.rows() != dst.dim() || m.cols() != src.dim()) return false;
    for (size_t j = 0; j < src.factors.size(); ++j) {
        const long col = src.rank + static_cast<long>(j);
        const Int& a = src.factors[j];
        for (long r = 0; r < dst.rank; ++r)
            if (m.at(r, col) != 0) return false;
        for (size_t k = 0; k < dst.factors.size(); ++k) {
            const Int& b = dst.factors[k];
            if ((a * m.at(dst.rank + static_cast<long>(k), col)) % b != 0) return false;
        }
    }
    return true;
}

namespace {
IntMatrix reduce_rows(const FgAbGroup& dst, IntMatrix m) {
    for (size_t k = 0; k < dst.factors.size(); ++k) {
        const long r = dst.rank + static_cast<long>(k);
        for (long j = 0; j < m.cols(); ++j) {
            Int& x = m.at(r, j);
            mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), dst.factors[k].get_mpz_t());
        }
    }
    return m;
}
}  // namespace

AbHom::AbHom(FgAbGroup s, FgAbGroup d, IntMatrix m, bool check)
    : src(std::move(s)), dst(std::move(d)), mat(reduce_rows(dst, std::move(m))) {
    if (check && !hom_well_defined(src, dst, mat)) throw MackeyError("ill-defined homomorphism");
}

AbHom AbHom::zero(const FgAbGroup& s, const FgAbGroup& d) {
    return AbHom(s, d, IntMatrix::zero(d.dim(), s.dim()), false);
}

AbHom AbHom::identity(const FgAbGroup& g) { return AbHom(g, g, IntMatrix::identity(g.dim()), false); }

AbHom AbHom::scalar(const FgAbGroup& g, const Int& k) {
    return AbHom(g, g, IntMatrix::identity(g.dim()).scaled(k), false);
}

std::vector<Int> AbHom::apply(const std::vector<Int>& v) const { return dst.reduced(mat.apply(src.reduced(v))); }

bool AbHom::isZeroMap() const {
    // zero as a map, i.e. all columns land in the torsion relations
    for (long j = 0; j < mat.cols(); ++j) {
        for (long r = 0; r < dst.rank; ++r)
            if (mat.at(r, j) != 0) return false;
        for (size_t k = 0; k < dst.factors.size(); ++k)
            if (mat.at(dst.rank + static_cast<long>(k), j) % dst.factors[k] != 0) return false;
    }
    return true;
}

bool AbHom::isSurjective() const {
    return cokernel_group(mat.augmentedWith(torsion_lattice(dst))).isZero();
}

bool AbHom::isInjective() const { return kernel_with_inclusion(*this).group.isZero(); }

AbHom compose(const AbHom& g, const AbHom& f) {
    if (f.dst != g.src) throw MackeyError("compose: mismatched middle group");
    return AbHom(f.src, g.dst, g.mat * f.mat, false);
}

AbHom add(const AbHom& f, const AbHom& g) {
    if (f.src != g.src || f.dst != g.dst) throw MackeyError("add: shape mismatch");
    return AbHom(f.src, f.dst, f.mat + g.mat, false);
}

AbHom sub(const AbHom& f, const AbHom& g) {
    if (f.src != g.src || f.dst != g.dst) throw MackeyError("sub: shape mismatch");
    return AbHom(f.src, f.dst, f.mat - g.mat, false);
}

AbHom negate(const AbHom& f) { return AbHom(f.src, f.dst, -f.mat, false); }

AbHom power(const AbHom& f, long k) {
    if (f.src != f.dst) throw MackeyError("power: not an endomorphism");
    AbHom r = AbHom::identity(f.src);
    for (long i = 0; i < k; ++i) r = compose(f, r);
    return r;
}

IntMatrix torsion_lattice(const FgAbGroup& g) {
    IntMatrix t(g.dim(), static_cast<long>(g.factors.size()));
    for (size_t j = 0; j < g.factors.size(); ++j) t.at(g.rank + static_cast<long>(j), static_cast<long>(j)) = g.factors[j];
    return t;
}

std::optional<std::vector<Int>> preimage(const AbHom& f, const std::vector<Int>& y) {
    IntMatrix ext = f.mat.augmentedWith(torsion_lattice(f.dst));
    auto sol = solve_linear(ext, f.dst.reduced(y));
    if (!sol) return std::nullopt;
    sol->resize(static_cast<size_t>(f.src.dim()));
    return f.src.reduced(*sol);
}

CokerData cokernel_data(const IntMatrix& a) {
    SmithForm f = smith_normal_form(a);
    const long steps = std::min(a.rows(), a.cols());
    std::vector<long> freeRows, torRows;
    std::vector<Int> factors;
    for (long i = 0; i < a.rows(); ++i) {
        if (i < steps && f.s.at(i, i) != 0) {
            if (f.s.at(i, i) != 1) {
                torRows.push_back(i);
                factors.push_back(f.s.at(i, i));
            }
        } else {
            freeRows.push_back(i);
        }
    }
    CokerData out;
    out.group.rank = static_cast<long>(freeRows.size());
    out.group.factors = std::move(factors);
    std::vector<long> sel = freeRows;
    sel.insert(sel.end(), torRows.begin(), torRows.end());
    out.proj = reduce_rows(out.group, f.u.selectRows(sel));
    out.lift = f.uInv.selectColumns(sel);
    return out;
}

FgAbGroup cokernel_group(const IntMatrix& a) { return cokernel_data(a).group; }

Subquotient::Subquotient(FgAbGroup ambient, const IntMatrix& lGens, const IntMatrix& rGens)
    : ambient_(std::move(ambient)) {
    const long n = ambient_.dim();
    IntMatrix lAll = (lGens.rows() == 0 && lGens.cols() == 0 ? IntMatrix::zero(n, 0) : lGens)
                         .augmentedWith(torsion_lattice(ambient_));
    if (lAll.rows() != n) throw MackeyError("subquotient: ambient dimension mismatch");
    basis_ = lattice_basis(lAll);
    basisSolver_ = std::make_shared<LinearSolver>(basis_);

    IntMatrix rAll = (rGens.rows() == 0 && rGens.cols() == 0 ? IntMatrix::zero(n, 0) : rGens)
                         .augmentedWith(torsion_lattice(ambient_));
    IntMatrix rel(basis_.cols(), rAll.cols());
    for (long j = 0; j < rAll.cols(); ++j) {
        auto expr = basisSolver_->solve(rAll.column(j));
        if (!expr) throw MackeyError("subquotient: relations not contained in the sublattice");
        rel.setColumn(j, *expr);
    }
    coker_ = cokernel_data(rel);
    lift_ = basis_ * coker_.lift;
}

std::vector<Int> Subquotient::classOf(const std::vector<Int>& ambientVec) const {
    auto y = basisSolver_->solve(ambientVec);
    if (!y) throw MackeyError("classOf: element not in the sublattice");
    return coker_.group.reduced(coker_.proj.apply(*y));
}

AbHom Subquotient::quotientHom() const {
    IntMatrix m(group().dim(), ambient_.dim());
    for (long j = 0; j < ambient_.dim(); ++j) {
        std::vector<Int> e(static_cast<size_t>(ambient_.dim()));
        e[static_cast<size_t>(j)] = 1;
        m.setColumn(j, classOf(e));
    }
    return AbHom(ambient_, group(), std::move(m));
}

AbHom Subquotient::inclusionHom() const { return AbHom(group(), ambient_, lift_); }

KernelData kernel_with_inclusion(const AbHom& f) {
    const long n = f.src.dim();
    IntMatrix ext = f.mat.augmentedWith(torsion_lattice(f.dst).scaled(-1));
    IntMatrix ker = kernel_lattice(ext);
    std::vector<long> firstRows(static_cast<size_t>(n));
    for (long i = 0; i < n; ++i) firstRows[static_cast<size_t>(i)] = i;
    IntMatrix lGens = ker.selectRows(firstRows);
    Subquotient sq(f.src, lGens, IntMatrix::zero(n, 0));
    return {sq.group(), sq.inclusionHom()};
}

KernelData image_with_inclusion(const AbHom& f) {
    Subquotient sq(f.dst, f.mat, IntMatrix::zero(f.dst.dim(), 0));
    return {sq.group(), sq.inclusionHom()};
}

CokernelData cokernel_with_projection(const AbHom& f) {
    Subquotient sq(f.dst, IntMatrix::identity(f.dst.dim()), f.mat);
    return {sq.group(), sq.quotientHom()};
}

HomologyData::HomologyData(const AbHom& f, const AbHom& g) {
    if (f.dst != g.src) throw MackeyError("homology: maps do not compose");
    if (!compose(g, f).isZeroMap()) throw MackeyError("homology: g∘f is nonzero");
    const long n = g.src.dim();
    IntMatrix ext = g.mat.augmentedWith(torsion_lattice(g.dst).scaled(-1));
    IntMatrix ker = kernel_lattice(ext);
    std::vector<long> firstRows(static_cast<size_t>(n));
    for (long i = 0; i < n; ++i) firstRows[static_cast<size_t>(i)] = i;
    sub_ = std::make_shared<Subquotient>(g.src, ker.selectRows(firstRows), f.mat);
}

std::vector<Int> HomologyData::lift(const std::vector<Int>& classVec) const {
    return sub_->ambient().reduced(sub_->liftMatrix().apply(classVec));
}

std::vector<Int> HomologyData::classOf(const std::vector<Int>& cycle) const { return sub_->classOf(cycle); }

bool exact_at(const AbHom& f, const AbHom& g) { return HomologyData(f, g).group().isZero(); }

HomGroupData::HomGroupData(FgAbGroup a, FgAbGroup b) : a_(std::move(a)), b_(std::move(b)) {
    std::vector<Int> orders;
    for (long j = 0; j < a_.dim(); ++j) {
        const bool jTor = j >= a_.rank;
        const Int aj = jTor ? a_.factors[static_cast<size_t>(j - a_.rank)] : Int(0);
        for (long c = 0; c < b_.dim(); ++c) {
            const bool cTor = c >= b_.rank;
            const Int bc = cTor ? b_.factors[static_cast<size_t>(c - b_.rank)] : Int(0);
            if (!jTor) {
                gens_.emplace_back(j, c);
                scales_.push_back(1);
                orders.push_back(bc);  // 0 when target coordinate is free
            } else if (cTor) {
                Int g = gcd(aj, bc);
                gens_.emplace_back(j, c);
                scales_.push_back(bc / g);
                orders.push_back(g);
            }
            // torsion source, free target: only the zero map
        }
    }
    IntMatrix rel(static_cast<long>(gens_.size()), static_cast<long>(gens_.size()));
    for (size_t i = 0; i < orders.size(); ++i) rel.at(static_cast<long>(i), static_cast<long>(i)) = orders[i];
    coker_ = cokernel_data(rel);
}

AbHom HomGroupData::decode(const std::vector<Int>& element) const {
    std::vector<Int> coeffs = coker_.lift.apply(element);
    IntMatrix m(b_.dim(), a_.dim());
    for (size_t i = 0; i < gens_.size(); ++i) {
        auto [j, c] = gens_[i];
        m.at(c, j) += coeffs[i] * scales_[i];
    }
    return AbHom(a_, b_, std::move(m));
}

std::vector<Int> HomGroupData::encode(const AbHom& f) const {
    if (f.src != a_ || f.dst != b_) throw MackeyError("hom encode: shape mismatch");
    std::vector<Int> coeffs(gens_.size());
    for (size_t i = 0; i < gens_.size(); ++i) {
        auto [j, c] = gens_[i];
        const Int& x = f.mat.at(c, j);
        if (x % scales_[i] != 0) throw MackeyError("hom encode: matrix not in the hom lattice");
        coeffs[i] = x / scales_[i];
    }
    return coker_.group.reduced(coker_.proj.apply(coeffs));
}

FgAbGroup hom_group(const FgAbGroup& a, const FgAbGroup& b) { return HomGroupData(a, b).group(); }

FgAbGroup tensor_group(const FgAbGroup& a, const FgAbGroup& b) {
    const long na = a.dim(), nb = b.dim();
    std::vector<Int> orders;
    orders.reserve(static_cast<size_t>(na * nb));
    for (long i = 0; i < na; ++i)
        for (long j = 0; j < nb; ++j) {
            Int ai = i >= a.rank ? a.factors[static_cast<size_t>(i - a.rank)] : Int(0);
            Int bj = j >= b.rank ? b.factors[static_cast<size_t>(j - b.rank)] : Int(0);
            orders.push_back(gcd(ai, bj));
        }
    IntMatrix rel(static_cast<long>(orders.size()), static_cast<long>(orders.size()));
    for (size_t i = 0; i < orders.size(); ++i) rel.at(static_cast<long>(i), static_cast<long>(i)) = orders[i];
    return cokernel_group(rel);
}

AbHom restricted_hom(const AbHom& f, const AbHom& inclSrc, const AbHom& inclDst) {
    if (inclSrc.dst != f.src || inclDst.dst != f.dst) throw MackeyError("restricted_hom: shape mismatch");
    IntMatrix m(inclDst.src.dim(), inclSrc.src.dim());
    for (long j = 0; j < inclSrc.src.dim(); ++j) {
        std::vector<Int> e(static_cast<size_t>(inclSrc.src.dim()));
        e[static_cast<size_t>(j)] = 1;
        auto x = preimage(inclDst, f.apply(inclSrc.apply(e)));
        if (!x) throw MackeyError("restricted_hom: subgroup not preserved");
        m.setColumn(j, *x);
    }
    return AbHom(inclSrc.src, inclDst.src, std::move(m));
}

AbHom descended_hom(const AbHom& f, const AbHom& projSrc, const AbHom& projDst) {
    if (projSrc.src != f.src || projDst.src != f.dst) throw MackeyError("descended_hom: shape mismatch");
    IntMatrix m(projDst.dst.dim(), projSrc.dst.dim());
    for (long j = 0; j < projSrc.dst.dim(); ++j) {
        std::vector<Int> e(static_cast<size_t>(projSrc.dst.dim()));
        e[static_cast<size_t>(j)] = 1;
        auto x = preimage(projSrc, e);
        if (!x) throw MackeyError("descended_hom: projection not surjective");
        m.setColumn(j, projDst.apply(f.apply(*x)));
    }
    return AbHom(projSrc.dst, projDst.dst, std::move(m));
}

DirectSumData direct_sum(const std::vector<FgAbGroup>& parts) {
    long total = 0;
    std::vector<long> offset;
    for (const auto& p : parts) {
        offset.push_back(total);
        total += p.dim();
    }
    std::vector<Int> orders(static_cast<size_t>(total), Int(0));
    for (size_t k = 0; k < parts.size(); ++k)
        for (size_t j = 0; j < parts[k].factors.size(); ++j)
            orders[static_cast<size_t>(offset[k] + parts[k].rank) + j] = parts[k].factors[j];
    IntMatrix rel(total, total);
    for (long i = 0; i < total; ++i) rel.at(i, i) = orders[static_cast<size_t>(i)];
    CokerData ck = cokernel_data(rel);

    DirectSumData out;
    out.group = ck.group;
    for (size_t k = 0; k < parts.size(); ++k) {
        const long d = parts[k].dim();
        IntMatrix inj(ck.group.dim(), d);
        for (long j = 0; j < d; ++j) {
            std::vector<Int> e(static_cast<size_t>(total));
            e[static_cast<size_t>(offset[k] + j)] = 1;
            inj.setColumn(j, ck.group.reduced(ck.proj.apply(e)));
        }
        out.inject.emplace_back(parts[k], ck.group, std::move(inj));
        std::vector<long> rows(static_cast<size_t>(d));
        for (long j = 0; j < d; ++j) rows[static_cast<size_t>(j)] = offset[k] + j;
        out.project.emplace_back(ck.group, parts[k], ck.lift.selectRows(rows));
    }
    return out;
}

AbHom direct_sum_hom(const DirectSumData& srcSum, const DirectSumData& dstSum,
                     const std::vector<std::vector<const AbHom*>>& blocks) {
    AbHom r = AbHom::zero(srcSum.group, dstSum.group);
    for (size_t di = 0; di < blocks.size(); ++di)
        for (size_t sj = 0; sj < blocks[di].size(); ++sj) {
            const AbHom* blk = blocks[di][sj];
            if (blk == nullptr || blk->isZeroMap()) continue;
            r = add(r, compose(dstSum.inject[di], compose(*blk, srcSum.project[sj])));
        }
    return r;
}

}  // namespace mackey
