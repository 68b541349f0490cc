#pragma once

#include <functional>
#include <memory>

#include "mackey/intmat.hpp"

namespace mackey {

// Finitely generated abelian group in normal form:
// Z^rank  (+)  Z/factors[0] (+) Z/factors[1] (+) ...
// with 2 <= factors[0] | factors[1] | ...
// Coordinates: the `rank` free coordinates first, then one per factor,
// torsion coordinates canonically reduced into [0, factor).
struct FgAbGroup {
    long rank = 0;
    std::vector<Int> factors;

    long dim() const { return rank + static_cast<long>(factors.size()); }
    bool isZero() const { return rank == 0 && factors.empty(); }
    bool isFinite() const { return rank == 0; }
    Int order() const;  // 1 for the zero group; only valid when finite
    bool isCyclic() const { return dim() <= 1; }

    static FgAbGroup zero() { return {}; }
    static FgAbGroup freeGroup(long r) { return {r, {}}; }
    static FgAbGroup cyclic(const Int& m);  // m = 0 gives Z, m = 1 gives 0

    std::vector<Int> reduced(std::vector<Int> v) const;
    bool operator==(const FgAbGroup& o) const { return rank == o.rank && factors == o.factors; }
    bool operator!=(const FgAbGroup& o) const { return !(*this == o); }
    std::string toString() const;  // e.g. "Z^2 + Z/2 + Z/4"
};

// Homomorphism between groups in normal form, stored on generators.
struct AbHom {
    FgAbGroup src, dst;
    IntMatrix mat;  // dst.dim() x src.dim()

    AbHom() = default;
    AbHom(FgAbGroup s, FgAbGroup d, IntMatrix m, bool check = true);

    static AbHom zero(const FgAbGroup& s, const FgAbGroup& d);
    static AbHom identity(const FgAbGroup& g);
    static AbHom scalar(const FgAbGroup& g, const Int& k);

    std::vector<Int> apply(const std::vector<Int>& v) const;
    bool isZeroMap() const;
    bool isIdentity() const { return src == dst && mat == IntMatrix::identity(src.dim()); }
    bool operator==(const AbHom& o) const { return src == o.src && dst == o.dst && mat == o.mat; }

    bool isSurjective() const;
    bool isInjective() const;
    bool isIsomorphism() const { return isInjective() && isSurjective(); }
};

bool hom_well_defined(const FgAbGroup& src, const FgAbGroup& dst, const IntMatrix& m);

AbHom compose(const AbHom& g, const AbHom& f);  // g after f
AbHom add(const AbHom& f, const AbHom& g);
AbHom sub(const AbHom& f, const AbHom& g);
AbHom negate(const AbHom& f);
AbHom power(const AbHom& f, long k);  // endomorphism power, k >= 0

// Relation lattice of the torsion coordinates, as columns in Z^dim.
IntMatrix torsion_lattice(const FgAbGroup& g);

// Solve f(x) = y; returns a preimage in source coordinates if one exists.
std::optional<std::vector<Int>> preimage(const AbHom& f, const std::vector<Int>& y);

// Presentation of Z^rows / colspan(a) with the change of coordinates kept:
// proj maps presentation coordinates onto group coordinates, lift is a
// section of proj on generators.
struct CokerData {
    FgAbGroup group;
    IntMatrix proj;  // group.dim() x rows
    IntMatrix lift;  // rows x group.dim()
};

CokerData cokernel_data(const IntMatrix& a);
FgAbGroup cokernel_group(const IntMatrix& a);

// Subquotient L/R of the coordinate lattice of `ambient`, where L and R are
// spanned by the given columns together with the torsion relations.
// Requires R (+) torsion <= L.  Carries a lift of generators into ambient
// coordinates and a class-of map defined on elements of L.
class Subquotient {
public:
    Subquotient(FgAbGroup ambient, const IntMatrix& lGens, const IntMatrix& rGens);

    const FgAbGroup& group() const { return coker_.group; }
    const FgAbGroup& ambient() const { return ambient_; }
    // ambient.dim() x group.dim(); representative vectors of the generators
    const IntMatrix& liftMatrix() const { return lift_; }
    std::vector<Int> classOf(const std::vector<Int>& ambientVec) const;
    // Hom version of classOf; only well-defined when L is the full lattice.
    AbHom quotientHom() const;
    // Inclusion of the subquotient as a subgroup; only a genuine hom when R
    // is the torsion lattice (i.e. this is a plain subgroup).
    AbHom inclusionHom() const;

private:
    FgAbGroup ambient_;
    IntMatrix basis_;  // ambient.dim() x s, basis of L
    std::shared_ptr<LinearSolver> basisSolver_;
    CokerData coker_;
    IntMatrix lift_;
};

// ker(f) with its inclusion into f.src.
struct KernelData {
    FgAbGroup group;
    AbHom inclusion;
};
KernelData kernel_with_inclusion(const AbHom& f);

// im(f) with its inclusion into f.dst.
KernelData image_with_inclusion(const AbHom& f);

// coker(f) with the projection from f.dst.
struct CokernelData {
    FgAbGroup group;
    AbHom projection;
};
CokernelData cokernel_with_projection(const AbHom& f);

// ker(g)/im(f) for a composable pair with g∘f = 0.
class HomologyData {
public:
    HomologyData(const AbHom& f, const AbHom& g);
    const FgAbGroup& group() const { return sub_->group(); }
    // representative in the middle group of a homology generator / element
    std::vector<Int> lift(const std::vector<Int>& classVec) const;
    // class of a cycle (element of ker g)
    std::vector<Int> classOf(const std::vector<Int>& cycle) const;

private:
    std::shared_ptr<Subquotient> sub_;
};

bool exact_at(const AbHom& f, const AbHom& g);  // ker(g) == im(f)

// The group Hom(a, b) together with an element <-> AbHom dictionary.
class HomGroupData {
public:
    HomGroupData(FgAbGroup a, FgAbGroup b);
    const FgAbGroup& group() const { return coker_.group; }
    AbHom decode(const std::vector<Int>& element) const;
    std::vector<Int> encode(const AbHom& f) const;

private:
    FgAbGroup a_, b_;
    std::vector<std::pair<long, long>> gens_;  // (src coord, dst coord)
    std::vector<Int> scales_;                  // multiplier placed at (dst,src)
    CokerData coker_;
};

FgAbGroup hom_group(const FgAbGroup& a, const FgAbGroup& b);
FgAbGroup tensor_group(const FgAbGroup& a, const FgAbGroup& b);

// The unique h with inclDst ∘ h = f ∘ inclSrc, for injective inclDst.
AbHom restricted_hom(const AbHom& f, const AbHom& inclSrc, const AbHom& inclDst);
// The unique h with h ∘ projSrc = projDst ∘ f, for surjective projSrc.
AbHom descended_hom(const AbHom& f, const AbHom& projSrc, const AbHom& projDst);

// Normalized finite direct sum with the summand embeddings/projections.
struct DirectSumData {
    FgAbGroup group;
    std::vector<AbHom> inject;   // summand -> sum
    std::vector<AbHom> project;  // sum -> summand
};
DirectSumData direct_sum(const std::vector<FgAbGroup>& parts);

// f (+) g on normalized direct sums.
AbHom direct_sum_hom(const DirectSumData& srcSum, const DirectSumData& dstSum,
                     const std::vector<std::vector<const AbHom*>>& blocks);

}  // namespace mackey
