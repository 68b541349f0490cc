#pragma once

#include <map>
#include <memory>
#include <optional>

#include "mackey/abelian.hpp"
#include "mackey/burnside.hpp"

namespace mackey {

struct ValidationReport {
    bool ok = true;
    std::string violation;  // first violated relation with its location
};

// A cohomological Mackey functor over C_n: one abelian group per divisor spot
// together with restriction/transfer maps on prime edges and the action of
// the group generator at every spot.  Immutable; cheap to copy.
class ZModule {
public:
    struct Data {
        long n = 1;
        std::map<long, FgAbGroup> value;                 // per divisor d | n
        std::map<std::pair<long, long>, AbHom> res;      // (d, d*l): value[d] -> value[d*l]
        std::map<std::pair<long, long>, AbHom> tr;       // (d, d*l): value[d*l] -> value[d]
        std::map<long, AbHom> act;                       // t^* on value[d]
    };

    ZModule() = default;
    static ZModule create(Data data);           // validates all Mackey relations
    static ZModule createUnchecked(Data data);  // trusted construction paths

    long n() const { return p_->data.n; }
    const std::vector<long>& divisorList() const { return p_->divs; }
    const FgAbGroup& value(long d) const;
    const AbHom& res(long d, long e) const;  // prime edge d -> e = d*l
    const AbHom& tr(long d, long e) const;   // prime edge, value[e] -> value[d]
    const AbHom& act(long d) const;
    const Data& data() const { return p_->data; }

    AbHom resPath(long d, long e) const;  // composite restriction, d | e
    AbHom trPath(long d, long e) const;   // composite transfer, value[e] -> value[d]
    AbHom actPow(long d, long k) const;

    bool sameDiagram(const ZModule& o) const { return p_ == o.p_ || dataEquals(o); }
    bool isZeroModule() const;

private:
    struct Impl {
        Data data;
        std::vector<long> divs;
        std::map<std::pair<long, long>, AbHom> resPaths, trPaths;
        std::map<std::pair<long, long>, AbHom> actPows;
    };
    std::shared_ptr<const Impl> p_;
    bool dataEquals(const ZModule& o) const;
    static ZModule build(Data data);
};

ValidationReport validate(const ZModule::Data& d);
ValidationReport validate(const ZModule& m);

// Morphism of Z-modules: one component per spot, commuting with res/tr/act.
struct MackeyMap {
    ZModule src, dst;
    std::map<long, AbHom> comp;

    MackeyMap() = default;
    static MackeyMap create(ZModule src, ZModule dst, std::map<long, AbHom> comp);  // validates
    static MackeyMap createUnchecked(ZModule src, ZModule dst, std::map<long, AbHom> comp);
    static MackeyMap zero(const ZModule& src, const ZModule& dst);
    static MackeyMap identity(const ZModule& m);
    static MackeyMap scalar(const ZModule& m, const Int& k);

    const AbHom& at(long d) const { return comp.at(d); }
    bool isZeroMap() const;
};

ValidationReport validate(const MackeyMap& f);
MackeyMap compose(const MackeyMap& g, const MackeyMap& f);
MackeyMap add(const MackeyMap& f, const MackeyMap& g);
MackeyMap sub(const MackeyMap& f, const MackeyMap& g);

// Evaluation at a finite C_n-set (additivity over the orbit list).
struct EvaluatedGSet {
    GSet s;
    DirectSumData sum;  // sum.group = M(S); one summand per orbit
};
EvaluatedGSet evaluate_gset(const ZModule& m, const GSet& s);
FgAbGroup evaluate(const ZModule& m, const GSet& s);

// Contravariant action of a Burnside morphism: M(phi) : M(dst) -> M(src),
// computed through the span-basis factorization tr ∘ act^i ∘ res per block.
AbHom mackey_apply(const ZModule& m, const BzMor& phi, const EvaluatedGSet& evSrc, const EvaluatedGSet& evDst);
AbHom mackey_apply(const ZModule& m, const BzMor& phi);
// Single-orbit convenience: M(phi) for phi: Theta_a -> Theta_b.
AbHom act_morphism(const ZModule& m, const BzMor& phi);

// ---- constructors of the named modules ----

ZModule make_zero_module(long n);
ZModule make_constant(long n);             // the Mackey functor Z
ZModule make_quotient(long n, long a);     // Z/I_a
ZModule make_ideal(long n, long a);        // I_a as an abstract module
// inclusion I_a -> Z realizing the ideal
MackeyMap ideal_inclusion(long n, long a);
ZModule make_form_z(long n, long e, long d);  // Z(e;d), requires d | e | n
ZModule make_free(const GSet& s);             // F_S with canonical orbit-sum bases
ZModule make_free_orbit(long n, long d);

// Fixed points of an abelian group with an automorphism of order dividing n.
ZModule fixed_point_module(long n, const FgAbGroup& w, const AbHom& action);
ZModule fixed_point_module(long n, const IntMatrix& action);  // free W = Z^r
ZModule make_fp_sign(long n);                                 // FP(Z with t = -1), n even

ZModule make_iamodib(long n, long a, long b);                  // I_a/I_b, a | b
ZModule make_quotient_rel(long n, long b, long x, long c);     // Z/(I_b, x) = coker(x: Z/I_c -> Z/I_b)
ZModule make_colon_kernel(long n, long b, long x, long c);     // ker(x: Z/I_c -> Z/I_b)
// the multiplication-by-x map Z/I_c -> Z/I_b itself (requires b | c*x)
MackeyMap quotient_mult_map(long n, long b, long x, long c);
// canonical projection Z/I_c -> Z/I_b for b | c
MackeyMap quotient_projection(long n, long b, long c);

// ---- maps between free modules and out of free modules ----

// The map F_S -> F_T induced by f in BZ(S, T).
MackeyMap free_map(const BzMor& f);
// The map F_S -> M classified by elements g_k in M(Theta_{s_k}) (Yoneda).
MackeyMap free_map_to(const GSet& s, const ZModule& m, const std::vector<std::vector<Int>>& elements);
// Recover the Burnside morphism from a Mackey map between free modules.
BzMor bz_from_free_map(const MackeyMap& f, const GSet& s, const GSet& t);
// Canonical index of basis element (orbit k, twist i) of F_S(Theta_d).
long free_basis_index(const GSet& s, long d, long k, long i);

// ---- kernels, cokernels, images, sums ----

struct SubmoduleData {
    ZModule module;
    MackeyMap inclusion;
};
struct QuotientData {
    ZModule module;
    MackeyMap projection;
};

SubmoduleData map_kernel(const MackeyMap& f);
QuotientData map_cokernel(const MackeyMap& f);
SubmoduleData map_image(const MackeyMap& f);

struct ModuleSumData {
    ZModule module;
    std::vector<MackeyMap> inject;
    std::vector<MackeyMap> project;
};
ModuleSumData direct_sum_modules(const std::vector<ZModule>& parts);

// Submodule with prescribed spotwise subgroups (must be closed under the
// structure maps; validated).
SubmoduleData submodule_from_subgroups(const ZModule& m, const std::map<long, AbHom>& inclusions);

// ---- recognition and isomorphism ----

// Z/I_a recognition: cyclic M(Theta_1) of order a, M(Theta_a) = 0, all
// restrictions surjective.
std::optional<long> identify_quotient(const ZModule& m);

// Form-of-Z recognition; canonical parameters (e, d) with empty prime
// intervals normalized away.
std::optional<std::pair<long, long>> identify_form_of_z(const ZModule& m);
std::pair<long, long> canonical_form_z_params(long n, long e, long d);

// Exhaustive unit search for modules with cyclic values.
std::optional<MackeyMap> find_cyclic_valued_iso(const ZModule& a, const ZModule& b);
bool is_isomorphic_cyclic_valued(const ZModule& a, const ZModule& b);

// Ann_a(M) (+) Ann_b(M) decomposition for coprime a, b with a*b * M = 0.
std::pair<SubmoduleData, SubmoduleData> annihilator_decompose(const ZModule& m, const Int& a, const Int& b);

// Unit map M -> FP(M(Theta_n)) is an equivalence after inverting n.
bool rationalization_check(const ZModule& m);
MackeyMap fixed_point_unit(const ZModule& m);

}  // namespace mackey
