#include "mackey/zmodule.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace mackey {

namespace {

std::optional<long> to_long(const Int& x) {
    if (!x.fits_slong_p()) return std::nullopt;
    return x.get_si();
}

std::string edge_str(long d, long e) {
    std::ostringstream os;
    os << "(" << d << "," << e << ")";
    return os.str();
}

// prime edges (d, d*l) of the divisor lattice of n
std::vector<std::pair<long, long>> prime_edges(long n) {
    std::vector<std::pair<long, long>> edges;
    for (long d : divisors(n))
        for (long l : prime_factors(n))
            if (divides(d * l, n)) edges.emplace_back(d, d * l);
    return edges;
}

}  // namespace

ValidationReport validate(const ZModule::Data& m) {
    auto fail = [](const std::string& s) { return ValidationReport{false, s}; };
    const long n = m.n;
    if (n < 1) return fail("n must be positive");
    const auto divs = divisors(n);

    for (long d : divs) {
        if (!m.value.count(d)) return fail("missing value at Theta_" + std::to_string(d));
        if (!m.act.count(d)) return fail("missing action at Theta_" + std::to_string(d));
        const AbHom& a = m.act.at(d);
        if (a.src != m.value.at(d) || a.dst != m.value.at(d)) return fail("action shape at Theta_" + std::to_string(d));
        if (!power(a, d).isIdentity()) return fail("act^d != id at Theta_" + std::to_string(d));
    }
    for (auto [d, e] : prime_edges(n)) {
        const long l = e / d;
        if (!m.res.count({d, e})) return fail("missing res on edge " + edge_str(d, e));
        if (!m.tr.count({d, e})) return fail("missing tr on edge " + edge_str(d, e));
        const AbHom& r = m.res.at({d, e});
        const AbHom& t = m.tr.at({d, e});
        if (r.src != m.value.at(d) || r.dst != m.value.at(e)) return fail("res shape on edge " + edge_str(d, e));
        if (t.src != m.value.at(e) || t.dst != m.value.at(d)) return fail("tr shape on edge " + edge_str(d, e));
        if (compose(m.act.at(e), r) != compose(r, m.act.at(d)))
            return fail("act does not commute with res on edge " + edge_str(d, e));
        if (compose(m.act.at(d), t) != compose(t, m.act.at(e)))
            return fail("act does not commute with tr on edge " + edge_str(d, e));
        // cohomological relation: transfer after restriction is the index
        if (compose(t, r) != AbHom::scalar(m.value.at(d), l))
            return fail("tr∘res != " + std::to_string(l) + " on edge " + edge_str(d, e));
        // double coset: restriction after transfer is the twisted norm
        AbHom norm = AbHom::zero(m.value.at(e), m.value.at(e));
        for (long i = 0; i < l; ++i) norm = add(norm, power(m.act.at(e), (i * d) % e));
        if (compose(r, t) != norm) return fail("res∘tr != sum of act^(i*d) on edge " + edge_str(d, e));
    }
    // commuting squares in independent prime directions
    for (long d : divs) {
        auto ps = prime_factors(n);
        for (long l : ps)
            for (long q : ps) {
                if (l == q || !divides(d * l * q, n)) continue;
                const AbHom resDl = m.res.at({d, d * l});
                const AbHom resDq = m.res.at({d, d * q});
                const AbHom resLq = m.res.at({d * l, d * l * q});
                const AbHom resQl = m.res.at({d * q, d * l * q});
                if (compose(resLq, resDl) != compose(resQl, resDq))
                    return fail("res squares do not commute at Theta_" + std::to_string(d) + " primes " +
                                std::to_string(l) + "," + std::to_string(q));
                const AbHom trDl = m.tr.at({d, d * l});
                const AbHom trDq = m.tr.at({d, d * q});
                const AbHom trLq = m.tr.at({d * l, d * l * q});
                const AbHom trQl = m.tr.at({d * q, d * l * q});
                if (compose(trDl, trLq) != compose(trDq, trQl))
                    return fail("tr squares do not commute at Theta_" + std::to_string(d) + " primes " +
                                std::to_string(l) + "," + std::to_string(q));
                // Mackey square for the coprime pullback Theta_dl x_{Theta_d} Theta_dq = Theta_dlq
                if (compose(resDq, trDl) != compose(trQl, resLq))
                    return fail("mixed res/tr square fails at Theta_" + std::to_string(d) + " primes " +
                                std::to_string(l) + "," + std::to_string(q));
            }
    }
    return {};
}

ValidationReport validate(const ZModule& m) { return validate(m.data()); }

ZModule ZModule::build(Data data) {
    auto impl = std::make_shared<Impl>();
    impl->divs = divisors(data.n);
    impl->data = std::move(data);
    const auto& d0 = impl->data;
    // composite restriction/transfer along ascending prime chains
    for (long d : impl->divs)
        for (long e : impl->divs) {
            if (!divides(d, e)) continue;
            if (d == e) {
                impl->resPaths.emplace(std::make_pair(d, e), AbHom::identity(d0.value.at(d)));
                impl->trPaths.emplace(std::make_pair(d, e), AbHom::identity(d0.value.at(d)));
                continue;
            }
            long q = prime_factors(e / d).front();
            const AbHom& stepRes = d0.res.at({d, d * q});
            const AbHom& stepTr = d0.tr.at({d, d * q});
            const AbHom& restRes = impl->resPaths.at({d * q, e});
            const AbHom& restTr = impl->trPaths.at({d * q, e});
            impl->resPaths.emplace(std::make_pair(d, e), compose(restRes, stepRes));
            impl->trPaths.emplace(std::make_pair(d, e), compose(stepTr, restTr));
        }
    for (long d : impl->divs) {
        AbHom p = AbHom::identity(d0.value.at(d));
        for (long k = 0; k < d; ++k) {
            impl->actPows.emplace(std::make_pair(d, k), p);
            p = compose(d0.act.at(d), p);
        }
    }
    ZModule z;
    z.p_ = std::move(impl);
    return z;
}

ZModule ZModule::create(Data data) {
    auto rep = validate(data);
    if (!rep.ok) throw MackeyError("invalid Mackey diagram: " + rep.violation);
    return build(std::move(data));
}

ZModule ZModule::createUnchecked(Data data) { return build(std::move(data)); }

const FgAbGroup& ZModule::value(long d) const { return p_->data.value.at(d); }
const AbHom& ZModule::res(long d, long e) const { return p_->data.res.at({d, e}); }
const AbHom& ZModule::tr(long d, long e) const { return p_->data.tr.at({d, e}); }
const AbHom& ZModule::act(long d) const { return p_->data.act.at(d); }

AbHom ZModule::resPath(long d, long e) const { return p_->resPaths.at({d, e}); }
AbHom ZModule::trPath(long d, long e) const { return p_->trPaths.at({d, e}); }
AbHom ZModule::actPow(long d, long k) const { return p_->actPows.at({d, ((k % d) + d) % d}); }

bool ZModule::isZeroModule() const {
    for (long d : p_->divs)
        if (!value(d).isZero()) return false;
    return true;
}

bool ZModule::dataEquals(const ZModule& o) const {
    const Data& a = p_->data;
    const Data& b = o.p_->data;
    return a.n == b.n && a.value == b.value && a.res == b.res && a.tr == b.tr && a.act == b.act;
}

ValidationReport validate(const MackeyMap& f) {
    auto fail = [](const std::string& s) { return ValidationReport{false, s}; };
    if (f.src.n() != f.dst.n()) return fail("source and target over different groups");
    const long n = f.src.n();
    for (long d : divisors(n)) {
        if (!f.comp.count(d)) return fail("missing component at Theta_" + std::to_string(d));
        const AbHom& c = f.comp.at(d);
        if (c.src != f.src.value(d) || c.dst != f.dst.value(d))
            return fail("component shape at Theta_" + std::to_string(d));
        if (compose(f.dst.act(d), c) != compose(c, f.src.act(d)))
            return fail("does not commute with act at Theta_" + std::to_string(d));
    }
    for (auto [d, e] : prime_edges(n)) {
        if (compose(f.dst.res(d, e), f.comp.at(d)) != compose(f.comp.at(e), f.src.res(d, e)))
            return fail("does not commute with res on edge " + edge_str(d, e));
        if (compose(f.dst.tr(d, e), f.comp.at(e)) != compose(f.comp.at(d), f.src.tr(d, e)))
            return fail("does not commute with tr on edge " + edge_str(d, e));
    }
    return {};
}

MackeyMap MackeyMap::create(ZModule src, ZModule dst, std::map<long, AbHom> comp) {
    MackeyMap f;
    f.src = std::move(src);
    f.dst = std::move(dst);
    f.comp = std::move(comp);
    auto rep = validate(f);
    if (!rep.ok) throw MackeyError("invalid Mackey map: " + rep.violation);
    return f;
}

MackeyMap MackeyMap::createUnchecked(ZModule src, ZModule dst, std::map<long, AbHom> comp) {
    MackeyMap f;
    f.src = std::move(src);
    f.dst = std::move(dst);
    f.comp = std::move(comp);
    return f;
}

MackeyMap MackeyMap::zero(const ZModule& src, const ZModule& dst) {
    std::map<long, AbHom> comp;
    for (long d : divisors(src.n())) comp.emplace(d, AbHom::zero(src.value(d), dst.value(d)));
    return createUnchecked(src, dst, std::move(comp));
}

MackeyMap MackeyMap::identity(const ZModule& m) {
    std::map<long, AbHom> comp;
    for (long d : divisors(m.n())) comp.emplace(d, AbHom::identity(m.value(d)));
    return createUnchecked(m, m, std::move(comp));
}

MackeyMap MackeyMap::scalar(const ZModule& m, const Int& k) {
    std::map<long, AbHom> comp;
    for (long d : divisors(m.n())) comp.emplace(d, AbHom::scalar(m.value(d), k));
    return createUnchecked(m, m, std::move(comp));
}

bool MackeyMap::isZeroMap() const {
    for (const auto& [d, c] : comp)
        if (!c.isZeroMap()) return false;
    return true;
}

MackeyMap compose(const MackeyMap& g, const MackeyMap& f) {
    std::map<long, AbHom> comp;
    for (const auto& [d, c] : f.comp) comp.emplace(d, compose(g.comp.at(d), c));
    return MackeyMap::createUnchecked(f.src, g.dst, std::move(comp));
}

MackeyMap add(const MackeyMap& f, const MackeyMap& g) {
    std::map<long, AbHom> comp;
    for (const auto& [d, c] : f.comp) comp.emplace(d, add(c, g.comp.at(d)));
    return MackeyMap::createUnchecked(f.src, f.dst, std::move(comp));
}

MackeyMap sub(const MackeyMap& f, const MackeyMap& g) {
    std::map<long, AbHom> comp;
    for (const auto& [d, c] : f.comp) comp.emplace(d, sub(c, g.comp.at(d)));
    return MackeyMap::createUnchecked(f.src, f.dst, std::move(comp));
}

EvaluatedGSet evaluate_gset(const ZModule& m, const GSet& s) {
    if (s.n != m.n()) throw MackeyError("evaluate: set over a different group");
    std::vector<FgAbGroup> parts;
    parts.reserve(s.orbits.size());
    for (long d : s.orbits) parts.push_back(m.value(d));
    return {s, direct_sum(parts)};
}

FgAbGroup evaluate(const ZModule& m, const GSet& s) { return evaluate_gset(m, s).sum.group; }

AbHom mackey_apply(const ZModule& m, const BzMor& phi, const EvaluatedGSet& evSrc, const EvaluatedGSet& evDst) {
    if (evSrc.s != phi.src || evDst.s != phi.dst) throw MackeyError("mackey_apply: evaluation mismatch");
    const GSet& a = phi.src;
    const GSet& b = phi.dst;
    std::vector<std::vector<AbHom>> store;
    std::vector<std::vector<const AbHom*>> blocks(a.orbits.size(), std::vector<const AbHom*>(b.orbits.size(), nullptr));
    store.resize(a.orbits.size());
    for (size_t k = 0; k < a.orbits.size(); ++k) {
        store[k].resize(b.orbits.size());
        const long ak = a.orbits[k], ao = a.orbitOffset(static_cast<long>(k));
        for (size_t mm = 0; mm < b.orbits.size(); ++mm) {
            const long bm = b.orbits[mm], bo = b.orbitOffset(static_cast<long>(mm));
            const long g = std::gcd(ak, bm), L = std::lcm(ak, bm);
            // block of phi from source orbit k to target orbit mm
            std::vector<long> rows(static_cast<size_t>(bm)), cols(static_cast<size_t>(ak));
            for (long r = 0; r < bm; ++r) rows[static_cast<size_t>(r)] = bo + r;
            for (long c = 0; c < ak; ++c) cols[static_cast<size_t>(c)] = ao + c;
            IntMatrix block = phi.mat.selectRows(rows).selectColumns(cols);
            if (block.isZero()) continue;
            std::vector<Int> coeff = span_coefficients(block, ak, bm);
            AbHom h = AbHom::zero(m.value(bm), m.value(ak));
            const AbHom down = m.trPath(ak, L);
            const AbHom up = m.resPath(bm, L);
            for (long i = 0; i < g; ++i) {
                if (coeff[static_cast<size_t>(i)] == 0) continue;
                AbHom term = compose(down, compose(m.actPow(L, i), up));
                h = add(h, AbHom(term.src, term.dst, term.mat.scaled(coeff[static_cast<size_t>(i)]), false));
            }
            store[k][mm] = std::move(h);
            blocks[k][mm] = &store[k][mm];
        }
    }
    return direct_sum_hom(evDst.sum, evSrc.sum, blocks);
}

AbHom mackey_apply(const ZModule& m, const BzMor& phi) {
    return mackey_apply(m, phi, evaluate_gset(m, phi.src), evaluate_gset(m, phi.dst));
}

AbHom act_morphism(const ZModule& m, const BzMor& phi) {
    if (phi.src.orbits.size() != 1 || phi.dst.orbits.size() != 1)
        throw MackeyError("act_morphism: expects single orbits");
    EvaluatedGSet evSrc = evaluate_gset(m, phi.src), evDst = evaluate_gset(m, phi.dst);
    AbHom full = mackey_apply(m, phi, evSrc, evDst);
    return compose(evSrc.sum.project[0], compose(full, evDst.sum.inject[0]));
}

SubmoduleData map_kernel(const MackeyMap& f) {
    std::map<long, AbHom> incl;
    for (const auto& [d, c] : f.comp) incl.emplace(d, kernel_with_inclusion(c).inclusion);
    return submodule_from_subgroups(f.src, incl);
}

SubmoduleData map_image(const MackeyMap& f) {
    std::map<long, AbHom> incl;
    for (const auto& [d, c] : f.comp) incl.emplace(d, image_with_inclusion(c).inclusion);
    return submodule_from_subgroups(f.dst, incl);
}

SubmoduleData submodule_from_subgroups(const ZModule& m, const std::map<long, AbHom>& inclusions) {
    ZModule::Data data;
    data.n = m.n();
    for (const auto& [d, i] : inclusions) data.value.emplace(d, i.src);
    for (long d : divisors(m.n())) {
        data.act.emplace(d, restricted_hom(m.act(d), inclusions.at(d), inclusions.at(d)));
        for (long l : prime_factors(m.n())) {
            long e = d * l;
            if (!divides(e, m.n())) continue;
            data.res.emplace(std::make_pair(d, e), restricted_hom(m.res(d, e), inclusions.at(d), inclusions.at(e)));
            data.tr.emplace(std::make_pair(d, e), restricted_hom(m.tr(d, e), inclusions.at(e), inclusions.at(d)));
        }
    }
    ZModule sub = ZModule::create(std::move(data));
    std::map<long, AbHom> comp;
    for (const auto& [d, i] : inclusions) comp.emplace(d, i);
    return {sub, MackeyMap::create(sub, m, std::move(comp))};
}

QuotientData map_cokernel(const MackeyMap& f) {
    std::map<long, AbHom> proj;
    for (const auto& [d, c] : f.comp) proj.emplace(d, cokernel_with_projection(c).projection);
    ZModule::Data data;
    data.n = f.src.n();
    const ZModule& m = f.dst;
    for (const auto& [d, p] : proj) data.value.emplace(d, p.dst);
    for (long d : divisors(m.n())) {
        data.act.emplace(d, descended_hom(m.act(d), proj.at(d), proj.at(d)));
        for (long l : prime_factors(m.n())) {
            long e = d * l;
            if (!divides(e, m.n())) continue;
            data.res.emplace(std::make_pair(d, e), descended_hom(m.res(d, e), proj.at(d), proj.at(e)));
            data.tr.emplace(std::make_pair(d, e), descended_hom(m.tr(d, e), proj.at(e), proj.at(d)));
        }
    }
    ZModule quot = ZModule::create(std::move(data));
    std::map<long, AbHom> comp;
    for (const auto& [d, p] : proj) comp.emplace(d, p);
    return {quot, MackeyMap::create(m, quot, std::move(comp))};
}

ModuleSumData direct_sum_modules(const std::vector<ZModule>& parts) {
    if (parts.empty()) throw MackeyError("direct_sum_modules: empty");
    const long n = parts[0].n();
    std::map<long, DirectSumData> sums;
    for (long d : divisors(n)) {
        std::vector<FgAbGroup> vals;
        for (const auto& p : parts) vals.push_back(p.value(d));
        sums.emplace(d, direct_sum(vals));
    }
    auto diag = [&](long dFrom, long dTo, auto pick) {
        // block-diagonal structure map between summed spots
        std::vector<std::vector<AbHom>> store(parts.size());
        std::vector<std::vector<const AbHom*>> blocks(parts.size(), std::vector<const AbHom*>(parts.size(), nullptr));
        for (size_t i = 0; i < parts.size(); ++i) {
            store[i].push_back(pick(parts[i]));
            blocks[i][i] = &store[i][0];
        }
        return direct_sum_hom(sums.at(dFrom), sums.at(dTo), blocks);
    };
    ZModule::Data data;
    data.n = n;
    for (long d : divisors(n)) {
        data.value.emplace(d, sums.at(d).group);
        data.act.emplace(d, diag(d, d, [&](const ZModule& p) { return p.act(d); }));
        for (long l : prime_factors(n)) {
            long e = d * l;
            if (!divides(e, n)) continue;
            data.res.emplace(std::make_pair(d, e), diag(d, e, [&](const ZModule& p) { return p.res(d, e); }));
            data.tr.emplace(std::make_pair(d, e), diag(e, d, [&](const ZModule& p) { return p.tr(d, e); }));
        }
    }
    ZModule sum = ZModule::create(std::move(data));
    ModuleSumData out;
    out.module = sum;
    for (size_t i = 0; i < parts.size(); ++i) {
        std::map<long, AbHom> inj, prj;
        for (long d : divisors(n)) {
            inj.emplace(d, sums.at(d).inject[i]);
            prj.emplace(d, sums.at(d).project[i]);
        }
        out.inject.push_back(MackeyMap::create(parts[i], sum, std::move(inj)));
        out.project.push_back(MackeyMap::create(sum, parts[i], std::move(prj)));
    }
    return out;
}

std::optional<long> identify_quotient(const ZModule& m) {
    const FgAbGroup& v1 = m.value(1);
    if (v1.rank != 0 || v1.factors.size() > 1) return std::nullopt;
    long a = 1;
    if (!v1.factors.empty()) {
        auto al = to_long(v1.factors[0]);
        if (!al) return std::nullopt;
        a = *al;
    }
    if (!divides(a, m.n())) return std::nullopt;
    if (!m.value(a).isZero()) return std::nullopt;
    for (long d : divisors(m.n()))
        for (long l : prime_factors(m.n())) {
            long e = d * l;
            if (!divides(e, m.n())) continue;
            if (!m.res(d, e).isSurjective()) return std::nullopt;
        }
    return a;
}

std::pair<long, long> canonical_form_z_params(long n, long e, long d) {
    long ce = 1, cd = 1;
    for (long p : prime_factors(n)) {
        long de = valuation(e, p), dd = valuation(d, p);
        if (dd >= de) continue;  // empty multiplier interval, normalize away
        for (long i = 0; i < de; ++i) ce *= p;
        for (long i = 0; i < dd; ++i) cd *= p;
    }
    return {ce, cd};
}

std::optional<std::pair<long, long>> identify_form_of_z(const ZModule& m) {
    const long n = m.n();
    for (long d : divisors(n)) {
        const FgAbGroup& v = m.value(d);
        if (v.rank != 1 || !v.factors.empty()) return std::nullopt;
    }
    // choose generator signs making every restriction multiplier positive
    std::map<long, int> sign;
    for (long d : divisors(n)) sign[d] = 0;
    sign[1] = 1;
    for (long d : divisors(n)) {
        if (sign[d] == 0) continue;
        for (long l : prime_factors(n)) {
            long e = d * l;
            if (!divides(e, n)) continue;
            Int r = m.res(d, e).mat.at(0, 0);
            if (r == 0) return std::nullopt;
            int s = sign[d] * (r > 0 ? 1 : -1);
            if (sign[e] == 0)
                sign[e] = s;
            else if (sign[e] != s)
                return std::nullopt;
        }
    }
    // multiplier in each prime direction must be 1 or l, depending only on
    // the l-adic exponent, with the l's forming one interval [v(d), v(e))
    long eOut = 1, dOut = 1;
    for (long l : prime_factors(n)) {
        const long vmax = valuation(n, l);
        std::vector<int> mult(static_cast<size_t>(vmax), 0);  // 0 unknown, 1 or 2 (=l)
        for (long d : divisors(n)) {
            long e = d * l;
            if (!divides(e, n)) continue;
            Int r = m.res(d, e).mat.at(0, 0) * sign[d] * sign[e];
            int code;
            if (r == 1)
                code = 1;
            else if (r == l)
                code = 2;
            else
                return std::nullopt;
            int& slot = mult[static_cast<size_t>(valuation(d, l))];
            if (slot == 0)
                slot = code;
            else if (slot != code)
                return std::nullopt;
        }
        long lo = -1, hi = -1;
        for (long k = 0; k < vmax; ++k)
            if (mult[static_cast<size_t>(k)] == 2) {
                if (lo < 0) lo = k;
                hi = k;
            }
        if (lo >= 0) {
            for (long k = lo; k <= hi; ++k)
                if (mult[static_cast<size_t>(k)] != 2) return std::nullopt;  // not an interval
            for (long k = 0; k <= hi; ++k) eOut *= l;
            for (long k = 0; k < lo; ++k) dOut *= l;
        }
    }
    return std::make_pair(eOut, dOut);
}

namespace {

std::vector<Int> unit_candidates(const FgAbGroup& g) {
    if (g.isZero()) return {Int(1)};
    if (g.rank == 1) return {Int(1), Int(-1)};
    const Int& k = g.factors[0];
    std::vector<Int> us;
    for (Int u = 1; u < k; ++u)
        if (gcd(u, k) == 1) us.push_back(u);
    return us;
}

}  // namespace

std::optional<MackeyMap> find_cyclic_valued_iso(const ZModule& a, const ZModule& b) {
    if (a.n() != b.n()) return std::nullopt;
    const long n = a.n();
    const auto divs = divisors(n);
    for (long d : divs) {
        if (!a.value(d).isCyclic() || !b.value(d).isCyclic())
            throw MackeyError("find_cyclic_valued_iso: values must be cyclic");
        if (a.value(d) != b.value(d)) return std::nullopt;
    }
    std::map<long, AbHom> chosen;
    // depth-first over spots in divisor order, pruning on edge constraints
    std::function<bool(size_t)> go = [&](size_t idx) -> bool {
        if (idx == divs.size()) return true;
        long d = divs[idx];
        for (const Int& u : unit_candidates(a.value(d))) {
            AbHom ud = AbHom::scalar(a.value(d), u);
            if (compose(b.act(d), ud) != compose(ud, a.act(d))) continue;
            bool ok = true;
            for (long d2 : divs) {
                if (!chosen.count(d2)) continue;
                long lo = std::min(d, d2), hi = std::max(d, d2);
                if (hi % lo != 0) continue;
                auto pf = prime_factors(hi / lo);
                if (pf.size() != 1 || pf[0] != hi / lo) continue;  // not a prime edge
                const AbHom& uLo = lo == d ? ud : chosen.at(lo);
                const AbHom& uHi = hi == d ? ud : chosen.at(hi);
                if (compose(uHi, a.res(lo, hi)) != compose(b.res(lo, hi), uLo)) ok = false;
                if (compose(uLo, a.tr(lo, hi)) != compose(b.tr(lo, hi), uHi)) ok = false;
                if (!ok) break;
            }
            if (!ok) continue;
            chosen.emplace(d, ud);
            if (go(idx + 1)) return true;
            chosen.erase(d);
        }
        return false;
    };
    if (!go(0)) return std::nullopt;
    return MackeyMap::create(a, b, chosen);
}

bool is_isomorphic_cyclic_valued(const ZModule& a, const ZModule& b) {
    return find_cyclic_valued_iso(a, b).has_value();
}

std::pair<SubmoduleData, SubmoduleData> annihilator_decompose(const ZModule& m, const Int& a, const Int& b) {
    if (gcd(a, b) != 1) throw MackeyError("annihilator_decompose: a, b must be coprime");
    if (!MackeyMap::scalar(m, a * b).isZeroMap()) throw MackeyError("annihilator_decompose: a*b does not annihilate M");
    SubmoduleData ka = map_kernel(MackeyMap::scalar(m, a));
    SubmoduleData kb = map_kernel(MackeyMap::scalar(m, b));
    ModuleSumData sum = direct_sum_modules({ka.module, kb.module});
    MackeyMap glue = add(compose(ka.inclusion, sum.project[0]), compose(kb.inclusion, sum.project[1]));
    for (const auto& [d, c] : glue.comp)
        if (!c.isIsomorphism()) throw MackeyError("annihilator_decompose: sum is not the whole module");
    return {ka, kb};
}

MackeyMap fixed_point_unit(const ZModule& m) {
    const long n = m.n();
    ZModule fp = fixed_point_module(n, m.value(n), m.act(n));
    std::map<long, AbHom> comp;
    for (long d : divisors(n)) {
        // FP value at d is ker(act^d - 1) inside M(Theta_n); the unit is the
        // composite restriction re-expressed in that subgroup
        AbHom incl = kernel_with_inclusion(sub(m.actPow(n, d), AbHom::identity(m.value(n)))).inclusion;
        comp.emplace(d, restricted_hom(m.resPath(d, n), AbHom::identity(m.value(d)), incl));
    }
    return MackeyMap::create(m, fp, std::move(comp));
}

bool rationalization_check(const ZModule& m) {
    MackeyMap unit = fixed_point_unit(m);
    auto annihilated_by_power_of_n = [&](const ZModule& x) {
        for (long d : divisors(m.n())) {
            const FgAbGroup& v = x.value(d);
            if (v.rank != 0) return false;
            for (Int f : v.factors) {
                for (long p : prime_factors(m.n()))
                    while (f % p == 0) f /= p;
                if (f != 1) return false;
            }
        }
        return true;
    };
    return annihilated_by_power_of_n(map_kernel(unit).module) &&
           annihilated_by_power_of_n(map_cokernel(unit).module);
}

}  // namespace mackey
