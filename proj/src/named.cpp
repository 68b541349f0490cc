#include "mackey/zmodule.hpp"

#include <functional>
#include <numeric>

namespace mackey {

namespace {

// assemble a diagram whose value at Theta_d is cyclic with 1x1 structure maps
ZModule cyclic_valued(long n, const std::function<Int(long)>& order, const std::function<Int(long, long)>& resMult,
                      const std::function<Int(long, long)>& trMult) {
    ZModule::Data data;
    data.n = n;
    for (long d : divisors(n)) {
        FgAbGroup v = FgAbGroup::cyclic(order(d));
        data.value.emplace(d, v);
        data.act.emplace(d, AbHom::identity(v));
        for (long l : prime_factors(n)) {
            long e = d * l;
            if (!divides(e, n)) continue;
            FgAbGroup w = FgAbGroup::cyclic(order(e));
            IntMatrix r(w.dim(), v.dim()), t(v.dim(), w.dim());
            if (v.dim() == 1 && w.dim() == 1) {
                r.at(0, 0) = resMult(d, e);
                t.at(0, 0) = trMult(d, e);
            }
            data.res.emplace(std::make_pair(d, e), AbHom(v, w, std::move(r)));
            data.tr.emplace(std::make_pair(d, e), AbHom(w, v, std::move(t)));
        }
    }
    return ZModule::create(std::move(data));
}

}  // namespace

ZModule make_zero_module(long n) {
    return cyclic_valued(
        n, [](long) { return Int(1); }, [](long, long) { return Int(0); }, [](long, long) { return Int(0); });
}

ZModule make_constant(long n) {
    return cyclic_valued(
        n, [](long) { return Int(0); }, [](long, long) { return Int(1); },
        [](long d, long e) { return Int(e / d); });
}

ZModule make_quotient(long n, long a) {
    if (!divides(a, n)) throw MackeyError("make_quotient: a must divide n");
    // value Z/(a/(a,d)); restrictions are the canonical surjections and
    // transfers multiplication by the index
    return cyclic_valued(
        n, [a](long d) { return Int(a / std::gcd(a, d)); }, [](long, long) { return Int(1); },
        [](long d, long e) { return Int(e / d); });
}

ZModule make_ideal(long n, long a) {
    if (!divides(a, n)) throw MackeyError("make_ideal: a must divide n");
    // abstract copy of the ideal generated at Theta_a: generator of the value
    // at Theta_d is a/(a,d) inside Z
    auto gen = [a](long d) { return a / std::gcd(a, d); };
    return cyclic_valued(
        n, [](long) { return Int(0); },
        [gen](long d, long e) { return Int(gen(d) / gen(e)); },
        [gen](long d, long e) { return Int((e / d) * gen(e) / gen(d)); });
}

MackeyMap ideal_inclusion(long n, long a) {
    ZModule ia = make_ideal(n, a);
    ZModule z = make_constant(n);
    std::map<long, AbHom> comp;
    for (long d : divisors(n)) {
        IntMatrix m(1, 1);
        m.at(0, 0) = a / std::gcd(a, d);
        comp.emplace(d, AbHom(ia.value(d), z.value(d), std::move(m)));
    }
    return MackeyMap::create(ia, z, std::move(comp));
}

ZModule make_form_z(long n, long e, long d) {
    if (!divides(e, n) || !divides(d, e)) throw MackeyError("make_form_z: need d | e | n");
    auto resMult = [=](long k, long) {
        // multiplier of the elementary restriction leaving Theta_k in the
        // direction of the prime l = edge ratio
        return Int(1);
    };
    (void)resMult;
    return cyclic_valued(
        n, [](long) { return Int(0); },
        [=](long k, long ke) {
            long l = ke / k;
            long kv = valuation(k, l), dv = valuation(d, l), ev = valuation(e, l);
            return Int((kv >= dv && kv < ev) ? l : 1);
        },
        [=](long k, long ke) {
            long l = ke / k;
            long kv = valuation(k, l), dv = valuation(d, l), ev = valuation(e, l);
            return Int((kv >= dv && kv < ev) ? 1 : l);
        });
}

ZModule make_free(const GSet& s) {
    const long n = s.n;
    ZModule::Data data;
    data.n = n;
    // basis of F_S(Theta_d): orbit sums indexed by (orbit k, twist i < (a_k, d))
    auto rankAt = [&](long d) {
        long r = 0;
        for (long a : s.orbits) r += std::gcd(a, d);
        return r;
    };
    auto index = [&](long d, size_t k, long i) {
        long off = 0;
        for (size_t j = 0; j < k; ++j) off += std::gcd(s.orbits[j], d);
        return off + i;
    };
    for (long d : divisors(n)) {
        FgAbGroup v = FgAbGroup::freeGroup(rankAt(d));
        data.value.emplace(d, v);
        // t sends the orbit sum u_i to u_{i+1}
        IntMatrix a(v.dim(), v.dim());
        for (size_t k = 0; k < s.orbits.size(); ++k) {
            const long g = std::gcd(s.orbits[k], d);
            for (long i = 0; i < g; ++i) a.at(index(d, k, (i + 1) % g), index(d, k, i)) = 1;
        }
        data.act.emplace(d, AbHom(v, v, std::move(a), false));
    }
    for (long d : divisors(n))
        for (long l : prime_factors(n)) {
            long e = d * l;
            if (!divides(e, n)) continue;
            const FgAbGroup& vd = data.value.at(d);
            const FgAbGroup& ve = data.value.at(e);
            IntMatrix r(ve.dim(), vd.dim()), t(vd.dim(), ve.dim());
            for (size_t k = 0; k < s.orbits.size(); ++k) {
                const long a = s.orbits[k];
                const long gd = std::gcd(a, d), ge = std::gcd(a, e);
                // restriction: u_i^{(d)} = sum of the u_j^{(e)} with j ≡ i (mod gd)
                for (long i = 0; i < gd; ++i)
                    for (long j = i; j < ge; j += gd) r.at(index(e, k, j), index(d, k, i)) = 1;
                // transfer: norm collapses u_j^{(e)} onto mu copies of u_{j mod gd}^{(d)}
                const Int mu = Int(e / d) * gd / ge;
                for (long j = 0; j < ge; ++j) t.at(index(d, k, j % gd), index(e, k, j)) = mu;
            }
            data.res.emplace(std::make_pair(d, e), AbHom(vd, ve, std::move(r), false));
            data.tr.emplace(std::make_pair(d, e), AbHom(ve, vd, std::move(t), false));
        }
    return ZModule::create(std::move(data));
}

ZModule make_free_orbit(long n, long d) { return make_free(GSet::orbit(n, d)); }

long free_basis_index(const GSet& s, long d, long k, long i) {
    long off = 0;
    for (long j = 0; j < k; ++j) off += std::gcd(s.orbits[static_cast<size_t>(j)], d);
    return off + i;
}

ZModule fixed_point_module(long n, const FgAbGroup& w, const AbHom& action) {
    if (action.src != w || action.dst != w) throw MackeyError("fixed_point_module: action shape mismatch");
    if (!power(action, n).isIdentity()) throw MackeyError("fixed_point_module: action order does not divide n");
    std::map<long, AbHom> incl;
    for (long d : divisors(n))
        incl.emplace(d, kernel_with_inclusion(sub(power(action, d), AbHom::identity(w))).inclusion);
    ZModule::Data data;
    data.n = n;
    for (long d : divisors(n)) {
        data.value.emplace(d, incl.at(d).src);
        data.act.emplace(d, restricted_hom(action, incl.at(d), incl.at(d)));
        for (long l : prime_factors(n)) {
            long e = d * l;
            if (!divides(e, n)) continue;
            data.res.emplace(std::make_pair(d, e), restricted_hom(AbHom::identity(w), incl.at(d), incl.at(e)));
            AbHom norm = AbHom::zero(w, w);
            for (long i = 0; i < e / d; ++i) norm = add(norm, power(action, d * i));
            data.tr.emplace(std::make_pair(d, e), restricted_hom(norm, incl.at(e), incl.at(d)));
        }
    }
    return ZModule::create(std::move(data));
}

ZModule fixed_point_module(long n, const IntMatrix& action) {
    FgAbGroup w = FgAbGroup::freeGroup(action.rows());
    return fixed_point_module(n, w, AbHom(w, w, action));
}

ZModule make_fp_sign(long n) {
    if (n % 2 != 0) throw MackeyError("make_fp_sign: n must be even");
    IntMatrix m(1, 1);
    m.at(0, 0) = -1;
    return fixed_point_module(n, m);
}

MackeyMap quotient_projection(long n, long b, long c) {
    if (!divides(b, c) || !divides(c, n)) throw MackeyError("quotient_projection: need b | c | n");
    return quotient_mult_map(n, b, 1, c);
}

MackeyMap quotient_mult_map(long n, long b, long x, long c) {
    if (!divides(b, n) || !divides(c, n)) throw MackeyError("quotient_mult_map: parameters must divide n");
    if ((Int(c) * x) % b != 0) throw MackeyError("quotient_mult_map: need b | c*x");
    ZModule src = make_quotient(n, c);
    ZModule dst = make_quotient(n, b);
    std::map<long, AbHom> comp;
    for (long d : divisors(n)) {
        IntMatrix m(dst.value(d).dim(), src.value(d).dim());
        if (m.rows() == 1 && m.cols() == 1) m.at(0, 0) = x;
        comp.emplace(d, AbHom(src.value(d), dst.value(d), std::move(m)));
    }
    return MackeyMap::create(src, dst, std::move(comp));
}

ZModule make_iamodib(long n, long a, long b) {
    if (!divides(a, b)) throw MackeyError("make_iamodib: need a | b");
    return map_kernel(quotient_projection(n, a, b)).module;
}

ZModule make_quotient_rel(long n, long b, long x, long c) {
    return map_cokernel(quotient_mult_map(n, b, x, c)).module;
}

ZModule make_colon_kernel(long n, long b, long x, long c) {
    return map_kernel(quotient_mult_map(n, b, x, c)).module;
}

MackeyMap free_map(const BzMor& f) {
    ZModule fs = make_free(f.src);
    ZModule ft = make_free(f.dst);
    std::map<long, AbHom> comp;
    for (long d : divisors(f.src.n)) {
        IntMatrix m(ft.value(d).dim(), fs.value(d).dim());
        for (size_t k = 0; k < f.src.orbits.size(); ++k) {
            const long ak = f.src.orbits[k];
            for (long i = 0; i < std::gcd(ak, d); ++i) {
                // basis element (k, i) is the span morphism beta_i: Theta_d -> Theta_{a_k};
                // its image is the span decomposition of f ∘ beta_i
                IntMatrix betaBlock = span_basis_matrix(d, ak, i);
                IntMatrix beta(f.src.points(), d);
                for (long r = 0; r < ak; ++r)
                    for (long cc = 0; cc < d; ++cc) beta.at(f.src.orbitOffset(static_cast<long>(k)) + r, cc) = betaBlock.at(r, cc);
                IntMatrix comp2 = f.mat * beta;  // morphism Theta_d -> f.dst
                for (size_t mm = 0; mm < f.dst.orbits.size(); ++mm) {
                    const long bm = f.dst.orbits[mm];
                    std::vector<long> rows(static_cast<size_t>(bm));
                    for (long r = 0; r < bm; ++r) rows[static_cast<size_t>(r)] = f.dst.orbitOffset(static_cast<long>(mm)) + r;
                    auto coeff = span_coefficients(comp2.selectRows(rows), d, bm);
                    for (long j = 0; j < std::gcd(d, bm); ++j)
                        m.at(free_basis_index(f.dst, d, static_cast<long>(mm), j), free_basis_index(f.src, d, static_cast<long>(k), i)) =
                            coeff[static_cast<size_t>(j)];
                }
            }
        }
        comp.emplace(d, AbHom(fs.value(d), ft.value(d), std::move(m), false));
    }
    return MackeyMap::create(fs, ft, std::move(comp));
}

MackeyMap free_map_to(const GSet& s, const ZModule& m, const std::vector<std::vector<Int>>& elements) {
    if (elements.size() != s.orbits.size()) throw MackeyError("free_map_to: one element per orbit required");
    ZModule fs = make_free(s);
    std::map<long, AbHom> comp;
    for (long d : divisors(s.n)) {
        IntMatrix mat(m.value(d).dim(), fs.value(d).dim());
        for (size_t k = 0; k < s.orbits.size(); ++k) {
            const long ak = s.orbits[k];
            const long L = std::lcm(ak, d);
            for (long i = 0; i < std::gcd(ak, d); ++i) {
                // Yoneda: basis (k,i) of BZ(Theta_d, Theta_{a_k}) acts on the element
                AbHom op = compose(m.trPath(d, L), compose(m.actPow(L, i), m.resPath(ak, L)));
                std::vector<Int> img = op.apply(elements[k]);
                for (long r = 0; r < mat.rows(); ++r)
                    mat.at(r, free_basis_index(s, d, static_cast<long>(k), i)) = img[static_cast<size_t>(r)];
            }
        }
        comp.emplace(d, AbHom(fs.value(d), m.value(d), std::move(mat)));
    }
    return MackeyMap::create(fs, m, std::move(comp));
}

BzMor bz_from_free_map(const MackeyMap& f, const GSet& s, const GSet& t) {
    const long n = s.n;
    IntMatrix mat(t.points(), s.points());
    for (size_t k = 0; k < s.orbits.size(); ++k) {
        const long ak = s.orbits[k];
        // image of the canonical generator of the k-th summand, read at spot a_k
        const AbHom& comp = f.comp.at(ak);
        std::vector<Int> gen(static_cast<size_t>(comp.src.dim()));
        gen[static_cast<size_t>(free_basis_index(s, ak, static_cast<long>(k), 0))] = 1;
        std::vector<Int> img = comp.apply(gen);
        for (size_t mm = 0; mm < t.orbits.size(); ++mm) {
            const long bm = t.orbits[mm];
            std::vector<Int> coeff(static_cast<size_t>(std::gcd(ak, bm)));
            for (long j = 0; j < std::gcd(ak, bm); ++j)
                coeff[static_cast<size_t>(j)] = img[static_cast<size_t>(free_basis_index(t, ak, static_cast<long>(mm), j))];
            IntMatrix block = from_span_coefficients(n, ak, bm, coeff).mat;
            for (long r = 0; r < bm; ++r)
                for (long c = 0; c < ak; ++c)
                    mat.at(t.orbitOffset(static_cast<long>(mm)) + r, s.orbitOffset(static_cast<long>(k)) + c) = block.at(r, c);
        }
    }
    return BzMor(s, t, std::move(mat));
}

}  // namespace mackey
