#include "plethysm/verify.hpp"

#include "plethysm/characters.hpp"
#include "plethysm/reductions.hpp"
#include "plethysm/restricted.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace plethysm {

namespace {

std::string str(const BigInt& v) { return v.str(); }

void fail(VerifyReport& rep, const std::string& what) {
    if (rep.passed) rep.counterexample = what;
    rep.passed = false;
}

VerifyReport bounds(const VerifyOptions& o) {
    VerifyReport rep;
    rep.suite = "bounds";
    for (int n = 1; n <= o.n_max && rep.passed; ++n) {
        for (const auto& lam : partitions_of(3 * n)) {
            for (const Variant v : {Variant::a, Variant::b}) {
                const ConeKind kind = v == Variant::a ? ConeKind::open : ConeKind::closed;
                const Composition target = v == Variant::a ? lam.transpose().composition() : lam.composition();
                const BigInt lo = count_pyramids(target, kind, o.count);
                const BigInt hi = count_point_sets(target, kind, o.count);
                const BigInt c = plethysm_coeff(lam, n, 3, v).value;
                ++rep.checked;
                if (lo > c || c > hi)
                    fail(rep, to_string(v) + "_" + format(lam) + "(" + std::to_string(n) + ",3) = " + str(c) +
                                  " outside [" + str(lo) + ", " + str(hi) + "]");
            }
            if (!rep.passed) break;
        }
    }
    return rep;
}

VerifyReport duality(const VerifyOptions& o) {
    VerifyReport rep;
    rep.suite = "duality";
    for (const auto& [n, m] : o.nm) {
        const auto d = check_duality(n, m);
        ++rep.checked;
        if (!d.ok) {
            fail(rep, "(n,m) = (" + std::to_string(n) + "," + std::to_string(m) + "): " + d.counterexample);
            break;
        }
    }
    return rep;
}

VerifyReport closed_forms(const VerifyOptions& o) {
    VerifyReport rep;
    rep.suite = "closed-forms";
    for (int n = 1; n <= o.n_max && rep.passed; ++n) {
        for (const Variant v : {Variant::a, Variant::b}) {
            const auto support = m2_closed_form(n, v);
            for (const auto& lam : partitions_of(2 * n)) {
                const BigInt c = plethysm_coeff(lam, n, 2, v).value;
                const BigInt want = support.count(lam) ? 1 : 0;
                ++rep.checked;
                if (c != want) {
                    fail(rep, to_string(v) + "_" + format(lam) + "(" + std::to_string(n) + ",2) = " + str(c) +
                                  ", closed form gives " + str(want));
                    break;
                }
            }
        }
    }
    return rep;
}

VerifyReport xi_suite(const VerifyOptions& o) {
    VerifyReport rep;
    rep.suite = "xi";
    for (const ConeKind kind : {ConeKind::open, ConeKind::closed}) {
        std::map<int, long> by_sum;
        std::vector<int> sums;
        for (int x = 0; x <= o.i_max; ++x)
            for (int y = 0; y <= x; ++y)
                for (int z = 0; z <= y; ++z)
                    if (x + y + z <= o.i_max && in_cone({x, y, z}, kind)) {
                        ++by_sum[x + y + z];
                        sums.push_back(x + y + z);
                    }
        std::sort(sums.begin(), sums.end());
        for (int i = 0; i <= o.i_max; ++i) {
            ++rep.checked;
            if (xi(i, kind) != by_sum[i]) {
                fail(rep, "xi(" + std::to_string(i) + ", " + to_string(kind) + ") = " + std::to_string(xi(i, kind)) +
                              ", enumeration gives " + std::to_string(by_sum[i]));
                return rep;
            }
        }
        // sums holds every cone point of sum <= i_max, so its sorted prefix is exact
        long acc = 0;
        for (std::size_t n = 1; n <= sums.size(); ++n) {
            const int s = sums[n - 1];
            acc += s;
            ++rep.checked;
            if (iota(static_cast<long>(n), kind) != s || beta(static_cast<long>(n), kind) != acc) {
                fail(rep, "iota/beta(" + std::to_string(n) + ", " + to_string(kind) + ") disagree with enumeration");
                return rep;
            }
        }
        // no n-set below beta(n), complete search for n <= 6
        for (long n = 1; n <= 6; ++n) {
            const long b = beta(n, kind);
            std::vector<int> cand;
            for (int s : sums)
                if (s < b) cand.push_back(s);
            long found = 0;
            std::function<void(std::size_t, long, long)> rec = [&](std::size_t i, long left, long total) {
                if (left == 0) {
                    found += total < b;
                    return;
                }
                for (std::size_t j = i; j < cand.size(); ++j) {
                    if (total + left * cand[j] >= b) break;
                    rec(j + 1, left - 1, total + cand[j]);
                }
            };
            rec(0, n, 0);
            ++rep.checked;
            if (found) {
                fail(rep, std::to_string(n) + "-set in the " + to_string(kind) + " cone with B < beta");
                return rep;
            }
        }
    }
    return rep;
}

VerifyReport inner_lift_suite(const VerifyOptions& o) {
    VerifyReport rep;
    rep.suite = "inner-lift";
    for (int n = 1; n <= o.n_max && rep.passed; ++n) {
        for (const auto& lam : partitions_of(2 * n)) {
            for (const Variant v : {Variant::a, Variant::b}) {
                const BigInt before = plethysm_coeff(lam, n, 2, v).value;
                const auto lifted = inner_lift(lam, n, 2, v);
                const BigInt after = std::holds_alternative<TriviallyZero>(lifted) ? BigInt(0) : evaluate(std::get<PlethysmInstance>(lifted)).value;
                ++rep.checked;
                if (before != after) {
                    fail(rep, to_string(v) + "_" + format(lam) + "(" + std::to_string(n) + ",2) = " + str(before) +
                                  " but the lifted query gives " + str(after));
                    return rep;
                }
            }
        }
    }
    return rep;
}

std::vector<Composition> short_compositions(int total, int len) {
    if (len == 1) return {Composition{total}};
    std::vector<Composition> out;
    for (int a = 0; a <= total; ++a)
        for (const auto& rest : short_compositions(total - a, len - 1)) {
            std::vector<int> v{a};
            for (int i = 0; i < len - 1; ++i) v.push_back(rest[static_cast<std::size_t>(i)]);
            out.push_back(Composition(v));
        }
    return out;
}

std::string describe(const XRayInstance2D& inst) {
    return "r'=" + std::to_string(inst.r) + " x=" + format(inst.x) + " y=" + format(inst.y) + " z=" + format(inst.z);
}

// count_2dxray against every stage of both chains
bool chain_preserves(const XRayInstance2D& inst, const CountOptions& opts, std::string& why) {
    const BigInt want = count_2dxray(inst, opts);
    for (const ConeKind kind : {ConeKind::open, ConeKind::closed}) {
        const SymInstance layer = symmetrize_2d(inst, kind);
        const BigInt c1 = count(layer, opts);
        const SymInstance cone = embed_pyramid_3d(layer.marginal, 13 * inst.r, kind);
        const BigInt c2 = count_point_sets(cone.marginal, kind, opts);
        const BigInt c3 = evaluate_by_counting(promise_to_plethysm(cone.marginal, kind), opts).value;
        if (c1 != want || c2 != want || c3 != want) {
            why = describe(inst) + " (" + to_string(kind) + "): 2D " + str(want) + ", layer " + str(c1) + ", 3D " +
                  str(c2) + ", plethysm " + str(c3);
            return false;
        }
    }
    return true;
}

VerifyReport parsimony(const VerifyOptions& o) {
    VerifyReport rep;
    rep.suite = "parsimony";
    std::string why;
    // every marginal triple for r' = 1 (|G_1| = 3 bounds the totals)
    long zero = 0;
    for (int t = 0; t <= 4 && rep.passed; ++t)
        for (const auto& x : short_compositions(t, 2))
            for (const auto& y : short_compositions(t, 2))
                for (const auto& z : short_compositions(t, 2)) {
                    const XRayInstance2D inst{1, x, y, z};
                    ++rep.checked;
                    if (count_2dxray(inst, o.count) == 0) ++zero;
                    if (!chain_preserves(inst, o.count, why)) {
                        fail(rep, why);
                        return rep;
                    }
                }
    rep.notes.push_back("r'=1: " + std::to_string(rep.checked) + " instances, " + std::to_string(zero) + " with no solution");

    std::mt19937_64 gen(o.seed);
    std::vector<Point3> grid;
    for (int x = 0; x <= 2; ++x)
        for (int y = 0; x + y <= 2; ++y) grid.push_back({x, y, 2 - x - y});
    long sampled = 0;
    std::map<std::string, long> by_count;
    while (sampled < o.samples) {
        XRayInstance2D inst{2, {}, {}, {}};
        if (sampled % 2 == 0) {
            std::vector<Point3> s;
            for (const auto& p : grid)
                if (gen() % 2) s.push_back(p);
            const auto m = axis_marginals(PointSet(s));
            inst = {2, m.x, m.y, m.z};
        } else {
            // random marginal triple satisfying the coordinate-sum condition
            const int t = 1 + static_cast<int>(gen() % 6);
            const auto comps = short_compositions(t, 3);
            inst = {2, comps[gen() % comps.size()], comps[gen() % comps.size()], comps[gen() % comps.size()]};
            if (!is_feasible(inst)) continue;
        }
        ++sampled;
        ++rep.checked;
        ++by_count[str(count_2dxray(inst, o.count))];
        if (!chain_preserves(inst, o.count, why)) {
            fail(rep, why);
            return rep;
        }
    }
    std::ostringstream hist;
    hist << "r'=2: " << sampled << " random instances, solution counts";
    for (const auto& [c, k] : by_count) hist << " " << c << ":" << k;
    rep.notes.push_back(hist.str());
    return rep;
}

VerifyReport kronecker_suite(const VerifyOptions& o) {
    VerifyReport rep;
    rep.suite = "kronecker";
    long gated = 0;
    for (int t = 1; t <= 3; ++t)
        for (const auto& x : short_compositions(t, 2))
            for (const auto& y : short_compositions(t, 2))
                for (const auto& z : short_compositions(t, 2)) {
                    const XRayInstance2D inst{1, x, y, z};
                    if (!is_feasible(inst)) continue;
                    KroneckerPlethysm kp;
                    try {
                        kp = kronecker_plethysm_triple(inst);
                    } catch (const GateFailure&) {
                        ++gated;
                        continue;
                    }
                    ++rep.checked;
                    const BigInt want = count_2dxray(inst, o.count);
                    const BigInt k = kronecker(kp.kronecker.mu, kp.kronecker.nu, kp.kronecker.rho).value;
                    const BigInt a = evaluate_by_counting(kp.a, o.count).value;
                    const BigInt b = evaluate_by_counting(kp.b, o.count).value;
                    if (k != want || a != want || b != want) {
                        fail(rep, describe(inst) + ": 2D " + str(want) + ", k " + str(k) + ", a " + str(a) + ", b " + str(b));
                        return rep;
                    }
                }
    rep.notes.push_back(std::to_string(gated) + " feasible instances have no Kronecker triple (partition gate)");
    return rep;
}

VerifyReport restricted_suite(const VerifyOptions& o) {
    VerifyReport rep;
    rep.suite = "restricted";
    long ambiguous = 0;
    for (int k = 1; k <= o.mu_max; ++k)
        for (const auto& mu : partitions_of(k))
            for (const auto& lam : partitions_of(3 * k)) {
                if (!psi_membership(mu, row(3), lam.composition())) continue;
                if (psi_splits(mu, lam.composition(), PsiVariant::Sym).size() != 1) {
                    ++ambiguous;
                    continue;
                }
                ++rep.checked;
                const BigInt lex = count_cone_ssyt(mu, lam.composition(), PsiVariant::Sym, Tiebreak::lex).value;
                const BigInt rev = count_cone_ssyt(mu, lam.composition(), PsiVariant::Sym, Tiebreak::reverse_lex).value;
                const BigInt want = general_plethysm(lam, mu, row(3)).value;
                if (lex != want || rev != want) {
                    fail(rep, "mu=" + format(mu) + " lambda=" + format(lam) + ": tableaux " + str(lex) + "/" + str(rev) +
                                  ", plethysm " + str(want));
                    return rep;
                }
            }
    rep.notes.push_back(std::to_string(ambiguous) + " instances with more than one split left out");
    return rep;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"bounds",     "duality",   "closed-forms", "xi",
                                                "inner-lift", "parsimony", "kronecker",    "restricted"};
    return names;
}

VerifyReport run_suite(const std::string& name, const VerifyOptions& opts) {
    if (name == "bounds") return bounds(opts);
    if (name == "duality") return duality(opts);
    if (name == "closed-forms") return closed_forms(opts);
    if (name == "xi") return xi_suite(opts);
    if (name == "inner-lift") return inner_lift_suite(opts);
    if (name == "parsimony") return parsimony(opts);
    if (name == "kronecker") return kronecker_suite(opts);
    if (name == "restricted") return restricted_suite(opts);
    throw std::invalid_argument("unknown suite \"" + name + "\"");
}

}  // namespace plethysm
