#include "plethysm/reductions.hpp"

#include <functional>

namespace plethysm {

std::string format(const PlethysmInstance& q) {
    return to_string(q.variant) + "_" + format(q.lambda) + "(" + std::to_string(q.n) + "," + std::to_string(q.m) + ")";
}

PlethysmInstance trivial_no_instance() { return {Partition{2, 1}, 1, 3, Variant::b}; }

CoefficientResult evaluate(const PlethysmInstance& q) { return plethysm_coeff(q.lambda, q.n, q.m, q.variant); }

namespace {

// sum over sigma of sign(sigma) * count(target - delta + sigma(delta)), where
// only permutations keeping B above the minimum beta(n) can contribute.
BigInt point_set_determinant(const Composition& target, ConeKind kind, const CountOptions& opts) {
    const int len = static_cast<int>(target.length());
    const long n = target.size() / 3;
    // B(kappa) = B(target) - (1/2) sum_i (sigma(i) - i)^2
    const long slack = 2 * (target.coordinate_sum() - beta(n, kind));
    if (slack < 0) return 0;
    std::vector<int> kappa(static_cast<std::size_t>(len));
    std::vector<bool> used(static_cast<std::size_t>(len), false);
    BigInt total = 0;
    std::function<void(int, int, long)> place = [&](int i, int inversions, long spent) {
        if (i == len) {
            const BigInt c = count_point_sets(Composition(kappa), kind, opts);
            if (inversions % 2 == 0)
                total += c;
            else
                total -= c;
            return;
        }
        int larger_used = 0;
        for (int v = len - 1; v >= 0; --v) {
            if (used[static_cast<std::size_t>(v)]) {
                ++larger_used;
                continue;
            }
            const int entry = target[static_cast<std::size_t>(i)] - i + v;
            if (entry < 0) break;
            const long cost = static_cast<long>(v - i) * (v - i);
            if (spent + cost > slack) continue;
            used[static_cast<std::size_t>(v)] = true;
            kappa[static_cast<std::size_t>(i)] = entry;
            place(i + 1, inversions + larger_used, spent + cost);
            used[static_cast<std::size_t>(v)] = false;
        }
    };
    place(0, 0, 0);
    return total;
}

}  // namespace

CoefficientResult evaluate_by_counting(const PlethysmInstance& q, const CountOptions& opts) {
    if (q.m != 3) throw std::invalid_argument("evaluate_by_counting: only m = 3 is supported");
    if (q.lambda.size() != 3L * q.n) return {0, Method::GradingZero};
    // b: Wedge^n Sym^3 has weight spaces spanned by n-sets of closed-cone points.
    // a: a_lambda(n,3) is the multiplicity of lambda^t in Wedge^n Wedge^3 (open cone).
    const ConeKind kind = q.variant == Variant::b ? ConeKind::closed : ConeKind::open;
    const Composition target = q.variant == Variant::b ? q.lambda.composition() : q.lambda.transpose().composition();
    if (is_promise_instance(target, kind)) return {count_pyramids(target, kind, opts), Method::PyramidCount};
    return {point_set_determinant(target, kind, opts), Method::PointSetDeterminant};
}

std::variant<PlethysmInstance, TriviallyZero> inner_lift(const Partition& lambda, int n, int m, Variant variant) {
    if (n <= 0 || m <= 0) throw std::invalid_argument("inner_lift: n and m must be positive");
    if (lambda.size() != static_cast<long>(n) * m) throw std::invalid_argument("inner_lift: |lambda| != n*m");
    if (lambda.height() > n)
        return TriviallyZero{"height(" + format(lambda) + ") = " + std::to_string(lambda.height()) + " exceeds n = " + std::to_string(n)};
    std::vector<int> cols{n};
    const Partition t = lambda.transpose();
    cols.insert(cols.end(), t.parts().begin(), t.parts().end());
    return PlethysmInstance{Partition(cols).transpose(), n, m + 1, variant == Variant::a ? Variant::b : Variant::a};
}

bool is_feasible(const XRayInstance2D& inst) {
    if (inst.r < 0) return false;
    const auto lim = static_cast<std::size_t>(inst.r) + 1;
    if (inst.x.length() > lim || inst.y.length() > lim || inst.z.length() > lim) return false;
    const long total = inst.x.size();
    if (inst.y.size() != total || inst.z.size() != total) return false;
    return inst.x.coordinate_sum() + inst.y.coordinate_sum() + inst.z.coordinate_sum() == inst.r * total;
}

SymInstance canonical_zero_layer(int r, ConeKind kind) { return {Composition{1}, kind, r}; }

SymInstance symmetrize_2d(const XRayInstance2D& inst, ConeKind kind) {
    if (inst.r <= 0) throw std::invalid_argument("symmetrize_2d: r' must be positive (count r' = 0 directly)");
    const int rp = inst.r;
    const int r = 13 * rp;
    if (!is_feasible(inst)) return canonical_zero_layer(r, kind);
    std::vector<int> lambda(static_cast<std::size_t>(r) + 1, 0);
    for (int i = 0; i <= rp; ++i) {
        lambda[static_cast<std::size_t>(i)] = inst.z[static_cast<std::size_t>(i)];
        lambda[static_cast<std::size_t>(3 * rp + i)] = inst.y[static_cast<std::size_t>(i)];
        lambda[static_cast<std::size_t>(9 * rp + i)] = inst.x[static_cast<std::size_t>(i)];
    }
    return {Composition(std::move(lambda)), kind, r};
}

PointSet gamma_embed(const PointSet& p, int r_prime) {
    std::vector<Point3> out;
    for (const auto& q : p) out.push_back({q.x + 9 * r_prime, q.y + 3 * r_prime, q.z});
    return PointSet(std::move(out));
}

PointSet gamma_extract(const PointSet& p, int r_prime) {
    std::vector<Point3> out;
    auto inside = [](int v, int lo, int hi) { return lo <= v && v <= hi; };
    for (const auto& q : p) {
        if (!inside(q.x, 9 * r_prime, 10 * r_prime) || !inside(q.y, 3 * r_prime, 4 * r_prime) || !inside(q.z, 0, r_prime))
            throw std::domain_error("gamma_extract: " + format(q) + " is not in the image of gamma");
        out.push_back({q.x - 9 * r_prime, q.y - 3 * r_prime, q.z});
    }
    return PointSet(std::move(out));
}

SymInstance canonical_zero_promise(ConeKind kind) {
    // (0,3): one point (1,1,1), outside the open cone.
    // (8,0,0,1): needs (3,0,0) and (0,0,0) twice.
    return {kind == ConeKind::open ? Composition{0, 3} : Composition{8, 0, 0, 1}, kind, std::nullopt};
}

SymInstance embed_pyramid_3d(const Composition& lambda_hat, int r, ConeKind kind) {
    if (r < 0) throw std::invalid_argument("embed_pyramid_3d: negative r");
    if (lambda_hat.size() % 3 != 0 || lambda_hat.coordinate_sum() != r * (lambda_hat.size() / 3))
        return canonical_zero_promise(kind);
    return {sum_marginal(complete_pyramid(r - 1, kind)) + lambda_hat, kind, std::nullopt};
}

PlethysmInstance promise_to_plethysm(const Composition& lambda, ConeKind kind) {
    if (!is_promise_instance(lambda, kind))
        throw GateFailure("promise", format(lambda) + " is not a promise instance for the " + to_string(kind) + " cone");
    const auto p = Partition::from(lambda);
    if (!p) return trivial_no_instance();
    const int n = static_cast<int>(lambda.size() / 3);
    if (kind == ConeKind::closed) return {*p, n, 3, Variant::b};
    return {p->transpose(), n, 3, Variant::a};
}

AxisMarginals simplex_marginals(int r) { return axis_marginals(full_simplex(r)); }

KroneckerTriple kronecker_triple(const XRayInstance2D& inst, int q_index) {
    if (!is_feasible(inst)) throw GateFailure("feasibility", "the 2D instance is trivially unsatisfiable");
    const AxisMarginals q = q_index < 0 ? AxisMarginals{} : simplex_marginals(q_index);
    auto shifted = [](const Composition& c, const Composition& add, const char* axis) {
        const auto p = Partition::from(c + add);
        if (!p) throw GateFailure("partition", std::string(axis) + " marginal plus the simplex marginal " + format(c + add) + " is not a partition");
        return p->transpose();
    };
    return {shifted(inst.x, q.x, "X"), shifted(inst.y, q.y, "Y"), shifted(inst.z, q.z, "Z")};
}

KroneckerPlethysm kronecker_plethysm_triple(const XRayInstance2D& inst) {
    if (inst.r <= 0) throw std::invalid_argument("kronecker_plethysm_triple: r must be positive");
    KroneckerPlethysm out;
    out.kronecker = kronecker_triple(inst, inst.r - 1);
    const int r = 13 * inst.r;
    for (ConeKind kind : {ConeKind::open, ConeKind::closed}) {
        const SymInstance layer = symmetrize_2d(inst, kind);
        const SymInstance cone = embed_pyramid_3d(layer.marginal, r, kind);
        (kind == ConeKind::open ? out.a : out.b) = promise_to_plethysm(cone.marginal, kind);
    }
    return out;
}

}  // namespace plethysm
