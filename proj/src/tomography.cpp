#include "plethysm/tomography.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace plethysm {

int Point3::max() const noexcept { return std::max({x, y, z}); }

std::string format(const Point3& p) {
    return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + "," + std::to_string(p.z) + ")";
}

std::string to_string(ConeKind kind) { return kind == ConeKind::open ? "open" : "closed"; }

PointSet::PointSet(std::vector<Point3> points) : points_(std::move(points)) {
    for (const auto& p : points_) {
        if (p.x < 0 || p.y < 0 || p.z < 0)
            throw std::invalid_argument("PointSet: negative coordinate in " + format(p));
    }
    std::sort(points_.begin(), points_.end());
    auto dup = std::adjacent_find(points_.begin(), points_.end());
    if (dup != points_.end()) throw std::invalid_argument("PointSet: duplicate point " + format(*dup));
}

PointSet::PointSet(std::initializer_list<Point3> points) : PointSet(std::vector<Point3>(points)) {}

bool PointSet::contains(const Point3& p) const {
    return std::binary_search(points_.begin(), points_.end(), p);
}

PointSet PointSet::disjoint_union(const PointSet& other) const {
    std::vector<Point3> all(points_);
    all.insert(all.end(), other.points_.begin(), other.points_.end());
    return PointSet(std::move(all));
}

namespace {

void bump(std::vector<int>& v, int i) {
    if (static_cast<std::size_t>(i) >= v.size()) v.resize(static_cast<std::size_t>(i) + 1, 0);
    ++v[static_cast<std::size_t>(i)];
}

struct VectorHash {
    std::size_t operator()(const std::vector<int>& v) const noexcept {
        std::size_t h = v.size();
        for (int e : v) h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

std::vector<int> padded(const Composition& c, std::size_t len) {
    std::vector<int> v(c.parts());
    v.resize(len, 0);
    return v;
}

// Runs fn(i) for i in [0, n) over `workers` threads; each thread gets its own slot.
template <class Fn>
void run_parallel(std::size_t n, unsigned workers, Fn fn) {
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
    if (workers == 1) {
        for (std::size_t i = 0; i < n; ++i) fn(0u, i);
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < n; i += workers) fn(w, i);
        });
    }
    for (auto& t : pool) t.join();
}

// Search tables for "subsets of a candidate list with a given pooled
// coordinate histogram". Points are grouped by their largest coordinate t;
// once level t is decided, entry t of the target is final.
struct SumTables {
    struct Level {
        std::vector<Point3> pts;       // by coordinate sum, ascending
        std::vector<int> occ;          // coordinates equal to t, per point
        std::vector<int> occ_suffix;   // suffix sums of occ
        std::vector<int> hist_suffix;  // (pts.size()+1) x bins, sums of pts[p..]
    };

    int len = 0;
    int bins = 0;
    std::vector<Level> levels;
    std::vector<std::vector<int>> low_hist;  // sums of candidates below level t
    std::vector<int> target;

    SumTables(const std::vector<Point3>& candidates, const Composition& lambda) {
        len = static_cast<int>(lambda.length());
        target = lambda.parts();
        bins = std::max(1, 3 * (len - 1) + 1);
        levels.resize(static_cast<std::size_t>(len));
        for (const auto& p : candidates) {
            if (p.max() < len) levels[static_cast<std::size_t>(p.max())].pts.push_back(p);
        }
        for (int t = 0; t < len; ++t) {
            auto& lv = levels[static_cast<std::size_t>(t)];
            std::sort(lv.pts.begin(), lv.pts.end(), [](const Point3& a, const Point3& b) {
                return a.sum() != b.sum() ? a.sum() < b.sum() : a < b;
            });
            const std::size_t n = lv.pts.size();
            lv.occ.resize(n);
            lv.occ_suffix.assign(n + 1, 0);
            lv.hist_suffix.assign((n + 1) * static_cast<std::size_t>(bins), 0);
            for (std::size_t p = n; p-- > 0;) {
                const auto& q = lv.pts[p];
                lv.occ[p] = (q.x == t) + (q.y == t) + (q.z == t);
                lv.occ_suffix[p] = lv.occ_suffix[p + 1] + lv.occ[p];
                std::copy_n(lv.hist_suffix.begin() + static_cast<long>((p + 1) * static_cast<std::size_t>(bins)),
                            bins, lv.hist_suffix.begin() + static_cast<long>(p * static_cast<std::size_t>(bins)));
                ++lv.hist_suffix[p * static_cast<std::size_t>(bins) + static_cast<std::size_t>(q.sum())];
            }
        }
        low_hist.assign(static_cast<std::size_t>(len), std::vector<int>(static_cast<std::size_t>(bins), 0));
        for (int t = 1; t < len; ++t) {
            low_hist[static_cast<std::size_t>(t)] = low_hist[static_cast<std::size_t>(t - 1)];
            for (const auto& q : levels[static_cast<std::size_t>(t - 1)].pts)
                ++low_hist[static_cast<std::size_t>(t)][static_cast<std::size_t>(q.sum())];
        }
    }

    // Is some k-subset of (lower levels + level t from position p on) summing to b?
    // Only the extreme k-sums are checked.
    bool sum_feasible(int t, std::size_t p, long k, long b, bool with_suffix) const {
        if (k == 0) return b == 0;
        const auto& low = low_hist[static_cast<std::size_t>(t)];
        const int* suf = levels[static_cast<std::size_t>(t)].hist_suffix.data() + p * static_cast<std::size_t>(bins);
        auto at = [&](int s) { return low[static_cast<std::size_t>(s)] + (with_suffix ? suf[s] : 0); };
        long lo = 0, need = k;
        for (int s = 0; s < bins && need > 0; ++s) {
            const long take = std::min<long>(need, at(s));
            lo += take * s;
            need -= take;
        }
        if (need > 0) return false;
        long hi = 0;
        need = k;
        for (int s = bins - 1; s >= 0 && need > 0; --s) {
            const long take = std::min<long>(need, at(s));
            hi += take * s;
            need -= take;
        }
        return lo <= b && b <= hi;
    }
};

class SumSearch {
public:
    explicit SumSearch(const SumTables& tab) : tab_(tab), memo_(static_cast<std::size_t>(tab.len)) {}

    BigInt count_level(int t, std::vector<int>& res) {
        if (t < 0) return 1;
        auto& memo = memo_[static_cast<std::size_t>(t)];
        if (auto it = memo.find(res); it != memo.end()) return it->second;
        BigInt total = 0;
        std::vector<Point3> chosen;
        for_each_choice(t, res, chosen, [&](std::vector<int>& child) { total += count_level(t - 1, child); });
        memo.emplace(res, total);
        return total;
    }

    // Calls fn(child residual) for every admissible subset of level t.
    template <class Fn>
    void for_each_choice(int t, const std::vector<int>& res, std::vector<Point3>& chosen, Fn&& fn) {
        long k = 0, b = 0;
        for (int i = 0; i <= t; ++i) {
            k += res[static_cast<std::size_t>(i)];
            b += static_cast<long>(i) * res[static_cast<std::size_t>(i)];
        }
        if (k % 3 != 0) return;
        std::vector<int> work(res.begin(), res.begin() + t);
        walk(t, 0, res[static_cast<std::size_t>(t)], k / 3, b, work, chosen, fn);
    }

private:
    template <class Fn>
    void walk(int t, std::size_t p, int need, long k, long b, std::vector<int>& work,
              std::vector<Point3>& chosen, Fn& fn) {
        const auto& lv = tab_.levels[static_cast<std::size_t>(t)];
        if (need == 0) {
            if (tab_.sum_feasible(t, 0, k, b, false)) fn(work);
            return;
        }
        if (p == lv.pts.size() || lv.occ_suffix[p] < need) return;
        if (!tab_.sum_feasible(t, p, k, b, true)) return;

        const Point3& q = lv.pts[p];
        if (lv.occ[p] <= need) {
            bool ok = true;
            for (int c : {q.x, q.y, q.z}) {
                if (c < t && --work[static_cast<std::size_t>(c)] < 0) ok = false;
            }
            if (ok) {
                chosen.push_back(q);
                walk(t, p + 1, need - lv.occ[p], k - 1, b - q.sum(), work, chosen, fn);
                chosen.pop_back();
            }
            for (int c : {q.x, q.y, q.z}) {
                if (c < t) ++work[static_cast<std::size_t>(c)];
            }
        }
        walk(t, p + 1, need, k, b, work, chosen, fn);
    }

    const SumTables& tab_;
    std::vector<std::unordered_map<std::vector<int>, BigInt, VectorHash>> memo_;
};

BigInt count_sum_marginal(const std::vector<Point3>& candidates, const Composition& lambda,
                          const CountOptions& opts) {
    if (lambda.empty()) return 1;
    if (lambda.size() % 3 != 0) return 0;
    const SumTables tab(candidates, lambda);
    const int top = tab.len - 1;
    std::vector<int> res(tab.target);

    // Fan out over the choices at the top level; duplicates are merged.
    std::map<std::vector<int>, long> children;
    {
        SumSearch probe(tab);
        std::vector<Point3> chosen;
        probe.for_each_choice(top, res, chosen, [&](std::vector<int>& child) { ++children[child]; });
    }
    std::vector<std::pair<std::vector<int>, long>> jobs(children.begin(), children.end());
    const unsigned workers = std::max(1u, opts.workers);
    std::vector<SumSearch> searches(workers, SumSearch(tab));
    std::vector<BigInt> partial(workers, 0);
    run_parallel(jobs.size(), workers, [&](unsigned w, std::size_t i) {
        auto child = jobs[i].first;
        partial[w] += searches[w].count_level(top - 1, child) * jobs[i].second;
    });
    return std::accumulate(partial.begin(), partial.end(), BigInt(0));
}

void enumerate_sum_marginal(const std::vector<Point3>& candidates, const Composition& lambda,
                            std::size_t limit, std::vector<PointSet>& out) {
    if (limit == 0) return;
    if (lambda.empty()) {
        out.emplace_back();
        return;
    }
    if (lambda.size() % 3 != 0) return;
    const SumTables tab(candidates, lambda);
    SumSearch search(tab);
    std::vector<Point3> acc;
    std::function<void(int, std::vector<int>&)> level = [&](int t, std::vector<int>& res) {
        if (out.size() >= limit) return;
        if (t < 0) {
            out.emplace_back(acc);
            return;
        }
        std::vector<Point3> chosen;
        search.for_each_choice(t, res, chosen, [&](std::vector<int>& child) {
            if (out.size() >= limit) return;
            acc.insert(acc.end(), chosen.begin(), chosen.end());
            level(t - 1, child);
            acc.resize(acc.size() - chosen.size());
        });
    };
    std::vector<int> res(tab.target);
    level(tab.len - 1, res);
}

std::vector<Point3> cone_points(int max_coord, ConeKind kind) {
    std::vector<Point3> out;
    for (int x = 0; x <= max_coord; ++x)
        for (int y = 0; y <= x; ++y)
            for (int z = 0; z <= y; ++z)
                if (in_cone({x, y, z}, kind)) out.push_back({x, y, z});
    return out;
}

std::vector<Point3> layer_cone_points(int r, ConeKind kind) {
    std::vector<Point3> out;
    for (int x = 0; x <= r; ++x)
        for (int y = 0; x + y <= r; ++y)
            if (Point3 p{x, y, r - x - y}; in_cone(p, kind)) out.push_back(p);
    return out;
}

// Down-sets of the cone, decided in (sum, point) order so that lower covers
// come first.
class PyramidSearch {
public:
    PyramidSearch(const Composition& lambda, ConeKind kind) {
        const int len = static_cast<int>(lambda.length());
        res_ = lambda.parts();
        for (std::size_t i = 0; i < res_.size(); ++i) b_ += static_cast<long>(i) * res_[i];
        k_ = static_cast<long>(lambda.size() / 3);
        for (const auto& p : cone_points(len - 1, kind)) {
            if (p.sum() <= b_) pts_.push_back(p);
        }
        std::sort(pts_.begin(), pts_.end(), [](const Point3& a, const Point3& b) {
            return a.sum() != b.sum() ? a.sum() < b.sum() : a < b;
        });
        std::map<Point3, std::size_t> index;
        for (std::size_t i = 0; i < pts_.size(); ++i) index.emplace(pts_[i], i);
        covers_.resize(pts_.size());
        for (std::size_t i = 0; i < pts_.size(); ++i) {
            const Point3& p = pts_[i];
            for (Point3 q : {Point3{p.x - 1, p.y, p.z}, Point3{p.x, p.y - 1, p.z}, Point3{p.x, p.y, p.z - 1}}) {
                if (q.x < 0 || q.y < 0 || q.z < 0 || !in_cone(q, kind)) continue;
                auto it = index.find(q);
                // a lower cover outside the candidates can never be present
                covers_[i].push_back(it == index.end() ? kMissing : it->second);
            }
        }
        prefix_.assign(pts_.size() + 1, 0);
        for (std::size_t i = 0; i < pts_.size(); ++i) prefix_[i + 1] = prefix_[i] + pts_[i].sum();
        included_.assign(pts_.size(), 0);
    }

    BigInt count() {
        if (res_.empty()) return 1;
        return step(0);
    }

private:
    static constexpr std::size_t kMissing = std::numeric_limits<std::size_t>::max();

    BigInt step(std::size_t p) {
        if (k_ == 0) return b_ == 0 ? 1 : 0;
        const std::size_t n = pts_.size();
        if (n - p < static_cast<std::size_t>(k_)) return 0;
        const std::size_t k = static_cast<std::size_t>(k_);
        if (b_ < prefix_[p + k] - prefix_[p] || b_ > prefix_[n] - prefix_[n - k]) return 0;

        BigInt total = 0;
        const Point3& q = pts_[p];
        bool ok = std::all_of(covers_[p].begin(), covers_[p].end(),
                              [&](std::size_t c) { return c != kMissing && included_[c]; });
        if (ok) {
            for (int c : {q.x, q.y, q.z}) {
                if (--res_[static_cast<std::size_t>(c)] < 0) ok = false;
            }
            if (ok) {
                included_[p] = 1;
                --k_;
                b_ -= q.sum();
                total += step(p + 1);
                b_ += q.sum();
                ++k_;
                included_[p] = 0;
            }
            for (int c : {q.x, q.y, q.z}) ++res_[static_cast<std::size_t>(c)];
        }
        total += step(p + 1);
        return total;
    }

    std::vector<Point3> pts_;
    std::vector<std::vector<std::size_t>> covers_;
    std::vector<long> prefix_;
    std::vector<char> included_;
    std::vector<int> res_;
    long k_ = 0;
    long b_ = 0;
};

// 2D X-ray search on G_r: x ascending, choosing the y values at each x.
class XRay2DSearch {
public:
    explicit XRay2DSearch(const XRayInstance2D& inst) : r_(inst.r), mu_(padded(inst.x, static_cast<std::size_t>(inst.r) + 1)) {}

    template <class Fn>
    void for_each_choice(int x, const std::vector<int>& nu, const std::vector<int>& rho,
                         std::vector<Point3>& chosen, Fn&& fn) {
        std::vector<int> nu_w(nu), rho_w(rho);
        pick(x, 0, mu_[static_cast<std::size_t>(x)], nu_w, rho_w, chosen, fn);
    }

    BigInt count_from(int x, const std::vector<int>& nu, const std::vector<int>& rho) {
        if (x > r_) return 1;
        auto key = nu;
        key.insert(key.end(), rho.begin(), rho.end());
        key.push_back(x);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        BigInt total = 0;
        std::vector<Point3> chosen;
        for_each_choice(x, nu, rho, chosen, [&](const std::vector<int>& n2, const std::vector<int>& r2) {
            total += count_from(x + 1, n2, r2);
        });
        memo_.emplace(std::move(key), total);
        return total;
    }

    int r() const { return r_; }

private:
    template <class Fn>
    void pick(int x, int y, int left, std::vector<int>& nu, std::vector<int>& rho,
              std::vector<Point3>& chosen, Fn& fn) {
        const int span = r_ - x;
        if (left == 0) {
            // later points have y, z <= r - x - 1
            for (int v = span; v <= r_; ++v) {
                if (nu[static_cast<std::size_t>(v)] != 0 || rho[static_cast<std::size_t>(v)] != 0) return;
            }
            fn(nu, rho);
            return;
        }
        if (span - y + 1 < left) return;
        const int z = span - y;
        if (nu[static_cast<std::size_t>(y)] > 0 && rho[static_cast<std::size_t>(z)] > 0) {
            --nu[static_cast<std::size_t>(y)];
            --rho[static_cast<std::size_t>(z)];
            chosen.push_back({x, y, z});
            pick(x, y + 1, left - 1, nu, rho, chosen, fn);
            chosen.pop_back();
            ++nu[static_cast<std::size_t>(y)];
            ++rho[static_cast<std::size_t>(z)];
        }
        pick(x, y + 1, left, nu, rho, chosen, fn);
    }

    int r_;
    std::vector<int> mu_;
    std::unordered_map<std::vector<int>, BigInt, VectorHash> memo_;
};

bool xray2d_shape_ok(const XRayInstance2D& inst) {
    if (inst.r < 0) throw std::invalid_argument("count_2dxray: negative r");
    const auto lim = static_cast<std::size_t>(inst.r) + 1;
    if (inst.x.length() > lim || inst.y.length() > lim || inst.z.length() > lim) return false;
    if (inst.x.size() != inst.y.size() || inst.y.size() != inst.z.size()) return false;
    return inst.x.coordinate_sum() + inst.y.coordinate_sum() + inst.z.coordinate_sum() ==
           static_cast<long>(inst.r) * inst.x.size();
}

// 3D X-ray search: x ascending, choosing distinct (y, z) pairs at each x.
class XRay3DSearch {
public:
    XRay3DSearch(const Composition& x, std::size_t ny, std::size_t nz) : mu_(x.parts()), ny_(ny), nz_(nz) {}

    BigInt count_from(std::size_t x, std::vector<int>& nu, std::vector<int>& rho) {
        if (x == mu_.size()) return 1;
        auto key = nu;
        key.insert(key.end(), rho.begin(), rho.end());
        key.push_back(static_cast<int>(x));
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        BigInt total = 0;
        pick(x, 0, mu_[x], nu, rho, total);
        memo_.emplace(std::move(key), total);
        return total;
    }

private:
    void pick(std::size_t x, std::size_t cell, int left, std::vector<int>& nu, std::vector<int>& rho, BigInt& total) {
        if (left == 0) {
            total += count_from(x + 1, nu, rho);
            return;
        }
        if (ny_ * nz_ - cell < static_cast<std::size_t>(left)) return;
        const std::size_t y = cell / nz_, z = cell % nz_;
        if (nu[y] > 0 && rho[z] > 0) {
            --nu[y];
            --rho[z];
            pick(x, cell + 1, left - 1, nu, rho, total);
            ++nu[y];
            ++rho[z];
        }
        pick(x, cell + 1, left, nu, rho, total);
    }

    std::vector<int> mu_;
    std::size_t ny_, nz_;
    std::unordered_map<std::vector<int>, BigInt, VectorHash> memo_;
};

}  // namespace

Composition sum_marginal(const PointSet& p) {
    std::vector<int> s;
    for (const auto& q : p) {
        bump(s, q.x);
        bump(s, q.y);
        bump(s, q.z);
    }
    return Composition(std::move(s));
}

AxisMarginals axis_marginals(const PointSet& p) {
    std::vector<int> x, y, z;
    for (const auto& q : p) {
        bump(x, q.x);
        bump(y, q.y);
        bump(z, q.z);
    }
    return {Composition(std::move(x)), Composition(std::move(y)), Composition(std::move(z))};
}

bool in_cone(const Point3& p, ConeKind kind) noexcept {
    if (p.z < 0) return false;
    return kind == ConeKind::open ? (p.x > p.y && p.y > p.z) : (p.x >= p.y && p.y >= p.z);
}

bool is_pyramid(const PointSet& p, ConeKind kind) {
    for (const auto& q : p) {
        if (!in_cone(q, kind)) throw std::invalid_argument("is_pyramid: point " + format(q) + " outside the cone");
    }
    for (const auto& q : p) {
        for (Point3 lower : {Point3{q.x - 1, q.y, q.z}, Point3{q.x, q.y - 1, q.z}, Point3{q.x, q.y, q.z - 1}}) {
            if (in_cone(lower, kind) && !p.contains(lower)) return false;
        }
    }
    return true;
}

PointSet complete_pyramid(int r, ConeKind kind) {
    std::vector<Point3> pts;
    for (const auto& p : cone_points(std::max(r, 0), kind)) {
        if (p.sum() <= r) pts.push_back(p);
    }
    return PointSet(std::move(pts));
}

PointSet full_simplex(int r) {
    std::vector<Point3> pts;
    for (int x = 0; x <= r; ++x)
        for (int y = 0; x + y <= r; ++y)
            for (int z = 0; x + y + z <= r; ++z) pts.push_back({x, y, z});
    return PointSet(std::move(pts));
}

long xi(long i, ConeKind kind) noexcept {
    if (i < 0) return 0;
    // nearest integers to (i+3)^2/12 and i^2/12; the fractions never end in .5
    if (kind == ConeKind::closed) return ((i + 3) * (i + 3) + 6) / 12;
    return (i * i + 6) / 12;
}

long iota(long n, ConeKind kind) noexcept {
    long acc = 0;
    long i = 0;
    for (;; ++i) {
        acc += xi(i, kind);
        if (acc >= n) return i;
    }
}

long beta(long n, ConeKind kind) noexcept {
    long total = 0;
    long i = 0;
    long acc = xi(0, kind);
    for (long m = 1; m <= n; ++m) {
        while (acc < m) acc += xi(++i, kind);
        total += i;
    }
    return total;
}

bool is_promise_instance(const Composition& lambda, ConeKind kind) {
    if (lambda.size() % 3 != 0) return false;
    return lambda.coordinate_sum() == beta(lambda.size() / 3, kind);
}

BigInt count_point_sets(const Composition& lambda, ConeKind kind, const CountOptions& opts) {
    if (lambda.empty()) return 1;
    return count_sum_marginal(cone_points(static_cast<int>(lambda.length()) - 1, kind), lambda, opts);
}

BigInt count_pyramids(const Composition& lambda, ConeKind kind, const CountOptions&) {
    if (lambda.size() % 3 != 0) return 0;
    PyramidSearch search(lambda, kind);
    return search.count();
}

BigInt count_2dxray(const XRayInstance2D& inst, const CountOptions& opts) {
    if (!xray2d_shape_ok(inst)) return 0;
    const auto lim = static_cast<std::size_t>(inst.r) + 1;
    const auto nu = padded(inst.y, lim), rho = padded(inst.z, lim);

    XRay2DSearch probe(inst);
    std::vector<std::pair<std::vector<int>, std::vector<int>>> jobs;
    std::vector<Point3> chosen;
    probe.for_each_choice(0, nu, rho, chosen, [&](const std::vector<int>& n2, const std::vector<int>& r2) {
        jobs.emplace_back(n2, r2);
    });
    const unsigned workers = std::max(1u, opts.workers);
    std::vector<XRay2DSearch> searches(workers, XRay2DSearch(inst));
    std::vector<BigInt> partial(workers, 0);
    run_parallel(jobs.size(), workers, [&](unsigned w, std::size_t i) {
        partial[w] += searches[w].count_from(1, jobs[i].first, jobs[i].second);
    });
    return std::accumulate(partial.begin(), partial.end(), BigInt(0));
}

BigInt count_sym_2dxray(const Composition& lambda, int r, ConeKind kind, const CountOptions& opts) {
    if (r < 0) throw std::invalid_argument("count_sym_2dxray: negative r");
    if (lambda.empty()) return 1;
    if (static_cast<int>(lambda.length()) > r + 1) return 0;
    return count_sum_marginal(layer_cone_points(r, kind), lambda, opts);
}

BigInt count_3dxray(const Composition& x, const Composition& y, const Composition& z, const CountOptions&) {
    if (x.size() != y.size() || y.size() != z.size()) return 0;
    if (x.empty()) return 1;
    std::vector<int> nu(y.parts()), rho(z.parts());
    XRay3DSearch search(x, nu.size(), rho.size());
    return search.count_from(0, nu, rho);
}

BigInt count(const SymInstance& inst, const CountOptions& opts) {
    if (inst.grid_r) return count_sym_2dxray(inst.marginal, *inst.grid_r, inst.cone, opts);
    return count_point_sets(inst.marginal, inst.cone, opts);
}

std::vector<PointSet> enumerate_point_sets(const SymInstance& inst, std::size_t limit) {
    std::vector<PointSet> out;
    const Composition& lambda = inst.marginal;
    if (inst.grid_r) {
        if (*inst.grid_r < 0) throw std::invalid_argument("enumerate_point_sets: negative r");
        if (static_cast<int>(lambda.length()) > *inst.grid_r + 1) return out;
        enumerate_sum_marginal(layer_cone_points(*inst.grid_r, inst.cone), lambda, limit, out);
    } else {
        enumerate_sum_marginal(cone_points(static_cast<int>(lambda.length()) - 1, inst.cone), lambda, limit, out);
    }
    return out;
}

std::vector<PointSet> enumerate_2dxray(const XRayInstance2D& inst, std::size_t limit) {
    std::vector<PointSet> out;
    if (limit == 0 || !xray2d_shape_ok(inst)) return out;
    const auto lim = static_cast<std::size_t>(inst.r) + 1;
    XRay2DSearch search(inst);
    std::vector<Point3> acc;
    std::function<void(int, const std::vector<int>&, const std::vector<int>&)> level =
        [&](int x, const std::vector<int>& nu, const std::vector<int>& rho) {
            if (out.size() >= limit) return;
            if (x > inst.r) {
                out.emplace_back(acc);
                return;
            }
            std::vector<Point3> chosen;
            search.for_each_choice(x, nu, rho, chosen, [&](const std::vector<int>& n2, const std::vector<int>& r2) {
                if (out.size() >= limit) return;
                acc.insert(acc.end(), chosen.begin(), chosen.end());
                level(x + 1, n2, r2);
                acc.resize(acc.size() - chosen.size());
            });
        };
    level(0, padded(inst.y, lim), padded(inst.z, lim));
    return out;
}

}  // namespace plethysm
