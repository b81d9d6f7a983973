#pragma once

#include "plethysm/bigint.hpp"
#include "plethysm/partition.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace plethysm {

struct Point3 {
    int x = 0;
    int y = 0;
    int z = 0;

    int sum() const noexcept { return x + y + z; }
    int max() const noexcept;

    auto operator<=>(const Point3&) const = default;
};

std::string format(const Point3& p);

/// Open: x > y > z. Closed: x >= y >= z.
enum class ConeKind { open, closed };

std::string to_string(ConeKind kind);

/// A finite set of distinct points, kept sorted.
class PointSet {
public:
    PointSet() = default;
    /// Throws std::invalid_argument on duplicates or negative coordinates.
    explicit PointSet(std::vector<Point3> points);
    PointSet(std::initializer_list<Point3> points);

    const std::vector<Point3>& points() const noexcept { return points_; }
    std::size_t size() const noexcept { return points_.size(); }
    bool empty() const noexcept { return points_.empty(); }
    bool contains(const Point3& p) const;

    auto begin() const noexcept { return points_.begin(); }
    auto end() const noexcept { return points_.end(); }

    /// Set union; throws std::invalid_argument if the sets overlap.
    PointSet disjoint_union(const PointSet& other) const;

    bool operator==(const PointSet&) const = default;

private:
    std::vector<Point3> points_;
};

struct AxisMarginals {
    Composition x;
    Composition y;
    Composition z;

    bool operator==(const AxisMarginals&) const = default;
};

/// 2D X-ray instance on the grid G_r = {x + y + z = r}.
struct XRayInstance2D {
    int r = 0;
    Composition x;
    Composition y;
    Composition z;
};

/// Sum-marginal instance: in the cone, optionally restricted to the layer G_r.
struct SymInstance {
    Composition marginal;
    ConeKind cone = ConeKind::closed;
    std::optional<int> grid_r;
};

struct CountOptions {
    /// Worker threads for the top search level; results never depend on it.
    unsigned workers = 1;
};

/// S_i(P): occurrences of coordinate value i over all points, all axes pooled.
Composition sum_marginal(const PointSet& p);
AxisMarginals axis_marginals(const PointSet& p);

bool in_cone(const Point3& p, ConeKind kind) noexcept;

/// Throws std::invalid_argument if some point lies outside the cone.
bool is_pyramid(const PointSet& p, ConeKind kind);

/// Cone points with coordinate sum <= r.
PointSet complete_pyramid(int r, ConeKind kind);
/// All of N^3 with coordinate sum <= r.
PointSet full_simplex(int r);

/// B(c) = sum_i i * c_i.
inline long coordinate_sum(const Composition& c) noexcept { return c.coordinate_sum(); }

/// Number of cone points with coordinate sum exactly i (closed form).
long xi(long i, ConeKind kind) noexcept;
/// Smallest iota with xi(0) + ... + xi(iota) >= n.
long iota(long n, ConeKind kind) noexcept;
/// iota(1) + ... + iota(n); the least coordinate sum of n cone points.
long beta(long n, ConeKind kind) noexcept;

/// |lambda| divisible by 3 and B(lambda) = beta(|lambda| / 3).
bool is_promise_instance(const Composition& lambda, ConeKind kind);

/// Point sets in the cone with sum-marginal lambda.
BigInt count_point_sets(const Composition& lambda, ConeKind kind, const CountOptions& opts = {});
/// Pyramids in the cone with sum-marginal lambda.
BigInt count_pyramids(const Composition& lambda, ConeKind kind, const CountOptions& opts = {});

/// Point sets in G_r with the given X-, Y- and Z-marginals.
BigInt count_2dxray(const XRayInstance2D& inst, const CountOptions& opts = {});
/// Point sets in G_r intersected with the cone, with sum-marginal lambda.
BigInt count_sym_2dxray(const Composition& lambda, int r, ConeKind kind, const CountOptions& opts = {});
/// Point sets in N^3 with the given X-, Y- and Z-marginals.
BigInt count_3dxray(const Composition& x, const Composition& y, const Composition& z,
                    const CountOptions& opts = {});

/// Dispatches on grid_r: layer count when present, full cone count otherwise.
BigInt count(const SymInstance& inst, const CountOptions& opts = {});

/// Up to `limit` solutions of a sum-marginal instance (debugging and tests).
std::vector<PointSet> enumerate_point_sets(const SymInstance& inst, std::size_t limit);
/// Up to `limit` solutions of a 2D X-ray instance.
std::vector<PointSet> enumerate_2dxray(const XRayInstance2D& inst, std::size_t limit);

}  // namespace plethysm
