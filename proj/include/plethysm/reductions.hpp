#pragma once

#include "plethysm/bigint.hpp"
#include "plethysm/partition.hpp"
#include "plethysm/symmetric_functions.hpp"
#include "plethysm/tomography.hpp"

#include <stdexcept>
#include <string>
#include <variant>

namespace plethysm {

/// Query for a_lambda(n, m) (variant a) or b_lambda(n, m) (variant b).
struct PlethysmInstance {
    Partition lambda;
    int n = 0;
    int m = 0;
    Variant variant = Variant::a;

    bool operator==(const PlethysmInstance&) const = default;
};

std::string format(const PlethysmInstance& q);

/// b_(2,1)(1,3), which is 0.
PlethysmInstance trivial_no_instance();

struct TriviallyZero {
    std::string reason;
};

struct KroneckerTriple {
    Partition mu;
    Partition nu;
    Partition rho;

    bool operator==(const KroneckerTriple&) const = default;
};

/// Raised when an input fails a promise or feasibility precondition.
class GateFailure : public std::domain_error {
public:
    GateFailure(std::string gate, const std::string& what)
        : std::domain_error(what), gate_(std::move(gate)) {}
    const std::string& gate() const noexcept { return gate_; }

private:
    std::string gate_;
};

/// Coefficient of a PlethysmInstance from the symmetric-function oracle.
CoefficientResult evaluate(const PlethysmInstance& q);

/// Coefficient for m = 3 by tomography: a promise instance collapses to a
/// pyramid count; otherwise a Jacobi-Trudi sum over point-set counts.
/// Throws std::invalid_argument unless m = 3.
CoefficientResult evaluate_by_counting(const PlethysmInstance& q, const CountOptions& opts = {});

/// Prepends a row of width n to lambda^t: a_lambda(n,m) = b_pi(n,m+1), and
/// b_lambda(n,m) = a_pi(n,m+1). TriviallyZero when height(lambda) > n.
/// Throws std::invalid_argument unless |lambda| = n*m.
std::variant<PlethysmInstance, TriviallyZero> inner_lift(const Partition& lambda, int n, int m, Variant variant);

/// Sum of i * (x_i + y_i + z_i) = r|x| = r|y| = r|z| and all lengths <= r+1.
bool is_feasible(const XRayInstance2D& inst);

/// The 2D layer instance with r = 13r'. Infeasible inputs map to
/// canonical_zero_layer. Throws std::invalid_argument for r' = 0.
SymInstance symmetrize_2d(const XRayInstance2D& inst, ConeKind kind = ConeKind::closed);
SymInstance canonical_zero_layer(int r, ConeKind kind);

/// gamma(x,y,z) = (x + 9r', y + 3r', z).
PointSet gamma_embed(const PointSet& p, int r_prime);
/// Inverse of gamma_embed; throws std::domain_error for a point outside
/// [9r',10r'] x [3r',4r'] x [0,r'].
PointSet gamma_extract(const PointSet& p, int r_prime);

/// lambda = S(P_{r-1}) + lambda_hat as a 3D promise instance. Inputs with
/// |lambda_hat| % 3 != 0 or B(lambda_hat) != r|lambda_hat|/3 map to canonical_zero_promise.
SymInstance embed_pyramid_3d(const Composition& lambda_hat, int r, ConeKind kind);
/// A promise instance with no solutions.
SymInstance canonical_zero_promise(ConeKind kind);

/// Promise instance -> plethysm query with the same count. Throws
/// GateFailure("promise") when lambda is not a promise instance.
PlethysmInstance promise_to_plethysm(const Composition& lambda, ConeKind kind);

/// X, Y and Z marginals of the simplex {x + y + z <= r}.
AxisMarginals simplex_marginals(int r);

struct KroneckerPlethysm {
    KroneckerTriple kronecker;
    PlethysmInstance a;  // open cone chain
    PlethysmInstance b;  // closed cone chain
};

/// ((x + X(Q_s))^t, (y + Y(Q_s))^t, (z + Z(Q_s))^t) for s = q_index; s < 0 adds nothing.
/// Throws GateFailure("feasibility") or GateFailure("partition").
KroneckerTriple kronecker_triple(const XRayInstance2D& inst, int q_index);

/// Triple with Q_{r-1}, plus the open and closed plethysm queries, all three
/// equal to count_2dxray(inst). Gates as kronecker_triple; std::invalid_argument for r = 0.
KroneckerPlethysm kronecker_plethysm_triple(const XRayInstance2D& inst);

}  // namespace plethysm
