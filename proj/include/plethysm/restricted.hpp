#pragma once

#include "plethysm/bigint.hpp"
#include "plethysm/partition.hpp"
#include "plethysm/symmetric_functions.hpp"
#include "plethysm/tomography.hpp"

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

namespace plethysm {

/// Sym: nu = (3), closed cone. Wedge: nu = (1,1,1), open cone.
enum class PsiVariant { Sym, Wedge };

std::string to_string(PsiVariant v);
ConeKind cone_of(PsiVariant v) noexcept;
Partition inner_of(PsiVariant v);

/// |P_r| for the cone; 0 for r < 0.
long complete_pyramid_size(int r, ConeKind kind);

struct PsiColumn {
    int n = 0;         // column length n_j
    int r = 0;         // least r with n_j < |P_r|
    long n_check = 0;  // |P_{r-1}|
    long n_hat = 0;    // n_j - n_check

    bool operator==(const PsiColumn&) const = default;
};

struct PsiDecomposition {
    PsiVariant variant = PsiVariant::Sym;
    std::vector<PsiColumn> columns;
};

PsiDecomposition psi_decompose(const Partition& mu, PsiVariant variant);

/// Ordered tuples (lambda_hat^0, ..., lambda_hat^l) splitting
/// lambda - sum_j S(P_{r_j - 1}) into layer parts: |lambda_hat^j| = 3 n_hat_j,
/// sum_i i * lambda_hat^j_i = n_hat_j * r_j, support in [0, r_j].
std::vector<std::vector<Composition>> psi_splits(const Partition& mu, const Composition& lambda, PsiVariant variant,
                                                 std::size_t limit = std::numeric_limits<std::size_t>::max());

/// Throws std::invalid_argument unless nu is (3) or (1,1,1).
bool psi_membership(const Partition& mu, const Partition& nu, const Composition& lambda);

/// How the order on cone points breaks ties between equal coordinate sums.
enum class Tiebreak { lex, reverse_lex };

/// Cone points with coordinates <= max_coord, sorted by coordinate sum and then the tiebreak.
std::vector<Point3> cone_alphabet(int max_coord, ConeKind kind, Tiebreak tiebreak);

/// Semistandard tableaux of shape mu over the ordered cone alphabet whose
/// pooled sum-marginal is lambda. No membership requirement.
BigInt count_cone_tableaux(const Partition& mu, const Composition& lambda, PsiVariant variant,
                           Tiebreak tiebreak = Tiebreak::lex);
std::vector<Tableau<Point3>> enumerate_cone_ssyt(const Partition& mu, const Composition& lambda, PsiVariant variant,
                                                 Tiebreak tiebreak = Tiebreak::lex,
                                                 std::size_t limit = std::numeric_limits<std::size_t>::max());

/// count_cone_tableaux restricted to Psi instances, where it equals p_lambda(mu, nu).
/// Throws GateFailure("psi") otherwise.
CoefficientResult count_cone_ssyt(const Partition& mu, const Composition& lambda, PsiVariant variant,
                                  Tiebreak tiebreak = Tiebreak::lex);

/// The two layer clauses: the top n_check_j boxes of column j hold the
/// smallest points in order (row i holds the i-th smallest), and the boxes
/// below hold points of coordinate sum r_j.
bool tableau_layers_check(const Tableau<Point3>& t, const PsiDecomposition& dec, Tiebreak tiebreak = Tiebreak::lex);

}  // namespace plethysm
