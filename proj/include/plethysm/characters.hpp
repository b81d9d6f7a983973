#pragma once

#include "plethysm/bigint.hpp"
#include "plethysm/partition.hpp"
#include "plethysm/symmetric_functions.hpp"

namespace plethysm {

/// Irreducible S_n character chi_shape on the class of `cycle_type`
/// (Murnaghan-Nakayama). Throws std::invalid_argument on size mismatch.
BigInt sn_character(const Partition& shape, const Partition& cycle_type);

/// z_tau = prod_i i^{m_i} m_i!, the centralizer order of the class tau.
BigInt centralizer_order(const Partition& cycle_type);

/// Kronecker coefficient via the character inner product
/// (1/n!) sum_tau |class tau| chi_mu chi_nu chi_rho. Throws on size mismatch.
CoefficientResult kronecker(const Partition& mu, const Partition& nu, const Partition& rho);

}  // namespace plethysm
