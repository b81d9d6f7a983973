#pragma once

#include "plethysm/bigint.hpp"
#include "plethysm/partition.hpp"

#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace plethysm {

/// A Young tableau: a shape plus a row-major filling.
template <typename Entry>
struct Tableau {
    Partition shape;
    std::vector<Entry> entries;

    /// Entry in row `i`, column `j`.
    const Entry& at(int i, int j) const {
        std::size_t offset = 0;
        for (int r = 0; r < i; ++r) offset += static_cast<std::size_t>(shape[static_cast<std::size_t>(r)]);
        return entries[offset + static_cast<std::size_t>(j)];
    }

    bool operator==(const Tableau&) const = default;
};

/// Per-letter entry counts of a tableau over 0..alphabet_size-1.
std::vector<int> weight(const Tableau<int>& t, int alphabet_size);

/// All semistandard tableaux of `shape` with entries in 0..alphabet_size-1.
std::vector<Tableau<int>> enumerate_ssyt(const Partition& shape, int alphabet_size);

/// Kostka number K_{shape,weight}: semistandard tableaux of `shape` and `weight`.
/// Throws std::invalid_argument when the sizes differ.
BigInt kostka(const Partition& shape, const Composition& weight);

/// Dimension of the Weyl module S^shape C^k (hook-content formula).
BigInt schur_dimension(const Partition& shape, const BigInt& k);

/// Raised by decompose_schur when the input is not a nonnegative Schur combination.
class NotSchurPositive : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Symmetric polynomial in `var_count` variables, stored as coefficients of
/// monomial symmetric functions m_kappa. Zero coefficients are never stored.
class SymPoly {
public:
    explicit SymPoly(int var_count);

    int var_count() const noexcept { return var_count_; }
    const std::map<Partition, BigInt>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    BigInt coeff(const Partition& key) const;
    /// Adds c * m_key. Throws std::invalid_argument if key has more parts than variables.
    void add(const Partition& key, const BigInt& c);

    SymPoly& operator+=(const SymPoly& other);
    SymPoly& operator-=(const SymPoly& other);
    SymPoly operator*(const BigInt& scalar) const;

    bool operator==(const SymPoly& other) const = default;

private:
    int var_count_;
    std::map<Partition, BigInt> terms_;
};

/// s_shape(X_0..X_{k-1}) in the monomial basis; zero when shape has more than k rows.
SymPoly schur_poly(const Partition& shape, int k);

/// Schur expansion by repeatedly peeling the lexicographically greatest term.
/// Returns (shape, multiplicity) in peeling order. Throws NotSchurPositive.
std::vector<std::pair<Partition, BigInt>> decompose_schur(const SymPoly& f);

enum class Method {
    JacobiTrudi,
    SchurPeeling,
    GradingZero,
    CharacterSum,
    PyramidCount,      // promise instance: the coefficient is a pyramid count
    PointSetDeterminant,  // Jacobi-Trudi with point-set counts as weight multiplicities
    ConeTableaux,      // semistandard tableaux over the cone alphabet
    TriviallyZero,
};

std::string to_string(Method m);

struct CoefficientResult {
    BigInt value;
    Method method;
};

/// Which outer functor a plethysm coefficient uses: a = Sym^n, b = Wedge^n.
enum class Variant { a, b };

std::string to_string(Variant v);

/// Monomial-basis data of one fixed plethysm s_outer[s_inner].
///
/// Caches the inner tableau weights per variable count, Kostka numbers of the
/// outer shape, and the computed q_kappa. Not thread-safe; use one per thread.
class PlethysmOracle {
public:
    PlethysmOracle(Partition outer, Partition inner);

    const Partition& outer() const noexcept { return outer_; }
    const Partition& inner() const noexcept { return inner_; }
    long degree() const noexcept { return outer_.size() * inner_.size(); }

    /// q_kappa: coefficient of X^kappa in s_outer[s_inner]. Zero on any negative
    /// entry or wrong total. Independent of the number of variables.
    BigInt weight_multiplicity(const std::vector<int>& kappa);

    /// s_outer[s_inner](X_0..X_{k-1}) in the monomial basis.
    SymPoly poly(int k);

    /// Signed Jacobi-Trudi sum over permutations giving p_lambda.
    BigInt jacobi_trudi(const Partition& lambda);

    /// p_lambda via Jacobi-Trudi up to `jacobi_trudi_max_height` rows, peeling beyond.
    CoefficientResult coefficient(const Partition& lambda);

    /// Full Schur expansion in k variables.
    std::vector<std::pair<Partition, BigInt>> decomposition(int k);

    static constexpr int jacobi_trudi_max_height = 9;

private:
    const std::vector<std::vector<int>>& letters(int k);
    const BigInt& outer_kostka(const std::vector<int>& mults);

    Partition outer_;
    Partition inner_;
    std::map<int, std::vector<std::vector<int>>> letters_;
    std::map<std::vector<int>, BigInt> kostka_cache_;
    std::map<std::vector<int>, BigInt> q_cache_;
};

/// s_outer[s_inner] in k variables. Throws std::invalid_argument for k <= 0.
SymPoly plethysm_poly(const Partition& outer, const Partition& inner, int k);

/// q_kappa(outer, inner) in k variables. Throws on size mismatch or length(kappa) > k.
BigInt weight_multiplicity(const Partition& outer, const Partition& inner,
                           const Composition& kappa, int k);

/// Jacobi-Trudi extraction of p_lambda(outer, inner). Throws on size mismatch.
BigInt jacobi_trudi_coeff(const Partition& lambda, const Partition& outer, const Partition& inner);

/// General plethysm coefficient p_lambda(outer, inner). Throws on size mismatch.
CoefficientResult general_plethysm(const Partition& lambda, const Partition& outer,
                                   const Partition& inner);

/// a_lambda(n, m) = p_lambda((n), (m)) or b_lambda(n, m) = p_lambda((1^n), (m)).
/// Wrong-size lambda yields 0.
CoefficientResult plethysm_coeff(const Partition& lambda, int n, int m, Variant variant);

struct DualityReport {
    bool ok = true;
    std::string counterexample;
};

/// Compares Wedge^n Wedge^m and Sym^n Wedge^m against a/b coefficients of the
/// transposed shapes, in k variables (k <= 0 means n*m).
DualityReport check_duality(int n, int m, int k = 0);

/// Multiplicity-free support of Sym^n Sym^2 (variant a) or Wedge^n Sym^2 (variant b).
std::set<Partition> m2_closed_form(int n, Variant variant);

}  // namespace plethysm
