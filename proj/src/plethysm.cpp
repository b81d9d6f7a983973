#include "plethysm/symmetric_functions.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace plethysm {

PlethysmOracle::PlethysmOracle(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {}

const std::vector<std::vector<int>>& PlethysmOracle::letters(int k) {
    auto it = letters_.find(k);
    if (it != letters_.end()) return it->second;
    std::vector<std::vector<int>> ws;
    for (const auto& t : enumerate_ssyt(inner_, k)) ws.push_back(weight(t, k));
    return letters_.emplace(k, std::move(ws)).first->second;
}

const BigInt& PlethysmOracle::outer_kostka(const std::vector<int>& mults) {
    std::vector<int> key(mults);
    std::sort(key.begin(), key.end(), std::greater<>());
    auto it = kostka_cache_.find(key);
    if (it != kostka_cache_.end()) return it->second;
    BigInt k = kostka(outer_, Composition(key));
    return kostka_cache_.emplace(std::move(key), std::move(k)).first->second;
}

BigInt PlethysmOracle::weight_multiplicity(const std::vector<int>& kappa) {
    long total = 0;
    for (int e : kappa) {
        if (e < 0) return 0;
        total += e;
    }
    if (total != degree()) return 0;

    std::vector<int> key(kappa);
    std::sort(key.begin(), key.end(), std::greater<>());
    while (!key.empty() && key.back() == 0) key.pop_back();
    if (auto it = q_cache_.find(key); it != q_cache_.end()) return it->second;

    // q_kappa = sum over multisets of inner tableaux (letters) with total weight
    // kappa of K_{outer, multiplicity pattern}.
    const int len = static_cast<int>(key.size());
    const auto& all = letters(len);
    std::vector<const std::vector<int>*> fit;
    for (const auto& w : all) {
        bool ok = true;
        for (int i = 0; i < len && ok; ++i) ok = w[static_cast<std::size_t>(i)] <= key[static_cast<std::size_t>(i)];
        if (ok) fit.push_back(&w);
    }
    std::map<std::vector<int>, std::vector<std::size_t>> by_weight;
    for (std::size_t p = 0; p < fit.size(); ++p) by_weight[*fit[p]].push_back(p);

    BigInt q = 0;
    std::vector<int> residual(key);
    std::vector<int> mults;
    std::function<void(std::size_t, int)> search = [&](std::size_t start, int slots) {
        if (slots == 0) {
            if (std::all_of(residual.begin(), residual.end(), [](int r) { return r == 0; }))
                q += outer_kostka(mults);
            return;
        }
        // Finish with one letter repeated `slots` times.
        {
            std::vector<int> w(residual.size());
            bool divisible = true;
            for (std::size_t i = 0; i < residual.size() && divisible; ++i) {
                divisible = residual[i] % slots == 0;
                w[i] = residual[i] / slots;
            }
            if (divisible) {
                if (auto it = by_weight.find(w); it != by_weight.end()) {
                    auto first = std::lower_bound(it->second.begin(), it->second.end(), start);
                    const auto count = static_cast<long>(it->second.end() - first);
                    if (count > 0) {
                        mults.push_back(slots);
                        q += outer_kostka(mults) * count;
                        mults.pop_back();
                    }
                }
            }
        }
        for (std::size_t p = start; p < fit.size(); ++p) {
            const auto& w = *fit[p];
            for (int c = 1; c < slots; ++c) {
                bool ok = true;
                for (std::size_t i = 0; i < residual.size() && ok; ++i) ok = c * w[i] <= residual[i];
                if (!ok) break;
                for (std::size_t i = 0; i < residual.size(); ++i) residual[i] -= c * w[i];
                mults.push_back(c);
                search(p + 1, slots - c);
                mults.pop_back();
                for (std::size_t i = 0; i < residual.size(); ++i) residual[i] += c * w[i];
            }
        }
    };
    search(0, static_cast<int>(outer_.size()));
    return q_cache_.emplace(std::move(key), q).first->second;
}

SymPoly PlethysmOracle::poly(int k) {
    if (k <= 0) throw std::invalid_argument("plethysm_poly: need at least one variable");
    SymPoly out(k);
    const int d = static_cast<int>(degree());
    for (const Partition& kappa : partitions_of(d, k, d)) out.add(kappa, weight_multiplicity(kappa.parts()));
    return out;
}

BigInt PlethysmOracle::jacobi_trudi(const Partition& lambda) {
    if (lambda.size() != degree())
        throw std::invalid_argument("jacobi_trudi_coeff: |lambda| != |outer|*|inner|");
    const int len = lambda.height();
    std::vector<int> kappa(static_cast<std::size_t>(len));
    std::vector<bool> used(static_cast<std::size_t>(len), false);
    BigInt total = 0;
    // Permutations sigma with lambda_i - i + sigma(i) >= 0 for every row i.
    std::function<void(int, int)> place = [&](int i, int inversions) {
        if (i == len) {
            BigInt q = weight_multiplicity(kappa);
            if (inversions % 2 == 0)
                total += q;
            else
                total -= q;
            return;
        }
        int larger_used = 0;
        for (int v = len - 1; v >= 0; --v) {
            if (used[static_cast<std::size_t>(v)]) {
                ++larger_used;
                continue;
            }
            const int entry = lambda[static_cast<std::size_t>(i)] - i + v;
            if (entry < 0) break;
            used[static_cast<std::size_t>(v)] = true;
            kappa[static_cast<std::size_t>(i)] = entry;
            place(i + 1, inversions + larger_used);
            used[static_cast<std::size_t>(v)] = false;
        }
    };
    place(0, 0);
    return total;
}

std::vector<std::pair<Partition, BigInt>> PlethysmOracle::decomposition(int k) {
    return decompose_schur(poly(k));
}

CoefficientResult PlethysmOracle::coefficient(const Partition& lambda) {
    if (lambda.size() != degree()) return {0, Method::GradingZero};
    if (lambda.height() <= jacobi_trudi_max_height) return {jacobi_trudi(lambda), Method::JacobiTrudi};
    // omega sends s_mu[s_nu] to s_mu'[s_nu'] (|nu| odd) or s_mu[s_nu'] (|nu| even)
    const Partition t = lambda.transpose();
    if (t.height() <= jacobi_trudi_max_height) {
        const Partition dual_outer = inner_.size() % 2 == 1 ? outer_.transpose() : outer_;
        return {PlethysmOracle(dual_outer, inner_.transpose()).jacobi_trudi(t), Method::JacobiTrudi};
    }
    for (const auto& [shape, mult] : decomposition(std::max(1, lambda.height()))) {
        if (shape == lambda) return {mult, Method::SchurPeeling};
    }
    return {0, Method::SchurPeeling};
}

SymPoly plethysm_poly(const Partition& outer, const Partition& inner, int k) {
    return PlethysmOracle(outer, inner).poly(k);
}

BigInt weight_multiplicity(const Partition& outer, const Partition& inner, const Composition& kappa,
                           int k) {
    if (kappa.size() != outer.size() * inner.size())
        throw std::invalid_argument("weight_multiplicity: |kappa| != |outer|*|inner|");
    if (static_cast<int>(kappa.length()) > k)
        throw std::invalid_argument("weight_multiplicity: kappa longer than the variable count");
    return PlethysmOracle(outer, inner).weight_multiplicity(kappa.parts());
}

BigInt jacobi_trudi_coeff(const Partition& lambda, const Partition& outer, const Partition& inner) {
    return PlethysmOracle(outer, inner).jacobi_trudi(lambda);
}

CoefficientResult general_plethysm(const Partition& lambda, const Partition& outer,
                                   const Partition& inner) {
    if (lambda.size() != outer.size() * inner.size())
        throw std::invalid_argument("general_plethysm: |lambda| != |outer|*|inner|");
    return PlethysmOracle(outer, inner).coefficient(lambda);
}

CoefficientResult plethysm_coeff(const Partition& lambda, int n, int m, Variant variant) {
    if (n < 0 || m < 0) throw std::invalid_argument("plethysm_coeff: negative n or m");
    if (lambda.size() != static_cast<long>(n) * m) return {0, Method::GradingZero};
    PlethysmOracle oracle(variant == Variant::a ? row(n) : column(n), row(m));
    return oracle.coefficient(lambda);
}

DualityReport check_duality(int n, int m, int k) {
    if (k <= 0) k = n * m;
    auto as_map = [](const std::vector<std::pair<Partition, BigInt>>& d) {
        return std::map<Partition, BigInt>(d.begin(), d.end());
    };
    const int full = std::max(1, n * m);
    const auto sym_sym = as_map(PlethysmOracle(row(n), row(m)).decomposition(full));
    const auto wedge_sym = as_map(PlethysmOracle(column(n), row(m)).decomposition(full));
    const auto wedge_wedge = as_map(PlethysmOracle(column(n), column(m)).decomposition(full));
    const auto sym_wedge = as_map(PlethysmOracle(row(n), column(m)).decomposition(full));
    auto lookup = [](const std::map<Partition, BigInt>& d, const Partition& p) {
        auto it = d.find(p);
        return it == d.end() ? BigInt(0) : it->second;
    };
    const bool odd = m % 2 == 1;
    const auto& ww_expected = odd ? sym_sym : wedge_sym;
    const auto& sw_expected = odd ? wedge_sym : sym_sym;

    DualityReport report;
    for (const Partition& lambda : partitions_of(n * m)) {
        const Partition t = lambda.transpose();
        if (lambda.height() > k || t.height() > k) continue;
        const BigInt ww = lookup(wedge_wedge, lambda);
        const BigInt ww_ref = lookup(ww_expected, t);
        const BigInt sw = lookup(sym_wedge, lambda);
        const BigInt sw_ref = lookup(sw_expected, t);
        if (ww != ww_ref || sw != sw_ref) {
            std::ostringstream os;
            os << "n=" << n << " m=" << m << " lambda=" << lambda << ": Wedge^n Wedge^m has " << ww
               << " (expected " << ww_ref << "), Sym^n Wedge^m has " << sw << " (expected " << sw_ref
               << ")";
            report.ok = false;
            report.counterexample = os.str();
            return report;
        }
    }
    return report;
}

std::set<Partition> m2_closed_form(int n, Variant variant) {
    std::set<Partition> out;
    for (const Partition& lambda : partitions_of(2 * n)) {
        bool member = true;
        if (variant == Variant::a) {
            for (int p : lambda.parts()) member = member && p % 2 == 0;
        } else {
            // rows counted from 1: whenever lambda_i >= i, lambda_i = lambda^t_i + 1
            const Partition t = lambda.transpose();
            for (std::size_t i = 0; i < lambda.parts().size() && member; ++i) {
                if (lambda[i] >= static_cast<int>(i) + 1) member = lambda[i] == t[i] + 1;
            }
        }
        if (member) out.insert(lambda);
    }
    return out;
}

}  // namespace plethysm
