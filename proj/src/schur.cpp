#include "plethysm/symmetric_functions.hpp"

#include <algorithm>
#include <functional>

namespace plethysm {

std::vector<int> weight(const Tableau<int>& t, int alphabet_size) {
    std::vector<int> w(static_cast<std::size_t>(alphabet_size), 0);
    for (int e : t.entries) ++w[static_cast<std::size_t>(e)];
    return w;
}

std::vector<Tableau<int>> enumerate_ssyt(const Partition& shape, int alphabet_size) {
    std::vector<Tableau<int>> out;
    if (alphabet_size < 0 || shape.height() > alphabet_size) return out;

    const auto& rows = shape.parts();
    const Partition cols = shape.transpose();
    std::vector<int> filling(static_cast<std::size_t>(shape.size()), 0);
    std::vector<std::size_t> row_start(rows.size(), 0);
    for (std::size_t i = 1; i < rows.size(); ++i)
        row_start[i] = row_start[i - 1] + static_cast<std::size_t>(rows[i - 1]);

    std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t i, std::size_t j) {
        if (i == rows.size()) {
            out.push_back({shape, filling});
            return;
        }
        if (j == static_cast<std::size_t>(rows[i])) {
            fill(i + 1, 0);
            return;
        }
        int lo = 0;
        if (j > 0) lo = filling[row_start[i] + j - 1];
        if (i > 0) lo = std::max(lo, filling[row_start[i - 1] + j] + 1);
        // leave room for the strictly increasing entries below in this column
        const int hi = alphabet_size - (cols[j] - static_cast<int>(i));
        for (int v = lo; v <= hi; ++v) {
            filling[row_start[i] + j] = v;
            fill(i, j + 1);
        }
    };
    fill(0, 0);
    return out;
}

namespace {

class KostkaTable {
public:
    BigInt operator()(const std::vector<int>& shape, const std::vector<int>& weight) {
        return count(shape, weight, weight.size());
    }

private:
    // Removes a horizontal strip for the last letter and recurses on the rest.
    BigInt count(const std::vector<int>& shape, const std::vector<int>& weight, std::size_t letters) {
        if (letters == 0) return shape.empty() ? 1 : 0;
        if (shape.size() > letters) return 0;
        auto key = std::make_pair(shape, std::vector<int>(weight.begin(), weight.begin() + static_cast<long>(letters)));
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        BigInt total = 0;
        std::vector<int> smaller(shape);
        const int strip = weight[letters - 1];
        std::function<void(std::size_t, int)> remove = [&](std::size_t i, int left) {
            if (i == shape.size()) {
                if (left != 0) return;
                std::vector<int> nu(smaller);
                while (!nu.empty() && nu.back() == 0) nu.pop_back();
                total += count(nu, weight, letters - 1);
                return;
            }
            const int floor = i + 1 < shape.size() ? shape[i + 1] : 0;
            for (int take = 0; take <= std::min(left, shape[i] - floor); ++take) {
                smaller[i] = shape[i] - take;
                remove(i + 1, left - take);
            }
            smaller[i] = shape[i];
        };
        remove(0, strip);
        memo_.emplace(std::move(key), total);
        return total;
    }

    // keyed by the remaining shape and the weight prefix still to place
    std::map<std::pair<std::vector<int>, std::vector<int>>, BigInt> memo_;
};

}  // namespace

BigInt kostka(const Partition& shape, const Composition& weight) {
    if (shape.size() != weight.size())
        throw std::invalid_argument("kostka: |shape| != |weight|");
    // Kostka numbers are invariant under permuting the weight.
    const Partition w = sorted(weight);
    KostkaTable table;
    return table(shape.parts(), w.parts());
}

BigInt schur_dimension(const Partition& shape, const BigInt& k) {
    BigInt num = 1;
    BigInt den = 1;
    const Partition t = shape.transpose();
    for (int i = 0; i < shape.height(); ++i) {
        for (int j = 0; j < shape[static_cast<std::size_t>(i)]; ++j) {
            BigInt factor = k + (j - i);
            if (factor <= 0) return 0;
            num *= factor;
            den *= (shape[static_cast<std::size_t>(i)] - j) + (t[static_cast<std::size_t>(j)] - i) - 1;
        }
    }
    return num / den;
}

SymPoly::SymPoly(int var_count) : var_count_(var_count) {
    if (var_count < 0) throw std::invalid_argument("SymPoly: negative variable count");
}

BigInt SymPoly::coeff(const Partition& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? BigInt(0) : it->second;
}

void SymPoly::add(const Partition& key, const BigInt& c) {
    if (key.height() > var_count_)
        throw std::invalid_argument("SymPoly: monomial " + format(key) + " needs more variables");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SymPoly& SymPoly::operator+=(const SymPoly& other) {
    for (const auto& [k, c] : other.terms_) add(k, c);
    return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& other) {
    for (const auto& [k, c] : other.terms_) add(k, -c);
    return *this;
}

SymPoly SymPoly::operator*(const BigInt& scalar) const {
    SymPoly out(var_count_);
    if (scalar == 0) return out;
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, c * scalar);
    return out;
}

SymPoly schur_poly(const Partition& shape, int k) {
    SymPoly out(k);
    if (shape.height() > k) return out;
    KostkaTable table;
    for (const Partition& pi : partitions_of(static_cast<int>(shape.size()), k,
                                             static_cast<int>(shape.size()))) {
        // K_{shape,pi} vanishes unless pi <= shape in lexicographic order
        if (shape < pi) continue;
        out.add(pi, table(shape.parts(), pi.parts()));
    }
    return out;
}

std::vector<std::pair<Partition, BigInt>> decompose_schur(const SymPoly& f) {
    std::vector<std::pair<Partition, BigInt>> out;
    SymPoly rest = f;
    while (!rest.is_zero()) {
        const auto& [lead, c] = *rest.terms().rbegin();
        if (c < 0) {
            throw NotSchurPositive("negative coefficient " + c.str() + " at " + format(lead));
        }
        const Partition shape = lead;
        const BigInt mult = c;
        out.emplace_back(shape, mult);
        rest -= schur_poly(shape, f.var_count()) * mult;
    }
    return out;
}

std::string to_string(Method m) {
    switch (m) {
        case Method::JacobiTrudi: return "jacobi-trudi";
        case Method::SchurPeeling: return "schur-peeling";
        case Method::GradingZero: return "grading-zero";
        case Method::CharacterSum: return "character-sum";
        case Method::PyramidCount: return "pyramid-count";
        case Method::PointSetDeterminant: return "point-set-determinant";
        case Method::ConeTableaux: return "cone-tableaux";
        case Method::TriviallyZero: return "trivially-zero";
    }
    return "unknown";
}

std::string to_string(Variant v) { return v == Variant::a ? "a" : "b"; }

}  // namespace plethysm
