#include "plethysm/restricted.hpp"

#include "plethysm/reductions.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace plethysm {

std::string to_string(PsiVariant v) { return v == PsiVariant::Sym ? "sym" : "wedge"; }

ConeKind cone_of(PsiVariant v) noexcept { return v == PsiVariant::Sym ? ConeKind::closed : ConeKind::open; }

Partition inner_of(PsiVariant v) { return v == PsiVariant::Sym ? row(3) : column(3); }

long complete_pyramid_size(int r, ConeKind kind) {
    long total = 0;
    for (int i = 0; i <= r; ++i) total += xi(i, kind);
    return total;
}

PsiDecomposition psi_decompose(const Partition& mu, PsiVariant variant) {
    const ConeKind kind = cone_of(variant);
    PsiDecomposition dec{variant, {}};
    const Partition cols = mu.transpose();
    for (int n : cols.parts()) {
        PsiColumn col;
        col.n = n;
        while (n >= complete_pyramid_size(col.r, kind)) ++col.r;
        col.n_check = complete_pyramid_size(col.r - 1, kind);
        col.n_hat = n - col.n_check;
        dec.columns.push_back(col);
    }
    return dec;
}

std::vector<std::vector<Composition>> psi_splits(const Partition& mu, const Composition& lambda, PsiVariant variant,
                                                 std::size_t limit) {
    std::vector<std::vector<Composition>> out;
    const ConeKind kind = cone_of(variant);
    const PsiDecomposition dec = psi_decompose(mu, variant);

    Composition fixed;
    for (const auto& col : dec.columns) fixed = fixed + sum_marginal(complete_pyramid(col.r - 1, kind));
    std::vector<int> rest(std::max(lambda.length(), fixed.length()), 0);
    for (std::size_t i = 0; i < rest.size(); ++i) {
        rest[i] = lambda[i] - fixed[i];
        if (rest[i] < 0) return out;
    }

    std::vector<Composition> parts;
    std::function<void(std::size_t)> column = [&](std::size_t j) {
        if (out.size() >= limit) return;
        if (j == dec.columns.size()) {
            if (std::all_of(rest.begin(), rest.end(), [](int v) { return v == 0; })) out.push_back(parts);
            return;
        }
        const PsiColumn& col = dec.columns[j];
        const long size = 3 * col.n_hat;
        const long budget = col.n_hat * col.r;
        const int top = std::min<int>(col.r, static_cast<int>(rest.size()) - 1);
        std::vector<int> part(static_cast<std::size_t>(std::max(top, 0)) + 1, 0);
        // entries from the top index down, tracking remaining size and B
        std::function<void(int, long, long)> fill = [&](int i, long left, long b) {
            if (out.size() >= limit) return;
            if (i < 0) {
                if (left != 0 || b != 0) return;
                parts.push_back(Composition(part));
                column(j + 1);
                parts.pop_back();
                return;
            }
            if (i == 0) {
                if (b != 0 || left > rest[0]) return;
                part[0] = static_cast<int>(left);
                rest[0] -= part[0];
                fill(-1, 0, 0);
                rest[0] += part[0];
                part[0] = 0;
                return;
            }
            const long cap = std::min<long>({rest[static_cast<std::size_t>(i)], left, b / i});
            for (long c = 0; c <= cap; ++c) {
                part[static_cast<std::size_t>(i)] = static_cast<int>(c);
                rest[static_cast<std::size_t>(i)] -= static_cast<int>(c);
                fill(i - 1, left - c, b - c * i);
                rest[static_cast<std::size_t>(i)] += static_cast<int>(c);
            }
            part[static_cast<std::size_t>(i)] = 0;
        };
        if (rest.empty()) {
            if (size == 0) {
                parts.push_back(Composition{});
                column(j + 1);
                parts.pop_back();
            }
            return;
        }
        fill(top, size, budget);
    };
    column(0);
    return out;
}

bool psi_membership(const Partition& mu, const Partition& nu, const Composition& lambda) {
    PsiVariant variant;
    if (nu == row(3))
        variant = PsiVariant::Sym;
    else if (nu == column(3))
        variant = PsiVariant::Wedge;
    else
        throw std::invalid_argument("psi_membership: nu must be (3) or (1,1,1), got " + format(nu));
    if (!lambda.is_partition() || lambda.size() != 3 * mu.size()) return false;
    const PsiDecomposition dec = psi_decompose(mu, variant);
    if (!dec.columns.empty() && static_cast<int>(lambda.length()) > dec.columns.front().r + 1) return false;
    return !psi_splits(mu, lambda, variant, 1).empty();
}

std::vector<Point3> cone_alphabet(int max_coord, ConeKind kind, Tiebreak tiebreak) {
    std::vector<Point3> out;
    for (int x = 0; x <= max_coord; ++x)
        for (int y = 0; y <= x; ++y)
            for (int z = 0; z <= y; ++z)
                if (in_cone({x, y, z}, kind)) out.push_back({x, y, z});
    std::sort(out.begin(), out.end(), [tiebreak](const Point3& a, const Point3& b) {
        if (a.sum() != b.sum()) return a.sum() < b.sum();
        return tiebreak == Tiebreak::lex ? a < b : b < a;
    });
    return out;
}

namespace {

// Row-major filling; each box takes an alphabet index >= its left neighbour
// and > the box above.
class ConeTableauSearch {
public:
    ConeTableauSearch(const Partition& mu, const Composition& lambda, PsiVariant variant, Tiebreak tiebreak)
        : shape_(mu), residual_(lambda.parts()) {
        if (lambda.size() != 3 * mu.size()) {
            feasible_ = false;
            return;
        }
        alphabet_ = cone_alphabet(static_cast<int>(lambda.length()) - 1, cone_of(variant), tiebreak);
        for (int i = 0; i < mu.height(); ++i)
            for (int j = 0; j < mu[static_cast<std::size_t>(i)]; ++j) cells_.push_back({i, j});
        filling_.assign(cells_.size(), 0);
    }

    template <class Fn>
    void run(Fn&& on_tableau) {
        if (!feasible_) return;
        if (cells_.empty()) {
            if (residual_.empty()) on_tableau(filling_);
            return;
        }
        step(0, on_tableau);
    }

    Tableau<Point3> tableau(const std::vector<std::size_t>& filling) const {
        Tableau<Point3> t{shape_, {}};
        for (std::size_t idx : filling) t.entries.push_back(alphabet_[idx]);
        return t;
    }

    bool stopped = false;

private:
    std::size_t index_of(int i, int j) const {
        std::size_t offset = 0;
        for (int r = 0; r < i; ++r) offset += static_cast<std::size_t>(shape_[static_cast<std::size_t>(r)]);
        return offset + static_cast<std::size_t>(j);
    }

    template <class Fn>
    void step(std::size_t c, Fn& on_tableau) {
        if (stopped) return;
        if (c == cells_.size()) {
            on_tableau(filling_);
            return;
        }
        const auto [i, j] = cells_[c];
        std::size_t lo = 0;
        if (j > 0) lo = filling_[index_of(i, j - 1)];
        if (i > 0) lo = std::max(lo, filling_[index_of(i - 1, j)] + 1);
        for (std::size_t v = lo; v < alphabet_.size(); ++v) {
            const Point3& p = alphabet_[v];
            bool ok = true;
            for (int coord : {p.x, p.y, p.z}) {
                if (--residual_[static_cast<std::size_t>(coord)] < 0) ok = false;
            }
            if (ok) {
                filling_[c] = v;
                step(c + 1, on_tableau);
            }
            for (int coord : {p.x, p.y, p.z}) ++residual_[static_cast<std::size_t>(coord)];
        }
    }

    Partition shape_;
    std::vector<int> residual_;
    std::vector<Point3> alphabet_;
    std::vector<std::pair<int, int>> cells_;
    std::vector<std::size_t> filling_;
    bool feasible_ = true;
};

}  // namespace

BigInt count_cone_tableaux(const Partition& mu, const Composition& lambda, PsiVariant variant, Tiebreak tiebreak) {
    ConeTableauSearch search(mu, lambda, variant, tiebreak);
    BigInt total = 0;
    search.run([&](const std::vector<std::size_t>&) { ++total; });
    return total;
}

std::vector<Tableau<Point3>> enumerate_cone_ssyt(const Partition& mu, const Composition& lambda, PsiVariant variant,
                                                 Tiebreak tiebreak, std::size_t limit) {
    ConeTableauSearch search(mu, lambda, variant, tiebreak);
    std::vector<Tableau<Point3>> out;
    if (limit == 0) return out;
    search.run([&](const std::vector<std::size_t>& f) {
        out.push_back(search.tableau(f));
        if (out.size() >= limit) search.stopped = true;
    });
    return out;
}

CoefficientResult count_cone_ssyt(const Partition& mu, const Composition& lambda, PsiVariant variant, Tiebreak tiebreak) {
    if (!psi_membership(mu, inner_of(variant), lambda))
        throw GateFailure("psi", "(" + format(mu) + ", " + format(inner_of(variant)) + ", " + format(lambda) +
                                     ") is not a Psi instance");
    return {count_cone_tableaux(mu, lambda, variant, tiebreak), Method::ConeTableaux};
}

bool tableau_layers_check(const Tableau<Point3>& t, const PsiDecomposition& dec, Tiebreak tiebreak) {
    if (t.shape.transpose().height() != static_cast<int>(dec.columns.size())) return false;
    int max_r = 0;
    for (const auto& col : dec.columns) max_r = std::max(max_r, col.r);
    const auto alphabet = cone_alphabet(max_r, cone_of(dec.variant), tiebreak);
    const Partition cols = t.shape.transpose();
    for (std::size_t j = 0; j < dec.columns.size(); ++j) {
        const PsiColumn& col = dec.columns[j];
        if (cols[j] != col.n) return false;
        for (int i = 0; i < col.n; ++i) {
            const Point3& p = t.at(i, static_cast<int>(j));
            if (i < col.n_check) {
                if (!(p == alphabet[static_cast<std::size_t>(i)])) return false;
            } else if (p.sum() != col.r) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace plethysm
