#include "plethysm/characters.hpp"

#include <map>
#include <stdexcept>

namespace plethysm {

namespace {

// Beta-set form: removing a rim hook of length h moves one bead down by h
// positions; the sign is the parity of beads jumped over.
class CharacterTable {
public:
    BigInt operator()(const Partition& shape, const Partition& cycle_type) {
        const int len = shape.height();
        std::vector<int> beads(static_cast<std::size_t>(len));
        for (int i = 0; i < len; ++i)
            beads[static_cast<std::size_t>(i)] = shape[static_cast<std::size_t>(i)] + (len - 1 - i);
        return eval(std::move(beads), cycle_type.parts(), 0);
    }

private:
    // beads strictly decreasing
    BigInt eval(std::vector<int> beads, const std::vector<int>& cycles, std::size_t next) {
        if (next == cycles.size()) return 1;
        auto key = std::make_pair(beads, std::vector<int>(cycles.begin() + static_cast<long>(next), cycles.end()));
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        const int h = cycles[next];
        BigInt total = 0;
        for (std::size_t i = 0; i < beads.size(); ++i) {
            const int target = beads[i] - h;
            if (target < 0) continue;
            bool occupied = false;
            int jumped = 0;
            for (std::size_t j = 0; j < beads.size(); ++j) {
                if (beads[j] == target) occupied = true;
                if (beads[j] > target && beads[j] < beads[i]) ++jumped;
            }
            if (occupied) continue;
            std::vector<int> moved(beads);
            moved.erase(moved.begin() + static_cast<long>(i));
            auto pos = moved.begin();
            while (pos != moved.end() && *pos > target) ++pos;
            moved.insert(pos, target);
            BigInt v = eval(std::move(moved), cycles, next + 1);
            if (jumped % 2 == 0)
                total += v;
            else
                total -= v;
        }
        memo_.emplace(std::move(key), total);
        return total;
    }

    std::map<std::pair<std::vector<int>, std::vector<int>>, BigInt> memo_;
};

BigInt factorial(long n) {
    BigInt f = 1;
    for (long i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

BigInt sn_character(const Partition& shape, const Partition& cycle_type) {
    if (shape.size() != cycle_type.size())
        throw std::invalid_argument("sn_character: |shape| != |cycle_type|");
    CharacterTable table;
    return table(shape, cycle_type);
}

BigInt centralizer_order(const Partition& cycle_type) {
    std::map<int, long> mult;
    for (int c : cycle_type.parts()) ++mult[c];
    BigInt z = 1;
    for (const auto& [len, m] : mult) {
        for (long i = 0; i < m; ++i) z *= len;
        z *= factorial(m);
    }
    return z;
}

CoefficientResult kronecker(const Partition& mu, const Partition& nu, const Partition& rho) {
    if (mu.size() != nu.size() || nu.size() != rho.size())
        throw std::invalid_argument("kronecker: partitions of different sizes");
    const long n = mu.size();
    const BigInt n_fact = factorial(n);
    CharacterTable chi_mu, chi_nu, chi_rho;
    BigInt total = 0;
    for (const Partition& tau : partitions_of(static_cast<int>(n))) {
        BigInt term = chi_mu(mu, tau);
        if (term == 0) continue;
        term *= chi_nu(nu, tau);
        if (term == 0) continue;
        term *= chi_rho(rho, tau);
        total += term * (n_fact / centralizer_order(tau));
    }
    if (total % n_fact != 0) throw std::logic_error("kronecker: character sum not divisible by n!");
    return {total / n_fact, Method::CharacterSum};
}

}  // namespace plethysm
