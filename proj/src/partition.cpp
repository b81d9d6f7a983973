#include "plethysm/partition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <ostream>
#include <stdexcept>

namespace plethysm {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p < 0) throw std::invalid_argument("composition entries must be nonnegative");
    }
    canonicalize();
}

Composition::Composition(std::initializer_list<int> parts)
    : Composition(std::vector<int>(parts)) {}

void Composition::canonicalize() {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

long Composition::size() const noexcept {
    long s = 0;
    for (int p : parts_) s += p;
    return s;
}

long Composition::coordinate_sum() const noexcept {
    long s = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i) s += static_cast<long>(i) * parts_[i];
    return s;
}

bool Composition::is_partition() const noexcept {
    return std::is_sorted(parts_.begin(), parts_.end(), std::greater<>());
}

Composition Composition::operator+(const Composition& other) const {
    std::vector<int> out(std::max(length(), other.length()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = (*this)[i] + other[i];
    return Composition(std::move(out));
}

Partition::Partition(std::vector<int> parts) : comp_(std::move(parts)) {
    if (!comp_.is_partition()) {
        throw std::invalid_argument("not a partition: " + format(comp_));
    }
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(const Composition& c) : Partition(c.parts()) {}

std::optional<Partition> Partition::from(const Composition& c) {
    if (!c.is_partition()) return std::nullopt;
    return Partition(c);
}

Partition Partition::transpose() const {
    std::vector<int> t(static_cast<std::size_t>(width()), 0);
    for (int p : parts()) {
        for (int j = 0; j < p; ++j) ++t[static_cast<std::size_t>(j)];
    }
    return Partition(std::move(t));
}

Partition sorted(std::vector<int> entries) {
    std::sort(entries.begin(), entries.end(), std::greater<>());
    return Partition(std::move(entries));
}

Partition sorted(const Composition& c) { return sorted(c.parts()); }

Partition column(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

Partition row(int n) { return n == 0 ? Partition() : Partition({n}); }

namespace {

void gen_partitions(int remaining, int max_part, int parts_left, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    if (parts_left == 0) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        // the remaining parts cannot exceed p each
        if (static_cast<long>(p) * parts_left < remaining) break;
        cur.push_back(p);
        gen_partitions(remaining - p, p, parts_left - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int max_parts, int max_part) {
    std::vector<Partition> out;
    if (n < 0) return out;
    std::vector<int> cur;
    gen_partitions(n, max_part, max_parts, cur, out);
    return out;
}

std::vector<Partition> partitions_of(int n) { return partitions_of(n, n, n); }

std::string format(const Composition& c) {
    std::string s = "[";
    for (std::size_t i = 0; i < c.length(); ++i) {
        if (i) s += ',';
        s += std::to_string(c[i]);
    }
    s += ']';
    return s;
}

Composition parse_composition(std::string_view text) {
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto fail = [&](const char* what) {
        throw std::invalid_argument(std::string("malformed composition \"") + std::string(text) +
                                    "\": " + what);
    };
    skip_ws();
    if (i >= text.size() || text[i] != '[') fail("expected '['");
    ++i;
    std::vector<int> parts;
    skip_ws();
    if (i < text.size() && text[i] == ']') {
        ++i;
    } else {
        for (;;) {
            skip_ws();
            if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                fail("expected a nonnegative integer");
            long v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                v = v * 10 + (text[i] - '0');
                if (v > 1'000'000'000L) fail("entry too large");
                ++i;
            }
            parts.push_back(static_cast<int>(v));
            skip_ws();
            if (i < text.size() && text[i] == ',') {
                ++i;
                continue;
            }
            if (i < text.size() && text[i] == ']') {
                ++i;
                break;
            }
            fail("expected ',' or ']'");
        }
    }
    skip_ws();
    if (i != text.size()) fail("trailing characters");
    return Composition(std::move(parts));
}

Partition parse_partition(std::string_view text) {
    Composition c = parse_composition(text);
    if (!c.is_partition()) throw std::invalid_argument("not a partition: " + std::string(text));
    return Partition(c);
}

std::ostream& operator<<(std::ostream& os, const Composition& c) { return os << format(c); }
std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << format(p); }

}  // namespace plethysm
