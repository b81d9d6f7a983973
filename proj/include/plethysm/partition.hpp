#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace plethysm {

/// A finite sequence of nonnegative integers indexed from 0.
///
/// Stored in canonical form: trailing zeros are dropped, so the empty
/// sequence is the zero composition and `(2,0)` equals `(2)`. Reading an
/// index past the end yields 0.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);
    Composition(std::initializer_list<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }

    int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

    /// Sum of all entries.
    long size() const noexcept;

    /// Sum of i * c_i.
    long coordinate_sum() const noexcept;

    bool is_partition() const noexcept;

    /// Entrywise sum.
    Composition operator+(const Composition& other) const;

    auto operator<=>(const Composition&) const = default;
    bool operator==(const Composition&) const = default;

private:
    void canonicalize();

    std::vector<int> parts_;
};

/// A composition whose entries are nonincreasing.
class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument unless `parts` is nonincreasing and nonnegative.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);
    explicit Partition(const Composition& c);

    /// Returns nullopt when `c` is not a partition.
    static std::optional<Partition> from(const Composition& c);

    const std::vector<int>& parts() const noexcept { return comp_.parts(); }
    const Composition& composition() const noexcept { return comp_; }
    operator const Composition&() const noexcept { return comp_; }

    int operator[](std::size_t i) const noexcept { return comp_[i]; }
    long size() const noexcept { return comp_.size(); }
    /// Number of nonzero parts.
    int height() const noexcept { return static_cast<int>(comp_.length()); }
    /// Largest part (0 for the empty partition).
    int width() const noexcept { return comp_.empty() ? 0 : comp_[0]; }
    bool empty() const noexcept { return comp_.empty(); }

    Partition transpose() const;

    auto operator<=>(const Partition&) const = default;
    bool operator==(const Partition&) const = default;

private:
    Composition comp_;
};

inline Partition transpose(const Partition& p) { return p.transpose(); }
inline long size(const Composition& c) noexcept { return c.size(); }
inline bool is_partition(const Composition& c) noexcept { return c.is_partition(); }

/// Sorts the nonzero entries of a composition into a partition.
Partition sorted(const Composition& c);
Partition sorted(std::vector<int> entries);

/// The one-column partition (1^n).
Partition column(int n);
/// The one-row partition (n).
Partition row(int n);

/// All partitions of n, in lexicographically decreasing order.
std::vector<Partition> partitions_of(int n);
/// Partitions of n with at most `max_parts` parts and parts at most `max_part`.
std::vector<Partition> partitions_of(int n, int max_parts, int max_part);

/// Canonical text form, e.g. "[3,1]" and "[]".
std::string format(const Composition& c);
inline std::string format(const Partition& p) { return format(p.composition()); }

/// Parses "[3,1]" (whitespace tolerated). Throws std::invalid_argument.
Composition parse_composition(std::string_view text);
Partition parse_partition(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Composition& c);
std::ostream& operator<<(std::ostream& os, const Partition& p);

}  // namespace plethysm
