#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace nok {

/// An integer partition: weakly decreasing positive parts, no trailing zeros.
/// Rows are 1-based; part(i) answers 0 for i beyond the length, so hook and
/// content formulas can index outside the diagram.
class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    [[nodiscard]] int part(int i) const noexcept {
        return (i >= 1 && static_cast<std::size_t>(i) <= parts_.size()) ? parts_[i - 1] : 0;
    }
    [[nodiscard]] int operator[](int i) const noexcept { return part(i); }
    [[nodiscard]] int length() const noexcept { return static_cast<int>(parts_.size()); }
    [[nodiscard]] int size() const noexcept { return size_; }
    [[nodiscard]] bool empty() const noexcept { return parts_.empty(); }
    [[nodiscard]] std::span<const int> parts() const noexcept { return parts_; }

    [[nodiscard]] Partition conjugate() const;
    /// True when `inner` fits inside this diagram.
    [[nodiscard]] bool contains(const Partition& inner) const noexcept;

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    /// Total order: by size, then reverse-lexicographic ((3,1) before (2,2)).
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) noexcept;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

struct CellStat {
    int row = 0;
    int col = 0;
    int hook = 0;
    int arm = 0;
    int leg = 0;
    int content = 0;
};

/// Per-cell statistics in row-major order.
struct CellStats {
    std::vector<CellStat> cells;
};

[[nodiscard]] CellStats cell_stats(const Partition& lambda);

// Arm, leg and hook at an arbitrary position (i, j), using lambda_i = 0 past
// the last row. Inside the diagram these agree with cell_stats.
[[nodiscard]] int arm(const Partition& lambda, int i, int j) noexcept;
[[nodiscard]] int leg(const Partition& lambda, const Partition& conj, int i, int j) noexcept;
[[nodiscard]] int hook(const Partition& lambda, const Partition& conj, int i, int j) noexcept;

struct PartitionStats {
    int size = 0;
    int kappa = 0;    // sum lambda_i (lambda_i - 2i + 1)
    int norm_sq = 0;  // sum lambda_i^2
    int n_stat = 0;   // sum (i - 1) lambda_i
};

[[nodiscard]] PartitionStats stats(const Partition& lambda) noexcept;

struct FrobeniusCoords {
    int r = 0;
    std::vector<int> m;  // lambda_i - i
    std::vector<int> n;  // lambda^t_i - i
};

[[nodiscard]] FrobeniusCoords frobenius(const Partition& lambda);

/// All partitions of d in reverse-lexicographic order.
[[nodiscard]] std::vector<Partition> enumerate(int d);
/// All partitions of size 0..max_size, grouped by size, each group reverse-lex.
[[nodiscard]] std::vector<Partition> enumerate_upto(int max_size);
/// All eta contained in lambda (including the empty partition and lambda itself).
[[nodiscard]] std::vector<Partition> subpartitions(const Partition& lambda);

}  // namespace nok
