#include "nok/partition.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace nok {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> out(parts_.front(), 0);
    for (int p : parts_)
        for (int c = 0; c < p; ++c) ++out[c];
    return Partition(std::move(out));
}

bool Partition::contains(const Partition& inner) const noexcept {
    if (inner.length() > length()) return false;
    for (int i = 1; i <= inner.length(); ++i)
        if (inner.part(i) > part(i)) return false;
    return true;
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) noexcept {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    // Larger lexicographic sequence comes first.
    return std::lexicographical_compare_three_way(b.parts_.begin(), b.parts_.end(),
                                                  a.parts_.begin(), a.parts_.end());
}

int arm(const Partition& lambda, int i, int j) noexcept { return lambda.part(i) - j; }

int leg(const Partition&, const Partition& conj, int i, int j) noexcept { return conj.part(j) - i; }

int hook(const Partition& lambda, const Partition& conj, int i, int j) noexcept {
    return lambda.part(i) + conj.part(j) - i - j + 1;
}

CellStats cell_stats(const Partition& lambda) {
    const Partition conj = lambda.conjugate();
    CellStats out;
    out.cells.reserve(lambda.size());
    for (int i = 1; i <= lambda.length(); ++i) {
        for (int j = 1; j <= lambda.part(i); ++j) {
            CellStat c;
            c.row = i;
            c.col = j;
            c.arm = arm(lambda, i, j);
            c.leg = leg(lambda, conj, i, j);
            c.hook = c.arm + c.leg + 1;
            c.content = j - i;
            out.cells.push_back(c);
        }
    }
    return out;
}

PartitionStats stats(const Partition& lambda) noexcept {
    PartitionStats s;
    for (int i = 1; i <= lambda.length(); ++i) {
        const int p = lambda.part(i);
        s.size += p;
        s.kappa += p * (p - 2 * i + 1);
        s.norm_sq += p * p;
        s.n_stat += (i - 1) * p;
    }
    return s;
}

FrobeniusCoords frobenius(const Partition& lambda) {
    const Partition conj = lambda.conjugate();
    FrobeniusCoords f;
    while (lambda.part(f.r + 1) - (f.r + 1) >= 0) ++f.r;
    for (int i = 1; i <= f.r; ++i) {
        f.m.push_back(lambda.part(i) - i);
        f.n.push_back(conj.part(i) - i);
    }
    return f;
}

namespace {

void enumerate_into(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        prefix.push_back(p);
        enumerate_into(remaining - p, p, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate(int d) {
    if (d < 0) throw std::invalid_argument("enumerate: negative size");
    std::vector<Partition> out;
    std::vector<int> prefix;
    enumerate_into(d, d, prefix, out);
    return out;
}

std::vector<Partition> enumerate_upto(int max_size) {
    std::vector<Partition> out;
    for (int d = 0; d <= max_size; ++d) {
        auto level = enumerate(d);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

std::vector<Partition> subpartitions(const Partition& lambda) {
    std::vector<Partition> out;
    std::vector<int> rows;
    // Row i may hold at most min(lambda_i, previous row) boxes.
    std::function<void(int, int)> rec = [&](int i, int bound) {
        out.emplace_back(rows);
        if (i > lambda.length()) return;
        for (int p = std::min(bound, lambda.part(i)); p >= 1; --p) {
            rows.push_back(p);
            rec(i + 1, p);
            rows.pop_back();
        }
    };
    rec(1, lambda.part(1));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace nok
