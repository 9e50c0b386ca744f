#ifndef PGRAPH_PARTITION_HPP_
#define PGRAPH_PARTITION_HPP_

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pgraph {

/**
 * An integer partition stored as its row lengths (Ferrers diagram rows),
 * weakly decreasing, every part positive. The empty partition is not
 * representable.
 */
class Partition {
public:
    /// Validates canonical form; throws std::invalid_argument otherwise.
    explicit Partition(std::vector<int> parts);

    /// Sorts the parts into canonical order and drops zeros before validating.
    static Partition from_unordered(std::vector<int> parts);

    /// Parses the dotted form "4.2.1.1". Rejects anything non-canonical.
    static Partition parse(std::string_view text);

    std::span<const int> parts() const noexcept { return parts_; }
    int operator[](std::size_t i) const noexcept { return parts_[i]; }

    /// The integer being partitioned.
    int weight() const noexcept { return weight_; }
    /// Number of parts, l(lambda).
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    int largest() const noexcept { return parts_.front(); }

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/// All partitions of n in decreasing lexicographic order: (n) first, (1^n) last.
std::vector<Partition> enumerate_partitions(int n);

/// Transpose of the Ferrers diagram.
Partition conjugate(const Partition& lambda);

enum class LexOrder { precedes, equal, follows };

/**
 * Decreasing lexicographic comparison: lambda precedes mu when at the first
 * differing index lambda has the larger part. Both arguments must partition
 * the same integer (std::invalid_argument otherwise).
 */
LexOrder lex_compare(const Partition& lambda, const Partition& mu);

/// Strict-weak-ordering adapter for lex_compare, usable with std::sort.
struct DecreasingLex {
    bool operator()(const Partition& a, const Partition& b) const {
        return lex_compare(a, b) == LexOrder::precedes;
    }
};

struct ShapeFlags {
    bool is_hook = false;
    bool is_two_part = false;
    bool is_rectangular = false;
    bool is_staircase = false;
    bool is_self_conjugate = false;
};

ShapeFlags predicates(const Partition& lambda);

bool is_hook(const Partition& lambda);
bool is_self_conjugate(const Partition& lambda);

/// (n - k, 1^k).
Partition hook(int n, int k);
/// (t, t-1, ..., 1).
Partition staircase(int t);
/// (parts^rows).
Partition rectangle(int part, int rows);

} // namespace pgraph

#endif // PGRAPH_PARTITION_HPP_
