#pragma once

#include "qsc/rational.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qsc {

/// Integer partition stored as weakly decreasing positive row lengths.
///
/// A partition with at most r rows and every part at most n - r indexes a
/// Schubert class of Gr(r, n). Ordering is graded: by size, then
/// lexicographically on the parts.
class Partition {
public:
    Partition() = default;
    /// Trailing zeros are dropped; throws DomainError on negative or
    /// increasing parts.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    /// Rectangle with `rows` rows of length `cols` (empty if either is zero).
    static Partition rectangle(int rows, int cols);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int rows() const noexcept { return static_cast<int>(parts_.size()); }
    int width() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
    int size() const noexcept { return size_; }
    bool empty() const noexcept { return parts_.empty(); }
    /// Row length, zero beyond the last row.
    int operator[](int row) const noexcept {
        return row < rows() ? parts_[static_cast<std::size_t>(row)] : 0;
    }

    bool fits(int rows, int cols) const noexcept {
        return this->rows() <= rows && width() <= cols;
    }
    /// Containment of Young diagrams.
    bool contains(const Partition& other) const noexcept;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// "3,1"; the empty partition prints as "".
std::string to_string(const Partition& p);
/// Accepts "3,1", "" and "0" (empty). Throws ParseError.
Partition parse_partition(std::string_view text);

/// Every partition in the rows x cols box, graded then lexicographic.
std::vector<Partition> partitions_in_box(int rows, int cols);

/// Box complement: result_i = cols - lambda_{rows+1-i}. Throws DomainError
/// when lambda does not fit.
Partition complement(const Partition& lambda, int rows, int cols);

/// Littlewood-Richardson coefficient c^nu_{lambda,mu}, counted as skew
/// tableaux of shape nu/lambda and content mu whose reverse reading word is
/// a lattice word. Results are memoized in a process-wide cache.
Integer lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

struct RimHookRemoval {
    Partition result;
    int height = 0; ///< number of rows occupied by the removed strip

    friend bool operator==(const RimHookRemoval&, const RimHookRemoval&) = default;
};

/// All ways to remove a border strip of exactly `size` cells from nu, ordered
/// by decreasing result partition.
std::vector<RimHookRemoval> remove_rim_hook(const Partition& nu, int size);

struct RimHookReduction {
    Partition core;
    int removals = 0; ///< number of n-rim hooks removed (the q-exponent)
    int sign = 1;

    friend bool operator==(const RimHookReduction&, const RimHookReduction&) = default;
};

/// Reduces nu (at most r rows) into the r x (n-r) box by removing n-rim
/// hooks, each contributing (-1)^(r - height). Returns nullopt when the
/// reduction gets stuck outside the box, i.e. the term vanishes in
/// QH*(Gr(r,n)). Throws DomainError when nu has more than r rows or the
/// ring parameters are invalid.
std::optional<RimHookReduction> reduce_mod_rim_hooks(const Partition& nu, int r, int n);

/// Partitions nu with at most max_rows rows containing lambda and
/// |nu| = |lambda| + extra, with nu_1 <= lambda_1 + first_row_cap.
std::vector<Partition> partitions_over(const Partition& lambda, int extra, int max_rows,
                                       int first_row_cap);

} // namespace qsc
