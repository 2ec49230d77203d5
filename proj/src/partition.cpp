#include "qsc/partition.hpp"

#include "qsc/errors.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <tuple>

namespace qsc {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw DomainError("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw DomainError("partition parts must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition Partition::rectangle(int rows, int cols) {
    if (rows <= 0 || cols <= 0)
        return {};
    return Partition(std::vector<int>(static_cast<std::size_t>(rows), cols));
}

bool Partition::contains(const Partition& other) const noexcept {
    if (other.rows() > rows())
        return false;
    for (int i = 0; i < other.rows(); ++i)
        if (other[i] > (*this)[i])
            return false;
    return true;
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    if (auto c = a.size_ <=> b.size_; c != 0)
        return c;
    return a.parts_ <=> b.parts_;
}

std::string to_string(const Partition& p) {
    std::string out;
    for (int i = 0; i < p.rows(); ++i) {
        if (i > 0)
            out += ',';
        out += std::to_string(p[i]);
    }
    return out;
}

Partition parse_partition(std::string_view text) {
    if (text.empty() || text == "0")
        return {};
    std::vector<int> parts;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = std::min(text.find(',', start), text.size());
        const auto field = text.substr(start, comma - start);
        if (field.empty() || field.size() > 6 ||
            !std::all_of(field.begin(), field.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw ParseError("invalid partition '" + std::string(text) + "'");
        parts.push_back(std::stoi(std::string(field)));
        start = comma + 1;
    }
    try {
        return Partition(std::move(parts));
    } catch (const DomainError& e) {
        throw ParseError("invalid partition '" + std::string(text) + "': " + e.what());
    }
}

namespace {

void box_rec(int rows_left, int max_part, int remaining, std::vector<int>& cur,
             std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    if (rows_left == 0)
        return;
    // Lexicographically increasing parts within one size.
    for (int part = 1; part <= std::min(max_part, remaining); ++part) {
        cur.push_back(part);
        box_rec(rows_left - 1, part, remaining - part, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_in_box(int rows, int cols) {
    if (rows < 0 || cols < 0)
        throw DomainError("box dimensions must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> cur;
    for (int size = 0; size <= rows * cols; ++size) {
        std::vector<Partition> level;
        box_rec(rows, cols, size, cur, level);
        std::sort(level.begin(), level.end());
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

Partition complement(const Partition& lambda, int rows, int cols) {
    if (rows < 0 || cols < 0 || !lambda.fits(rows, cols))
        throw DomainError("partition (" + to_string(lambda) + ") does not fit the " +
                          std::to_string(rows) + "x" + std::to_string(cols) + " box");
    std::vector<int> parts(static_cast<std::size_t>(rows));
    for (int i = 0; i < rows; ++i)
        parts[static_cast<std::size_t>(i)] = cols - lambda[rows - 1 - i];
    return Partition(std::move(parts));
}

namespace {

/// Depth-first count of LR fillings of nu/lambda with content mu.
class LrCounter {
public:
    LrCounter(const Partition& lambda, const Partition& mu, const Partition& nu)
        : lambda_(lambda), mu_(mu), nu_(nu), filling_(static_cast<std::size_t>(nu.rows())),
          used_(static_cast<std::size_t>(mu.rows()) + 1, 0) {
        for (int i = 0; i < nu.rows(); ++i)
            filling_[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(nu[i]), 0);
    }

    Integer count() {
        Integer total = 0;
        visit(0, nu_[0] - 1, total);
        return total;
    }

private:
    int& at(int row, int col) { return filling_[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)]; }

    // Cells are visited in reverse reading order: rows top to bottom, each
    // row right to left.
    void visit(int row, int col, Integer& total) {
        while (row < nu_.rows() && col < lambda_[row]) {
            ++row;
            col = nu_[row] - 1;
        }
        if (row >= nu_.rows()) {
            total += 1;
            return;
        }
        int hi = mu_.rows();
        if (col + 1 < nu_[row])
            hi = std::min(hi, at(row, col + 1)); // rows weakly increase
        int lo = 1;
        if (row > 0 && col >= lambda_[row - 1])
            lo = at(row - 1, col) + 1; // columns strictly increase
        for (int v = lo; v <= hi; ++v) {
            const auto idx = static_cast<std::size_t>(v);
            if (used_[idx] >= mu_[v - 1])
                continue;
            if (v > 1 && used_[idx - 1] <= used_[idx])
                continue; // lattice condition
            ++used_[idx];
            at(row, col) = v;
            visit(row, col - 1, total);
            --used_[idx];
        }
        at(row, col) = 0;
    }

    const Partition& lambda_;
    const Partition& mu_;
    const Partition& nu_;
    std::vector<std::vector<int>> filling_;
    std::vector<int> used_;
};

using LrKey = std::tuple<std::vector<int>, std::vector<int>, std::vector<int>>;

std::mutex lr_mutex;
std::map<LrKey, Integer> lr_cache;

} // namespace

Integer lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (nu.size() != lambda.size() + mu.size() || !nu.contains(lambda) || !nu.contains(mu))
        return 0;
    if (mu.empty() || lambda.empty())
        return 1; // nu == the other factor, by the size and containment checks
    LrKey key{lambda.parts(), mu.parts(), nu.parts()};
    {
        std::lock_guard lock(lr_mutex);
        if (auto it = lr_cache.find(key); it != lr_cache.end())
            return it->second;
    }
    Integer value = LrCounter(lambda, mu, nu).count();
    std::lock_guard lock(lr_mutex);
    lr_cache.insert_or_assign(std::move(key), value);
    return value;
}

std::vector<RimHookRemoval> remove_rim_hook(const Partition& nu, int size) {
    if (size < 1)
        throw DomainError("rim hook size must be positive");
    const int len = nu.rows();
    std::vector<int> beads(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i)
        beads[static_cast<std::size_t>(i)] = nu[i] + (len - 1 - i);

    std::vector<RimHookRemoval> out;
    for (int i = 0; i < len; ++i) {
        const int from = beads[static_cast<std::size_t>(i)];
        const int to = from - size;
        if (to < 0 || std::find(beads.begin(), beads.end(), to) != beads.end())
            continue;
        int crossed = 0;
        for (int b : beads)
            crossed += (b > to && b < from) ? 1 : 0;
        std::vector<int> moved = beads;
        moved[static_cast<std::size_t>(i)] = to;
        std::sort(moved.begin(), moved.end(), std::greater<>());
        std::vector<int> parts(static_cast<std::size_t>(len));
        for (int j = 0; j < len; ++j)
            parts[static_cast<std::size_t>(j)] = moved[static_cast<std::size_t>(j)] - (len - 1 - j);
        out.push_back({Partition(std::move(parts)), crossed + 1});
    }
    std::sort(out.begin(), out.end(),
              [](const RimHookRemoval& a, const RimHookRemoval& b) { return a.result > b.result; });
    return out;
}

std::optional<RimHookReduction> reduce_mod_rim_hooks(const Partition& nu, int r, int n) {
    if (r < 1 || r > n - 1)
        throw DomainError("Gr(r,n) requires 1 <= r <= n-1");
    if (nu.rows() > r)
        throw DomainError("partition (" + to_string(nu) + ") has more than " + std::to_string(r) +
                          " rows");
    RimHookReduction red{nu, 0, 1};
    while (!red.core.fits(r, n - r)) {
        const auto options = remove_rim_hook(red.core, n);
        if (options.empty())
            return std::nullopt;
        const auto& step = options.front();
        if ((r - step.height) % 2 != 0)
            red.sign = -red.sign;
        red.core = step.result;
        ++red.removals;
    }
    return red;
}

namespace {

void over_rec(const Partition& lambda, int row, int max_rows, int remaining, int upper,
              std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        // Remaining rows keep lambda's lengths, which must not exceed the cap.
        for (int i = row; i < lambda.rows(); ++i)
            if (lambda[i] > upper)
                return;
        std::vector<int> parts = cur;
        for (int i = row; i < lambda.rows(); ++i)
            parts.push_back(lambda[i]);
        out.emplace_back(std::move(parts));
        return;
    }
    if (row >= max_rows)
        return;
    const int base = lambda[row];
    for (int len = std::min(upper, base + remaining); len >= std::max(base, 1); --len) {
        cur.push_back(len);
        over_rec(lambda, row + 1, max_rows, remaining - (len - base), len, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_over(const Partition& lambda, int extra, int max_rows,
                                       int first_row_cap) {
    std::vector<Partition> out;
    if (extra < 0 || lambda.rows() > max_rows)
        return out;
    std::vector<int> cur;
    over_rec(lambda, 0, max_rows, extra, lambda[0] + first_row_cap, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace qsc
