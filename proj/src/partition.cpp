#include "pgraph/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace pgraph {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty())
        throw std::invalid_argument("partition must have at least one part");
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unordered(std::vector<int> parts) {
    std::erase(parts, 0);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    while (true) {
        const std::size_t dot = text.find('.', pos);
        const std::string_view token =
            text.substr(pos, dot == std::string_view::npos ? std::string_view::npos : dot - pos);
        // from_chars accepts neither signs nor whitespace; leading zeros are
        // rejected explicitly so every partition has exactly one spelling.
        if (token.empty() || (token.size() > 1 && token.front() == '0'))
            throw std::invalid_argument("malformed partition text: '" + std::string(text) + "'");
        int value = 0;
        const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || end != token.data() + token.size())
            throw std::invalid_argument("malformed partition text: '" + std::string(text) + "'");
        parts.push_back(value);
        if (dot == std::string_view::npos)
            break;
        pos = dot + 1;
    }
    return Partition(std::move(parts));
}

std::string Partition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0)
            out.push_back('.');
        out += std::to_string(parts_[i]);
    }
    return out;
}

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 1)
        throw std::invalid_argument("n must be at least 1");

    std::vector<Partition> out;
    std::vector<int> current{n};
    while (true) {
        out.emplace_back(current);
        // Rightmost part larger than 1; everything after it is a run of 1s.
        auto it = std::find_if(current.rbegin(), current.rend(), [](int p) { return p > 1; });
        if (it == current.rend())
            break;
        const std::size_t k = static_cast<std::size_t>(current.rend() - it) - 1;
        int remainder = static_cast<int>(current.size() - k - 1) + 1;
        const int cap = --current[k];
        current.resize(k + 1);
        while (remainder > 0) {
            const int part = std::min(cap, remainder);
            current.push_back(part);
            remainder -= part;
        }
    }
    return out;
}

Partition conjugate(const Partition& lambda) {
    std::vector<int> out(static_cast<std::size_t>(lambda.largest()), 0);
    for (int part : lambda.parts())
        for (int k = 0; k < part; ++k)
            ++out[static_cast<std::size_t>(k)];
    return Partition(std::move(out));
}

LexOrder lex_compare(const Partition& lambda, const Partition& mu) {
    if (lambda.weight() != mu.weight())
        throw std::invalid_argument("lex_compare: partitions of different integers");
    const auto a = lambda.parts();
    const auto b = mu.parts();
    const std::size_t common = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < common; ++i) {
        if (a[i] != b[i])
            return a[i] > b[i] ? LexOrder::precedes : LexOrder::follows;
    }
    // Equal weight and equal prefix force equal length.
    return LexOrder::equal;
}

bool is_hook(const Partition& lambda) {
    const auto p = lambda.parts();
    return std::all_of(p.begin() + 1, p.end(), [](int x) { return x == 1; });
}

bool is_self_conjugate(const Partition& lambda) {
    return lambda.largest() == lambda.length() && conjugate(lambda) == lambda;
}

ShapeFlags predicates(const Partition& lambda) {
    const auto p = lambda.parts();
    ShapeFlags flags;
    flags.is_hook = is_hook(lambda);
    flags.is_two_part = lambda.length() == 2;
    flags.is_rectangular = p.front() == p.back();
    flags.is_staircase = p.back() == 1 && lambda.largest() == lambda.length();
    for (std::size_t i = 1; flags.is_staircase && i < p.size(); ++i)
        flags.is_staircase = p[i - 1] == p[i] + 1;
    flags.is_self_conjugate = is_self_conjugate(lambda);
    return flags;
}

Partition hook(int n, int k) {
    if (n < 1 || k < 0 || k > n - 1)
        throw std::invalid_argument("hook(n, k) requires 0 <= k <= n - 1");
    std::vector<int> parts{n - k};
    parts.insert(parts.end(), static_cast<std::size_t>(k), 1);
    return Partition(std::move(parts));
}

Partition staircase(int t) {
    if (t < 1)
        throw std::invalid_argument("staircase requires t >= 1");
    std::vector<int> parts;
    for (int p = t; p >= 1; --p)
        parts.push_back(p);
    return Partition(std::move(parts));
}

Partition rectangle(int part, int rows) {
    if (part < 1 || rows < 1)
        throw std::invalid_argument("rectangle requires positive dimensions");
    return Partition(std::vector<int>(static_cast<std::size_t>(rows), part));
}

} // namespace pgraph
