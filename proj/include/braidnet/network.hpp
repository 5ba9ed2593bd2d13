#pragma once

// Sorting networks: reduced words for the long element of S_n.

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <charconv>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "parallel.hpp"
#include "permutation.hpp"

namespace braidnet {

using big_int = boost::multiprecision::cpp_int;

/// Parses a generator word: a digit string ("123212") or a comma-separated
/// list ("10,11,3"). No range checking.
inline std::vector<int> parse_word(std::string_view text)
{
    std::vector<int> word;
    if (text.find(',') != std::string_view::npos) {
        while (!text.empty()) {
            auto comma = text.find(',');
            auto item = text.substr(0, comma);
            int value = 0;
            auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
            if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size())
                throw input_error("malformed generator list: '" + std::string(text) + "'");
            word.push_back(value);
            if (comma == std::string_view::npos)
                break;
            text.remove_prefix(comma + 1);
            if (text.empty())
                throw input_error("trailing comma in generator list");
        }
        return word;
    }
    for (char c : text) {
        if (c < '0' || c > '9')
            throw input_error("malformed network literal: '" + std::string(text) + "'");
        word.push_back(c - '0');
    }
    return word;
}

/// Digits for n <= 10, comma-separated integers above.
inline std::string format_word(int n, std::span<int const> word)
{
    std::string s;
    for (std::size_t k = 0; k < word.size(); ++k) {
        if (n > 10 && k)
            s += ',';
        s += std::to_string(word[k]);
    }
    return s;
}

inline bool is_sorting_network(int n, std::span<int const> word)
{
    if (n < 1 || static_cast<int>(word.size()) != pair_count(n))
        return false;
    auto p = Permutation::identity(n);
    for (int j : word) {
        if (j < 1 || j >= n)
            return false;
        p.swap_adjacent(j);
    }
    return p == Permutation::reverse(n);
}

class SortingNetwork
{
public:
    SortingNetwork() = default;

    SortingNetwork(int n, std::vector<int> word) : n_(n), word_(std::move(word))
    {
        if (!is_sorting_network(n_, word_))
            throw input_error("'" + format_word(n_, word_) + "' is not a sorting network on " +
                              std::to_string(n_) + " elements");
    }

    /// Parses the text format. With n = 0 the element count is inferred
    /// from the largest generator, which every sorting network uses.
    static SortingNetwork parse(std::string_view text, int n = 0)
    {
        auto word = parse_word(text);
        if (n == 0)
            n = word.empty() ? 1 : *std::max_element(word.begin(), word.end()) + 1;
        return SortingNetwork(n, std::move(word));
    }

    int n() const noexcept { return n_; }
    int length() const noexcept { return static_cast<int>(word_.size()); }
    std::span<int const> word() const noexcept { return word_; }
    int operator[](int k) const { return word_[k]; }

    std::string to_string() const { return format_word(n_, word_); }

    bool operator==(SortingNetwork const&) const = default;
    auto operator<=>(SortingNetwork const&) const = default;

private:
    int n_ = 0;
    std::vector<int> word_;
};

/// |S(n)| = C(n,2)! / (1^{n-1} 3^{n-2} 5^{n-3} ... (2n-3)^1).
inline big_int stanley_count(int n)
{
    if (n < 2)
        throw input_error("stanley_count needs n >= 2");
    big_int num = 1;
    for (int k = 2; k <= pair_count(n); ++k)
        num *= k;
    big_int den = 1;
    for (int k = 1; k <= n - 1; ++k)
        for (int e = 0; e < n - k; ++e)
            den *= 2 * k - 1;
    return num / den;
}

struct EnumerateOptions
{
    /// Refuse when |S(n)| exceeds this many networks.
    std::uint64_t cap = 1'000'000;
    unsigned workers = 1;
};

namespace detail {

// Extends `word` (reaching arrangement p) by every generator that adds an
// inversion, in increasing generator order, so outputs come out sorted.
inline void extend_reduced(int n, int target, Permutation& p, std::vector<int>& word,
                           std::vector<SortingNetwork>& out)
{
    if (static_cast<int>(word.size()) == target) {
        out.emplace_back(n, word);
        return;
    }
    for (int j = 1; j < n; ++j) {
        if (p(j) < p(j + 1)) {
            p.swap_adjacent(j);
            word.push_back(j);
            extend_reduced(n, target, p, word, out);
            word.pop_back();
            p.swap_adjacent(j);
        }
    }
}

inline void reduced_prefixes(int n, int depth, Permutation& p, std::vector<int>& word,
                             std::vector<std::vector<int>>& out)
{
    if (static_cast<int>(word.size()) == depth) {
        out.push_back(word);
        return;
    }
    for (int j = 1; j < n; ++j) {
        if (p(j) < p(j + 1)) {
            p.swap_adjacent(j);
            word.push_back(j);
            reduced_prefixes(n, depth, p, word, out);
            word.pop_back();
            p.swap_adjacent(j);
        }
    }
}

} // namespace detail

/// All sorting networks on n elements in lexicographic order. With several
/// workers the search is split by reduced prefixes and the chunks are
/// concatenated in prefix order, which keeps the result identical.
inline std::vector<SortingNetwork> enumerate_networks(int n, EnumerateOptions const& opts = {})
{
    if (n < 2)
        throw input_error("enumerate_networks needs n >= 2");
    auto count = stanley_count(n);
    if (count > opts.cap)
        throw resource_error("|S(" + std::to_string(n) + ")| = " + count.str() +
                                 " exceeds the cap of " + std::to_string(opts.cap),
                             count.str());

    int target = pair_count(n);
    int depth = opts.workers > 1 ? std::min(target, 4) : 0;
    std::vector<std::vector<int>> prefixes;
    {
        auto p = Permutation::identity(n);
        std::vector<int> word;
        detail::reduced_prefixes(n, depth, p, word, prefixes);
    }
    auto chunks = parallel_map(prefixes.size(), opts.workers, [&](std::size_t c) {
        std::vector<SortingNetwork> out;
        auto p = apply_word(n, prefixes[c]);
        auto word = prefixes[c];
        detail::extend_reduced(n, target, p, word, out);
        return out;
    });

    std::vector<SortingNetwork> all;
    all.reserve(count.convert_to<std::size_t>());
    for (auto& chunk : chunks)
        std::move(chunk.begin(), chunk.end(), std::back_inserter(all));
    return all;
}

/// Particle trajectories and crossing table of any word of adjacent swaps.
struct WiringDiagram
{
    struct Crossing
    {
        int low;  // smaller particle label
        int high;
        bool operator==(Crossing const&) const = default;
    };

    int n = 0;
    /// trajectories[i-1][k] = position of particle i after k swaps.
    std::vector<std::vector<int>> trajectories;
    /// crossings[k-1] = particles exchanged by the k-th swap.
    std::vector<Crossing> crossings;

    /// 1-based times at which particles i and j are exchanged.
    std::vector<int> crossing_times(int i, int j) const
    {
        if (i > j)
            std::swap(i, j);
        std::vector<int> t;
        for (std::size_t k = 0; k < crossings.size(); ++k)
            if (crossings[k].low == i && crossings[k].high == j)
                t.push_back(static_cast<int>(k) + 1);
        return t;
    }

    /// The unique swap time of i and j (first one for longer words).
    int crossing_index(int i, int j) const
    {
        auto t = crossing_times(i, j);
        if (t.empty())
            throw input_error("particles " + std::to_string(i) + " and " + std::to_string(j) +
                              " never cross");
        return t.front();
    }
};

inline WiringDiagram wiring_diagram(int n, std::span<int const> word)
{
    WiringDiagram d;
    d.n = n;
    d.trajectories.assign(n, {});
    auto at = Permutation::identity(n); // position -> particle
    std::vector<int> where(n + 1);      // particle -> position
    for (int i = 1; i <= n; ++i) {
        where[i] = i;
        d.trajectories[i - 1].push_back(i);
    }
    for (int j : word) {
        int a = at(j), b = at(j + 1);
        at.swap_adjacent(j);
        std::swap(where[a], where[b]);
        d.crossings.push_back({std::min(a, b), std::max(a, b)});
        for (int i = 1; i <= n; ++i)
            d.trajectories[i - 1].push_back(where[i]);
    }
    return d;
}

inline WiringDiagram wiring_diagram(SortingNetwork const& s)
{
    return wiring_diagram(s.n(), s.word());
}

} // namespace braidnet
