#pragma once

// The graph of reduced words under commutations (ij ~ ji, |i-j| > 1) and
// braid moves (jij -> iji, |i-j| = 1).

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "network.hpp"

namespace braidnet {

namespace detail {

// Words are packed as byte strings for cheap hashing.
inline std::string pack(std::span<int const> word)
{
    return std::string(word.begin(), word.end());
}

inline std::vector<int> unpack(std::string const& w)
{
    return std::vector<int>(w.begin(), w.end());
}

template <typename Visit>
void for_each_commutation(std::string const& w, Visit visit)
{
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
        if (std::abs(w[k] - w[k + 1]) > 1) {
            auto v = w;
            std::swap(v[k], v[k + 1]);
            visit(std::move(v));
        }
    }
}

template <typename Visit>
void for_each_braid_move(std::string const& w, Visit visit)
{
    for (std::size_t k = 0; k + 2 < w.size(); ++k) {
        if (w[k] == w[k + 2] && std::abs(w[k] - w[k + 1]) == 1) {
            auto v = w;
            v[k] = v[k + 2] = w[k + 1];
            v[k + 1] = w[k];
            visit(std::move(v));
        }
    }
}

} // namespace detail

/// Every word reachable from S by commutations alone, sorted.
inline std::vector<SortingNetwork> commutation_class_members(SortingNetwork const& s)
{
    std::unordered_set<std::string> seen{detail::pack(s.word())};
    std::vector<std::string> frontier{detail::pack(s.word())};
    while (!frontier.empty()) {
        auto w = std::move(frontier.back());
        frontier.pop_back();
        detail::for_each_commutation(w, [&](std::string v) {
            if (seen.insert(v).second)
                frontier.push_back(std::move(v));
        });
    }
    std::vector<std::string> sorted(seen.begin(), seen.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<SortingNetwork> out;
    out.reserve(sorted.size());
    for (auto const& w : sorted)
        out.emplace_back(s.n(), detail::unpack(w));
    return out;
}

/// Lexicographically least member of the commutation class of S.
inline SortingNetwork commutation_class(SortingNetwork const& s)
{
    return commutation_class_members(s).front();
}

/// Minimal number of braid moves connecting S and T; commutations are free.
/// Runs a 0-1 breadth-first search over reduced words, which visits whole
/// commutation classes at equal distance.
inline int braid_move_distance(SortingNetwork const& s, SortingNetwork const& t)
{
    if (s.n() != t.n())
        throw input_error("braid_move_distance: networks on different element counts");
    auto const goal = detail::pack(t.word());
    std::unordered_map<std::string, int> dist;
    std::deque<std::string> queue;
    auto start = detail::pack(s.word());
    dist[start] = 0;
    queue.push_back(start);
    while (!queue.empty()) {
        auto w = std::move(queue.front());
        queue.pop_front();
        int d = dist[w];
        if (w == goal)
            return d;
        auto relax = [&](std::string v, int cost, bool front) {
            auto it = dist.find(v);
            if (it == dist.end() || it->second > d + cost) {
                dist[v] = d + cost;
                if (front)
                    queue.push_front(std::move(v));
                else
                    queue.push_back(std::move(v));
            }
        };
        detail::for_each_commutation(w, [&](std::string v) { relax(std::move(v), 0, true); });
        detail::for_each_braid_move(w, [&](std::string v) { relax(std::move(v), 1, false); });
    }
    throw std::logic_error("reduced words of the long element are always connected");
}

} // namespace braidnet
