#pragma once

// Linking numbers and Milnor invariants of pure braids.

#include <array>
#include <cstdlib>
#include <span>
#include <variant>
#include <vector>

#include "braid.hpp"
#include "network.hpp"

namespace braidnet {

/// lk(i,j) for all pairs i<j, stored in pair_index order.
struct LinkingVector
{
    int n = 0;
    std::vector<int> entries;

    int at(int i, int j) const { return entries[pair_index(n, i, j)]; }
    int l1() const
    {
        int s = 0;
        for (int v : entries)
            s += std::abs(v);
        return s;
    }
    bool is_zero() const { return l1() == 0; }
    bool operator==(LinkingVector const&) const = default;
};

/// Index of the triple i<j<k in lexicographic triple order.
inline int triple_index(int n, int i, int j, int k)
{
    int idx = 0;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = b + 1; c <= n; ++c, ++idx)
                if (a == i && b == j && c == k)
                    return idx;
    throw input_error("triple indices must satisfy 1 <= i < j < k <= n");
}

/// mu3(i,j,k) for all triples i<j<k in lexicographic order.
struct Mu3Vector
{
    int n = 0;
    std::vector<int> entries;

    int at(int i, int j, int k) const { return entries[triple_index(n, i, j, k)]; }
    /// L1 norm.
    int magnitude() const
    {
        int s = 0;
        for (int v : entries)
            s += std::abs(v);
        return s;
    }
    bool is_zero() const { return magnitude() == 0; }
    bool operator==(Mu3Vector const&) const = default;
};

/// First and last swap times (1-based) of every pair in a word where each
/// pair of particles is exchanged exactly twice.
struct CrossingIndices
{
    int n = 0;
    std::vector<int> first; // pair_index order
    std::vector<int> last;

    int f(int i, int j) const { return first[pair_index(n, i, j)]; }
    int l(int i, int j) const { return last[pair_index(n, i, j)]; }
};

inline CrossingIndices crossing_indices(SignedBraidWord const& loop)
{
    int n = loop.n();
    CrossingIndices ci{n, std::vector<int>(pair_count(n), 0), std::vector<int>(pair_count(n), 0)};
    std::vector<int> hits(pair_count(n), 0);
    auto at = Permutation::identity(n);
    int t = 0;
    for (auto const& l : loop.letters()) {
        ++t;
        int a = at(l.position), b = at(l.position + 1);
        int idx = pair_index(n, std::min(a, b), std::max(a, b));
        if (++hits[idx] == 1)
            ci.first[idx] = t;
        else
            ci.last[idx] = t;
        at.swap_adjacent(l.position);
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (hits[pair_index(n, i, j)] != 2)
                throw input_error("not a sorting loop: particles " + std::to_string(i) + "," +
                                  std::to_string(j) + " cross " +
                                  std::to_string(hits[pair_index(n, i, j)]) + " times");
    return ci;
}

/// lk(i,j) = (sigma_f + sigma_l) / 2 from the two crossing signs of each pair.
inline LinkingVector lk_crossings(SignedBraidWord const& loop)
{
    auto ci = crossing_indices(loop);
    auto letters = loop.letters();
    LinkingVector lk{loop.n(), std::vector<int>(pair_count(loop.n()))};
    for (std::size_t p = 0; p < lk.entries.size(); ++p)
        lk.entries[p] = (letters[ci.first[p] - 1].sign + letters[ci.last[p] - 1].sign) / 2;
    return lk;
}

/// Sum over subsequences of w spelling `pattern` of the product of their
/// exponents, i.e. the Magnus coefficient of X_{p1}...X_{pm}. Labels in the
/// pattern must be distinct.
inline long long magnus_count(FreeGroupWord const& w, std::span<int const> pattern)
{
    if (pattern.empty())
        throw input_error("magnus_count: empty pattern");
    // count[m] = signed number of matches of the first m pattern labels
    std::vector<long long> count(pattern.size() + 1, 0);
    count[0] = 1;
    for (auto l : w.letters()) {
        int t = label_of(l), e = exponent_of(l);
        for (std::size_t m = pattern.size(); m-- > 0;)
            if (pattern[m] == t)
                count[m + 1] += e * count[m];
    }
    return count.back();
}

namespace detail {

inline void check_mu_indices(int n, std::span<int const> indices)
{
    if (indices.size() < 2)
        throw input_error("mu needs at least two strand indices");
    std::vector<bool> seen(n + 1, false);
    for (int i : indices) {
        if (i < 1 || i > n || seen[i])
            throw input_error("mu indices must be distinct strands in 1..n");
        seen[i] = true;
    }
}

} // namespace detail

inline long long mu(CombedBraid const& c, std::span<int const> indices)
{
    detail::check_mu_indices(c.n, indices);
    return magnus_count(c.conjugator(indices.back()), indices.first(indices.size() - 1));
}

/// mu(p1,...,pm): pattern p1..p_{m-1} counted in the conjugator of strand pm.
inline long long mu(SignedBraidWord const& b, std::span<int const> indices)
{
    detail::check_mu_indices(b.n(), indices);
    return mu(comb(b), indices);
}

inline long long mu(SignedBraidWord const& b, std::initializer_list<int> indices)
{
    return mu(b, std::span<int const>(indices.begin(), indices.size()));
}

/// mu2(i,j) for all pairs from the combing.
inline LinkingVector mu2_vector(CombedBraid const& c)
{
    LinkingVector lk{c.n, std::vector<int>(pair_count(c.n))};
    for (int i = 1; i <= c.n; ++i)
        for (int j = i + 1; j <= c.n; ++j) {
            int pat[] = {i};
            lk.entries[pair_index(c.n, i, j)] = static_cast<int>(magnus_count(c.conjugator(j), pat));
        }
    return lk;
}

inline Mu3Vector mu3_vector(CombedBraid const& c)
{
    Mu3Vector v{c.n, {}};
    for (int i = 1; i <= c.n; ++i)
        for (int j = i + 1; j <= c.n; ++j)
            for (int k = j + 1; k <= c.n; ++k) {
                int pat[] = {i, j};
                v.entries.push_back(static_cast<int>(magnus_count(c.conjugator(k), pat)));
            }
    return v;
}

inline Mu3Vector mu3_vector(SignedBraidWord const& b) { return mu3_vector(comb(b)); }

/// Strict total order on a triple, greatest first.
struct TripleOrder
{
    std::array<int, 3> ranking;
    bool operator==(TripleOrder const&) const = default;
};

struct NonTransitive
{
    bool operator==(NonTransitive const&) const = default;
};

using TripleClass = std::variant<TripleOrder, NonTransitive>;

/// Signs (s_ij, s_ik, s_jk) of the crossings of particles i<j<k, where
/// s = +1 reads as "the smaller label ranks above the larger".
inline TripleClass classify_triple_signature(std::array<int, 3> const& signs, int i = 1, int j = 2,
                                             int k = 3)
{
    auto above = [&](int a, int b) {
        // sign for the pair in (smaller, larger) orientation
        int lo = std::min(a, b), hi = std::max(a, b);
        int s = lo == i ? (hi == j ? signs[0] : signs[1]) : signs[2];
        return a == lo ? s > 0 : s < 0;
    };
    std::array<int, 3> r{i, j, k};
    std::sort(r.begin(), r.end());
    do {
        if (above(r[0], r[1]) && above(r[1], r[2]) && above(r[0], r[2]))
            return TripleOrder{r};
    } while (std::next_permutation(r.begin(), r.end()));
    return NonTransitive{};
}

/// Signs of the first crossings of particles i<j<k in a signed network,
/// returned in (ij, ik, jk) order.
inline std::array<int, 3> triple_signs(WiringDiagram const& d, std::span<int const> signature, int i,
                                       int j, int k)
{
    return {signature[d.crossing_index(i, j) - 1], signature[d.crossing_index(i, k) - 1],
            signature[d.crossing_index(j, k) - 1]};
}

enum class LoopType
{
    type_i,  // hexagon: pairs recross in the order they first crossed
    type_ii, // backtracking: pairs recross in reverse order
    other
};

/// Shape of the three-strand sub-loop of particles i<j<k inside a loop in
/// which every pair crosses twice.
inline LoopType triple_loop_type(SignedBraidWord const& loop, int i, int j, int k)
{
    auto d = wiring_diagram(loop.n(), loop.positions());
    std::vector<WiringDiagram::Crossing> seq;
    for (auto const& c : d.crossings) {
        bool in_i = c.low == i || c.low == j || c.low == k;
        bool in_h = c.high == i || c.high == j || c.high == k;
        if (in_i && in_h)
            seq.push_back(c);
    }
    if (seq.size() != 6)
        throw input_error("triple does not cross exactly twice per pair");
    if (std::equal(seq.begin(), seq.begin() + 3, seq.begin() + 3))
        return LoopType::type_i;
    if (std::equal(seq.begin(), seq.begin() + 3, seq.rbegin()))
        return LoopType::type_ii;
    return LoopType::other;
}

} // namespace braidnet
