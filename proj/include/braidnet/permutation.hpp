#pragma once

// Permutations of {1..n} in one-line notation and their inversion sets.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"

namespace braidnet {

/// Number of unordered pairs of n elements, C(n,2).
constexpr int pair_count(int n) noexcept { return n * (n - 1) / 2; }

/// Index of the pair (i,j), 1 <= i < j <= n, in lexicographic pair order.
constexpr int pair_index(int n, int i, int j) noexcept
{
    // pairs (1,2),(1,3),...,(1,n),(2,3),...
    return (i - 1) * n - (i - 1) * i / 2 + (j - i - 1);
}

/// Bijection on {1..n}. images()[q-1] is the value at q.
class Permutation
{
public:
    Permutation() = default;

    explicit Permutation(std::vector<int> images) : images_(std::move(images))
    {
        std::vector<bool> seen(images_.size() + 1, false);
        for (int v : images_) {
            if (v < 1 || v > size() || seen[v])
                throw input_error("not a permutation of 1..n");
            seen[v] = true;
        }
    }

    static Permutation identity(int n)
    {
        std::vector<int> v(n);
        std::iota(v.begin(), v.end(), 1);
        return Permutation(std::move(v), unchecked{});
    }

    /// The long element (n, n-1, ..., 1).
    static Permutation reverse(int n)
    {
        std::vector<int> v(n);
        for (int q = 0; q < n; ++q)
            v[q] = n - q;
        return Permutation(std::move(v), unchecked{});
    }

    int size() const noexcept { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[i - 1]; }
    std::span<int const> images() const noexcept { return images_; }

    Permutation inverse() const
    {
        std::vector<int> v(images_.size());
        for (int q = 1; q <= size(); ++q)
            v[(*this)(q) - 1] = q;
        return Permutation(std::move(v), unchecked{});
    }

    /// Exchange the values at positions j and j+1.
    void swap_adjacent(int j)
    {
        if (j < 1 || j >= size())
            throw input_error("generator index " + std::to_string(j) + " out of range 1.." +
                              std::to_string(size() - 1));
        std::swap(images_[j - 1], images_[j]);
    }

    int inversion_count() const noexcept
    {
        int c = 0;
        for (int a = 0; a < size(); ++a)
            for (int b = a + 1; b < size(); ++b)
                c += images_[a] > images_[b];
        return c;
    }

    bool is_identity() const noexcept
    {
        for (int q = 0; q < size(); ++q)
            if (images_[q] != q + 1)
                return false;
        return true;
    }

    std::string to_string() const
    {
        std::string s = "(";
        for (int q = 0; q < size(); ++q) {
            if (q)
                s += ',';
            s += std::to_string(images_[q]);
        }
        return s + ")";
    }

    bool operator==(Permutation const&) const = default;
    auto operator<=>(Permutation const&) const = default;

private:
    struct unchecked {};
    Permutation(std::vector<int> v, unchecked) : images_(std::move(v)) {}

    std::vector<int> images_;
};

/// Arrangement reached from the identity by swapping positions j,j+1 for
/// each letter j, leftmost letter first (wiring-diagram order). The result
/// maps a position to the particle occupying it.
inline Permutation apply_word(int n, std::span<int const> word)
{
    auto p = Permutation::identity(n);
    for (int j : word)
        p.swap_adjacent(j);
    return p;
}

/// Sign vector over pairs i<j: +1 when p(i) > p(j), -1 otherwise.
class InversionSet
{
public:
    InversionSet() = default;

    InversionSet(int n, std::vector<int8_t> signs) : n_(n), signs_(std::move(signs))
    {
        if (static_cast<int>(signs_.size()) != pair_count(n))
            throw input_error("inversion set needs C(n,2) entries");
        for (auto s : signs_)
            if (s != 1 && s != -1)
                throw input_error("inversion set entries must be +1 or -1");
    }

    int n() const noexcept { return n_; }
    int at(int i, int j) const { return signs_[pair_index(n_, i, j)]; }
    std::span<int8_t const> signs() const noexcept { return signs_; }

    /// The order i >_p j iff at(i,j) = +1 must be transitive for the sign
    /// vector to come from a permutation.
    bool is_transitive() const
    {
        for (int i = 1; i <= n_; ++i)
            for (int j = i + 1; j <= n_; ++j)
                for (int k = j + 1; k <= n_; ++k) {
                    int a = at(i, j), b = at(i, k), c = at(j, k);
                    // cyclic patterns i>j>k>i and i<j<k<i
                    if ((a == 1 && c == 1 && b == -1) || (a == -1 && c == -1 && b == 1))
                        return false;
                }
        return true;
    }

    /// Recover the permutation, if the sign vector is realizable.
    std::optional<Permutation> to_permutation() const
    {
        if (!is_transitive())
            return std::nullopt;
        // p(i) - 1 counts the j with i >_p j
        std::vector<int> v(n_, 1);
        for (int i = 1; i <= n_; ++i)
            for (int j = i + 1; j <= n_; ++j)
                ++v[(at(i, j) == 1 ? i : j) - 1];
        return Permutation(std::move(v));
    }

    bool operator==(InversionSet const&) const = default;
    auto operator<=>(InversionSet const&) const = default;

private:
    int n_ = 0;
    std::vector<int8_t> signs_;
};

inline InversionSet inversion_set(Permutation const& p)
{
    int n = p.size();
    std::vector<int8_t> s(pair_count(n));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            s[pair_index(n, i, j)] = p(i) > p(j) ? 1 : -1;
    return InversionSet(n, std::move(s));
}

} // namespace braidnet
