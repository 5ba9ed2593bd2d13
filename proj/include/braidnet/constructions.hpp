#pragma once

// Signed networks, conjugation and the two canonical sorting braids.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "braid.hpp"
#include "network.hpp"

namespace braidnet {

/// One sign per crossing, written "+-+".
class Signature
{
public:
    Signature() = default;

    explicit Signature(std::vector<int> signs) : signs_(std::move(signs))
    {
        for (int s : signs_)
            if (s != 1 && s != -1)
                throw input_error("signature entries must be +1 or -1");
    }

    static Signature parse(std::string_view text)
    {
        std::vector<int> s;
        for (char c : text) {
            if (c == '+')
                s.push_back(1);
            else if (c == '-')
                s.push_back(-1);
            else
                throw input_error("malformed signature: '" + std::string(text) + "'");
        }
        return Signature(std::move(s));
    }

    /// The index-th signature of the given length counting in binary with
    /// '+' = 0 and the first sign as the most significant bit.
    static Signature from_index(int length, std::uint64_t index)
    {
        std::vector<int> s(length);
        for (int k = 0; k < length; ++k)
            s[k] = (index >> (length - 1 - k)) & 1 ? -1 : 1;
        return Signature(std::move(s));
    }

    std::uint64_t index() const noexcept
    {
        std::uint64_t v = 0;
        for (int s : signs_)
            v = (v << 1) | (s < 0 ? 1 : 0);
        return v;
    }

    int size() const noexcept { return static_cast<int>(signs_.size()); }
    int operator[](int k) const { return signs_[k]; }
    std::span<int const> signs() const noexcept { return signs_; }

    Signature negated() const
    {
        auto s = signs_;
        for (int& v : s)
            v = -v;
        return Signature(std::move(s));
    }

    std::string to_string() const
    {
        std::string out;
        for (int s : signs_)
            out += s > 0 ? '+' : '-';
        return out;
    }

    bool operator==(Signature const&) const = default;
    auto operator<=>(Signature const&) const = default;

private:
    std::vector<int> signs_;
};

/// S* = j_N ... j_1.
inline SortingNetwork conjugate(SortingNetwork const& s)
{
    std::vector<int> w(s.word().rbegin(), s.word().rend());
    return SortingNetwork(s.n(), std::move(w));
}

/// j -> n - j, the network mirrored top to bottom.
inline SortingNetwork complement(SortingNetwork const& s)
{
    std::vector<int> w(s.word().begin(), s.word().end());
    for (int& j : w)
        j = s.n() - j;
    return SortingNetwork(s.n(), std::move(w));
}

namespace detail {

inline void require_length(SortingNetwork const& s, Signature const& sigma)
{
    if (sigma.size() != s.length())
        throw input_error("signature of length " + std::to_string(sigma.size()) +
                          " does not match network of length " + std::to_string(s.length()));
}

} // namespace detail

/// j_1^{s_1} ... j_N^{s_N}.
inline SignedBraidWord signed_network(SortingNetwork const& s, Signature const& sigma)
{
    detail::require_length(s, sigma);
    std::vector<BraidLetter> letters;
    letters.reserve(s.length());
    for (int k = 0; k < s.length(); ++k)
        letters.push_back({s[k], sigma[k]});
    return SignedBraidWord(s.n(), std::move(letters));
}

/// (j_1^{s_1} ... j_N^{s_N})* = j_N^{-s_N} ... j_1^{-s_1}, the inverse braid.
inline SignedBraidWord conjugate_signed(SortingNetwork const& s, Signature const& sigma)
{
    return signed_network(s, sigma).inverse();
}

/// Algebraic sorting braid: j_1^{s_1}..j_N^{s_N} (n-j_1)^{-s_1}..(n-j_N)^{-s_N}.
inline SignedBraidWord asb(SortingNetwork const& s, Signature const& sigma)
{
    return signed_network(s, sigma) * signed_network(complement(s), sigma.negated());
}

/// Dynamic sorting braid: S(sigma) S(-sigma).
inline SignedBraidWord dsb(SortingNetwork const& s, Signature const& sigma)
{
    return signed_network(s, sigma) * signed_network(s, sigma.negated());
}

/// The closed path S then T on the permutahedron, signed crossing by crossing.
struct SortingLoop
{
    SortingNetwork first;
    SortingNetwork second;
    Signature signature; // length 2N

    SortingLoop(SortingNetwork s, SortingNetwork t, Signature sigma)
        : first(std::move(s)), second(std::move(t)), signature(std::move(sigma))
    {
        if (first.n() != second.n())
            throw input_error("loop halves act on different element counts");
        if (signature.size() != first.length() + second.length())
            throw input_error("loop signature must have length 2N");
    }

    SignedBraidWord braid() const
    {
        std::vector<BraidLetter> letters;
        int k = 0;
        for (int j : first.word())
            letters.push_back({j, signature[k++]});
        for (int j : second.word())
            letters.push_back({j, signature[k++]});
        return SignedBraidWord(first.n(), std::move(letters));
    }
};

} // namespace braidnet
