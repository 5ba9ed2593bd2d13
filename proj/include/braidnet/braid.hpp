#pragma once

// Signed braid words, the Artin action on the free group, combing of pure
// braids and the triviality test.

#include <algorithm>
#include <charconv>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "free_group.hpp"
#include "permutation.hpp"

namespace braidnet {

/// sigma_position^sign. A positive letter takes the strand at `position`
/// over the strand at `position + 1`.
struct BraidLetter
{
    int position;
    int sign;

    bool operator==(BraidLetter const&) const = default;
    auto operator<=>(BraidLetter const&) const = default;
};

class SignedBraidWord
{
public:
    SignedBraidWord() = default;

    SignedBraidWord(int n, std::vector<BraidLetter> letters) : n_(n), letters_(std::move(letters))
    {
        if (n_ < 1)
            throw input_error("braid needs at least one strand");
        for (auto const& l : letters_) {
            if (l.position < 1 || l.position >= n_)
                throw input_error("braid generator " + std::to_string(l.position) +
                                  " out of range 1.." + std::to_string(n_ - 1));
            if (l.sign != 1 && l.sign != -1)
                throw input_error("braid letter sign must be +1 or -1");
        }
    }

    /// Accepts the canonical form "1+ 2- 1+" or the compact form "1,-2,1".
    /// With n = 0 the strand count is one more than the largest position.
    static SignedBraidWord parse(std::string_view text, int n = 0)
    {
        std::vector<BraidLetter> letters;
        auto fail = [&] { throw input_error("malformed braid word: '" + std::string(text) + "'"); };
        auto to_int = [&](std::string_view item) {
            int v = 0;
            auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
            if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size())
                fail();
            return v;
        };
        auto trim = [](std::string_view s) {
            while (!s.empty() && s.front() == ' ')
                s.remove_prefix(1);
            while (!s.empty() && s.back() == ' ')
                s.remove_suffix(1);
            return s;
        };

        auto body = trim(text);
        if (body.find(',') != std::string_view::npos) {
            while (true) {
                auto comma = body.find(',');
                auto item = trim(body.substr(0, comma));
                int v = to_int(item.starts_with('+') ? item.substr(1) : item);
                if (v == 0)
                    fail();
                letters.push_back({v < 0 ? -v : v, v < 0 ? -1 : 1});
                if (comma == std::string_view::npos)
                    break;
                body.remove_prefix(comma + 1);
            }
        } else {
            while (!body.empty()) {
                auto space = body.find(' ');
                auto item = body.substr(0, space);
                if (item.size() < 2 || (item.back() != '+' && item.back() != '-'))
                    fail();
                int p = to_int(item.substr(0, item.size() - 1));
                letters.push_back({p, item.back() == '+' ? 1 : -1});
                body = space == std::string_view::npos ? std::string_view{} : trim(body.substr(space));
            }
        }
        if (n == 0) {
            n = 1;
            for (auto const& l : letters)
                n = std::max(n, l.position + 1);
        }
        return SignedBraidWord(n, std::move(letters));
    }

    int n() const noexcept { return n_; }
    std::span<BraidLetter const> letters() const noexcept { return letters_; }
    std::size_t size() const noexcept { return letters_.size(); }

    std::vector<int> positions() const
    {
        std::vector<int> w;
        w.reserve(letters_.size());
        for (auto const& l : letters_)
            w.push_back(l.position);
        return w;
    }

    /// Reversed letters with flipped signs.
    SignedBraidWord inverse() const
    {
        std::vector<BraidLetter> v(letters_.rbegin(), letters_.rend());
        for (auto& l : v)
            l.sign = -l.sign;
        return SignedBraidWord(n_, std::move(v));
    }

    friend SignedBraidWord operator*(SignedBraidWord const& a, SignedBraidWord const& b)
    {
        if (a.n_ != b.n_)
            throw input_error("cannot concatenate braids on different strand counts");
        auto v = a.letters_;
        v.insert(v.end(), b.letters_.begin(), b.letters_.end());
        return SignedBraidWord(a.n_, std::move(v));
    }

    /// "1+ 2- 1+"
    std::string to_string() const
    {
        std::string s;
        for (std::size_t k = 0; k < letters_.size(); ++k) {
            if (k)
                s += ' ';
            s += std::to_string(letters_[k].position);
            s += letters_[k].sign > 0 ? '+' : '-';
        }
        return s;
    }

    bool operator==(SignedBraidWord const&) const = default;

private:
    int n_ = 1;
    std::vector<BraidLetter> letters_;
};

inline Permutation underlying_permutation(SignedBraidWord const& b)
{
    auto w = b.positions();
    return apply_word(b.n(), w);
}

inline bool is_pure(SignedBraidWord const& b) { return underlying_permutation(b).is_identity(); }

/// Images of x_1..x_n under the automorphism of b, with
///   sigma_p:      x_p -> x_p x_{p+1} x_p^-1,   x_{p+1} -> x_p
///   sigma_p^-1:   x_p -> x_{p+1},              x_{p+1} -> x_{p+1}^-1 x_p x_{p+1}
/// and phi(uv) = phi(u) o phi(v). images[i-1] is the image of x_i.
inline std::vector<FreeGroupWord> artin_action(SignedBraidWord const& b)
{
    std::vector<FreeGroupWord> img;
    img.reserve(b.n());
    for (int i = 1; i <= b.n(); ++i)
        img.push_back(FreeGroupWord::generator(i));
    // phi_{u s} = phi_u o phi_s: the new image of x depends only on the
    // current images of the letters phi_s(x) is spelled with.
    for (auto const& l : b.letters()) {
        auto& lo = img[l.position - 1];
        auto& hi = img[l.position];
        if (l.sign > 0) {
            auto next = lo * hi * lo.inverse();
            hi = std::move(lo);
            lo = std::move(next);
        } else {
            auto next = hi.inverse() * lo * hi;
            lo = std::move(hi);
            hi = std::move(next);
        }
    }
    return img;
}

inline FreeGroupWord artin_apply(SignedBraidWord const& b, int i)
{
    if (i < 1 || i > b.n())
        throw input_error("strand " + std::to_string(i) + " out of range");
    return std::move(artin_action(b)[i - 1]);
}

/// A pure braid as x_i -> A_i x_i A_i^{-1}, one freely reduced A_i per strand.
struct CombedBraid
{
    int n = 0;
    std::vector<FreeGroupWord> conjugators; // conjugators[i-1] = A_i

    FreeGroupWord const& conjugator(int i) const { return conjugators.at(i - 1); }
};

namespace detail {

inline FreeGroupWord extract_conjugator(FreeGroupWord const& image, int i)
{
    auto w = image.letters();
    auto m = w.size() / 2;
    bool ok = w.size() % 2 == 1 && w[m] == i;
    for (std::size_t k = 0; ok && k < m; ++k)
        ok = w[m + 1 + k] == -w[m - 1 - k];
    if (!ok)
        throw std::logic_error("image of x" + std::to_string(i) + " is not a conjugate of it: " +
                               image.to_string());
    return FreeGroupWord(w.first(m));
}

inline void require_pure(SignedBraidWord const& b, char const* what)
{
    if (!is_pure(b))
        throw input_error(std::string(what) + ": braid '" + b.to_string() + "' is not pure");
}

} // namespace detail

inline CombedBraid comb(SignedBraidWord const& b)
{
    detail::require_pure(b, "comb");
    auto img = artin_action(b);
    CombedBraid c{b.n(), {}};
    c.conjugators.reserve(b.n());
    for (int i = 1; i <= b.n(); ++i)
        c.conjugators.push_back(detail::extract_conjugator(img[i - 1], i));
    return c;
}

/// True iff the braid acts as the identity on the free group (the Artin
/// representation is faithful).
inline bool is_trivial(SignedBraidWord const& b)
{
    detail::require_pure(b, "is_trivial");
    auto img = artin_action(b);
    for (int i = 1; i <= b.n(); ++i)
        if (img[i - 1].size() != 1 || img[i - 1][0] != i)
            return false;
    return true;
}

} // namespace braidnet
