#pragma once

// Freely reduced words in the free group on x_1..x_n. A letter is a nonzero
// int: +i stands for x_i, -i for x_i^{-1}.

#include <cstdlib>
#include <span>
#include <string>
#include <vector>

namespace braidnet {

using FreeLetter = int;

constexpr int label_of(FreeLetter l) noexcept { return l < 0 ? -l : l; }
constexpr int exponent_of(FreeLetter l) noexcept { return l < 0 ? -1 : 1; }

class FreeGroupWord
{
public:
    FreeGroupWord() = default;

    /// Reduces on construction.
    explicit FreeGroupWord(std::span<FreeLetter const> letters)
    {
        letters_.reserve(letters.size());
        for (auto l : letters)
            push_back(l);
    }

    FreeGroupWord(std::initializer_list<FreeLetter> letters)
        : FreeGroupWord(std::span<FreeLetter const>(letters.begin(), letters.size()))
    {
    }

    static FreeGroupWord generator(int i) { return FreeGroupWord{i}; }

    std::span<FreeLetter const> letters() const noexcept { return letters_; }
    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    FreeLetter operator[](std::size_t k) const { return letters_[k]; }

    /// Appends one letter, cancelling against the tail.
    void push_back(FreeLetter l)
    {
        if (!letters_.empty() && letters_.back() == -l)
            letters_.pop_back();
        else
            letters_.push_back(l);
    }

    FreeGroupWord& operator*=(FreeGroupWord const& rhs)
    {
        for (auto l : rhs.letters_)
            push_back(l);
        return *this;
    }

    friend FreeGroupWord operator*(FreeGroupWord lhs, FreeGroupWord const& rhs)
    {
        lhs *= rhs;
        return lhs;
    }

    FreeGroupWord inverse() const
    {
        FreeGroupWord w;
        w.letters_.reserve(letters_.size());
        for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
            w.letters_.push_back(-*it);
        return w;
    }

    /// "x1 x2 x1^-1"; the identity prints as "e".
    std::string to_string() const
    {
        if (letters_.empty())
            return "e";
        std::string s;
        for (std::size_t k = 0; k < letters_.size(); ++k) {
            if (k)
                s += ' ';
            s += 'x' + std::to_string(label_of(letters_[k]));
            if (letters_[k] < 0)
                s += "^-1";
        }
        return s;
    }

    bool operator==(FreeGroupWord const&) const = default;

private:
    std::vector<FreeLetter> letters_;
};

/// Cancels adjacent inverse pairs until none remain.
inline FreeGroupWord free_reduce(std::span<FreeLetter const> letters)
{
    return FreeGroupWord(letters);
}

} // namespace braidnet
