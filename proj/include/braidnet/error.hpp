#pragma once

#include <stdexcept>
#include <string>

namespace braidnet {

/// Malformed user input: bad word literals, out-of-range generators,
/// non-pure braids handed to pure-braid operations.
class input_error : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// A size guard refused to start a computation.
class resource_error : public std::runtime_error
{
public:
    resource_error(std::string const& what, std::string estimate)
        : std::runtime_error(what), estimate_(std::move(estimate))
    {
    }

    /// Size the refused computation would have produced (decimal string).
    std::string const& estimate() const noexcept { return estimate_; }

private:
    std::string estimate_;
};

} // namespace braidnet
