// SPDX-License-Identifier: Apache-2.0

#ifndef FMUX_ERROR_HPP
#define FMUX_ERROR_HPP

#include <stdexcept>
#include <string>

namespace fmux {

// Malformed input text: unknown units, bad numbers, unknown config keys.
class ParseError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Well-formed input outside the physically meaningful range.
class RangeError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// A quantity that is mathematically undefined for the given inputs,
// e.g. a conditional probability given an event of probability zero.
class UndefinedError : public RangeError
{
public:
    using RangeError::RangeError;
};

} // namespace fmux

#endif // FMUX_ERROR_HPP
