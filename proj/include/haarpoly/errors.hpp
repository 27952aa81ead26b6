#pragma once

#include <stdexcept>
#include <string>

namespace haarpoly {

/** Base class for every error this library throws on bad input or broken
 *  preconditions. Internal consistency violations (things that indicate a bug
 *  rather than bad input) throw InternalError. */
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/** Unknown simple type letter, rank outside the valid range for the type,
 *  or a structurally invalid group (no factors and no torus). */
struct InvalidTypeError : Error {
    using Error::Error;
};

/** A coordinate vector that is not a positive root of the given system. */
struct NotARootError : Error {
    using Error::Error;
};

/** A word in the simple reflections that is not reduced (some partial
 *  product sends a later letter's simple root to a negative root), or that
 *  is reduced but not of maximal length where a longest word is required. */
struct NotReducedError : Error {
    using Error::Error;
};

/** Operands whose variable counts disagree (x block or circle block). */
struct DimensionMismatchError : Error {
    using Error::Error;
};

/** Entry symbols are only modelled for special-unitary factors; requesting
 *  coordinates of another simple type lands here. */
struct UnsupportedFactorError : Error {
    using Error::Error;
};

/** Factor number, matrix entry index, or torus coordinate out of range. */
struct IndexError : Error {
    using Error::Error;
};

/** Numeric parameter outside its domain (x not in [0,1], |w| != 1, ...). */
struct DomainError : Error {
    using Error::Error;
};

/** A claimed separating vector v with v.m < 1 for some spectrum point m. */
struct InvalidSeparatorError : Error {
    using Error::Error;
};

/** Hull queries need at least one spectrum point. */
struct EmptySpectrumError : Error {
    using Error::Error;
};

/** Text that does not match the expression / group / spectrum grammar.
 *  position is a 0-based byte offset into the input. */
struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

/** "This should not happen": an internal invariant failed. */
struct InternalError : Error {
    using Error::Error;
};

} // namespace haarpoly
