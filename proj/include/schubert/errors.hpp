#pragma once

#include <stdexcept>
#include <string>

namespace schubert {

// Raised when an exact linear division leaves a remainder.  Every call site
// relies on a mathematical divisibility guarantee, so this always means
// either a caller bug or an invalid input class; the enclosing computation
// must abort.
class NotDivisibleError : public std::runtime_error {
public:
    explicit NotDivisibleError(const std::string& what) : std::runtime_error(what) {}
};

// Raised by the alpha-variable change when the input polynomial is not
// invariant under a common translation of all t variables.
class NotTranslationInvariantError : public std::runtime_error {
public:
    explicit NotTranslationInvariantError(const std::string& what) : std::runtime_error(what) {}
};

class RankMismatchError : public std::invalid_argument {
public:
    explicit RankMismatchError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace schubert
