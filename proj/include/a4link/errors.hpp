#ifndef A4LINK_ERRORS_HPP
#define A4LINK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace a4link {

// A hard check against a transcribed identity failed. Carries the residual
// (or a description of it) so reports can name the failing check.
class VerificationError : public std::runtime_error {
public:
    explicit VerificationError(const std::string& what) : std::runtime_error(what) {}
};

// Input outside the documented domain of an operation.
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// A rational function was evaluated at a zero of its denominator.
class PoleError : public std::runtime_error {
public:
    PoleError(const std::string& denominator_name, const std::string& where)
        : std::runtime_error("pole: " + denominator_name + " vanishes at " + where),
          denominator(denominator_name) {}
    std::string denominator;
};

// A geometric predicate could not be decided transversally (exact tie, or a
// numeric margin below the configured threshold). Never silently rounded.
class DegenerateConfiguration : public std::runtime_error {
public:
    explicit DegenerateConfiguration(const std::string& what) : std::runtime_error(what) {}
};

} // namespace a4link

#endif
