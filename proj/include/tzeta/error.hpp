#ifndef TZETA_ERROR_HPP
#define TZETA_ERROR_HPP

#include <stdexcept>
#include <string>

namespace tzeta {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed index/word/rational text or invalid parameters.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

/// Request whose defining sum (or a contracted constituent) diverges.
class DivergentError : public Error {
public:
    explicit DivergentError(const std::string& what) : Error(what) {}
};

/// Domain violation (pole of Gamma, log 0, bad parameter range, ...).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

/// Summation cap exceeded before the requested accuracy was reached.
class MaxTermsError : public Error {
public:
    explicit MaxTermsError(const std::string& what) : Error(what) {}
};

}  // namespace tzeta

#endif
