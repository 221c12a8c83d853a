#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ybx {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct division_by_zero : error {
    division_by_zero() : error("division by zero") {}
};

struct context_mismatch : error {
    context_mismatch() : error("ring context mismatch") {}
    explicit context_mismatch(const std::string& what) : error(what) {}
};

struct dimension_mismatch : error {
    explicit dimension_mismatch(const std::string& what = "operator dimension mismatch")
        : error(what) {}
};

struct unsupported_substitution : error {
    explicit unsupported_substitution(const std::string& what = "substitution image is not a monomial")
        : error(what) {}
};

struct not_polynomial : error {
    explicit not_polynomial(const std::string& what = "rational function is not a Laurent polynomial")
        : error(what) {}
};

struct exponent_out_of_range : error {
    explicit exponent_out_of_range(const std::string& what = "exponent outside admissible range")
        : error(what) {}
};

// Parse failures carry the byte offset into the source text.
struct parse_error : error {
    std::size_t position;
    parse_error(const std::string& what, std::size_t pos)
        : error(what + " at position " + std::to_string(pos)), position(pos) {}
};

struct unknown_generator : parse_error {
    unknown_generator(const std::string& name, std::size_t pos)
        : parse_error("unknown generator '" + name + "'", pos) {}
};

} // namespace ybx
