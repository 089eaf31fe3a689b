#pragma once

#include "hypconv/term.hpp"

#include <string>

namespace hypconv {

struct ParseError : InvalidInput {
    std::size_t line;
    std::size_t column;
    ParseError(const std::string& what, std::size_t l, std::size_t c);
};

// Reads a term description (see README for the grammar).
ProperTerm parse_term(const std::string& text);
ProperTerm read_term_file(const std::string& path);
std::string write_term(const ProperTerm& term);

}  // namespace hypconv
