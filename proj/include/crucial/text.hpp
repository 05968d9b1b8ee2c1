#ifndef CRUCIAL_TEXT_HPP
#define CRUCIAL_TEXT_HPP

#include <string>
#include <string_view>

#include "json.hpp"

#include "crucial/count.hpp"

namespace crucial {

// Accepts whitespace- or comma-separated values ("2 5 4 1 3", "2,5,4,1,3")
// and, for n <= 9, the compact digit form ("25413"). Throws
// std::invalid_argument on anything that is not a permutation.
Permutation parse_permutation(std::string_view text);
// Always the separated form.
std::string format_permutation(const Permutation& p);

// Comma-separated parts: "3,2,1". Empty string is the empty shape.
YoungShape parse_shape(std::string_view text);
std::string format_shape(const YoungShape& shape);

// One row per line, entries space-separated.
std::string format_tableau(const StandardTableau& t);
StandardTableau parse_tableau(std::string_view text);
// P, a blank line, then Q.
std::string format_tableau_pair(const TableauPair& pair);
TableauPair parse_tableau_pair(std::string_view text);

nlohmann::json to_json(const CrucialClass& cc);
nlohmann::json to_json(const CountReport& rep);

std::string count_report_csv_header();
std::string count_report_csv_row(const CountReport& rep);

}  // namespace crucial

#endif
