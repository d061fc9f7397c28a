#ifndef CREMONA_FORM_PARSE_HPP
#define CREMONA_FORM_PARSE_HPP

#include <string>

#include "form.hpp"

namespace cremona {

// Parses polynomial expressions in x, y, z with integer coefficients:
// sums, products (explicit '*' or juxtaposition), powers '^', parentheses,
// e.g. "-7*(6x+11y)^2*(-3y+2z)".  The result must be homogeneous.
Form parse_form(const std::string& text);

} // namespace cremona

#endif
