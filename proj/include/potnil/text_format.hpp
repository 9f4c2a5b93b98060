#ifndef POTNIL_TEXT_FORMAT_HPP
#define POTNIL_TEXT_FORMAT_HPP

#include <string>
#include <string_view>
#include <vector>

#include "potnil/matrix.hpp"

namespace potnil {

// Matrix documents:
//
//   field p=INT d=INT [mod=INT(,INT)*]
//   matrix ROWS COLS
//   ROWS lines of COLS element tokens
//
// Element tokens are integers or `+`-joined monomials in `x` with `^`
// powers. `#` starts a comment running to the end of the line. The modulus
// lists coefficients lowest degree first, including the leading 1; when it
// is omitted for d > 1 the smallest irreducible is used.

/// Exactly one document. Throws ParseError with 1-based line and column.
Matrix parse_matrix(std::string_view text);

/// One or more consecutive documents.
std::vector<Matrix> parse_matrices(std::string_view text);

/// Header line `field p=.. d=.. [mod=..]` without trailing newline.
std::string serialize_field(const FieldSpec& field);

/// Canonical document; parse_matrix(serialize(m)) == m byte for byte.
std::string serialize(const Matrix& m);

}  // namespace potnil

#endif  // POTNIL_TEXT_FORMAT_HPP
