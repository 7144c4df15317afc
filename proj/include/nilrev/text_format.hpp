#pragma once

#include <string>

#include "nilrev/matrix.hpp"

namespace nilrev {

// Matrix body: rows separated by ';', entries by ','. Example: "0,1;0,0".
std::string matrix_to_text(const Matrix& m);
// ParseError positions are (row, entry), 1-based.
Matrix parse_matrix_text(const std::string& body, Ring ring);

// File form: header tokens `ring=<name>` and `n=<dim>` precede the body.
std::string matrix_to_file_text(const Matrix& m);

struct MatrixFile {
    Ring ring;
    int n;
    Matrix m;
};

MatrixFile parse_matrix_file(const std::string& content);

}  // namespace nilrev
