#include "nilrev/text_format.hpp"

#include <sstream>
#include <vector>

#include "nilrev/errors.hpp"

namespace nilrev {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

std::string strip(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

}  // namespace

std::string matrix_to_text(const Matrix& m) {
    std::ostringstream os;
    for (int i = 0; i < m.rows(); ++i) {
        if (i) os << ';';
        for (int j = 0; j < m.cols(); ++j) {
            if (j) os << ',';
            os << m(i, j).str();
        }
    }
    return os.str();
}

Matrix parse_matrix_text(const std::string& body, Ring ring) {
    std::string trimmed = strip(body);
    if (trimmed.empty()) throw ParseError("empty matrix body", 1, 1);
    std::vector<std::string> rows = split(trimmed, ';');
    const int n_rows = static_cast<int>(rows.size());
    int n_cols = -1;
    std::vector<std::vector<Scalar>> parsed;
    for (int i = 0; i < n_rows; ++i) {
        std::vector<std::string> cells = split(rows[static_cast<std::size_t>(i)], ',');
        if (n_cols < 0) n_cols = static_cast<int>(cells.size());
        if (static_cast<int>(cells.size()) != n_cols)
            throw ParseError("row " + std::to_string(i + 1) + " has " + std::to_string(cells.size()) +
                                 " entries, expected " + std::to_string(n_cols),
                             i + 1, static_cast<int>(cells.size()));
        std::vector<Scalar> row;
        for (int j = 0; j < n_cols; ++j) {
            try {
                row.push_back(parse_scalar(cells[static_cast<std::size_t>(j)], ring));
            } catch (const ParseError& pe) {
                throw ParseError(std::string(pe.what()) + " (row " + std::to_string(i + 1) + ", entry " +
                                     std::to_string(j + 1) + ")",
                                 i + 1, j + 1);
            }
        }
        parsed.push_back(std::move(row));
    }
    Matrix m(ring, n_rows, n_cols);
    for (int i = 0; i < n_rows; ++i)
        for (int j = 0; j < n_cols; ++j)
            m(i, j) = parsed[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return m;
}

std::string matrix_to_file_text(const Matrix& m) {
    std::ostringstream os;
    os << "ring=" << ring_name(m.ring()) << "\n";
    os << "n=" << m.rows() << "\n";
    os << matrix_to_text(m) << "\n";
    return os.str();
}

MatrixFile parse_matrix_file(const std::string& content) {
    // Header tokens are whitespace-separated; the body is everything after.
    std::istringstream is(content);
    std::string tok;
    bool have_ring = false, have_n = false;
    Ring ring = Ring::Rat;
    int n = -1;
    std::streampos body_start = 0;
    while (is >> tok) {
        if (tok.rfind("ring=", 0) == 0) {
            ring = ring_from_name(tok.substr(5));
            have_ring = true;
        } else if (tok.rfind("n=", 0) == 0) {
            try {
                n = std::stoi(tok.substr(2));
            } catch (...) {
                throw ParseError("malformed dimension token '" + tok + "'", 1, 1);
            }
            have_n = true;
        } else {
            break;
        }
        body_start = is.tellg();
    }
    if (!have_ring) throw ParseError("missing ring= header token", 1, 1);
    if (!have_n) throw ParseError("missing n= header token", 1, 1);
    std::string body = content.substr(static_cast<std::size_t>(std::max<std::streamoff>(0, body_start)));
    Matrix m = parse_matrix_text(body, ring);
    if (m.rows() != n || m.cols() != n)
        throw ParseError("matrix body is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                             ", header says n=" + std::to_string(n),
                         1, 1);
    return MatrixFile{ring, n, std::move(m)};
}

}  // namespace nilrev
