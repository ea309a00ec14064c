#include "mfh/exactla/int_matrix.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace mfh {

void write_sparse(std::ostream& out, const IntMatrix& m) {
    std::size_t nnz = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0) ++nnz;
    out << m.rows() << ' ' << m.cols() << ' ' << nnz << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0) out << i + 1 << ' ' << j + 1 << ' ' << m(i, j).get_str() << '\n';
}

std::string to_sparse_string(const IntMatrix& m) {
    std::ostringstream s;
    write_sparse(s, m);
    return s.str();
}

namespace {

std::string strip_comments(std::istream& in) {
    std::string line, body;
    while (std::getline(in, line)) {
        const auto pos = line.find('#');
        if (pos != std::string::npos) line.resize(pos);
        body += line + '\n';
    }
    return body;
}

BigInt read_int(std::istream& in, const char* what) {
    std::string tok;
    if (!(in >> tok)) throw std::invalid_argument(std::string("matrix text ended while reading ") + what);
    BigInt v;
    if (v.set_str(tok, 10) != 0) throw std::invalid_argument("not an integer: " + tok);
    return v;
}

std::size_t read_size(std::istream& in, const char* what) {
    BigInt v = read_int(in, what);
    if (v < 0 || !v.fits_ulong_p()) throw std::invalid_argument(std::string("bad ") + what);
    return v.get_ui();
}

}  // namespace

IntMatrix read_sparse(std::istream& in) {
    std::istringstream body(strip_comments(in));
    const std::size_t rows = read_size(body, "rows"), cols = read_size(body, "cols"), nnz = read_size(body, "nnz");
    IntMatrix m(rows, cols, BigInt(0));
    for (std::size_t k = 0; k < nnz; ++k) {
        const std::size_t i = read_size(body, "row index"), j = read_size(body, "column index");
        if (i < 1 || i > rows || j < 1 || j > cols)
            throw std::invalid_argument("entry (" + std::to_string(i) + "," + std::to_string(j) + ") outside matrix");
        m(i - 1, j - 1) = read_int(body, "value");
    }
    std::string extra;
    if (body >> extra) throw std::invalid_argument("trailing data after " + std::to_string(nnz) + " entries");
    return m;
}

IntMatrix parse_sparse(const std::string& text) {
    std::istringstream in(text);
    return read_sparse(in);
}

IntMatrix parse_matrix(const std::string& text) {
    std::istringstream raw(text);
    const std::string body = strip_comments(raw);
    std::istringstream first(body);
    std::string line;
    while (std::getline(first, line) && line.find_first_not_of(" \t\r") == std::string::npos) {
    }
    std::istringstream head(line);
    std::size_t fields = 0;
    std::string tok;
    while (head >> tok) ++fields;
    if (fields == 3) return parse_sparse(body);
    if (fields != 2) throw std::invalid_argument("matrix header must be 'rows cols' or 'rows cols nnz'");
    std::istringstream in(body);
    const std::size_t rows = read_size(in, "rows"), cols = read_size(in, "cols");
    IntMatrix m(rows, cols, BigInt(0));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = read_int(in, "entry");
    if (in >> tok) throw std::invalid_argument("trailing data in dense matrix");
    return m;
}

Matrix<FieldScalar> to_field(const IntMatrix& m, const Field& field) {
    Matrix<FieldScalar> out(m.rows(), m.cols(), field.zero());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0) out(i, j) = field.from_integer(m(i, j));
    return out;
}

}  // namespace mfh
