#include "mfh/exactla/field_rank.hpp"

#include <stdexcept>

namespace mfh {
namespace {

template <class T>
std::size_t rank_as(const Matrix<FieldScalar>& m) {
    std::vector<std::vector<T>> rows(m.rows(), std::vector<T>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = std::get<T>(m(i, j).variant());
    return rank_in_place(rows);
}

}  // namespace

std::size_t rank_over_field(const Matrix<FieldScalar>& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    const Field f = m(0, 0).field();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j).field() != f) throw std::invalid_argument("matrix mixes scalars from different fields");
    switch (m(0, 0).variant().index()) {
        case 0: return rank_as<BigRational>(m);
        case 1: return rank_as<CyclotomicNumber>(m);
        default: return rank_as<FFElement>(m);
    }
}

}  // namespace mfh
