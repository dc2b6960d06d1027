#pragma once

#include "a1deg/field.hpp"

#include <cstddef>
#include <vector>

namespace a1deg {

// Dense matrix over a fixed field.  Small and value-semantic; everything
// downstream is desk-scale.
class Mat {
  public:
    Mat(const Field& k, std::size_t rows, std::size_t cols);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    FieldElement& at(std::size_t i, std::size_t j);
    const FieldElement& at(std::size_t i, std::size_t j) const;

    bool operator==(const Mat& o) const;
    bool operator!=(const Mat& o) const { return !(*this == o); }

    bool is_symmetric() const;
    Mat transposed() const;

  private:
    Field field_;
    std::size_t rows_, cols_;
    std::vector<FieldElement> a_;
};

Mat mat_mul(const Mat& a, const Mat& b);

// Square blocks placed along the diagonal in the given order, zeros
// elsewhere.
Mat block_diagonal(const Field& k, const std::vector<Mat>& blocks);

// Exact determinant: fraction-free Bareiss over Q (after clearing row
// denominators), plain elimination over F_p.
FieldElement determinant(const Mat& m);

} // namespace a1deg
