#include "a1deg/matrix.hpp"

namespace a1deg {

Mat::Mat(const Field& k, std::size_t rows, std::size_t cols)
    : field_(k), rows_(rows), cols_(cols),
      a_(rows * cols, FieldElement::from_integer(k, 0)) {}

FieldElement& Mat::at(std::size_t i, std::size_t j) {
    if (i >= rows_ || j >= cols_)
        throw InternalError("matrix index out of range");
    return a_[i * cols_ + j];
}

const FieldElement& Mat::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_)
        throw InternalError("matrix index out of range");
    return a_[i * cols_ + j];
}

bool Mat::operator==(const Mat& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ &&
           a_ == o.a_;
}

bool Mat::is_symmetric() const {
    if (rows_ != cols_)
        return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i))
                return false;
    return true;
}

Mat Mat::transposed() const {
    Mat t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t.at(j, i) = at(i, j);
    return t;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    if (a.field() != b.field())
        throw DomainError("mixed-field matrix product");
    if (a.cols() != b.rows())
        throw DomainError("matrix dimensions do not match");
    Mat c(a.field(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const FieldElement& aik = a.at(i, k);
            if (aik.is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

Mat block_diagonal(const Field& k, const std::vector<Mat>& blocks) {
    std::size_t n = 0;
    for (const Mat& b : blocks) {
        if (b.field() != k)
            throw DomainError("block over a different field");
        if (b.rows() != b.cols())
            throw DomainError("diagonal blocks must be square");
        n += b.rows();
    }
    Mat out(k, n, n);
    std::size_t off = 0;
    for (const Mat& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j)
                out.at(off + i, off + j) = b.at(i, j);
        off += b.rows();
    }
    return out;
}

namespace {

FieldElement determinant_bareiss_q(const Mat& m) {
    const Field& k = m.field();
    std::size_t n = m.rows();
    // Clear denominators per row so the elimination is integral.
    std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
    BigRat scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        BigInt l = 1;
        for (std::size_t j = 0; j < n; ++j)
            l = lcm(l, denominator(m.at(i, j).rational_value()));
        for (std::size_t j = 0; j < n; ++j) {
            const BigRat& q = m.at(i, j).rational_value();
            a[i][j] = numerator(q) * (l / denominator(q));
        }
        scale *= l;
    }
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t s = 0; s + 1 < n; ++s) {
        if (a[s][s] == 0) {
            std::size_t piv = s;
            while (piv < n && a[piv][s] == 0)
                ++piv;
            if (piv == n)
                return FieldElement::from_integer(k, 0);
            std::swap(a[s], a[piv]);
            sign = -sign;
        }
        for (std::size_t i = s + 1; i < n; ++i) {
            for (std::size_t j = s + 1; j < n; ++j)
                a[i][j] = (a[s][s] * a[i][j] - a[i][s] * a[s][j]) / prev;
            a[i][s] = 0;
        }
        prev = a[s][s];
    }
    BigRat det = BigRat(a[n - 1][n - 1]) / scale;
    if (sign < 0)
        det = -det;
    return FieldElement::from_rational(k, det);
}

FieldElement determinant_gauss_fp(const Mat& m) {
    const Field& k = m.field();
    std::size_t n = m.rows();
    Mat a = m;
    FieldElement det = FieldElement::from_integer(k, 1);
    for (std::size_t s = 0; s < n; ++s) {
        std::size_t piv = s;
        while (piv < n && a.at(piv, s).is_zero())
            ++piv;
        if (piv == n)
            return FieldElement::from_integer(k, 0);
        if (piv != s) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a.at(s, j), a.at(piv, j));
            det = -det;
        }
        det *= a.at(s, s);
        FieldElement inv = a.at(s, s).inverse();
        for (std::size_t i = s + 1; i < n; ++i) {
            FieldElement c = a.at(i, s) * inv;
            if (c.is_zero())
                continue;
            for (std::size_t j = s; j < n; ++j)
                a.at(i, j) -= c * a.at(s, j);
        }
    }
    return det;
}

} // namespace

FieldElement determinant(const Mat& m) {
    if (m.rows() != m.cols())
        throw DomainError("determinant of a non-square matrix");
    if (m.rows() == 0)
        return FieldElement::from_integer(m.field(), 1);
    return m.field().is_rationals() ? determinant_bareiss_q(m)
                                    : determinant_gauss_fp(m);
}

} // namespace a1deg
