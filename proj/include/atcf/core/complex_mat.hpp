// Part of atcf-sim, an aerial-terrestrial cell-free massive MIMO toolkit.
// SPDX-License-Identifier: Apache-2.0

#ifndef ATCF_CORE_COMPLEX_MAT_HPP
#define ATCF_CORE_COMPLEX_MAT_HPP

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace atcf {

using cplx = std::complex<double>;

// Dense complex vector with a fixed dimension.
class CVec {
  public:
    CVec() = default;
    explicit CVec(std::size_t n) : v_(n) {}
    CVec(std::initializer_list<cplx> init) : v_(init) {}

    std::size_t size() const { return v_.size(); }
    cplx& operator[](std::size_t i) { return v_[i]; }
    const cplx& operator[](std::size_t i) const { return v_[i]; }
    const std::vector<cplx>& raw() const { return v_; }

    CVec& operator+=(const CVec& o) {
        check_same(o);
        for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
        return *this;
    }
    CVec& operator-=(const CVec& o) {
        check_same(o);
        for (std::size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
        return *this;
    }
    CVec& operator*=(cplx s) {
        for (auto& x : v_) x *= s;
        return *this;
    }

    friend CVec operator+(CVec a, const CVec& b) { return a += b; }
    friend CVec operator-(CVec a, const CVec& b) { return a -= b; }
    friend CVec operator*(CVec a, cplx s) { return a *= s; }
    friend CVec operator*(cplx s, CVec a) { return a *= s; }

  private:
    void check_same(const CVec& o) const {
        if (o.size() != size()) throw std::invalid_argument("CVec: dimension mismatch");
    }
    std::vector<cplx> v_;
};

// Conjugated inner product a^H b.
inline cplx hdot(const CVec& a, const CVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("hdot: dimension mismatch");
    cplx acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
    return acc;
}

inline double norm2(const CVec& a) { return hdot(a, a).real(); }

// Dense complex matrix, row-major, fixed dimensions.
class CMat {
  public:
    CMat() = default;
    CMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), v_(rows * cols) {}

    static CMat identity(std::size_t n) {
        CMat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    // a b^H rank-one outer product.
    static CMat outer(const CVec& a, const CVec& b) {
        CMat m(a.size(), b.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) m(i, j) = a[i] * std::conj(b[j]);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    cplx& operator()(std::size_t r, std::size_t c) { return v_[r * cols_ + c]; }
    const cplx& operator()(std::size_t r, std::size_t c) const { return v_[r * cols_ + c]; }

    CMat& operator+=(const CMat& o) {
        if (o.rows_ != rows_ || o.cols_ != cols_)
            throw std::invalid_argument("CMat: dimension mismatch");
        for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
        return *this;
    }
    CMat& operator*=(cplx s) {
        for (auto& x : v_) x *= s;
        return *this;
    }
    friend CMat operator+(CMat a, const CMat& b) { return a += b; }
    friend CMat operator*(CMat a, cplx s) { return a *= s; }
    friend CMat operator*(cplx s, CMat a) { return a *= s; }

    CVec apply(const CVec& x) const {
        if (x.size() != cols_) throw std::invalid_argument("CMat::apply: dimension mismatch");
        CVec y(rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            cplx acc = 0.0;
            for (std::size_t c = 0; c < cols_; ++c) acc += (*this)(r, c) * x[c];
            y[r] = acc;
        }
        return y;
    }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<cplx> v_;
};

inline cplx trace(const CMat& m) {
    cplx acc = 0.0;
    for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) acc += m(i, i);
    return acc;
}

// trace(A B) without forming the product.
inline cplx trace_prod(const CMat& a, const CMat& b) {
    if (a.cols() != b.rows() || a.rows() != b.cols())
        throw std::invalid_argument("trace_prod: dimension mismatch");
    cplx acc = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, i);
    return acc;
}

inline double max_hermitian_defect(const CMat& m) {
    double worst = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
    return worst;
}

}  // namespace atcf

#endif
