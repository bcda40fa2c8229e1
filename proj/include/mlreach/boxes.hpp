#ifndef MLREACH_BOXES_HPP
#define MLREACH_BOXES_HPP

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "mlreach/interval.hpp"

namespace mlreach {

// Fixed-length vector of intervals (a box in state space).
class IntervalVector {
  public:
    IntervalVector() = default;
    explicit IntervalVector(std::size_t n, Interval fill = Interval())
        : elems_(n, fill) {}
    IntervalVector(std::initializer_list<Interval> init) : elems_(init) {}

    std::size_t size() const { return elems_.size(); }
    Interval& operator[](std::size_t i) { return elems_[i]; }
    const Interval& operator[](std::size_t i) const { return elems_[i]; }

    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }

    bool is_finite() const {
        for (const auto& e : elems_)
            if (!e.is_finite()) return false;
        return true;
    }

  private:
    std::vector<Interval> elems_;
};

// Dense row-major rectangular matrix of intervals.
class IntervalMatrix {
  public:
    IntervalMatrix() : rows_(0), cols_(0) {}
    IntervalMatrix(std::size_t r, std::size_t c, Interval fill = Interval())
        : rows_(r), cols_(c), elems_(r * c, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Interval& operator()(std::size_t i, std::size_t j) { return elems_[i * cols_ + j]; }
    const Interval& operator()(std::size_t i, std::size_t j) const {
        return elems_[i * cols_ + j];
    }

  private:
    std::size_t rows_, cols_;
    std::vector<Interval> elems_;
};

inline IntervalVector operator+(const IntervalVector& a, const IntervalVector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector add: length mismatch");
    IntervalVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline IntervalVector operator-(const IntervalVector& a, const IntervalVector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector sub: length mismatch");
    IntervalVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

// Natural interval matrix-vector product.
inline IntervalVector imat_vec(const IntervalMatrix& M, const IntervalVector& v) {
    if (M.cols() != v.size()) throw DimensionMismatch("imat_vec: dimension mismatch");
    IntervalVector r(M.rows());
    for (std::size_t i = 0; i < M.rows(); ++i) {
        Interval acc(0.0);
        for (std::size_t j = 0; j < M.cols(); ++j) acc = acc + M(i, j) * v[j];
        r[i] = acc;
    }
    return r;
}

// Natural interval matrix-matrix product.
inline IntervalMatrix imat_mat(const IntervalMatrix& A, const IntervalMatrix& B) {
    if (A.cols() != B.rows()) throw DimensionMismatch("imat_mat: dimension mismatch");
    IntervalMatrix r(A.rows(), B.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t k = 0; k < B.cols(); ++k) {
            Interval acc(0.0);
            for (std::size_t j = 0; j < A.cols(); ++j) acc = acc + A(i, j) * B(j, k);
            r(i, k) = acc;
        }
    return r;
}

inline IntervalVector intersect(const IntervalVector& a, const IntervalVector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("intersect: length mismatch");
    IntervalVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = intersect(a[i], b[i]);
    return r;
}

inline IntervalVector hull(const IntervalVector& a, const IntervalVector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("hull: length mismatch");
    IntervalVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = hull(a[i], b[i]);
    return r;
}

inline bool subset_of(const IntervalVector& a, const IntervalVector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("subset_of: length mismatch");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!subset_of(a[i], b[i])) return false;
    return true;
}

inline bool contains(const IntervalVector& box, const std::vector<double>& x) {
    if (box.size() != x.size()) throw DimensionMismatch("contains: length mismatch");
    for (std::size_t i = 0; i < box.size(); ++i)
        if (!box[i].contains(x[i])) return false;
    return true;
}

inline std::vector<double> midpoint(const IntervalVector& box) {
    std::vector<double> m(box.size());
    for (std::size_t i = 0; i < box.size(); ++i) m[i] = midpoint(box[i]);
    return m;
}

} // namespace mlreach

#endif
