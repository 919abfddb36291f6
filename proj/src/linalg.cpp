#include "linalg.hpp"

namespace cwb {

RatMat RatMat::identity(int n) {
    RatMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMat RatMat::operator*(const RatMat& o) const {
    if (cols_ != o.rows_) throw InvariantViolation("matrix product shape mismatch");
    RatMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += v * o.at(k, j);
        }
    return r;
}

RatMat RatMat::operator+(const RatMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InvariantViolation("matrix sum shape mismatch");
    RatMat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

RatMat RatMat::operator-() const {
    RatMat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
    return r;
}

RatMat RatMat::transposed() const {
    RatMat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool RatMat::is_zero() const {
    for (const Rat& v : a_)
        if (v != 0) return false;
    return true;
}

RatMat hstack(const RatMat& a, const RatMat& b) {
    if (a.rows() == 0 && a.cols() == 0) return b;
    if (b.rows() == 0 && b.cols() == 0) return a;
    if (a.rows() != b.rows()) throw InvariantViolation("hstack row mismatch");
    RatMat r(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
    }
    return r;
}

RatMat vstack(const RatMat& a, const RatMat& b) {
    if (a.rows() == 0 && a.cols() == 0) return b;
    if (b.rows() == 0 && b.cols() == 0) return a;
    if (a.cols() != b.cols()) throw InvariantViolation("vstack column mismatch");
    RatMat r(a.rows() + b.rows(), a.cols());
    for (int j = 0; j < a.cols(); ++j) {
        for (int i = 0; i < a.rows(); ++i) r.at(i, j) = a.at(i, j);
        for (int i = 0; i < b.rows(); ++i) r.at(a.rows() + i, j) = b.at(i, j);
    }
    return r;
}

namespace {

// Row reduction to echelon form; returns pivot columns.
std::vector<int> row_reduce(RatMat& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int p = -1;
        for (int i = row; i < m.rows(); ++i)
            if (m.at(i, col) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
        Rat inv = m.at(row, col);
        for (int j = col; j < m.cols(); ++j) m.at(row, j) /= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            Rat f = m.at(i, col);
            for (int j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

int rank(RatMat m) { return static_cast<int>(row_reduce(m).size()); }

int rank_bareiss(const RatMat& m) {
    using Big = boost::multiprecision::cpp_int;
    const int rows = m.rows(), cols = m.cols();
    if (rows == 0 || cols == 0) return 0;
    std::vector<std::vector<Big>> a(rows, std::vector<Big>(cols));
    for (int i = 0; i < rows; ++i) {
        Big scale = 1;
        for (int j = 0; j < cols; ++j)
            scale = boost::multiprecision::lcm(scale, boost::multiprecision::denominator(m.at(i, j)));
        for (int j = 0; j < cols; ++j)
            a[i][j] = boost::multiprecision::numerator(m.at(i, j)) *
                      (scale / boost::multiprecision::denominator(m.at(i, j)));
    }
    Big prev = 1;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int p = -1;
        for (int i = row; i < rows; ++i)
            if (a[i][col] != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != row) std::swap(a[p], a[row]);
        for (int i = row + 1; i < rows; ++i) {
            for (int j = col + 1; j < cols; ++j)
                a[i][j] = (a[i][j] * a[row][col] - a[i][col] * a[row][j]) / prev;
            a[i][col] = 0;
        }
        prev = a[row][col];
        ++row;
    }
    return row;
}

RatMat nullspace(const RatMat& m) {
    RatMat r = m;
    std::vector<int> pivots = row_reduce(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    int free_count = m.cols() - static_cast<int>(pivots.size());
    RatMat basis(m.cols(), free_count);
    int idx = 0;
    for (int c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        basis.at(c, idx) = 1;
        for (size_t pr = 0; pr < pivots.size(); ++pr) basis.at(pivots[pr], idx) = -r.at(static_cast<int>(pr), c);
        ++idx;
    }
    return basis;
}

std::optional<RatMat> solve(const RatMat& A, const RatMat& B) {
    if (A.rows() != B.rows()) throw InvariantViolation("solve shape mismatch");
    RatMat aug = hstack(A, B);
    std::vector<int> pivots = row_reduce(aug);
    for (int c : pivots)
        if (c >= A.cols()) return std::nullopt;  // inconsistent system
    RatMat X(A.cols(), B.cols());
    for (size_t pr = 0; pr < pivots.size(); ++pr)
        for (int j = 0; j < B.cols(); ++j)
            X.at(pivots[pr], j) = aug.at(static_cast<int>(pr), A.cols() + j);
    return X;
}

}  // namespace cwb
