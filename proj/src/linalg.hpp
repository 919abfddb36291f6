#ifndef CWB_LINALG_HPP
#define CWB_LINALG_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <vector>

#include "errors.hpp"

namespace cwb {

using Rat = boost::multiprecision::cpp_rational;

// Dense matrix over the exact rationals.  Small sizes only; plain Gaussian
// elimination throughout.
class RatMat {
  public:
    RatMat() : rows_(0), cols_(0) {}
    RatMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {}

    static RatMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Rat& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const RatMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    RatMat operator*(const RatMat& o) const;
    RatMat operator+(const RatMat& o) const;
    RatMat operator-() const;
    RatMat transposed() const;

    bool is_zero() const;

  private:
    int rows_, cols_;
    std::vector<Rat> a_;
};

RatMat hstack(const RatMat& a, const RatMat& b);
RatMat vstack(const RatMat& a, const RatMat& b);

int rank(RatMat m);

// Exact rank via row scaling to integers and fraction-free (Bareiss)
// elimination; much faster than rational elimination on larger systems.
int rank_bareiss(const RatMat& m);

// Columns form a basis of the kernel of m.
RatMat nullspace(const RatMat& m);

// Solves A X = B; nullopt when inconsistent.  When A has full column rank the
// solution is unique.
std::optional<RatMat> solve(const RatMat& A, const RatMat& B);

}  // namespace cwb

#endif
