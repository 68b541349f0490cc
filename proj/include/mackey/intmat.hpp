#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mackey {

using Int = mpz_class;

// Thrown on violated preconditions (ill-defined homs, mismatched objects, ...).
struct MackeyError : std::runtime_error {
    explicit MackeyError(const std::string& what) : std::runtime_error(what) {}
};

// Dense arbitrary-precision integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(long rows, long cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows * cols)) {}

    static IntMatrix identity(long n);
    static IntMatrix zero(long rows, long cols) { return IntMatrix(rows, cols); }

    long rows() const { return rows_; }
    long cols() const { return cols_; }

    Int& at(long r, long c) { return e_[static_cast<size_t>(r * cols_ + c)]; }
    const Int& at(long r, long c) const { return e_[static_cast<size_t>(r * cols_ + c)]; }

    bool isZero() const;
    bool isIdentity() const;
    bool operator==(const IntMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    IntMatrix operator-() const;
    IntMatrix scaled(const Int& k) const;

    std::vector<Int> apply(const std::vector<Int>& v) const;  // matrix * column vector
    std::vector<Int> column(long c) const;
    std::vector<Int> row(long r) const;
    void setColumn(long c, const std::vector<Int>& v);

    // Columns of `a` placed side by side after this matrix's columns.
    IntMatrix augmentedWith(const IntMatrix& a) const;
    IntMatrix selectRows(const std::vector<long>& idx) const;
    IntMatrix selectColumns(const std::vector<long>& idx) const;

    // Kronecker product with index convention (r1*o.rows+r2, c1*o.cols+c2).
    IntMatrix kronecker(const IntMatrix& o) const;

    std::string toString() const;

private:
    long rows_ = 0, cols_ = 0;
    std::vector<Int> e_;
};

// u * a * v = s with u, v unimodular, s diagonal with a divisibility chain
// d1 | d2 | ..., entries nonnegative, trailing zeros last.
struct SmithForm {
    IntMatrix u, s, v;
    IntMatrix uInv, vInv;
    long diagRank = 0;  // number of nonzero diagonal entries
};

SmithForm smith_normal_form(const IntMatrix& a);

// Basis of the integer kernel lattice {x : a*x = 0}, as matrix columns.
IntMatrix kernel_lattice(const IntMatrix& a);

// One integer solution of a*x = b, if any.
std::optional<std::vector<Int>> solve_linear(const IntMatrix& a, const std::vector<Int>& b);

// Reusable solver for repeated right-hand sides against a fixed matrix.
class LinearSolver {
public:
    explicit LinearSolver(IntMatrix a);
    std::optional<std::vector<Int>> solve(const std::vector<Int>& b) const;
    const IntMatrix& matrix() const { return a_; }

private:
    IntMatrix a_;
    SmithForm snf_;
};

// Column-style Hermite basis of the lattice spanned by the columns of `gens`:
// independent columns spanning the same lattice.
IntMatrix lattice_basis(const IntMatrix& gens);

// |det| of a square matrix (0 for non-square input is an error).
Int abs_det(const IntMatrix& a);

bool is_unimodular(const IntMatrix& a);

}  // namespace mackey
