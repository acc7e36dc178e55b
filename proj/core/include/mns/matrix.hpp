#pragma once

#include <optional>
#include <vector>

#include "mns/numeric.hpp"

namespace mns {

/// Dense integer matrix, row-major. All arithmetic exact (GMP).
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, Int(0)) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    IntMatrix transpose() const;
    IntMatrix pow(unsigned k) const;
    IntVec mul(const IntVec& v) const;

    bool operator==(const IntMatrix& o) const = default;

    std::string str() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Int> a_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);

/// Dense rational matrix, row-major, exact.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, Rat(0)) {}
    explicit RatMatrix(const IntMatrix& m);

    static RatMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const Rat& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    RatMatrix transpose() const;
    RatVec mul(const RatVec& v) const;
    /// True when every entry is an integer.
    bool integral() const;
    IntMatrix to_int() const;  // requires integral()

    bool operator==(const RatMatrix& o) const = default;

    std::string str() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rat> a_;
};

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator*(const Rat& s, const RatMatrix& a);

/// Determinant by fraction-free (Bareiss) elimination.
Int det(const IntMatrix& m);
/// Determinant by exact Gaussian elimination.
Rat det(const RatMatrix& m);

/// Adjugate by cofactor expansion; adj(A) * A == det(A) * I.
IntMatrix adjugate(const IntMatrix& m);

/// Exact inverse; throws SingularMatrixError when det == 0.
RatMatrix inverse(const IntMatrix& m);
RatMatrix inverse(const RatMatrix& m);

/// Exact solution of M z = b by Gaussian elimination with pivoting.
RatVec solve_linear(const RatMatrix& M, const RatVec& b);

RatMatrix rat_pow(const RatMatrix& m, unsigned k);

/// Monic characteristic polynomial of a square matrix, by the
/// Faddeev-LeVerrier recurrence. Returned little-endian: c[k] is the
/// coefficient of lambda^k; c[n] == 1.
std::vector<Int> charpoly(const IntMatrix& m);

bool is_symmetric(const IntMatrix& m);
bool is_symmetric(const RatMatrix& m);
/// A commutes with its transpose.
bool is_normal(const IntMatrix& m);

/// Exact symmetric positive-definiteness test (all LDL^T pivots positive,
/// which is equivalent to Sylvester's leading-principal-minor criterion).
bool is_positive_definite(const RatMatrix& sym);

/// LDL^T factorization of a symmetric positive-definite rational matrix:
/// returns (L unit lower triangular, d diagonal), exact. Empty optional when
/// the matrix is not positive definite.
struct LdlResult {
    RatMatrix L;
    RatVec d;
};
std::optional<LdlResult> ldl_decompose(const RatMatrix& sym);

/// Smith normal form: U * A * V == S with U, V unimodular and S diagonal,
/// s_1 | s_2 | ... | s_n, every s_i > 0 (A must be nonsingular).
struct SmithForm {
    IntMatrix U;
    IntMatrix S;
    IntMatrix V;
    IntVec diagonal() const;
};
SmithForm smith_normal_form(const IntMatrix& m);

}  // namespace mns
