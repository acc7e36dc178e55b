#pragma once

#include <vector>

#include "mns/matrix.hpp"

namespace mns {

/// Element of Q(i); all arithmetic exact.
struct GaussRat {
    Rat re;
    Rat im;

    GaussRat() : re(0), im(0) {}
    GaussRat(const Rat& r) : re(r), im(0) {}
    GaussRat(const Rat& r, const Rat& i) : re(r), im(i) {}

    bool operator==(const GaussRat& o) const = default;
    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    GaussRat conj() const { return GaussRat(re, -im); }
    Rat norm_sq() const { return re * re + im * im; }
};

GaussRat operator+(const GaussRat& a, const GaussRat& b);
GaussRat operator-(const GaussRat& a, const GaussRat& b);
GaussRat operator*(const GaussRat& a, const GaussRat& b);
GaussRat operator/(const GaussRat& a, const GaussRat& b);
std::string gauss_string(const GaussRat& z);

using GaussVec = std::vector<GaussRat>;

/// Dense matrix over Q(i), row-major, exact.
class GaussMatrix {
public:
    GaussMatrix() = default;
    GaussMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols) {}
    explicit GaussMatrix(const RatMatrix& m);
    explicit GaussMatrix(const IntMatrix& m);

    static GaussMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    GaussRat& at(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
    const GaussRat& at(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }

    GaussVec mul(const GaussVec& v) const;
    bool is_real() const;
    /// Requires is_real().
    RatMatrix real_part() const;

    bool operator==(const GaussMatrix& o) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<GaussRat> a_;
};

GaussMatrix operator*(const GaussMatrix& a, const GaussMatrix& b);

/// Exact inverse over Q(i); throws SingularMatrixError when singular.
GaussMatrix inverse(const GaussMatrix& m);

/// A number system on the lattice Gamma = M Z^n, reduced to coefficient
/// coordinates. B acts on coefficient vectors; every Z^n operation (digit
/// sets, pseudodigits, representations, criteria) applies to B, and the
/// expansion maps back through M. The coefficient-space l2 norm equals the
/// l2(Gamma) norm of the expansion by construction.
struct LatticeContext {
    GaussMatrix M;
    GaussMatrix M_inv;
    IntMatrix B;
};

/// B = M^-1 * A_Gamma * M, from requiring A(Mz) = M(Bz) on coefficients.
/// Throws TransportError when the conjugate is not a real integer matrix
/// (i.e. A_Gamma does not map Gamma into itself).
LatticeContext transport(const GaussMatrix& M, const GaussMatrix& A_Gamma);

/// Ambient coordinates of a coefficient vector: M * coeff.
GaussVec to_ambient(const LatticeContext& ctx, const IntVec& coeff);

}  // namespace mns
