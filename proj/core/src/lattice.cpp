#include "mns/lattice.hpp"

#include "mns/errors.hpp"

namespace mns {

GaussRat operator+(const GaussRat& a, const GaussRat& b) {
    return GaussRat(a.re + b.re, a.im + b.im);
}

GaussRat operator-(const GaussRat& a, const GaussRat& b) {
    return GaussRat(a.re - b.re, a.im - b.im);
}

GaussRat operator*(const GaussRat& a, const GaussRat& b) {
    return GaussRat(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}

GaussRat operator/(const GaussRat& a, const GaussRat& b) {
    if (b.is_zero()) throw SingularMatrixError("division by zero in Q(i)");
    const Rat n = b.norm_sq();
    const GaussRat num = a * b.conj();
    return GaussRat(num.re / n, num.im / n);
}

std::string gauss_string(const GaussRat& z) {
    if (z.im == 0) return rat_string(z.re);
    std::string s = rat_string(z.re);
    s += (z.im > 0 ? "+" : "-");
    Rat a = abs(z.im);
    s += rat_string(a);
    s += "i";
    return s;
}

GaussMatrix::GaussMatrix(const RatMatrix& m) : GaussMatrix(m.rows(), m.cols()) {
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) at(i, j) = GaussRat(m.at(i, j));
    }
}

GaussMatrix::GaussMatrix(const IntMatrix& m) : GaussMatrix(m.rows(), m.cols()) {
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) at(i, j) = GaussRat(Rat(m.at(i, j)));
    }
}

GaussMatrix GaussMatrix::identity(int n) {
    GaussMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = GaussRat(Rat(1));
    return m;
}

GaussVec GaussMatrix::mul(const GaussVec& v) const {
    if (static_cast<int>(v.size()) != cols_) throw DimensionError("GaussMatrix::mul size mismatch");
    GaussVec out(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i) {
        GaussRat acc;
        for (int j = 0; j < cols_; ++j) acc = acc + at(i, j) * v[static_cast<std::size_t>(j)];
        out[static_cast<std::size_t>(i)] = acc;
    }
    return out;
}

bool GaussMatrix::is_real() const {
    for (const GaussRat& z : a_) {
        if (z.im != 0) return false;
    }
    return true;
}

RatMatrix GaussMatrix::real_part() const {
    RatMatrix m(rows_, cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j).re;
    }
    return m;
}

GaussMatrix operator*(const GaussMatrix& a, const GaussMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionError("GaussMatrix product size mismatch");
    GaussMatrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            const GaussRat& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols(); ++j) {
                out.at(i, j) = out.at(i, j) + aik * b.at(k, j);
            }
        }
    }
    return out;
}

GaussMatrix inverse(const GaussMatrix& m) {
    if (m.rows() != m.cols() || m.rows() == 0) {
        throw DimensionError("inverse: square matrix required");
    }
    const int n = m.rows();
    GaussMatrix w = m;
    GaussMatrix inv = GaussMatrix::identity(n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r) {
            if (!w.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) throw SingularMatrixError("inverse: singular matrix over Q(i)");
        if (pivot != col) {
            for (int j = 0; j < n; ++j) {
                std::swap(w.at(pivot, j), w.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        }
        const GaussRat p = w.at(col, col);
        for (int j = 0; j < n; ++j) {
            w.at(col, j) = w.at(col, j) / p;
            inv.at(col, j) = inv.at(col, j) / p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || w.at(r, col).is_zero()) continue;
            const GaussRat f = w.at(r, col);
            for (int j = 0; j < n; ++j) {
                w.at(r, j) = w.at(r, j) - f * w.at(col, j);
                inv.at(r, j) = inv.at(r, j) - f * inv.at(col, j);
            }
        }
    }
    return inv;
}

LatticeContext transport(const GaussMatrix& M, const GaussMatrix& A_Gamma) {
    if (M.rows() != M.cols() || M.rows() == 0) {
        throw DimensionError("transport: square basis required");
    }
    if (A_Gamma.rows() != M.rows() || A_Gamma.cols() != M.cols()) {
        throw DimensionError("transport: dimension mismatch");
    }
    LatticeContext ctx;
    ctx.M = M;
    ctx.M_inv = inverse(M);
    const GaussMatrix conj = ctx.M_inv * A_Gamma * M;
    if (!conj.is_real()) {
        throw TransportError("transport: conjugated map has non-real entries");
    }
    const RatMatrix real = conj.real_part();
    if (!real.integral()) {
        throw TransportError("transport: the map does not preserve the lattice");
    }
    ctx.B = real.to_int();
    return ctx;
}

GaussVec to_ambient(const LatticeContext& ctx, const IntVec& coeff) {
    GaussVec v(coeff.size());
    for (std::size_t i = 0; i < coeff.size(); ++i) v[i] = GaussRat(Rat(coeff[i]));
    return ctx.M.mul(v);
}

}  // namespace mns
