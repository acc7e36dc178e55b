#include "mns/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "mns/errors.hpp"

namespace mns {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = int(rows.size());
    cols_ = rows_ ? int(rows.begin()->size()) : 0;
    a_.reserve(size_t(rows_) * cols_);
    for (const auto& r : rows) {
        if (int(r.size()) != cols_) throw DimensionError("ragged initializer");
        for (long v : r) a_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::pow(unsigned k) const {
    if (rows_ != cols_) throw DimensionError("pow: square matrix required");
    IntMatrix result = identity(rows_);
    IntMatrix base = *this;
    while (k) {
        if (k & 1u) result = result * base;
        base = base * base;
        k >>= 1u;
    }
    return result;
}

IntVec IntMatrix::mul(const IntVec& v) const {
    if (int(v.size()) != cols_) throw DimensionError("mul: size mismatch");
    IntVec r(rows_, Int(0));
    for (int i = 0; i < rows_; ++i) {
        Int s = 0;
        for (int j = 0; j < cols_; ++j) s += at(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

std::string IntMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        if (i) os << "; ";
        for (int j = 0; j < cols_; ++j) {
            if (j) os << " ";
            os << at(i, j).get_str();
        }
    }
    os << "]";
    return os.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionError("matmul: size mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const Int& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("add: size mismatch");
    IntMatrix c(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) + b.at(i, j);
    return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("sub: size mismatch");
    IntMatrix c(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) - b.at(i, j);
    return c;
}

RatMatrix::RatMatrix(const IntMatrix& m) : rows_(m.rows()), cols_(m.cols()) {
    a_.reserve(size_t(rows_) * cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) a_.emplace_back(m.at(i, j));
}

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

RatVec RatMatrix::mul(const RatVec& v) const {
    if (int(v.size()) != cols_) throw DimensionError("mul: size mismatch");
    RatVec r(rows_, Rat(0));
    for (int i = 0; i < rows_; ++i) {
        Rat s = 0;
        for (int j = 0; j < cols_; ++j) s += at(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

bool RatMatrix::integral() const {
    for (const auto& e : a_)
        if (e.get_den() != 1) return false;
    return true;
}

IntMatrix RatMatrix::to_int() const {
    if (!integral()) throw DimensionError("to_int: non-integer entries");
    IntMatrix m(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j).get_num();
    return m;
}

std::string RatMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        if (i) os << "; ";
        for (int j = 0; j < cols_; ++j) {
            if (j) os << " ";
            os << rat_string(at(i, j));
        }
    }
    os << "]";
    return os.str();
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionError("matmul: size mismatch");
    RatMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const Rat& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("add: size mismatch");
    RatMatrix c(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) + b.at(i, j);
    return c;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("sub: size mismatch");
    RatMatrix c(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) - b.at(i, j);
    return c;
}

RatMatrix operator*(const Rat& s, const RatMatrix& a) {
    RatMatrix c(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c.at(i, j) = s * a.at(i, j);
    return c;
}

Int det(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("det: square matrix required");
    int n = m.rows();
    if (n == 0) return 1;
    IntMatrix w = m;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (w.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (w.at(i, k) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Int t = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
                mpz_divexact(w.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            w.at(i, k) = 0;
        }
        prev = w.at(k, k);
    }
    return sign > 0 ? w.at(n - 1, n - 1) : Int(-w.at(n - 1, n - 1));
}

Rat det(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("det: square matrix required");
    int n = m.rows();
    if (n == 0) return 1;
    RatMatrix w = m;
    Rat d = 1;
    for (int k = 0; k < n; ++k) {
        int p = -1;
        for (int i = k; i < n; ++i)
            if (w.at(i, k) != 0) {
                p = i;
                break;
            }
        if (p < 0) return 0;
        if (p != k) {
            for (int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
            d = -d;
        }
        d *= w.at(k, k);
        Rat inv = 1 / w.at(k, k);
        for (int i = k + 1; i < n; ++i) {
            if (w.at(i, k) == 0) continue;
            Rat f = w.at(i, k) * inv;
            for (int j = k; j < n; ++j) w.at(i, j) -= f * w.at(k, j);
        }
    }
    return d;
}

namespace {

Int minor_det(const IntMatrix& m, int skip_row, int skip_col) {
    int n = m.rows();
    IntMatrix s(n - 1, n - 1);
    int si = 0;
    for (int i = 0; i < n; ++i) {
        if (i == skip_row) continue;
        int sj = 0;
        for (int j = 0; j < n; ++j) {
            if (j == skip_col) continue;
            s.at(si, sj) = m.at(i, j);
            ++sj;
        }
        ++si;
    }
    return det(s);
}

}  // namespace

IntMatrix adjugate(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("adjugate: square matrix required");
    int n = m.rows();
    if (n == 0) return m;
    if (n == 1) {
        IntMatrix a(1, 1);
        a.at(0, 0) = 1;
        return a;
    }
    IntMatrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Int c = minor_det(m, j, i);
            a.at(i, j) = ((i + j) % 2 == 0) ? c : Int(-c);
        }
    return a;
}

RatMatrix inverse(const IntMatrix& m) { return inverse(RatMatrix(m)); }

RatMatrix inverse(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("inverse: square matrix required");
    int n = m.rows();
    RatMatrix w = m;
    RatMatrix inv = RatMatrix::identity(n);
    for (int k = 0; k < n; ++k) {
        int p = -1;
        for (int i = k; i < n; ++i)
            if (w.at(i, k) != 0) {
                p = i;
                break;
            }
        if (p < 0) throw SingularMatrixError("inverse: singular matrix");
        if (p != k)
            for (int j = 0; j < n; ++j) {
                std::swap(w.at(k, j), w.at(p, j));
                std::swap(inv.at(k, j), inv.at(p, j));
            }
        Rat piv = 1 / w.at(k, k);
        for (int j = 0; j < n; ++j) {
            w.at(k, j) *= piv;
            inv.at(k, j) *= piv;
        }
        for (int i = 0; i < n; ++i) {
            if (i == k || w.at(i, k) == 0) continue;
            Rat f = w.at(i, k);
            for (int j = 0; j < n; ++j) {
                w.at(i, j) -= f * w.at(k, j);
                inv.at(i, j) -= f * inv.at(k, j);
            }
        }
    }
    return inv;
}

RatVec solve_linear(const RatMatrix& M, const RatVec& b) {
    if (M.rows() != M.cols()) throw DimensionError("solve_linear: square matrix required");
    int n = M.rows();
    if (int(b.size()) != n) throw DimensionError("solve_linear: size mismatch");
    RatMatrix w = M;
    RatVec rhs = b;
    for (int k = 0; k < n; ++k) {
        int p = -1;
        for (int i = k; i < n; ++i)
            if (w.at(i, k) != 0) {
                p = i;
                break;
            }
        if (p < 0) throw SingularMatrixError("solve_linear: singular matrix");
        if (p != k) {
            for (int j = k; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
            std::swap(rhs[size_t(k)], rhs[size_t(p)]);
        }
        Rat piv = 1 / w.at(k, k);
        for (int i = k + 1; i < n; ++i) {
            if (w.at(i, k) == 0) continue;
            Rat f = w.at(i, k) * piv;
            for (int j = k; j < n; ++j) w.at(i, j) -= f * w.at(k, j);
            rhs[size_t(i)] -= f * rhs[size_t(k)];
        }
    }
    RatVec z(size_t(n), Rat(0));
    for (int i = n - 1; i >= 0; --i) {
        Rat s = rhs[size_t(i)];
        for (int j = i + 1; j < n; ++j) s -= w.at(i, j) * z[size_t(j)];
        z[size_t(i)] = s / w.at(i, i);
    }
    return z;
}

RatMatrix rat_pow(const RatMatrix& m, unsigned k) {
    if (m.rows() != m.cols()) throw DimensionError("rat_pow: square matrix required");
    RatMatrix r = RatMatrix::identity(m.rows());
    RatMatrix base = m;
    while (k > 0) {
        if (k & 1U) r = r * base;
        base = base * base;
        k >>= 1U;
    }
    return r;
}

std::vector<Int> charpoly(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("charpoly: square matrix required");
    int n = m.rows();
    std::vector<Int> c(n + 1, Int(0));
    c[n] = 1;
    // Faddeev-LeVerrier: M_1 = A, c_{n-k} = -tr(A M_k)/k with
    // M_{k+1} = A M_k + c_{n-k} I.  Every division is exact over Z.
    IntMatrix mk = m;
    for (int k = 1; k <= n; ++k) {
        Int tr = 0;
        for (int i = 0; i < n; ++i) tr += mk.at(i, i);
        Int ck;
        mpz_divexact(ck.get_mpz_t(), tr.get_mpz_t(), Int(k).get_mpz_t());
        c[n - k] = -ck;
        if (k < n) {
            for (int i = 0; i < n; ++i) mk.at(i, i) += c[n - k];
            mk = m * mk;
        }
    }
    return c;
}

bool is_symmetric(const IntMatrix& m) {
    if (m.rows() != m.cols()) return false;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = i + 1; j < m.cols(); ++j)
            if (m.at(i, j) != m.at(j, i)) return false;
    return true;
}

bool is_symmetric(const RatMatrix& m) {
    if (m.rows() != m.cols()) return false;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = i + 1; j < m.cols(); ++j)
            if (m.at(i, j) != m.at(j, i)) return false;
    return true;
}

bool is_normal(const IntMatrix& m) {
    if (m.rows() != m.cols()) return false;
    IntMatrix t = m.transpose();
    return t * m == m * t;
}

std::optional<LdlResult> ldl_decompose(const RatMatrix& sym) {
    if (!is_symmetric(sym)) throw DimensionError("ldl: symmetric matrix required");
    int n = sym.rows();
    RatMatrix L = RatMatrix::identity(n);
    RatVec d(n, Rat(0));
    RatMatrix w = sym;
    for (int k = 0; k < n; ++k) {
        d[k] = w.at(k, k);
        if (sgn(d[k]) <= 0) return std::nullopt;
        for (int i = k + 1; i < n; ++i) {
            Rat lik = w.at(i, k) / d[k];
            L.at(i, k) = lik;
            for (int j = k + 1; j <= i; ++j) w.at(i, j) -= lik * w.at(k, j);
            // keep symmetry for later reads
            for (int j = k + 1; j <= i; ++j) w.at(j, i) = w.at(i, j);
        }
    }
    return LdlResult{std::move(L), std::move(d)};
}

bool is_positive_definite(const RatMatrix& sym) { return ldl_decompose(sym).has_value(); }

IntVec SmithForm::diagonal() const {
    IntVec d(size_t(S.rows()));
    for (int i = 0; i < S.rows(); ++i) d[size_t(i)] = S.at(i, i);
    return d;
}

namespace {

void swap_rows(IntMatrix& m, int a, int b) {
    for (int j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntMatrix& m, int a, int b) {
    for (int i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

// row[a] += f * row[b]
void add_row(IntMatrix& m, int a, int b, const Int& f) {
    for (int j = 0; j < m.cols(); ++j) m.at(a, j) += f * m.at(b, j);
}

// col[a] += f * col[b]
void add_col(IntMatrix& m, int a, int b, const Int& f) {
    for (int i = 0; i < m.rows(); ++i) m.at(i, a) += f * m.at(i, b);
}

void negate_row(IntMatrix& m, int a) {
    for (int j = 0; j < m.cols(); ++j) m.at(a, j) = -m.at(a, j);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("smith_normal_form: square matrix required");
    int n = m.rows();
    SmithForm f{IntMatrix::identity(n), m, IntMatrix::identity(n)};
    IntMatrix& S = f.S;
    IntMatrix& U = f.U;
    IntMatrix& V = f.V;

    for (int t = 0; t < n; ++t) {
        // locate a nonzero pivot of minimal absolute value in the trailing block
        auto find_pivot = [&]() -> std::pair<int, int> {
            std::pair<int, int> best{-1, -1};
            Int best_abs;
            for (int i = t; i < n; ++i)
                for (int j = t; j < n; ++j) {
                    if (S.at(i, j) == 0) continue;
                    Int a = abs(S.at(i, j));
                    if (best.first < 0 || a < best_abs) {
                        best = {i, j};
                        best_abs = a;
                    }
                }
            return best;
        };

        while (true) {
            auto [pi, pj] = find_pivot();
            if (pi < 0) throw SingularMatrixError("smith_normal_form: singular matrix");
            if (pi != t) {
                swap_rows(S, t, pi);
                swap_rows(U, t, pi);
            }
            if (pj != t) {
                swap_cols(S, t, pj);
                swap_cols(V, t, pj);
            }
            bool clean = true;
            for (int i = t + 1; i < n; ++i) {
                if (S.at(i, t) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), S.at(i, t).get_mpz_t(), S.at(t, t).get_mpz_t());
                if (q != 0) {
                    add_row(S, i, t, -q);
                    add_row(U, i, t, -q);
                }
                if (S.at(i, t) != 0) clean = false;
            }
            for (int j = t + 1; j < n; ++j) {
                if (S.at(t, j) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), S.at(t, j).get_mpz_t(), S.at(t, t).get_mpz_t());
                if (q != 0) {
                    add_col(S, j, t, -q);
                    add_col(V, j, t, -q);
                }
                if (S.at(t, j) != 0) clean = false;
            }
            if (!clean) continue;
            // divisibility chain: pivot must divide every trailing entry
            bool divides = true;
            for (int i = t + 1; i < n && divides; ++i)
                for (int j = t + 1; j < n && divides; ++j) {
                    if (S.at(i, j) % S.at(t, t) != 0) {
                        add_row(S, t, i, Int(1));
                        add_row(U, t, i, Int(1));
                        divides = false;
                    }
                }
            if (divides) break;
        }
        if (S.at(t, t) < 0) {
            negate_row(S, t);
            negate_row(U, t);
        }
    }
    return f;
}

}  // namespace mns
