#include "mackey/intmat.hpp"

#include <algorithm>
#include <sstream>

namespace mackey {

IntMatrix IntMatrix::identity(long n) {
    IntMatrix m(n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool IntMatrix::isZero() const {
    for (const auto& x : e_)
        if (x != 0) return false;
    return true;
}

bool IntMatrix::isIdentity() const {
    if (rows_ != cols_) return false;
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw MackeyError("matrix product: shape mismatch");
    IntMatrix r(rows_, o.cols_);
    for (long i = 0; i < rows_; ++i)
        for (long k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (long j = 0; j < o.cols_; ++j) {
                const Int& b = o.at(k, j);
                if (b != 0) r.at(i, j) += a * b;
            }
        }
    return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw MackeyError("matrix sum: shape mismatch");
    IntMatrix r(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw MackeyError("matrix difference: shape mismatch");
    IntMatrix r(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
}

IntMatrix IntMatrix::operator-() const {
    IntMatrix r(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = -e_[i];
    return r;
}

IntMatrix IntMatrix::scaled(const Int& k) const {
    IntMatrix r(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = k * e_[i];
    return r;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& v) const {
    if (static_cast<long>(v.size()) != cols_) throw MackeyError("matrix apply: dimension mismatch");
    std::vector<Int> r(static_cast<size_t>(rows_));
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j)
            if (at(i, j) != 0) r[static_cast<size_t>(i)] += at(i, j) * v[static_cast<size_t>(j)];
    return r;
}

std::vector<Int> IntMatrix::column(long c) const {
    std::vector<Int> v(static_cast<size_t>(rows_));
    for (long i = 0; i < rows_; ++i) v[static_cast<size_t>(i)] = at(i, c);
    return v;
}

std::vector<Int> IntMatrix::row(long r) const {
    std::vector<Int> v(static_cast<size_t>(cols_));
    for (long j = 0; j < cols_; ++j) v[static_cast<size_t>(j)] = at(r, j);
    return v;
}

void IntMatrix::setColumn(long c, const std::vector<Int>& v) {
    for (long i = 0; i < rows_; ++i) at(i, c) = v[static_cast<size_t>(i)];
}

IntMatrix IntMatrix::augmentedWith(const IntMatrix& a) const {
    if (rows_ != a.rows_) throw MackeyError("augment: row mismatch");
    IntMatrix r(rows_, cols_ + a.cols_);
    for (long i = 0; i < rows_; ++i) {
        for (long j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (long j = 0; j < a.cols_; ++j) r.at(i, cols_ + j) = a.at(i, j);
    }
    return r;
}

IntMatrix IntMatrix::selectRows(const std::vector<long>& idx) const {
    IntMatrix r(static_cast<long>(idx.size()), cols_);
    for (size_t i = 0; i < idx.size(); ++i)
        for (long j = 0; j < cols_; ++j) r.at(static_cast<long>(i), j) = at(idx[i], j);
    return r;
}

IntMatrix IntMatrix::selectColumns(const std::vector<long>& idx) const {
    IntMatrix r(rows_, static_cast<long>(idx.size()));
    for (long i = 0; i < rows_; ++i)
        for (size_t j = 0; j < idx.size(); ++j) r.at(i, static_cast<long>(j)) = at(i, idx[j]);
    return r;
}

IntMatrix IntMatrix::kronecker(const IntMatrix& o) const {
    IntMatrix r(rows_ * o.rows_, cols_ * o.cols_);
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j) {
            const Int& a = at(i, j);
            if (a == 0) continue;
            for (long k = 0; k < o.rows_; ++k)
                for (long l = 0; l < o.cols_; ++l)
                    if (o.at(k, l) != 0) r.at(i * o.rows_ + k, j * o.cols_ + l) = a * o.at(k, l);
        }
    return r;
}

std::string IntMatrix::toString() const {
    std::ostringstream os;
    os << "[";
    for (long i = 0; i < rows_; ++i) {
        os << "[";
        for (long j = 0; j < cols_; ++j) os << at(i, j) << (j + 1 < cols_ ? "," : "");
        os << "]" << (i + 1 < rows_ ? "," : "");
    }
    os << "]";
    return os.str();
}

namespace {

struct SnfWork {
    IntMatrix s, u, v, uInv, vInv;

    void swapRows(long a, long b) {
        if (a == b) return;
        for (long j = 0; j < s.cols(); ++j) std::swap(s.at(a, j), s.at(b, j));
        for (long j = 0; j < u.cols(); ++j) std::swap(u.at(a, j), u.at(b, j));
        for (long i = 0; i < uInv.rows(); ++i) std::swap(uInv.at(i, a), uInv.at(i, b));
    }
    void swapCols(long a, long b) {
        if (a == b) return;
        for (long i = 0; i < s.rows(); ++i) std::swap(s.at(i, a), s.at(i, b));
        for (long i = 0; i < v.rows(); ++i) std::swap(v.at(i, a), v.at(i, b));
        for (long j = 0; j < vInv.cols(); ++j) std::swap(vInv.at(a, j), vInv.at(b, j));
    }
    // row[a] += k * row[b]
    void addRow(long a, long b, const Int& k) {
        if (k == 0) return;
        for (long j = 0; j < s.cols(); ++j) s.at(a, j) += k * s.at(b, j);
        for (long j = 0; j < u.cols(); ++j) u.at(a, j) += k * u.at(b, j);
        for (long i = 0; i < uInv.rows(); ++i) uInv.at(i, b) -= k * uInv.at(i, a);
    }
    // col[a] += k * col[b]
    void addCol(long a, long b, const Int& k) {
        if (k == 0) return;
        for (long i = 0; i < s.rows(); ++i) s.at(i, a) += k * s.at(i, b);
        for (long i = 0; i < v.rows(); ++i) v.at(i, a) += k * v.at(i, b);
        for (long j = 0; j < vInv.cols(); ++j) vInv.at(b, j) -= k * vInv.at(a, j);
    }
    void negateRow(long a) {
        for (long j = 0; j < s.cols(); ++j) s.at(a, j) = -s.at(a, j);
        for (long j = 0; j < u.cols(); ++j) u.at(a, j) = -u.at(a, j);
        for (long i = 0; i < uInv.rows(); ++i) uInv.at(i, a) = -uInv.at(i, a);
    }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
    const long m = a.rows(), n = a.cols();
    SnfWork w;
    w.s = a;
    w.u = IntMatrix::identity(m);
    w.uInv = IntMatrix::identity(m);
    w.v = IntMatrix::identity(n);
    w.vInv = IntMatrix::identity(n);

    const long steps = std::min(m, n);
    for (long k = 0; k < steps; ++k) {
        for (;;) {
            // gcd-minimizing pivot: smallest nonzero |entry| in the trailing block
            long pr = -1, pc = -1;
            Int best;
            for (long i = k; i < m; ++i)
                for (long j = k; j < n; ++j) {
                    if (w.s.at(i, j) == 0) continue;
                    Int v = abs(w.s.at(i, j));
                    if (pr < 0 || v < best) {
                        best = v;
                        pr = i;
                        pc = j;
                    }
                }
            if (pr < 0) break;  // trailing block zero
            w.swapRows(k, pr);
            w.swapCols(k, pc);

            bool clean = true;
            for (long i = k + 1; i < m; ++i) {
                if (w.s.at(i, k) == 0) continue;
                Int q = w.s.at(i, k) / w.s.at(k, k);  // truncated division keeps remainders small
                w.addRow(i, k, -q);
                if (w.s.at(i, k) != 0) clean = false;
            }
            for (long j = k + 1; j < n; ++j) {
                if (w.s.at(k, j) == 0) continue;
                Int q = w.s.at(k, j) / w.s.at(k, k);
                w.addCol(j, k, -q);
                if (w.s.at(k, j) != 0) clean = false;
            }
            if (!clean) continue;

            // pivot must divide the rest of the block
            bool divides = true;
            for (long i = k + 1; i < m && divides; ++i)
                for (long j = k + 1; j < n; ++j)
                    if (w.s.at(i, j) % w.s.at(k, k) != 0) {
                        w.addRow(k, i, 1);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (w.s.at(k, k) < 0) w.negateRow(k);
    }

    SmithForm out;
    out.diagRank = 0;
    for (long k = 0; k < steps; ++k)
        if (w.s.at(k, k) != 0) ++out.diagRank;
    out.u = std::move(w.u);
    out.s = std::move(w.s);
    out.v = std::move(w.v);
    out.uInv = std::move(w.uInv);
    out.vInv = std::move(w.vInv);
    return out;
}

IntMatrix kernel_lattice(const IntMatrix& a) {
    SmithForm f = smith_normal_form(a);
    std::vector<long> freeCols;
    for (long j = 0; j < a.cols(); ++j)
        if (j >= std::min(a.rows(), a.cols()) || f.s.at(j, j) == 0) freeCols.push_back(j);
    return f.v.selectColumns(freeCols);
}

std::optional<std::vector<Int>> solve_linear(const IntMatrix& a, const std::vector<Int>& b) {
    return LinearSolver(a).solve(b);
}

LinearSolver::LinearSolver(IntMatrix a) : a_(std::move(a)), snf_(smith_normal_form(a_)) {}

std::optional<std::vector<Int>> LinearSolver::solve(const std::vector<Int>& b) const {
    if (static_cast<long>(b.size()) != a_.rows()) throw MackeyError("solve: dimension mismatch");
    std::vector<Int> c = snf_.u.apply(b);
    std::vector<Int> y(static_cast<size_t>(a_.cols()));
    const long steps = std::min(a_.rows(), a_.cols());
    for (long i = 0; i < a_.rows(); ++i) {
        if (i < steps && snf_.s.at(i, i) != 0) {
            if (c[static_cast<size_t>(i)] % snf_.s.at(i, i) != 0) return std::nullopt;
            y[static_cast<size_t>(i)] = c[static_cast<size_t>(i)] / snf_.s.at(i, i);
        } else if (c[static_cast<size_t>(i)] != 0) {
            return std::nullopt;
        }
    }
    return snf_.v.apply(y);
}

IntMatrix lattice_basis(const IntMatrix& gens) {
    SmithForm f = smith_normal_form(gens);
    // a*v has independent leading columns u^{-1} * s; take the nonzero ones
    IntMatrix av = gens * f.v;
    std::vector<long> keep;
    for (long j = 0; j < av.cols(); ++j) {
        bool nonzero = false;
        for (long i = 0; i < av.rows(); ++i)
            if (av.at(i, j) != 0) {
                nonzero = true;
                break;
            }
        if (nonzero) keep.push_back(j);
    }
    return av.selectColumns(keep);
}

Int abs_det(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw MackeyError("abs_det: non-square");
    SmithForm f = smith_normal_form(a);
    Int d = 1;
    for (long i = 0; i < a.rows(); ++i) d *= f.s.at(i, i);
    return abs(d);
}

bool is_unimodular(const IntMatrix& a) {
    return a.rows() == a.cols() && abs_det(a) == 1;
}

}  // namespace mackey
