#include "a4cx/matrix.hpp"

#include <bit>
#include <sstream>

namespace a4cx {

using kern::Word;

MatrixF::MatrixF(Field f, int rows, int cols)
    : field_(f),
      rows_(rows),
      cols_(cols),
      wpr_((static_cast<std::size_t>(cols) + 63) / 64) {
    if (rows < 0 || cols < 0) throw DomainError("negative matrix size");
    a_.assign(wpr_ * rows, 0);
    if (f == Field::F4) b_.assign(wpr_ * rows, 0);
}

MatrixF MatrixF::identity(Field f, int n) {
    MatrixF m(f, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, Scalar::one(f));
    return m;
}

Scalar MatrixF::get(int i, int j) const {
    const std::size_t w = static_cast<std::size_t>(j) / 64;
    const Word bit = Word{1} << (j % 64);
    std::uint8_t v = (row_a(i)[w] & bit) ? 1 : 0;
    if (field_ == Field::F4 && (row_b(i)[w] & bit)) v |= 2;
    return Scalar(field_, v);
}

void MatrixF::set(int i, int j, Scalar v) {
    if (v.field() != field_) throw DomainError("field mismatch in set");
    const std::size_t w = static_cast<std::size_t>(j) / 64;
    const Word bit = Word{1} << (j % 64);
    if (v.a_bit())
        row_a(i)[w] |= bit;
    else
        row_a(i)[w] &= ~bit;
    if (field_ == Field::F4) {
        if (v.b_bit())
            row_b(i)[w] |= bit;
        else
            row_b(i)[w] &= ~bit;
    }
}

bool MatrixF::is_zero() const {
    for (Word w : a_)
        if (w) return false;
    for (Word w : b_)
        if (w) return false;
    return true;
}

bool MatrixF::row_is_zero(int i) const {
    for (std::size_t w = 0; w < wpr_; ++w) {
        if (row_a(i)[w]) return false;
        if (field_ == Field::F4 && row_b(i)[w]) return false;
    }
    return true;
}

bool MatrixF::operator==(const MatrixF& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ &&
           a_ == o.a_ && b_ == o.b_;
}

MatrixF MatrixF::operator+(const MatrixF& o) const {
    if (field_ != o.field_ || rows_ != o.rows_ || cols_ != o.cols_)
        throw DomainError("matrix shape mismatch in add");
    MatrixF r = *this;
    const auto& k = kern::active();
    if (!r.a_.empty()) k.row_xor(r.a_.data(), o.a_.data(), r.a_.size());
    if (!r.b_.empty()) k.row_xor(r.b_.data(), o.b_.data(), r.b_.size());
    return r;
}

MatrixF MatrixF::operator*(const MatrixF& o) const {
    if (field_ != o.field_) throw DomainError("field mismatch in mul");
    if (cols_ != o.rows_) throw DomainError("matrix shape mismatch in mul");
    MatrixF r(field_, rows_, o.cols_);
    const auto& k = kern::active();
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            const Scalar c = get(i, j);
            if (c.is_zero()) continue;
            if (field_ == Field::F2)
                k.row_xor(r.row_a(i), o.row_a(j), r.wpr_);
            else
                k.gf4_axpy(r.row_a(i), r.row_b(i), o.row_a(j), o.row_b(j),
                           c.a_bit(), c.b_bit(), r.wpr_);
        }
    }
    return r;
}

MatrixF MatrixF::transpose() const {
    MatrixF r(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            const Scalar v = get(i, j);
            if (!v.is_zero()) r.set(j, i, v);
        }
    return r;
}

MatrixF MatrixF::row(int i) const {
    MatrixF r(field_, 1, cols_);
    r.copy_row_from(0, *this, i);
    return r;
}

void MatrixF::copy_row_from(int i, const MatrixF& src, int src_row) {
    if (src.cols_ != cols_ || src.field_ != field_)
        throw DomainError("row copy shape mismatch");
    for (std::size_t w = 0; w < wpr_; ++w) row_a(i)[w] = src.row_a(src_row)[w];
    if (field_ == Field::F4)
        for (std::size_t w = 0; w < wpr_; ++w)
            row_b(i)[w] = src.row_b(src_row)[w];
}

void MatrixF::swap_rows(int i, int j) {
    if (i == j) return;
    for (std::size_t w = 0; w < wpr_; ++w)
        std::swap(row_a(i)[w], row_a(j)[w]);
    if (field_ == Field::F4)
        for (std::size_t w = 0; w < wpr_; ++w)
            std::swap(row_b(i)[w], row_b(j)[w]);
}

void MatrixF::axpy_row(int i, int j, Scalar c) {
    if (c.is_zero()) return;
    const auto& k = kern::active();
    if (field_ == Field::F2)
        k.row_xor(row_a(i), row_a(j), wpr_);
    else
        k.gf4_axpy(row_a(i), row_b(i), row_a(j), row_b(j), c.a_bit(),
                   c.b_bit(), wpr_);
}

void MatrixF::scale_row(int i, Scalar c) {
    if (field_ == Field::F2) {
        if (c.is_zero())
            for (std::size_t w = 0; w < wpr_; ++w) row_a(i)[w] = 0;
        return;
    }
    // (a+bw)(ca+cb w): a' = a ca + b cb, b' = a cb + b(ca+cb)
    const Word ma = c.a_bit() ? ~Word{0} : Word{0};
    const Word mb = c.b_bit() ? ~Word{0} : Word{0};
    for (std::size_t w = 0; w < wpr_; ++w) {
        const Word a = row_a(i)[w], b = row_b(i)[w];
        row_a(i)[w] = (a & ma) ^ (b & mb);
        row_b(i)[w] = (a & mb) ^ (b & (ma ^ mb));
    }
}

MatrixF MatrixF::vstack(const MatrixF& below) const {
    if (below.field_ != field_ || below.cols_ != cols_)
        throw DomainError("vstack shape mismatch");
    MatrixF r(field_, rows_ + below.rows_, cols_);
    for (int i = 0; i < rows_; ++i) r.copy_row_from(i, *this, i);
    for (int i = 0; i < below.rows_; ++i)
        r.copy_row_from(rows_ + i, below, i);
    return r;
}

MatrixF MatrixF::rows_slice(int lo, int n) const {
    MatrixF r(field_, n, cols_);
    for (int i = 0; i < n; ++i) r.copy_row_from(i, *this, lo + i);
    return r;
}

std::vector<int> MatrixF::rref_in_place() {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
        int p = -1;
        for (int i = r; i < rows_; ++i)
            if (!get(i, c).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        swap_rows(r, p);
        const Scalar v = get(r, c);
        if (!v.is_one()) scale_row(r, v.inverse());
        for (int i = 0; i < rows_; ++i) {
            if (i == r) continue;
            const Scalar e = get(i, c);
            if (!e.is_zero()) axpy_row(i, r, e);  // char 2: add = subtract
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::pair<MatrixF, std::vector<int>> MatrixF::rref() const {
    MatrixF m = *this;
    auto p = m.rref_in_place();
    return {std::move(m), std::move(p)};
}

int MatrixF::rank() const {
    MatrixF m = *this;
    return static_cast<int>(m.rref_in_place().size());
}

MatrixF MatrixF::kernel() const {
    auto [R, pivots] = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (int p : pivots) is_pivot[p] = true;
    const int k = cols_ - static_cast<int>(pivots.size());
    MatrixF basis(field_, k, cols_);
    int out = 0;
    for (int f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        basis.set(out, f, Scalar::one(field_));
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            const Scalar v = R.get(static_cast<int>(r), f);
            if (!v.is_zero()) basis.set(out, pivots[r], v);  // char 2
        }
        ++out;
    }
    return basis;
}

std::optional<MatrixF> MatrixF::solve(const MatrixF& b) const {
    if (b.rows() != 1 || b.cols() != rows_)
        throw DomainError("solve: rhs must be 1 x rows");
    MatrixF aug(field_, rows_, cols_ + 1);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            const Scalar v = get(i, j);
            if (!v.is_zero()) aug.set(i, j, v);
        }
        const Scalar v = b.get(0, i);
        if (!v.is_zero()) aug.set(i, cols_, v);
    }
    const auto pivots = aug.rref_in_place();
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
    MatrixF x(field_, 1, cols_);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        const Scalar v = aug.get(static_cast<int>(r), cols_);
        if (!v.is_zero()) x.set(0, pivots[r], v);
    }
    return x;
}

MatrixF MatrixF::apply(const MatrixF& v) const {
    if (v.rows() != 1 || v.cols() != cols_)
        throw DomainError("apply: vector must be 1 x cols");
    MatrixF y(field_, 1, rows_);
    for (int i = 0; i < rows_; ++i) {
        bool ra = false, rb = false;
        for (std::size_t w = 0; w < wpr_; ++w) {
            const Word aa = row_a(i)[w] & v.row_a(0)[w];
            ra ^= std::popcount(aa) & 1;
            if (field_ == Field::F4) {
                const Word ab = row_a(i)[w] & v.row_b(0)[w];
                const Word ba = row_b(i)[w] & v.row_a(0)[w];
                const Word bb = row_b(i)[w] & v.row_b(0)[w];
                ra ^= std::popcount(bb) & 1;
                rb ^= (std::popcount(ab) ^ std::popcount(ba) ^
                       std::popcount(bb)) &
                      1;
            }
        }
        std::uint8_t bits = (ra ? 1 : 0) | (rb ? 2 : 0);
        if (bits) y.set(0, i, Scalar(field_, bits));
    }
    return y;
}

std::string MatrixF::str() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ");
        for (int j = 0; j < cols_; ++j)
            os << (j ? " " : "[") << get(i, j).str();
        os << "]" << (i + 1 == rows_ ? "]" : "\n");
    }
    if (rows_ == 0) os << "[]";
    return os.str();
}

}  // namespace a4cx
