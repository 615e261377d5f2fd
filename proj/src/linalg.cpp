#include "ct/linalg.hpp"

#include <algorithm>

#include "ct/errors.hpp"

namespace ct {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw DomainError("ragged matrix literal");
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

void Matrix::append_rows(const Matrix& other) {
    if (rows_ == 0 && cols_ == 0) {
        *this = other;
        return;
    }
    if (other.cols_ != cols_) throw DomainError("append_rows: column count mismatch");
    data_.insert(data_.end(), other.data_.begin(), other.data_.end());
    rows_ += other.rows_;
}

std::vector<Rational> Matrix::apply(const std::vector<Rational>& v) const {
    if (v.size() != cols_) throw DomainError("matrix-vector size mismatch");
    std::vector<Rational> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (!(*this)(r, c).is_zero() && !v[c].is_zero()) out[r] += (*this)(r, c) * v[c];
        }
    }
    return out;
}

namespace {

std::vector<Rational> primitive_vector(std::vector<Rational> v) {
    BigInt num_gcd = 0;
    BigInt den_lcm = 1;
    const Rational* last = nullptr;
    for (const auto& x : v) {
        if (x.is_zero()) continue;
        num_gcd = gcd(num_gcd, x.numerator());
        den_lcm = lcm(den_lcm, x.denominator());
        last = &x;
    }
    if (last == nullptr) return v;
    Rational scale(den_lcm, num_gcd);
    if (last->sign() < 0) scale = -scale;
    for (auto& x : v) x *= scale;
    return v;
}

}  // namespace

std::vector<std::vector<Rational>> solve_nullspace(const Matrix& matrix) {
    const std::size_t rows = matrix.rows();
    const std::size_t cols = matrix.cols();

    // Clear denominators row by row; row scaling does not change the kernel.
    std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        BigInt den = 1;
        for (std::size_t c = 0; c < cols; ++c) den = lcm(den, matrix(r, c).denominator());
        for (std::size_t c = 0; c < cols; ++c) {
            const Rational& x = matrix(r, c);
            a[r][c] = x.numerator() * (den / x.denominator());
        }
    }

    std::vector<std::size_t> pivot_cols;
    BigInt prev = 1;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[rank]);
        const BigInt& pivot = a[rank][c];
        for (std::size_t i = rank + 1; i < rows; ++i) {
            const BigInt factor = a[i][c];
            for (std::size_t j = c + 1; j < cols; ++j) {
                BigInt t = pivot * a[i][j] - factor * a[rank][j];
                // Bareiss: every intermediate entry is a minor, so the division is exact.
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = std::move(t);
            }
            a[i][c] = 0;
        }
        prev = pivot;
        pivot_cols.push_back(c);
        ++rank;
    }

    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(cols);
        v[free] = Rational(1);
        for (std::size_t k = rank; k-- > 0;) {
            const std::size_t pc = pivot_cols[k];
            Rational acc;
            for (std::size_t j = pc + 1; j < cols; ++j) {
                if (a[k][j] != 0 && !v[j].is_zero()) acc += Rational(a[k][j]) * v[j];
            }
            v[pc] = -acc / Rational(a[k][pc]);
        }
        basis.push_back(primitive_vector(std::move(v)));
    }
    return basis;
}

}  // namespace ct
