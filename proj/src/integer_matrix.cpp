#include "reid/integer_matrix.hpp"

#include <sstream>
#include <utility>

namespace reid {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows)
    for (long long v : row) data_.emplace_back(v);
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<BigInt>>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<BigInt>& entries) {
  IntMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::hconcat(const IntMatrix& other) const {
  IntMatrix m(rows_, cols_ + other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < other.cols_; ++c) m(r, cols_ + c) = other(r, c);
  }
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix m(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(r, k) == 0) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) m(r, c) += a(r, k) * b(k, c);
    }
  return m;
}

IntVector operator*(const IntMatrix& a, const IntVector& v) {
  IntVector out(a.rows_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t k = 0; k < a.cols_; ++k) out[r] += a(r, k) * v[k];
  return out;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] -= b.data_[i];
  return m;
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) out << ", ";
    out << '[';
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) out << ", ";
      out << (*this)(r, c);
    }
    out << ']';
  }
  out << ']';
  return out.str();
}

std::vector<BigInt> SnfResult::diagonal() const {
  std::vector<BigInt> d;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
  return d;
}

namespace {

class SnfWorker {
 public:
  explicit SnfWorker(const IntMatrix& m)
      : d_(m), u_(IntMatrix::identity(m.rows())), u_inv_(IntMatrix::identity(m.rows())),
        v_(IntMatrix::identity(m.cols())) {}

  SnfResult run() {
    const std::size_t r = d_.rows(), c = d_.cols();
    std::size_t rank = 0;
    for (std::size_t t = 0; t < std::min(r, c); ++t) {
      if (!pivot(t)) break;
      ++rank;
    }
    return {std::move(u_), std::move(v_), std::move(d_), std::move(u_inv_), rank};
  }

 private:
  // Row ops act on D and U (and inversely on U_inv); column ops on D and V.
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t k = 0; k < d_.cols(); ++k) std::swap(d_(a, k), d_(b, k));
    for (std::size_t k = 0; k < u_.cols(); ++k) std::swap(u_(a, k), u_(b, k));
    for (std::size_t k = 0; k < u_inv_.rows(); ++k) std::swap(u_inv_(k, a), u_inv_(k, b));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t k = 0; k < d_.rows(); ++k) std::swap(d_(k, a), d_(k, b));
    for (std::size_t k = 0; k < v_.rows(); ++k) std::swap(v_(k, a), v_(k, b));
  }
  // row[dst] += q * row[src]
  void add_row(std::size_t dst, std::size_t src, const BigInt& q) {
    for (std::size_t k = 0; k < d_.cols(); ++k) d_(dst, k) += q * d_(src, k);
    for (std::size_t k = 0; k < u_.cols(); ++k) u_(dst, k) += q * u_(src, k);
    for (std::size_t k = 0; k < u_inv_.rows(); ++k) u_inv_(k, src) -= q * u_inv_(k, dst);
  }
  // col[dst] += q * col[src]
  void add_col(std::size_t dst, std::size_t src, const BigInt& q) {
    for (std::size_t k = 0; k < d_.rows(); ++k) d_(k, dst) += q * d_(k, src);
    for (std::size_t k = 0; k < v_.rows(); ++k) v_(k, dst) += q * v_(k, src);
  }
  void negate_row(std::size_t t) {
    for (std::size_t k = 0; k < d_.cols(); ++k) d_(t, k) = -d_(t, k);
    for (std::size_t k = 0; k < u_.cols(); ++k) u_(t, k) = -u_(t, k);
    for (std::size_t k = 0; k < u_inv_.rows(); ++k) u_inv_(k, t) = -u_inv_(k, t);
  }

  bool pivot(std::size_t t) {
    const std::size_t r = d_.rows(), c = d_.cols();
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pi = r, pj = c;
      BigInt best;
      for (std::size_t i = t; i < r; ++i)
        for (std::size_t j = t; j < c; ++j) {
          const BigInt& x = d_(i, j);
          if (x == 0) continue;
          BigInt a = abs(x);
          if (pi == r || a < best) {
            best = a;
            pi = i;
            pj = j;
          }
        }
      if (pi == r) return false;
      swap_rows(t, pi);
      swap_cols(t, pj);

      bool dirty = false;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (d_(i, t) == 0) continue;
        BigInt q = d_(i, t) / d_(t, t);
        add_row(i, t, -q);
        if (d_(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (d_(t, j) == 0) continue;
        BigInt q = d_(t, j) / d_(t, t);
        add_col(j, t, -q);
        if (d_(t, j) != 0) dirty = true;
      }
      if (dirty) continue;

      bool divisible = true;
      for (std::size_t i = t + 1; i < r && divisible; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (d_(i, j) % d_(t, t) != 0) {
            add_row(t, i, 1);
            divisible = false;
            break;
          }
      if (!divisible) continue;

      if (d_(t, t) < 0) negate_row(t);
      return true;
    }
  }

  IntMatrix d_, u_, u_inv_, v_;
};

}  // namespace

SnfResult smith_normal_form(const IntMatrix& m) { return SnfWorker(m).run(); }

BigInt determinant(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t s = k + 1;
      while (s < n && a(s, k) == 0) ++s;
      if (s == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(s, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::optional<IntVector> solve_integer(const SnfResult& snf, const IntVector& v) {
  IntVector y = snf.U * v;
  const std::size_t cols = snf.V.rows();
  IntVector z(cols);
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (i < snf.rank) {
      const BigInt& d = snf.D(i, i);
      if (y[i] % d != 0) return std::nullopt;
      z[i] = y[i] / d;
    } else if (y[i] != 0) {
      return std::nullopt;
    }
  }
  return snf.V * z;
}

unsigned valuation(BigInt n, unsigned p) {
  unsigned v = 0;
  if (n == 0) return 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

}  // namespace reid
