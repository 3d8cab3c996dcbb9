#include "cycmat.hpp"

#include <sstream>

namespace reflinv {

unsigned long long binom(unsigned n, unsigned m) {
  if (m > n) return 0;
  unsigned long long r = 1;
  for (unsigned i = 0; i < m; ++i) r = r * (n - i) / (i + 1);
  return r;
}

std::vector<std::vector<unsigned>> subsets_of_size(unsigned n, unsigned m) {
  std::vector<std::vector<unsigned>> out;
  if (m > n) return out;
  std::vector<unsigned> cur(m);
  for (unsigned i = 0; i < m; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    // next lexicographic m-subset of {0..n-1}
    int i = int(m) - 1;
    while (i >= 0 && cur[size_t(i)] == n - m + unsigned(i)) --i;
    if (i < 0) break;
    ++cur[size_t(i)];
    for (unsigned j = unsigned(i) + 1; j < m; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

CycMat CycMat::identity(unsigned n) {
  CycMat m(n, n);
  for (unsigned i = 0; i < n; ++i) m.at(i, i) = CycNum::one();
  return m;
}

CycMat CycMat::operator*(const CycMat& o) const {
  if (cols_ != o.rows_) throw Error(Errc::Internal, "matrix product shape mismatch");
  CycMat r(rows_, o.cols_);
  for (unsigned i = 0; i < rows_; ++i)
    for (unsigned k = 0; k < cols_; ++k) {
      const CycNum& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (unsigned j = 0; j < o.cols_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        r.at(i, j) += aik * o.at(k, j);
      }
    }
  return r;
}

CycMat CycMat::operator+(const CycMat& o) const {
  CycMat r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

CycMat CycMat::operator-(const CycMat& o) const {
  CycMat r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
  return r;
}

bool CycMat::operator==(const CycMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (size_t i = 0; i < a_.size(); ++i)
    if (a_[i] != o.a_[i]) return false;
  return true;
}

CycMat CycMat::transpose() const {
  CycMat r(cols_, rows_);
  for (unsigned i = 0; i < rows_; ++i)
    for (unsigned j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

CycNum CycMat::trace() const {
  CycNum t;
  for (unsigned i = 0; i < rows_ && i < cols_; ++i) t += at(i, i);
  return t;
}

unsigned CycMat::rank() const {
  CycMat m = *this;
  unsigned rank = 0;
  unsigned row = 0;
  for (unsigned col = 0; col < cols_ && row < rows_; ++col) {
    unsigned piv = rows_;
    for (unsigned i = row; i < rows_; ++i)
      if (!m.at(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv == rows_) continue;
    if (piv != row)
      for (unsigned j = 0; j < cols_; ++j) std::swap(m.at(piv, j), m.at(row, j));
    CycNum inv = m.at(row, col).inv();
    for (unsigned i = row + 1; i < rows_; ++i) {
      if (m.at(i, col).is_zero()) continue;
      CycNum f = m.at(i, col) * inv;
      for (unsigned j = col; j < cols_; ++j) m.at(i, j) -= f * m.at(row, j);
    }
    ++row;
    ++rank;
  }
  return rank;
}

CycNum CycMat::det() const {
  if (rows_ != cols_) throw Error(Errc::Internal, "determinant of non-square matrix");
  CycMat m = *this;
  CycNum d = CycNum::one();
  for (unsigned col = 0; col < cols_; ++col) {
    unsigned piv = rows_;
    for (unsigned i = col; i < rows_; ++i)
      if (!m.at(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv == rows_) return CycNum::zero();
    if (piv != col) {
      for (unsigned j = 0; j < cols_; ++j) std::swap(m.at(piv, j), m.at(col, j));
      d = -d;
    }
    d *= m.at(col, col);
    CycNum inv = m.at(col, col).inv();
    for (unsigned i = col + 1; i < rows_; ++i) {
      if (m.at(i, col).is_zero()) continue;
      CycNum f = m.at(i, col) * inv;
      for (unsigned j = col; j < cols_; ++j) m.at(i, j) -= f * m.at(col, j);
    }
  }
  return d;
}

std::optional<CycMat> CycMat::inverse() const {
  if (rows_ != cols_) throw Error(Errc::Internal, "inverse of non-square matrix");
  CycMat m = *this;
  CycMat inv = identity(rows_);
  for (unsigned col = 0; col < cols_; ++col) {
    unsigned piv = rows_;
    for (unsigned i = col; i < rows_; ++i)
      if (!m.at(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv == rows_) return std::nullopt;
    if (piv != col)
      for (unsigned j = 0; j < cols_; ++j) {
        std::swap(m.at(piv, j), m.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    CycNum pinv = m.at(col, col).inv();
    for (unsigned j = 0; j < cols_; ++j) {
      m.at(col, j) *= pinv;
      inv.at(col, j) *= pinv;
    }
    for (unsigned i = 0; i < rows_; ++i) {
      if (i == col || m.at(i, col).is_zero()) continue;
      CycNum f = m.at(i, col);
      for (unsigned j = 0; j < cols_; ++j) {
        m.at(i, j) -= f * m.at(col, j);
        inv.at(i, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

CycMat CycMat::kron(const CycMat& o) const {
  CycMat r(rows_ * o.rows_, cols_ * o.cols_);
  for (unsigned i = 0; i < rows_; ++i)
    for (unsigned j = 0; j < cols_; ++j) {
      if (at(i, j).is_zero()) continue;
      for (unsigned k = 0; k < o.rows_; ++k)
        for (unsigned l = 0; l < o.cols_; ++l)
          r.at(i * o.rows_ + k, j * o.cols_ + l) = at(i, j) * o.at(k, l);
    }
  return r;
}

namespace {
CycNum submatrix_det(const CycMat& m, const std::vector<unsigned>& rows,
                     const std::vector<unsigned>& cols) {
  unsigned n = unsigned(rows.size());
  CycMat s(n, n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) s.at(i, j) = m.at(rows[i], cols[j]);
  return s.det();
}
}  // namespace

CycMat CycMat::compound(unsigned m) const {
  auto rsets = subsets_of_size(rows_, m);
  auto csets = subsets_of_size(cols_, m);
  CycMat r(unsigned(rsets.size()), unsigned(csets.size()));
  for (unsigned i = 0; i < rsets.size(); ++i)
    for (unsigned j = 0; j < csets.size(); ++j) r.at(i, j) = submatrix_det(*this, rsets[i], csets[j]);
  return r;
}

std::vector<CycNum> CycMat::det_identity_plus(const CycNum&) const {
  // det(I + sA) = sum_m s^m * tr(wedge^m A)
  unsigned n = rows_;
  std::vector<CycNum> c(n + 1);
  c[0] = CycNum::one();
  for (unsigned m = 1; m <= n; ++m) {
    CycNum t;
    for (const auto& s : subsets_of_size(n, m)) t += submatrix_det(*this, s, s);
    c[m] = t;
  }
  return c;
}

CycMat CycMat::to_order(unsigned order) const {
  CycMat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i].to_order(order);
  return r;
}

std::string CycMat::key(unsigned order) const {
  std::ostringstream os;
  os << rows_ << 'x' << cols_ << '#';
  for (const auto& e : a_) os << e.to_order(order).key() << '&';
  return os.str();
}

}  // namespace reflinv
