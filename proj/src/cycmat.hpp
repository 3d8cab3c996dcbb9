#ifndef REFLINV_CYCMAT_HPP
#define REFLINV_CYCMAT_HPP

#include <optional>
#include <string>
#include <vector>

#include "cyclotomic.hpp"

namespace reflinv {

// Dense matrix over Q(zeta); sizes stay small (group elements, compounds).
class CycMat {
 public:
  CycMat() : rows_(0), cols_(0) {}
  CycMat(unsigned rows, unsigned cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

  static CycMat identity(unsigned n);

  unsigned rows() const { return rows_; }
  unsigned cols() const { return cols_; }
  CycNum& at(unsigned i, unsigned j) { return a_[size_t(i) * cols_ + j]; }
  const CycNum& at(unsigned i, unsigned j) const { return a_[size_t(i) * cols_ + j]; }

  CycMat operator*(const CycMat& o) const;
  CycMat operator+(const CycMat& o) const;
  CycMat operator-(const CycMat& o) const;
  bool operator==(const CycMat& o) const;

  CycMat transpose() const;
  CycNum trace() const;
  unsigned rank() const;
  CycNum det() const;
  std::optional<CycMat> inverse() const;
  CycMat kron(const CycMat& o) const;
  // m-th compound matrix: entries are the m x m minors, row/column index sets
  // in lexicographic order
  CycMat compound(unsigned m) const;

  // coefficients c_0..c_n of det(I + s*A) as a polynomial in s
  std::vector<CycNum> det_identity_plus(const CycNum& unused = CycNum()) const;

  // all entries coerced to a fixed cyclotomic order, then serialized
  std::string key(unsigned order) const;
  CycMat to_order(unsigned order) const;

 private:
  unsigned rows_, cols_;
  std::vector<CycNum> a_;
};

std::vector<std::vector<unsigned>> subsets_of_size(unsigned n, unsigned m);
unsigned long long binom(unsigned n, unsigned m);

}  // namespace reflinv

#endif
