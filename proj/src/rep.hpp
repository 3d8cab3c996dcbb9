#ifndef REFLINV_REP_HPP
#define REFLINV_REP_HPP

#include <string>
#include <vector>

#include "cycmat.hpp"

namespace reflinv {

// Symbolic description of a W-representation built functorially from V.
struct RepDescriptor {
  enum class Kind { Trivial, V, Vdual, Det, Wedge, Tensor };

  Kind kind = Kind::Trivial;
  long det_power = 1;     // Det
  unsigned wedge_m = 0;   // Wedge
  bool wedge_dual = true; // Wedge of V* when true, of V otherwise
  std::vector<RepDescriptor> factors;  // Tensor

  static RepDescriptor trivial() { return {}; }
  static RepDescriptor v();
  static RepDescriptor vdual();
  static RepDescriptor det(long k);
  static RepDescriptor wedge(unsigned m, bool dual = true);
  static RepDescriptor tensor(std::vector<RepDescriptor> fs);

  // grammar: trivial | V | V* | det^k | wedge(m,V*) | wedge(m,V), joined by (x)
  static RepDescriptor parse(const std::string& text);

  unsigned long long dim(unsigned ell) const;
  std::string str() const;
};

// trace of w in U, computed functorially from the matrix of w on V
CycNum rep_character(const CycMat& w_on_v, const RepDescriptor& u);
// matrix of w acting on U, basis ordered functorially (subsets lexicographic,
// Kronecker products left to right)
CycMat rep_matrix(const CycMat& w_on_v, const RepDescriptor& u);

}  // namespace reflinv

#endif
