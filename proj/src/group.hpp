#ifndef REFLINV_GROUP_HPP
#define REFLINV_GROUP_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "cycmat.hpp"
#include "poly.hpp"
#include "rep.hpp"

namespace reflinv {

struct GroupSpec {
  enum class Family { Cyclic, Monomial, Generic };

  Family family = Family::Cyclic;
  unsigned h = 1;             // Cyclic
  unsigned r = 1, p = 1, ell = 1;  // Monomial, p | r
  unsigned zeta_order = 1;    // Generic
  std::vector<CycMat> generators;  // Generic
  size_t max_order = 200000;

  static GroupSpec cyclic(unsigned h);
  static GroupSpec monomial(unsigned r, unsigned p, unsigned ell);
  static GroupSpec generic(unsigned zeta_order, std::vector<CycMat> gens);

  void validate() const;  // throws BadSpec
  std::string str() const;
};

struct Hyperplane {
  std::vector<CycNum> normal;  // first nonzero coordinate is 1
  Poly linear_form;            // l_H, degree 1
  unsigned e_H = 1;            // order of the pointwise stabilizer
  std::vector<size_t> stabilizer;  // element indices, identity included
};

struct ReflectionInfo {
  size_t elem;
  size_t hyperplane;
  CycNum det;
};

// A finite reflection group as an explicit matrix list closed under products.
class ReflGroup {
 public:
  const GroupSpec& spec() const { return spec_; }
  unsigned rank() const { return ell_; }
  unsigned zeta_order() const { return n_; }
  size_t order() const { return elems_.size(); }
  size_t identity_index() const { return 0; }

  const CycMat& element(size_t i) const { return elems_[i]; }
  size_t inverse_index(size_t i) const { return inverse_[i]; }
  const CycNum& det(size_t i) const { return dets_[i]; }
  size_t index_of(const CycMat& m) const;  // throws if not a member

  const std::vector<size_t>& reflections() const { return reflections_; }
  const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
  size_t num_reflections() const { return reflections_.size(); }  // N
  size_t num_hyperplanes() const { return hyperplanes_.size(); }  // N*

  // substitution columns for the action of element w on polynomials:
  // x_j -> sum_i cols[j][i] x_i
  std::vector<std::vector<CycNum>> subst_cols(size_t w) const;
  Poly act_on_poly(size_t w, const Poly& f) const;

  friend ReflGroup build_group(const GroupSpec& spec);

 private:
  GroupSpec spec_;
  unsigned ell_ = 0;
  unsigned n_ = 1;
  std::vector<CycMat> elems_;
  std::vector<size_t> inverse_;
  std::vector<CycNum> dets_;
  std::vector<size_t> reflections_;
  std::vector<Hyperplane> hyperplanes_;
};

ReflGroup build_group(const GroupSpec& spec);

std::vector<ReflectionInfo> enumerate_reflections(const ReflGroup& g);

// trace of element w acting in U
CycNum character(const ReflGroup& g, size_t w, const RepDescriptor& u);

// local data mu_{H,j} = <U restricted to W_H, det^j> for j = 0..e_H-1
std::vector<long> local_data(const ReflGroup& g, size_t hyperplane_index, const RepDescriptor& u);

}  // namespace reflinv

#endif
