#ifndef REFLINV_CERTIFY_HPP
#define REFLINV_CERTIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "diffderiv.hpp"
#include "group.hpp"
#include "invariants.hpp"

namespace reflinv {

enum class TheoremTag { Main, RankTwo, Monomial, UserSupplied };
std::string theorem_tag_str(TheoremTag t);

struct BasisLabel {
  IndexSet I;      // 0-based indices into f
  unsigned k = 0;  // 0-based index into theta
  bool use_d = false;

  std::string str() const;  // e.g. "df{1,3}*theta2" / "df{}*dtheta1" (1-based)
};

struct CandidateBasis {
  unsigned m = 0;
  TheoremTag tag = TheoremTag::Main;
  std::vector<BasisLabel> labels;
  std::vector<DiffDeriv> elements;

  std::vector<std::string> label_strings() const;
};

// the cited theorem's explicit labeled set; throws TheoremNotApplicable
CandidateBasis candidate_basis(const ReflGroup& g, const InvariantData& inv, TheoremTag theorem,
                               unsigned m);
// reconstructs elements from (f, theta) data
CandidateBasis basis_from_labels(const ReflGroup& g, const InvariantData& inv, unsigned m,
                                 std::vector<BasisLabel> labels);

enum class Verdict { Certified, ProbablyCertified, RefutedDegreeSum, RefutedSingular };
std::string verdict_str(Verdict v);

enum class CertMode { Auto, Exact, Probabilistic };

struct CertReport {
  Verdict verdict = Verdict::RefutedSingular;
  unsigned m = 0;
  std::string mode;  // "exact" or "probabilistic"
  long degree_sum = 0;
  long target_delta = 0;
  unsigned long j_power = 0, q_power = 0;
  std::optional<Poly> det;  // exact mode
  CycNum scalar;            // det Coef(B) = scalar * J^a * Q^b
  unsigned trials = 0;
  std::uint64_t seed = 0;
  std::vector<std::vector<long>> eval_points;
  std::vector<std::string> labels;
  std::string theorem;
};

// Saito-style certification: degree sum, then the exact (or evaluated)
// determinant identity det Coef(B) = c * J^{(l-1)C(l-1,m-1)} Q^{C(l-1,m)}
CertReport saito_certify(const ReflGroup& g, const InvariantData& inv, const CandidateBasis& b,
                         CertMode mode = CertMode::Auto, unsigned trials = 8,
                         std::uint64_t seed = 0);

// J^a Q^b divides det Coef(B) for any invariant family (vacuous for det = 0)
bool divisibility_check(const ReflGroup& g, const InvariantData& inv,
                        const std::vector<DiffDeriv>& b, unsigned m);

struct GenerationReport {
  TheoremTag theorem = TheoremTag::Main;
  std::vector<CertReport> per_m;
  bool all_certified = false;
  bool shapes_ok = false;  // every element of the form df_I theta_k or df_I dtheta_k
};

GenerationReport verify_generation(const ReflGroup& g, const InvariantData& inv,
                                   CertMode mode = CertMode::Auto, unsigned trials = 8,
                                   std::uint64_t seed = 0);

// theorem selection used by `--theorem auto`
TheoremTag auto_theorem(const ReflGroup& g, const InvariantData& inv);

}  // namespace reflinv

#endif
