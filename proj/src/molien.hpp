#ifndef REFLINV_MOLIEN_HPP
#define REFLINV_MOLIEN_HPP

#include <optional>
#include <tuple>
#include <vector>

#include "group.hpp"
#include "series.hpp"

namespace reflinv {

// default q-truncation for Hilbert-series work: 2(N + N*) + 10
int default_truncation(const ReflGroup& g);

// Hilb((S (x) U)^W; q), pure q-series
GradedSeries molien_series(const ReflGroup& g, const RepDescriptor& u, int trunc);

// Hilb((S (x) wedge V* (x) U)^W; q,t)
GradedSeries molien_series_forms(const ReflGroup& g, const RepDescriptor& u, int trunc);

// degrees of the basic invariants, read off Hilb(S^W; q)
std::vector<long> invariant_degrees(const ReflGroup& g, int trunc);

// generating function sum q^{deg m_i} for a free (S (x) U)^W over S^W
QPolyZ generator_polynomial(const ReflGroup& g, const RepDescriptor& u,
                            const std::vector<long>& invariant_degs, int trunc);

long degree_sum_molien(const ReflGroup& g, const RepDescriptor& u,
                       const std::vector<long>& invariant_degs, int trunc);
long degree_sum_opdam(const ReflGroup& g, const RepDescriptor& u);
// closed form for Delta(wedge^m V* (x) V)
long delta_formula(unsigned ell, unsigned m, long n_reflections, long n_hyperplanes);

struct HilbertConsequenceReport {
  bool match = false;
  std::optional<std::tuple<int, int, int>> mismatch_at;  // (q,t,u)
  GradedSeries lhs{0}, rhs{0};
};

// duality-group closed form for Hilb((S (x) wedge V* (x) V)^W; q,t) against
// the Molien computation; exponents ascending, throws NotDualityGroup
HilbertConsequenceReport hilbert_consequence_check(const ReflGroup& g,
                                                   const std::vector<long>& exponents,
                                                   const std::vector<long>& coexponents,
                                                   bool is_duality, int trunc);

struct TauReport {
  GradedSeries tau{0};
  bool swapped_holds = false;   // tau(q,t,u) = t^l u^l tau(q, u^-1, t^-1)
  bool literal_holds = false;   // tau(q,t,u) = t^l u^l tau(q, t^-1, u^-1)
  std::optional<std::tuple<int, int, int>> swapped_fail_at;
  std::optional<std::tuple<int, int, int>> literal_fail_at;
};

// trivariate Hilb((S (x) wedge V* (x) wedge V (x) C_chi)^W; q,t,u) with both
// reciprocity checks; chi is det^k when given
TauReport tau_series(const ReflGroup& g, int trunc, std::optional<long> chi_det_power = std::nullopt);

// graded local-data identity: sum_m Delta(wedge^m V* (x) U) t^m as integers
std::vector<long> graded_delta_via_opdam(const ReflGroup& g, const RepDescriptor& u);

}  // namespace reflinv

#endif
