#ifndef REFLINV_JSONIO_HPP
#define REFLINV_JSONIO_HPP

#include <string>

#include <json.hpp>

#include "certify.hpp"
#include "group.hpp"
#include "invariants.hpp"
#include "molien.hpp"

namespace reflinv {

using Json = nlohmann::ordered_json;

// {"order": n, "coeffs": [["num","den"], ...]} with big integers as strings
Json cycnum_to_json(const CycNum& c);
CycNum cycnum_from_json(const Json& j);

// {"family":"cyclic","h":5} | {"family":"monomial","r":4,"p":2,"ell":3}
// | {"family":"generic","zeta_order":n,"generators":[[[cyc,...],...],...]}
GroupSpec group_spec_from_json(const Json& j);
Json group_spec_to_json(const GroupSpec& s);

Json group_summary_json(const ReflGroup& g, const InvariantData& inv);
Json cert_report_json(const CertReport& r);

BasisLabel basis_label_from_json(const Json& j);  // 1-based in the file format

}  // namespace reflinv

#endif
