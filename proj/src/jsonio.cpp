#include "jsonio.hpp"

namespace reflinv {

Json cycnum_to_json(const CycNum& c) {
  Json coeffs = Json::array();
  for (const auto& q : c.coords())
    coeffs.push_back(Json::array({q.get_num().get_str(), q.get_den().get_str()}));
  return Json{{"order", c.order()}, {"coeffs", coeffs}};
}

CycNum cycnum_from_json(const Json& j) {
  if (j.is_number_integer()) return CycNum(j.get<long>());
  if (j.is_string()) {
    mpq_class q(j.get<std::string>());
    q.canonicalize();
    return CycNum(q);
  }
  if (!j.is_object() || !j.contains("order") || !j.contains("coeffs"))
    throw Error(Errc::BadSpec, "cyclotomic entries need {order, coeffs}");
  unsigned n = j.at("order").get<unsigned>();
  if (n == 0) throw Error(Errc::BadSpec, "cyclotomic order must be positive");
  std::vector<Rat> raw;
  for (const auto& pair : j.at("coeffs")) {
    if (!pair.is_array() || pair.size() != 2)
      throw Error(Errc::BadSpec, "cyclotomic coefficients are [num, den] pairs");
    mpz_class num(pair[0].get<std::string>());
    mpz_class den(pair[1].get<std::string>());
    if (den == 0) throw Error(Errc::BadSpec, "zero denominator");
    Rat q(num, den);
    q.canonicalize();
    raw.push_back(q);
  }
  if (raw.size() > n) throw Error(Errc::BadSpec, "coefficient vector longer than the order");
  return CycNum::normalize(std::move(raw), n);
}

GroupSpec group_spec_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("family"))
    throw Error(Errc::BadSpec, "group spec needs a family field");
  std::string family = j.at("family").get<std::string>();
  GroupSpec s;
  if (family == "cyclic") {
    s = GroupSpec::cyclic(j.at("h").get<unsigned>());
  } else if (family == "monomial") {
    s = GroupSpec::monomial(j.at("r").get<unsigned>(), j.at("p").get<unsigned>(),
                            j.at("ell").get<unsigned>());
  } else if (family == "generic") {
    unsigned n = j.at("zeta_order").get<unsigned>();
    std::vector<CycMat> gens;
    for (const auto& mj : j.at("generators")) {
      unsigned rows = unsigned(mj.size());
      if (rows == 0) throw Error(Errc::BadSpec, "empty generator matrix");
      unsigned cols = unsigned(mj[0].size());
      CycMat m(rows, cols);
      for (unsigned i = 0; i < rows; ++i) {
        if (mj[i].size() != cols) throw Error(Errc::BadSpec, "ragged generator matrix");
        for (unsigned c = 0; c < cols; ++c) m.at(i, c) = cycnum_from_json(mj[i][c]);
      }
      gens.push_back(std::move(m));
    }
    s = GroupSpec::generic(n, std::move(gens));
  } else {
    throw Error(Errc::BadSpec, "unknown family: " + family);
  }
  if (j.contains("max_order")) s.max_order = j.at("max_order").get<size_t>();
  s.validate();
  return s;
}

Json group_spec_to_json(const GroupSpec& s) {
  switch (s.family) {
    case GroupSpec::Family::Cyclic:
      return Json{{"family", "cyclic"}, {"h", s.h}};
    case GroupSpec::Family::Monomial:
      return Json{{"family", "monomial"}, {"r", s.r}, {"p", s.p}, {"ell", s.ell}};
    case GroupSpec::Family::Generic: {
      Json gens = Json::array();
      for (const auto& m : s.generators) {
        Json rows = Json::array();
        for (unsigned i = 0; i < m.rows(); ++i) {
          Json row = Json::array();
          for (unsigned j2 = 0; j2 < m.cols(); ++j2) row.push_back(cycnum_to_json(m.at(i, j2)));
          rows.push_back(row);
        }
        gens.push_back(rows);
      }
      return Json{{"family", "generic"}, {"zeta_order", s.zeta_order}, {"generators", gens}};
    }
  }
  return Json();
}

Json group_summary_json(const ReflGroup& g, const InvariantData& inv) {
  Json degrees = Json::array();
  for (const auto& p : inv.f) degrees.push_back(p.degree());
  unsigned long long prod = 1;
  long esum = 0, cosum = 0;
  for (long e : inv.exponents) {
    prod *= (unsigned long long)(e + 1);
    esum += e;
  }
  for (long e : inv.coexponents) cosum += e;
  Json check{{"product_of_degrees_equals_order", prod == g.order()},
             {"sum_exponents_equals_N", esum == inv.N},
             {"sum_coexponents_equals_Nstar", cosum == inv.Nstar}};
  return Json{{"spec", group_spec_to_json(g.spec())},
              {"group", g.spec().str()},
              {"rank", g.rank()},
              {"order", g.order()},
              {"zeta_order", g.zeta_order()},
              {"num_reflections", g.num_reflections()},
              {"num_hyperplanes", g.num_hyperplanes()},
              {"degrees", degrees},
              {"exponents", inv.exponents},
              {"coexponents", inv.coexponents},
              {"h", inv.h},
              {"is_duality", inv.is_duality},
              {"deg_J", inv.N},
              {"deg_Q", inv.Nstar},
              {"structural_check", check}};
}

Json cert_report_json(const CertReport& r) {
  Json j{{"m", r.m},
         {"verdict", verdict_str(r.verdict)},
         {"mode", r.mode},
         {"theorem", r.theorem},
         {"degree_sum", r.degree_sum},
         {"target_delta", r.target_delta},
         {"j_power", r.j_power},
         {"q_power", r.q_power},
         {"scalar", r.scalar.str()},
         {"labels", r.labels}};
  if (r.det) j["det_degree"] = r.det->degree();
  if (r.mode == "probabilistic") {
    j["trials"] = r.trials;
    j["seed"] = r.seed;
    j["eval_points"] = r.eval_points;
  }
  return j;
}

BasisLabel basis_label_from_json(const Json& j) {
  BasisLabel l;
  if (j.contains("I"))
    for (const auto& v : j.at("I")) {
      unsigned idx = v.get<unsigned>();
      if (idx == 0) throw Error(Errc::BadSpec, "basis label indices are 1-based");
      l.I.push_back(idx - 1);
    }
  std::sort(l.I.begin(), l.I.end());
  unsigned k = j.at("k").get<unsigned>();
  if (k == 0) throw Error(Errc::BadSpec, "basis label indices are 1-based");
  l.k = k - 1;
  l.use_d = j.value("d", false);
  return l;
}

}  // namespace reflinv
