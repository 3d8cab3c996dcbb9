#include "reflinv/reflinv.h"

#include <atomic>
#include <cstring>
#include <mutex>
#include <optional>
#include <thread>

#include "jsonio.hpp"
#include "parallel.hpp"

using namespace reflinv;

struct rf_group {
  ReflGroup g;
  std::optional<InvariantData> inv;
  std::mutex mu;

  const InvariantData& invariants() {
    std::lock_guard<std::mutex> lk(mu);
    if (!inv) inv = build_invariants(g);
    return *inv;
  }
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

rf_status status_of(const Error& e) {
  switch (e.code()) {
    case Errc::BadSpec:
      return RF_ERR_SPEC;
    case Errc::OrderCapExceeded:
      return RF_ERR_RESOURCE;
    case Errc::TheoremNotApplicable:
    case Errc::NotDualityGroup:
      return RF_ERR_INAPPLICABLE;
    default:
      return RF_ERR_INTERNAL;
  }
}

template <typename Fn>
rf_status guarded(char** err_out, Fn fn) {
  if (err_out) *err_out = nullptr;
  try {
    fn();
    return RF_OK;
  } catch (const Error& e) {
    if (err_out) *err_out = dup_string(e.what());
    return status_of(e);
  } catch (const std::exception& e) {
    if (err_out) *err_out = dup_string(e.what());
    return RF_ERR_INTERNAL;
  }
}

CertMode mode_from_string(const std::string& s) {
  if (s == "exact") return CertMode::Exact;
  if (s == "prob" || s == "probabilistic") return CertMode::Probabilistic;
  if (s == "auto") return CertMode::Auto;
  throw Error(Errc::BadSpec, "unknown mode: " + s);
}

TheoremTag theorem_from_string(const std::string& s) {
  if (s == "main") return TheoremTag::Main;
  if (s == "ranktwo") return TheoremTag::RankTwo;
  if (s == "monomial") return TheoremTag::Monomial;
  throw Error(Errc::BadSpec, "unknown theorem: " + s);
}

Json run_verify(rf_group* h, const Json& opts) {
  const InvariantData& inv = h->invariants();
  std::string theorem = opts.value("theorem", std::string("auto"));
  long m_opt = opts.value("m", -1L);
  CertMode mode = mode_from_string(opts.value("mode", std::string("auto")));
  unsigned trials = opts.value("trials", 8u);
  std::uint64_t seed = opts.value("seed", std::uint64_t(0));

  Json payload;
  std::vector<CertReport> reports;

  if (opts.contains("basis")) {
    if (m_opt < 0) throw Error(Errc::BadSpec, "a user-supplied basis needs an explicit m");
    std::vector<BasisLabel> labels;
    for (const auto& lj : opts.at("basis")) labels.push_back(basis_label_from_json(lj));
    CandidateBasis b = basis_from_labels(h->g, inv, unsigned(m_opt), std::move(labels));
    reports.push_back(saito_certify(h->g, inv, b, mode, trials, seed));
    payload["theorem"] = "user";
  } else if (theorem == "generation") {
    GenerationReport gr = verify_generation(h->g, inv, mode, trials, seed);
    payload["theorem"] = theorem_tag_str(gr.theorem);
    payload["shapes_ok"] = gr.shapes_ok;
    reports = std::move(gr.per_m);
  } else {
    TheoremTag tag = theorem == "auto" ? auto_theorem(h->g, inv) : theorem_from_string(theorem);
    payload["theorem"] = theorem_tag_str(tag);
    std::vector<unsigned> ms;
    if (m_opt < 0)
      for (unsigned m = 0; m <= h->g.rank(); ++m) ms.push_back(m);
    else
      ms.push_back(unsigned(m_opt));
    reports.resize(ms.size());
    // independent certifications; results stored by index for determinism
    std::exception_ptr first_error;
    std::mutex err_mu;
    unsigned workers = std::min<unsigned>(thread_budget(), unsigned(ms.size()));
    if (workers <= 1) {
      for (size_t i = 0; i < ms.size(); ++i)
        reports[i] = saito_certify(h->g, inv, candidate_basis(h->g, inv, tag, ms[i]), mode, trials, seed);
    } else {
      std::vector<std::thread> pool;
      std::atomic<size_t> next{0};
      for (unsigned wkr = 0; wkr < workers; ++wkr)
        pool.emplace_back([&] {
          while (true) {
            size_t i = next.fetch_add(1);
            if (i >= ms.size()) return;
            try {
              reports[i] =
                  saito_certify(h->g, inv, candidate_basis(h->g, inv, tag, ms[i]), mode, trials, seed);
            } catch (...) {
              std::lock_guard<std::mutex> lk(err_mu);
              if (!first_error) first_error = std::current_exception();
            }
          }
        });
      for (auto& t : pool) t.join();
      if (first_error) std::rethrow_exception(first_error);
    }
  }

  bool all_ok = true;
  Json rj = Json::array();
  for (const auto& r : reports) {
    rj.push_back(cert_report_json(r));
    if (r.verdict != Verdict::Certified && r.verdict != Verdict::ProbablyCertified) all_ok = false;
  }
  payload["reports"] = rj;
  payload["all_certified"] = all_ok;
  return payload;
}

Json run_delta(rf_group* h, const std::string& rep_text, long trunc) {
  const InvariantData& inv = h->invariants();
  RepDescriptor u = RepDescriptor::parse(rep_text);
  int d = trunc < 0 ? default_truncation(h->g) : int(trunc);
  std::vector<long> fdegs;
  for (const auto& p : inv.f) fdegs.push_back(p.degree());

  QPolyZ gen = generator_polynomial(h->g, u, fdegs, d);
  long molien = qpoly_weighted_degree_sum(gen);
  long opdam = degree_sum_opdam(h->g, u);

  Json payload{{"rep", u.str()},
               {"trunc", d},
               {"molien", molien},
               {"opdam", opdam},
               {"generator_polynomial", qpoly_str(gen)},
               {"rank", qpoly_eval_at_one(gen)}};
  // closed form for V, wedge(m,V*), and wedge(m,V*) (x) V
  std::optional<long> formula;
  if (u.kind == RepDescriptor::Kind::V) {
    formula = delta_formula(h->g.rank(), 0, inv.N, inv.Nstar);
  } else if (u.kind == RepDescriptor::Kind::Wedge && u.wedge_dual) {
    formula = long(binom(h->g.rank() - 1, u.wedge_m - 1)) * inv.N;
  } else if (u.kind == RepDescriptor::Kind::Tensor && u.factors.size() == 2 &&
             u.factors[0].kind == RepDescriptor::Kind::Wedge && u.factors[0].wedge_dual &&
             u.factors[1].kind == RepDescriptor::Kind::V) {
    formula = delta_formula(h->g.rank(), u.factors[0].wedge_m, inv.N, inv.Nstar);
  }
  if (formula)
    payload["formula"] = *formula;
  else
    payload["formula"] = nullptr;
  bool agree = molien == opdam && (!formula || *formula == molien);
  payload["agree"] = agree;
  return payload;
}

Json run_molien(rf_group* h, const std::string& rep_text, long trunc) {
  RepDescriptor u = RepDescriptor::parse(rep_text);
  int d = trunc < 0 ? default_truncation(h->g) : int(trunc);
  GradedSeries s = molien_series(h->g, u, d);
  Json coeffs = Json::array();
  for (int q = 0; q <= d; ++q) coeffs.push_back(s.coeff(q).get_str());
  return Json{{"rep", u.str()}, {"trunc", d}, {"coefficients", coeffs}};
}

Json run_tau(rf_group* h, long trunc, std::optional<long> chi) {
  int d = trunc < 0 ? default_truncation(h->g) : int(trunc);
  TauReport rep = tau_series(h->g, d, chi);
  auto verdict_json = [](bool holds, const std::optional<std::tuple<int, int, int>>& at) {
    Json j{{"holds", holds}};
    if (at)
      j["fail_at"] = Json::array({std::get<0>(*at), std::get<1>(*at), std::get<2>(*at)});
    else
      j["fail_at"] = nullptr;
    return j;
  };
  Json coeffs = Json::array();
  for (int q = 0; q <= d; ++q)
    for (const auto& [tu, v] : rep.tau.at(q))
      coeffs.push_back(Json::array({q, tu.first, tu.second, v.get_str()}));
  Json payload{{"trunc", d},
               {"chi_det_power", chi ? Json(*chi) : Json(nullptr)},
               {"swapped_reciprocity", verdict_json(rep.swapped_holds, rep.swapped_fail_at)},
               {"literal_reciprocity", verdict_json(rep.literal_holds, rep.literal_fail_at)},
               {"coefficients", coeffs}};
  return payload;
}

}  // namespace

extern "C" {

rf_status rf_group_create(const char* spec_json, rf_group** out, char** err_out) {
  return guarded(err_out, [&] {
    if (!spec_json || !out) throw Error(Errc::BadSpec, "null argument");
    Json j = Json::parse(spec_json, nullptr, true);
    GroupSpec spec = group_spec_from_json(j);
    auto* h = new rf_group{build_group(spec), std::nullopt, {}};
    *out = h;
  });
}

void rf_group_destroy(rf_group* g) { delete g; }

rf_status rf_group_summary(rf_group* g, char** json_out, char** err_out) {
  return guarded(err_out, [&] {
    if (!g || !json_out) throw Error(Errc::BadSpec, "null argument");
    *json_out = dup_string(group_summary_json(g->g, g->invariants()).dump());
  });
}

rf_status rf_verify(rf_group* g, const char* options_json, char** json_out, char** err_out) {
  return guarded(err_out, [&] {
    if (!g || !json_out) throw Error(Errc::BadSpec, "null argument");
    Json opts = options_json ? Json::parse(options_json) : Json::object();
    *json_out = dup_string(run_verify(g, opts).dump());
  });
}

rf_status rf_delta(rf_group* g, const char* rep, long trunc, char** json_out, char** err_out) {
  return guarded(err_out, [&] {
    if (!g || !rep || !json_out) throw Error(Errc::BadSpec, "null argument");
    *json_out = dup_string(run_delta(g, rep, trunc).dump());
  });
}

rf_status rf_molien(rf_group* g, const char* rep, long trunc, char** json_out, char** err_out) {
  return guarded(err_out, [&] {
    if (!g || !rep || !json_out) throw Error(Errc::BadSpec, "null argument");
    *json_out = dup_string(run_molien(g, rep, trunc).dump());
  });
}

rf_status rf_tau(rf_group* g, long trunc, int has_chi, long chi_det_power, char** json_out,
                 char** err_out) {
  return guarded(err_out, [&] {
    if (!g || !json_out) throw Error(Errc::BadSpec, "null argument");
    std::optional<long> chi;
    if (has_chi) chi = chi_det_power;
    *json_out = dup_string(run_tau(g, trunc, chi).dump());
  });
}

void rf_string_free(char* s) { std::free(s); }

const char* rf_version(void) { return "0.1.0"; }

}  // extern "C"
