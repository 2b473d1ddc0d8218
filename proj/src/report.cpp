#include "iealg/report.hpp"

namespace iealg {

namespace {

Json optional_size(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

Json to_json(const Report& r) {
  Json j;
  j["op"] = r.op;
  j["inputs"] = r.inputs;
  j["result"] = r.result;
  if (r.kernel) {
    j["kernel_dimension"] = r.kernel->dimension;
    j["basis_vectors"] = Json::array();
    for (const auto& v : r.kernel->basis_vectors)
      j["basis_vectors"].push_back(format_module_element(v));
    j["parameters"] = {{"N", r.kernel->N}, {"D", r.kernel->D}, {"T", r.kernel->T}};
  } else {
    j["kernel_dimension"] = nullptr;
    j["basis_vectors"] = Json::array();
    j["parameters"] = nullptr;
  }
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

std::string render(const Report& r, bool with_elapsed) {
  Json j = to_json(r);
  if (!with_elapsed) j.erase("elapsed_ms");
  return j.dump(2);
}

Json to_json(const LemmaReport& r) {
  Json j;
  j["lemma"] = r.lemma;
  j["preconditions_met"] = r.preconditions_met;
  if (!r.preconditions_met) j["precondition_failure"] = r.precondition_failure;
  j["holds"] = r.holds;
  j["lhs"] = format_module_element(r.lhs);
  j["rhs"] = format_module_element(r.rhs);
  if (!r.case_label.empty()) j["case"] = r.case_label;
  if (r.u0) j["u0"] = r.u0->encoding();
  j["xi"] = r.xi ? Json(format_rational(*r.xi)) : Json(nullptr);
  if (r.literal_difference_form_holds)
    j["literal_difference_form_holds"] = *r.literal_difference_form_holds;
  return j;
}

Json to_json(const EtaProfile& p) {
  return {{"is_zero", p.is_zero},
          {"has_finite_support", p.has_finite_support},
          {"depth_bounded_at", optional_size(p.depth_bounded_at)},
          {"root_bounded_at", optional_size(p.root_bounded_at)},
          {"r_eta", optional_size(p.r_eta)},
          {"b_eta", optional_size(p.b_eta)}};
}

}  // namespace iealg
