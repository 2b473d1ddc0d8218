#pragma once

// JSON reports: {op, inputs, result, kernel_dimension, basis_vectors,
// parameters {N, D, T}, elapsed_ms}. Numbers are integers or "p/q" strings.

#include "iealg/lemmas.hpp"
#include "iealg/solver.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace iealg {

using Json = nlohmann::ordered_json;

struct Report {
  std::string op;
  Json inputs = Json::object();
  Json result;
  std::optional<KernelResult> kernel;
  long long elapsed_ms = 0;
};

Json to_json(const Report& r);
/// Pretty-printed document; elapsed_ms is omitted when with_elapsed is false.
std::string render(const Report& r, bool with_elapsed = true);

Json to_json(const LemmaReport& r);
Json to_json(const EtaProfile& p);

}  // namespace iealg
