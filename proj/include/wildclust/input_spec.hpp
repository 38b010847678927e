#pragma once

// JSON input: field presentation, roots, leading coefficient and options.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "wildclust/local_field.hpp"

namespace wildclust {

using Literal = std::vector<std::vector<long>>;  // e slots of m unramified digits

struct HenselSpec {
  std::vector<std::vector<long>> poly;  // coefficient of x^i as an m-vector
  std::vector<int> residue_root;        // m bits
};

struct RootSpec {
  std::optional<Literal> literal;
  std::optional<HenselSpec> hensel;
};

struct SweepSpec {
  int root_index = 0;
  std::vector<long> k_values;
  long denominator = 1;
};

struct InputSpec {
  int m = 1;
  int e = 1;
  std::optional<int> N;
  std::optional<std::vector<int>> presentation;  // bits, low degree first, length m + 1
  std::vector<RootSpec> roots;
  std::optional<Literal> leading_coefficient;
  int max_improve_iterations = 64;
  std::optional<Q> uniformizer_valuation;
  std::optional<SweepSpec> sweep;
};

// Throws SchemaError.
InputSpec parse_input(const nlohmann::json& j);
InputSpec parse_input_text(const std::string& text);
nlohmann::json to_json(const InputSpec& in);

struct Instance {
  FieldContext ctx;
  std::vector<Elem> roots;
  Elem leading;
};

struct InstanceOptions {
  std::optional<int> N;  // overrides the input and the default
  // Multiplies root `sweep_root` by pi^{k e'/d}, e' = lcm(e, d).
  std::optional<int> sweep_root;
  long sweep_k = 0;
  long sweep_den = 1;
};

// Default N is 8 (1 + largest pairwise root-difference valuation), capped at the
// relative capacity.
Instance instantiate(const InputSpec& in, const InstanceOptions& opts = {});

}  // namespace wildclust
