#pragma once

// Problem files: JSON documents declaring named algebras, actions,
// operators, deformations, tensor elements and equivalence data.
//
// Structure constants are sparse [i, j, k, "p/q"] entries with 0-based
// indices; scalars are strings. Matrices are arrays of rows.

#include <map>
#include <string>

#include <json.hpp>

#include "wrb/deform.hpp"
#include "wrb/rb_assoc.hpp"
#include "wrb/rb_lie.hpp"
#include "wrb/ybe.hpp"

namespace wrb {

/// Malformed input; `where` is a line number or a field path.
class ProblemError : public Error {
 public:
  ProblemError(const std::string& where, const std::string& what)
      : Error(where + ": " + what), where_(where) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

struct NamedBimodule {
  std::string algebra;
  std::string module;
  BimoduleAction action;
  friend bool operator==(const NamedBimodule&, const NamedBimodule&) = default;
};

struct NamedLieAction {
  std::string lie;
  std::string module;
  LieAction action;
  friend bool operator==(const NamedLieAction&, const NamedLieAction&) = default;
};

struct NamedRBOperator {
  std::string action;
  RBOperator op;
  friend bool operator==(const NamedRBOperator&, const NamedRBOperator&) = default;
};

struct NamedLieRBOperator {
  std::string action;
  LieRBOperator op;
  friend bool operator==(const NamedLieRBOperator&, const NamedLieRBOperator&) = default;
};

struct NamedDeformation {
  std::string op;
  DeformationData data;
  friend bool operator==(const NamedDeformation&, const NamedDeformation&) = default;
};

struct NamedTensorElement {
  std::string algebra;
  TensorElement element;
  friend bool operator==(const NamedTensorElement&, const NamedTensorElement&) = default;
};

/// Equivalence between two deformations of the same operator.
struct NamedEquivalence {
  std::string deformation;
  std::string deformation_prime;
  EquivalenceData data;
  friend bool operator==(const NamedEquivalence&, const NamedEquivalence&) = default;
};

struct Problem {
  std::map<std::string, Algebra> algebras;
  std::map<std::string, LieAlgebra> lie_algebras;
  std::map<std::string, NamedBimodule> actions;
  std::map<std::string, NamedLieAction> lie_actions;
  std::map<std::string, NamedRBOperator> operators;
  std::map<std::string, NamedLieRBOperator> lie_operators;
  std::map<std::string, NamedDeformation> deformations;
  std::map<std::string, NamedTensorElement> tensor_elements;
  std::map<std::string, NamedEquivalence> equivalences;

  friend bool operator==(const Problem&, const Problem&) = default;
};

Problem parse_problem_text(const std::string& text);
Problem parse_problem_file(const std::string& path);

/// Canonical explicit form: every algebra and action is written out with its
/// structure constants, so the result does not depend on derived kinds.
nlohmann::ordered_json serialize_problem(const Problem& p);

}  // namespace wrb
