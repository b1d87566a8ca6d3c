#include "wrb/problem.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace wrb {

using json = nlohmann::ordered_json;

namespace {

std::string field(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
std::string item(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

void check_keys(const json& obj, std::initializer_list<const char*> allowed, const std::string& path) {
  if (!obj.is_object()) throw ProblemError(path, "expected an object");
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) throw ProblemError(field(path, key), "unknown field");
  }
}

const json& require(const json& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ProblemError(field(path, key), "missing field");
  return *it;
}

std::string string_at(const json& v, const std::string& path) {
  if (!v.is_string()) throw ProblemError(path, "expected a string");
  return v.get<std::string>();
}

Scalar scalar_at(const json& v, const std::string& path) {
  if (v.is_number_integer()) return Scalar(v.get<long>());
  if (!v.is_string()) throw ProblemError(path, "expected a scalar string \"p\" or \"p/q\"");
  try {
    return parse_scalar(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ProblemError(path, e.what());
  }
}

std::size_t index_at(const json& v, std::size_t bound, const std::string& path) {
  if (!v.is_number_unsigned()) throw ProblemError(path, "expected a non-negative index");
  const auto i = v.get<std::size_t>();
  if (i >= bound) throw ProblemError(path, "index " + std::to_string(i) + " out of range (dimension " +
                                               std::to_string(bound) + ")");
  return i;
}

const json& array_at(const json& v, const std::string& path) {
  if (!v.is_array()) throw ProblemError(path, "expected an array");
  return v;
}

Vec vector_at(const json& v, std::size_t n, const std::string& path) {
  array_at(v, path);
  if (v.size() != n) throw ProblemError(path, "expected " + std::to_string(n) + " entries");
  Vec out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(scalar_at(v[i], item(path, i)));
  return out;
}

Matrix matrix_at(const json& v, std::size_t rows, std::size_t cols, const std::string& path) {
  array_at(v, path);
  if (v.size() != rows) throw ProblemError(path, "expected " + std::to_string(rows) + " rows");
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const Vec row = vector_at(v[r], cols, item(path, r));
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
  }
  return m;
}

Tensor3 sparse3_at(const json& v, std::size_t n0, std::size_t n1, std::size_t n2, const std::string& path) {
  array_at(v, path);
  Tensor3 t(n0, n1, n2);
  std::set<std::array<std::size_t, 3>> seen;
  for (std::size_t e = 0; e < v.size(); ++e) {
    const std::string p = item(path, e);
    const json& entry = array_at(v[e], p);
    if (entry.size() != 4) throw ProblemError(p, "expected [i, j, k, \"coefficient\"]");
    const std::size_t i = index_at(entry[0], n0, item(p, 0));
    const std::size_t j = index_at(entry[1], n1, item(p, 1));
    const std::size_t k = index_at(entry[2], n2, item(p, 2));
    if (!seen.insert({i, j, k}).second) throw ProblemError(p, "duplicate entry");
    t(i, j, k) = scalar_at(entry[3], item(p, 3));
  }
  return t;
}

json sparse3_json(const Tensor3& t) {
  json out = json::array();
  const auto [n0, n1, n2] = t.shape();
  for (std::size_t i = 0; i < n0; ++i)
    for (std::size_t j = 0; j < n1; ++j)
      for (std::size_t k = 0; k < n2; ++k)
        if (sgn(t(i, j, k)) != 0) out.push_back(json::array({i, j, k, format_scalar(t(i, j, k))}));
  return out;
}

json vector_json(std::span<const Scalar> v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(format_scalar(x));
  return out;
}

json matrix_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_json(m.row(r)));
  return out;
}

std::string violation_text(const CheckResult& c) {
  std::ostringstream os;
  os << c.labels.front() << " at (";
  for (std::size_t k = 0; k < c.violations.front().size(); ++k) os << (k ? "," : "") << c.violations.front()[k];
  os << ")";
  return os.str();
}

void require_axioms(const CheckResult& c, const std::string& path) {
  if (!c.ok) throw ProblemError(path, "axiom violation: " + violation_text(c));
}

std::vector<std::string> basis_at(const json& rec, const std::string& path, const std::string& prefix) {
  std::vector<std::string> names;
  std::size_t dim = 0;
  const bool has_dim = rec.contains("dim"), has_basis = rec.contains("basis");
  if (!has_dim && !has_basis) throw ProblemError(path, "either dim or basis is required");
  if (has_dim) {
    if (!rec["dim"].is_number_unsigned()) throw ProblemError(field(path, "dim"), "expected a non-negative integer");
    dim = rec["dim"].get<std::size_t>();
  }
  if (has_basis) {
    const std::string bp = field(path, "basis");
    const json& b = array_at(rec["basis"], bp);
    for (std::size_t i = 0; i < b.size(); ++i) names.push_back(string_at(b[i], item(bp, i)));
    if (has_dim && names.size() != dim) throw ProblemError(bp, "length disagrees with dim");
  } else {
    for (std::size_t i = 0; i < dim; ++i) names.push_back(prefix + std::to_string(i + 1));
  }
  return names;
}

class Parser {
 public:
  Problem run(const json& doc) {
    check_keys(doc, {"algebras", "actions", "operators", "deformations", "tensor_elements", "equivalences"}, "");
    if (doc.contains("algebras")) parse_algebras(doc["algebras"]);
    if (doc.contains("actions")) parse_actions(doc["actions"]);
    if (doc.contains("operators")) parse_operators(doc["operators"]);
    if (doc.contains("deformations")) parse_deformations(doc["deformations"]);
    if (doc.contains("tensor_elements")) parse_tensor_elements(doc["tensor_elements"]);
    if (doc.contains("equivalences")) parse_equivalences(doc["equivalences"]);
    return std::move(p_);
  }

 private:
  static const json& section(const json& v, const std::string& path) {
    if (!v.is_object()) throw ProblemError(path, "expected an object of named records");
    return v;
  }

  static std::string kind_of(const json& rec, const std::string& path) {
    if (!rec.is_object()) throw ProblemError(path, "expected an object");
    return string_at(require(rec, "kind", path), field(path, "kind"));
  }

  const Algebra& assoc(const std::string& name, const std::string& path) const {
    auto it = p_.algebras.find(name);
    if (it == p_.algebras.end()) throw ProblemError(path, "undefined associative algebra '" + name + "'");
    return it->second;
  }

  const LieAlgebra& lie(const std::string& name, const std::string& path) const {
    auto it = p_.lie_algebras.find(name);
    if (it == p_.lie_algebras.end()) throw ProblemError(path, "undefined Lie algebra '" + name + "'");
    return it->second;
  }

  void parse_algebras(const json& sec) {
    section(sec, "algebras");
    // commutator algebras refer to associative ones, so they go second
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& [name, rec] : sec.items()) {
        const std::string path = field("algebras", name);
        const std::string kind = kind_of(rec, path);
        if ((kind == "commutator") != (pass == 1)) continue;
        if (kind == "associative") {
          check_keys(rec, {"kind", "dim", "basis", "structure", "unit"}, path);
          Algebra a(0);
          a.basis_names = basis_at(rec, path, "e");
          const std::size_t n = a.dim();
          a.mu = rec.contains("structure") ? sparse3_at(rec["structure"], n, n, n, field(path, "structure"))
                                           : Tensor3(n, n, n);
          if (rec.contains("unit")) a.unit = vector_at(rec["unit"], n, field(path, "unit"));
          require_axioms(check_associativity(a), path);
          require_axioms(check_unit(a), path);
          p_.algebras.emplace(name, std::move(a));
        } else if (kind == "lie") {
          check_keys(rec, {"kind", "dim", "basis", "structure"}, path);
          LieAlgebra g(0);
          g.basis_names = basis_at(rec, path, "x");
          const std::size_t n = g.dim();
          g.bracket = rec.contains("structure") ? sparse3_at(rec["structure"], n, n, n, field(path, "structure"))
                                                : Tensor3(n, n, n);
          require_axioms(check_jacobi(g), path);
          p_.lie_algebras.emplace(name, std::move(g));
        } else if (kind == "commutator") {
          check_keys(rec, {"kind", "of"}, path);
          const std::string of = string_at(require(rec, "of", path), field(path, "of"));
          p_.lie_algebras.emplace(name, commutatorize(assoc(of, field(path, "of"))));
        } else {
          throw ProblemError(field(path, "kind"), "unknown algebra kind '" + kind + "'");
        }
      }
  }

  void parse_actions(const json& sec) {
    section(sec, "actions");
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& [name, rec] : sec.items()) {
        const std::string path = field("actions", name);
        const std::string kind = kind_of(rec, path);
        if ((kind == "commutator") != (pass == 1)) continue;
        auto name_field = [&](const char* key) {
          return string_at(require(rec, key, path), field(path, key));
        };
        if (kind == "adjoint") {
          check_keys(rec, {"kind", "algebra"}, path);
          const std::string a = name_field("algebra");
          p_.actions.emplace(name, NamedBimodule{a, a, adjoint_bimodule(assoc(a, field(path, "algebra")))});
        } else if (kind == "bimodule") {
          check_keys(rec, {"kind", "algebra", "module", "left", "right"}, path);
          const std::string a = name_field("algebra"), b = name_field("module");
          BimoduleAction m(assoc(a, field(path, "algebra")), assoc(b, field(path, "module")));
          const std::size_t na = m.dim_a(), nb = m.dim_b();
          if (rec.contains("left")) m.left = sparse3_at(rec["left"], na, nb, nb, field(path, "left"));
          if (rec.contains("right")) m.right = sparse3_at(rec["right"], nb, na, nb, field(path, "right"));
          require_axioms(check_assoc_bimodule(m), path);
          p_.actions.emplace(name, NamedBimodule{a, b, std::move(m)});
        } else if (kind == "lie-adjoint") {
          check_keys(rec, {"kind", "algebra"}, path);
          const std::string g = name_field("algebra");
          p_.lie_actions.emplace(name, NamedLieAction{g, g, adjoint_lie_action(lie(g, field(path, "algebra")))});
        } else if (kind == "lie") {
          check_keys(rec, {"kind", "algebra", "module", "rho"}, path);
          const std::string g = name_field("algebra"), h = name_field("module");
          LieAction m(lie(g, field(path, "algebra")), lie(h, field(path, "module")));
          if (rec.contains("rho"))
            m.rho = sparse3_at(rec["rho"], m.dim_g(), m.dim_h(), m.dim_h(), field(path, "rho"));
          require_axioms(check_lie_action(m), path);
          p_.lie_actions.emplace(name, NamedLieAction{g, h, std::move(m)});
        } else if (kind == "commutator") {
          check_keys(rec, {"kind", "of", "algebra", "module"}, path);
          const std::string of = name_field("of");
          auto it = p_.actions.find(of);
          if (it == p_.actions.end())
            throw ProblemError(field(path, "of"), "undefined bimodule action '" + of + "'");
          const std::string g = name_field("algebra"), h = name_field("module");
          LieAction m = commutatorize_action(it->second.action);
          const LieAlgebra& gd = lie(g, field(path, "algebra"));
          const LieAlgebra& hd = lie(h, field(path, "module"));
          if (!(gd.bracket == m.lie.bracket))
            throw ProblemError(field(path, "algebra"), "'" + g + "' is not the commutator algebra of the acting algebra");
          if (!(hd.bracket == m.module.bracket))
            throw ProblemError(field(path, "module"), "'" + h + "' is not the commutator algebra of the module");
          m.lie = gd;
          m.module = hd;
          p_.lie_actions.emplace(name, NamedLieAction{g, h, std::move(m)});
        } else {
          throw ProblemError(field(path, "kind"), "unknown action kind '" + kind + "'");
        }
        if (p_.actions.count(name) && p_.lie_actions.count(name))
          throw ProblemError(path, "duplicate action name");
      }
  }

  void parse_operators(const json& sec) {
    section(sec, "operators");
    for (const auto& [name, rec] : sec.items()) {
      const std::string path = field("operators", name);
      check_keys(rec, {"action", "weight", "matrix"}, path);
      const std::string act = string_at(require(rec, "action", path), field(path, "action"));
      const Scalar w = scalar_at(require(rec, "weight", path), field(path, "weight"));
      if (auto it = p_.actions.find(act); it != p_.actions.end()) {
        const auto& m = it->second.action;
        Matrix t = matrix_at(require(rec, "matrix", path), m.dim_a(), m.dim_b(), field(path, "matrix"));
        p_.operators.emplace(name, NamedRBOperator{act, RBOperator(m, w, std::move(t))});
      } else if (auto jt = p_.lie_actions.find(act); jt != p_.lie_actions.end()) {
        const auto& m = jt->second.action;
        Matrix t = matrix_at(require(rec, "matrix", path), m.dim_g(), m.dim_h(), field(path, "matrix"));
        p_.lie_operators.emplace(name, NamedLieRBOperator{act, LieRBOperator(m, w, std::move(t))});
      } else {
        throw ProblemError(field(path, "action"), "undefined action '" + act + "'");
      }
    }
  }

  const NamedRBOperator& assoc_operator(const std::string& name, const std::string& path) const {
    auto it = p_.operators.find(name);
    if (it == p_.operators.end()) throw ProblemError(path, "undefined associative operator '" + name + "'");
    return it->second;
  }

  void parse_deformations(const json& sec) {
    section(sec, "deformations");
    for (const auto& [name, rec] : sec.items()) {
      const std::string path = field("deformations", name);
      check_keys(rec, {"operator", "terms"}, path);
      const std::string op = string_at(require(rec, "operator", path), field(path, "operator"));
      const RBOperator& T = assoc_operator(op, field(path, "operator")).op;
      DeformationData d{T, {}};
      const std::string tp = field(path, "terms");
      const json& terms = rec.contains("terms") ? array_at(rec["terms"], tp) : json::array();
      for (std::size_t i = 0; i < terms.size(); ++i)
        d.terms.push_back(matrix_at(terms[i], T.t.rows(), T.t.cols(), item(tp, i)));
      p_.deformations.emplace(name, NamedDeformation{op, std::move(d)});
    }
  }

  void parse_tensor_elements(const json& sec) {
    section(sec, "tensor_elements");
    for (const auto& [name, rec] : sec.items()) {
      const std::string path = field("tensor_elements", name);
      check_keys(rec, {"algebra", "entries"}, path);
      const std::string a = string_at(require(rec, "algebra", path), field(path, "algebra"));
      const Algebra& alg = assoc(a, field(path, "algebra"));
      const std::size_t n = alg.dim();
      Matrix c(n, n);
      const std::string ep = field(path, "entries");
      const json& entries = rec.contains("entries") ? array_at(rec["entries"], ep) : json::array();
      std::set<std::pair<std::size_t, std::size_t>> seen;
      for (std::size_t e = 0; e < entries.size(); ++e) {
        const std::string p = item(ep, e);
        const json& entry = array_at(entries[e], p);
        if (entry.size() != 3) throw ProblemError(p, "expected [i, j, \"coefficient\"]");
        const std::size_t i = index_at(entry[0], n, item(p, 0)), j = index_at(entry[1], n, item(p, 1));
        if (!seen.insert({i, j}).second) throw ProblemError(p, "duplicate entry");
        c(i, j) = scalar_at(entry[2], item(p, 2));
      }
      p_.tensor_elements.emplace(name, NamedTensorElement{a, TensorElement(alg, std::move(c))});
    }
  }

  void parse_equivalences(const json& sec) {
    section(sec, "equivalences");
    for (const auto& [name, rec] : sec.items()) {
      const std::string path = field("equivalences", name);
      check_keys(rec, {"deformation", "deformation_prime", "a0", "phi", "psi"}, path);
      NamedEquivalence e;
      e.deformation = string_at(require(rec, "deformation", path), field(path, "deformation"));
      e.deformation_prime = string_at(require(rec, "deformation_prime", path), field(path, "deformation_prime"));
      auto find_def = [&](const std::string& d, const char* key) -> const NamedDeformation& {
        auto it = p_.deformations.find(d);
        if (it == p_.deformations.end()) throw ProblemError(field(path, key), "undefined deformation '" + d + "'");
        return it->second;
      };
      const auto& d1 = find_def(e.deformation, "deformation");
      const auto& d2 = find_def(e.deformation_prime, "deformation_prime");
      if (!(d1.data.base == d2.data.base))
        throw ProblemError(path, "both deformations must deform the same operator");
      const auto& ctx = d1.data.base.action;
      const std::size_t na = ctx.dim_a(), nb = ctx.dim_b();
      e.data.a0 = vector_at(require(rec, "a0", path), na, field(path, "a0"));
      for (const char* key : {"phi", "psi"}) {
        if (!rec.contains(key)) continue;
        const std::string kp = field(path, key);
        const json& arr = array_at(rec[key], kp);
        const std::size_t n = std::string(key) == "phi" ? na : nb;
        auto& dst = std::string(key) == "phi" ? e.data.phi : e.data.psi;
        for (std::size_t i = 0; i < arr.size(); ++i) dst.push_back(matrix_at(arr[i], n, n, item(kp, i)));
      }
      p_.equivalences.emplace(name, std::move(e));
    }
  }

  Problem p_;
};

std::size_t line_of(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

}  // namespace

Problem parse_problem_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ProblemError("line " + std::to_string(line_of(text, e.byte)), "malformed JSON");
  }
  return Parser().run(doc);
}

Problem parse_problem_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ProblemError(path, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem_text(buf.str());
}

json serialize_problem(const Problem& p) {
  json doc;
  json algebras = json::object();
  for (const auto& [name, a] : p.algebras) {
    json rec{{"kind", "associative"}, {"basis", a.basis_names}, {"structure", sparse3_json(a.mu)}};
    if (a.unit) rec["unit"] = vector_json(*a.unit);
    algebras[name] = std::move(rec);
  }
  for (const auto& [name, g] : p.lie_algebras)
    algebras[name] = json{{"kind", "lie"}, {"basis", g.basis_names}, {"structure", sparse3_json(g.bracket)}};
  doc["algebras"] = std::move(algebras);

  json actions = json::object();
  for (const auto& [name, m] : p.actions)
    actions[name] = json{{"kind", "bimodule"},
                         {"algebra", m.algebra},
                         {"module", m.module},
                         {"left", sparse3_json(m.action.left)},
                         {"right", sparse3_json(m.action.right)}};
  for (const auto& [name, m] : p.lie_actions)
    actions[name] =
        json{{"kind", "lie"}, {"algebra", m.lie}, {"module", m.module}, {"rho", sparse3_json(m.action.rho)}};
  doc["actions"] = std::move(actions);

  json ops = json::object();
  for (const auto& [name, o] : p.operators)
    ops[name] = json{{"action", o.action}, {"weight", format_scalar(o.op.weight)}, {"matrix", matrix_json(o.op.t)}};
  for (const auto& [name, o] : p.lie_operators)
    ops[name] = json{{"action", o.action}, {"weight", format_scalar(o.op.weight)}, {"matrix", matrix_json(o.op.t)}};
  doc["operators"] = std::move(ops);

  json defs = json::object();
  for (const auto& [name, d] : p.deformations) {
    json terms = json::array();
    for (const auto& t : d.data.terms) terms.push_back(matrix_json(t));
    defs[name] = json{{"operator", d.op}, {"terms", std::move(terms)}};
  }
  doc["deformations"] = std::move(defs);

  json tens = json::object();
  for (const auto& [name, r] : p.tensor_elements) {
    json entries = json::array();
    const Matrix& c = r.element.coeffs;
    for (std::size_t i = 0; i < c.rows(); ++i)
      for (std::size_t j = 0; j < c.cols(); ++j)
        if (sgn(c(i, j)) != 0) entries.push_back(json::array({i, j, format_scalar(c(i, j))}));
    tens[name] = json{{"algebra", r.algebra}, {"entries", std::move(entries)}};
  }
  doc["tensor_elements"] = std::move(tens);

  json eqs = json::object();
  for (const auto& [name, e] : p.equivalences) {
    json phi = json::array(), psi = json::array();
    for (const auto& m : e.data.phi) phi.push_back(matrix_json(m));
    for (const auto& m : e.data.psi) psi.push_back(matrix_json(m));
    eqs[name] = json{{"deformation", e.deformation},
                     {"deformation_prime", e.deformation_prime},
                     {"a0", vector_json(e.data.a0)},
                     {"phi", std::move(phi)},
                     {"psi", std::move(psi)}};
  }
  doc["equivalences"] = std::move(eqs);
  return doc;
}

}  // namespace wrb
