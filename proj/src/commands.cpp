#include "wrb/commands.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "wrb/deform.hpp"
#include "wrb/rb_assoc.hpp"
#include "wrb/rb_lie.hpp"
#include "wrb/ybe.hpp"

namespace wrb {

using json = nlohmann::ordered_json;

namespace {

constexpr std::size_t kSummaryEntries = 16;

json vec_json(std::span<const Scalar> v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(format_scalar(x));
  return out;
}

json matrix_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vec_json(m.row(r)));
  return out;
}

template <class Map>
json summary_from(const Map& f, std::size_t tuples, const std::function<std::vector<std::size_t>(std::size_t)>& args) {
  json entries = json::array();
  std::size_t nonzero = 0;
  for (std::size_t t = 0; t < tuples; ++t) {
    const auto v = f.value(t);
    if (is_zero(v)) continue;
    if (nonzero++ < kSummaryEntries) entries.push_back(json{{"args", args(t)}, {"value", vec_json(v)}});
  }
  return json{{"zero", nonzero == 0}, {"nonzero_tuples", nonzero}, {"entries", std::move(entries)}};
}

json defect_summary(const TensorMap& f) {
  return summary_from(f, f.num_tuples(), [&](std::size_t t) {
    std::vector<std::size_t> idx(f.degree());
    f.decode(t, idx);
    return idx;
  });
}

json defect_summary(const AltMap& f) {
  return summary_from(f, f.num_tuples(), [&](std::size_t t) { return f.tuples()[t]; });
}

json defect_summary(const Vec& cube, std::size_t n) {
  json entries = json::array();
  std::size_t nonzero = 0;
  for (std::size_t t = 0; t < cube.size(); ++t) {
    if (sgn(cube[t]) == 0) continue;
    if (nonzero++ < kSummaryEntries)
      entries.push_back(json{{"args", {t / (n * n), (t / n) % n, t % n}}, {"value", format_scalar(cube[t])}});
  }
  return json{{"zero", nonzero == 0}, {"nonzero_tuples", nonzero}, {"entries", std::move(entries)}};
}

json check_json(const CheckResult& c) {
  json v = json::array();
  for (std::size_t i = 0; i < c.violations.size(); ++i)
    v.push_back(json{{"label", c.labels[i]}, {"at", c.violations[i]}});
  return json{{"ok", c.ok}, {"violations", std::move(v)}};
}

json sizes_json(const std::vector<std::size_t>& v) { return json(v); }

json complex_json(const CochainComplexReport& cx) {
  return json{{"cochain_dims", sizes_json(cx.cochain_dims)},
              {"ranks", sizes_json(cx.ranks)},
              {"h_dims", sizes_json(cx.h_dims)},
              {"composes_to_zero", cx.composes_to_zero}};
}

Vec parse_element(const std::string& text, std::size_t dim) {
  Vec out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(parse_scalar(tok));
    } catch (const std::invalid_argument& e) {
      throw CommandError(std::string("--element: ") + e.what());
    }
  }
  if (out.size() != dim) throw CommandError("--element: expected " + std::to_string(dim) + " coordinates");
  return out;
}

/// Every matrix with entries in `values`, in lexicographic order of the
/// row-major entry list.
std::vector<Matrix> all_matrices(std::size_t rows, std::size_t cols, const std::vector<Scalar>& values) {
  const std::size_t cells = rows * cols;
  std::size_t count = 1;
  for (std::size_t k = 0; k < cells; ++k) {
    count *= values.size();
    if (count > coefficient_cap()) throw CapExceeded("sweep: too many candidate matrices");
  }
  std::vector<Matrix> out;
  out.reserve(count);
  std::vector<std::size_t> digit(cells, 0);
  for (std::size_t n = 0; n < count; ++n) {
    Matrix m(rows, cols);
    for (std::size_t k = 0; k < cells; ++k) m(k / cols, k % cols) = values[digit[k]];
    out.push_back(std::move(m));
    for (std::size_t k = cells; k-- > 0;) {
      if (++digit[k] < values.size()) break;
      digit[k] = 0;
    }
  }
  return out;
}

const std::vector<Scalar>& sweep_values() {
  static const std::vector<Scalar> v{-2, -1, 0, 1, 2};
  return v;
}

class Dispatcher {
 public:
  Dispatcher(const CommandOptions& o, const Problem& p) : o_(o), p_(p) {}

  CommandResult run() {
    static const std::map<std::string, CommandResult (Dispatcher::*)()> table{
        {"validate", &Dispatcher::validate},       {"rb-check", &Dispatcher::rb_check},
        {"cohomology", &Dispatcher::cohomology},   {"deform-check", &Dispatcher::deform_check},
        {"obstruct", &Dispatcher::obstruct},       {"extend", &Dispatcher::extend},
        {"nijenhuis", &Dispatcher::nijenhuis},     {"ybe-check", &Dispatcher::ybe_check},
        {"lie-check", &Dispatcher::lie_check},     {"bridge", &Dispatcher::bridge}};
    auto it = table.find(o_.command);
    if (it == table.end()) throw CommandError("unknown command '" + o_.command + "'");
    CommandResult r = (this->*(it->second))();
    json out{{"command", echo()}, {"verdict", r.verdict}};
    for (auto& [k, v] : r.report.items()) out[k] = std::move(v);
    r.report = std::move(out);
    return r;
  }

 private:
  json echo() const {
    json e{{"name", o_.command}, {"problem", o_.problem_path}};
    auto put = [&](const char* key, const std::optional<std::string>& v) {
      if (v) e[key] = *v;
    };
    put("operator", o_.operator_name);
    put("action", o_.action);
    put("weight", o_.weight);
    put("deformation", o_.deformation);
    put("equivalence", o_.equivalence);
    put("tensor", o_.tensor);
    put("element", o_.element);
    if (o_.sweep) e["sweep"] = true;
    e["max_degree"] = o_.max_degree;
    e["cap"] = o_.cap;
    return e;
  }

  const std::string& need(const std::optional<std::string>& v, const char* flag) const {
    if (!v) throw CommandError(o_.command + ": " + flag + " is required");
    return *v;
  }

  Scalar weight_arg() const {
    try {
      return parse_scalar(need(o_.weight, "--weight"));
    } catch (const std::invalid_argument& e) {
      throw CommandError(std::string("--weight: ") + e.what());
    }
  }

  template <class M>
  static const auto& lookup(const M& m, const std::string& name, const char* what) {
    auto it = m.find(name);
    if (it == m.end()) throw CommandError(std::string("no ") + what + " named '" + name + "'");
    return it->second;
  }

  const RBOperator* assoc_op() const {
    auto it = p_.operators.find(need(o_.operator_name, "--operator"));
    return it == p_.operators.end() ? nullptr : &it->second.op;
  }
  const LieRBOperator* lie_op() const {
    auto it = p_.lie_operators.find(need(o_.operator_name, "--operator"));
    return it == p_.lie_operators.end() ? nullptr : &it->second.op;
  }
  [[noreturn]] void missing_operator() const {
    throw CommandError("no operator named '" + *o_.operator_name + "'");
  }
  const RBOperator& assoc_only() const {
    if (const auto* T = assoc_op()) return *T;
    if (lie_op()) throw CommandError(o_.command + ": '" + *o_.operator_name + "' is a Lie operator; an associative one is required");
    missing_operator();
  }

  CommandResult validate() {
    auto names = [](const auto& m) {
      json a = json::array();
      for (const auto& [k, v] : m) a.push_back(k);
      return a;
    };
    json r{{"algebras", names(p_.algebras)},           {"lie_algebras", names(p_.lie_algebras)},
           {"actions", names(p_.actions)},             {"lie_actions", names(p_.lie_actions)},
           {"operators", names(p_.operators)},         {"lie_operators", names(p_.lie_operators)},
           {"deformations", names(p_.deformations)},   {"tensor_elements", names(p_.tensor_elements)},
           {"equivalences", names(p_.equivalences)}};
    return {std::move(r), true};
  }

  CommandResult rb_check() {
    if (o_.sweep) return rb_sweep();
    if (const auto* T = assoc_op()) {
      const RBCheck c = is_wrbo(*T);
      json r{{"kind", "associative"},
             {"weight", format_scalar(T->weight)},
             {"is_rota_baxter", c.ok},
             {"maurer_cartan", mc_defect(*T).is_zero()},
             {"graph_is_subalgebra", graph_is_subalgebra(*T)},
             {"defect", defect_summary(c.defect)}};
      return {std::move(r), c.ok};
    }
    if (const auto* T = lie_op()) {
      const LieRBCheck c = is_wrbo_lie(*T);
      json r{{"kind", "lie"},
             {"weight", format_scalar(T->weight)},
             {"is_rota_baxter", c.ok},
             {"maurer_cartan", lie_mc_defect(*T).is_zero()},
             {"graph_is_subalgebra", graph_is_subalgebra(*T)},
             {"defect", defect_summary(c.defect)}};
      return {std::move(r), c.ok};
    }
    missing_operator();
  }

  CommandResult rb_sweep() {
    const std::string& act = need(o_.action, "--action");
    const Scalar w = weight_arg();
    std::size_t total = 0, rb = 0, mc = 0, graph = 0, disagree = 0;
    json solutions = json::array();
    auto tally = [&](bool is_rb, bool is_mc, bool in_graph, const Matrix& t) {
      ++total;
      rb += is_rb;
      mc += is_mc;
      graph += in_graph;
      if (is_rb != is_mc || is_rb != in_graph) ++disagree;
      if (is_rb) solutions.push_back(matrix_json(t));
    };
    std::string kind;
    if (auto it = p_.actions.find(act); it != p_.actions.end()) {
      kind = "associative";
      const auto& m = it->second.action;
      for (const Matrix& t : all_matrices(m.dim_a(), m.dim_b(), sweep_values())) {
        const RBOperator T(m, w, t);
        tally(is_wrbo(T).ok, mc_defect(T).is_zero(), graph_is_subalgebra(T), t);
      }
    } else if (auto jt = p_.lie_actions.find(act); jt != p_.lie_actions.end()) {
      kind = "lie";
      const auto& m = jt->second.action;
      for (const Matrix& t : all_matrices(m.dim_g(), m.dim_h(), sweep_values())) {
        const LieRBOperator T(m, w, t);
        tally(is_wrbo_lie(T).ok, lie_mc_defect(T).is_zero(), graph_is_subalgebra(T), t);
      }
    } else {
      throw CommandError("no action named '" + act + "'");
    }
    json r{{"kind", kind},
           {"weight", format_scalar(w)},
           {"entries", vec_json(sweep_values())},
           {"candidates", total},
           {"rota_baxter", rb},
           {"maurer_cartan", mc},
           {"graph_subalgebra", graph},
           {"disagreements", disagree},
           {"solutions", std::move(solutions)}};
    return {std::move(r), disagree == 0};
  }

  CommandResult cohomology() {
    if (const auto* T = assoc_op()) {
      const auto tw = cohomology_dims(*T, o_.max_degree, AssocRoute::twisted);
      const auto ho = cohomology_dims(*T, o_.max_degree, AssocRoute::hochschild);
      const bool agree = tw.h_dims == ho.h_dims && tw.ranks == ho.ranks;
      json r{{"kind", "associative"},
             {"h_dims", sizes_json(tw.h_dims)},
             {"routes_agree", agree},
             {"twisted", complex_json(tw)},
             {"hochschild", complex_json(ho)}};
      return {std::move(r), agree && tw.composes_to_zero && ho.composes_to_zero};
    }
    if (const auto* T = lie_op()) {
      const auto tw = cohomology_dims_lie(*T, o_.max_degree, LieRoute::twisted);
      const auto ce = cohomology_dims_lie(*T, o_.max_degree, LieRoute::chevalley_eilenberg);
      const bool agree = tw.h_dims == ce.h_dims && tw.ranks == ce.ranks;
      json r{{"kind", "lie"},
             {"h_dims", sizes_json(tw.h_dims)},
             {"routes_agree", agree},
             {"twisted", complex_json(tw)},
             {"chevalley_eilenberg", complex_json(ce)}};
      return {std::move(r), agree && tw.composes_to_zero && ce.composes_to_zero};
    }
    missing_operator();
  }

  const NamedDeformation& deformation(const std::string& name) const {
    return lookup(p_.deformations, name, "deformation");
  }

  static json order_json(const OrderReport& o) {
    json r{{"ok", o.ok}};
    r["first_failing"] = o.first_failing ? json(*o.first_failing) : json(nullptr);
    return r;
  }

  CommandResult deform_check() {
    if (o_.equivalence) return equivalence_check();
    const DeformationData& d = deformation(need(o_.deformation, "--deformation")).data;
    const OrderReport a = check_order_N(d), b = check_order_N_expanded(d);
    json r{{"order", d.order()}, {"valid", a.ok}, {"twisted", order_json(a)}, {"expanded", order_json(b)}};
    r["routes_agree"] = a.ok == b.ok && a.first_failing == b.first_failing;
    if (d.order() >= 1) {
      const LinearDefReport l = check_linear_def(d.base, d.term(1));
      r["linear_term"] = json{{"ok", l.ok},
                              {"lin1", l.lin1},
                              {"lin2", l.lin2},
                              {"cocycle", l.cocycle},
                              {"weight_zero_rb", l.weight_zero_rb},
                              {"holds_at_samples", linear_def_holds_at_samples(d.base, d.term(1))},
                              {"samples", vec_json(deformation_samples())}};
    }
    return {std::move(r), a.ok};
  }

  CommandResult equivalence_check() {
    const auto& ne = lookup(p_.equivalences, *o_.equivalence, "equivalence");
    const DeformationData& d = deformation(ne.deformation).data;
    const DeformationData& dp = deformation(ne.deformation_prime).data;
    const std::size_t order = std::min(d.order(), dp.order());
    const Matrix zero(d.base.t.rows(), d.base.t.cols());
    const Matrix& t1 = d.order() >= 1 ? d.term(1) : zero;
    const Matrix& t1p = dp.order() >= 1 ? dp.term(1) : zero;
    const EquivReport e = check_equiv_data(d.base, t1, t1p, ne.data.a0);
    const CheckResult f = check_formal_equivalence(d, dp, ne.data, order);
    json r{{"order", order},
           {"equivalence_data",
            json{{"ok", e.ok},
                 {"equiv1", e.equiv1},
                 {"equiv2", e.equiv2},
                 {"equiv3", e.equiv3},
                 {"difference_is_dT_a0", e.difference_is_dT_a0},
                 {"cohomologous", e.cohomologous},
                 {"where", check_json(e.where)}}},
           {"formal_morphism", check_json(f)}};
    return {std::move(r), e.ok && f.ok};
  }

  CommandResult obstruct() {
    const DeformationData& d = deformation(need(o_.deformation, "--deformation")).data;
    const ObstructionReport ob = obstruction(d);
    json r{{"order", d.order()}, {"cocycle", ob.cocycle}, {"obstruction", defect_summary(ob.ob)}};
    return {std::move(r), ob.cocycle};
  }

  CommandResult extend() {
    const DeformationData& d = deformation(need(o_.deformation, "--deformation")).data;
    const ExtensionResult x = try_extend(d);
    json r{{"order", d.order()},
           {"extensible", x.next.has_value()},
           {"rank_d1", x.rank_d1},
           {"rank_augmented", x.rank_augmented},
           {"obstruction_cocycle", x.obstruction.cocycle},
           {"obstruction", defect_summary(x.obstruction.ob)}};
    r["next_term"] = x.next ? matrix_json(*x.next) : json(nullptr);
    return {std::move(r), x.next.has_value()};
  }

  CommandResult nijenhuis() {
    const RBOperator& T = assoc_only();
    if (o_.element) {
      const Vec a0 = parse_element(*o_.element, T.action.dim_a());
      const CheckResult c = check_nijenhuis(T, a0);
      json r{{"element", vec_json(a0)}, {"nijenhuis", check_json(c)}, {"d_T_a0", matrix_json(d_T_element(T, a0))}};
      if (c.ok) {
        const Matrix t1 = trivial_def_from_nijenhuis(T, a0);
        r["trivial_deformation_valid"] = check_linear_def(T, t1).ok;
      }
      return {std::move(r), c.ok};
    }
    const auto candidates = small_elements(T.action.dim_a());
    const RigidityReport g = rigidity_report(T, candidates);
    json r{{"candidates", candidates.size()},
           {"nijenhuis_count", g.nijenhuis_count},
           {"nijenhuis_span", g.nijenhuis_span},
           {"dim_z1", g.dim_z1},
           {"dim_b1", g.dim_b1},
           {"spans_z1", g.spans_z1}};
    return {std::move(r), g.spans_z1};
  }

  CommandResult ybe_check() {
    if (o_.tensor) {
      const auto& nt = lookup(p_.tensor_elements, *o_.tensor, "tensor element");
      const Scalar w = weight_arg();
      const WaybeCheck c = waybe_check(nt.element, w);
      json r{{"kind", "associative-yang-baxter"},
             {"weight", format_scalar(w)},
             {"solution", c.ok},
             {"defect", defect_summary(c.defect, nt.element.algebra.dim())}};
      if (c.ok) {
        const RBOperator T = aybe_to_rb(nt.element, w);
        r["induced_operator"] = json{{"weight", format_scalar(T.weight)},
                                     {"matrix", matrix_json(T.t)},
                                     {"is_rota_baxter", is_wrbo(T).ok}};
      }
      return {std::move(r), c.ok};
    }
    if (const auto* T = assoc_op()) {
      const Matrix R = rb_to_modified(*T);
      const TensorMap def = maybe_defect(T->action.algebra, R, T->weight);
      const bool rb = is_wrbo(*T).ok;
      const bool round_trip = modified_to_rb(T->action.algebra, R, T->weight) == *T;
      json r{{"kind", "associative"},
             {"weight", format_scalar(T->weight)},
             {"modified_r", matrix_json(R)},
             {"modified_equation", def.is_zero()},
             {"is_rota_baxter", rb},
             {"round_trip", round_trip},
             {"defect", defect_summary(def)}};
      return {std::move(r), def.is_zero()};
    }
    if (const auto* T = lie_op()) {
      const Matrix R = rb_to_modified(*T);
      const AltMap def = mybe_defect(T->action.lie, R, T->weight);
      json r{{"kind", "lie"},
             {"weight", format_scalar(T->weight)},
             {"modified_r", matrix_json(R)},
             {"modified_equation", def.is_zero()},
             {"is_rota_baxter", is_wrbo_lie(*T).ok},
             {"defect", defect_summary(def)}};
      return {std::move(r), def.is_zero()};
    }
    if (!o_.operator_name) throw CommandError("ybe-check: --operator or --tensor is required");
    missing_operator();
  }

  CommandResult lie_check() {
    if (const auto* T = assoc_op()) {
      const LieRBOperator L = commutatorize_operator(*T);
      const LieRBCheck c = is_wrbo_lie(L);
      json r{{"kind", "commutator"},
             {"associative_rota_baxter", is_wrbo(*T).ok},
             {"is_rota_baxter", c.ok},
             {"graph_is_subalgebra", graph_is_subalgebra(L)},
             {"defect", defect_summary(c.defect)}};
      return {std::move(r), c.ok};
    }
    if (const auto* T = lie_op()) {
      const LieRBCheck c = is_wrbo_lie(*T);
      json r{{"kind", "lie"},
             {"is_rota_baxter", c.ok},
             {"maurer_cartan", lie_mc_defect(*T).is_zero()},
             {"graph_is_subalgebra", graph_is_subalgebra(*T)},
             {"defect", defect_summary(c.defect)}};
      return {std::move(r), c.ok};
    }
    missing_operator();
  }

  CommandResult bridge() {
    const RBOperator& T = assoc_only();
    require_wrbo(T, "bridge");
    const std::size_t na = T.action.dim_a(), nb = T.action.dim_b();
    json degrees = json::array();
    bool all = true;
    for (std::size_t n = 0; n <= o_.max_degree; ++n) {
      TensorMap f(nb, na, n);
      std::size_t checked = 0, passed = 0;
      for (std::size_t k = 0; k < f.coeffs().size(); ++k) {
        TensorMap e(nb, na, n);
        e.coeffs()[k] = 1;
        ++checked;
        passed += bridge_check(e, T);
      }
      all = all && passed == checked;
      degrees.push_back(json{{"degree", n}, {"basis_cochains", checked}, {"passed", passed}});
    }
    json r{{"degrees", std::move(degrees)}};
    return {std::move(r), all};
  }

  const CommandOptions& o_;
  const Problem& p_;
};

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

bool is_flat_array(const json& v) {
  if (!v.is_array()) return false;
  for (const auto& x : v)
    if (x.is_structured()) return false;
  return true;
}

std::string flat_text(const json& v) {
  std::string s = "[";
  bool first = true;
  for (const auto& x : v) {
    s += (first ? "" : ", ") + scalar_text(x);
    first = false;
  }
  return s + "]";
}

void render_table(std::ostream& os, const json& cx, const std::string& indent) {
  const auto& dims = cx["cochain_dims"];
  const auto& ranks = cx["ranks"];
  const auto& h = cx["h_dims"];
  os << indent << "  n    dim C^n   rank d^n   dim H^n\n";
  for (std::size_t n = 0; n < h.size(); ++n) {
    char line[96];
    std::snprintf(line, sizeof line, "  %-4zu %-9s %-10s %s\n", n, scalar_text(dims[n]).c_str(),
                  n < ranks.size() ? scalar_text(ranks[n]).c_str() : "-", scalar_text(h[n]).c_str());
    os << indent << line;
  }
}

void render(std::ostream& os, const json& v, const std::string& indent) {
  for (const auto& [key, val] : v.items()) {
    if (val.is_object() && val.contains("h_dims") && val.contains("cochain_dims")) {
      os << indent << key << ":\n";
      render_table(os, val, indent + "  ");
      os << indent << "  composes_to_zero: " << scalar_text(val["composes_to_zero"]) << "\n";
    } else if (val.is_object()) {
      os << indent << key << ":\n";
      render(os, val, indent + "  ");
    } else if (is_flat_array(val)) {
      os << indent << key << ": " << flat_text(val) << "\n";
    } else if (val.is_array()) {
      os << indent << key << ":\n";
      for (const auto& x : val) {
        if (x.is_object()) {
          os << indent << "  -\n";
          render(os, x, indent + "    ");
        } else if (is_flat_array(x)) {
          os << indent << "  " << flat_text(x) << "\n";
        } else {
          os << indent << "  " << x.dump() << "\n";
        }
      }
    } else {
      os << indent << key << ": " << scalar_text(val) << "\n";
    }
  }
}

}  // namespace

CommandResult run_command(const CommandOptions& opts, const Problem& problem) {
  set_coefficient_cap(opts.cap);
  return Dispatcher(opts, problem).run();
}

std::string render_report(const json& report, const std::string& format) {
  if (format == "json") return report.dump(2) + "\n";
  if (format != "text") throw CommandError("unknown format '" + format + "'");
  std::ostringstream os;
  render(os, report, "");
  return os.str();
}

int run_cli(const CommandOptions& opts, const std::string& format, std::string& out, std::string& err) {
  try {
    if (format != "json" && format != "text") throw CommandError("unknown format '" + format + "'");
    const Problem p = parse_problem_file(opts.problem_path);
    const CommandResult r = run_command(opts, p);
    out = render_report(r.report, format);
    return r.verdict ? 0 : 1;
  } catch (const NotRotaBaxter& e) {
    err = std::string("error: ") + e.what() + "\n" + defect_summary(e.defect()).dump() + "\n";
  } catch (const NotLieRotaBaxter& e) {
    err = std::string("error: ") + e.what() + "\n" + defect_summary(e.defect()).dump() + "\n";
  } catch (const std::exception& e) {
    err = std::string("error: ") + e.what() + "\n";
  }
  return 2;
}

}  // namespace wrb
