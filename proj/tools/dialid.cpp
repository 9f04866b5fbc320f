#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>

#include "dialid/engine.hpp"
#include "dialid/experiments.hpp"
#include "dialid/serialize.hpp"
#include "dialid/varieties.hpp"

using namespace dialid;
using nlohmann::json;

namespace {

struct FieldArgs {
  int modulus = 101;
  std::string field = "modular";

  bool rational() const { return field == "rational"; }
  void attach(CLI::App* cmd) {
    cmd->add_option("--modulus", modulus, "prime modulus for modular arithmetic (default 101)");
    cmd->add_option("--field", field, "modular | rational")
        ->check(CLI::IsMember({"modular", "rational"}));
  }
  void validate(int degree) const {
    if (!rational() && modulus <= degree)
      throw CLI::ValidationError("--modulus", "modulus must exceed the working degree");
  }
};

Variety load_variety(const std::string& spec) {
  if (spec.rfind("builtin:", 0) == 0) return builtin_variety(spec.substr(8));
  return parse_variety_file(read_file(spec));
}

std::vector<std::pair<std::string, DiOpTemplate>> load_di_ops(const std::string& spec) {
  if (spec == "builtin:diproducts") {
    std::vector<DiOpTemplate> dip = jordan_triple_diproducts();
    return {{"t1", dip[0]}, {"t2", dip[1]}, {"t3", dip[2]}};
  }
  return parse_di_ops_file(read_file(spec));
}

std::vector<OpSpec> op_specs_of(const std::vector<std::pair<std::string, DiOpTemplate>>& ops) {
  std::vector<OpSpec> out;
  for (const auto& [name, t] : ops) out.push_back(OpSpec{name, t.arity, {}});
  return out;
}

template <class F>
json identities_json(const F& field, const std::vector<std::pair<std::string, DiOpTemplate>>& ops,
                     int degree, bool with_generators) {
  std::vector<OpSpec> specs = op_specs_of(ops);
  TypeBasis basis(specs, enumerate_association_types(specs, degree));
  std::vector<DiOpTemplate> binds;
  for (const auto& [name, t] : ops) binds.push_back(t);
  IntMatrix e = expansion_matrix_dialgebra(basis, binds);
  IdentitySearch<F> search = find_identities(field, e);
  json j;
  j["degree"] = degree;
  j["field"] = field.name();
  j["matrix_shape"] = {e.rows(), e.cols()};
  j["rank"] = static_cast<long>(search.rank);
  j["nullity"] = static_cast<long>(search.nullity);
  json ids = json::array();
  for (Index i = 0; i < search.nullspace.rows(); ++i) {
    std::string s;
    for (long c = 0; c < basis.size(); ++c) {
      if (field.is_zero(search.nullspace(i, c))) continue;
      std::string coeff = field.scalar_str(field.canon(search.nullspace(i, c)));
      if (!s.empty()) s += coeff[0] == '-' ? " - " : " + ";
      else if (coeff[0] == '-') s += "-";
      std::string mag = coeff[0] == '-' ? coeff.substr(1) : coeff;
      if (mag != "1") s += mag + " ";
      s += basis.label(c);
    }
    ids.push_back(s);
  }
  j["identities"] = ids;
  if (with_generators) {
    std::vector<std::vector<long>> acts = action_tables(basis);
    Matrix<typename F::Scalar> no_seeds(0, basis.size());
    GeneratorReport gen = extract_generators(field, acts, search.nullspace, no_seeds, search.nullity);
    j["generators_accepted"] = gen.accepted;
    j["rank_trajectory"] = std::vector<long>(gen.rank_trajectory.begin(), gen.rank_trajectory.end());
    j["module_span"] = static_cast<long>(gen.final_dim);
  }
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations with polynomial identities of dialgebra operations"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string output = "json";
  app.add_option("--output", output, "json | text | tsv")->check(CLI::IsMember({"json", "text", "tsv"}));

  // ---- reproduce -------------------------------------------------------------
  auto* cmd_rep = app.add_subcommand("reproduce", "rerun a reference computation and self-check it");
  std::string experiment;
  cmd_rep->add_option("experiment", experiment, "one of the named experiments");
  FieldArgs rep_field;
  rep_field.attach(cmd_rep);
  std::uint64_t seed = 12345;
  long trials = 200;
  cmd_rep->add_option("--seed", seed, "random seed for instance checks");
  cmd_rep->add_option("--trials", trials, "random trials for instance checks");
  bool list_experiments = false;
  cmd_rep->add_flag("--list", list_experiments, "list experiment names and exit");

  // ---- expand ----------------------------------------------------------------
  auto* cmd_expand = app.add_subcommand("expand", "expand a monomial in the free dialgebra");
  std::string ops_spec = "builtin:diproducts";
  std::string expr;
  cmd_expand->add_option("--ops", ops_spec, "ops file or builtin:diproducts");
  cmd_expand->add_option("expr", expr, "monomial, e.g. 't1(t1(a,b,c),d,e)'")->required();

  // ---- identities / generators ------------------------------------------------
  auto* cmd_ids = app.add_subcommand("identities", "multilinear identities of dialgebra operations");
  int degree = 3;
  std::string ids_ops = "builtin:diproducts";
  FieldArgs ids_field;
  cmd_ids->add_option("--degree", degree, "multilinear degree")->required();
  cmd_ids->add_option("--ops", ids_ops, "ops file or builtin:diproducts");
  ids_field.attach(cmd_ids);

  auto* cmd_gens = app.add_subcommand("generators", "module generators of the identity space");
  int gens_degree = 3;
  std::string gens_ops = "builtin:diproducts";
  FieldArgs gens_field;
  cmd_gens->add_option("--degree", gens_degree, "multilinear degree")->required();
  cmd_gens->add_option("--ops", gens_ops, "ops file or builtin:diproducts");
  gens_field.attach(cmd_gens);

  // ---- kp ----------------------------------------------------------------------
  auto* cmd_kp = app.add_subcommand("kp", "apply the KP algorithm to a variety's identities");
  std::string kp_variety = "builtin:jts";
  int kp_eliminate = 0;
  cmd_kp->add_option("--variety", kp_variety, "variety file or builtin:<name>");
  cmd_kp->add_option("--eliminate", kp_eliminate,
                     "eliminate this operation (1-based) as the reversal of the first");

  // ---- bso ----------------------------------------------------------------------
  auto* cmd_bso = app.add_subcommand("bso", "lift an associative operation to the dialgebra");
  std::string omega_text = "abc+cba";
  cmd_bso->add_option("--omega", omega_text, "signed word list, e.g. 'abc+cba'")->required();

  // ---- conjecture -----------------------------------------------------------------
  auto* cmd_conj = app.add_subcommand("conjecture", "compare the KP and BSO identity spaces");
  std::string conj_omega = "abc+cba";
  int conj_degree = 5;
  FieldArgs conj_field;
  cmd_conj->add_option("--omega", conj_omega, "signed word list")->required();
  cmd_conj->add_option("--degree", conj_degree, "maximal degree")->required();
  conj_field.attach(cmd_conj);

  // ---- verify -----------------------------------------------------------------------
  auto* cmd_verify = app.add_subcommand("verify", "verify identities on free structures or instances");
  std::string verify_variety = "builtin:jtd";
  std::string verify_modulo;
  std::string verify_instance;
  std::string dump_instance;
  bool verify_free = false;
  FieldArgs verify_field;
  std::uint64_t verify_seed = 12345;
  long verify_trials = 200;
  cmd_verify->add_option("--variety", verify_variety, "identities to verify");
  cmd_verify->add_flag("--diproducts", verify_free,
                       "expand through the Jordan triple diproducts in the free dialgebra");
  cmd_verify->add_option("--modulo", verify_modulo,
                         "verify modulo this variety's consequences (triple operations route)");
  cmd_verify->add_option("--instance", verify_instance,
                         "'differential' or a structure-constant TSV file");
  cmd_verify->add_option("--dump-instance", dump_instance,
                         "write the differential dialgebra instance to this TSV file");
  cmd_verify->add_option("--seed", verify_seed, "random seed");
  cmd_verify->add_option("--trials", verify_trials, "random trials");
  verify_field.attach(cmd_verify);

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_rep->parsed()) {
      if (list_experiments) {
        for (const std::string& n : experiment_names()) std::cout << n << "\n";
        return 0;
      }
      if (experiment.empty())
        throw std::invalid_argument("reproduce needs an experiment name (--list shows them)");
      ExperimentOptions opt;
      opt.rational = rep_field.rational();
      opt.modulus = rep_field.modulus;
      opt.seed = seed;
      opt.trials = trials;
      ExperimentReport r = run_experiment(experiment, opt);
      if (output == "json")
        std::cout << r.to_json().dump(2) << "\n";
      else if (output == "tsv" && r.extra.contains("tsv"))
        std::cout << r.extra["tsv"].get<std::string>();
      else
        std::cout << r.summary();
      return r.ok() ? 0 : 1;
    }

    if (cmd_expand->parsed()) {
      auto ops = load_di_ops(ops_spec);
      std::vector<OpSpec> specs = op_specs_of(ops);
      TreePoly p = parse_identity(expr, specs);
      std::vector<DiOpTemplate> binds;
      for (const auto& [name, t] : ops) binds.push_back(t);
      DiPoly expanded = expand_dialgebra(p, binds);
      if (output == "json") {
        json j;
        j["input"] = identity_str(p, specs);
        j["expansion"] = di_poly_str(expanded);
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << di_poly_str(expanded) << "\n";
      }
      return 0;
    }

    if (cmd_ids->parsed() || cmd_gens->parsed()) {
      const bool gens = cmd_gens->parsed();
      const FieldArgs& fa = gens ? gens_field : ids_field;
      const int deg = gens ? gens_degree : degree;
      fa.validate(deg);
      auto ops = load_di_ops(gens ? gens_ops : ids_ops);
      json j;
      if (fa.rational())
        j = identities_json(RationalField(), ops, deg, gens);
      else
        j = identities_json(ModField(fa.modulus), ops, deg, gens);
      std::cout << j.dump(2) << "\n";
      return 0;
    }

    if (cmd_kp->parsed()) {
      Variety v = load_variety(kp_variety);
      if (v.ops.size() != 1)
        throw std::runtime_error("kp expects a variety with a single operation");
      const int n = v.ops[0].arity;
      std::vector<OpSpec> out_ops;
      for (int i = 0; i < n; ++i)
        out_ops.push_back(OpSpec{v.ops[0].name + std::to_string(i + 1), n, {}});
      json j;
      json part1 = json::array();
      std::vector<TreePoly> all_out;
      for (const TreePoly& id : v.identities) {
        json per = json::array();
        for (const TreePoly& out : kp_part1(id, n)) {
          per.push_back(identity_str(out, out_ops));
          all_out.push_back(out);
        }
        part1.push_back(per);
      }
      j["part1"] = part1;
      json part2 = json::array();
      for (const TreePoly& out : kp_part2(n)) {
        part2.push_back(identity_str(out, out_ops));
        all_out.push_back(out);
      }
      j["part2"] = part2;
      if (kp_eliminate > 0) {
        std::vector<TreePoly> reduced =
            kp_reduce_opposite(all_out, kp_eliminate - 1, Permutation::reversal(n));
        json red = json::array();
        for (const TreePoly& out : reduced) red.push_back(identity_str(out, out_ops));
        j["eliminated"] = red;
      }
      std::cout << j.dump(2) << "\n";
      return 0;
    }

    if (cmd_bso->parsed()) {
      GroupAlgebraOp omega = parse_group_algebra_op(omega_text);
      std::vector<DiOpTemplate> lifted = bso(omega);
      json j;
      j["omega"] = group_algebra_op_str(omega);
      json ops_json = json::array();
      for (const DiOpTemplate& t : lifted) ops_json.push_back(di_template_str(t));
      j["lifted"] = ops_json;
      json rels = json::array();
      for (const BsoRelation& r : bso_relations(lifted))
        rels.push_back({{"op_a", r.op_a + 1}, {"op_b", r.op_b + 1}, {"tau", r.tau.str()}});
      j["relations"] = rels;
      std::cout << j.dump(2) << "\n";
      return 0;
    }

    if (cmd_conj->parsed()) {
      conj_field.validate(conj_degree);
      GroupAlgebraOp omega = parse_group_algebra_op(conj_omega);
      ConjectureReport r;
      if (conj_field.rational())
        r = check_conjecture(RationalField(), omega, conj_degree);
      else
        r = check_conjecture(ModField(conj_field.modulus), omega, conj_degree);
      json j;
      j["omega"] = group_algebra_op_str(omega);
      j["arity"] = r.arity;
      j["max_degree"] = r.max_degree;
      json degs = json::array();
      for (const ConjectureDegree& d : r.degrees)
        degs.push_back({{"degree", d.degree},
                        {"monomials", static_cast<long>(d.monomials)},
                        {"dim_source_identities", static_cast<long>(d.dim_identities)},
                        {"dim_kp_native", static_cast<long>(d.dim_kp_native)},
                        {"dim_kp_cumulative", static_cast<long>(d.dim_kp_cumulative)},
                        {"dim_lifted_identities", static_cast<long>(d.dim_j)},
                        {"equal_native", d.equal_native},
                        {"equal_cumulative", d.equal_cumulative}});
      j["degrees"] = degs;
      j["holds_native"] = r.holds_native;
      j["holds_cumulative"] = r.holds_cumulative;
      std::cout << j.dump(2) << "\n";
      return (r.holds_native || r.holds_cumulative) ? 0 : 1;
    }

    if (cmd_verify->parsed()) {
      json j;
      bool all_ok = true;
      if (!dump_instance.empty()) {
        ModField f(verify_field.modulus);
        ConcreteDialgebra d =
            make_differential_dialgebra(f, m2_theta_assoc_table(f), m2_theta_differential(f));
        write_file(dump_instance, dialgebra_tsv(d));
        j["dumped"] = dump_instance;
        std::cout << j.dump(2) << "\n";
        return 0;
      }
      Variety v = load_variety(verify_variety);
      if (verify_free) {
        std::vector<DiOpTemplate> dip = jordan_triple_diproducts();
        std::vector<bool> ok = identities_vanish_in_dialgebra(v.identities, {dip[0], dip[1]});
        j["free_dialgebra"] = ok;
        for (bool o : ok) all_ok = all_ok && o;
      }
      if (!verify_modulo.empty()) {
        Variety mod_v = load_variety(verify_modulo);
        ModField f(verify_field.modulus);
        std::vector<TreeOpTemplate> q = jordan_di_triple_templates();
        json per = json::array();
        for (const TreePoly& id : v.identities) {
          const int deg = id.terms().begin()->first.degree();
          TypeBasis left = binary_nonassoc_basis(deg);
          RowSpan<ModField> span(f, left.size());
          IntMatrix cons = permuted_identity_rows(consequences_to_degree(mod_v.identities, deg), left);
          for (Index i = 0; i < cons.rows(); ++i) {
            std::vector<ModField::Scalar> row(static_cast<std::size_t>(cons.cols()));
            for (Index jj = 0; jj < cons.cols(); ++jj)
              row[static_cast<std::size_t>(jj)] = f.from_int(cons(i, jj));
            span.add(std::move(row));
          }
          std::vector<std::int64_t> vec = tree_poly_vector(expand_trees(id, q), left);
          std::vector<ModField::Scalar> row(vec.size());
          for (std::size_t k = 0; k < vec.size(); ++k) row[k] = f.from_int(vec[k]);
          bool member = span.contains(std::move(row));
          per.push_back(member);
          all_ok = all_ok && member;
        }
        j["modulo"] = per;
      }
      if (!verify_instance.empty()) {
        ModField f(verify_field.modulus);
        ConcreteDialgebra d =
            verify_instance == "differential"
                ? make_differential_dialgebra(f, m2_theta_assoc_table(f), m2_theta_differential(f))
                : parse_dialgebra_tsv(read_file(verify_instance));
        std::vector<DiOpTemplate> dip = jordan_triple_diproducts();
        std::vector<InstanceOp> iops{op_from_di_template(d, dip[0]), op_from_di_template(d, dip[1])};
        InstanceReport ir = verify_on_instance(d.field, d.dim, iops, v.identities, verify_trials,
                                               verify_seed);
        j["instance"] = {{"dim", d.dim},
                         {"trials", ir.trials},
                         {"seed", ir.seed},
                         {"violations", ir.violations},
                         {"per_identity_violations", ir.per_identity_violations}};
        all_ok = all_ok && ir.violations == 0;
      }
      std::cout << j.dump(2) << "\n";
      return all_ok ? 0 : 1;
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 0;
}
