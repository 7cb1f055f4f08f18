// confal: command-line front end for the conformal algebra workbench.
//
// Exit codes: 0 all checks passed, 1 a check failed, 2 parse or usage
// error, 3 resource bound hit.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "confal/confal.hpp"
#include "confal/report.hpp"

using namespace confal;

namespace {

struct Options {
  std::string file;
  std::string algebra;
  std::string format = "text";
  int max_order = 4;
  long window = 6;
  std::string element;
  int rmax = 6;
  long mminus = -1, mplus = 1;
  int closure_bound = 4;
  int roundtrip_orders = 2;
  int annihilator_bound = 2;
  std::string nilpotent;
  int trials = 50;
  int degree_bound = 5;
  std::uint64_t seed = 0;
  std::vector<std::string> seed_elements;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void render_text(std::ostream& os, const json& j, int indent)
{
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_structured() && !v.empty()) {
        os << pad << k << ":\n";
        render_text(os, v, indent + 2);
      } else {
        os << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  } else if (j.is_array()) {
    bool flat = true;
    for (const auto& v : j) flat = flat && !v.is_structured();
    if (flat) {
      os << pad << j.dump() << "\n";
      return;
    }
    for (const auto& v : j) {
      os << pad << "-\n";
      render_text(os, v, indent + 2);
    }
  } else {
    os << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

/// Runs `fn(model, spec, result_json) -> bool` for every selected algebra.
template <class Fn>
bool for_each_algebra(const std::vector<AlgebraSpec>& specs, const Options& o, json& report, Fn&& fn)
{
  bool all = true, any = false;
  for (const auto& spec : specs) {
    if (!o.algebra.empty() && spec.name != o.algebra) continue;
    any = true;
    AnyAlgebra alg = build_algebra(spec);
    json r{{"algebra", spec.name}};
    const bool ok = std::visit([&](const auto& m) { return fn(m, spec, r); }, alg);
    r["pass"] = ok;
    report["results"].push_back(r);
    all = all && ok;
  }
  if (!any) throw UsageError(o.algebra.empty() ? "no algebras in input" : "no algebra named '" + o.algebra + "'");
  return all;
}

template <class M>
typename M::element_type element_arg(const M& m, const std::string& text)
{
  try {
    return parse_element(m, text);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 1, 1);
  }
}

bool cmd_check(const std::vector<AlgebraSpec>& specs, const Options& o, json& rep)
{
  return for_each_algebra(specs, o, rep, [&](const auto& m, const AlgebraSpec&, json& r) {
    const auto& gens = m.generators();
    auto assoc = check_associativity(m, o.max_order, o.max_order);
    CheckReport axioms, locality, dong;
    for (std::size_t a = 0; a < gens.size(); ++a)
      for (std::size_t b = 0; b < gens.size(); ++b) {
        const std::string pair = "(" + m.generator_names()[a] + ", " + m.generator_names()[b] + ") ";
        auto ax = check_derivation_axioms(m, gens[a], gens[b], o.max_order, o.window);
        axioms.checked += ax.checked;
        if (!ax.pass) axioms.fail(pair + ax.witness);
        auto lc = check_coefficient_locality(m, gens[a], gens[b], 2, std::min<long>(o.window, 3));
        locality.checked += lc.checked;
        if (!lc.pass) locality.fail(pair + lc.witness);
        for (std::size_t c = 0; c < gens.size(); ++c) {
          auto dc = dong_check(m, gens[a], gens[b], gens[c], o.max_order);
          dong.checked += dc.checked;
          if (!dc.pass) dong.fail(pair + m.generator_names()[c] + ": " + dc.witness);
        }
      }
    auto oracle = oracle_sweep(m, o.max_order, o.window);
    r["locality"] = locality_json(m);
    r["C1_coefficient_locality"] = to_json(locality);
    r["derivation_axioms"] = to_json(axioms);
    r["associativity_left_nested"] = to_json(assoc.left_form);
    r["associativity_right_nested"] = to_json(assoc.right_form);
    r["oracle"] = to_json(oracle);
    r["dong"] = to_json(dong);
    return locality.pass && axioms.pass && assoc.pass() && oracle.pass && dong.pass;
  });
}

bool cmd_oracle(const std::vector<AlgebraSpec>& specs, const Options& o, json& rep)
{
  return for_each_algebra(specs, o, rep, [&](const auto& m, const AlgebraSpec&, json& r) {
    auto s = oracle_sweep(m, o.max_order, o.window);
    r["max_order"] = o.max_order;
    r["window"] = o.window;
    r["oracle"] = to_json(s);
    return s.pass;
  });
}

bool cmd_locality(const std::vector<AlgebraSpec>& specs, const Options& o, json& rep)
{
  return for_each_algebra(specs, o, rep, [&](const auto& m, const AlgebraSpec&, json& r) {
    r["locality"] = locality_json(m);
    return true;
  });
}

bool cmd_identity(const std::vector<AlgebraSpec>& specs, const Options& o, json& rep)
{
  if (o.element.empty()) throw UsageError("identity needs --element");
  return for_each_algebra(specs, o, rep, [&](const auto& m, const AlgebraSpec&, json& r) {
    auto e = element_arg(m, o.element);
    auto res = is_conformal_identity(m, e);
    r["identity"] = identity_json(m, e, res);
    return res.pass;
  });
}

bool cmd_growth(const std::vector<AlgebraSpec>& specs, const Options& o, json& rep, std::string& csv, bool coeff)
{
  return for_each_algebra(specs, o, rep, [&](const auto& m, const AlgebraSpec& spec, json& r) {
    GrowthReport g = coeff ? coeff_growth_check(m, o.mminus, o.mplus, o.rmax) : growth_table(m, o.rmax);
    r["growth"] = growth_json(g);
    if (o.format == "csv") csv += (specs.size() > 1 ? "# " + spec.name + "\n" : "") + growth_csv(g);
    return coeff ? g.bound_holds : true;
  });
}

bool cmd_recognize(const std::vector<AlgebraSpec>& specs, const Options& o, json& rep)
{
  return for_each_algebra(specs, o, rep, [&](const auto& m, const AlgebraSpec&, json& r) {
    using M = std::decay_t<decltype(m)>;
    typename M::element_type e;
    if (!o.element.empty()) {
      e = element_arg(m, o.element);
    } else if constexpr (std::is_same_v<M, DiffAlgebra>) {
      e = m.primitive(m.base().one());
    } else {
      throw UsageError("recognize on a presented algebra needs --identity");
    }
    try {
      auto res = recognize_unital(m, e, o.closure_bound, o.annihilator_bound);
      auto rt = recognition_roundtrip(m, res, o.roundtrip_orders);
      r["recognition"] = recognition_json(m, res, rt);
      return res.pass() && rt.pass;
    } catch (const NotUnital& ex) {
      r["error"] = std::string("NotUnital: ") + ex.what();
      return false;
    }
  });
}

bool cmd_transport(const std::vector<AlgebraSpec>& specs, const Options& o, json& rep)
{
  if (o.nilpotent.empty()) throw UsageError("transport needs --nilpotent");
  return for_each_algebra(specs, o, rep, [&](const auto& m, const AlgebraSpec&, json& r) {
    if constexpr (!std::is_same_v<std::decay_t<decltype(m)>, DiffAlgebra>) {
      throw UsageError("transport needs a differential algebra over a finite-dimensional base");
      return false;
    } else {
      const BaseAlgebra& a = m.base();
      AElem nil = parse_base_element(a, o.nilpotent);
      try {
        auto t = transport_identity(a, nil);
        r["nilpotent"] = a.to_string(nil);
        r["nilpotency"] = t.nilpotency;
        r["transported"] = identity_json(t.algebra, t.identity, t.check);
        r["unit"] = identity_json(t.algebra, t.algebra.primitive(a.one()), t.unit_check);
        return t.check.pass && t.unit_check.pass;
      } catch (const NotNilpotent& ex) {
        r["error"] = std::string("NotNilpotent: ") + ex.what();
        return false;
      }
    }
  });
}

bool cmd_simplicity(const std::vector<AlgebraSpec>& specs, const Options& o, json& rep)
{
  return for_each_algebra(specs, o, rep, [&](const auto& m, const AlgebraSpec&, json& r) {
    if constexpr (!std::is_same_v<std::decay_t<decltype(m)>, DiffAlgebra>) {
      throw UsageError("simplicity needs a differential algebra");
      return false;
    } else {
      std::vector<AElem> seeds;
      for (const auto& s : o.seed_elements) seeds.push_back(parse_base_element(m.base(), s));
      auto p = simplicity_probe(m, o.trials, o.degree_bound, o.seed, seeds);
      r["trials"] = p.trials;
      r["seed"] = o.seed;
      r["degree_bound"] = o.degree_bound;
      r["verdict"] = p.verdict;
      if (p.witness) {
        json basis = json::array();
        for (const auto& b : p.witness->basis) basis.push_back(m.base().to_string(b));
        r["witness"] = {{"seed_element", p.seed_element}, {"dimension", basis.size()}, {"basis", basis}};
      }
      // The probe is a search, not a check: it passes either way.
      return true;
    }
  });
}

bool cmd_annihilator(const std::vector<AlgebraSpec>& specs, const Options& o, json& rep)
{
  return for_each_algebra(specs, o, rep, [&](const auto& m, const AlgebraSpec&, json& r) {
    auto k = left_annihilator_probe(m, o.annihilator_bound);
    json basis = json::array();
    for (const auto& x : k) basis.push_back(m.to_string(x));
    r["degree_bound"] = o.annihilator_bound;
    r["left_annihilator"] = basis;
    return k.empty();
  });
}

}  // namespace

int main(int argc, char** argv)
{
  CLI::App app{"confal: exact computations with conformal algebras"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("file", o.file, "definition file (.confal)")->required();
    sub->add_option("--algebra", o.algebra, "restrict to the named algebra");
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
    return sub;
  };
  auto orders = [&](CLI::App* sub) {
    sub->add_option("--max-order", o.max_order, "largest product order")->check(CLI::NonNegativeNumber);
    sub->add_option("--window", o.window, "coefficient window [-w, w]")->check(CLI::NonNegativeNumber);
  };

  auto* check = common(app.add_subcommand("check", "axioms, associativity, Dong sweep and oracle"));
  orders(check);
  auto* oracle = common(app.add_subcommand("oracle", "coefficient-window agreement of products"));
  orders(oracle);
  common(app.add_subcommand("locality", "locality degrees of the generators"));
  auto* identity = common(app.add_subcommand("identity", "conformal identity test"));
  identity->add_option("--element", o.element, "element expression")->required();
  auto* growth = common(app.add_subcommand("growth", "growth function gamma(r)"));
  growth->add_option("--rmax", o.rmax, "largest r")->check(CLI::PositiveNumber);
  auto* cgrowth = common(app.add_subcommand("coeff-growth", "coefficient-algebra growth bound"));
  cgrowth->add_option("--rmax", o.rmax, "largest r")->check(CLI::PositiveNumber);
  cgrowth->add_option("--mminus", o.mminus, "window start (<= 0)");
  cgrowth->add_option("--mplus", o.mplus, "window end");
  auto* recognize = common(app.add_subcommand("recognize", "recover (A, delta) from a unital algebra"));
  recognize->add_option("--identity", o.element, "conformal identity (default f_1)");
  recognize->add_option("--closure-bound", o.closure_bound, "product depth of the closure")->check(CLI::PositiveNumber);
  recognize->add_option("--roundtrip-orders", o.roundtrip_orders, "orders compared in the round trip");
  recognize->add_option("--annihilator-bound", o.annihilator_bound, "d-degree of the annihilator probe");
  auto* transport = common(app.add_subcommand("transport", "conformal identity over (A, ad r)"));
  transport->add_option("--nilpotent", o.nilpotent, "nilpotent base element r")->required();
  auto* simplicity = common(app.add_subcommand("simplicity", "search for delta-stable ideals"));
  simplicity->add_option("--trials", o.trials, "random seeds to try")->check(CLI::NonNegativeNumber);
  simplicity->add_option("--degree-bound", o.degree_bound, "x-degree bound")->check(CLI::NonNegativeNumber);
  simplicity->add_option("--seed", o.seed, "random seed");
  simplicity->add_option("--seed-element", o.seed_elements, "explicit seed (base expression)");
  auto* annihilator = common(app.add_subcommand("annihilator", "left annihilator probe"));
  annihilator->add_option("--degree-bound", o.annihilator_bound, "d-degree bound")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  try {
    const std::string source = read_file(o.file);
    const auto specs = parse(source);
    json report = report_envelope(command, source);
    std::string csv;
    if (o.format == "csv" && command != "growth" && command != "coeff-growth")
      throw UsageError("csv output is only available for growth tables");
    bool ok = false;
    if (command == "check") ok = cmd_check(specs, o, report);
    else if (command == "oracle") ok = cmd_oracle(specs, o, report);
    else if (command == "locality") ok = cmd_locality(specs, o, report);
    else if (command == "identity") ok = cmd_identity(specs, o, report);
    else if (command == "growth") ok = cmd_growth(specs, o, report, csv, false);
    else if (command == "coeff-growth") ok = cmd_growth(specs, o, report, csv, true);
    else if (command == "recognize") ok = cmd_recognize(specs, o, report);
    else if (command == "transport") ok = cmd_transport(specs, o, report);
    else if (command == "simplicity") ok = cmd_simplicity(specs, o, report);
    else if (command == "annihilator") ok = cmd_annihilator(specs, o, report);
    report["pass"] = ok;

    if (o.format == "json") std::cout << report.dump(2) << "\n";
    else if (o.format == "csv") std::cout << csv;
    else render_text(std::cout, report, 0);
    return ok ? 0 : 1;
  } catch (const ParseError& e) {
    std::cerr << o.file << ":" << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "confal: " << e.what() << "\n";
    return 2;
  } catch (const ResourceBound& e) {
    std::cerr << "confal: resource bound: " << e.what() << "\n";
    return 3;
  } catch (const BoundExceeded& e) {
    std::cerr << "confal: bound exceeded: " << e.what() << "\n";
    return 3;
  } catch (const ClosureBoundExceeded& e) {
    std::cerr << "confal: closure bound exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "confal: " << e.what() << "\n";
    return 2;
  }
}
