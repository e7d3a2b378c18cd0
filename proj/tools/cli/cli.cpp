// Copyright 2026 The redspec Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli/cli.hpp"

#include <CLI11.hpp>
#include <functional>
#include <iomanip>
#include <json.hpp>
#include <map>
#include <optional>

#include "redspec/error.hpp"
#include "redspec/genus/genus.hpp"
#include "redspec/genus/ramification_dsl.hpp"
#include "redspec/genus/table1.hpp"
#include "redspec/permcore/actions.hpp"
#include "redspec/permcore/blocks.hpp"
#include "redspec/permcore/group_io.hpp"
#include "redspec/permcore/normal.hpp"
#include "redspec/redset/redset.hpp"
#include "redspec/speclab/scan.hpp"
#include "redspec/structure/chains.hpp"
#include "redspec/structure/quotients.hpp"

namespace redspec::cli {

namespace {

using json = nlohmann::json;  // std::map objects: keys come out sorted

struct Globals {
  bool json = false;
  unsigned threads = 1;
  std::vector<std::string> caps;
  Limits limits = Limits::defaults();
};

void apply_caps(Globals& g) {
  static const std::map<std::string, std::function<void(Limits&, std::uint64_t)>> setters = {
      {"coset_index", [](Limits& l, std::uint64_t v) { l.coset_index = v; }},
      {"subset_orbit", [](Limits& l, std::uint64_t v) { l.subset_orbit = v; }},
      {"element_enumeration", [](Limits& l, std::uint64_t v) { l.element_enumeration = v; }},
      {"small_group", [](Limits& l, std::uint64_t v) { l.small_group = v; }},
      {"structure_order", [](Limits& l, std::uint64_t v) { l.structure_order = static_cast<double>(v); }},
      {"product_degree", [](Limits& l, std::uint64_t v) { l.product_degree = v; }},
      {"transversal_entries", [](Limits& l, std::uint64_t v) { l.transversal_entries = v; }},
      {"intransitive_degree", [](Limits& l, std::uint64_t v) { l.intransitive_degree = v; }},
      {"conjugacy_test_index", [](Limits& l, std::uint64_t v) { l.conjugacy_test_index = v; }},
      {"normal_samples", [](Limits& l, std::uint64_t v) { l.normal_samples = static_cast<std::uint32_t>(v); }},
      {"simple_factor_elements", [](Limits& l, std::uint64_t v) { l.simple_factor_elements = v; }},
  };
  for (const auto& c : g.caps) {
    const auto eq = c.find('=');
    if (eq == std::string::npos) throw CLI::ValidationError("--cap", "expected NAME=VALUE, got " + c);
    const std::string name = c.substr(0, eq);
    auto it = setters.find(name);
    if (it == setters.end()) throw CLI::ValidationError("--cap", "unknown cap " + name);
    std::uint64_t v = 0;
    try {
      std::size_t used = 0;
      v = std::stoull(c.substr(eq + 1), &used);
      if (used != c.size() - eq - 1) throw std::invalid_argument(c);
    } catch (const std::exception&) {
      throw CLI::ValidationError("--cap", "bad value in " + c);
    }
    it->second(g.limits, v);
  }
}

json points_json(const std::vector<Point>& pts) {
  json a = json::array();
  for (auto p : pts) a.push_back(p + 1);
  return a;
}

json partition_list(const std::vector<std::vector<Point>>& parts) {
  json a = json::array();
  for (const auto& p : parts) a.push_back(points_json(p));
  return a;
}

json generators_json(const std::vector<Permutation>& gens) {
  json a = json::array();
  for (const auto& g : gens) a.push_back(g.to_string());
  return a;
}

json step_json(const StepClass& s) {
  return {{"step", s.step},           {"index", s.index.get_str()},      {"maximal", s.maximal},
          {"solvable", s.solvable},   {"affine", s.affine},              {"quotient_free", s.quotient_free},
          {"exact", s.exact}};
}

void emit(std::ostream& out, const json& j) { out << j.dump() << "\n"; }

// ---------------------------------------------------------------- group-info

struct GroupInfoArgs {
  std::string group;
};

int group_info(const Globals& g, const GroupInfoArgs& a, std::ostream& out) {
  const GroupText text = read_group_file(a.group);
  const PermGroup grp = text.group();
  json j;
  j["degree"] = grp.degree();
  j["order"] = grp.order().get_str();
  j["generators"] = generators_json(text.generators);
  j["orbits"] = partition_list(orbits(grp));
  const bool transitive = is_transitive(grp);
  j["transitive"] = transitive;
  j["solvable"] = is_solvable(grp);
  j["primitive"] = nullptr;
  j["block_systems"] = json::array();
  if (transitive) {
    j["primitive"] = is_primitive(grp);
    for (const auto& bs : block_systems(grp)) j["block_systems"].push_back(partition_list(bs));
  }
  json factors = json::array();
  for (const auto& f : nonabelian_composition_factors(grp, g.limits)) factors.push_back(f.name);
  j["nonabelian_composition_factors"] = factors;
  if (g.json) {
    emit(out, j);
    return kOk;
  }
  out << "degree " << grp.degree() << ", order " << grp.order().get_str() << ", "
      << (transitive ? "transitive" : "intransitive") << ", " << (is_solvable(grp) ? "solvable" : "nonsolvable")
      << "\n";
  if (transitive) {
    out << "primitive: " << (j["primitive"].get<bool>() ? "yes" : "no") << "\n";
    out << "nontrivial block systems: " << j["block_systems"].size() << "\n";
    for (const auto& bs : j["block_systems"]) out << "  " << bs.dump() << "\n";
  } else {
    out << "orbits: " << j["orbits"].dump() << "\n";
  }
  out << "nonabelian composition factors: " << (factors.empty() ? "none" : factors.dump()) << "\n";
  return kOk;
}

// -------------------------------------------------------------------- genus

struct GenusArgs {
  std::string ramification;
  std::string tuple;
  std::string action = "natural";
};

int genus_cmd(const Globals& g, const GenusArgs& a, std::ostream& out) {
  RamificationType r;
  std::string source;
  std::optional<std::int64_t> genus;
  if (!a.ramification.empty()) {
    r = parse_ramification(a.ramification);
    source = "ramification";
    if (a.action == "two-set") {
      RamificationType t;
      t.degree = r.degree * (r.degree - 1) / 2;
      for (const auto& e : r.entries) t.entries.push_back(two_set_cycle_type(e));
      t.validate();
      r = std::move(t);
    }
  } else {
    const GroupText text = read_group_file(a.tuple);
    BranchTuple t(text.generators, text.degree);
    source = "tuple";
    if (a.action == "two-set") {
      Action act = two_set_action(t.group());
      r.degree = act.degree();
      genus = action_genus(t, act, g.limits);  // rejects intransitive images
      r.entries = action_cycle_types(t, act);
      for (auto& e : r.entries) canonicalize(e);
    } else {
      r = t.ramification_type();
    }
  }
  if (!genus) genus = ramification_genus(r);
  std::int64_t sum = 0;
  for (const auto& e : r.entries) sum += partition_index(e);
  if (g.json) {
    emit(out, {{"source", source},
               {"action", a.action},
               {"degree", r.degree},
               {"ramification", r.to_string()},
               {"index_sum", sum},
               {"genus", *genus}});
    return kOk;
  }
  out << "genus " << *genus << " (degree " << r.degree << ", " << a.action << " action, index sum " << sum << ")\n";
  out << "ramification " << r.to_string() << "\n";
  return kOk;
}

// ------------------------------------------------------------------- table1

struct Table1Args {
  std::optional<int> row;
  std::optional<long> ell;
  long a = 0;
  bool all = false;
  long lo = 20, hi = 60;
};

json table1_json(const Table1Report& r) {
  return {{"row", r.row},
          {"l", r.l},
          {"a", r.a},
          {"natural", r.natural.to_string()},
          {"two_set", r.two_set.to_string()},
          {"natural_genus", r.natural_genus},
          {"two_set_genus", r.two_set_genus},
          {"admissible", r.admissible}};
}

int table1_cmd(const Globals& g, const Table1Args& a, std::ostream& out) {
  std::vector<Table1Report> reports;
  if (a.all) {
    for (int row = 1; row <= kTable1Rows; ++row) {
      if (a.row && *a.row != row) continue;
      for (const auto& [l, aa] : table1_parameters(row, a.lo, a.hi)) reports.push_back(table1_verify(row, l, aa));
    }
  } else {
    if (!a.row || !a.ell) throw CLI::RequiredError("table1 needs --row and --ell, or --all");
    reports.push_back(table1_verify(*a.row, *a.ell, a.a));
  }
  bool all_ok = true;
  for (const auto& r : reports) all_ok = all_ok && r.admissible;
  if (g.json) {
    if (!a.all) {
      emit(out, table1_json(reports.front()));
    } else {
      json rows = json::array();
      for (const auto& r : reports) rows.push_back(table1_json(r));
      emit(out, {{"reports", rows}, {"count", reports.size()}, {"all_admissible", all_ok}});
    }
    return kOk;
  }
  out << reports.size() << " report(s), " << (all_ok ? "all" : "not all") << " with both genera 0\n";
  out << "row      l    a  natural  two-set\n";
  for (const auto& r : reports) {
    out << std::setw(3) << r.row << std::setw(7) << r.l << std::setw(5) << r.a << std::setw(9) << r.natural_genus
        << std::setw(9) << r.two_set_genus << "\n";
  }
  return kOk;
}

// --------------------------------------------------------- redset candidates

struct CandidatesArgs {
  std::string group;
  std::string tuple;
  std::optional<std::size_t> infinity;
};

json candidate_json(const Candidate& c) {
  json j;
  j["index"] = c.index;
  j["order"] = c.d.order().get_str();
  j["dg_eq_a"] = c.dg_eq_a;
  j["maximal_intransitive"] = c.maximal_intransitive;
  j["genus"] = c.genus ? json(*c.genus) : json(nullptr);
  j["companion_genus"] = c.companion_genus ? json(*c.companion_genus) : json(nullptr);
  j["siegel"] = c.siegel ? json(*c.siegel) : json(nullptr);
  j["generators"] = generators_json(c.d.reduced_generators());
  json types = json::array();
  for (const auto& p : c.cycle_types) types.push_back(format_partition(p));
  j["cycle_types"] = types;
  if (!c.reason.empty()) j["reason"] = c.reason;
  return j;
}

int candidates_cmd(const Globals& g, const CandidatesArgs& a, std::ostream& out) {
  const GroupText tt = read_group_file(a.tuple);
  BranchTuple tuple(tt.generators, tt.degree);
  std::optional<MonodromyPair> m;
  if (a.group.empty()) {
    m.emplace(MonodromyPair::geometric(tuple, a.infinity));
  } else {
    const GroupText at = read_group_file(a.group);
    m.emplace(at.group(), tuple.group(), tuple, a.infinity);
  }
  const RedSetReport r = red_candidates(*m, g.limits);
  if (g.json) {
    json cands = json::array(), excl = json::array();
    for (const auto& c : r.candidates) cands.push_back(candidate_json(c));
    for (const auto& c : r.excluded) excl.push_back(candidate_json(c));
    emit(out, {{"degree", r.degree}, {"candidates", cands}, {"excluded", excl}, {"notes", r.notes}});
    return kOk;
  }
  out << r.candidates.size() << " candidate(s) of genus <= 1 among maximal intransitive subgroups, degree "
      << r.degree << "\n";
  out << "index  order  genus  siegel  generators\n";
  for (const auto& c : r.candidates) {
    out << std::setw(5) << c.index << std::setw(7) << c.d.order().get_str() << std::setw(7)
        << (c.genus ? std::to_string(*c.genus) : "-") << std::setw(8)
        << (c.siegel ? (*c.siegel ? "yes" : "no") : "-") << "  ";
    for (const auto& x : c.d.reduced_generators()) out << x.to_string() << " ";
    out << "\n";
  }
  for (const auto& c : r.excluded) out << "excluded index " << c.index << ": " << c.reason << "\n";
  for (const auto& n : r.notes) out << "note: " << n << "\n";
  return kOk;
}

// ------------------------------------------------------------- wreath-scan

struct WreathArgs {
  unsigned k = 5;
};

int wreath_cmd(const Globals& g, const WreathArgs& a, std::ostream& out) {
  const WreathScanResult r = wreath_scan(a.k, g.threads, g.limits);
  if (g.json) {
    json flagged = json::array();
    for (const auto& t : r.flagged) {
      flagged.push_back({{"c2", r.order2[t.c2].label},
                         {"c4", r.order4[t.c4].label},
                         {"c5", r.order5[t.c5].label},
                         {"sum", t.sum},
                         {"genus", t.genus}});
    }
    emit(out, {{"k", r.k}, {"flagged", flagged}});
    return kOk;
  }
  out << "k=" << r.k << ": " << r.order2.size() << " + " << r.order4.size() << " + " << r.order5.size()
      << " classes, " << r.triples << " triples, " << r.flagged.size() << " flagged\n";
  for (const auto& t : r.flagged) {
    out << "  " << r.order2[t.c2].label << " | " << r.order4[t.c4].label << " | " << r.order5[t.c5].label
        << "  sum " << t.sum << "  genus " << t.genus << "\n";
  }
  return kOk;
}

// ------------------------------------------------------------- lemma-check

struct LemmaArgs {
  std::string chain;
  std::string u;
  std::string lemma = "solvable";
  bool no_kernel_distinctness = false;
};

int lemma_cmd(const Globals& g, const LemmaArgs& a, std::ostream& out) {
  const ChainSpec h = ChainSpec::from_text(read_group_file(a.chain));
  const GroupText ut = read_group_file(a.u);
  TransitivityVerdict v;
  if (a.lemma == "solvable") {
    if (ut.subgroups.empty()) {
      v = transitive_by_solvable_quotient(h, ut.group(), g.limits);
    } else {
      v = transitive_by_solvable_quotient(h, ChainSpec::from_text(ut), g.limits);
    }
  } else {
    if (ut.subgroups.empty()) throw InputError("the affine chain check needs subgroup lines in " + a.u);
    AffineOptions o;
    o.require_kernel_distinctness = !a.no_kernel_distinctness;
    v = transitive_by_affine_chain(h, ChainSpec::from_text(ut), o, g.limits);
  }
  if (g.json) {
    json hs = json::array(), us = json::array();
    for (const auto& s : v.h_steps) hs.push_back(step_json(s));
    for (const auto& s : v.u_steps) us.push_back(step_json(s));
    emit(out, {{"lemma", a.lemma},
               {"status", to_string(v.status)},
               {"violation", v.violation},
               {"direct_transitive", v.direct_transitive},
               {"h_steps", hs},
               {"u_steps", us}});
    return kOk;
  }
  out << a.lemma << " check: " << to_string(v.status);
  if (!v.violation.empty()) out << " (" << v.violation << ")";
  out << "; direct orbit check: " << (v.direct_transitive ? "transitive" : "intransitive") << "\n";
  out << "chain step  index  maximal  solvable  affine\n";
  for (const auto& [name, steps] : {std::pair{"H", &v.h_steps}, std::pair{"u", &v.u_steps}}) {
    for (const auto& s : *steps) {
      out << std::setw(5) << name << std::setw(5) << s.step << std::setw(7) << s.index.get_str() << std::setw(9)
          << (s.maximal ? "yes" : "no") << std::setw(10) << (s.solvable ? "yes" : "no") << std::setw(8)
          << (s.affine ? "yes" : "no") << "\n";
    }
  }
  return kOk;
}

// ------------------------------------------------------------ speclab scan

struct ScanArgs {
  std::string chain;
  std::size_t f1_index = 1;
  std::vector<long> ints;
  std::vector<unsigned long> grid;
  std::size_t recombination_cap = FactorOptions{}.recombination_cap;
};

json scan_json(const ScanReport& r) {
  json recs = json::array();
  for (const auto& rec : r.records) {
    json factors = json::array();
    for (const auto& f : rec.factorization.factors)
      factors.push_back({{"poly", to_string(f.poly)}, {"multiplicity", f.multiplicity}, {"certified", f.irreducible}});
    recs.push_back({{"t0", rec.t0.get_str()},
                    {"reducible", to_string(rec.reducible)},
                    {"in_value_set", rec.in_value_set},
                    {"witness", rec.witness ? json(rec.witness->get_str()) : json(nullptr)},
                    {"discriminant_point", rec.discriminant_point},
                    {"reducible_by_identity", rec.reducible_by_identity},
                    {"status", to_string(rec.factorization.status)},
                    {"content", rec.factorization.content.get_str()},
                    {"factors", factors},
                    {"factor_degrees", rec.factor_degrees},
                    {"certificate", rec.factorization.certificate}});
  }
  json exc = json::array();
  for (const auto& e : r.exceptions) exc.push_back(e.get_str());
  return {{"window", r.window},         {"f", to_string(r.f)},
          {"f1", to_string(r.f1)},      {"records", recs},
          {"hits", r.hits},             {"unknowns", r.unknowns},
          {"exceptions", exc},          {"discriminant_points", r.discriminant_points},
          {"notes", r.notes}};
}

int scan_cmd(const Globals& g, const ScanArgs& a, std::ostream& out) {
  const auto chain = parse_chain(read_text_file(a.chain));
  ScanWindow w = a.ints.empty() ? ScanWindow::grid(a.grid.at(0), a.grid.at(1))
                                : ScanWindow::integers(a.ints.at(0), a.ints.at(1));
  ScanOptions o;
  o.threads = g.threads;
  o.factor.recombination_cap = a.recombination_cap;
  const ScanReport r = scan_window(chain, a.f1_index, w, o);
  if (g.json) {
    emit(out, scan_json(r));
  } else {
    out << r.window << ": " << r.records.size() << " points, " << r.hits << " reducible, " << r.exceptions.size()
        << " exception(s), " << r.unknowns << " unknown, " << r.discriminant_points << " discriminant point(s)\n";
    out << "f = " << to_string(r.f) << ", f1 = " << to_string(r.f1) << "\n";
    for (const auto& rec : r.records) {
      if (rec.reducible == Reducibility::kIrreducible) continue;
      out << std::setw(8) << rec.t0.get_str() << "  " << to_string(rec.reducible)
          << (rec.in_value_set ? "  f1(" + rec.witness->get_str() + ")" : "  outside f1(Q)")
          << (rec.discriminant_point ? "  discriminant" : "") << "  degrees";
      for (auto d : rec.factor_degrees) out << " " << d;
      out << "\n";
    }
    for (const auto& n : r.notes) out << "note: " << n << "\n";
  }
  return r.unknowns > 0 ? kUnknowns : kOk;
}

// ------------------------------------------------------------------ wiring

void add_globals(CLI::App* app, Globals& g) {
  app->add_flag("--json", g.json, "Emit a JSON report with sorted keys");
  app->add_option("--threads", g.threads, "Worker threads for scans")->check(CLI::Range(1u, 256u));
  app->add_option("--cap", g.caps, "Override a resource cap, NAME=VALUE");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"redspec: reducible specializations, monodromy groups and polynomial scans", "redspec"};
  app.require_subcommand(1);
  Globals g;
  add_globals(&app, g);
  std::function<int()> action;

  GroupInfoArgs gi;
  auto* cgi = app.add_subcommand("group-info", "Order, orbits, blocks and factors of a permutation group");
  cgi->add_option("--group", gi.group, "Group file")->required()->check(CLI::ExistingFile);
  cgi->callback([&] { action = [&] { return group_info(g, gi, out); }; });

  GenusArgs ga;
  auto* cgen = app.add_subcommand("genus", "Riemann-Hurwitz genus of a ramification type or branch tuple");
  auto* ram = cgen->add_option("--ramification", ga.ramification, "e.g. \"[l],[a,l-a],[1^{l-2},2] where l=21,a=1\"");
  auto* tup = cgen->add_option("--tuple", ga.tuple, "Branch tuple file")->check(CLI::ExistingFile);
  ram->excludes(tup);
  cgen->add_option("--action", ga.action, "natural or two-set")->check(CLI::IsMember({"natural", "two-set"}));
  cgen->callback([&] {
    if (ga.ramification.empty() && ga.tuple.empty())
      throw CLI::RequiredError("genus needs --ramification or --tuple");
    action = [&] { return genus_cmd(g, ga, out); };
  });

  Table1Args ta;
  auto* ct = app.add_subcommand("table1", "Natural and 2-set genera of the genus-0 families");
  ct->add_option("--row", ta.row, "Row 1-9")->check(CLI::Range(1, kTable1Rows));
  ct->add_option("--ell", ta.ell, "Degree l");
  ct->add_option("--a", ta.a, "Row 1 parameter a");
  ct->add_flag("--all", ta.all, "Every admissible (l, a) with lo < l <= hi");
  ct->add_option("--lo", ta.lo, "Exclusive lower bound for --all");
  ct->add_option("--hi", ta.hi, "Inclusive upper bound for --all");
  ct->callback([&] { action = [&] { return table1_cmd(g, ta, out); }; });

  CandidatesArgs ca;
  auto setup_candidates = [&](CLI::App* c) {
    add_globals(c, g);
    c->add_option("--group", ca.group, "Arithmetic group A; defaults to the group of the tuple")
        ->check(CLI::ExistingFile);
    c->add_option("--tuple", ca.tuple, "Branch tuple generating G")->required()->check(CLI::ExistingFile);
    c->add_option("--infinity", ca.infinity, "0-based tuple entry over infinity");
    c->callback([&] { action = [&] { return candidates_cmd(g, ca, out); }; });
  };
  WreathArgs wa;
  auto setup_wreath = [&](CLI::App* c) {
    add_globals(c, g);
    c->add_option("--k", wa.k, "Base degree k of S_k wr S_5")->required();
    c->callback([&] { action = [&] { return wreath_cmd(g, wa, out); }; });
  };
  ScanArgs sa;
  auto setup_scan = [&](CLI::App* c) {
    add_globals(c, g);
    c->add_option("--chain", sa.chain, "Chain file, f_1 first")->required()->check(CLI::ExistingFile);
    c->add_option("--f1-index", sa.f1_index, "f1 = f_1 o ... o f_i");
    auto* ints = c->add_option("--ints", sa.ints, "Integer window LO HI")->expected(2);
    auto* grid = c->add_option("--grid", sa.grid, "Fractions a/b with |a| <= H, b <= B")->expected(2);
    ints->excludes(grid);
    c->add_option("--recombination-cap", sa.recombination_cap,
                  "Largest modular factor count tried before a verdict is unknown");
    c->callback([&] {
      if (sa.ints.empty() && sa.grid.empty()) throw CLI::RequiredError("scan needs --ints or --grid");
      action = [&] { return scan_cmd(g, sa, out); };
    });
  };

  setup_candidates(app.add_subcommand("redset-candidates", "Maximal intransitive subgroups of genus <= 1"));
  setup_wreath(app.add_subcommand("wreath-scan", "Genus scan over classes of S_k wr S_5 in product action"));
  setup_scan(app.add_subcommand("speclab-scan", "Reducibility of f(x) - t0 over a window"));
  auto* redset = app.add_subcommand("redset", "Alias group: candidates, wreath-scan");
  redset->require_subcommand(1);
  setup_candidates(redset->add_subcommand("candidates", "Same as redset-candidates"));
  setup_wreath(redset->add_subcommand("wreath-scan", "Same as wreath-scan"));
  auto* speclab = app.add_subcommand("speclab", "Alias group: scan");
  speclab->require_subcommand(1);
  setup_scan(speclab->add_subcommand("scan", "Same as speclab-scan"));

  LemmaArgs la;
  auto* cl = app.add_subcommand("lemma-check", "Transitivity of u on cosets of H_0 via chain criteria");
  add_globals(cl, g);
  cl->add_option("--chain", la.chain, "Chain file for H_0 < ... < G")->required()->check(CLI::ExistingFile);
  cl->add_option("--u", la.u, "Group file for u, with subgroup lines for a u-chain")
      ->required()
      ->check(CLI::ExistingFile);
  cl->add_option("--lemma", la.lemma, "solvable or affine")->check(CLI::IsMember({"solvable", "affine"}));
  cl->add_flag("--no-kernel-distinctness", la.no_kernel_distinctness,
               "Drop the distinct block kernels hypothesis (verdicts tagged beyond-lemma)");
  cl->callback([&] { action = [&] { return lemma_cmd(g, la, out); }; });

  for (auto* sub : {cgi, cgen, ct}) add_globals(sub, g);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    apply_caps(g);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }
  if (!action) return kUsageError;
  try {
    return action();
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsageError;
  } catch (const ResourceError& e) {
    err << "resource cap " << e.cap() << " exceeded: " << e.what() << "\n";
    return kDomainError;
  } catch (const Error& e) {
    err << to_string(e.kind()) << " error: " << e.what() << "\n";
    return kDomainError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
}

}  // namespace redspec::cli
