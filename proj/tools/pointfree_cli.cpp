#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "pointfree/branch.hpp"
#include "pointfree/corpus.hpp"
#include "pointfree/json_io.hpp"
#include "pointfree/nonarch.hpp"
#include "pointfree/nucleus.hpp"
#include "pointfree/padic.hpp"
#include "pointfree/verify.hpp"

using namespace pointfree;

namespace {

struct GlobalOpts {
  std::string format = "json";  // json | text | dot
  std::string output;           // empty = stdout
  uint64_t seed = 0;
  uint64_t bound = 1 << 20;
  bool timing = false;
};

void emit(const GlobalOpts& g, const std::string& payload) {
  if (g.output.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(g.output);
  if (!out) throw ParseError(g.output, "cannot write " + g.output);
  out << payload;
}

void emit_json(const GlobalOpts& g, const json& j) { emit(g, j.dump(2) + "\n"); }

uint64_t enum_bound(const GlobalOpts& g) {
  if (const char* env = std::getenv("POINTFREE_ENUM_BOUND")) {
    long long v = std::atoll(env);
    if (v > 0) return uint64_t(v);
  }
  return g.bound;
}

Mask parse_base(const FiniteFrame& f, const std::string& spec) {
  if (spec == "atoms") {
    Mask m = f.atoms();
    m.set(f.top());
    return m;
  }
  if (spec == "all") {
    Mask m = Mask::full(f.size());
    if (f.size() > 1) m.reset(f.bottom());
    return m;
  }
  Mask m(f.size());
  std::string token;
  std::istringstream in(spec);
  // semicolons separate labels when the labels themselves carry commas
  char sep = spec.find(';') != std::string::npos ? ';' : ',';
  while (std::getline(in, token, sep)) {
    int found = -1;
    for (int i = 0; i < f.size(); ++i)
      if (f.label(i) == token) {
        found = i;
        break;
      }
    if (found == -1) throw ParseError(spec, "no frame element labelled \"" + token + "\"");
    m.set(found);
  }
  return m;
}

ClosureMap parse_opens_nucleus(const FiniteFrame& opens, const BranchSet& bs,
                               const std::string& spec) {
  if (spec == "identity") return identity_map(opens);
  if (spec == "top") return constant_top_map(opens);
  if (spec.rfind("closed:", 0) == 0) {
    std::string bitstr = spec.substr(7);
    Mask u(int(bs.branches.size()));
    if (int(bitstr.size()) != u.width())
      throw ParseError(spec, "closed nucleus wants one bit per branch");
    for (int i = 0; i < u.width(); ++i)
      if (bitstr[i] == '1') u.set(i);
    return closed_nucleus(opens, bs.find_open(u));
  }
  return nucleus_from_json(opens, load_json_file(spec), spec);
}

std::string relation_name(BallRelation r) {
  switch (r) {
    case BallRelation::Disjoint: return "disjoint";
    case BallRelation::LeftInsideRight: return "left-inside-right";
    case BallRelation::RightInsideLeft: return "right-inside-left";
    case BallRelation::Equal: return "equal";
  }
  return "?";
}

json point_list_json(const FiniteFrame& f, const std::vector<Point>& pts) {
  json arr = json::array();
  for (const auto& p : pts) {
    json kernel = json::array();
    for (int a : p.kernel.bits()) kernel.push_back(f.label(a));
    arr.push_back(kernel);
  }
  return arr;
}

int report_exit(const Report& rep) { return rep.all_pass() ? 0 : 1; }

void print_report(const GlobalOpts& g, const Report& rep) {
  if (g.format == "text") {
    std::ostringstream os;
    os << "# " << rep.command << " (seed " << rep.seed << ", max size " << rep.max_size
       << ")\n";
    for (const auto& r : rep.records)
      os << (r.pass ? "[pass] " : "[FAIL] ") << r.name << " — " << r.anchor << ": " << r.witness
         << "\n";
    os << (rep.all_pass() ? "all checks passed\n" : "some checks FAILED\n");
    emit(g, os.str());
  } else {
    emit_json(g, report_to_json(rep, g.timing));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite pointfree-topology workbench: frames, non-archimedean bases, "
               "tree branch spaces, nuclei and exact p-adic ball algebra"};
  app.require_subcommand(1);
  GlobalOpts g;
  app.add_option("--format", g.format, "output format: json, text or dot")
      ->check(CLI::IsMember({"json", "text", "dot"}));
  app.add_option("--output", g.output, "write output to a file instead of stdout");
  app.add_option("--seed", g.seed, "seed for randomized corpora");
  app.add_option("--bound", g.bound, "enumeration bound (env POINTFREE_ENUM_BOUND overrides)");
  app.add_flag("--timing", g.timing, "include timing in reports");

  std::string frame_path, base_spec = "atoms", input_path, nucleus_spec = "identity";
  std::string element_label, generate_kind;
  int depth = 2, width = 2, vmin = 0, max_size = 64;
  long long prime = 2;
  std::string ball_a, ball_b;

  auto* frame_cmd = app.add_subcommand("frame", "frame construction and separation checks");
  auto* frame_check = frame_cmd->add_subcommand("check", "validate a frame file");
  auto* frame_points = frame_cmd->add_subcommand("points", "enumerate the point space");
  auto* frame_seps = frame_cmd->add_subcommand("separations", "separation-property report");
  for (auto* sc : {frame_check, frame_points, frame_seps})
    sc->add_option("--frame", frame_path, "frame JSON file")->required();

  auto* nonarch_cmd = app.add_subcommand("nonarch", "non-archimedean base machinery");
  auto* na_check = nonarch_cmd->add_subcommand("check", "trichotomy classification of a base");
  auto* na_tree = nonarch_cmd->add_subcommand("tree-base", "build the tree base");
  auto* na_dec = nonarch_cmd->add_subcommand("decompose", "canonical disjoint decomposition");
  for (auto* sc : {na_check, na_tree, na_dec}) {
    sc->add_option("--frame", frame_path, "frame JSON file")->required();
    sc->add_option("--base", base_spec, "labels split on ; (or , when label-safe), or: atoms, all");
  }
  na_dec->add_option("--element", element_label, "frame element label")->required();

  auto* nuclei_cmd = app.add_subcommand("nuclei", "nuclei, quotients and the assembly");
  auto* nu_enum = nuclei_cmd->add_subcommand("enumerate", "all nuclei on a small frame");
  auto* nu_quot = nuclei_cmd->add_subcommand("quotient", "quotient frame of a nucleus");
  auto* nu_vq = nuclei_cmd->add_subcommand("verify-quot", "image bases stay non-archimedean");
  for (auto* sc : {nu_enum, nu_quot, nu_vq})
    sc->add_option("--frame", frame_path, "frame JSON file")->required();
  nu_quot->add_option("--nucleus", nucleus_spec, "nucleus JSON file")->required();
  nu_vq->add_option("--base", base_spec, "labels split on ; (or , when label-safe), or: atoms, all");

  auto* tree_cmd = app.add_subcommand("tree", "branch spaces and the operator calculus");
  auto* tr_branches = tree_cmd->add_subcommand("branches", "branch space of a tree");
  auto* tr_rank = tree_cmd->add_subcommand("rank", "derivative rank");
  auto* tr_ker = tree_cmd->add_subcommand("ker", "branch-hitting nucleus table");
  auto* tr_ler = tree_cmd->add_subcommand("ler", "composite nucleus table");
  auto* tr_gbi = tree_cmd->add_subcommand("gbi", "bar-induction condition report");
  auto* tr_eta = tree_cmd->add_subcommand("eta", "quotient presentation from a tree base");
  for (auto* sc : {tr_branches, tr_rank, tr_ker, tr_ler, tr_gbi}) {
    sc->add_option("--input", input_path, "tree JSON file");
    sc->add_option("--generate", generate_kind, "cantor, baire or koenig")
        ->check(CLI::IsMember({"cantor", "baire", "koenig"}));
    sc->add_option("--depth", depth, "generator depth");
    sc->add_option("--width", width, "generator width");
  }
  for (auto* sc : {tr_ler, tr_gbi})
    sc->add_option("--nucleus", nucleus_spec,
                   "identity, top, closed:<branch bits>, or a JSON table on the opens");
  tr_eta->add_option("--frame", frame_path, "frame JSON file")->required();
  tr_eta->add_option("--base", base_spec, "labels split on ; (or , when label-safe), or: atoms, all");

  auto* padic_cmd = app.add_subcommand("padic", "exact p-adic ball algebra");
  auto* pa_tree = padic_cmd->add_subcommand("tree", "coset tree of the p-adic integers");
  auto* pa_verify = padic_cmd->add_subcommand("verify", "generator relations on a window");
  auto* pa_tri = padic_cmd->add_subcommand("trichotomy", "classify two balls");
  for (auto* sc : {pa_tree, pa_verify}) {
    sc->add_option("-p,--prime", prime, "prime")->required();
    sc->add_option("-d,--depth", depth, "depth")->required();
  }
  pa_tree->add_option("--vmin", vmin, "negative scale floor (forest of coset trees)");
  pa_tri->add_option("ball_a", ball_a, "first ball, p^k*Zp+c")->required();
  pa_tri->add_option("ball_b", ball_b, "second ball, p^k*Zp+c")->required();

  int gbi_nodes = 9;
  auto* vp = app.add_subcommand("verify-paper", "run the full theorem regression suite");
  vp->add_option("--max-size", max_size, "frame carrier cap for the corpus");
  vp->add_option("--trees", gbi_nodes, "node cap for the exhaustive bar-induction sweep");

  // global options may trail the subcommand
  for (auto* sub : app.get_subcommands({})) {
    sub->fallthrough();
    for (auto* inner : sub->get_subcommands({})) inner->fallthrough();
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (frame_check->parsed() || frame_points->parsed() || frame_seps->parsed()) {
      FiniteFrame f = frame_from_json(load_json_file(frame_path), frame_path);
      if (frame_check->parsed()) {
        if (g.format == "dot") {
          emit(g, poset_to_dot(f.carrier()));
          return 0;
        }
        json j{{"size", f.size()},
               {"bottom", f.label(f.bottom())},
               {"top", f.label(f.top())},
               {"atoms", f.atoms().count()},
               {"complemented", f.complemented_elements().count()},
               {"valid", true}};
        emit_json(g, j);
        return 0;
      }
      if (frame_points->parsed()) {
        auto pts = points(f);
        emit_json(g, json{{"count", pts.size()}, {"kernels", point_list_json(f, pts)}});
        return 0;
      }
      SeparationReport s = separations(f);
      json wb = json::array();
      for (int a : s.zero_dim_witness_base.bits()) wb.push_back(f.label(a));
      emit_json(g, json{{"zero_dimensional", s.zero_dimensional},
                        {"regular", s.regular},
                        {"completely_regular", s.completely_regular},
                        {"fit", s.fit},
                        {"complemented_elements", wb}});
      return 0;
    }

    if (na_check->parsed() || na_tree->parsed() || na_dec->parsed()) {
      FiniteFrame f = frame_from_json(load_json_file(frame_path), frame_path);
      if (na_check->parsed()) {
        TrichotomyReport rep = check_nonarch_base(f, parse_base(f, base_spec));
        json j{{"nonarchimedean", rep.holds}, {"base_law", rep.base_law}};
        if (!rep.base_law) j["base_failure"] = f.label(rep.base_failure);
        if (rep.violating_pair)
          j["violating_pair"] = {f.label(rep.violating_pair->first),
                                 f.label(rep.violating_pair->second)};
        // flag the known gap: trichotomy without zero-dimensionality
        Mask wit;
        bool zd = is_zero_dimensional(f, &wit);
        j["zero_dimensional"] = zd;
        if (rep.holds && !zd)
          j["note"] = "non-archimedean base on a frame that is not zero-dimensional; the "
                      "unconditional zero-dimensionality claim fails here";
        emit_json(g, j);
        return rep.ok() ? 0 : 1;
      }
      BaseSet b = make_base(f, parse_base(f, base_spec));
      if (na_tree->parsed()) {
        TreeBase tb = build_tree_base(f, b);
        if (g.format == "dot") {
          emit(g, tree_base_to_dot(tb));
        } else {
          json j = tree_to_json(tb.tree);
          j["levels"] = json::array();
          for (const auto& lvl : tb.levels) {
            json names = json::array();
            for (int v : lvl.bits()) names.push_back(tb.tree.label(v));
            j["levels"].push_back(names);
          }
          emit_json(g, j);
        }
        return 0;
      }
      int elem = -1;
      for (int i = 0; i < f.size(); ++i)
        if (f.label(i) == element_label) elem = i;
      if (elem == -1) throw ParseError(element_label, "unknown frame element");
      auto parts = canonical_decomposition(f, b, elem);
      json names = json::array();
      for (int x : parts) names.push_back(f.label(x));
      emit_json(g, json{{"element", f.label(elem)}, {"decomposition", names}});
      return 0;
    }

    if (nu_enum->parsed() || nu_quot->parsed() || nu_vq->parsed()) {
      FiniteFrame f = frame_from_json(load_json_file(frame_path), frame_path);
      if (nu_enum->parsed()) {
        auto nuclei = enumerate_nuclei(f);
        AssemblyReport rep = verify_assembly(f, nuclei);
        json arr = json::array();
        for (const auto& n : nuclei) arr.push_back(nucleus_to_json(n)["table"]);
        emit_json(g, json{{"count", nuclei.size()},
                          {"assembly_frame_laws",
                           rep.closed_under_meet && rep.closed_under_join && rep.distributive},
                          {"nuclei", arr}});
        return 0;
      }
      if (nu_quot->parsed()) {
        ClosureMap j = nucleus_from_json(f, load_json_file(nucleus_spec), nucleus_spec);
        QuotientFrame q = quotient(f, j);
        json elems = json::array();
        for (int e : q.to_parent) elems.push_back(f.label(e));
        emit_json(g, json{{"fixed_count", q.frame.size()}, {"fixed_elements", elems}});
        return 0;
      }
      BaseSet b = make_base(f, parse_base(f, base_spec));
      auto nuclei = enumerate_nuclei(f);
      auto verdicts = verify_quot(f, b, nuclei);
      uint64_t failures = 0;
      for (const auto& v : verdicts)
        if (!v.ok()) ++failures;
      emit_json(g, json{{"nuclei", nuclei.size()}, {"failures", failures}});
      return failures == 0 ? 0 : 1;
    }

    if (tr_branches->parsed() || tr_rank->parsed() || tr_ker->parsed() || tr_ler->parsed() ||
        tr_gbi->parsed()) {
      Tree t = generate_kind.empty()
                   ? tree_from_json(load_json_file(input_path), input_path)
                   : tree_from_json(
                         json{{"generate", generate_kind}, {"depth", depth}, {"width", width}},
                         "<generate>");
      if (tr_rank->parsed()) {
        emit_json(g, json{{"nodes", t.size()}, {"rank", cb_rank(t)}});
        return 0;
      }
      if (tr_branches->parsed()) {
        if (g.format == "dot") {
          emit(g, tree_to_dot(t));
          return 0;
        }
        BranchSet bs = branch_space(t);
        json arr = json::array();
        for (const Mask& b : bs.branches) {
          json names = json::array();
          for (int v : b.bits()) names.push_back(t.label(v));
          arr.push_back(names);
        }
        emit_json(g, json{{"branches", arr}, {"opens", bs.opens.size()}});
        return 0;
      }
      BranchSet bs = branch_space(t);
      UpsetFamily fam = enumerate_upsets(t.to_poset(), enum_bound(g));
      if (tr_ker->parsed()) {
        OperatorTable tbl = ker_table(bs, fam);
        json upsets = json::array();
        for (const Mask& m : fam.members) upsets.push_back(m.to_string());
        json table = json::array();
        for (size_t i = 0; i < tbl.map.size(); ++i) table.push_back({int(i), tbl.map[i]});
        int fixed = 0;
        for (size_t i = 0; i < tbl.map.size(); ++i)
          if (tbl.map[i] == int(i)) ++fixed;
        emit_json(g, json{{"upsets", upsets}, {"table", table}, {"fixed", fixed}});
        return 0;
      }
      FiniteFrame of = opens_frame(bs);
      ClosureMap j = parse_opens_nucleus(of, bs, nucleus_spec);
      if (tr_ler->parsed()) {
        OperatorTable tbl = ler_table(bs, fam, j);
        OperatorTable kt = ker_table(bs, fam);
        bool ker_below = true;
        for (size_t i = 0; i < tbl.map.size(); ++i)
          if (!fam.members[kt.map[i]].subset_of(fam.members[tbl.map[i]])) ker_below = false;
        json table = json::array();
        for (size_t i = 0; i < tbl.map.size(); ++i) table.push_back({int(i), tbl.map[i]});
        emit_json(g, json{{"table", table}, {"ker_below_ler", ker_below}});
        return 0;
      }
      // gbi: find the closed part of j for the sweep entry point
      GbiReport rep;
      {
        int u = j.apply(of.bottom());
        rep = gbi_check(t, bs, fam, bs.opens[u]);
      }
      emit_json(g, json{{"gbi", rep.gbi},
                        {"tables_equal", rep.tables_equal},
                        {"fixed_family", rep.fixed_family},
                        {"quotient_spatial", rep.quotient_spatial},
                        {"agree", rep.agree()},
                        {"witness", rep.witness}});
      return rep.agree() && rep.all_true() ? 0 : 1;
    }

    if (tr_eta->parsed()) {
      FiniteFrame f = frame_from_json(load_json_file(frame_path), frame_path);
      BaseSet b = make_base(f, parse_base(f, base_spec));
      TreeBase tb = build_tree_base(f, b);
      BranchSet bs = branch_space(tb.tree);
      QuotientPresentation qp = quotient_presentation(f, tb, bs);
      emit_json(g, json{{"surjective", qp.surjective},
                        {"morphism", qp.morphism},
                        {"injective", qp.injective},
                        {"nodes_recovered", qp.nodes_recovered},
                        {"right_adjoint_checked", qp.beta_is_right_adjoint},
                        {"quotient_fixed_iso", qp.fixed_iso}});
      return qp.ok() ? 0 : 1;
    }

    if (pa_tree->parsed()) {
      if (vmin == 0) {
        BallTree bt = zp_tree(prime, depth);
        if (g.format == "dot") {
          emit(g, tree_to_dot(bt.tree));
        } else {
          json j = tree_to_json(bt.tree);
          j["rank"] = cb_rank(bt.tree);
          emit_json(g, j);
        }
        return 0;
      }
      BallForest forest = qp_ball_tree(prime, vmin, depth);
      json arr = json::array();
      for (const auto& bt : forest.trees) arr.push_back(tree_to_json(bt.tree));
      emit_json(g, json{{"roots", forest.trees.size()}, {"trees", arr}});
      return 0;
    }
    if (pa_verify->parsed()) {
      RelationReport rep = verify_relations(prime, depth);
      emit_json(g, json{{"pairs", rep.pairs_checked},
                        {"disjointness_defects", rep.trichotomy_disagreements},
                        {"split_defects", rep.split_failures},
                        {"grid_covered", rep.grid_covered},
                        {"ok", rep.ok()}});
      return rep.ok() ? 0 : 1;
    }
    if (pa_tri->parsed()) {
      PAdicBall a = ball_from_literal(ball_a);
      PAdicBall b = ball_from_literal(ball_b);
      emit_json(g, json{{"left", a.to_string()},
                        {"right", b.to_string()},
                        {"relation", relation_name(trichotomy(a, b))}});
      return 0;
    }

    if (vp->parsed()) {
      CorpusOptions opt;
      opt.seed = g.seed;
      opt.max_size = max_size;
      opt.gbi_tree_nodes = gbi_nodes;
      Report rep = run_verify_paper(opt);
      print_report(g, rep);
      return report_exit(rep);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const TooLargeError& e) {
    std::cerr << "bound exceeded: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
