// fdimlab: homological computations over bound quiver algebras.
//
// Pipeline: parse -> Groebner basis -> normal basis -> structure constants ->
// resolutions / Ext / findim bound reports. See README.md for the document
// grammar and examples.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "fdimlab/demo.hpp"
#include "fdimlab/json_io.hpp"
#include "fdimlab/modspec.hpp"

using namespace fdimlab;

namespace {

struct GlobalOpts {
  bool json = false;
  bool quiet = false;
  int degree_cap = -1;
  int dim_cap = 6;
  int resolution_cap = -1;
  std::string field;
  std::uint64_t seed = 1;
  std::vector<std::string> precedence;
};

std::string read_input(const std::string& path) {
  if (path.rfind("builtin:", 0) == 0) return demo::fixture(path.substr(8));
  std::ifstream in(path);
  if (!in) throw domain_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

PipelineOptions pipeline_opts(const GlobalOpts& g, bool apply_field) {
  PipelineOptions po;
  po.degree_cap = g.degree_cap;
  po.precedence = g.precedence;
  if (apply_field && !g.field.empty()) po.field_override = Field::parse(g.field);
  return po;
}

AlgebraPipeline load_pipeline(const std::string& path, const GlobalOpts& g,
                              bool apply_field = true) {
  PathAlgebraPresentation pres = parse_algebra_spec(read_input(path));
  return build_pipeline(pres, pipeline_opts(g, apply_field));
}

CheckOptions check_opts(const GlobalOpts& g) {
  CheckOptions c;
  c.dim_cap = g.dim_cap;
  c.seed = g.seed;
  c.resolution_cap = g.resolution_cap;
  if (!g.field.empty()) c.search_field = Field::parse(g.field);
  return c;
}

void print_report(const BoundReport& r, const GlobalOpts& g) {
  if (g.json) {
    std::cout << to_json(r).dump(2) << "\n";
    return;
  }
  std::cout << r.statement << ": " << r.inequality << "\n";
  for (const auto& [n, ok] : r.hypotheses)
    std::cout << "  hypothesis: " << n << " -> " << (ok ? "holds" : "FAILS") << "\n";
  for (const auto& q : r.quantities)
    std::cout << "  " << q.name << " = " << q.value
              << (q.exact ? "" : " (lower bound)") << "\n";
  for (const auto& n : r.notes) std::cout << "  note: " << n << "\n";
  for (const auto& w : r.witnesses) std::cout << "  witness: " << w << "\n";
  std::cout << "  holds: " << (r.holds ? "yes" : "NO")
            << (r.conclusive ? "" : " (inconclusive: lower bounds involved)")
            << "\n";
}

int report_exit(const BoundReport& r) {
  return (r.hypotheses_ok && !r.holds) ? 1 : 0;
}

// ---------------------------------------------------------------------------
// demo: the paper regressions as pass/fail assertion lists.

struct Assert {
  bool all_ok = true;
  bool quiet;
  explicit Assert(bool quiet) : quiet(quiet) {}
  void operator()(bool ok, const std::string& what) {
    all_ok = all_ok && ok;
    if (!quiet || !ok)
      std::cout << (ok ? "ok   - " : "FAIL - ") << what << "\n";
  }
};

int demo_remark25(const GlobalOpts& g) {
  Assert check(g.quiet);
  AlgebraPipeline c3 = build_pipeline(parse_algebra_spec(demo::c3()), {});
  AlgebraPtr a = c3.alg;
  int cap = default_resolution_cap(*a);

  check(a->dim() == 12, "dim Lambda = 12");
  PdResult gd = global_dimension(a, cap);
  check(gd.is_finite() && gd.value == 2, "gl.dim Lambda = 2");
  Resolution rs1 = minimal_resolution(simple_module(a, 0), cap);
  check(rs1.pd.is_finite() && rs1.pd.value == 2, "pd S_1 = 2");
  check(ext_dim(rs1, 0, 2) != 0, "Ext^2(S_1, S_1) != 0");
  check(ext_dim(rs1, 0, 3) == 0, "Ext^3(S_1, S_1) = 0");
  check(ext_loewy_length(a, 0) == 3, "ell(e_1) = 3");
  CornerReduction cr = idempotent_reduction(a, {0});
  check(cr.corner->dim() == 7, "dim Gamma = 7");

  CheckOptions copts = check_opts(g);
  copts.dim_cap = 6;
  if (!copts.search_field) copts.search_field = Field::prime(2);
  BoundReport r = check_theorem24(c3, 0, copts);
  bool attained = false;
  for (const auto& n : r.notes) attained = attained || n == "bound is attained";
  check(r.hypotheses_ok, "Theorem 2.4 hypotheses hold");
  check(r.holds, "findim Gamma <= 2*2 - 3 = 1");
  check(attained, "bound attained: findim Gamma = 1 with a pd-1 witness");
  if (g.json) {
    ordered_json j;
    j["demo"] = "remark25";
    j["report"] = to_json(r);
    j["pass"] = check.all_ok;
    std::cout << j.dump(2) << "\n";
  }
  return check.all_ok ? 0 : 1;
}

int demo_example39(const GlobalOpts& g) {
  Assert check(g.quiet);
  AlgebraPipeline d4 = build_pipeline(parse_algebra_spec(demo::d4()), {});
  AlgebraPtr a = d4.alg;
  int cap = default_resolution_cap(*a);

  check(a->dim() == 12, "dim Lambda = 12");
  Vec ae = d4.element_vec("a*e");
  IdealModule j = ideal_closure(*a, {ae}, true);
  check(j.carrier.cols() == 1, "J = <a*e> is one-dimensional");
  check(j.two_sided, "J is two-sided");
  bool jrad0 = true;
  for (int rb : a->radical_basis())
    jrad0 = jrad0 && vec_is_zero(a->mul(ae, a->basis_vec(rb)));
  check(jrad0, "J rad Lambda = 0");

  QuotientResult q = quotient_by_ideal(a, {ae});
  FDModule jmod = subspace_as_quotient_module(q, j.carrier);
  Resolution rj = minimal_resolution(jmod, cap);
  check(rj.pd.is_finite() && rj.pd.value == 1, "pd_{Lambda/J} J = 1");
  bool terms_ok = rj.term_mults.size() == 2;
  if (terms_ok) {
    std::vector<int> p0 = rj.term_mults[0], p1 = rj.term_mults[1];
    terms_ok = p0 == std::vector<int>{0, 1, 0, 0} && p1 == std::vector<int>{0, 0, 0, 1};
  }
  check(terms_ok, "resolution of J: one copy of (Lambda/J)e_2 then one of (Lambda/J)e_4");
  PdResult gq = global_dimension(q.quotient, cap);
  check(gq.is_finite() && gq.value == 4, "gl.dim Lambda/J = 4");

  std::vector<std::string> specs = {"P(1)", "P(2)", "P(3)", "P(4)",
                                    "S(3)", "S(4)", "P(1)/soc",
                                    "coker P(3)->P(1)"};
  CheckOptions copts = check_opts(g);
  copts.curated.clear();
  bool all_finite = true, all_indec = true;
  for (const auto& s : specs) {
    NamedModule nm = parse_module_spec(d4, s);
    PdResult pd = projective_dimension(nm.mod, cap);
    all_finite = all_finite && pd.is_finite();
    Tristate ind = is_indecomposable(nm.mod);
    all_indec = all_indec && ind == Tristate::Yes;
    copts.curated.push_back({nm.name, nm.mod});
  }
  check(all_finite, "the 8 listed modules all have finite pd");
  check(all_indec, "each of the 8 is indecomposable");
  PdResult ps1 = projective_dimension(simple_module(a, 0), cap);
  PdResult ps2 = projective_dimension(simple_module(a, 1), cap);
  check(ps1.kind == PdResult::Kind::InfiniteCertified, "pd S_1 infinite (certified)");
  check(ps2.kind == PdResult::Kind::InfiniteCertified, "pd S_2 infinite (certified)");

  FindimEstimate est = measure_findim(a, copts, FindimMode::Curated);
  check(est.value == 3, "curated findim estimate = 3 (witness " + est.witness + ")");

  BoundReport r = check_prop310(d4, {"a*e"}, copts);
  check(r.hypotheses_ok, "Prop 3.10 hypotheses hold");
  check(r.holds, "findim Lambda <= 2*4 + 3 = 11");
  if (g.json) {
    ordered_json out;
    out["demo"] = "example39";
    out["report"] = to_json(r);
    out["findim"] = to_json(est);
    out["pass"] = check.all_ok;
    std::cout << out.dump(2) << "\n";
  }
  return check.all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fdimlab: homological computations over bound quiver algebras"};
  app.require_subcommand(1);
  GlobalOpts g;
  app.add_flag("--json", g.json, "emit JSON");
  app.add_flag("--quiet", g.quiet, "suppress per-assertion output in demos");
  app.add_option("--cap", g.degree_cap, "Groebner degree cap");
  app.add_option("--dim-cap", g.dim_cap, "findim search dimension cap");
  app.add_option("--res-cap", g.resolution_cap, "resolution step cap");
  app.add_option("--field", g.field, "field override, QQ or GF(p)");
  app.add_option("--seed", g.seed, "seed for sampled searches");
  app.add_option("--precedence", g.precedence,
                 "arrow precedence list (smallest first)")
      ->delimiter(',');

  std::string file, module_spec = "S(1)", arrow, statement, evertex, xname;
  std::vector<std::string> jgens, modules;
  std::string mode = "exhaustive", reduce_spec, to_vertex;
  int max_deg = -1;
  bool with_table = false;
  std::vector<std::string> quotient_gens;

  auto* gb = app.add_subcommand("gb", "Groebner basis and normal basis");
  gb->add_option("file", file)->required();

  auto* alg = app.add_subcommand("algebra", "structure constants");
  alg->add_option("file", file)->required();
  alg->add_option("--reduce", reduce_spec, "corner: e=v1[,v2...] removes the listed vertices");
  alg->add_option("--quotient", quotient_gens, "ideal generators (expressions)");
  alg->add_flag("--table", with_table, "include the full multiplication table");

  auto* resolve = app.add_subcommand("resolve", "minimal projective resolution");
  resolve->add_option("file", file)->required();
  resolve->add_option("--module", module_spec, "module spec (S(v), P(v), rad P(v), P(v)/soc, coker P(u)->P(v))");

  auto* ext = app.add_subcommand("ext", "Ext dimensions against simples");
  ext->add_option("file", file)->required();
  ext->add_option("--module", module_spec);
  ext->add_option("--to", to_vertex, "target simple (default: all)");
  ext->add_option("--max-deg", max_deg);

  auto* red = app.add_subcommand("reduce", "idempotent reduction (corner algebra)");
  red->add_option("file", file)->required();
  red->add_option("--e", reduce_spec, "vertices to remove, comma separated")->required();

  auto* split = app.add_subcommand("split", "arrow split surgery");
  split->add_option("file", file)->required();
  split->add_option("--arrow", arrow)->required();

  auto* surgery = app.add_subcommand("surgery", "almost-vanishing-ideal surgery");
  surgery->add_option("file", file)->required();
  surgery->add_option("--J", jgens, "generators of J (expressions)")->required();

  auto* chk = app.add_subcommand("check", "bound reports for the main statements");
  chk->add_option("statement", statement,
                  "one of thm24 prop31 prop35 prop38 prop310 cor311")
      ->required();
  chk->add_option("file", file)->required();
  chk->add_option("--e", evertex, "primitive idempotent (vertex name)");
  chk->add_option("--x", xname, "vertex or arrow name");
  chk->add_option("--J", jgens, "generators of J (expressions)");
  chk->add_option("--mode", mode, "findim mode: exhaustive | curated | sampled");

  auto* fd = app.add_subcommand("findim", "bounded finitistic dimension search");
  fd->add_option("file", file)->required();
  fd->add_option("--mode", mode, "exhaustive | curated | sampled");
  fd->add_option("--module", modules, "curated module specs");

  auto* dm = app.add_subcommand("demo", "built-in paper regressions");
  std::string which;
  dm->add_option("which", which, "remark25 | example39 | all")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gb->parsed()) {
      AlgebraPipeline p = load_pipeline(file, g);
      if (g.json) {
        std::cout << gb_to_json(p).dump(2) << "\n";
      } else {
        const Quiver& q = p.pres->quiver;
        std::cout << "Groebner basis (cap " << p.gb->degree_cap << ", "
                  << (p.gb->complete_below_cap ? "complete below cap" : "TRUNCATED")
                  << "):\n";
        for (const auto& e : p.gb->elements)
          std::cout << "  " << e.str(q, &p.gb->order) << "\n";
        std::cout << "normal basis size " << p.nb->dim() << "; by length:";
        for (std::size_t l = 0; l < p.nb->count_by_length.size(); ++l)
          std::cout << " " << p.nb->count_by_length[l];
        std::cout << "\n";
      }
      return 0;
    }
    if (alg->parsed()) {
      AlgebraPipeline p = load_pipeline(file, g);
      AlgebraPtr a = p.alg;
      std::string note;
      if (!reduce_spec.empty()) {
        std::string spec = reduce_spec;
        if (spec.rfind("e=", 0) == 0) spec = spec.substr(2);
        std::vector<int> removed;
        std::stringstream ss(spec);
        std::string item;
        while (std::getline(ss, item, ','))
          removed.push_back(p.vertex_ordinal(item));
        CornerReduction cr = idempotent_reduction(a, removed);
        a = cr.corner;
        note = cr.warning;
      } else if (!quotient_gens.empty()) {
        std::vector<Vec> gens;
        for (const auto& s : quotient_gens) gens.push_back(p.element_vec(s));
        QuotientResult qr = quotient_by_ideal(p.alg, gens);
        a = qr.quotient;
        note = qr.warning;
      }
      if (g.json) {
        ordered_json j = algebra_to_json(*a, with_table);
        if (!note.empty()) j["warning"] = note;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << a->describe() << "\n";
        if (!note.empty()) std::cout << "warning: " << note << "\n";
      }
      return 0;
    }
    if (resolve->parsed()) {
      AlgebraPipeline p = load_pipeline(file, g);
      NamedModule nm = parse_module_spec(p, module_spec);
      int cap = g.resolution_cap > 0 ? g.resolution_cap : default_resolution_cap(*p.alg);
      Resolution r = minimal_resolution(nm.mod, cap);
      if (g.json) {
        ordered_json j = resolution_to_json(r);
        j["module"] = nm.name;
        if (!nm.note.empty()) j["note"] = nm.note;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "resolution of " << nm.name << " (dim " << nm.mod.dims_str()
                  << "): pd = " << r.pd.str() << "\n";
        for (std::size_t i = 0; i < r.term_mults.size(); ++i) {
          std::cout << "  P_" << i << " =";
          for (int v = 0; v < p.alg->idempotent_count(); ++v)
            if (r.term_mults[i][v] > 0)
              std::cout << " P(" << p.alg->idempotent_name(v) << ")^"
                        << r.term_mults[i][v];
          std::cout << "\n";
        }
        if (!nm.note.empty()) std::cout << "note: " << nm.note << "\n";
      }
      return 0;
    }
    if (ext->parsed()) {
      AlgebraPipeline p = load_pipeline(file, g);
      NamedModule nm = parse_module_spec(p, module_spec);
      int cap = g.resolution_cap > 0 ? g.resolution_cap : default_resolution_cap(*p.alg);
      Resolution r = minimal_resolution(nm.mod, cap);
      int top = max_deg >= 0 ? max_deg
                             : (r.pd.is_finite() ? r.pd.value
                                                 : static_cast<int>(r.term_mults.size()) - 1);
      ordered_json table = ordered_json::array();
      for (int v = 0; v < p.alg->idempotent_count(); ++v) {
        if (!to_vertex.empty() && p.alg->idempotent_name(v) != to_vertex) continue;
        ordered_json row;
        row["simple"] = p.alg->idempotent_name(v);
        ordered_json dims = ordered_json::array();
        for (int i = 0; i <= top; ++i) dims.push_back(ext_dim(r, v, i));
        row["ext_dims"] = dims;
        table.push_back(row);
      }
      if (g.json) {
        ordered_json j;
        j["module"] = nm.name;
        j["pd"] = to_json(r.pd);
        j["table"] = table;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "Ext^i(" << nm.name << ", S(v)) for i = 0.." << top << "\n";
        for (const auto& row : table) {
          std::cout << "  S(" << row["simple"].get<std::string>() << "):";
          for (const auto& d : row["ext_dims"]) std::cout << " " << d;
          std::cout << "\n";
        }
      }
      return 0;
    }
    if (red->parsed()) {
      AlgebraPipeline p = load_pipeline(file, g);
      std::vector<int> removed;
      std::stringstream ss(reduce_spec);
      std::string item;
      while (std::getline(ss, item, ',')) removed.push_back(p.vertex_ordinal(item));
      CornerReduction cr = idempotent_reduction(p.alg, removed);
      if (g.json) {
        ordered_json j = algebra_to_json(*cr.corner, with_table);
        if (!cr.warning.empty()) j["warning"] = cr.warning;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << cr.corner->describe() << "\n";
        if (!cr.warning.empty()) std::cout << "warning: " << cr.warning << "\n";
      }
      return 0;
    }
    if (split->parsed()) {
      PathAlgebraPresentation pres = parse_algebra_spec(read_input(file));
      ArrowSplitResult r = arrow_split(pres, arrow);
      if (g.json) {
        ordered_json j;
        j["new_vertex"] = r.new_vertex;
        j["arrow1"] = r.arrow1;
        j["arrow2"] = r.arrow2;
        j["presentation"] = pretty_print(r.pres);
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "# split of " << arrow << " through new vertex "
                  << r.new_vertex << "\n"
                  << pretty_print(r.pres);
      }
      return 0;
    }
    if (surgery->parsed()) {
      AlgebraPipeline p = load_pipeline(file, g);
      AlmostVanishingResult r = almost_vanishing_construction(p, jgens);
      AlgebraPipeline bp = build_pipeline(r.pres, pipeline_opts(g, false));
      std::vector<Vec> gens;
      for (const auto& s : jgens) gens.push_back(p.element_vec(s));
      SurgeryCheck sc = check_corner_surgery(p, gens, bp, r.new_vertex);
      if (g.json) {
        ordered_json j;
        j["new_vertex"] = r.new_vertex;
        j["alpha"] = r.alpha;
        j["betas"] = r.betas;
        j["presentation"] = pretty_print(r.pres);
        j["dim_B"] = sc.dim_b;
        j["dim_BexB"] = sc.dim_ideal;
        j["BexB_projective_left"] = sc.ideal_projective_left;
        j["quotient_isomorphic"] = sc.quotient_iso;
        if (!sc.detail.empty()) j["detail"] = sc.detail;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "# almost-vanishing surgery: new vertex " << r.new_vertex
                  << ", arrow " << r.alpha << "\n"
                  << pretty_print(r.pres);
        std::cout << "Be_xB projective left: " << (sc.ideal_projective_left ? "yes" : "NO")
                  << "; B/Be_xB = Lambda/J: " << (sc.quotient_iso ? "yes" : "NO")
                  << "\n";
      }
      return (sc.ideal_projective_left && sc.quotient_iso) ? 0 : 1;
    }
    if (chk->parsed()) {
      AlgebraPipeline p = load_pipeline(file, g, /*apply_field=*/false);
      CheckOptions copts = check_opts(g);
      BoundReport r;
      if (statement == "thm24") {
        if (evertex.empty()) throw domain_error("thm24 needs --e <vertex>");
        if (!copts.search_field) copts.search_field = Field::prime(2);
        r = check_theorem24(p, p.vertex_ordinal(evertex), copts);
      } else if (statement == "prop31") {
        if (evertex.empty()) throw domain_error("prop31 needs --e <vertex>");
        r = check_prop31(p, p.vertex_ordinal(evertex), copts);
      } else if (statement == "prop35") {
        auto x = QuiverElement::by_name(p.pres->quiver, xname);
        if (!x) throw domain_error("prop35 needs --x <vertex-or-arrow>");
        r = check_prop35(p, *x, copts);
      } else if (statement == "prop38") {
        auto x = QuiverElement::by_name(p.pres->quiver, xname);
        if (!x) throw domain_error("prop38 needs --x <vertex-or-arrow>");
        r = check_prop38(p, *x, copts);
      } else if (statement == "prop310") {
        if (jgens.empty()) throw domain_error("prop310 needs --J <expr>");
        r = check_prop310(p, jgens, copts);
      } else if (statement == "cor311") {
        auto cands = socle_ideal_candidates(p, copts);
        int bad = 0;
        ordered_json arr = ordered_json::array();
        for (const auto& c : cands) {
          ordered_json j;
          j["projective"] = p.alg->idempotent_name(c.proj_ordinal);
          j["socle_vertex"] = p.alg->idempotent_name(c.socle_vertex);
          j["element"] = c.element_str;
          j["two_sided"] = c.two_sided;
          j["in_radical"] = c.in_radical;
          j["J_rad_zero"] = c.right_annihilates_radical;
          j["degenerate_source_case"] = c.degenerate_source_case;
          if (c.prop310) {
            j["prop310"] = to_json(*c.prop310);
            if (c.prop310->hypotheses_ok && !c.prop310->holds) ++bad;
          }
          arr.push_back(j);
          if (!g.json) {
            std::cout << "candidate: soc(P(" << p.alg->idempotent_name(c.proj_ordinal)
                      << ")) spanned by " << c.element_str
                      << (c.degenerate_source_case ? " [degenerate: not in rad]" : "")
                      << (c.prop310 ? (c.prop310->holds ? " -> Prop3.10 holds"
                                                        : " -> Prop3.10 FAILS")
                                    : "")
                      << "\n";
          }
        }
        if (g.json) std::cout << arr.dump(2) << "\n";
        return bad == 0 ? 0 : 1;
      } else {
        throw domain_error("unknown statement: " + statement);
      }
      print_report(r, g);
      return report_exit(r);
    }
    if (fd->parsed()) {
      AlgebraPipeline p = load_pipeline(file, g);
      FindimOptions fo;
      fo.dim_cap = g.dim_cap;
      fo.seed = g.seed;
      fo.resolution_cap = g.resolution_cap;
      FindimMode m = FindimMode::Sampled;
      if (mode == "exhaustive") m = FindimMode::Exhaustive;
      else if (mode == "curated") m = FindimMode::Curated;
      else if (mode == "sampled") m = FindimMode::Sampled;
      else throw domain_error("unknown mode: " + mode);
      for (const auto& s : modules) {
        NamedModule nm = parse_module_spec(p, s);
        fo.curated.push_back({nm.name, nm.mod});
      }
      FindimEstimate est = findim_bounded(p.alg, m, fo);
      if (g.json) {
        std::cout << to_json(est).dump(2) << "\n";
      } else {
        std::cout << "findim >= " << est.value << (est.exact ? " (exact)" : "")
                  << "; witness: " << est.witness << " with pd "
                  << est.witness_pd.str() << "\n";
        if (!est.note.empty()) std::cout << "note: " << est.note << "\n";
      }
      return 0;
    }
    if (dm->parsed()) {
      if (which == "remark25") return demo_remark25(g);
      if (which == "example39") return demo_example39(g);
      if (which == "all") {
        int a = demo_remark25(g);
        int b = demo_example39(g);
        return (a || b) ? 1 : 0;
      }
      throw domain_error("unknown demo: " + which);
    }
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
