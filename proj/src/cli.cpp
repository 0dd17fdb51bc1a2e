#include "frieze/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "frieze/io.hpp"

namespace frieze {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else cur += ch;
  }
  out.push_back(cur);
  return out;
}

std::vector<Rat> rat_list(const std::string& s) {
  std::vector<Rat> v;
  for (const auto& tok : split(s, ',')) v.push_back(parse_rat(tok));
  return v;
}

std::vector<long> int_list(const std::string& s) {
  std::vector<long> v;
  for (const auto& tok : split(s, ',')) {
    Rat r = parse_rat(tok);
    if (!is_integer(r)) throw Error("ParseError", "expected an integer, got '" + tok + "'");
    v.push_back(r.get_num().get_si());
  }
  return v;
}

// "a-b,c-d" -> {(a,b),(c,d)}
std::vector<std::pair<int, int>> pair_list(const std::string& s) {
  std::vector<std::pair<int, int>> v;
  if (s.empty()) return v;
  for (const auto& tok : split(s, ',')) {
    auto parts = split(tok, '-');
    if (parts.size() != 2) throw Error("ParseError", "expected 'a-b' pair, got '" + tok + "'");
    v.emplace_back(int(parse_rat(parts[0]).get_num().get_si()),
                   int(parse_rat(parts[1]).get_num().get_si()));
  }
  return v;
}

DynkinType type_of_name(const std::string& s) {
  if (s.size() < 2) throw Error("ParseError", "bad Dynkin type '" + s + "'");
  DynkinType t;
  switch (s[0]) {
    case 'A': t.family = DynkinFamily::A; break;
    case 'D': t.family = DynkinFamily::D; break;
    case 'E': t.family = DynkinFamily::E; break;
    default: throw Error("ParseError", "bad Dynkin type '" + s + "'");
  }
  for (size_t i = 1; i < s.size(); ++i)
    if (!isdigit((unsigned char)s[i])) throw Error("ParseError", "bad Dynkin type '" + s + "'");
  t.rank = std::stoi(s.substr(1));
  return t;
}

Json json_of_file(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") buf << in.rdbuf();
  else {
    std::ifstream f(path);
    if (!f) throw Error("ParseError", "cannot open " + path);
    buf << f.rdbuf();
  }
  try {
    return Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    throw Error("ParseError", e.what());
  }
}

struct Output {
  std::string format = "json";
  bool count_only = false;
  std::ostream* out = nullptr;

  void emit(const Json& j, const std::vector<std::vector<std::string>>& grid) const {
    if (format == "json") *out << j.dump(2) << '\n';
    else if (format == "csv") *out << csv_of(grid);
    else *out << pretty_of(grid);
  }
  void count(size_t n) const { *out << n << '\n'; }
};

std::vector<std::vector<std::string>> kv_grid(
    const std::vector<std::pair<std::string, std::string>>& kv) {
  std::vector<std::vector<std::string>> g;
  for (const auto& [k, v] : kv) g.push_back({k, v});
  return g;
}

void emit_frieze(const Output& o, const CoxeterFrieze& f) { o.emit(to_json(f), grid_of(f)); }

void emit_sl(const Output& o, const SLFrieze& f) { o.emit(to_json(f), grid_of(f)); }

int cmd_coxeter_build(const Output& o, const std::string& quiddity, const std::string& diagonal) {
  CoxeterFrieze f;
  if (!quiddity.empty()) {
    auto q = rat_list(quiddity);
    if (q.size() < 3) throw Error("ParseError", "quiddity needs at least 3 values");
    f = frieze_from_first_row(q, int(q.size()) - 3);
  } else {
    f = frieze_from_diagonal(rat_list(diagonal));
  }
  emit_frieze(o, f);
  return 0;
}

int cmd_coxeter_validate(const Output& o, const Json& doc) {
  CoxeterFrieze f = coxeter_of_json(doc);
  FriezeReport r = validate(f);
  Json j{{"kind", "report"},
         {"unimodular", r.unimodular},
         {"tame", r.tame},
         {"glide", r.glide},
         {"positive_integral", r.positive_integral}};
  auto b = [](bool v) { return v ? "true" : "false"; };
  o.emit(j, kv_grid({{"unimodular", b(r.unimodular)},
                     {"tame", b(r.tame)},
                     {"glide", b(r.glide)},
                     {"positive_integral", b(r.positive_integral)}}));
  return (r.unimodular && r.tame && r.glide) ? 0 : 2;
}

int cmd_coxeter_from_points(const Output& o, const std::string& points) {
  std::vector<PPoint> ps;
  for (const auto& tok : split(points, ',')) {
    if (tok == "inf") ps.push_back({1, 0});
    else ps.push_back({parse_rat(tok), 1});
  }
  emit_frieze(o, frieze_from_points(ps));
  return 0;
}

int cmd_polygon_enumerate(const Output& o, int n) {
  auto all = enumerate_triangulations(n);
  if (o.count_only) {
    o.count(all.size());
    return 0;
  }
  Json items = Json::array();
  std::vector<std::vector<std::string>> grid;
  for (const auto& t : all) {
    items.push_back(to_json(t));
    std::vector<std::string> row;
    for (auto [a, b] : t.diagonals) row.push_back(std::to_string(a) + "-" + std::to_string(b));
    grid.push_back(std::move(row));
  }
  o.emit(Json{{"kind", "census"}, {"n", n}, {"count", all.size()}, {"items", items}}, grid);
  return 0;
}

int cmd_polygon_frieze(const Output& o, const std::string& quiddity) {
  auto q = rat_list(quiddity);
  triangulation_of_quiddity(q);  // throws NotAQuiddity when it is not one
  emit_frieze(o, frieze_from_first_row(q, int(q.size()) - 3));
  return 0;
}

int cmd_polygon_bci(const Output& o, int n, const std::string& diagonals) {
  Triangulation t{n, pair_list(diagonals)};
  check_triangulation(t);
  Mat m = bci_matrix(t);
  o.emit(to_json(m), grid_of(m));
  return 0;
}

int cmd_polygon_dissection(const Output& o, const std::string& cells) {
  Dissection d;
  d.n = 0;
  for (const auto& cell : split(cells, ';')) {
    std::vector<int> c;
    for (long v : int_list(cell)) {
      c.push_back(int(v));
      d.n = std::max(d.n, int(v));
    }
    d.cells.push_back(std::move(c));
  }
  check_dissection(d);
  Mat m = dissection_matrix(d);
  o.emit(to_json(m), grid_of(m));
  return 0;
}

int cmd_quiver_frieze(const Output& o, const std::string& type, const std::string& arrows, int n,
                      const std::string& rule, const std::string& slice, int nslices) {
  QFrieze f;
  if (!type.empty()) f.quiver = dynkin_quiver(type_of_name(type));
  else {
    f.quiver.n = n;
    f.quiver.arrows = pair_list(arrows);
    check_quiver(f.quiver);
  }
  f.rule = rule_of_name(rule);
  f.slice0 = rat_list(slice);
  if (int(f.slice0.size()) != f.quiver.n)
    throw Error("ParseError", "slice length must equal the number of vertices");

  auto p = period(f);
  long count = nslices > 0 ? nslices : (p ? long(*p) : 8);
  Json slices = Json::array();
  std::vector<std::vector<std::string>> grid;
  for (long m = 0; m < count; ++m) {
    const auto& s = frieze_slice(f, m);
    Json row = Json::array();
    std::vector<std::string> srow;
    for (const Rat& v : s) {
      row.push_back(show(v));
      srow.push_back(show(v));
    }
    slices.push_back(row);
    grid.push_back(std::move(srow));
  }
  Json j = to_json(f);
  j["period"] = p ? Json(*p) : Json(nullptr);
  j["slices"] = slices;
  o.emit(j, grid);
  return 0;
}

int cmd_quiver_enumerate(const Output& o, const std::string& type, long bound) {
  DynkinType t = type_of_name(type);
  auto all = enumerate_integer_friezes(t, bound);
  if (o.count_only) {
    o.count(all.size());
    return 0;
  }
  Json items = Json::array();
  std::vector<std::vector<std::string>> grid;
  for (const auto& s : all) {
    items.push_back(s);
    std::vector<std::string> row;
    for (long v : s) row.push_back(std::to_string(v));
    grid.push_back(std::move(row));
  }
  std::string note = "complete relative to bound " + std::to_string(bound) +
                     " (friezes with entries exceeding the bound are not searched)";
  Json j{{"kind", "census"}, {"type", type},  {"bound", bound},
         {"count", all.size()}, {"note", note}, {"items", items}};
  if (o.format == "json") o.emit(j, {});
  else {
    grid.push_back({note});
    o.emit(j, grid);
  }
  return 0;
}

int cmd_quiver_mutate(const Output& o, const std::string& arrows, int n, const std::string& values,
                      int at) {
  Seed s;
  s.values = rat_list(values);
  s.quiver.n = n > 0 ? n : int(s.values.size());
  s.quiver.arrows = pair_list(arrows);
  check_quiver(s.quiver);
  if (int(s.values.size()) != s.quiver.n)
    throw Error("ParseError", "values length must equal the number of vertices");
  Seed m = mutate_seed(s, at);
  Json arr = Json::array();
  std::vector<std::string> arow;
  for (auto [a, b] : m.quiver.arrows) {
    arr.push_back(Json::array({a, b}));
    arow.push_back(std::to_string(a) + "-" + std::to_string(b));
  }
  Json vals = Json::array();
  std::vector<std::string> vrow;
  for (const Rat& v : m.values) {
    vals.push_back(show(v));
    vrow.push_back(show(v));
  }
  o.emit(Json{{"kind", "seed"},
              {"quiver", Json{{"n", m.quiver.n}, {"arrows", arr}}},
              {"values", vals}},
         {vrow, arow});
  return 0;
}

int cmd_slk_equation(const Output& o, const Json& doc) {
  SLFrieze f = sl_frieze_of_json(doc);
  DifferenceEqK e = equation_of(f);
  Json coeffs = Json::array();
  std::vector<std::vector<std::string>> grid;
  for (const auto& row : e.coeffs) {
    Json r = Json::array();
    std::vector<std::string> srow;
    for (const Rat& v : row) {
      r.push_back(show(v));
      srow.push_back(show(v));
    }
    coeffs.push_back(r);
    grid.push_back(std::move(srow));
  }
  o.emit(Json{{"kind", "slk_equation"}, {"k", e.k}, {"n", e.n()}, {"coeffs", coeffs}}, grid);
  return 0;
}

int cmd_slk_tbox(const Output& o, const Json& doc) {
  SLFrieze f = sl_frieze_of_json(doc);
  TBox box = tsystem_box(f);
  bool ok = box.residuals_zero();
  Json j{{"kind", "tbox"}, {"k", f.k}, {"w", f.w}, {"residuals_zero", ok}};
  o.emit(j, kv_grid({{"residuals_zero", ok ? "true" : "false"}}));
  return ok ? 0 : 2;
}

int cmd_slk_validate(const Output& o, const Json& doc) {
  SLFrieze f = sl_frieze_of_json(doc);
  SLReport r = validate(f);
  Json j{{"kind", "report"}, {"unit_minors", r.unit_minors}, {"tame", r.tame}};
  auto b = [](bool v) { return v ? "true" : "false"; };
  o.emit(j, kv_grid({{"unit_minors", b(r.unit_minors)}, {"tame", b(r.tame)}}));
  return r.all() ? 0 : 2;
}

int cmd_slk_census(const Output& o, int k, int w, long bound) {
  if (k != 2 || w != 2)
    throw Error("Unsupported", "census is implemented for k=2, w=2 only");
  auto all = sl3_width2_census(bound);
  if (o.count_only) {
    o.count(all.size());
    return 0;
  }
  Json items = Json::array();
  std::vector<std::vector<std::string>> grid;
  for (const auto& f : all) {
    items.push_back(to_json(f));
    std::vector<std::string> row;
    for (const auto& br : f.band)
      for (const Rat& v : br) row.push_back(show(v));
    grid.push_back(std::move(row));
  }
  std::string note = "complete relative to bound " + std::to_string(bound);
  Json j{{"kind", "census"}, {"k", k},      {"w", w},        {"bound", bound},
         {"count", all.size()}, {"note", note}, {"items", items}};
  if (o.format == "json") o.emit(j, {});
  else {
    grid.push_back({note});
    o.emit(j, grid);
  }
  return 0;
}

int cmd_slk_block(const Output& o, const std::string& q, const std::string& qp,
                  const std::string& matrix) {
  auto mv = rat_list(matrix);
  if (mv.size() != 4) throw Error("ParseError", "matrix needs 4 values, row-major");
  Mat m(2, 2);
  m.at(0, 0) = mv[0];
  m.at(0, 1) = mv[1];
  m.at(1, 0) = mv[2];
  m.at(1, 1) = mv[3];
  TilingBlock b = antiperiodic_sl2_block(rat_list(q), rat_list(qp), m);
  o.emit(to_json(b), grid_of(b));
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact frieze-pattern toolkit"};
  app.fallthrough();  // lets --format follow the subcommand on the command line
  app.require_subcommand(1);

  Output o;
  o.out = &out;
  app.add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "pretty"}))
      ->capture_default_str();

  std::function<int()> action;

  // coxeter
  auto* cox = app.add_subcommand("coxeter", "classical frieze patterns");
  cox->require_subcommand(1);
  {
    auto* build = cox->add_subcommand("build", "build a frieze from a first row or a diagonal");
    auto quiddity = std::make_shared<std::string>();
    auto diagonal = std::make_shared<std::string>();
    auto* qopt = build->add_option("--quiddity", *quiddity, "first row a1,...,an");
    build->add_option("--diagonal", *diagonal, "diagonal seed x1,...,xm")->excludes(qopt);
    build->callback([&action, &o, quiddity, diagonal] {
      action = [&o, quiddity, diagonal] { return cmd_coxeter_build(o, *quiddity, *diagonal); };
    });

    auto* val = cox->add_subcommand("validate", "check the frieze invariants");
    auto file = std::make_shared<std::string>();
    val->add_option("-f,--file", *file, "frieze JSON ('-' for stdin)")->required();
    val->callback([&action, &o, file] {
      action = [&o, file] { return cmd_coxeter_validate(o, json_of_file(*file, std::cin)); };
    });

    auto* fp = cox->add_subcommand("from-points", "frieze of a cyclic point configuration");
    auto points = std::make_shared<std::string>();
    fp->add_option("--points", *points, "p1,...,pn on the projective line ('inf' allowed)")
        ->required();
    fp->callback([&action, &o, points] {
      action = [&o, points] { return cmd_coxeter_from_points(o, *points); };
    });
  }

  // polygon
  auto* poly = app.add_subcommand("polygon", "triangulations and dissections");
  poly->require_subcommand(1);
  {
    auto* en = poly->add_subcommand("enumerate", "all triangulations of the n-gon");
    auto n = std::make_shared<int>(0);
    en->add_option("--n", *n, "number of vertices")->required();
    en->add_flag("--count-only", o.count_only, "print only the count");
    en->callback([&action, &o, n] {
      action = [&o, n] { return cmd_polygon_enumerate(o, *n); };
    });

    auto* fr = poly->add_subcommand("frieze", "integer frieze of a triangulation quiddity");
    auto quiddity = std::make_shared<std::string>();
    fr->add_option("--quiddity", *quiddity, "triangle counts a1,...,an")->required();
    fr->callback([&action, &o, quiddity] {
      action = [&o, quiddity] { return cmd_polygon_frieze(o, *quiddity); };
    });

    auto* bci = poly->add_subcommand("bci", "path-count matrix of a triangulation");
    auto n2 = std::make_shared<int>(0);
    auto diagonals = std::make_shared<std::string>();
    bci->add_option("--n", *n2, "number of vertices")->required();
    bci->add_option("--diagonals", *diagonals, "diagonals a-b,c-d,...");
    bci->callback([&action, &o, n2, diagonals] {
      action = [&o, n2, diagonals] { return cmd_polygon_bci(o, *n2, *diagonals); };
    });

    auto* dm = poly->add_subcommand("dissection-matrix", "cell-path matrix of a dissection");
    auto cells = std::make_shared<std::string>();
    dm->add_option("--cells", *cells, "cells as vertex lists, e.g. 1,2,3;1,3,4,5")->required();
    dm->callback([&action, &o, cells] {
      action = [&o, cells] { return cmd_polygon_dissection(o, *cells); };
    });
  }

  // quiver
  auto* qv = app.add_subcommand("quiver", "friezes on repetition quivers");
  qv->require_subcommand(1);
  {
    auto* fr = qv->add_subcommand("frieze", "propagate a frieze from slice 0");
    auto type = std::make_shared<std::string>();
    auto arrows = std::make_shared<std::string>();
    auto n = std::make_shared<int>(0);
    auto rule = std::make_shared<std::string>("additive");
    auto slice = std::make_shared<std::string>();
    auto nslices = std::make_shared<int>(0);
    fr->add_option("--type", *type, "Dynkin type, e.g. A3, D5, E8");
    fr->add_option("--arrows", *arrows, "arrows i-j,... of an acyclic quiver");
    fr->add_option("--n", *n, "number of vertices (with --arrows)");
    fr->add_option("--rule", *rule, "additive|multiplicative|tropical|cluster_additive");
    fr->add_option("--slice", *slice, "slice-0 values v1,...,vn")->required();
    fr->add_option("--slices", *nslices, "how many slices to print (default: one period)");
    fr->callback([&action, &o, type, arrows, n, rule, slice, nslices] {
      action = [&o, type, arrows, n, rule, slice, nslices] {
        return cmd_quiver_frieze(o, *type, *arrows, *n, *rule, *slice, *nslices);
      };
    });

    auto* en = qv->add_subcommand("enumerate", "positive integer friezes up to a bound");
    auto type2 = std::make_shared<std::string>();
    auto bound = std::make_shared<long>(0);
    en->add_option("--type", *type2, "Dynkin type")->required();
    en->add_option("--bound", *bound, "entry bound")->required();
    en->add_flag("--count-only", o.count_only, "print only the count");
    en->callback([&action, &o, type2, bound] {
      action = [&o, type2, bound] { return cmd_quiver_enumerate(o, *type2, *bound); };
    });

    auto* mu = qv->add_subcommand("mutate", "mutate a seed at a vertex");
    auto arrows2 = std::make_shared<std::string>();
    auto n2 = std::make_shared<int>(0);
    auto values = std::make_shared<std::string>();
    auto at = std::make_shared<int>(0);
    mu->add_option("--arrows", *arrows2, "arrows i-j,...")->required();
    mu->add_option("--n", *n2, "number of vertices (default: length of --values)");
    mu->add_option("--values", *values, "cluster values x1,...,xn")->required();
    mu->add_option("--at", *at, "vertex to mutate")->required();
    mu->callback([&action, &o, arrows2, n2, values, at] {
      action = [&o, arrows2, n2, values, at] {
        return cmd_quiver_mutate(o, *arrows2, *n2, *values, *at);
      };
    });
  }

  // slk
  auto* slk = app.add_subcommand("slk", "friezes with higher-order unit minors");
  slk->require_subcommand(1);
  {
    auto file = std::make_shared<std::string>();
    auto add_file = [&](CLI::App* sub) {
      sub->add_option("-f,--file", *file, "sl_frieze JSON ('-' for stdin)")->required();
    };

    auto* eq = slk->add_subcommand("equation", "difference equation of a frieze");
    add_file(eq);
    eq->callback([&action, &o, file] {
      action = [&o, file] { return cmd_slk_equation(o, json_of_file(*file, std::cin)); };
    });

    auto* gale = slk->add_subcommand("gale", "combinatorial Gale dual");
    add_file(gale);
    gale->callback([&action, &o, file] {
      action = [&o, file] {
        SLFrieze f = sl_frieze_of_json(json_of_file(*file, std::cin));
        emit_sl(o, gale_dual(f));
        return 0;
      };
    });

    auto* dual = slk->add_subcommand("dual", "projective dual frieze");
    add_file(dual);
    dual->callback([&action, &o, file] {
      action = [&o, file] {
        SLFrieze f = sl_frieze_of_json(json_of_file(*file, std::cin));
        emit_sl(o, projective_dual(f));
        return 0;
      };
    });

    auto* tb = slk->add_subcommand("tbox", "octahedron-recurrence residual check");
    add_file(tb);
    tb->callback([&action, &o, file] {
      action = [&o, file] { return cmd_slk_tbox(o, json_of_file(*file, std::cin)); };
    });

    auto* val = slk->add_subcommand("validate", "unit-minor and tameness check");
    add_file(val);
    val->callback([&action, &o, file] {
      action = [&o, file] { return cmd_slk_validate(o, json_of_file(*file, std::cin)); };
    });

    auto* cen = slk->add_subcommand("census", "positive integer friezes up to a bound");
    auto k = std::make_shared<int>(0);
    auto w = std::make_shared<int>(0);
    auto bound = std::make_shared<long>(0);
    cen->add_option("--k", *k, "minor order minus one")->required();
    cen->add_option("--w", *w, "band width")->required();
    cen->add_option("--bound", *bound, "entry bound")->required();
    cen->add_flag("--count-only", o.count_only, "print only the count");
    cen->callback([&action, &o, k, w, bound] {
      action = [&o, k, w, bound] { return cmd_slk_census(o, *k, *w, *bound); };
    });

    auto* blk = slk->add_subcommand("block", "fundamental block of an antiperiodic tiling");
    auto q = std::make_shared<std::string>();
    auto qp = std::make_shared<std::string>();
    auto matrix = std::make_shared<std::string>();
    blk->add_option("--q", *q, "column quiddity a1,...,an")->required();
    blk->add_option("--qp", *qp, "row quiddity a'1,...,a'm")->required();
    blk->add_option("--matrix", *matrix, "2x2 matrix a,b,c,d row-major")->required();
    blk->callback([&action, &o, q, qp, matrix] {
      action = [&o, q, qp, matrix] { return cmd_slk_block(o, *q, *qp, *matrix); };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    err << e.name << ": " << e.what() << '\n';
    return e.name == "ParseError" ? 1 : 2;
  }

  try {
    return action ? action() : 1;
  } catch (const Error& e) {
    err << e.name << ": " << e.what() << '\n';
    return e.name == "ParseError" ? 1 : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace frieze
