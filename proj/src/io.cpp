#include "frieze/io.hpp"

#include <algorithm>
#include <sstream>

namespace frieze {

namespace {

Json rats_to_json(const std::vector<Rat>& v) {
  Json a = Json::array();
  for (const Rat& r : v) a.push_back(show(r));
  return a;
}

Json table_to_json(const std::vector<std::vector<Rat>>& t) {
  Json a = Json::array();
  for (const auto& row : t) a.push_back(rats_to_json(row));
  return a;
}

[[noreturn]] void bad(const std::string& what) { throw Error("ParseError", what); }

void need(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field ") + key);
}

long get_int(const Json& j, const char* key) {
  need(j, key);
  if (!j[key].is_number_integer()) bad(std::string(key) + " must be an integer");
  return j[key].get<long>();
}

std::vector<Rat> rats_of_json(const Json& j) {
  if (!j.is_array()) bad("expected an array of rationals");
  std::vector<Rat> v;
  for (const auto& e : j) v.push_back(rat_of_json(e));
  return v;
}

std::vector<std::vector<Rat>> table_of_json(const Json& j) {
  if (!j.is_array()) bad("expected an array of rows");
  std::vector<std::vector<Rat>> t;
  for (const auto& row : j) t.push_back(rats_of_json(row));
  return t;
}

void check_kind(const Json& j, const char* kind) {
  need(j, "kind");
  if (j["kind"] != kind) bad(std::string("expected kind \"") + kind + "\"");
}

}  // namespace

Rat rat_of_json(const Json& j) {
  try {
    if (j.is_number_integer()) return Rat(j.get<long>());
    if (j.is_string()) return parse_rat(j.get<std::string>());
  } catch (const Error&) {
  }
  bad("not a rational");
}

Json to_json(const CoxeterFrieze& f) {
  Json rows = Json::array();
  for (int d = 0; d < f.m; ++d) {
    std::vector<Rat> row(f.n);
    for (int i = 0; i < f.n; ++i) row[i] = f.band[imod(i + 1, f.n)][d];
    rows.push_back(rats_to_json(row));
  }
  return Json{{"kind", "coxeter"},
              {"width", f.m},
              {"order", f.n},
              {"first_row", rats_to_json(f.first_row())},
              {"entries", rows}};
}

CoxeterFrieze coxeter_of_json(const Json& j) {
  check_kind(j, "coxeter");
  CoxeterFrieze f;
  f.m = int(get_int(j, "width"));
  f.n = int(get_int(j, "order"));
  if (f.m < 0 || f.n != f.m + 3) bad("order must be width + 3");
  need(j, "entries");
  auto rows = table_of_json(j["entries"]);
  if (long(rows.size()) != f.m) bad("entries must hold one row per width");
  for (const auto& r : rows)
    if (long(r.size()) != f.n) bad("each row must have length order");
  f.band.assign(f.n, std::vector<Rat>(f.m));
  for (int d = 0; d < f.m; ++d)
    for (int i = 0; i < f.n; ++i) f.band[imod(i + 1, f.n)][d] = rows[d][i];
  if (j.contains("first_row") && rats_of_json(j["first_row"]) != f.first_row())
    bad("first_row disagrees with entries");
  return f;
}

Json to_json(const Triangulation& t) {
  Json diag = Json::array();
  for (auto [a, b] : t.diagonals) diag.push_back(Json::array({a, b}));
  return Json{{"kind", "triangulation"}, {"n", t.n}, {"diagonals", diag}};
}

Triangulation triangulation_of_json(const Json& j) {
  check_kind(j, "triangulation");
  Triangulation t;
  t.n = int(get_int(j, "n"));
  need(j, "diagonals");
  if (!j["diagonals"].is_array()) bad("diagonals must be an array of pairs");
  for (const auto& d : j["diagonals"]) {
    if (!d.is_array() || d.size() != 2 || !d[0].is_number_integer() || !d[1].is_number_integer())
      bad("diagonal must be a pair of vertices");
    t.diagonals.emplace_back(d[0].get<int>(), d[1].get<int>());
  }
  return t;
}

Json to_json(const Dissection& d) {
  Json cells = Json::array();
  for (const auto& c : d.cells) cells.push_back(c);
  return Json{{"kind", "dissection"}, {"n", d.n}, {"cells", cells}};
}

Dissection dissection_of_json(const Json& j) {
  check_kind(j, "dissection");
  Dissection d;
  d.n = int(get_int(j, "n"));
  need(j, "cells");
  if (!j["cells"].is_array()) bad("cells must be an array of vertex lists");
  for (const auto& c : j["cells"]) {
    if (!c.is_array()) bad("cell must be a vertex list");
    std::vector<int> cell;
    for (const auto& v : c) {
      if (!v.is_number_integer()) bad("vertex must be an integer");
      cell.push_back(v.get<int>());
    }
    d.cells.push_back(std::move(cell));
  }
  return d;
}

const char* rule_name(FriezeRule r) {
  switch (r) {
    case FriezeRule::additive: return "additive";
    case FriezeRule::multiplicative: return "multiplicative";
    case FriezeRule::tropical: return "tropical";
    case FriezeRule::cluster_additive: return "cluster_additive";
  }
  return "additive";
}

FriezeRule rule_of_name(const std::string& s) {
  if (s == "additive") return FriezeRule::additive;
  if (s == "multiplicative") return FriezeRule::multiplicative;
  if (s == "tropical") return FriezeRule::tropical;
  if (s == "cluster_additive") return FriezeRule::cluster_additive;
  bad("unknown rule " + s);
}

Json to_json(const QFrieze& f) {
  Json arrows = Json::array();
  for (auto [a, b] : f.quiver.arrows) arrows.push_back(Json::array({a, b}));
  return Json{{"kind", "qfrieze"},
              {"quiver", Json{{"n", f.quiver.n}, {"arrows", arrows}}},
              {"rule", rule_name(f.rule)},
              {"slice0", rats_to_json(f.slice0)}};
}

QFrieze qfrieze_of_json(const Json& j) {
  check_kind(j, "qfrieze");
  QFrieze f;
  need(j, "quiver");
  const Json& q = j["quiver"];
  f.quiver.n = int(get_int(q, "n"));
  need(q, "arrows");
  for (const auto& a : q["arrows"]) {
    if (!a.is_array() || a.size() != 2) bad("arrow must be a pair");
    f.quiver.arrows.emplace_back(a[0].get<int>(), a[1].get<int>());
  }
  need(j, "rule");
  if (!j["rule"].is_string()) bad("rule must be a string");
  f.rule = rule_of_name(j["rule"].get<std::string>());
  need(j, "slice0");
  f.slice0 = rats_of_json(j["slice0"]);
  return f;
}

Json to_json(const SLFrieze& f) {
  return Json{{"kind", "sl_frieze"}, {"k", f.k}, {"w", f.w}, {"band", table_to_json(f.band)}};
}

SLFrieze sl_frieze_of_json(const Json& j) {
  check_kind(j, "sl_frieze");
  SLFrieze f;
  f.k = int(get_int(j, "k"));
  f.w = int(get_int(j, "w"));
  if (f.k < 1 || f.w < 1) bad("need k >= 1 and w >= 1");
  need(j, "band");
  f.band = table_of_json(j["band"]);
  if (long(f.band.size()) != f.n()) bad("band must have k+w+2 rows");
  for (const auto& r : f.band)
    if (long(r.size()) != f.w) bad("each band row must have length w");
  return f;
}

Json to_json(const TilingBlock& b) {
  return Json{
      {"kind", "sl2_block"}, {"rows", b.rows()}, {"cols", b.cols()}, {"block", table_to_json(b.p)}};
}

TilingBlock block_of_json(const Json& j) {
  check_kind(j, "sl2_block");
  TilingBlock b;
  b.p = table_of_json(j.contains("block") ? j["block"] : Json());
  if (long(b.p.size()) != get_int(j, "rows")) bad("rows disagrees with block");
  for (const auto& r : b.p)
    if (long(r.size()) != get_int(j, "cols")) bad("cols disagrees with block");
  return b;
}

Json to_json(const Mat& m) {
  std::vector<std::vector<Rat>> t(m.rows(), std::vector<Rat>(m.cols()));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) t[r][c] = m.at(r, c);
  return Json{{"kind", "matrix"}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", table_to_json(t)}};
}

std::vector<std::vector<std::string>> band_grid(const std::vector<std::vector<Rat>>& band, int dmin,
                                                int dmax, int n) {
  // Rectangular window of the periodic plane: row d holds the entries
  // (i, i+d) whose plot column 2i+d+1 lands in [0, 2n).
  std::vector<std::vector<std::string>> grid(dmax - dmin + 1, std::vector<std::string>(2 * n));
  for (int d = dmin; d <= dmax; ++d)
    for (int c = 0; c < 2 * n; ++c) {
      if (imod(c - d - 1, 2) != 0) continue;
      long i = imod((c - d - 1) / 2, n);
      Rat v;
      if (d >= 0 && d < int(band[size_t(i)].size())) v = band[size_t(i)][d];
      else v = 1;  // unit border rows
      grid[d - dmin][c] = show(v);
    }
  return grid;
}

std::vector<std::vector<std::string>> grid_of(const CoxeterFrieze& f) {
  // Rows of the printed pattern anchor at e_{1,1+d}; shift the band over.
  std::vector<std::vector<Rat>> shifted(f.n);
  for (int i = 0; i < f.n; ++i) shifted[i] = f.band[imod(i + 1, f.n)];
  return band_grid(shifted, -1, f.m, f.n);
}

std::vector<std::vector<std::string>> grid_of(const SLFrieze& f) {
  return band_grid(f.band, -1, f.w, f.n());
}

std::vector<std::vector<std::string>> grid_of(const Mat& m) {
  std::vector<std::vector<std::string>> g(m.rows(), std::vector<std::string>(m.cols()));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) g[r][c] = show(m.at(r, c));
  return g;
}

std::vector<std::vector<std::string>> grid_of(const TilingBlock& b) {
  std::vector<std::vector<std::string>> g(b.rows(), std::vector<std::string>(b.cols()));
  for (long r = 0; r < b.rows(); ++r)
    for (long c = 0; c < b.cols(); ++c) g[r][c] = show(b.p[r][c]);
  return g;
}

std::string csv_of(const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream out;
  for (const auto& row : rows) {
    for (size_t c = 0; c < row.size(); ++c) {
      if (c) out << ',';
      out << row[c];
    }
    out << '\n';
  }
  return out.str();
}

std::string pretty_of(const std::vector<std::vector<std::string>>& rows) {
  size_t w = 1;
  bool staggered = true;
  for (const auto& row : rows) {
    int parity = -1;
    for (size_t c = 0; c < row.size(); ++c) {
      if (row[c].empty()) continue;
      w = std::max(w, row[c].size());
      if (parity == -1) parity = int(c % 2);
      else if (parity != int(c % 2)) staggered = false;
    }
  }
  // Staggered band layouts use half-cell columns; dense grids full cells.
  size_t unit = staggered ? (w + 2 + 1) / 2 : w + 1;
  std::ostringstream out;
  for (const auto& row : rows) {
    std::string line;
    for (size_t c = 0; c < row.size(); ++c)
      if (!row[c].empty()) {
        if (line.size() < c * unit) line.resize(c * unit, ' ');
        else if (!line.empty()) line += ' ';
        line += row[c];
      }
    out << line << '\n';
  }
  return out.str();
}

}  // namespace frieze
