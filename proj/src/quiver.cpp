#include "agemo/quiver.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace agemo {

ParseError::ParseError(const std::string& msg, std::size_t l, std::size_t c)
    : std::runtime_error(std::to_string(l) + ":" + std::to_string(c) + ": " + msg),
      line(l),
      column(c) {}

std::optional<std::size_t> QuiverPresentation::arrow_index(std::string_view label) const {
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].label == label) return i;
  return std::nullopt;
}

std::optional<std::size_t> QuiverPresentation::vertex_index(std::string_view label) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == label) return i;
  return std::nullopt;
}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

struct Cursor {
  std::string_view s;
  std::size_t pos = 0;
  std::size_t line = 0;
  std::size_t offset = 0;  // column of s[0], 1-based

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  std::size_t column() const { return offset + pos; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line, column()); }
  std::string ident() {
    skip_ws();
    if (pos >= s.size() || !ident_start(s[pos])) fail("expected identifier");
    std::size_t b = pos;
    while (pos < s.size() && ident_char(s[pos])) ++pos;
    return std::string(s.substr(b, pos - b));
  }
  std::string number() {
    skip_ws();
    std::size_t b = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (b == pos) fail("expected number");
    return std::string(s.substr(b, pos - b));
  }
  long integer() {
    skip_ws();
    bool neg = false;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) neg = s[pos++] == '-';
    long v = std::stol(number());
    return neg ? -v : v;
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }
};

mpq_class parse_rational(Cursor& cur) {
  cur.skip_ws();
  bool neg = false;
  if (cur.pos < cur.s.size() && (cur.s[cur.pos] == '-' || cur.s[cur.pos] == '+'))
    neg = cur.s[cur.pos++] == '-';
  mpq_class v(mpz_class(cur.number()));
  if (cur.peek() == '/') {
    ++cur.pos;
    mpz_class d(cur.number());
    if (d == 0) cur.fail("zero denominator");
    v /= mpq_class(d);
  }
  return neg ? mpq_class(-v) : v;
}

mpq_class power(const mpq_class& base, long e) {
  mpq_class r(1);
  mpq_class b = e < 0 ? mpq_class(1 / base) : base;
  for (long i = 0; i < std::labs(e); ++i) r *= b;
  return r;
}

RelationTerm parse_term(Cursor& cur, const QuiverPresentation& p, bool negative) {
  RelationTerm term;
  if (negative) term.coeff.constant = -1;
  std::vector<std::size_t> written;
  std::map<std::string, long> pw;
  bool first = true;
  while (true) {
    char c = cur.peek();
    bool divide = false;
    if (!first) {
      if (c == '*') {
        ++cur.pos;
      } else if (c == '/') {
        ++cur.pos;
        divide = true;
      } else if (!(ident_start(c) || std::isdigit(static_cast<unsigned char>(c)))) {
        break;
      }
    }
    first = false;
    std::size_t col = cur.column();
    c = cur.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpq_class v(mpz_class(cur.number()));
      long e = 1;
      if (cur.peek() == '^') {
        ++cur.pos;
        e = cur.integer();
      }
      v = power(v, divide ? -e : e);
      if (sgn(v) == 0 && divide) throw ParseError("division by zero", cur.line, col);
      term.coeff.constant *= v;
    } else if (ident_start(c)) {
      std::string id = cur.ident();
      long e = 1;
      if (cur.peek() == '^') {
        ++cur.pos;
        e = cur.integer();
      }
      if (p.params.count(id)) {
        pw[id] += divide ? -e : e;
      } else if (auto a = p.arrow_index(id)) {
        if (divide) throw ParseError("cannot divide by arrow '" + id + "'", cur.line, col);
        if (e < 1) throw ParseError("arrow power must be positive", cur.line, col);
        for (long i = 0; i < e; ++i) written.push_back(*a);
      } else {
        throw ParseError("unknown arrow '" + id + "'", cur.line, col);
      }
    } else {
      cur.fail("expected coefficient or arrow");
    }
  }
  for (auto& [k, v] : pw)
    if (v != 0) term.coeff.powers.emplace_back(k, v);
  term.path.assign(written.rbegin(), written.rend());
  return term;
}

Relation parse_relation(Cursor& cur, const QuiverPresentation& p) {
  Relation r;
  r.line = cur.line;
  r.column = cur.column();
  r.text = std::string(cur.s.substr(cur.pos));
  bool negative = false;
  char c = cur.peek();
  if (c == '+' || c == '-') {
    negative = c == '-';
    ++cur.pos;
  }
  while (true) {
    std::size_t col = cur.column();
    RelationTerm t = parse_term(cur, p, negative);
    if (t.path.empty()) throw ParseError("term without arrows", cur.line, col);
    for (std::size_t i = 1; i < t.path.size(); ++i)
      if (p.arrows[t.path[i - 1]].target != p.arrows[t.path[i]].source)
        throw ParseError("non-composable path: '" + p.arrows[t.path[i]].label + "' cannot follow '" +
                             p.arrows[t.path[i - 1]].label + "'",
                         cur.line, col);
    std::size_t s = p.arrows[t.path.front()].source, e = p.arrows[t.path.back()].target;
    if (r.terms.empty()) {
      r.source = s;
      r.target = e;
    } else if (s != r.source || e != r.target) {
      throw ParseError("terms of a relation must share source and target", cur.line, col);
    }
    r.terms.push_back(std::move(t));
    if (cur.done()) break;
    c = cur.peek();
    if (c != '+' && c != '-') cur.fail("expected '+' or '-'");
    negative = c == '-';
    ++cur.pos;
  }
  return r;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

QuiverPresentation parse_quiver(std::string_view text) {
  QuiverPresentation p;
  std::size_t line_no = 0, start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (auto h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
    if (trim(line).empty()) {
      if (end == text.size()) break;
      continue;
    }
    Cursor cur{line, 0, line_no, 1};
    std::string kw = cur.ident();
    if (kw == "quiver") {
      p.name = cur.ident();
    } else if (kw == "field") {
      cur.skip_ws();
      std::string_view rest = trim(line.substr(cur.pos));
      try {
        p.field = Field::parse(rest);
      } catch (const std::exception& e) {
        cur.fail(e.what());
      }
      cur.pos = line.size();
    } else if (kw == "param") {
      std::string name = cur.ident();
      if (p.params.count(name)) cur.fail("parameter '" + name + "' declared twice");
      if (p.arrow_index(name)) cur.fail("parameter '" + name + "' clashes with an arrow");
      std::optional<mpq_class> value;
      if (cur.peek() == '=') {
        ++cur.pos;
        value = parse_rational(cur);
      }
      p.params[name] = value;
      p.param_order.push_back(name);
    } else if (kw == "vertex") {
      while (!cur.done()) {
        cur.skip_ws();
        std::size_t b = cur.pos;
        while (cur.pos < line.size() && !std::isspace(static_cast<unsigned char>(line[cur.pos]))) ++cur.pos;
        std::string v(line.substr(b, cur.pos - b));
        if (p.vertex_index(v)) cur.fail("vertex '" + v + "' declared twice");
        p.vertices.push_back(v);
      }
    } else if (kw == "arrow") {
      std::string name = cur.ident();
      if (p.arrow_index(name)) cur.fail("arrow '" + name + "' declared twice");
      if (p.params.count(name)) cur.fail("arrow '" + name + "' clashes with a parameter");
      cur.expect(':');
      auto vertex_token = [&]() {
        cur.skip_ws();
        std::size_t b = cur.pos;
        while (cur.pos < line.size() && !std::isspace(static_cast<unsigned char>(line[cur.pos])) &&
               line[cur.pos] != '-')
          ++cur.pos;
        std::string v(line.substr(b, cur.pos - b));
        auto idx = p.vertex_index(v);
        if (!idx) throw ParseError("unknown vertex '" + v + "'", line_no, b + 1);
        return *idx;
      };
      std::size_t src = vertex_token();
      cur.expect('-');
      if (cur.pos >= line.size() || line[cur.pos] != '>') cur.fail("expected '->'");
      ++cur.pos;
      std::size_t tgt = vertex_token();
      p.arrows.push_back({name, src, tgt});
    } else if (kw == "relation") {
      if (cur.done()) cur.fail("empty relation");
      Cursor rest{line.substr(cur.pos), 0, line_no, cur.pos + 1};
      p.relations.push_back(parse_relation(rest, p));
      cur.pos = line.size();
    } else {
      throw ParseError("unknown keyword '" + kw + "'", line_no, 1);
    }
    if (!cur.done()) cur.fail("unexpected trailing input");
    if (end == text.size()) break;
  }
  if (p.vertices.empty()) throw ParseError("no vertices declared", line_no, 1);
  return p;
}

Scalar evaluate(const Coefficient& c, const std::map<std::string, mpq_class>& bindings, Field f) {
  mpq_class v = c.constant;
  for (const auto& [name, e] : c.powers) {
    auto it = bindings.find(name);
    if (it == bindings.end()) throw std::invalid_argument("unbound parameter '" + name + "'");
    if (sgn(it->second) == 0 && e < 0)
      throw std::invalid_argument("parameter '" + name + "' is zero but appears in a denominator");
    v *= power(it->second, e);
  }
  return Scalar(f, v);
}

namespace {

using Seq = std::vector<std::size_t>;

struct PathSpace {
  // Paths grouped by length; trivial paths are stored as (vertex) with empty sequence.
  std::vector<PathBasis::Path> paths;
  std::map<std::pair<std::size_t, Seq>, std::size_t> index;  // (vertex for trivial, seq)

  std::size_t find(const QuiverPresentation& p, std::size_t vertex, const Seq& s) const {
    auto it = index.find({s.empty() ? vertex : p.vertices.size(), s});
    return it == index.end() ? static_cast<std::size_t>(-1) : it->second;
  }
};

PathSpace enumerate_paths(const QuiverPresentation& p, std::size_t max_len, std::size_t cap) {
  PathSpace sp;
  const std::size_t nv = p.vertices.size();
  std::vector<std::size_t> layer;
  for (std::size_t v = 0; v < nv; ++v) {
    sp.index[{v, {}}] = sp.paths.size();
    layer.push_back(sp.paths.size());
    sp.paths.push_back({v, v, {}});
  }
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::size_t> next;
    for (std::size_t idx : layer) {
      for (std::size_t a = 0; a < p.arrows.size(); ++a) {
        const auto& prev = sp.paths[idx];
        if (p.arrows[a].source != prev.target) continue;
        if (len == 1 && prev.source != p.arrows[a].source) continue;
        PathBasis::Path q{prev.source, p.arrows[a].target, prev.arrows};
        q.arrows.push_back(a);
        if (sp.paths.size() >= cap)
          throw DimensionBlowup("path space exceeds " + std::to_string(cap) + " paths at length " +
                                std::to_string(len));
        sp.index[{nv, q.arrows}] = sp.paths.size();
        next.push_back(sp.paths.size());
        sp.paths.push_back(std::move(q));
      }
    }
    layer = std::move(next);
  }
  return sp;
}

struct EvaluatedRelation {
  std::size_t source, target, min_len, max_len;
  std::vector<std::pair<Scalar, Seq>> terms;
};

// Sum of u * r * w over the path space, dropping terms longer than `keep_below` when truncating.
std::optional<Vec> sandwich(const QuiverPresentation& p, const PathSpace& sp, const EvaluatedRelation& r,
                            const PathBasis::Path& w, const PathBasis::Path& u, std::size_t limit,
                            Field f) {
  Vec v = zero_vec(sp.paths.size(), f);
  bool any = false;
  for (const auto& [c, seq] : r.terms) {
    Seq full = w.arrows;
    full.insert(full.end(), seq.begin(), seq.end());
    full.insert(full.end(), u.arrows.begin(), u.arrows.end());
    if (full.size() >= limit) continue;
    std::size_t idx = sp.find(p, 0, full);
    if (idx == static_cast<std::size_t>(-1)) throw std::logic_error("path not enumerated");
    v[idx] += c;
    any = true;
  }
  if (!any) return std::nullopt;
  return v;
}

std::string path_label(const QuiverPresentation& p, const PathBasis::Path& path) {
  if (path.arrows.empty()) return p.vertices.size() == 1 ? "e" : "e" + p.vertices[path.source];
  bool short_labels = std::all_of(p.arrows.begin(), p.arrows.end(),
                                  [](const Arrow& a) { return a.label.size() == 1; });
  std::string out;
  for (auto it = path.arrows.rbegin(); it != path.arrows.rend(); ++it) {
    if (!out.empty() && !short_labels) out += "*";
    out += p.arrows[*it].label;
  }
  return out;
}

}  // namespace

CompiledQuiver build_path_algebra(const QuiverPresentation& pres, const BuildOptions& opts) {
  const Field f = opts.field.value_or(pres.field);
  std::map<std::string, mpq_class> bindings;
  for (const auto& [k, v] : pres.params)
    if (v) bindings[k] = *v;
  for (const auto& [k, v] : opts.overrides) {
    if (!pres.params.count(k)) throw std::invalid_argument("unknown parameter '" + k + "'");
    bindings[k] = v;
  }
  std::vector<EvaluatedRelation> rels;
  for (const auto& r : pres.relations) {
    EvaluatedRelation er{r.source, r.target, static_cast<std::size_t>(-1), 0, {}};
    for (const auto& t : r.terms) {
      Scalar c = evaluate(t.coeff, bindings, f);
      er.min_len = std::min(er.min_len, t.path.size());
      er.max_len = std::max(er.max_len, t.path.size());
      er.terms.emplace_back(c, t.path);
    }
    rels.push_back(std::move(er));
  }

  // Find the first length L at which all paths of length L lie in the truncated ideal.
  std::size_t stable = 0;
  for (std::size_t ell = 1; ell <= opts.max_length && !stable; ++ell) {
    PathSpace sp = enumerate_paths(pres, ell, opts.max_paths);
    IncrementalBasis ideal(sp.paths.size(), f);
    for (const auto& r : rels)
      for (const auto& w : sp.paths) {
        if (w.target != r.source) continue;
        if (w.arrows.empty() && w.source != r.source) continue;
        for (const auto& u : sp.paths) {
          if (u.source != r.target) continue;
          if (u.arrows.empty() && u.source != r.target) continue;
          if (w.arrows.size() + u.arrows.size() + r.max_len > ell) continue;
          if (auto v = sandwich(pres, sp, r, w, u, ell + 1, f)) ideal.add(*v);
        }
      }
    bool all_in = true;
    for (std::size_t i = 0; i < sp.paths.size() && all_in; ++i)
      if (sp.paths[i].arrows.size() == ell)
        all_in = ideal.contains(unit_vec(sp.paths.size(), i, f));
    if (all_in) stable = ell;
  }
  if (!stable)
    throw DimensionBlowup("presentation does not stabilize up to path length " +
                          std::to_string(opts.max_length));

  // Quotient of the paths shorter than `stable` by the truncated ideal.
  PathSpace sp = enumerate_paths(pres, stable - 1, opts.max_paths);
  const std::size_t np = sp.paths.size();
  IncrementalBasis trunc(np, f);
  std::vector<Vec> ideal_vectors;
  for (const auto& r : rels)
    for (const auto& w : sp.paths) {
      if (w.target != r.source) continue;
      for (const auto& u : sp.paths) {
        if (u.source != r.target) continue;
        if (w.arrows.size() + u.arrows.size() + r.min_len >= stable) continue;
        if (auto v = sandwich(pres, sp, r, w, u, stable, f))
          if (trunc.add(*v)) ideal_vectors.push_back(*v);
      }
    }
  IncrementalBasis span = trunc;
  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < np; ++i)
    if (span.add(unit_vec(np, i, f))) chosen.push_back(i);
  const std::size_t n = chosen.size();

  std::vector<Vec> cols;
  for (auto i : chosen) cols.push_back(unit_vec(np, i, f));
  for (const auto& v : ideal_vectors) cols.push_back(v);
  CoordinateSystem cs(Matrix::from_columns(np, cols, f));

  CompiledQuiver out;
  out.presentation = pres;
  out.basis.stable_length = stable;
  for (std::size_t i = 0; i < np; ++i) {
    Vec c = *cs.coordinates(unit_vec(np, i, f));
    c.resize(n);
    if (sp.paths[i].arrows.empty())
      out.trivial_forms.push_back(c);
    else
      out.normal_forms[sp.paths[i].arrows] = c;
  }
  for (auto i : chosen) {
    out.basis.paths.push_back(sp.paths[i]);
    out.basis.labels.push_back(path_label(pres, sp.paths[i]));
  }

  // b_i * b_j applies b_j first.
  std::vector<std::vector<Vec>> table(n, std::vector<Vec>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& bi = out.basis.paths[i];
      const auto& bj = out.basis.paths[j];
      if (bj.target != bi.source) {
        table[i][j] = zero_vec(n, f);
        continue;
      }
      if (bi.arrows.empty()) {
        table[i][j] = unit_vec(n, j, f);
      } else if (bj.arrows.empty()) {
        table[i][j] = unit_vec(n, i, f);
      } else {
        Seq s = bj.arrows;
        s.insert(s.end(), bi.arrows.begin(), bi.arrows.end());
        table[i][j] = s.size() >= stable ? zero_vec(n, f) : out.normal_forms.at(s);
      }
    }
  Vec unit = zero_vec(n, f);
  std::vector<Vec> idem;
  for (const auto& t : out.trivial_forms) {
    for (std::size_t k = 0; k < n; ++k) unit[k] += t[k];
    idem.push_back(t);
  }
  std::vector<Vec> radical;
  for (std::size_t i = 0; i < n; ++i)
    if (!out.basis.paths[i].arrows.empty()) radical.push_back(unit_vec(n, i, f));
  out.algebra = finalize(Algebra(pres.name, f, out.basis.labels, std::move(table), std::move(unit),
                                 std::move(idem), std::move(radical)));
  return out;
}

Vec path_normal_form(const CompiledQuiver& c, std::span<const std::size_t> path) {
  const auto& p = c.presentation;
  const std::size_t n = c.algebra->dim();
  if (path.empty()) throw std::invalid_argument("trivial path needs a vertex");
  for (auto a : path)
    if (a >= p.arrows.size()) throw std::invalid_argument("arrow index out of range");
  for (std::size_t i = 1; i < path.size(); ++i)
    if (p.arrows[path[i - 1]].target != p.arrows[path[i]].source)
      throw std::invalid_argument("non-composable path");
  if (path.size() >= c.basis.stable_length) return zero_vec(n, c.algebra->field());
  return c.normal_forms.at(Seq(path.begin(), path.end()));
}

Vec path_normal_form(const CompiledQuiver& c, std::string_view written, std::size_t vertex) {
  std::string_view w = trim(written);
  if (w.empty() || w == "e") {
    if (vertex >= c.trivial_forms.size()) throw std::invalid_argument("vertex out of range");
    return c.trivial_forms[vertex];
  }
  Seq seq;
  std::size_t start = 0;
  while (start <= w.size()) {
    std::size_t end = w.find('*', start);
    if (end == std::string_view::npos) end = w.size();
    std::string_view label = trim(w.substr(start, end - start));
    auto a = c.presentation.arrow_index(label);
    if (!a) throw std::invalid_argument("unknown arrow '" + std::string(label) + "'");
    seq.push_back(*a);
    start = end + 1;
  }
  std::reverse(seq.begin(), seq.end());
  return path_normal_form(c, seq);
}

}  // namespace agemo
