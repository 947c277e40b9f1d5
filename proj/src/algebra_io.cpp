#include "agemo/algebra_io.hpp"

#include "agemo/quiver.hpp"

#include <map>
#include <optional>
#include <sstream>

namespace agemo {

namespace {

std::vector<std::string> split_words(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream is{std::string(line)};
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

}  // namespace

Algebra parse_algebra_table(std::string_view text) {
  std::string name = "algebra";
  Field field = Field::rational();
  std::vector<std::string> labels;
  std::map<std::string, std::size_t> index;
  std::optional<Vec> unit;
  std::map<std::pair<std::size_t, std::size_t>, Vec> products;
  std::vector<Vec> idempotents;
  std::optional<std::vector<Vec>> radical;

  std::size_t line_no = 0, pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto w = split_words(line);
    if (w.empty()) continue;
    auto fail = [&](const std::string& msg) -> ParseError { return ParseError(msg, line_no, 1); };
    auto need_basis = [&]() {
      if (labels.empty()) throw fail("'" + w[0] + "' before 'basis'");
    };
    auto label_index = [&](const std::string& l) {
      auto it = index.find(l);
      if (it == index.end()) throw fail("unknown basis element '" + l + "'");
      return it->second;
    };
    auto coords = [&](std::size_t from) {
      need_basis();
      if (w.size() - from != labels.size())
        throw fail("expected " + std::to_string(labels.size()) + " coordinates, got " +
                   std::to_string(w.size() - from));
      Vec v;
      for (std::size_t i = from; i < w.size(); ++i) {
        try {
          v.push_back(Scalar::parse(field, w[i]));
        } catch (const std::exception& e) {
          throw fail(std::string("bad coordinate '") + w[i] + "': " + e.what());
        }
      }
      return v;
    };
    const std::string& kw = w[0];
    if (kw == "algebra") {
      if (w.size() != 2) throw fail("expected 'algebra NAME'");
      name = w[1];
    } else if (kw == "field") {
      if (w.size() != 2) throw fail("expected 'field Q' or 'field Fp'");
      if (!labels.empty()) throw fail("'field' must precede 'basis'");
      try {
        field = Field::parse(w[1]);
      } catch (const std::exception& e) {
        throw fail(e.what());
      }
    } else if (kw == "basis") {
      if (!labels.empty()) throw fail("duplicate 'basis'");
      if (w.size() < 2) throw fail("empty basis");
      for (std::size_t i = 1; i < w.size(); ++i) {
        if (index.count(w[i])) throw fail("duplicate basis label '" + w[i] + "'");
        index[w[i]] = labels.size();
        labels.push_back(w[i]);
      }
    } else if (kw == "unit") {
      unit = coords(1);
    } else if (kw == "mul") {
      if (w.size() < 4 || w[3] != "=") throw fail("expected 'mul Li Lj = coordinates'");
      need_basis();
      auto key = std::make_pair(label_index(w[1]), label_index(w[2]));
      if (products.count(key)) throw fail("duplicate product " + w[1] + " " + w[2]);
      products[key] = coords(4);
    } else if (kw == "idempotents") {
      need_basis();
      for (std::size_t i = 1; i < w.size(); ++i) idempotents.push_back(unit_vec(labels.size(), label_index(w[i]), field));
    } else if (kw == "idempotent") {
      idempotents.push_back(coords(1));
    } else if (kw == "radical") {
      need_basis();
      if (!radical) radical.emplace();
      for (std::size_t i = 1; i < w.size(); ++i) radical->push_back(unit_vec(labels.size(), label_index(w[i]), field));
    } else if (kw == "radical_vector") {
      if (!radical) radical.emplace();
      radical->push_back(coords(1));
    } else {
      throw fail("unknown directive '" + kw + "'");
    }
  }
  if (labels.empty()) throw ParseError("missing 'basis'", line_no, 1);
  if (!unit) throw ParseError("missing 'unit'", line_no, 1);
  const std::size_t n = labels.size();
  std::vector<std::vector<Vec>> table(n, std::vector<Vec>(n, zero_vec(n, field)));
  for (auto& [k, v] : products) table[k.first][k.second] = std::move(v);
  if (idempotents.empty()) idempotents.push_back(*unit);
  return Algebra(name, field, labels, std::move(table), *unit, std::move(idempotents), std::move(radical));
}

namespace {

std::string join_coords(const Vec& v) {
  std::string s;
  for (const auto& c : v) s += " " + c.to_string();
  return s;
}

std::optional<std::size_t> as_basis_vector(const Vec& v) {
  std::optional<std::size_t> hit;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (!v[i].is_one() || hit) return std::nullopt;
    hit = i;
  }
  return hit;
}

}  // namespace

std::string write_algebra_table(const Algebra& a) {
  std::ostringstream os;
  const auto& labels = a.labels();
  os << "algebra " << a.name() << "\n";
  os << "field " << a.field().to_string() << "\n";
  os << "basis";
  for (const auto& l : labels) os << " " << l;
  os << "\n";
  os << "unit" << join_coords(a.unit()) << "\n";
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (!is_zero(a.product(i, j))) os << "mul " << labels[i] << " " << labels[j] << " =" << join_coords(a.product(i, j)) << "\n";
  bool all_basis = true;
  for (const auto& e : a.idempotents()) all_basis = all_basis && as_basis_vector(e).has_value();
  if (all_basis) {
    os << "idempotents";
    for (const auto& e : a.idempotents()) os << " " << labels[*as_basis_vector(e)];
    os << "\n";
  } else {
    for (const auto& e : a.idempotents()) os << "idempotent" << join_coords(e) << "\n";
  }
  if (const auto& rad = a.supplied_radical()) {
    bool basis_rad = true;
    for (const auto& r : *rad) basis_rad = basis_rad && as_basis_vector(r).has_value();
    if (basis_rad) {
      os << "radical";
      for (const auto& r : *rad) os << " " << labels[*as_basis_vector(r)];
      os << "\n";
    } else {
      for (const auto& r : *rad) os << "radical_vector" << join_coords(r) << "\n";
    }
  }
  return os.str();
}

}  // namespace agemo
