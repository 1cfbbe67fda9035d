#include "syzygy/textformat.hpp"

#include "syzygy/errors.hpp"

#include <fstream>
#include <regex>
#include <sstream>

namespace syz {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

/// Contents of a bracketed list "[a, b]".
std::vector<std::string> bracket_items(int line, const std::string& text) {
  std::string t = trim(text);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']') throw ParseError(line, "expected a bracketed list: " + t);
  std::string inner = trim(t.substr(1, t.size() - 2));
  if (inner.empty()) return {};
  return split_top_level(inner);
}

std::vector<int> int_list(int line, const std::string& text) {
  std::vector<int> out;
  for (const auto& item : bracket_items(line, text)) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw ParseError(line, "expected an integer, got '" + item + "'");
    }
  }
  return out;
}

Polynomial poly(int line, const QuotientRingPtr& ring, const std::string& text) {
  try {
    return ring->parse(text);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(line, e.what());
  }
}

void check_name(int line, const std::string& name) {
  static const std::regex ident("[A-Za-z_][A-Za-z0-9_']*");
  if (!std::regex_match(name, ident)) throw ParseError(line, "bad name '" + name + "'");
}

}  // namespace

std::vector<std::string> split_top_level(const std::string& text) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : text) {
    if (c == '[' || c == '(') ++depth;
    if (c == ']' || c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

Field parse_field(const std::string& text0, const Field& default_field) {
  std::string text = trim(text0);
  if (text == "k") return default_field;
  if (text == "QQ") return Field::rationals();
  static const std::regex gf("GF\\(\\s*([0-9]+)\\s*\\)");
  std::smatch m;
  if (std::regex_match(text, m, gf)) return Field::prime(static_cast<std::uint32_t>(std::stoul(m[1].str())));
  throw Error("unknown field '" + text + "'");
}

const QuotientRingPtr& Document::ring(const std::string& name) const {
  auto it = rings.find(name);
  if (it == rings.end()) throw Error("no ring named '" + name + "'");
  return it->second;
}

const FPModule& Document::module(const std::string& name) const {
  auto it = modules.find(name);
  if (it == modules.end()) throw Error("no module named '" + name + "'");
  return it->second.module;
}

const std::vector<Polynomial>& Document::ideal(const std::string& name) const {
  auto it = ideals.find(name);
  if (it == ideals.end()) throw Error("no ideal named '" + name + "'");
  return it->second.generators;
}

const QuotientRingPtr& Document::ring_of(const std::string& name) const {
  if (auto it = modules.find(name); it != modules.end()) return ring(it->second.ring);
  if (auto it = ideals.find(name); it != ideals.end()) return ring(it->second.ring);
  throw Error("no module or ideal named '" + name + "'");
}

Document parse_document(const std::string& text, const ParseOptions& options) {
  Document doc;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  static const std::regex head_re("(ring|module|ideal)\\s+([^\\s=]+)(\\s+over\\s+([^\\s=]+))?\\s*=\\s*(.*)");
  static const std::regex ring_re("(GF\\(\\s*[0-9]+\\s*\\)|QQ|k)\\s*\\[([^\\]]*)\\]\\s*(.*)");
  while (std::getline(in, raw)) {
    ++line;
    std::string s = raw.substr(0, raw.find('#'));
    s = trim(s);
    if (s.empty()) continue;
    std::smatch m;
    if (!std::regex_match(s, m, head_re)) throw ParseError(line, "expected 'ring', 'module' or 'ideal' declaration");
    const std::string kind = m[1].str(), name = m[2].str(), over = m[4].str(), body = trim(m[5].str());
    check_name(line, name);
    if (doc.rings.count(name) || doc.modules.count(name) || doc.ideals.count(name))
      throw ParseError(line, "name '" + name + "' declared twice");

    if (kind == "ring") {
      if (!over.empty()) throw ParseError(line, "a ring is not declared over anything");
      std::smatch r;
      if (!std::regex_match(body, r, ring_re)) throw ParseError(line, "expected FIELD[vars] after '='");
      Field field;
      try {
        field = options.force_field ? *options.force_field : parse_field(r[1].str(), options.default_field);
      } catch (const Error& e) {
        throw ParseError(line, e.what());
      }
      std::vector<std::string> vars;
      for (const auto& v : split_top_level(r[2].str())) {
        if (v.empty()) continue;
        check_name(line, v);
        vars.push_back(v);
      }
      if (vars.empty()) throw ParseError(line, "a ring needs at least one variable");
      static const std::regex tail_re("(weights\\s*(\\[[^\\]]*\\]))?\\s*(mod\\s*(\\[.*\\]))?");
      std::smatch t;
      const std::string tail = trim(r[3].str());
      if (!std::regex_match(tail, t, tail_re)) throw ParseError(line, "unexpected text '" + tail + "'");
      std::vector<int> weights(vars.size(), 1);
      if (t[1].matched) {
        weights = int_list(line, t[2].str());
        if (weights.size() != vars.size()) throw ParseError(line, "one weight per variable is required");
        for (int x : weights)
          if (x <= 0) throw ParseError(line, "weights must be positive");
      }
      std::vector<std::string> rels;
      if (t[3].matched) rels = bracket_items(line, t[4].str());
      try {
        PolyRingPtr amb = make_poly_ring(vars, weights, field);
        std::vector<Polynomial> gens;
        for (const auto& g : rels) gens.push_back(parse_polynomial(g, amb));
        doc.rings.emplace(name, make_quotient_ring(amb, gens, name));
      } catch (const ParseError&) {
        throw;
      } catch (const Error& e) {
        throw ParseError(line, e.what());
      }
    } else {
      if (over.empty()) throw ParseError(line, kind + " needs 'over RING'");
      auto rit = doc.rings.find(over);
      if (rit == doc.rings.end()) throw ParseError(line, "unknown ring '" + over + "'");
      const QuotientRingPtr& ring = rit->second;
      if (kind == "ideal") {
        std::vector<Polynomial> gens;
        for (const auto& g : bracket_items(line, body)) gens.push_back(poly(line, ring, g));
        for (const auto& g : gens)
          if (!g.is_homogeneous()) throw ParseError(line, "ideal generator " + g.to_string() + " is not homogeneous");
        doc.ideals.emplace(name, Document::NamedIdeal{over, gens});
      } else {
        static const std::regex coker_re("coker\\s*(\\[.*?\\])\\s*(shifts\\s*(\\[[^\\]]*\\]))?");
        std::smatch c;
        if (!std::regex_match(body, c, coker_re)) throw ParseError(line, "expected 'coker [[...]]' with optional 'shifts [...]'");
        const std::string mat = c[1].str();
        const bool has_shifts = c[2].matched;
        std::vector<int> shifts;
        if (has_shifts) shifts = int_list(line, c[3].str());
        std::vector<std::vector<Polynomial>> rows;
        for (const auto& row : bracket_items(line, mat)) {
          std::vector<Polynomial> r;
          for (const auto& e : bracket_items(line, row)) r.push_back(poly(line, ring, e));
          rows.push_back(std::move(r));
        }
        for (const auto& r : rows)
          if (r.size() != rows.front().size()) throw ParseError(line, "matrix rows have different lengths");
        if (!has_shifts) shifts.assign(rows.size(), 0);
        if (shifts.size() != rows.size()) throw ParseError(line, "one shift per matrix row is required");
        try {
          Matrix p = rows.empty() ? Matrix(ring->ambient(), 0, 0)
                                  : (rows.front().empty() ? Matrix(ring->ambient(), rows.size(), 0)
                                                          : Matrix::from_rows(ring->ambient(), rows));
          doc.modules.emplace(name, Document::NamedModule{over, FPModule(ring, p, shifts)});
        } catch (const Error& e) {
          throw ParseError(line, e.what());
        }
      }
    }
    doc.order.push_back(name);
  }
  return doc;
}

Document parse_document_file(const std::string& path, const ParseOptions& options) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str(), options);
}

}  // namespace syz
