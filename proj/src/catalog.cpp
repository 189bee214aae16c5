#include "solvagraph/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "solvagraph/errors.hpp"
#include "solvagraph/numtheory.hpp"

namespace solvagraph {

namespace {

// ---------------------------------------------------------------------------
// Grammar
// ---------------------------------------------------------------------------

struct Cursor {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool consume(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!consume(c)) throw ParseError(std::string("expected '") + c + "'", pos);
  }
  bool consume_word(const std::string& w) {
    skip_ws();
    if (s.compare(pos, w.size(), w) == 0) {
      pos += w.size();
      return true;
    }
    return false;
  }
  int number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw ParseError("expected a number", pos);
    long long v = 0;
    for (std::size_t i = start; i < pos; ++i) {
      v = v * 10 + (s[i] - '0');
      if (v > 1'000'000) throw OutOfRange("number too large", start);
    }
    return static_cast<int>(v);
  }
};

std::vector<std::vector<int>> parse_cycles(Cursor& cur) {
  std::vector<std::vector<int>> cycles;
  std::vector<char> seen;
  bool empty_marker = false;
  while (cur.peek() == '(') {
    std::size_t open = cur.pos;
    cur.expect('(');
    if (cur.consume(')')) {
      empty_marker = true;
      continue;
    }
    std::vector<int> cycle;
    while (true) {
      std::size_t at = cur.pos;
      int p = cur.number();
      if (p < 1) throw OutOfRange("points are 1-based", at);
      if (p > 0xffff) throw OutOfRange("point exceeds the supported range", at);
      int z = p - 1;
      if (static_cast<std::size_t>(z) >= seen.size()) seen.resize(z + 1, 0);
      if (seen[z]) throw ParseError("point repeated in a generator", at);
      seen[z] = 1;
      cycle.push_back(z);
      if (cur.consume(')')) break;
      cur.expect(',');
    }
    if (cycle.size() < 2) throw ParseError("cycle needs at least two points", open);
    cycles.push_back(std::move(cycle));
  }
  if (cycles.empty() && !empty_marker)
    throw ParseError("expected cycle notation", cur.pos);
  return cycles;
}

std::vector<int> parse_matrix(Cursor& cur, int p, int n) {
  std::vector<int> entries;
  cur.expect('[');
  for (int i = 0; i < n; ++i) {
    if (i) cur.expect(',');
    cur.expect('[');
    for (int j = 0; j < n; ++j) {
      if (j) cur.expect(',');
      std::size_t at = cur.pos;
      int v = cur.number();
      if (v >= p) throw OutOfRange("matrix entry must lie in [0, p)", at);
      entries.push_back(v);
    }
    cur.expect(']');
  }
  cur.expect(']');
  return entries;
}

GroupSpec::Atom parse_atom(Cursor& cur) {
  cur.skip_ws();
  if (cur.consume_word("perm:")) {
    GroupSpec::Perms perms;
    while (true) {
      auto cycles = parse_cycles(cur);
      for (const auto& c : cycles)
        for (int z : c) perms.degree = std::max(perms.degree, z + 1);
      perms.cycles.push_back(std::move(cycles));
      if (!cur.consume(';')) break;
    }
    if (perms.degree == 0) perms.degree = 1;  // all generators were identity
    return perms;
  }
  if (cur.consume_word("mat")) {
    GroupSpec::Mats mats;
    if (!cur.consume_word("p=")) throw ParseError("expected p=<prime>", cur.pos);
    std::size_t at = cur.pos;
    mats.p = cur.number();
    if (!is_prime(mats.p)) throw OutOfRange("matrix modulus must be prime", at);
    if (mats.p > 0xffff) throw OutOfRange("matrix modulus exceeds the supported range", at);
    if (!cur.consume_word("n=")) throw ParseError("expected n=<dim>", cur.pos);
    at = cur.pos;
    mats.n = cur.number();
    if (mats.n < 1 || mats.n > 8) throw OutOfRange("matrix dimension out of range", at);
    cur.expect(':');
    while (true) {
      mats.matrices.push_back(parse_matrix(cur, mats.p, mats.n));
      if (!cur.consume(';')) break;
    }
    return mats;
  }
  // Catalog name.
  cur.skip_ws();
  std::size_t start = cur.pos;
  std::string name;
  while (cur.pos < cur.s.size() &&
         (std::isalnum(static_cast<unsigned char>(cur.s[cur.pos])))) {
    name.push_back(cur.s[cur.pos]);
    ++cur.pos;
  }
  if (name.empty()) throw ParseError("expected a group atom", start);
  if (name == "SL2" || name == "PSL2") {
    cur.expect('(');
    int p = cur.number();
    cur.expect(')');
    return GroupSpec::Catalog{name, p};
  }
  // Split trailing digits: C12, D4, S6, A7.
  std::size_t d = name.size();
  while (d > 0 && std::isdigit(static_cast<unsigned char>(name[d - 1]))) --d;
  if (d == 0 || d == name.size()) throw ParseError("unknown catalog name '" + name + "'", start);
  std::string base = name.substr(0, d);
  if (base != "C" && base != "D" && base != "S" && base != "A")
    throw ParseError("unknown catalog name '" + base + "'", start);
  return GroupSpec::Catalog{base, std::stoi(name.substr(d))};
}

}  // namespace

GroupSpec parse_spec(const std::string& text) {
  Cursor cur{text};
  GroupSpec spec;
  spec.factors.push_back(parse_atom(cur));
  while (!cur.eof()) {
    if (!cur.consume('x')) throw ParseError("expected 'x' between factors", cur.pos);
    spec.factors.push_back(parse_atom(cur));
  }
  if (spec.factors.empty()) throw ParseError("empty group spec", 0);
  return spec;
}

namespace {

std::string format_cycles(const std::vector<std::vector<int>>& cycles) {
  if (cycles.empty()) return "()";
  // Canonical form: each cycle rotated to start at its least point, cycles
  // sorted by first point.
  std::vector<std::vector<int>> canon = cycles;
  for (auto& c : canon) {
    auto it = std::min_element(c.begin(), c.end());
    std::rotate(c.begin(), it, c.end());
  }
  std::sort(canon.begin(), canon.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });
  std::ostringstream out;
  for (const auto& c : canon) {
    out << '(';
    for (std::size_t i = 0; i < c.size(); ++i) out << (i ? "," : "") << (c[i] + 1);
    out << ')';
  }
  return out.str();
}

std::string format_atom(const GroupSpec::Atom& atom) {
  if (const auto* c = std::get_if<GroupSpec::Catalog>(&atom)) {
    if (c->name == "SL2" || c->name == "PSL2")
      return c->name + "(" + std::to_string(c->param) + ")";
    return c->name + std::to_string(c->param);
  }
  if (const auto* p = std::get_if<GroupSpec::Perms>(&atom)) {
    std::ostringstream out;
    out << "perm: ";
    for (std::size_t i = 0; i < p->cycles.size(); ++i)
      out << (i ? "; " : "") << format_cycles(p->cycles[i]);
    return out.str();
  }
  const auto& m = std::get<GroupSpec::Mats>(atom);
  std::ostringstream out;
  out << "mat p=" << m.p << " n=" << m.n << ": ";
  for (std::size_t k = 0; k < m.matrices.size(); ++k) {
    if (k) out << "; ";
    out << '[';
    for (int i = 0; i < m.n; ++i) {
      if (i) out << ',';
      out << '[';
      for (int j = 0; j < m.n; ++j)
        out << (j ? "," : "") << m.matrices[k][static_cast<std::size_t>(i) * m.n + j];
      out << ']';
    }
    out << ']';
  }
  return out.str();
}

}  // namespace

std::string format_spec(const GroupSpec& spec) {
  std::ostringstream out;
  for (std::size_t i = 0; i < spec.factors.size(); ++i)
    out << (i ? " x " : "") << format_atom(spec.factors[i]);
  return out.str();
}

// ---------------------------------------------------------------------------
// Constructors
// ---------------------------------------------------------------------------

namespace {

GroupElement cycle_perm(int degree, std::initializer_list<std::initializer_list<int>> cycles) {
  std::vector<int> img(degree);
  for (int i = 0; i < degree; ++i) img[i] = i;
  for (const auto& c : cycles) {
    std::vector<int> v(c);
    for (std::size_t i = 0; i < v.size(); ++i) img[v[i]] = v[(i + 1) % v.size()];
  }
  return GroupElement::permutation(std::move(img));
}

FiniteGroup make_sl2(int p, int cap, const std::string& label) {
  std::vector<GroupElement> gens;
  gens.push_back(GroupElement::matrix_mod_p(p, 2, {1, 1, 0, 1}));
  gens.push_back(GroupElement::matrix_mod_p(p, 2, {0, 1, p - 1, 0}));  // p-1 = -1 mod p
  return close_generators(std::move(gens), label, cap);
}

}  // namespace

FiniteGroup make_catalog_group(const std::string& name, int param, int cap) {
  auto check_order = [&](long long order) {
    if (order > cap)
      throw CapExceeded(name + std::to_string(param) + " has order " + std::to_string(order) +
                        " above the cap " + std::to_string(cap));
  };
  if (name == "C") {
    if (param < 1) throw BadParams("C<n> needs n >= 1");
    check_order(param);
    std::vector<int> img(param);
    for (int i = 0; i < param; ++i) img[i] = (i + 1) % param;
    return close_generators({GroupElement::permutation(std::move(img))},
                            "C" + std::to_string(param), cap);
  }
  if (name == "D") {
    if (param < 1) throw BadParams("D<n> needs n >= 1");
    check_order(2LL * param);
    std::string label = "D" + std::to_string(param);
    if (param == 1) return close_generators({cycle_perm(2, {{0, 1}})}, label, cap);
    if (param == 2) return close_generators({cycle_perm(4, {{0, 1}}), cycle_perm(4, {{2, 3}})}, label, cap);
    std::vector<int> rot(param), refl(param);
    for (int i = 0; i < param; ++i) {
      rot[i] = (i + 1) % param;
      refl[i] = param - 1 - i;
    }
    return close_generators({GroupElement::permutation(std::move(rot)),
                             GroupElement::permutation(std::move(refl))},
                            label, cap);
  }
  if (name == "S" || name == "A") {
    if (param < 1 || param > 7) throw BadParams(name + "<n> supports 1 <= n <= 7");
    long long order = 1;
    for (int i = 2; i <= param; ++i) order *= i;
    if (name == "A" && param >= 2) order /= 2;
    check_order(order);
    std::string label = name + std::to_string(param);
    if (param == 1 || (name == "A" && param == 2))
      return close_generators({GroupElement::identity_permutation(param)}, label, cap);
    if (name == "S") {
      std::vector<int> cyc(param);
      for (int i = 0; i < param; ++i) cyc[i] = (i + 1) % param;
      return close_generators({cycle_perm(param, {{0, 1}}), GroupElement::permutation(std::move(cyc))},
                              label, cap);
    }
    if (param == 3) return close_generators({cycle_perm(3, {{0, 1, 2}})}, label, cap);
    if (param % 2 == 1) {
      std::vector<int> cyc(param);
      for (int i = 0; i < param; ++i) cyc[i] = (i + 1) % param;
      return close_generators({cycle_perm(param, {{0, 1, 2}}), GroupElement::permutation(std::move(cyc))},
                              label, cap);
    }
    std::vector<int> cyc(param);
    cyc[0] = 0;
    for (int i = 1; i < param; ++i) cyc[i] = i % (param - 1) + 1;
    return close_generators({cycle_perm(param, {{0, 1, 2}}), GroupElement::permutation(std::move(cyc))},
                            label, cap);
  }
  if (name == "SL2" || name == "PSL2") {
    if (param != 2 && param != 3 && param != 5 && param != 7)
      throw BadParams(name + " supports p in {2, 3, 5, 7}");
    long long order = static_cast<long long>(param) * (param * param - 1);
    bool proj = name == "PSL2";
    if (proj && param != 2) order /= 2;
    check_order(order);
    std::string label = name + "(" + std::to_string(param) + ")";
    FiniteGroup sl2 = make_sl2(param, cap, proj ? "SL2(" + std::to_string(param) + ")" : label);
    if (!proj) return sl2;
    ElementSet z = sl2.center();
    return quotient_group(sl2, z, label).group;
  }
  throw BadParams("unknown catalog name '" + name + "'");
}

namespace {

GroupElement extend_perm(const GroupElement& e, int total, int offset) {
  std::vector<int> img(total);
  for (int i = 0; i < total; ++i) img[i] = i;
  const auto& base = e.images();
  for (int i = 0; i < e.degree(); ++i) img[offset + i] = offset + base[i];
  return GroupElement::permutation(std::move(img));
}

GroupElement restrict_perm(const GroupElement& e, int from, int len) {
  std::vector<int> img(len);
  for (int i = 0; i < len; ++i) img[i] = e.images()[from + i] - from;
  return GroupElement::permutation(std::move(img));
}

}  // namespace

ProductGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, int cap,
                            std::string label) {
  long long order = static_cast<long long>(a.order()) * b.order();
  if (order > cap)
    throw CapExceeded("direct product order " + std::to_string(order) + " above the cap " +
                      std::to_string(cap));
  if (label.empty()) label = a.label() + " x " + b.label();

  bool both_perm = a.element(0).kind() == ElementKind::Permutation &&
                   b.element(0).kind() == ElementKind::Permutation;
  ProductGroup out;
  if (both_perm) {
    int da = a.element(0).degree();
    int db = b.element(0).degree();
    std::vector<GroupElement> gens;
    for (int g : a.generators()) gens.push_back(extend_perm(a.element(g), da + db, 0));
    for (int g : b.generators()) gens.push_back(extend_perm(b.element(g), da + db, da));
    out.group = close_generators(std::move(gens), label, cap);
    int m = out.group.order();
    if (m != static_cast<int>(order))
      throw std::logic_error("product closure does not match the factor orders");
    out.proj_left.assign(m, 0);
    out.proj_right.assign(m, 0);
    for (int k = 0; k < m; ++k) {
      out.proj_left[k] = a.index_of(restrict_perm(out.group.element(k), 0, da));
      out.proj_right[k] = b.index_of(restrict_perm(out.group.element(k), da, db));
    }
    out.inj_left.assign(a.order(), 0);
    for (int i = 0; i < a.order(); ++i)
      out.inj_left[i] = out.group.index_of(extend_perm(a.element(i), da + db, 0));
    out.inj_right.assign(b.order(), 0);
    for (int j = 0; j < b.order(); ++j)
      out.inj_right[j] = out.group.index_of(extend_perm(b.element(j), da + db, da));
    return out;
  }

  int nb = b.order();
  int m = static_cast<int>(order);
  std::vector<int> gens;
  for (int g : a.generators()) gens.push_back(g * nb);
  for (int g : b.generators()) gens.push_back(g);
  out.group = FiniteGroup::from_mult_table(
      label, m,
      [&](int x, int y) {
        return a.mult(x / nb, y / nb) * nb + b.mult(x % nb, y % nb);
      },
      std::move(gens));
  out.proj_left.assign(m, 0);
  out.proj_right.assign(m, 0);
  for (int k = 0; k < m; ++k) {
    out.proj_left[k] = k / nb;
    out.proj_right[k] = k % nb;
  }
  out.inj_left.assign(a.order(), 0);
  for (int i = 0; i < a.order(); ++i) out.inj_left[i] = i * nb;
  out.inj_right.assign(nb, 0);
  for (int j = 0; j < nb; ++j) out.inj_right[j] = j;
  return out;
}

namespace {

FiniteGroup build_atom(const GroupSpec::Atom& atom, int cap) {
  if (const auto* c = std::get_if<GroupSpec::Catalog>(&atom))
    return make_catalog_group(c->name, c->param, cap);
  if (const auto* p = std::get_if<GroupSpec::Perms>(&atom)) {
    std::vector<GroupElement> gens;
    for (const auto& gen_cycles : p->cycles) {
      std::vector<int> img(p->degree);
      for (int i = 0; i < p->degree; ++i) img[i] = i;
      for (const auto& c : gen_cycles)
        for (std::size_t i = 0; i < c.size(); ++i) img[c[i]] = c[(i + 1) % c.size()];
      gens.push_back(GroupElement::permutation(std::move(img)));
    }
    return close_generators(std::move(gens), format_atom(atom), cap);
  }
  const auto& m = std::get<GroupSpec::Mats>(atom);
  std::vector<GroupElement> gens;
  for (const auto& entries : m.matrices)
    gens.push_back(GroupElement::matrix_mod_p(m.p, m.n, entries));
  return close_generators(std::move(gens), format_atom(atom), cap);
}

}  // namespace

FiniteGroup build_group(const GroupSpec& spec, int cap) {
  FiniteGroup g = build_atom(spec.factors[0], cap);
  for (std::size_t i = 1; i < spec.factors.size(); ++i) {
    FiniteGroup h = build_atom(spec.factors[i], cap);
    g = direct_product(g, h, cap).group;
  }
  return g;
}

int parse_element(const FiniteGroup& g, const std::string& text) {
  const GroupElement& sample = g.element(0);
  Cursor cur{text};
  GroupElement elem = GroupElement::table_index(0);
  switch (sample.kind()) {
    case ElementKind::Permutation: {
      auto cycles = parse_cycles(cur);
      int degree = sample.degree();
      std::vector<int> img(degree);
      for (int i = 0; i < degree; ++i) img[i] = i;
      for (const auto& c : cycles) {
        for (int z : c)
          if (z >= degree) throw OutOfRange("point exceeds the group's degree", 0);
        for (std::size_t i = 0; i < c.size(); ++i) img[c[i]] = c[(i + 1) % c.size()];
      }
      elem = GroupElement::permutation(std::move(img));
      break;
    }
    case ElementKind::MatrixModP:
      elem = GroupElement::matrix_mod_p(sample.modulus(), sample.dim(),
                                        parse_matrix(cur, sample.modulus(), sample.dim()));
      break;
    case ElementKind::TableIndex: {
      cur.expect('#');
      elem = GroupElement::table_index(cur.number());
      break;
    }
  }
  if (!cur.eof()) throw ParseError("trailing input after element", cur.pos);
  int idx = g.index_of(elem);
  if (idx < 0) throw ElementNotInGroup("element " + elem.to_string() + " is not in " + g.label());
  return idx;
}

const std::vector<CatalogEntry>& builtin_catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"C1", 1, true, true},
      {"C2", 2, true, true},
      {"C3", 3, true, true},
      {"C4", 4, true, true},
      {"C5", 5, true, true},
      {"C6", 6, true, true},
      {"C8", 8, true, true},
      {"C12", 12, true, true},
      {"D2", 4, true, true},
      {"D3", 6, true, false},
      {"D4", 8, true, true},
      {"D5", 10, true, false},
      {"D6", 12, true, false},
      {"D8", 16, true, true},
      {"D12", 24, true, false},
      {"S3", 6, true, false},
      {"S4", 24, true, false},
      {"S5", 120, false, false},
      {"S6", 720, false, false},
      {"A4", 12, true, false},
      {"A5", 60, false, false},
      {"A6", 360, false, false},
      {"A7", 2520, false, false},
      {"SL2(2)", 6, true, false},
      {"SL2(3)", 24, true, false},
      {"SL2(5)", 120, false, false},
      {"SL2(7)", 336, false, false},
      {"PSL2(5)", 60, false, false},
      {"PSL2(7)", 168, false, false},
      {"A5 x C2", 120, false, false},
      {"C2 x C3", 6, true, true},
      {"A4 x C2", 24, true, false},
      {"D4 x C3", 24, true, true},
  };
  return entries;
}

}  // namespace solvagraph
