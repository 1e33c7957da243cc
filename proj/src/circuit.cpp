#include "resconv/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "resconv/errors.hpp"

namespace resconv {

// ---------------------------------------------------------------------------
// Library

void Library::add_type(const std::string &name, Alphabet a) {
  if (const Alphabet *old = find_type(name)) {
    if (!(*old == a)) throw InputError("type '" + name + "' is declared twice with different elements");
    return;
  }
  a.label = name;
  types_.emplace_back(name, std::move(a));
}

void Library::add_map(LibraryMap m) {
  if (find_map(m.name)) throw InputError("map '" + m.name + "' is declared twice");
  maps_.push_back(std::move(m));
}

const Alphabet *Library::find_type(const std::string &name) const {
  for (const auto &[n, a] : types_)
    if (n == name) return &a;
  return nullptr;
}

const LibraryMap *Library::find_map(const std::string &name) const {
  for (const auto &m : maps_)
    if (m.name == name) return &m;
  return nullptr;
}

namespace {

Alphabet alphabet_from_json(const std::string &name, const nlohmann::json &j) {
  if (j.is_number_unsigned() && j.get<std::size_t>() > 0) return Alphabet::of_size(name, j.get<std::size_t>());
  if (j.is_array()) {
    Alphabet a{name, {}};
    for (const auto &e : j) {
      if (!e.is_string()) throw InputError("element names of type '" + name + "' must be strings");
      a.names.push_back(e.get<std::string>());
    }
    return a;
  }
  throw InputError("type '" + name + "' must be a positive size or a list of element names");
}

FinSet named_product(const nlohmann::json &j, const Library &lib, const std::string &what) {
  if (!j.is_array()) throw InputError(what + " must be a list of type names");
  std::vector<Alphabet> f;
  for (const auto &e : j) {
    if (!e.is_string()) throw InputError(what + " must be a list of type names");
    const Alphabet *a = lib.find_type(e.get<std::string>());
    if (!a) throw InputError("unknown type '" + e.get<std::string>() + "' in " + what);
    f.push_back(*a);
  }
  return FinSet(std::move(f));
}

}  // namespace

void load_library(const nlohmann::json &j, Library &into) {
  if (!j.is_object()) throw InputError("library must be a JSON object");
  if (j.contains("types")) {
    for (const auto &[name, def] : j["types"].items()) into.add_type(name, alphabet_from_json(name, def));
  }
  if (j.contains("maps")) {
    for (const auto &m : j["maps"]) {
      if (!m.contains("name") || !m.contains("dom") || !m.contains("cod") || !m.contains("matrix")) {
        throw InputError("library map needs \"name\", \"dom\", \"cod\" and \"matrix\"");
      }
      const std::string name = m["name"].get<std::string>();
      FinSet dom = named_product(m["dom"], into, "domain of '" + name + "'");
      FinSet cod = named_product(m["cod"], into, "codomain of '" + name + "'");
      const bool free = m.value("free", true);
      into.add_map({name, StochMap(std::move(dom), std::move(cod), rational_matrix_from_json(m["matrix"])), free});
    }
  }
}

// ---------------------------------------------------------------------------
// Diagram

FinSet CircuitLayer::dom() const {
  FinSet t;
  for (const auto &n : nodes) t = t * n.dom;
  return t;
}

FinSet CircuitLayer::cod() const {
  FinSet t;
  for (const auto &n : nodes) t = t * n.cod;
  return t;
}

std::vector<const CircuitNode *> CircuitDiagram::holes() const {
  std::vector<const CircuitNode *> out;
  for (const auto &l : layers)
    for (const auto &n : l.nodes)
      if (n.kind == NodeKind::Hole) out.push_back(&n);
  return out;
}

std::string type_text(const FinSet &t, const Library &lib) {
  if (t.is_unit()) return "I";
  std::string out;
  for (const auto &f : t.factors()) {
    if (!out.empty()) out += "*";
    const Alphabet *named = lib.find_type(f.label);
    if (named && *named == f) {
      out += f.label;
      continue;
    }
    if (f == Alphabet::of_size("", f.size())) {
      out += std::to_string(f.size());
      continue;
    }
    auto it = std::find_if(lib.types().begin(), lib.types().end(), [&](const auto &p) { return p.second == f; });
    if (it == lib.types().end()) throw InputError("wire type " + t.str() + " has no name in this circuit");
    out += it->first;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '.';
  });
}

/// A slice of the current line with its 1-based starting column.
struct Span {
  std::string_view text;
  std::size_t column;

  Span sub(std::size_t pos, std::size_t len = std::string_view::npos) const {
    return {text.substr(pos, len), column + pos};
  }
  Span trimmed() const {
    std::size_t b = 0;
    std::size_t e = text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    return {text.substr(b, e - b), column + b};
  }
};

std::vector<Span> split(Span s, char sep) {
  std::vector<Span> out;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= s.text.size(); ++i) {
    if (i < s.text.size()) {
      const char c = s.text[i];
      if (c == '[' || c == '{' || c == '(') ++depth;
      if (c == ']' || c == '}' || c == ')') --depth;
      if (!(c == sep && depth == 0)) continue;
    }
    out.push_back(s.sub(start, i - start).trimmed());
    start = i + 1;
  }
  return out;
}

class Parser {
 public:
  Parser(std::filesystem::path base) : base_(std::move(base)) {}

  CircuitDiagram run(std::string_view text) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      ++line_no;
      line_ = line_no;
      std::string_view raw = text.substr(pos, end - pos);
      if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
      if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
      Span s = Span{raw, 1}.trimmed();
      if (!s.text.empty()) directive(s);
      pos = end + 1;
    }
    if (!input_) {
      if (c_.layers.empty()) throw ParseError(line_no, 1, "circuit declares no input and no layers");
      c_.input = c_.layers.front().dom();
    } else {
      c_.input = *input_;
    }
    check_junctions();
    return std::move(c_);
  }

 private:
  [[noreturn]] void fail(std::size_t column, const std::string &what) const { throw ParseError(line_, column, what); }

  void directive(Span s) {
    auto starts = [&](std::string_view kw) { return s.text.substr(0, kw.size()) == kw; };
    if (starts("types:")) {
      for (Span d : split(s.sub(6), ';'))
        if (!d.text.empty()) type_decl(d);
    } else if (starts("type ")) {
      type_decl(s.sub(5).trimmed());
    } else if (starts("library:")) {
      library(s.sub(8).trimmed());
    } else if (starts("map ")) {
      inline_map(s.sub(4).trimmed());
    } else if (starts("input:")) {
      if (!c_.layers.empty()) fail(s.column, "input must be declared before the first layer");
      if (input_) fail(s.column, "input declared twice");
      input_ = type_expr(s.sub(6).trimmed());
    } else if (starts("layer:")) {
      layer(s.sub(6).trimmed());
    } else {
      fail(s.column, "expected one of types:, type, library:, map, input:, layer:");
    }
  }

  void type_decl(Span d) {
    const auto eq = d.text.find('=');
    if (eq == std::string_view::npos) fail(d.column, "type declaration needs '='");
    const Span name = d.sub(0, eq).trimmed();
    const Span rhs = d.sub(eq + 1).trimmed();
    if (!is_identifier(name.text) || name.text == "I") fail(name.column, "bad type name '" + std::string(name.text) + "'");
    Alphabet a;
    if (!rhs.text.empty() && rhs.text.front() == '{') {
      if (rhs.text.back() != '}') fail(rhs.column, "element list must end with '}'");
      for (Span e : split(rhs.sub(1, rhs.text.size() - 2), ',')) {
        if (e.text.empty()) fail(e.column, "empty element name");
        a.names.emplace_back(e.text);
      }
    } else {
      std::size_t n = 0;
      const auto [p, ec] = std::from_chars(rhs.text.data(), rhs.text.data() + rhs.text.size(), n);
      if (ec != std::errc() || p != rhs.text.data() + rhs.text.size() || n == 0) {
        fail(rhs.column, "type size must be a positive integer or an element list {..}");
      }
      a = Alphabet::of_size("", n);
    }
    try {
      c_.library.add_type(std::string(name.text), std::move(a));
    } catch (const ParseError &) {
      throw;
    } catch (const InputError &e) {
      fail(name.column, e.what());
    }
    c_.declared_types.emplace_back(std::string(name.text), std::string(rhs.text));
  }

  void library(Span p) {
    if (p.text.empty()) fail(p.column, "library path is empty");
    const std::string path(p.text);
    std::filesystem::path full = path;
    if (full.is_relative() && !base_.empty()) full = base_ / full;
    std::ifstream in(full);
    if (!in) fail(p.column, "cannot open library '" + path + "'");
    try {
      load_library(nlohmann::json::parse(in), c_.library);
    } catch (const nlohmann::json::exception &e) {
      fail(p.column, "library '" + path + "': " + e.what());
    } catch (const ParseError &) {
      throw;
    } catch (const InputError &e) {
      fail(p.column, "library '" + path + "': " + e.what());
    }
    c_.library_paths.push_back(path);
  }

  void inline_map(Span s) {
    const auto colon = s.text.find(':');
    if (colon == std::string_view::npos) fail(s.column, "map declaration needs ':'");
    const Span name = s.sub(0, colon).trimmed();
    if (!is_identifier(name.text)) fail(name.column, "bad map name '" + std::string(name.text) + "'");
    const Span rest = s.sub(colon + 1);
    const auto eq = rest.text.find('=');
    if (eq == std::string_view::npos) fail(rest.column, "map declaration needs '= [[...]]'");
    const Span sig = rest.sub(0, eq).trimmed();
    const auto arrow = sig.text.find("->");
    if (arrow == std::string_view::npos) fail(sig.column, "map signature needs '->'");
    FinSet dom = type_expr(sig.sub(0, arrow).trimmed());
    FinSet cod = type_expr(sig.sub(arrow + 2).trimmed());

    Span body = rest.sub(eq + 1).trimmed();
    bool free = true;
    const auto close = body.text.rfind(']');
    if (close == std::string_view::npos) fail(body.column, "matrix must be written [[...],...]");
    const Span tag = body.sub(close + 1).trimmed();
    if (tag.text == "nonfree") {
      free = false;
    } else if (!tag.text.empty() && tag.text != "free") {
      fail(tag.column, "expected 'free' or 'nonfree' after the matrix");
    }
    const Span mat = body.sub(0, close + 1);
    static const std::regex number(R"(-?[0-9]+(?:\.[0-9]+)?(?:/[0-9]+)?)");
    const std::string quoted = std::regex_replace(std::string(mat.text), number, "\"$&\"");
    try {
      StochMap m(std::move(dom), std::move(cod), rational_matrix_from_json(nlohmann::json::parse(quoted)));
      c_.library.add_map({std::string(name.text), std::move(m), free});
    } catch (const nlohmann::json::exception &) {
      fail(mat.column, "malformed matrix");
    } catch (const InputError &e) {
      fail(mat.column, "map '" + std::string(name.text) + "': " + e.what());
    }
    c_.inline_maps.emplace_back(name.text);
  }

  FinSet type_expr(Span s) {
    if (s.text.empty()) fail(s.column, "missing type");
    std::vector<Alphabet> f;
    for (Span atom : split(s, '*')) {
      if (atom.text == "I") continue;
      if (atom.text.empty()) fail(atom.column, "missing type in product");
      if (std::all_of(atom.text.begin(), atom.text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        const std::size_t n = std::stoul(std::string(atom.text));
        if (n == 0) fail(atom.column, "a wire type needs at least one element");
        f.push_back(Alphabet::of_size(std::string(atom.text), n));
        continue;
      }
      const Alphabet *a = c_.library.find_type(std::string(atom.text));
      if (!a) fail(atom.column, "unknown type '" + std::string(atom.text) + "'");
      f.push_back(*a);
    }
    return FinSet(std::move(f));
  }

  /// Text inside `head[...]` as a span, or fails.
  Span bracket(Span item, std::size_t open) {
    if (item.text.back() != ']') fail(item.column + item.text.size() - 1, "expected ']'");
    return item.sub(open + 1, item.text.size() - open - 2).trimmed();
  }

  void layer(Span s) {
    CircuitLayer l;
    l.line = line_;
    for (Span item : split(s, ';')) {
      if (item.text.empty()) fail(item.column, "empty layer entry");
      CircuitNode n{NodeKind::Map, "", {}, {}, item.column};
      if (item.text.substr(0, 5) == "hole ") {
        const Span rest = item.sub(5).trimmed();
        const auto open = rest.text.find('(');
        if (open == std::string_view::npos || rest.text.back() != ')') fail(rest.column, "hole syntax is hole NAME(A->B)");
        const Span name = rest.sub(0, open).trimmed();
        if (!is_identifier(name.text)) fail(name.column, "bad hole name '" + std::string(name.text) + "'");
        if (!holes_.insert(std::string(name.text)).second) fail(name.column, "duplicate hole '" + std::string(name.text) + "'");
        const Span sig = rest.sub(open + 1, rest.text.size() - open - 2);
        const auto arrow = sig.text.find("->");
        if (arrow == std::string_view::npos) fail(sig.column, "hole type needs '->'");
        n.kind = NodeKind::Hole;
        n.name = std::string(name.text);
        n.dom = type_expr(sig.sub(0, arrow).trimmed());
        n.cod = type_expr(sig.sub(arrow + 2).trimmed());
      } else {
        const auto open = item.text.find('[');
        const std::string head = trim(item.text.substr(0, open));
        if (head == "id") {
          if (open == std::string_view::npos) fail(item.column, "identity syntax is id[T]");
          n.kind = NodeKind::Identity;
          n.dom = n.cod = type_expr(bracket(item, open));
        } else if (head == "swap") {
          if (open == std::string_view::npos) fail(item.column, "swap syntax is swap[T,U]");
          auto args = split(bracket(item, open), ',');
          if (args.size() != 2) fail(item.column, "swap takes two types");
          n.kind = NodeKind::Swap;
          const FinSet t = type_expr(args[0]);
          const FinSet u = type_expr(args[1]);
          n.dom = t * u;
          n.cod = u * t;
          n.swap_split = t.factors().size();
        } else {
          if (!is_identifier(head)) fail(item.column, "expected a map name, id[..], swap[..] or hole");
          if (open != std::string_view::npos) {
            const Span lib = bracket(item, open);
            if (lib.text != "lib") fail(lib.column, "unknown library '" + std::string(lib.text) + "'");
          }
          const LibraryMap *m = c_.library.find_map(head);
          if (!m) fail(item.column, "unknown map '" + head + "'");
          n.name = head;
          n.dom = m->map.dom();
          n.cod = m->map.cod();
        }
      }
      l.nodes.push_back(std::move(n));
    }
    c_.layers.push_back(std::move(l));
  }

  void check_junctions() {
    FinSet below = c_.input;
    std::string below_name = "the input";
    for (std::size_t k = 0; k < c_.layers.size(); ++k) {
      const CircuitLayer &l = c_.layers[k];
      const auto &have = below.factors();
      std::size_t wire = 0;
      for (const auto &n : l.nodes) {
        for (const auto &want : n.dom.factors()) {
          if (wire >= have.size()) {
            throw ParseError(l.line, n.column, "wire " + std::to_string(wire) + " does not exist: " + below_name +
                                                   " provides only " + std::to_string(have.size()) + " wires");
          }
          if (!(have[wire] == want)) {
            throw ParseError(l.line, n.column, "wire " + std::to_string(wire) + " has type " + have[wire].label +
                                                   " from " + below_name + " but this node expects " + want.label);
          }
          ++wire;
        }
      }
      if (wire != have.size()) {
        throw ParseError(l.line, 1, "wire " + std::to_string(wire) + " from " + below_name + " is not consumed: layer takes " +
                                        std::to_string(wire) + " of " + std::to_string(have.size()) + " wires");
      }
      below = l.cod();
      below_name = "layer " + std::to_string(k + 1);
    }
  }

  std::filesystem::path base_;
  CircuitDiagram c_;
  std::optional<FinSet> input_;
  std::set<std::string> holes_;
  std::size_t line_ = 0;
};

}  // namespace

CircuitDiagram parse_circuit(std::string_view text, const std::filesystem::path &base_dir) {
  return Parser(base_dir).run(text);
}

CircuitDiagram parse_circuit_file(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open circuit file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_circuit(ss.str(), path.parent_path());
}

// ---------------------------------------------------------------------------
// Printing and semantics

namespace {

std::pair<FinSet, FinSet> swap_parts(const CircuitNode &n) {
  const auto &f = n.dom.factors();
  const auto mid = f.begin() + static_cast<std::ptrdiff_t>(n.swap_split);
  return {FinSet(std::vector<Alphabet>(f.begin(), mid)), FinSet(std::vector<Alphabet>(mid, f.end()))};
}

}  // namespace

std::string print_circuit(const CircuitDiagram &c) {
  std::ostringstream out;
  if (!c.declared_types.empty()) {
    out << "types:";
    for (std::size_t i = 0; i < c.declared_types.size(); ++i)
      out << (i ? " ; " : " ") << c.declared_types[i].first << "=" << c.declared_types[i].second;
    out << "\n";
  }
  for (const auto &p : c.library_paths) out << "library: " << p << "\n";
  for (const auto &name : c.inline_maps) {
    const LibraryMap &m = *c.library.find_map(name);
    out << "map " << name << ": " << type_text(m.map.dom(), c.library) << " -> " << type_text(m.map.cod(), c.library)
        << " = [";
    for (Eigen::Index r = 0; r < m.map.matrix().rows(); ++r) {
      out << (r ? ",[" : "[");
      for (Eigen::Index k = 0; k < m.map.matrix().cols(); ++k) out << (k ? "," : "") << m.map.matrix()(r, k).str();
      out << "]";
    }
    out << "] " << (m.free ? "free" : "nonfree") << "\n";
  }
  out << "input: " << type_text(c.input, c.library) << "\n";
  for (const auto &l : c.layers) {
    out << "layer:";
    for (std::size_t i = 0; i < l.nodes.size(); ++i) {
      const CircuitNode &n = l.nodes[i];
      out << (i ? " ; " : " ");
      switch (n.kind) {
        case NodeKind::Map:
          out << n.name << "[lib]";
          break;
        case NodeKind::Identity:
          out << "id[" << type_text(n.dom, c.library) << "]";
          break;
        case NodeKind::Swap: {
          const auto [t, u] = swap_parts(n);
          out << "swap[" << type_text(t, c.library) << "," << type_text(u, c.library) << "]";
          break;
        }
        case NodeKind::Hole:
          out << "hole " << n.name << "(" << type_text(n.dom, c.library) << "->" << type_text(n.cod, c.library) << ")";
          break;
      }
    }
    out << "\n";
  }
  return out.str();
}

namespace {

StochMap swap_node(const CircuitNode &n) {
  const auto [t, u] = swap_parts(n);
  return swap(t, u);
}

StochMap node_map(const CircuitDiagram &c, const CircuitNode &n, const std::map<std::string, StochMap> *fillers) {
  switch (n.kind) {
    case NodeKind::Map:
      return c.library.find_map(n.name)->map;
    case NodeKind::Identity:
      return identity(n.dom);
    case NodeKind::Swap:
      return swap_node(n);
    case NodeKind::Hole: {
      if (!fillers) throw InputError("hole '" + n.name + "' has no filler");
      auto it = fillers->find(n.name);
      if (it == fillers->end()) throw InputError("no process given for hole '" + n.name + "'");
      if (!(it->second.dom() == n.dom) || !(it->second.cod() == n.cod)) {
        throw CompositionError("process for hole '" + n.name + "' has type " + it->second.dom().str() + " → " +
                               it->second.cod().str() + ", expected " + n.dom.str() + " → " + n.cod.str());
      }
      return it->second;
    }
  }
  throw InputError("unknown node kind");
}

StochMap parallel(const CircuitDiagram &c, const std::vector<CircuitNode> &nodes, std::size_t from, std::size_t to,
                  const std::map<std::string, StochMap> *fillers) {
  StochMap m = identity(FinSet::unit());
  for (std::size_t i = from; i < to; ++i) m = compose_par(m, node_map(c, nodes[i], fillers));
  return m;
}

}  // namespace

StochMap evaluate_circuit(const CircuitDiagram &c, const std::map<std::string, StochMap> &fillers) {
  StochMap m = identity(c.input);
  for (const auto &l : c.layers) m = compose_seq(parallel(c, l.nodes, 0, l.nodes.size(), &fillers), m);
  return m;
}

OneComb normalize_to_comb(const CircuitDiagram &c) {
  std::size_t hole_layer = 0;
  std::size_t hole_pos = 0;
  std::size_t count = 0;
  for (std::size_t k = 0; k < c.layers.size(); ++k)
    for (std::size_t i = 0; i < c.layers[k].nodes.size(); ++i) {
      const CircuitNode &n = c.layers[k].nodes[i];
      if (n.kind == NodeKind::Hole) {
        ++count;
        hole_layer = k;
        hole_pos = i;
      } else if (n.kind == NodeKind::Map && !c.library.find_map(n.name)->free) {
        throw InputError("map '" + n.name + "' is not free, so the circuit is not a comb");
      }
    }
  if (count != 1) throw InputError("comb normal form needs exactly one hole, circuit has " + std::to_string(count));

  StochMap below = identity(c.input);
  for (std::size_t k = 0; k < hole_layer; ++k)
    below = compose_seq(parallel(c, c.layers[k].nodes, 0, c.layers[k].nodes.size(), nullptr), below);
  StochMap above = identity(c.layers[hole_layer].cod());
  for (std::size_t k = hole_layer + 1; k < c.layers.size(); ++k)
    above = compose_seq(parallel(c, c.layers[k].nodes, 0, c.layers[k].nodes.size(), nullptr), above);

  const auto &nodes = c.layers[hole_layer].nodes;
  const CircuitNode &hole = nodes[hole_pos];
  const StochMap left = parallel(c, nodes, 0, hole_pos, nullptr);
  const StochMap right = parallel(c, nodes, hole_pos + 1, nodes.size(), nullptr);

  StochMap pre = compose_seq(permute_blocks({left.dom(), hole.dom, right.dom()}, {1, 0, 2}), below);
  StochMap side = compose_par(compose_par(left, identity(hole.cod)), right);
  StochMap post = compose_seq(above, compose_seq(side, permute_blocks({hole.cod, left.dom(), right.dom()}, {1, 0, 2})));
  return OneComb(left.dom() * right.dom(), std::move(pre), std::move(post), {hole.dom, hole.cod});
}

std::string circuit_to_dot(const CircuitDiagram &c) {
  std::ostringstream out;
  out << "digraph circuit {\n  rankdir=BT;\n  in [shape=point];\n  out [shape=point];\n";
  std::vector<std::string> producers(c.input.factors().size(), "in");
  auto quote = [](const std::string &s) {
    std::string q = "\"";
    for (char ch : s) q += (ch == '"' ? std::string("\\\"") : std::string(1, ch));
    return q + "\"";
  };
  for (std::size_t k = 0; k < c.layers.size(); ++k) {
    std::vector<std::string> next;
    std::size_t wire = 0;
    for (std::size_t i = 0; i < c.layers[k].nodes.size(); ++i) {
      const CircuitNode &n = c.layers[k].nodes[i];
      const std::string id = "n" + std::to_string(k) + "_" + std::to_string(i);
      std::string label;
      std::string shape = "box";
      switch (n.kind) {
        case NodeKind::Map: label = n.name; break;
        case NodeKind::Identity: label = "id"; shape = "plaintext"; break;
        case NodeKind::Swap: label = "swap"; shape = "diamond"; break;
        case NodeKind::Hole: label = n.name; shape = "doubleoctagon"; break;
      }
      out << "  " << id << " [label=" << quote(label) << ", shape=" << shape << "];\n";
      for (const auto &f : n.dom.factors()) {
        out << "  " << producers[wire] << " -> " << id << " [label=" << quote(type_text(FinSet(f), c.library)) << "];\n";
        ++wire;
      }
      for (std::size_t w = 0; w < n.cod.factors().size(); ++w) next.push_back(id);
    }
    producers = std::move(next);
  }
  const FinSet output = c.output();
  const auto &outs = output.factors();
  for (std::size_t w = 0; w < outs.size(); ++w)
    out << "  " << producers[w] << " -> out [label=" << quote(type_text(FinSet(outs[w]), c.library)) << "];\n";
  out << "}\n";
  return out.str();
}

}  // namespace resconv
