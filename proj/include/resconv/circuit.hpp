#ifndef RESCONV_CIRCUIT_HPP_
#define RESCONV_CIRCUIT_HPP_

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "resconv/comb.hpp"
#include "resconv/finstoch.hpp"

namespace resconv {

struct LibraryMap {
  std::string name;
  StochMap map;
  bool free = true;
};

/// Named wire types and named stochastic maps, each tagged free or not.
class Library {
 public:
  /// Throws InputError when the name is already bound to a different alphabet.
  void add_type(const std::string &name, Alphabet a);
  /// Throws InputError on a duplicate map name.
  void add_map(LibraryMap m);

  const Alphabet *find_type(const std::string &name) const;
  const LibraryMap *find_map(const std::string &name) const;
  const std::vector<std::pair<std::string, Alphabet>> &types() const { return types_; }
  const std::vector<LibraryMap> &maps() const { return maps_; }

 private:
  std::vector<std::pair<std::string, Alphabet>> types_;
  std::vector<LibraryMap> maps_;
};

/// {"types":{"bit":2,"trit":["a","b","c"]},
///  "maps":[{"name","free","dom":["bit"],"cod":["bit","bit"],"matrix":[[...]]}]}
/// Type names in dom/cod refer to "types" or to types already in `into`.
void load_library(const nlohmann::json &j, Library &into);

enum class NodeKind { Map, Identity, Swap, Hole };

struct CircuitNode {
  NodeKind kind;
  /// Library map name or hole name; empty for identities and swaps.
  std::string name;
  FinSet dom;
  FinSet cod;
  /// Source column of the node, 1-based.
  std::size_t column = 0;
  /// For swap[T,U]: number of factors in T.
  std::size_t swap_split = 0;
};

struct CircuitLayer {
  std::vector<CircuitNode> nodes;
  std::size_t line = 0;

  FinSet dom() const;
  FinSet cod() const;
};

/// Layered diagram read bottom-up: layer k's output wires feed layer k+1.
struct CircuitDiagram {
  Library library;
  /// Types declared in the header, in order, and how they were written.
  std::vector<std::pair<std::string, std::string>> declared_types;
  std::vector<std::string> library_paths;
  /// Names of maps declared inline with `map`.
  std::vector<std::string> inline_maps;
  FinSet input;
  std::vector<CircuitLayer> layers;

  FinSet output() const { return layers.empty() ? input : layers.back().cod(); }
  std::vector<const CircuitNode *> holes() const;
};

/// Parses the line-oriented DSL:
///
///   types: bit=2 ; trit={a,b,c}
///   library: maps.json
///   map copy: bit -> bit*bit = [[1,0],[0,0],[0,0],[0,1]] free
///   input: bit*bit
///   layer: copy[lib] ; id[bit]
///   layer: hole h(bit*bit -> bit) ; swap[bit,I]
///
/// Type expressions are products of declared names, numerals n (the set
/// {0..n-1}) and I. `input` may be omitted when there is at least one layer.
/// Library paths resolve against `base_dir`. Throws ParseError with line and
/// column on syntax errors, unknown names, duplicate holes and ill-typed
/// layer junctions.
CircuitDiagram parse_circuit(std::string_view text, const std::filesystem::path &base_dir = {});
CircuitDiagram parse_circuit_file(const std::filesystem::path &path);

/// Prints the diagram in the same syntax; parse_circuit(print_circuit(c))
/// prints identically.
std::string print_circuit(const CircuitDiagram &c);

/// Semantics with hole h filled by fillers.at(h). Throws InputError on a
/// missing filler and CompositionError on a filler of the wrong type.
StochMap evaluate_circuit(const CircuitDiagram &c, const std::map<std::string, StochMap> &fillers);

/// Comb form of a one-hole circuit of free nodes. Layers below the hole
/// fold into ξ₁, followed by the block permutation that moves the hole's
/// input wires to the front (the side wires stay in order on the right). The
/// side nodes of the hole's layer and the layers above fold into ξ₂. The
/// ancilla is the list of side wires entering the hole's layer. Throws
/// InputError on zero or several holes, or when a map is not tagged free.
OneComb normalize_to_comb(const CircuitDiagram &c);

/// Graphviz digraph of the layered DAG, one node per circuit node plus
/// input and output terminals, one edge per wire.
std::string circuit_to_dot(const CircuitDiagram &c);

/// Text of a type for the DSL: declared names, numerals and I.
std::string type_text(const FinSet &t, const Library &lib);

}  // namespace resconv

#endif  // RESCONV_CIRCUIT_HPP_
