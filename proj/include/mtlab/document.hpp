#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mtlab/functors.hpp"

namespace mtlab {

enum class DocKind { Poset, Lattice, Frame, Boolean, MT, Space, Map };
std::string_view to_string(DocKind k);

using LabelPair = std::pair<std::string, std::string>;

/// Label-level structure document. Canonical form: sorted labels, sorted pair
/// lists, sorted open sets (each sorted). parse∘serialize is the identity on
/// canonical documents.
struct Document {
  DocKind kind = DocKind::Poset;
  std::string name;

  // poset, lattice, frame, boolean, mt (table form)
  std::vector<std::string> elements;
  std::vector<LabelPair> order;  // a <= b
  std::vector<LabelPair> box;    // mt table: (a, □a)

  // space, mt (space form)
  bool mt_from_space = false;
  std::vector<std::string> points;
  std::vector<std::vector<std::string>> opens;

  // map: (x, f(x))
  std::vector<LabelPair> pairs;

  friend bool operator==(const Document&, const Document&) = default;
};

/// Throws ParseError naming the position or the offending field.
Document parse_document(std::string_view text);
/// Reads a file and parses it; throws ParseError when unreadable.
Document load_document(const std::string& path);
std::string serialize(const Document& d);
/// Sorts every list into canonical order.
void canonicalize(Document& d);

// ---------------------------------------------------------------- validation

FinitePoset to_poset(const Document& d);
FiniteLattice to_lattice(const Document& d);
Frame to_frame(const Document& d);
FiniteBooleanAlgebra to_boolean(const Document& d);
FiniteSpace to_space(const Document& d);
/// Table form, or (P(X), int) for the space form.
MTAlgebra to_mt(const Document& d);
/// Resolves a map document against source and target labels.
std::vector<Elem> to_map(const Document& d, const std::vector<std::string>& source,
                         const std::vector<std::string>& target);

// ---------------------------------------------------------------- export

Document document_of(const FinitePoset& p, DocKind kind, std::string name = {});
Document document_of(const FiniteSpace& x, std::string name = {});
Document document_of(const MTAlgebra& m, std::string name = {});
Document map_document(const std::vector<Elem>& f, const std::vector<std::string>& source,
                      const std::vector<std::string>& target, std::string name = {});

}  // namespace mtlab
