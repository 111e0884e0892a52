#include "mtlab/document.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace mtlab {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

namespace {

[[noreturn]] void parse_fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::ParseError, "at " + where + ": " + what);
}

const std::map<std::string, DocKind, std::less<>>& kind_names() {
  static const std::map<std::string, DocKind, std::less<>> names{
      {"poset", DocKind::Poset}, {"lattice", DocKind::Lattice}, {"frame", DocKind::Frame},
      {"boolean", DocKind::Boolean}, {"mt", DocKind::MT}, {"space", DocKind::Space},
      {"map", DocKind::Map}};
  return names;
}

std::string get_string(const json& v, const std::string& where) {
  if (!v.is_string()) parse_fail(where, "expected a string");
  return v.get<std::string>();
}

std::vector<std::string> get_strings(const json& v, const std::string& where) {
  if (!v.is_array()) parse_fail(where, "expected an array of labels");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(get_string(v[i], where + "/" + std::to_string(i)));
  return out;
}

std::vector<LabelPair> get_pairs(const json& v, const std::string& where) {
  if (!v.is_array()) parse_fail(where, "expected an array of pairs");
  std::vector<LabelPair> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string at = where + "/" + std::to_string(i);
    if (!v[i].is_array() || v[i].size() != 2) parse_fail(at, "expected a pair [a, b]");
    out.emplace_back(get_string(v[i][0], at + "/0"), get_string(v[i][1], at + "/1"));
  }
  return out;
}

std::vector<std::vector<std::string>> get_open_sets(const json& v, const std::string& where) {
  if (!v.is_array()) parse_fail(where, "expected an array of label arrays");
  std::vector<std::vector<std::string>> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(get_strings(v[i], where + "/" + std::to_string(i)));
  return out;
}

void check_keys(const json& obj, const std::string& where, std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, _] : obj.items())
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      parse_fail(where + "/" + key, "unexpected field");
}

const json& require(const json& obj, const std::string& key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) parse_fail(where, "missing field \"" + key + "\"");
  return *it;
}

const json& order_field(const json& obj, const std::string& where) {
  const bool has_order = obj.contains("order"), has_leq = obj.contains("leq");
  if (has_order && has_leq) parse_fail(where, "both \"order\" and \"leq\" given");
  if (!has_order && !has_leq) parse_fail(where, "missing field \"order\"");
  return obj[has_order ? "order" : "leq"];
}

void parse_space_payload(const json& obj, const std::string& where, Document& d) {
  d.points = get_strings(require(obj, "points", where), where + "/points");
  d.opens = get_open_sets(require(obj, "opens", where), where + "/opens");
}

std::map<std::string, Elem> label_index(const std::vector<std::string>& labels) {
  std::map<std::string, Elem> idx;
  for (Elem i = 0; i < labels.size(); ++i)
    if (!idx.emplace(labels[i], i).second) throw Error(ErrorCode::DuplicateLabel, "label \"" + labels[i] + "\"", {labels[i]});
  return idx;
}

Elem lookup(const std::map<std::string, Elem>& idx, const std::string& label, std::string_view role) {
  auto it = idx.find(label);
  if (it == idx.end())
    throw Error(ErrorCode::UnknownLabel, "unknown " + std::string(role) + " \"" + label + "\"", {label});
  return it->second;
}

ojson string_array(const std::vector<std::string>& v) {
  ojson a = ojson::array();
  for (const auto& s : v) a.push_back(s);
  return a;
}

ojson pair_array(const std::vector<LabelPair>& v) {
  ojson a = ojson::array();
  for (const auto& [x, y] : v) a.push_back(ojson::array({x, y}));
  return a;
}

ojson opens_array(const std::vector<std::vector<std::string>>& v) {
  ojson a = ojson::array();
  for (const auto& o : v) a.push_back(string_array(o));
  return a;
}

void require_kind(const Document& d, std::initializer_list<DocKind> kinds, std::string_view want) {
  if (std::find(kinds.begin(), kinds.end(), d.kind) == kinds.end())
    throw Error(ErrorCode::ShapeMismatch,
                "expected a " + std::string(want) + " document, got " + std::string(to_string(d.kind)));
}

std::vector<std::string> sorted_labels(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

std::string_view to_string(DocKind k) {
  for (const auto& [name, kind] : kind_names())
    if (kind == k) return name;
  return "?";
}

void canonicalize(Document& d) {
  std::sort(d.elements.begin(), d.elements.end());
  std::sort(d.order.begin(), d.order.end());
  std::sort(d.box.begin(), d.box.end());
  std::sort(d.points.begin(), d.points.end());
  for (auto& o : d.opens) std::sort(o.begin(), o.end());
  std::sort(d.opens.begin(), d.opens.end());
  std::sort(d.pairs.begin(), d.pairs.end());
}

Document parse_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    parse_fail("byte " + std::to_string(e.byte), e.what());
  }
  if (!root.is_object()) parse_fail("/", "expected an object");
  Document d;
  const std::string kind = get_string(require(root, "kind", "/"), "/kind");
  auto k = kind_names().find(kind);
  if (k == kind_names().end()) parse_fail("/kind", "unknown kind \"" + kind + "\"");
  d.kind = k->second;
  if (root.contains("name")) d.name = get_string(root["name"], "/name");

  switch (d.kind) {
    case DocKind::Poset:
    case DocKind::Lattice:
    case DocKind::Frame:
    case DocKind::Boolean:
      check_keys(root, "", {"kind", "name", "elements", "order", "leq"});
      d.elements = get_strings(require(root, "elements", "/"), "/elements");
      d.order = get_pairs(order_field(root, "/"), "/order");
      break;
    case DocKind::Space:
      check_keys(root, "", {"kind", "name", "points", "opens"});
      parse_space_payload(root, "", d);
      break;
    case DocKind::MT:
      if (root.contains("space")) {
        check_keys(root, "", {"kind", "name", "space"});
        const json& s = root["space"];
        if (!s.is_object()) parse_fail("/space", "expected an object");
        check_keys(s, "/space", {"points", "opens"});
        d.mt_from_space = true;
        parse_space_payload(s, "/space", d);
      } else {
        check_keys(root, "", {"kind", "name", "elements", "leq", "order", "box"});
        d.elements = get_strings(require(root, "elements", "/"), "/elements");
        d.order = get_pairs(order_field(root, "/"), "/leq");
        d.box = get_pairs(require(root, "box", "/"), "/box");
      }
      break;
    case DocKind::Map:
      check_keys(root, "", {"kind", "name", "pairs"});
      d.pairs = get_pairs(require(root, "pairs", "/"), "/pairs");
      break;
  }
  canonicalize(d);
  return d;
}

Document load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

std::string serialize(const Document& doc) {
  Document d = doc;
  canonicalize(d);
  std::vector<std::pair<std::string, ojson>> fields;
  fields.emplace_back("kind", std::string(to_string(d.kind)));
  if (!d.name.empty()) fields.emplace_back("name", d.name);
  switch (d.kind) {
    case DocKind::Poset:
    case DocKind::Lattice:
    case DocKind::Frame:
    case DocKind::Boolean:
      fields.emplace_back("elements", string_array(d.elements));
      fields.emplace_back("order", pair_array(d.order));
      break;
    case DocKind::Space:
      fields.emplace_back("points", string_array(d.points));
      fields.emplace_back("opens", opens_array(d.opens));
      break;
    case DocKind::MT:
      if (d.mt_from_space) {
        ojson s = ojson::object();
        s["points"] = string_array(d.points);
        s["opens"] = opens_array(d.opens);
        fields.emplace_back("space", s);
      } else {
        fields.emplace_back("elements", string_array(d.elements));
        fields.emplace_back("leq", pair_array(d.order));
        fields.emplace_back("box", pair_array(d.box));
      }
      break;
    case DocKind::Map:
      fields.emplace_back("pairs", pair_array(d.pairs));
      break;
  }
  std::string out = "{\n";
  for (std::size_t i = 0; i < fields.size(); ++i) {
    out += "  " + ojson(fields[i].first).dump() + ": " + fields[i].second.dump();
    out += i + 1 < fields.size() ? ",\n" : "\n";
  }
  out += "}\n";
  return out;
}

// ---------------------------------------------------------------- validation

FinitePoset to_poset(const Document& d) {
  require_kind(d, {DocKind::Poset, DocKind::Lattice, DocKind::Frame, DocKind::Boolean, DocKind::MT}, "order");
  const auto idx = label_index(d.elements);
  std::vector<OrderPair> pairs;
  for (const auto& [a, b] : d.order) pairs.emplace_back(lookup(idx, a, "element"), lookup(idx, b, "element"));
  return FinitePoset::from_pairs(d.elements, pairs);
}

FiniteLattice to_lattice(const Document& d) { return FiniteLattice::from_poset(to_poset(d)); }

Frame to_frame(const Document& d) { return Frame::from_lattice(to_lattice(d)); }

FiniteBooleanAlgebra to_boolean(const Document& d) { return FiniteBooleanAlgebra::from_lattice(to_lattice(d)); }

FiniteSpace to_space(const Document& d) {
  if (d.kind != DocKind::Space && !(d.kind == DocKind::MT && d.mt_from_space))
    throw Error(ErrorCode::ShapeMismatch, "expected a space document, got " + std::string(to_string(d.kind)));
  const auto idx = label_index(d.points);
  std::vector<ElemSet> opens;
  for (const auto& o : d.opens) {
    ElemSet s(d.points.size());
    for (const auto& p : o) s.set(lookup(idx, p, "point"));
    opens.push_back(s);
  }
  return FiniteSpace::from_opens(d.points, std::move(opens));
}

MTAlgebra to_mt(const Document& d) {
  if (d.kind == DocKind::Space || (d.kind == DocKind::MT && d.mt_from_space)) return powerset_mt(to_space(d));
  require_kind(d, {DocKind::MT}, "mt");
  FiniteBooleanAlgebra ba = to_boolean(d);
  const FinitePoset& p = ba.lattice().poset();
  std::vector<Elem> box(ba.size());
  ElemSet seen(ba.size());
  for (const auto& [a, b] : d.box) {
    const Elem ia = p.index(a), ib = p.index(b);
    if (seen.test(ia)) throw Error(ErrorCode::ShapeMismatch, "box gives two values for \"" + a + "\"", {a});
    seen.set(ia);
    box[ia] = ib;
  }
  if (seen.count() != ba.size()) {
    const Elem missing = (seen.complement()).first();
    throw Error(ErrorCode::ShapeMismatch, "box has no value for \"" + p.label(missing) + "\"", {p.label(missing)});
  }
  return MTAlgebra::from_table(std::move(ba), std::move(box));
}

std::vector<Elem> to_map(const Document& d, const std::vector<std::string>& source,
                         const std::vector<std::string>& target) {
  require_kind(d, {DocKind::Map}, "map");
  const auto src = label_index(source);
  const auto dst = label_index(target);
  std::vector<Elem> f(source.size());
  ElemSet seen(source.size());
  for (const auto& [a, b] : d.pairs) {
    const Elem ia = lookup(src, a, "source label");
    if (seen.test(ia)) throw Error(ErrorCode::ShapeMismatch, "map gives two values for \"" + a + "\"", {a});
    seen.set(ia);
    f[ia] = lookup(dst, b, "target label");
  }
  if (seen.count() != source.size()) {
    const Elem missing = seen.complement().first();
    throw Error(ErrorCode::ShapeMismatch, "map has no value for \"" + source[missing] + "\"", {source[missing]});
  }
  return f;
}

// ---------------------------------------------------------------- export

Document document_of(const FinitePoset& p, DocKind kind, std::string name) {
  Document d;
  d.kind = kind;
  d.name = std::move(name);
  d.elements = sorted_labels(p.labels());
  for (const auto& [a, b] : p.covers()) d.order.emplace_back(p.label(a), p.label(b));
  canonicalize(d);
  return d;
}

Document document_of(const FiniteSpace& x, std::string name) {
  Document d;
  d.kind = DocKind::Space;
  d.name = std::move(name);
  d.points = x.labels();
  for (const auto& o : x.opens()) {
    std::vector<std::string> labels;
    o.for_each([&](Elem p) { labels.push_back(x.label(p)); });
    d.opens.push_back(std::move(labels));
  }
  canonicalize(d);
  return d;
}

Document document_of(const MTAlgebra& m, std::string name) {
  Document d = document_of(m.lattice().poset(), DocKind::MT, std::move(name));
  for (Elem a = 0; a < m.size(); ++a) d.box.emplace_back(m.label(a), m.label(m.box(a)));
  canonicalize(d);
  return d;
}

Document map_document(const std::vector<Elem>& f, const std::vector<std::string>& source,
                      const std::vector<std::string>& target, std::string name) {
  Document d;
  d.kind = DocKind::Map;
  d.name = std::move(name);
  for (Elem a = 0; a < f.size(); ++a) d.pairs.emplace_back(source[a], target[f[a]]);
  canonicalize(d);
  return d;
}

}  // namespace mtlab
