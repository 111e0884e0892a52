#include "mtlab/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mtlab/sweep.hpp"

namespace mtlab {

namespace {

using ojson = nlohmann::ordered_json;

struct Ctx {
  std::ostream& out;
  std::ostream& err;
  bool json = false;
};

/// FILE, or FILE.json when FILE itself does not exist.
Document load(const std::string& path) {
  namespace fs = std::filesystem;
  if (!fs::exists(path) && fs::exists(path + ".json")) return load_document(path + ".json");
  return load_document(path);
}

bool is_algebra_doc(const Document& d) { return d.kind == DocKind::MT || d.kind == DocKind::Space; }

std::vector<std::string> labels_of(const MTAlgebra& m, const std::vector<Elem>& w) {
  std::vector<std::string> out;
  for (Elem e : w) out.push_back(m.label(e));
  return out;
}

std::vector<std::string> labels_of(const Frame& l, const std::vector<Elem>& w) {
  std::vector<std::string> out;
  for (Elem e : w) out.push_back(l.label(e));
  return out;
}

std::string joined(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : " ") + x;
  return s;
}

int emit_verdict(Ctx& c, const std::string& what, bool holds, const std::string& reason,
                 const std::vector<std::string>& witness) {
  if (c.json) {
    ojson j{{"predicate", what}, {"holds", holds}};
    if (!holds) {
      j["reason"] = reason;
      j["witness"] = witness;
    }
    c.out << j.dump(2) << "\n";
  } else {
    c.out << what << ": " << (holds ? "true" : "false") << "\n";
    if (!holds) {
      c.out << "reason: " << reason << "\n";
      if (!witness.empty()) c.out << "witness: " << joined(witness) << "\n";
    }
  }
  return holds ? kExitTrue : kExitFalse;
}

int emit_report(Ctx& c, const std::string& what, const CheckReport& r, const std::vector<std::string>& witness) {
  const std::string outcome(to_string(r.outcome));
  if (c.json) {
    ojson j{{"target", what}, {"outcome", outcome}};
    if (!r.detail.empty()) j["detail"] = r.detail;
    if (!witness.empty()) j["witness"] = witness;
    c.out << j.dump(2) << "\n";
  } else {
    c.out << what << ": " << outcome << "\n";
    if (!r.detail.empty()) c.out << "detail: " << r.detail << "\n";
    if (!witness.empty()) c.out << "witness: " << joined(witness) << "\n";
  }
  return r.outcome == Outcome::Pass ? kExitTrue : kExitFalse;
}

// ---------------------------------------------------------------- subcommands

int cmd_validate(Ctx& c, const std::string& file) {
  const Document d = load(file);
  std::size_t size = 0;
  switch (d.kind) {
    case DocKind::Poset: size = to_poset(d).size(); break;
    case DocKind::Lattice: size = to_lattice(d).size(); break;
    case DocKind::Frame: size = to_frame(d).size(); break;
    case DocKind::Boolean: size = to_boolean(d).size(); break;
    case DocKind::MT: size = to_mt(d).size(); break;
    case DocKind::Space: size = to_space(d).size(); break;
    case DocKind::Map: size = d.pairs.size(); break;
  }
  const std::string kind(to_string(d.kind));
  if (c.json)
    c.out << ojson{{"valid", true}, {"kind", kind}, {"name", d.name}, {"size", size}}.dump(2) << "\n";
  else
    c.out << "valid " << kind << (d.name.empty() ? "" : " " + d.name) << " (" << size << ")\n";
  return kExitTrue;
}

int cmd_construct(Ctx& c, const std::string& op, const std::string& file) {
  const Document d = load(file);
  Document result;
  if (op == "opens") {
    const OpensFrame o = opens_frame(to_mt(d));
    result = document_of(o.frame.lattice().poset(), DocKind::Frame);
  } else if (op == "points") {
    result = document_of(points_space(to_frame(d)).space);
  } else if (op == "atoms") {
    result = document_of(atoms_space(to_mt(d)));
  } else if (op == "pspace") {
    result = document_of(powerset_mt(to_space(d)));
  } else if (op == "boolext") {
    result = document_of(bool_ext_mt(to_frame(d)).algebra);
  } else if (op == "canonical") {
    result = document_of(canonical_ext(to_boolean(d)).sigma);
  } else {
    throw Error(ErrorCode::ParseError, "unknown construction \"" + op + "\"");
  }
  if (!d.name.empty()) result.name = op + "(" + d.name + ")";
  c.out << serialize(result);
  return kExitTrue;
}

std::optional<Separation> separation_from_string(std::string_view name) {
  for (Separation s : {Separation::T0, Separation::THalf, Separation::T1, Separation::Sober, Separation::Hausdorff,
                       Separation::Regular, Separation::ZeroDim})
    if (to_string(s) == name) return s;
  return std::nullopt;
}

std::optional<Compactness> compactness_from_string(std::string_view name) {
  for (Compactness k : {Compactness::Compact, Compactness::LocallyCompact, Compactness::StablyLocallyCompact,
                        Compactness::StablyCompact, Compactness::LocallyStone, Compactness::Stone})
    if (to_string(k) == name) return k;
  return std::nullopt;
}

int cmd_check(Ctx& c, const std::string& pred, const std::string& file) {
  const Document d = load(file);
  if (is_algebra_doc(d)) {
    const MTAlgebra m = to_mt(d);
    Verdict v;
    if (auto s = separation_from_string(pred)) {
      v = separation_check(m, *s);
    } else if (auto k = compactness_from_string(pred)) {
      v = compactness_check(m, *k);
    } else {
      throw Error(ErrorCode::ParseError, "unknown predicate \"" + pred + "\" for " + std::string(to_string(d.kind)));
    }
    if (d.kind == DocKind::Space)
      if (auto sp = space_predicate_from_string(pred)) {
        const Verdict direct = space_predicate(to_space(d), *sp);
        if (direct.holds != v.holds)
          throw Error(ErrorCode::OracleDisagreement, "space and powerset evaluations of " + pred + " differ");
      }
    return emit_verdict(c, pred, v.holds, v.reason, labels_of(m, v.witness));
  }
  if (d.kind == DocKind::Lattice && pred == "distributive") {
    const FiniteLattice l = to_lattice(d);
    const Verdict v = is_distributive(l);
    std::vector<std::string> w;
    for (Elem e : v.witness) w.push_back(l.label(e));
    return emit_verdict(c, pred, v.holds, v.reason, w);
  }
  if (d.kind == DocKind::Frame || d.kind == DocKind::Lattice) {
    const Frame l = to_frame(d);
    const auto p = frame_predicate_from_string(pred);
    if (!p) throw Error(ErrorCode::ParseError, "unknown frame predicate \"" + pred + "\"");
    const Verdict v = frame_predicate(l, *p);
    return emit_verdict(c, pred, v.holds, v.reason, labels_of(l, v.witness));
  }
  throw Error(ErrorCode::ShapeMismatch, "no predicates for " + std::string(to_string(d.kind)) + " documents");
}

int cmd_hm(Ctx& c, const std::string& file) {
  const Document d = load(file);
  if (!is_algebra_doc(d)) throw Error(ErrorCode::ShapeMismatch, "hm needs an mt or space document");
  const MTAlgebra m = to_mt(d);
  HMTable t;
  try {
    t = hofmann_mislove(m);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotSober) throw;
    if (c.json)
      c.out << ojson{{"outcome", "vacuous"}, {"detail", e.what()}, {"witness", e.witness()}}.dump(2) << "\n";
    else
      c.out << "vacuous: " << e.what() << "\n";
    return kExitFalse;
  }
  auto set_str = [&](const ElemSet& s) {
    std::vector<std::string> v = labels_of(m, s.members());
    std::string out = "{";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i];
    return out + "}";
  };
  if (c.json) {
    ojson rows = ojson::array();
    for (std::size_t i = 0; i < t.compact_saturated.size(); ++i)
      rows.push_back({{"compact_saturated", m.label(t.compact_saturated[i])},
                      {"filter", labels_of(m, t.scott_filters[t.filter_index[i]].members.members())}});
    c.out << ojson{{"outcome", "pass"}, {"ks", t.compact_saturated.size()}, {"sfilt", t.scott_filters.size()},
                   {"pairs", rows}}
                 .dump(2)
          << "\n";
  } else {
    c.out << "KS(M) " << t.compact_saturated.size() << " <-> SFilt(M) " << t.scott_filters.size() << "\n";
    for (std::size_t i = 0; i < t.compact_saturated.size(); ++i)
      c.out << "  " << m.label(t.compact_saturated[i]) << " -> " << set_str(t.scott_filters[t.filter_index[i]].members)
            << "\n";
  }
  return kExitTrue;
}

int cmd_roundtrip(Ctx& c, const std::string& which, const std::string& file) {
  const auto target = roundtrip_target_from_string(which);
  if (!target) throw Error(ErrorCode::ParseError, "unknown round-trip target \"" + which + "\"");
  const Document d = load(file);
  if (d.kind == DocKind::Boolean) {
    if (*target != RoundtripTarget::StonePath)
      throw Error(ErrorCode::ShapeMismatch, which + " needs an mt or space document");
    return emit_report(c, which, stone_path_check(to_boolean(d)), {});
  }
  if (!is_algebra_doc(d)) throw Error(ErrorCode::ShapeMismatch, which + " needs an mt, space or boolean document");
  const MTAlgebra m = to_mt(d);
  const CheckReport r = roundtrip_check(*target, m);
  return emit_report(c, which, r, labels_of(m, r.witness));
}

int cmd_gen(Ctx& c, const std::string& kind_name, std::size_t size, const std::optional<std::uint64_t>& seed) {
  const auto kind = gen_kind_from_string(kind_name);
  if (!kind) throw Error(ErrorCode::ParseError, "unknown generator \"" + kind_name + "\"");
  if (seed) {
    c.out << serialize(generate(*kind, size, *seed));
    return kExitTrue;
  }
  const std::vector<Document> docs = generate_all(*kind, size);
  c.out << "[\n";
  for (std::size_t i = 0; i < docs.size(); ++i)
    c.out << "  " << nlohmann::ordered_json::parse(serialize(docs[i])).dump() << (i + 1 < docs.size() ? ",\n" : "\n");
  c.out << "]\n";
  return kExitTrue;
}

int cmd_sweep(Ctx& c, const SweepOptions& o) {
  const SweepReport r = run_sweep(o);
  c.out << (c.json ? report_json(r) : report_text(r));
  if (!r.accounting_holds()) throw Error(ErrorCode::OracleDisagreement, "sweep accounting broken");
  return r.failures.empty() ? kExitTrue : kExitFalse;
}

int cmd_hom(Ctx& c, const std::string& kind, const std::string& src, const std::string& dst, const std::string& map) {
  const Document ds = load(src), dd = load(dst), dm = load(map);
  if (kind == "mt") {
    const MTAlgebra m = to_mt(ds), n = to_mt(dd);
    const std::vector<Elem> f = to_map(dm, m.lattice().poset().labels(), n.lattice().poset().labels());
    const MTMorphismCheckResult r = check_mt_morphism({MapKind::MTMorphism, f, false}, m, n);
    const int code = emit_verdict(c, "mt_morphism", r.is_mt_morphism, r.failure.reason, labels_of(m, r.failure.witness));
    if (r.is_mt_morphism && !c.json) c.out << "proper: " << (r.is_proper ? "true" : "false") << "\n";
    return code;
  }
  if (kind == "frame") {
    const Frame l = to_frame(ds), k = to_frame(dd);
    const std::vector<Elem> f = to_map(dm, l.labels(), k.labels());
    const FrameHomCheck r = check_frame_hom(f, l, k);
    const int code = emit_verdict(c, "frame_hom", r.is_frame_hom, r.failure.reason, labels_of(l, r.failure.witness));
    if (r.is_frame_hom && !c.json) c.out << "proper: " << (r.is_proper ? "true" : "false") << "\n";
    return code;
  }
  if (kind == "map") {
    const FiniteSpace x = to_space(ds), y = to_space(dd);
    const std::vector<Elem> f = to_map(dm, x.labels(), y.labels());
    const ContinuousMapCheck r = check_map(f, x, y);
    std::vector<std::string> w;
    if (!r.is_continuous) w.push_back(set_label(y, r.failing_set));
    const int code = emit_verdict(c, "continuous", r.is_continuous, r.failure.reason, w);
    if (r.is_continuous && !c.json) c.out << "proper: " << (r.is_proper ? "true" : "false") << "\n";
    return code;
  }
  throw Error(ErrorCode::ParseError, "unknown hom kind \"" + kind + "\"");
}

}  // namespace

int command_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite MT-algebras, frames and spaces"};
  app.require_subcommand(1);
  Ctx c{out, err};
  app.add_flag("--json", c.json, "Machine-readable output");

  std::string file, op, pred, which, kind, src, dst, map;
  std::size_t size = 4, count = 0, jobs = 1;
  std::uint64_t seed = 0;

  auto* validate = app.add_subcommand("validate", "Validate a structure document");
  validate->add_option("FILE", file)->required();
  auto* construct = app.add_subcommand("construct", "Apply a construction");
  construct->add_option("--op", op)->required()->check(
      CLI::IsMember({"opens", "points", "atoms", "pspace", "boolext", "canonical"}));
  construct->add_option("FILE", file)->required();
  auto* checkc = app.add_subcommand("check", "Evaluate a predicate");
  checkc->add_option("--pred", pred)->required();
  checkc->add_option("FILE", file)->required();
  auto* hm = app.add_subcommand("hm", "Hofmann-Mislove table");
  hm->add_option("FILE", file)->required();
  auto* roundtrip = app.add_subcommand("roundtrip", "Round-trip check");
  roundtrip->add_option("--which", which)->required();
  roundtrip->add_option("FILE", file)->required();
  auto* gen = app.add_subcommand("gen", "Generate structures; without --seed, enumerate exhaustively");
  gen->add_option("--kind", kind)->required();
  gen->add_option("--size", size)->required();
  auto* gen_seed = gen->add_option("--seed", seed);
  auto* sweep = app.add_subcommand("sweep", "Run a theorem suite over a corpus");
  std::string suite;
  sweep->add_option("--suite", suite)->required();
  sweep->add_option("--size", size);
  sweep->add_option("--seed", seed);
  sweep->add_option("--count", count);
  sweep->add_option("--jobs", jobs);
  auto* hom = app.add_subcommand("hom", "Check a structure map");
  hom->add_option("--check", kind)->required()->check(CLI::IsMember({"mt", "frame", "map"}));
  hom->add_option("SRC", src)->required();
  hom->add_option("DST", dst)->required();
  hom->add_option("MAPFILE", map)->required();
  for (auto* sub : app.get_subcommands({})) sub->add_flag("--json", c.json, "Machine-readable output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitTrue;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInvalid;
  }

  try {
    if (*validate) return cmd_validate(c, file);
    if (*construct) return cmd_construct(c, op, file);
    if (*checkc) return cmd_check(c, pred, file);
    if (*hm) return cmd_hm(c, file);
    if (*roundtrip) return cmd_roundtrip(c, which, file);
    if (*gen) return cmd_gen(c, kind, size, *gen_seed ? std::optional<std::uint64_t>(seed) : std::nullopt);
    if (*sweep) {
      const auto s = suite_from_string(suite);
      if (!s) throw Error(ErrorCode::ParseError, "unknown suite \"" + suite + "\"");
      return cmd_sweep(c, SweepOptions{*s, size, seed, count, jobs});
    }
    if (*hom) return cmd_hom(c, kind, src, dst, map);
  } catch (const Error& e) {
    err << e.what() << "\n";
    if (!e.witness().empty()) err << "witness: " << joined(e.witness()) << "\n";
    return e.is_input_error() ? kExitInvalid : kExitInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace mtlab
