#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mtlab/frame.hpp"
#include "mtlab/mt.hpp"
#include "mtlab/space.hpp"

namespace mtlab {

/// Powerset algebras have 2^n elements; larger point sets are refused.
inline constexpr std::size_t kMaxPowersetPoints = 14;

// ---------------------------------------------------------------- P and at

/// (P(X), int). Element index = bitmask over point indices.
MTAlgebra powerset_mt(const FiniteSpace& x);
/// P(f) = f^{-1}: P(Y) -> P(X), validated with check_mt_morphism.
StructureMap powerset_mt_map(const std::vector<Elem>& f, const FiniteSpace& x, const FiniteSpace& y);

/// η(a) = {x ∈ at(M) | x <= a}, over atom positions in atom_list().
std::vector<ElemSet> eta_sets(const MTAlgebra& m);
/// at(M) with the topology η[O(M)]; point labels are the atom labels.
FiniteSpace atoms_space(const MTAlgebra& m);
/// at(f)(x) = f*(x) for atoms x of N, as atom positions of M. Throws
/// NotMTMorphism when f is not an MT-morphism.
std::vector<Elem> atoms_map(const StructureMap& f, const MTAlgebra& m, const MTAlgebra& n);

// ---------------------------------------------------------------- O, Ω and pt

struct OpensFrame {
  Frame frame;
  std::vector<Elem> elements;  // frame index -> element of M
};
OpensFrame opens_frame(const MTAlgebra& m);
/// Restriction of an MT-morphism to the opens, as a map between frame indices.
std::vector<Elem> opens_map(const StructureMap& f, const OpensFrame& om, const OpensFrame& on);

/// Ω(X): frame index i is x.opens()[i].
Frame omega(const FiniteSpace& x);
/// Ω(f) = f^{-1}: Ω(Y) -> Ω(X).
std::vector<Elem> omega_map(const std::vector<Elem>& f, const FiniteSpace& x, const FiniteSpace& y);

struct PointSpace {
  FiniteSpace space;  // point i is points.points[i]
  FramePointSet points;
};
/// pt(L) with the topology ζ[L]; a point ↑j is labelled by j.
PointSpace points_space(const Frame& l);

// ---------------------------------------------------------------- B(L) and canonical extension

struct BoolExt {
  MTAlgebra algebra;
  std::vector<Elem> embed;  // frame element -> algebra element
};
/// Powerset over J(L), its MacNeille completion, and the lower extension of
/// the right adjoint of the embedding. Asserts O(result) ≅ L.
BoolExt bool_ext_mt(const Frame& l);

/// Boolean homomorphism equations; witness in the source.
Verdict check_boolean_hom(const std::vector<Elem>& h, const FiniteBooleanAlgebra& a, const FiniteBooleanAlgebra& b);

struct CanonicalExtension {
  FiniteBooleanAlgebra base;
  std::vector<ElemSet> ultrafilters;  // sorted
  MTAlgebra sigma;                    // powerset of ultrafilters; index = bitmask over ultrafilters
  std::vector<Elem> embed;            // base element -> sigma element
};
/// Density and compactness are asserted; throws OracleDisagreement otherwise.
CanonicalExtension canonical_ext(const FiniteBooleanAlgebra& b);
/// h^σ as the join of the images of ultrafilters, cross-checked against the
/// preimage under Uf(h); throws NotBooleanHom.
std::vector<Elem> lift_hom(const std::vector<Elem>& h, const CanonicalExtension& a, const CanonicalExtension& b);

struct ClopenAlgebra {
  FiniteBooleanAlgebra ba;
  std::vector<Elem> elements;  // ba index -> element of M
};
ClopenAlgebra clopen_algebra(const MTAlgebra& m);

// ---------------------------------------------------------------- canonical maps

enum class CanonicalKind { Eta, Epsilon, Zeta, Delta, Theta };
std::string_view to_string(CanonicalKind k);

struct CanonicalMap {
  CanonicalKind kind = CanonicalKind::Eta;
  std::vector<Elem> table;
  bool is_injective = false;
  bool is_surjective = false;
  bool is_iso = false;  // isomorphism or homeomorphism, as appropriate
};

/// M -> P(at(M)); targets are bitmasks over atom positions.
CanonicalMap eta_map(const MTAlgebra& m);
/// X -> at(P(X)); targets are atom positions of P(X).
CanonicalMap epsilon_map(const FiniteSpace& x);
/// L -> Ω(pt(L)); targets are indices into omega(points_space(l).space).
CanonicalMap zeta_map(const Frame& l);
/// X -> pt(Ω(X)); targets are point indices.
CanonicalMap delta_map(const FiniteSpace& x);
/// at(M) -> pt(O(M)), ϑ(x) = ↑x ∩ O(M); throws NotSober.
CanonicalMap theta_map(const MTAlgebra& m);

/// η_N(f(a)) = at(f)^{-1} η_M(a) for every a.
Verdict eta_naturality(const StructureMap& f, const MTAlgebra& m, const MTAlgebra& n);
/// ϑ_M ∘ at(f) = pt(O(f)) ∘ ϑ_N; M and N must be sober.
Verdict theta_naturality(const StructureMap& f, const MTAlgebra& m, const MTAlgebra& n);

// ---------------------------------------------------------------- isomorphism

/// Searches for a bijection of atoms carrying the opens of one onto the other
/// and returns the induced element map.
std::optional<std::vector<Elem>> mt_isomorphism(const MTAlgebra& a, const MTAlgebra& b);
bool is_mt_isomorphism(const std::vector<Elem>& f, const MTAlgebra& a, const MTAlgebra& b);

// ---------------------------------------------------------------- round trips

enum class RoundtripTarget { THalfIso, HLUnit, HMFrame, HMSpace, EtaProper, EtaScott, EtaKS, StonePath };
std::string_view to_string(RoundtripTarget t);
std::optional<RoundtripTarget> roundtrip_target_from_string(std::string_view name);
const std::vector<RoundtripTarget>& all_roundtrip_targets();

/// Pass or fail when the hypotheses hold; Vacuous otherwise. For THalfIso
/// the converse direction is still checked on non-T½ inputs.
CheckReport roundtrip_check(RoundtripTarget t, const MTAlgebra& m);
/// (SFilt(L), ⊆) ≅ (KS(pt L), ⊇) through K ↦ {a | K ⊆ ζ(a)}.
CheckReport hm_frame_check(const Frame& l);
/// Stone path from a boolean algebra: (B^σ,□) is Stone, CL(B^σ) ≅ B, at(B^σ)
/// is discrete with one point per atom, CLP(at(B^σ)) ≅ B.
CheckReport stone_path_check(const FiniteBooleanAlgebra& b);

}  // namespace mtlab
