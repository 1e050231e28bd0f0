#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "numsg/json.hpp"
#include "numsg/semigroup.hpp"

namespace numsg {

// The five transforms. Each is a partial map on numerical semigroups:
//   Classical       S u {F}                       S != N
//   Ordinarization  (S u {F}) \ {m}               S not ordinary
//   Irreducibility  S u {h}, h = max X(S)         S not irreducible
//   A               (S u {h}) \ {m}, h = max(SG \ {F})   S not special
//   B               (S \ {m}) u {u(S)}            S neither ordinary nor almost-ordinary
// where X(S) = {x not in S : F - x not in S, 2x != F}.
enum class TransformKind { Classical, Ordinarization, Irreducibility, A, B };

std::string_view name(TransformKind kind);
// Accepts f1|f2|f3|a|b and the long names, case-insensitively.
TransformKind parse_transform_kind(std::string_view text);

// Empty when S is in the domain of `kind`, otherwise the reason it is not
// (e.g. "input is special: almost-ordinary").
std::string domain_violation(NumericalSemigroup const& s, TransformKind kind);
inline bool in_domain(NumericalSemigroup const& s, TransformKind kind) {
  return domain_violation(s, kind).empty();
}

NumericalSemigroup f1(NumericalSemigroup const& s);
NumericalSemigroup f2(NumericalSemigroup const& s);
NumericalSemigroup f3(NumericalSemigroup const& s);
NumericalSemigroup transform_a(NumericalSemigroup const& s);
NumericalSemigroup transform_b(NumericalSemigroup const& s);
NumericalSemigroup apply(NumericalSemigroup const& s, TransformKind kind);

// max(SG(S) \ {F}); equals max X(S) whenever S is not irreducible, and both
// are evaluated and compared in checked builds. DomainError on irreducible S
// (and on ordinary S without such a gap).
int max_special_gap_below_frobenius(NumericalSemigroup const& s);

// max X(S), straight from the definition. DomainError when X(S) is empty.
int irreducibility_gap(NumericalSemigroup const& s);

struct StepAnnotation {
  int added = 0;                 // element added (F, h or u)
  std::optional<int> removed_m;  // multiplicity removed, if the transform drops it
  int e_before = 0;
  int e_after = 0;
};

struct TransformTrace {
  TransformKind kind = TransformKind::A;
  std::vector<NumericalSemigroup> steps;  // input first, terminal last
  std::vector<StepAnnotation> annotations;  // one per transition
};

// Applies `kind` until the result leaves its domain, or max_steps
// transitions have happened. An input already outside the domain gives a
// trace of length 1. Without max_steps the loop is guarded at g(S) + 2
// transitions (every transform here reaches its terminal sooner) and trips
// InternalError past that.
TransformTrace iterate(NumericalSemigroup const& s, TransformKind kind,
                       std::optional<int> max_steps = std::nullopt);

// {"kind","steps":[...],"annotations":[{"h","removed_m","e_before","e_after"}...]}
Json to_json(TransformTrace const& trace);

}  // namespace numsg
