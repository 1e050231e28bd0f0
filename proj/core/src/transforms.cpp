#include "numsg/transforms.hpp"

#include <algorithm>
#include <cctype>

namespace numsg {

std::string_view name(TransformKind kind) {
  switch (kind) {
    case TransformKind::Classical: return "f1";
    case TransformKind::Ordinarization: return "f2";
    case TransformKind::Irreducibility: return "f3";
    case TransformKind::A: return "A";
    case TransformKind::B: return "B";
  }
  return "?";
}

TransformKind parse_transform_kind(std::string_view text) {
  std::string t(text);
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
  if (t == "f1" || t == "classical") return TransformKind::Classical;
  if (t == "f2" || t == "ordinarization") return TransformKind::Ordinarization;
  if (t == "f3" || t == "irreducibility") return TransformKind::Irreducibility;
  if (t == "a") return TransformKind::A;
  if (t == "b") return TransformKind::B;
  throw ParseError("unknown transform kind '" + std::string(text) + "' (expected f1|f2|f3|a|b)");
}

std::string domain_violation(NumericalSemigroup const& s, TransformKind kind) {
  switch (kind) {
    case TransformKind::Classical:
      return s.is_naturals() ? "input is N" : "";
    case TransformKind::Ordinarization:
      return is_ordinary(s) ? "input is ordinary" : "";
    case TransformKind::Irreducibility:
      if (s.is_naturals()) return "input is N";
      return is_irreducible(s) ? "input is irreducible" : "";
    case TransformKind::A: {
      auto why = special_kind(s);
      return why.empty() ? "" : "input is special: " + why;
    }
    case TransformKind::B:
      if (is_ordinary(s)) return "input is ordinary";
      if (is_almost_ordinary(s)) return "input is almost-ordinary";
      return "";
  }
  return "unknown transform";
}

namespace {

void require_domain(NumericalSemigroup const& s, TransformKind kind) {
  auto why = domain_violation(s, kind);
  if (!why.empty()) {
    throw DomainError("transform " + std::string(name(kind)) + " undefined: " + why);
  }
}

// Theory guarantees these steps are valid; a failure here is a bug.
NumericalSemigroup checked_add(NumericalSemigroup const& s, int h) {
  try {
    return add_special_gap(s, h);
  } catch (NotSpecialGap const& e) {
    throw InternalError(std::string("transform step failed: ") + e.what());
  }
}

NumericalSemigroup checked_remove(NumericalSemigroup const& s, int x) {
  try {
    return remove_minimal_generator(s, x);
  } catch (NotMinimalGenerator const& e) {
    throw InternalError(std::string("transform step failed: ") + e.what());
  }
}

}  // namespace

int irreducibility_gap(NumericalSemigroup const& s) {
  const int f = s.frobenius();
  for (int x = f - 1; x > 0; --x) {
    if (!s.contains(x) && !s.contains(f - x) && 2 * x != f) return x;
  }
  throw DomainError("no gap x with F - x a gap and 2x != F: semigroup is irreducible or N");
}

int max_special_gap_below_frobenius(NumericalSemigroup const& s) {
  if (s.is_naturals()) throw DomainError("N has no gaps");
  int h = -1;
  for (int x = s.frobenius() - 1; x > 0; --x) {
    if (s.is_special_gap(x)) {
      h = x;
      break;
    }
  }
  if (h < 0) throw DomainError("SG(S) = {F}: semigroup is irreducible");
#ifndef NDEBUG
  if (irreducibility_gap(s) != h || 2 * h <= s.frobenius()) {
    throw InternalError("max(SG \\ {F}) disagrees with max X(S) on " + to_string(s));
  }
#endif
  return h;
}

NumericalSemigroup f1(NumericalSemigroup const& s) {
  require_domain(s, TransformKind::Classical);
  return checked_add(s, s.frobenius());
}

NumericalSemigroup f2(NumericalSemigroup const& s) {
  require_domain(s, TransformKind::Ordinarization);
  return checked_remove(checked_add(s, s.frobenius()), s.multiplicity());
}

NumericalSemigroup f3(NumericalSemigroup const& s) {
  require_domain(s, TransformKind::Irreducibility);
  return checked_add(s, irreducibility_gap(s));
}

NumericalSemigroup transform_a(NumericalSemigroup const& s) {
  require_domain(s, TransformKind::A);
  const int h = max_special_gap_below_frobenius(s);
  return checked_remove(checked_add(s, h), s.multiplicity());
}

// Remove first, then add: S u {u} need not be a semigroup (6 + 14 = 20 for
// <6,11,13,15,16>), while S \ {m} always is and u is special in it.
NumericalSemigroup transform_b(NumericalSemigroup const& s) {
  require_domain(s, TransformKind::B);
  const int u = s.sub_frobenius();
  return checked_add(checked_remove(s, s.multiplicity()), u);
}

NumericalSemigroup apply(NumericalSemigroup const& s, TransformKind kind) {
  switch (kind) {
    case TransformKind::Classical: return f1(s);
    case TransformKind::Ordinarization: return f2(s);
    case TransformKind::Irreducibility: return f3(s);
    case TransformKind::A: return transform_a(s);
    case TransformKind::B: return transform_b(s);
  }
  throw InternalError("unknown transform kind");
}

namespace {

StepAnnotation annotate(NumericalSemigroup const& s, TransformKind kind) {
  StepAnnotation a;
  switch (kind) {
    case TransformKind::Classical: a.added = s.frobenius(); break;
    case TransformKind::Ordinarization:
      a.added = s.frobenius();
      a.removed_m = s.multiplicity();
      break;
    case TransformKind::Irreducibility: a.added = irreducibility_gap(s); break;
    case TransformKind::A:
      a.added = max_special_gap_below_frobenius(s);
      a.removed_m = s.multiplicity();
      break;
    case TransformKind::B:
      a.added = s.sub_frobenius();
      a.removed_m = s.multiplicity();
      break;
  }
  a.e_before = s.embedding_dimension();
  return a;
}

}  // namespace

TransformTrace iterate(NumericalSemigroup const& s, TransformKind kind, std::optional<int> max_steps) {
  TransformTrace trace;
  trace.kind = kind;
  trace.steps.push_back(s);
  const int guard = s.genus() + 2;
  while (in_domain(trace.steps.back(), kind)) {
    const int done = static_cast<int>(trace.annotations.size());
    if (max_steps && done >= *max_steps) break;
    if (done >= guard) {
      throw InternalError("transform " + std::string(name(kind)) + " did not terminate within " +
                          std::to_string(guard) + " steps from " + to_string(s));
    }
    auto const& cur = trace.steps.back();
    auto note = annotate(cur, kind);
    auto next = apply(cur, kind);
    note.e_after = next.embedding_dimension();
    trace.annotations.push_back(note);
    trace.steps.push_back(std::move(next));
  }
  return trace;
}

Json to_json(TransformTrace const& trace) {
  Json j;
  j["kind"] = std::string(name(trace.kind));
  Json steps = Json::array();
  for (auto const& s : trace.steps) steps.push_back(to_json(s));
  j["steps"] = std::move(steps);
  Json notes = Json::array();
  for (auto const& a : trace.annotations) {
    Json n;
    n["h"] = a.added;
    n["removed_m"] = a.removed_m ? Json(*a.removed_m) : Json(nullptr);
    n["e_before"] = a.e_before;
    n["e_after"] = a.e_after;
    notes.push_back(std::move(n));
  }
  j["annotations"] = std::move(notes);
  return j;
}

}  // namespace numsg
