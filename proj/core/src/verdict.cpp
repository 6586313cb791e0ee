#include "sftconj/verdict.hpp"

#include "sftconj/errors.hpp"

namespace sftconj {

std::string_view to_string(Failure f) {
  switch (f) {
    case Failure::none: return "none";
    case Failure::invalid_code: return "invalid_code";
    case Failure::not_injective: return "not_injective";
    case Failure::not_surjective: return "not_surjective";
  }
  return "none";
}

Failure failure_from_string(std::string_view s) {
  if (s == "none") return Failure::none;
  if (s == "invalid_code") return Failure::invalid_code;
  if (s == "not_injective") return Failure::not_injective;
  if (s == "not_surjective") return Failure::not_surjective;
  throw ParseError("unknown failure kind: " + std::string(s));
}

std::string_view witness_kind(const Witness& w) {
  struct {
    std::string_view operator()(const CyclePair&) const { return "cycle_pair"; }
    std::string_view operator()(const TraceMismatch&) const { return "trace_mismatch"; }
    std::string_view operator()(const Diamond&) const { return "diamond"; }
    std::string_view operator()(const InvalidWord&) const { return "invalid_word"; }
  } kind;
  return std::visit(kind, w);
}

}  // namespace sftconj
