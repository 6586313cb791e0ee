#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "sftconj/graph.hpp"

namespace sftconj {

enum class Failure { none, invalid_code, not_injective, not_surjective };

std::string_view to_string(Failure f);
Failure failure_from_string(std::string_view s);

// Two distinct cycles of the source with the same image.
struct CyclePair {
  Word first;
  Word second;
  Word image;
  friend bool operator==(const CyclePair&, const CyclePair&) = default;
};

// First power i with tr(A_G^i) != tr(A_H^i).
struct TraceMismatch {
  std::size_t power = 0;
  BigInt source_trace;
  BigInt target_trace;
  friend bool operator==(const TraceMismatch&, const TraceMismatch&) = default;
};

// prefix+left+suffix and prefix+right+suffix are distinct source words with
// the same image; prefix and suffix have length k.
struct Diamond {
  Word prefix;
  Word left;
  Word right;
  Word suffix;
  Word image;
  friend bool operator==(const Diamond&, const Diamond&) = default;
};

// A word that the map is missing, that is not a path, or whose image is not an edge.
struct InvalidWord {
  Word word;
  std::string reason;
  friend bool operator==(const InvalidWord&, const InvalidWord&) = default;
};

using Witness = std::variant<CyclePair, TraceMismatch, Diamond, InvalidWord>;

struct Verdict {
  bool is_conjugacy = false;
  Failure failure = Failure::none;
  std::optional<Witness> witness;

  static Verdict conjugacy() { return {true, Failure::none, std::nullopt}; }
  static Verdict failed(Failure f, std::optional<Witness> w = std::nullopt) {
    return {false, f, std::move(w)};
  }

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

std::string_view witness_kind(const Witness& w);

}  // namespace sftconj
