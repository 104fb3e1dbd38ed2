#pragma once

#include <optional>
#include <string>
#include <variant>

#include "permcover/code.hpp"
#include "permcover/composed_code.hpp"
#include "permcover/permutation.hpp"

namespace permcover {

/// Structured description of a code.
struct CyclicFamily {
  std::size_t n = 0;
  /// Relabeling h; absent means the natural labeling G_n.
  std::optional<Permutation> conjugator;
};

struct DihedralFamily {
  std::size_t n = 0;
};

using CodeDescriptor = std::variant<ExplicitCode, CyclicFamily, DihedralFamily, ComposedCodeSpec>;

std::size_t code_length(const CodeDescriptor& code);

/// Lists every codeword. Composed codes are enumerated up to `cap` words.
ExplicitCode materialize(const CodeDescriptor& code, std::size_t cap = 10'000'000);

/// Short human-readable name, e.g. "G_7", "G_7^h", "D_6", "C(5,3)".
std::string describe(const CodeDescriptor& code);

}  // namespace permcover
