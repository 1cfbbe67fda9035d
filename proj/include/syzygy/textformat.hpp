#pragma once

#include "syzygy/module.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace syz {

/// Declarations read from the line-oriented input format:
///
///   ring R = GF(32003)[x,y,z] weights [1,1,1] mod [x*y, x*z]
///   module M over R = coker [[y]] shifts [0]
///   ideal I over R = [y, z]
///
/// `k` in place of the field means the default field. `#` starts a comment.
struct Document {
  struct NamedModule {
    std::string ring;
    FPModule module;
  };
  struct NamedIdeal {
    std::string ring;
    std::vector<Polynomial> generators;
  };

  std::map<std::string, QuotientRingPtr> rings;
  std::map<std::string, NamedModule> modules;
  std::map<std::string, NamedIdeal> ideals;
  /// Names in declaration order.
  std::vector<std::string> order;

  const QuotientRingPtr& ring(const std::string& name) const;
  const FPModule& module(const std::string& name) const;
  const std::vector<Polynomial>& ideal(const std::string& name) const;
  /// The ring a module or ideal was declared over.
  const QuotientRingPtr& ring_of(const std::string& name) const;
};

/// `default_field` replaces `k`; `force_field` replaces every field.
struct ParseOptions {
  Field default_field{};
  std::optional<Field> force_field;
};

Document parse_document(const std::string& text, const ParseOptions& options = {});
Document parse_document_file(const std::string& path, const ParseOptions& options = {});

/// `GF(p)`, `QQ` or `k`.
Field parse_field(const std::string& text, const Field& default_field = Field{});

/// Splits on commas outside brackets and parentheses, trimming each piece.
std::vector<std::string> split_top_level(const std::string& text);

}  // namespace syz
