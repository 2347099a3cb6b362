#pragma once

#include <string>

#include "gim/models.hpp"

namespace gim {

/// Serializable containment claim. Never trusted on load: callers re-run validate().
struct Certificate {
  BranchModel model;
  ModelKind kind = ModelKind::Minor;
  /// Family tag (e.g. "grid:2") written instead of the pattern's graph6 when non-empty.
  std::string pattern_tag;
  std::string provenance;

  ModelVerdict validate() const { return validate_model(model, kind); }
};

/// JSON document {host, pattern, kind, branch_sets, provenance}; host and
/// pattern are graph6 strings, pattern may be a family tag instead.
std::string certificate_to_json(const Certificate& c);
/// Throws InvalidInput on malformed documents. Does not validate the model.
Certificate certificate_from_json(const std::string& text);

ModelKind parse_kind(const std::string& s);

}  // namespace gim
