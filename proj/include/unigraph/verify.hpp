#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace unigraph {

struct VerificationResult {
  std::string property;
  int min_n = 0;
  int max_n = 0;
  std::size_t classes_checked = 0;
  std::vector<std::string> counterexamples;  // graph6, in enumeration order
  std::vector<std::string> failures;         // one message per counterexample or failed aggregate
  std::vector<std::string> notes;            // e.g. strictness witnesses
  double elapsed_seconds = 0.0;

  bool pass() const { return counterexamples.empty() && failures.empty(); }
};

struct PropertyInfo {
  std::string id;
  std::string description;
  int max_n;  // largest vertex count the property may be swept to
};

const std::vector<PropertyInfo>& properties();

/// Sweeps every isomorphism class on min_n..max_n vertices. Throws
/// UnknownProperty for an unregistered id and CapExceeded when max_n exceeds
/// the property's cap. Counterexample order does not depend on `jobs`.
VerificationResult verify(std::string_view property, int max_n, int jobs = 1, int min_n = 0);

}  // namespace unigraph
