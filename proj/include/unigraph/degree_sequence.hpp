#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace unigraph {

/// Nonnegative integers in descending order. Terms larger than n-1 are
/// allowed here; they only make the sequence non-graphic.
class DegreeSequence {
 public:
  DegreeSequence() = default;
  /// Sorts descending. Throws DomainError on a negative entry.
  explicit DegreeSequence(std::span<const int> raw);
  DegreeSequence(std::initializer_list<int> raw);

  int size() const { return static_cast<int>(terms_.size()); }
  bool empty() const { return terms_.empty(); }
  /// 1-based access: d(1) is the largest term.
  int d(int i) const { return terms_[static_cast<std::size_t>(i - 1)]; }
  int max_term() const { return terms_.empty() ? 0 : terms_.front(); }
  std::int64_t sum() const;
  const std::vector<int>& terms() const { return terms_; }

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;

 private:
  std::vector<int> terms_;
};

DegreeSequence normalize(std::span<const int> raw);

/// Reads "d1,d2,...,dn"; a term may be written "k^a" for a copies of k.
/// Whitespace around terms is ignored. Throws SequenceParseError.
std::vector<int> parse_sequence_text(std::string_view text);
DegreeSequence parse_sequence(std::string_view text);

/// Comma-separated terms, runs of three or more written as "k^a" when
/// `compress` is set.
std::string format_sequence(std::span<const int> terms, bool compress = false);

/// Equality profile of the Erdős–Gallai inequalities of a sequence.
///
/// slack[k] is RHS - LHS of the k-th inequality
///   sum_{i<=k} d_i <= k(k-1) + sum_{i>k} min(k, d_i)
/// for k = 0..n, and eg lists the k with zero slack (always starting at 0).
struct EGProfile {
  std::vector<int> eg;
  int m = 0;                       // max{i : d_i >= i-1}, 0 for the empty sequence
  std::vector<int> conjugate;      // d*_j for j = 0..max term; d*_0 = n
  std::vector<std::int64_t> slack; // indexed by k = 0..n
  bool even_sum = true;

  int t() const { return eg.back(); }
  bool graphic() const;
  /// d*_j for any j >= 0 (zero beyond the largest term).
  int conj(int j) const;
};

/// O(n + d_1) given a sorted sequence.
EGProfile eg_profile(const DegreeSequence& d);

bool is_graphic(const DegreeSequence& d);
int m_of(const DegreeSequence& d);
/// d*_j = max{i : d_i >= j} for j = 0..d_1.
std::vector<int> conjugate(const DegreeSequence& d);
/// |{i : i > j and d_i = j}|.
int delta(const DegreeSequence& d, int j);
/// delta computed from a profile's conjugate in O(1).
int delta(const EGProfile& p, int j);

/// sum_{i>k} min(k, d_i) by direct summation, O(n).
std::int64_t eg_tail_sum_direct(const DegreeSequence& d, int k);
/// Same quantity through partial sums of the conjugate sequence.
std::int64_t eg_tail_sum_via_conjugate(const DegreeSequence& d, const EGProfile& p, int k);

}  // namespace unigraph
