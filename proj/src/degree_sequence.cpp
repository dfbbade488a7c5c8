#include "unigraph/degree_sequence.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

#include "unigraph/errors.hpp"

namespace unigraph {
namespace {

constexpr std::size_t kMaxParsedTerms = std::size_t{1} << 27;

// Counting sort when the largest value is comparable to the length; the
// comparison sort only handles pathological inputs with huge terms.
void sort_descending(std::vector<int>& v) {
  if (v.empty()) return;
  const int hi = *std::max_element(v.begin(), v.end());
  if (static_cast<std::size_t>(hi) > 4 * v.size() + 64) {
    std::sort(v.begin(), v.end(), std::greater<>());
    return;
  }
  std::vector<std::size_t> counts(static_cast<std::size_t>(hi) + 1, 0);
  for (int x : v) ++counts[static_cast<std::size_t>(x)];
  std::size_t at = 0;
  for (int value = hi; value >= 0; --value) {
    for (std::size_t c = counts[static_cast<std::size_t>(value)]; c > 0; --c) v[at++] = value;
  }
}

}  // namespace

DegreeSequence::DegreeSequence(std::span<const int> raw) : terms_(raw.begin(), raw.end()) {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i] < 0) {
      throw DomainError("negative degree " + std::to_string(terms_[i]) + " at position " +
                        std::to_string(i + 1));
    }
  }
  sort_descending(terms_);
}

DegreeSequence::DegreeSequence(std::initializer_list<int> raw)
    : DegreeSequence(std::span<const int>(raw.begin(), raw.size())) {}

std::int64_t DegreeSequence::sum() const {
  std::int64_t s = 0;
  for (int x : terms_) s += x;
  return s;
}

DegreeSequence normalize(std::span<const int> raw) { return DegreeSequence(raw); }

std::vector<int> parse_sequence_text(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' ||
                                 text[pos] == '\r')) {
      ++pos;
    }
  };
  auto read_number = [&](const char* what) {
    const std::size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == start) {
      if (start < text.size()) {
        throw SequenceParseError(std::string("expected ") + what + ", found '" + text[start] + "'",
                                 start + 1);
      }
      throw SequenceParseError(std::string("expected ") + what + " at end of input", start + 1);
    }
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + pos, value);
    if (ec != std::errc() || value > std::numeric_limits<int>::max()) {
      throw SequenceParseError(std::string(what) + " out of range", start + 1);
    }
    (void)ptr;
    return static_cast<int>(value);
  };

  skip_space();
  if (pos == text.size()) return out;
  for (;;) {
    skip_space();
    const int value = read_number("a degree");
    skip_space();
    std::size_t copies = 1;
    if (pos < text.size() && text[pos] == '^') {
      const std::size_t caret = pos;
      ++pos;
      skip_space();
      copies = static_cast<std::size_t>(read_number("a repeat count"));
      if (out.size() + copies > kMaxParsedTerms) {
        throw SequenceParseError("sequence too long", caret + 1);
      }
      skip_space();
    }
    out.insert(out.end(), copies, value);
    if (out.size() > kMaxParsedTerms) throw SequenceParseError("sequence too long", pos + 1);
    if (pos == text.size()) break;
    if (text[pos] != ',') {
      throw SequenceParseError(std::string("expected ',' or '^', found '") + text[pos] + "'",
                               pos + 1);
    }
    ++pos;
  }
  return out;
}

DegreeSequence parse_sequence(std::string_view text) {
  const auto raw = parse_sequence_text(text);
  return DegreeSequence(raw);
}

std::string format_sequence(std::span<const int> terms, bool compress) {
  std::string out;
  std::size_t i = 0;
  while (i < terms.size()) {
    std::size_t j = i;
    while (j < terms.size() && terms[j] == terms[i]) ++j;
    const std::size_t run = j - i;
    if (compress && run >= 3) {
      if (!out.empty()) out.push_back(',');
      out += std::to_string(terms[i]) + "^" + std::to_string(run);
    } else {
      for (std::size_t r = 0; r < run; ++r) {
        if (!out.empty()) out.push_back(',');
        out += std::to_string(terms[i]);
      }
    }
    i = j;
  }
  return out;
}

bool EGProfile::graphic() const {
  if (!even_sum) return false;
  return std::all_of(slack.begin(), slack.end(), [](std::int64_t s) { return s >= 0; });
}

int EGProfile::conj(int j) const {
  if (j < 0) throw std::invalid_argument("conjugate index must be nonnegative");
  return static_cast<std::size_t>(j) < conjugate.size() ? conjugate[static_cast<std::size_t>(j)] : 0;
}

std::vector<int> conjugate(const DegreeSequence& d) {
  const int hi = d.max_term();
  std::vector<int> conj(static_cast<std::size_t>(hi) + 1, 0);
  for (int x : d.terms()) ++conj[static_cast<std::size_t>(x)];
  for (int j = hi - 1; j >= 0; --j) {
    conj[static_cast<std::size_t>(j)] += conj[static_cast<std::size_t>(j) + 1];
  }
  return conj;
}

int m_of(const DegreeSequence& d) {
  int m = 0;
  for (int i = 1; i <= d.size(); ++i) {
    if (d.d(i) >= i - 1) {
      m = i;
    } else {
      break;
    }
  }
  return m;
}

EGProfile eg_profile(const DegreeSequence& d) {
  const int n = d.size();
  EGProfile p;
  p.conjugate = conjugate(d);
  p.m = m_of(d);
  p.even_sum = d.sum() % 2 == 0;

  std::vector<std::int64_t> prefix(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) prefix[static_cast<std::size_t>(i)] = prefix[static_cast<std::size_t>(i) - 1] + d.d(i);

  p.slack.assign(static_cast<std::size_t>(n) + 1, 0);
  p.eg.push_back(0);
  std::int64_t conj_prefix = 0;  // sum_{j=1}^{k} d*_j
  for (int k = 1; k <= n; ++k) {
    conj_prefix += p.conj(k);
    const std::int64_t c = p.conj(k);
    const std::int64_t kk = k;
    // sum_{i<=k} min(k, d_i): the first min(k, c) terms are at least k.
    std::int64_t head_min = kk * std::min(kk, c);
    if (c < kk) head_min += prefix[static_cast<std::size_t>(k)] - prefix[static_cast<std::size_t>(c)];
    const std::int64_t tail = conj_prefix - head_min;
    const std::int64_t s = kk * (kk - 1) + tail - prefix[static_cast<std::size_t>(k)];
    p.slack[static_cast<std::size_t>(k)] = s;
    if (s == 0) p.eg.push_back(k);
  }
  return p;
}

bool is_graphic(const DegreeSequence& d) { return eg_profile(d).graphic(); }

int delta(const DegreeSequence& d, int j) {
  if (j < 0) throw std::invalid_argument("delta index must be nonnegative");
  int count = 0;
  for (int i = j + 1; i <= d.size(); ++i) {
    if (d.d(i) == j) ++count;
  }
  return count;
}

int delta(const EGProfile& p, int j) {
  if (j < 0) throw std::invalid_argument("delta index must be nonnegative");
  // Terms equal to j occupy 1-based positions conj(j+1)+1 .. conj(j).
  const int last = p.conj(j);
  const int before = std::max(p.conj(j + 1), j);
  return std::max(0, last - before);
}

std::int64_t eg_tail_sum_direct(const DegreeSequence& d, int k) {
  std::int64_t s = 0;
  for (int i = k + 1; i <= d.size(); ++i) s += std::min(k, d.d(i));
  return s;
}

std::int64_t eg_tail_sum_via_conjugate(const DegreeSequence& d, const EGProfile& p, int k) {
  std::int64_t total = 0;
  for (int j = 1; j <= k; ++j) total += p.conj(j);
  std::int64_t head = 0;
  for (int i = 1; i <= std::min(k, d.size()); ++i) head += std::min(k, d.d(i));
  return total - head;
}

}  // namespace unigraph
