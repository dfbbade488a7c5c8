#include "unigraph/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <thread>

#include "unigraph/errors.hpp"
#include "unigraph/graph6.hpp"

namespace unigraph {
namespace {

void check_cap(int n, int cap, const char* what) {
  if (n > cap) {
    throw CapExceeded(std::string(what) + " is limited to " + std::to_string(cap) + " vertices, got " +
                      std::to_string(n));
  }
}

std::vector<Graph> extend_all(const std::vector<Graph>& parents, int n, int jobs) {
  const std::uint32_t masks = std::uint32_t{1} << (n - 1);
  const std::size_t tasks = parents.size();
  std::atomic<std::size_t> next{0};
  std::vector<std::set<std::string>> found(static_cast<std::size_t>(jobs));
  auto work = [&](std::size_t worker) {
    auto& out = found[worker];
    for (std::size_t t = next++; t < tasks; t = next++) {
      const Graph& parent = parents[t];
      for (std::uint32_t mask = 0; mask < masks; ++mask) {
        Graph g(n);
        for (auto [u, v] : parent.edges()) g.add_edge(u, v);
        for (Vertex v = 0; v + 1 < n; ++v) {
          if (mask >> v & 1U) g.add_edge(v, n - 1);
        }
        out.insert(canonical_form(g));
      }
    }
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < jobs; ++w) pool.emplace_back(work, static_cast<std::size_t>(w));
  work(0);
  for (auto& th : pool) th.join();
  std::set<std::string> merged;
  for (auto& s : found) merged.insert(s.begin(), s.end());
  std::vector<Graph> out;
  out.reserve(merged.size());
  for (const auto& form : merged) out.push_back(parse_graph6(form));
  return out;
}

class RealizationSearch {
 public:
  RealizationSearch(const DegreeSequence& d, std::optional<std::size_t> limit)
      : n_(d.size()), residual_(d.terms()), limit_(limit), g_(n_) {}

  std::map<std::string, Graph> run() {
    place(0);
    return std::move(found_);
  }

 private:
  bool done() const { return limit_ && found_.size() >= *limit_; }

  bool residual_graphic(int from) const {
    std::vector<int> rest(residual_.begin() + from, residual_.end());
    return is_graphic(DegreeSequence(rest));
  }

  void place(int i) {
    if (done()) return;
    if (i == n_) {
      auto form = canonical_form(g_);
      found_.emplace(std::move(form), g_);
      return;
    }
    // Later vertices with equal residual degree and equal adjacency to the
    // placed prefix are interchangeable; pick a count from each class.
    std::vector<std::vector<Vertex>> classes;
    std::map<std::pair<int, std::uint64_t>, std::size_t> index;
    for (Vertex j = i + 1; j < n_; ++j) {
      if (residual_[static_cast<std::size_t>(j)] == 0) continue;
      std::uint64_t prefix = 0;
      for (Vertex u = 0; u < i; ++u) {
        if (g_.adjacent(u, j)) prefix |= std::uint64_t{1} << u;
      }
      const auto key = std::pair{residual_[static_cast<std::size_t>(j)], prefix};
      auto [it, fresh] = index.emplace(key, classes.size());
      if (fresh) classes.emplace_back();
      classes[it->second].push_back(j);
    }
    std::vector<int> take(classes.size(), 0);
    choose(i, classes, take, 0, residual_[static_cast<std::size_t>(i)]);
  }

  void choose(int i, const std::vector<std::vector<Vertex>>& classes, std::vector<int>& take,
              std::size_t c, int need) {
    if (done()) return;
    if (c == classes.size()) {
      if (need != 0) return;
      std::vector<Vertex> chosen;
      for (std::size_t k = 0; k < classes.size(); ++k) {
        for (int x = 0; x < take[k]; ++x) chosen.push_back(classes[k][static_cast<std::size_t>(x)]);
      }
      for (Vertex j : chosen) {
        g_.add_edge(i, j);
        --residual_[static_cast<std::size_t>(j)];
      }
      const int saved = residual_[static_cast<std::size_t>(i)];
      residual_[static_cast<std::size_t>(i)] = 0;
      if (residual_graphic(i + 1)) place(i + 1);
      residual_[static_cast<std::size_t>(i)] = saved;
      for (Vertex j : chosen) {
        g_.remove_edge(i, j);
        ++residual_[static_cast<std::size_t>(j)];
      }
      return;
    }
    const int avail = static_cast<int>(classes[c].size());
    for (int x = std::min(avail, need); x >= 0; --x) {
      take[c] = x;
      choose(i, classes, take, c + 1, need - x);
    }
    take[c] = 0;
  }

  int n_;
  std::vector<int> residual_;
  std::optional<std::size_t> limit_;
  Graph g_;
  std::map<std::string, Graph> found_;
};

std::mutex& count_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::vector<int>, std::size_t>& count_cache() {
  static std::map<std::vector<int>, std::size_t> cache;
  return cache;
}

}  // namespace

const std::vector<Graph>& enumerate_graphs(int n, int jobs) {
  if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
  check_cap(n, kMaxEnumerationVertices, "enumerate_graphs");
  static std::mutex mutex;
  static std::map<int, std::vector<Graph>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  std::vector<Graph> level;
  if (n == 0) {
    level.emplace_back(0);
  } else {
    const auto& parents = enumerate_graphs(n - 1, jobs);
    if (jobs <= 0) jobs = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
    level = extend_all(parents, n, jobs);
  }
  std::lock_guard lock(mutex);
  return cache.emplace(n, std::move(level)).first->second;
}

std::size_t count_classes_labelled(int n) {
  check_cap(n, 6, "count_classes_labelled");
  std::vector<Edge> slots;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  }
  std::set<std::string> forms;
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Graph g(n);
    for (std::size_t e = 0; e < slots.size(); ++e) {
      if (mask >> e & 1U) g.add_edge(slots[e].first, slots[e].second);
    }
    forms.insert(canonical_form(g));
  }
  return forms.size();
}

std::vector<Graph> realizations(const DegreeSequence& d, std::optional<std::size_t> limit) {
  check_cap(d.size(), kMaxRealizationVertices, "realizations");
  if (!is_graphic(d)) return {};
  if (limit && *limit == 0) return {};
  auto found = RealizationSearch(d, limit).run();
  std::vector<Graph> out;
  out.reserve(found.size());
  for (auto& [form, g] : found) out.push_back(std::move(g));
  return out;
}

std::size_t count_realizations(const DegreeSequence& d) {
  {
    std::lock_guard lock(count_mutex());
    if (auto it = count_cache().find(d.terms()); it != count_cache().end()) return it->second;
  }
  const std::size_t count = realizations(d).size();
  std::lock_guard lock(count_mutex());
  count_cache().emplace(d.terms(), count);
  return count;
}

bool is_unigraph_bruteforce(const Graph& g) {
  const auto deg = g.degrees();
  return count_realizations(DegreeSequence(deg)) == 1;
}

bool is_hereditary_unigraph_bruteforce(const Graph& g) {
  const int n = g.order();
  check_cap(n, kMaxHereditaryBruteforceVertices, "is_hereditary_unigraph_bruteforce");
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 1; mask < total; ++mask) {
    // Every graph on at most three vertices is a unigraph.
    if (std::popcount(mask) <= 3) continue;
    if (!is_unigraph_bruteforce(induced(g, VertexSet::from_mask(mask)))) return false;
  }
  return true;
}

bool is_forcibly_free(const DegreeSequence& d, std::span<const NamedPattern> patterns) {
  for (const Graph& h : realizations(d)) {
    if (find_forbidden(h, patterns)) return false;
  }
  return true;
}

}  // namespace unigraph
