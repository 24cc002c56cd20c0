#include "subsum/f_search.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>

namespace subsum {

void SearchBounds::validate() const {
  int finite = 0;
  for (const auto& b : {max_length, max_term, max_sum}) {
    if (b) {
      if (*b < 1) throw std::invalid_argument("SearchBounds: bounds must be >= 1");
      ++finite;
    }
  }
  if (finite < 2)
    throw std::invalid_argument("SearchBounds: at least two bounds must be finite");
}

int SearchBounds::effective_sum() const {
  if (max_sum) return *max_sum;
  return *max_length * *max_term;
}

int SearchBounds::effective_length() const {
  if (max_length) return *max_length;
  return *max_sum;  // terms are >= 1
}

int SearchBounds::effective_term() const {
  if (max_term) return *max_term;
  return *max_sum;
}

namespace {

// Nondecreasing tuples of length <= len, terms in [lo, term], sum <= sum.
std::uint64_t count_from(int lo, int len, int sum, int term) {
  if (len == 0) return 0;
  std::uint64_t total = 0;
  for (int t = lo; t <= term && t <= sum; ++t)
    total += 1 + count_from(t, len - 1, sum - t, term);
  return total;
}

struct Task {
  int a = 0, b = 0;  // first two terms; b == 0 means the singleton (a)
};

struct Collector {
  std::map<RangeSet, Witness> found;

  void offer(const std::vector<int>& seq, const std::vector<std::uint64_t>& counts) {
    Witness w;
    w.sequence = seq;
    for (int s = 0; s < static_cast<int>(counts.size()); ++s) {
      if (counts[s]) {
        w.profile[s] = counts[s];
        w.range.finites.insert(Int(counts[s]));
      }
    }
    auto it = found.find(w.range);
    if (it == found.end())
      found.emplace(std::move(w.range), std::move(w));
    else if (w.sequence < it->second.sequence)
      it->second = std::move(w);
  }
};

// Depth-first extension; counts is the dense subsum profile of seq.
void extend(std::vector<int>& seq, std::vector<std::uint64_t>& counts, int used_sum,
            const SearchBounds& b, Collector& col) {
  col.offer(seq, counts);
  if (static_cast<int>(seq.size()) >= b.effective_length()) return;
  int lo = seq.empty() ? 1 : seq.back();
  for (int t = lo; t <= b.effective_term() && used_sum + t <= b.effective_sum(); ++t) {
    std::vector<std::uint64_t> next = counts;
    for (int s = static_cast<int>(counts.size()) - 1 - t; s >= 0; --s)
      if (counts[s]) next[s + t] += counts[s];
    seq.push_back(t);
    extend(seq, next, used_sum + t, b, col);
    seq.pop_back();
  }
}

}  // namespace

std::uint64_t count_candidates(const SearchBounds& bounds) {
  bounds.validate();
  return count_from(1, bounds.effective_length(), bounds.effective_sum(),
                    bounds.effective_term());
}

std::map<RangeSet, Witness> search_ranges(const SearchBounds& bounds, int threads,
                                          std::uint64_t candidate_ceiling) {
  bounds.validate();
  std::uint64_t candidates = count_candidates(bounds);
  if (candidates > candidate_ceiling)
    throw ResourceLimitError("search_ranges: estimated " + std::to_string(candidates) +
                             " candidates exceed ceiling " + std::to_string(candidate_ceiling));

  if (threads <= 0) {
    const char* env = std::getenv("SUBSUM_THREADS");
    threads = env ? std::max(1, std::atoi(env)) : 1;
  }

  // Work partitioning by the first two terms; the merge below is ordered and
  // preference is total, so output is identical for every thread count.
  const int maxt = bounds.effective_term();
  const int maxs = bounds.effective_sum();
  std::vector<Task> tasks;
  for (int a = 1; a <= maxt && a <= maxs; ++a) {
    tasks.push_back({a, 0});
    if (static_cast<int>(bounds.effective_length()) < 2) continue;
    for (int b = a; b <= maxt && a + b <= maxs; ++b) tasks.push_back({a, b});
  }

  std::vector<Collector> results(tasks.size());
  std::atomic<size_t> next_task{0};
  auto worker = [&] {
    for (;;) {
      size_t i = next_task.fetch_add(1);
      if (i >= tasks.size()) break;
      const Task& task = tasks[i];
      std::vector<std::uint64_t> counts(maxs + 1, 0);
      counts[0] = 1;
      std::vector<int> seq;
      if (task.b == 0) {
        counts[task.a] = 1;
        seq = {task.a};
        results[i].offer(seq, counts);
      } else {
        counts[task.a] += 1;
        counts[task.b] += 1;
        counts[task.a + task.b] += 1;
        seq = {task.a, task.b};
        extend(seq, counts, task.a + task.b, bounds, results[i]);
      }
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::map<RangeSet, Witness> merged;
  // The empty tuple: range {1} with witness (1) found in the search already;
  // nothing special to seed.
  for (Collector& col : results) {
    for (auto& [range, w] : col.found) {
      auto it = merged.find(range);
      if (it == merged.end())
        merged.emplace(range, std::move(w));
      else if (w.sequence < it->second.sequence)
        it->second = std::move(w);
    }
  }
  return merged;
}

bool binomial_exclusion(const RangeSet& m) {
  if (m.symbolic()) throw std::invalid_argument("binomial_exclusion: symbolic flags unsupported");
  if (!m.contains(1)) throw std::invalid_argument("binomial_exclusion: 1 must be a member");
  std::set<Int> a = m.finites;
  a.erase(Int(1));
  if (a.empty()) return false;
  Int k = *a.begin();
  if (k < 4) return false;
  // C(k, floor(k/2))
  Int n = k, r = k / 2, binom = 1;
  for (Int i = 0; i < r; ++i) binom = binom * (n - i) / (i + 1);
  return *a.rbegin() <= binom - 1;
}

}  // namespace subsum
