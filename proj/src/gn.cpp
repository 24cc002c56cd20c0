#include "subsum/gn.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <numeric>

#include "subsum/tail_engine.hpp"

namespace subsum {

namespace {

constexpr int kDigits[] = {0, 2, 3, 5};

bool valid_digit(int d) { return d == 0 || d == 2 || d == 3 || d == 5; }

const Rational kTotal = Rational(5) / 3;  // total sum of (3,2;1/4)

/// Reachable remainder automaton: states are the rationals rho in [0,5/3]
/// visited from the start value under rho -> 4*rho - d.
struct Automaton {
  std::vector<Rational> states;
  std::map<Rational, int> index;
  std::vector<std::vector<std::pair<int, int>>> succ;  // (digit, target index)
  int start = -1;
};

Automaton build(const Rational& x, int max_states) {
  Automaton a;
  a.start = 0;
  a.states.push_back(x);
  a.index[x] = 0;
  a.succ.emplace_back();
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int i = queue.front();
    queue.pop_front();
    Rational base = a.states[i] * 4;
    for (int d : kDigits) {
      Rational t = base - d;
      if (t < 0 || t > kTotal) continue;
      auto it = a.index.find(t);
      int j;
      if (it == a.index.end()) {
        if (static_cast<int>(a.states.size()) >= max_states)
          throw ResourceLimitError("gn automaton exceeds state limit");
        j = static_cast<int>(a.states.size());
        a.states.push_back(t);
        a.index[t] = j;
        a.succ.emplace_back();
        queue.push_back(j);
      } else {
        j = it->second;
      }
      a.succ[i].emplace_back(d, j);
    }
  }
  return a;
}

/// Removes states with no outgoing transition until a fixed point. Returns
/// the surviving-state mask.
std::vector<bool> prune(Automaton& a) {
  std::vector<bool> alive(a.states.size(), true);
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < a.states.size(); ++i) {
      if (!alive[i]) continue;
      bool any = false;
      for (auto& [d, j] : a.succ[i])
        if (alive[j]) any = true;
      if (!any) {
        alive[i] = false;
        changed = true;
      }
    }
  }
  for (size_t i = 0; i < a.succ.size(); ++i) {
    auto& edges = a.succ[i];
    if (!alive[i]) {
      edges.clear();
      continue;
    }
    edges.erase(std::remove_if(edges.begin(), edges.end(),
                               [&](const std::pair<int, int>& e) { return !alive[e.second]; }),
                edges.end());
  }
  return alive;
}

/// Tarjan strongly connected components; comp[i] = component id.
struct Sccs {
  std::vector<int> comp;
  std::vector<bool> cyclic;  // component contains a cycle
};

Sccs sccs(const Automaton& a, const std::vector<bool>& alive) {
  int n = static_cast<int>(a.states.size());
  Sccs out;
  out.comp.assign(n, -1);
  std::vector<int> low(n), num(n, -1), stack;
  std::vector<bool> on_stack(n, false);
  int counter = 0, comps = 0;

  // Iterative Tarjan to avoid deep recursion on long chains.
  struct Frame {
    int v;
    size_t edge;
  };
  for (int root = 0; root < n; ++root) {
    if (!alive[root] || num[root] != -1) continue;
    std::vector<Frame> call{{root, 0}};
    num[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.edge < a.succ[f.v].size()) {
        int w = a.succ[f.v][f.edge++].second;
        if (num[w] == -1) {
          num[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], num[w]);
        }
      } else {
        if (low[f.v] == num[f.v]) {
          int id = comps++;
          int w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            out.comp[w] = id;
          } while (w != f.v);
        }
        int v = f.v;
        call.pop_back();
        if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      }
    }
  }
  out.cyclic.assign(comps, false);
  std::vector<int> size(comps, 0);
  for (int i = 0; i < n; ++i)
    if (alive[i]) ++size[out.comp[i]];
  for (int i = 0; i < n; ++i) {
    if (!alive[i]) continue;
    for (auto& [d, j] : a.succ[i])
      if (out.comp[j] == out.comp[i] && (size[out.comp[i]] > 1 || j == i))
        out.cyclic[out.comp[i]] = true;
  }
  return out;
}

struct Census {
  CardinalValue count;
  Automaton automaton;
  std::vector<bool> alive;
};

Census census(const Rational& x, int max_states) {
  Census out;
  if (x < 0 || x > kTotal) {
    out.count = CardinalValue::finite(0);
    return out;
  }
  out.automaton = build(x, max_states);
  out.alive = prune(out.automaton);
  const Automaton& a = out.automaton;
  if (!out.alive[a.start]) {
    out.count = CardinalValue::finite(0);
    return out;
  }
  Sccs s = sccs(a, out.alive);

  bool continuum = false, omega = false;
  for (size_t i = 0; i < a.states.size(); ++i) {
    if (!out.alive[i] || !s.cyclic[s.comp[i]]) continue;
    int inside = 0;
    for (auto& [d, j] : a.succ[i])
      if (s.comp[j] == s.comp[i]) ++inside;
    if (inside >= 2) continuum = true;
    if (a.succ[i].size() >= 2) omega = true;
  }
  if (continuum) {
    out.count = CardinalValue::continuum();
    return out;
  }
  if (omega) {
    out.count = CardinalValue::omega();
    return out;
  }

  // Every cyclic state is now deterministic forever; the branching region is
  // acyclic, so memoized path counting terminates.
  std::vector<Int> memo(a.states.size(), -1);
  std::vector<std::pair<int, size_t>> dfs{{a.start, 0}};
  while (!dfs.empty()) {
    auto& [v, e] = dfs.back();
    if (e == 0 && s.cyclic[s.comp[v]]) {
      memo[v] = 1;
      dfs.pop_back();
      continue;
    }
    if (e == 0 && memo[v] >= 0) {
      dfs.pop_back();
      continue;
    }
    if (e < a.succ[v].size()) {
      int w = a.succ[v][e].second;
      ++e;
      if (memo[w] < 0 && !s.cyclic[s.comp[w]])
        dfs.push_back({w, 0});
    } else {
      Int total = 0;
      for (auto& [d, j] : a.succ[v]) total += s.cyclic[s.comp[j]] ? Int(1) : memo[j];
      memo[v] = total;
      dfs.pop_back();
    }
  }
  out.count = CardinalValue::finite(memo[a.start]);
  return out;
}

}  // namespace

void DigitString::validate() const {
  for (int d : preperiod)
    if (!valid_digit(d)) throw std::invalid_argument("digit outside {0,2,3,5}");
  for (int d : period)
    if (!valid_digit(d)) throw std::invalid_argument("digit outside {0,2,3,5}");
}

Rational DigitString::value() const {
  validate();
  Rational v = 0;
  Rational p = 1;
  for (int d : preperiod) {
    p /= 4;
    v += d * p;
  }
  if (!period.empty()) {
    Rational per = 0;
    Int scale = 1;
    for (int d : period) {
      scale *= 4;
      per = per * 4 + d;
    }
    v += p * per / Rational(scale - 1);
  }
  return v;
}

int DigitString::digit_at(int n) const {
  if (n < 1) throw std::invalid_argument("digit index is 1-based");
  int l = static_cast<int>(preperiod.size());
  if (n <= l) return preperiod[n - 1];
  if (period.empty()) return 0;
  return period[(n - 1 - l) % period.size()];
}

std::string DigitString::str() const {
  std::string s;
  for (int d : preperiod) s += static_cast<char>('0' + d);
  s += ":(";
  for (int d : period) s += static_cast<char>('0' + d);
  s += ")";
  return s;
}

DigitString DigitString::parse(const std::string& text) {
  DigitString out;
  size_t colon = text.find(':');
  std::string pre = colon == std::string::npos ? text : text.substr(0, colon);
  std::string per;
  if (colon != std::string::npos) {
    per = text.substr(colon + 1);
    if (per.size() < 2 || per.front() != '(' || per.back() != ')')
      throw std::invalid_argument("period must be parenthesized: " + text);
    per = per.substr(1, per.size() - 2);
  }
  for (char c : pre) {
    if (c < '0' || c > '9') throw std::invalid_argument("bad digit in " + text);
    out.preperiod.push_back(c - '0');
  }
  for (char c : per) {
    if (c < '0' || c > '9') throw std::invalid_argument("bad digit in " + text);
    out.period.push_back(c - '0');
  }
  out.validate();
  return out;
}

CardinalValue gn_count(const Rational& x, int max_states) {
  return census(x, max_states).count;
}

std::vector<DigitString> gn_representations(const Rational& x, int max_list,
                                            int max_states) {
  Census c = census(x, max_states);
  std::vector<DigitString> out;
  if (!c.count.is_finite())
    throw ResourceLimitError("gn_representations: infinitely many digit strings");
  if (c.count.value() == 0) return out;
  if (c.count.value() > max_list)
    throw ResourceLimitError("gn_representations: count exceeds listing cap");
  const Automaton& a = c.automaton;

  // Depth-first over branch choices; once the remaining walk is forced, the
  // deterministic chain closes into a cycle that becomes the period.
  std::vector<bool> branch_reachable(a.states.size(), false);
  {
    // A state is branch-reachable if some state with >= 2 successors is
    // reachable from it; elsewhere the walk is deterministic forever.
    bool changed = true;
    for (size_t i = 0; i < a.states.size(); ++i)
      if (c.alive[i] && a.succ[i].size() >= 2) branch_reachable[i] = true;
    while (changed) {
      changed = false;
      for (size_t i = 0; i < a.states.size(); ++i) {
        if (!c.alive[i] || branch_reachable[i]) continue;
        for (auto& [d, j] : a.succ[i])
          if (branch_reachable[j]) {
            branch_reachable[i] = true;
            changed = true;
          }
      }
    }
  }

  std::vector<int> digits;
  auto emit = [&](int state) {
    DigitString s;
    s.preperiod = digits;
    std::vector<int> seen(a.states.size(), -1);
    int v = state;
    std::vector<int> chain_digits;
    std::vector<int> chain_states;
    while (seen[v] < 0) {
      seen[v] = static_cast<int>(chain_states.size());
      chain_states.push_back(v);
      auto& [d, j] = a.succ[v][0];
      chain_digits.push_back(d);
      v = j;
    }
    int loop_start = seen[v];
    s.preperiod.insert(s.preperiod.end(), chain_digits.begin(),
                       chain_digits.begin() + loop_start);
    s.period.assign(chain_digits.begin() + loop_start, chain_digits.end());
    if (std::all_of(s.period.begin(), s.period.end(), [](int d) { return d == 0; }))
      s.period.clear();
    out.push_back(std::move(s));
  };

  std::vector<std::pair<int, size_t>> dfs{{a.start, 0}};
  while (!dfs.empty()) {
    auto& [v, e] = dfs.back();
    if (e == 0 && !branch_reachable[v]) {
      emit(v);
      dfs.pop_back();
      if (!dfs.empty() && !digits.empty()) digits.pop_back();
      continue;
    }
    if (e < a.succ[v].size()) {
      auto [d, j] = a.succ[v][e];
      ++e;
      digits.push_back(d);
      dfs.push_back({j, 0});
    } else {
      dfs.pop_back();
      if (!dfs.empty() && !digits.empty()) digits.pop_back();
    }
  }
  return out;
}

CardinalValue gn_prefix_count(const SequenceSpec& spec, const Rational& x,
                              int max_states) {
  if (spec.tail != SequenceSpec::TailKind::GN)
    throw std::invalid_argument("gn_prefix_count: GN-tail specs only");
  spec.validate();
  CardinalValue total = CardinalValue::finite(0);
  for (const Rational& s : prefix_shifts(spec))
    total = total + gn_count((x - s) / spec.tail_param, max_states);
  return total;
}

PatternVerdict pattern_check(const DigitString& a, const DigitString& b) {
  a.validate();
  b.validate();
  PatternVerdict v;
  v.equal_values = a.value() == b.value();

  int la = static_cast<int>(a.preperiod.size());
  int lb = static_cast<int>(b.preperiod.size());
  int ta = std::max<int>(1, static_cast<int>(a.period.size()));
  int tb = std::max<int>(1, static_cast<int>(b.period.size()));
  int pre = std::max(la, lb);
  int t = static_cast<int>(std::lcm(ta, tb));

  enum Phase { Equal, HighLow, LowHigh };  // a-b = 3 block vs b-a = 3 block
  Phase phase = Equal;
  // (offset within combined period, phase) recurring without failure past the
  // preperiod proves the scan succeeds forever.
  std::vector<std::array<bool, 3>> seen(t, {false, false, false});
  for (int i = 1;; ++i) {
    if (i > pre) {
      int off = (i - pre - 1) % t;
      if (seen[off][phase]) {
        v.matches_pattern = phase != Equal;
        return v;
      }
      seen[off][phase] = true;
    }
    int da = a.digit_at(i), db = b.digit_at(i);
    switch (phase) {
      case Equal:
        if (da == db) break;
        if (da == 2 && db == 3) {
          v.markers.push_back(i);
          phase = HighLow;
          break;
        }
        return v;
      case HighLow:
        if ((da == 3 && db == 0) || (da == 5 && db == 2)) break;
        if (da == 5 && db == 0) {
          v.markers.push_back(i);
          phase = LowHigh;
          break;
        }
        return v;
      case LowHigh:
        if ((da == 0 && db == 3) || (da == 2 && db == 5)) break;
        if (da == 0 && db == 5) {
          v.markers.push_back(i);
          phase = HighLow;
          break;
        }
        return v;
    }
  }
}

}  // namespace subsum
