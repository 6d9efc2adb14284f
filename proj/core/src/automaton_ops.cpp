#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "rfsa/automaton_ops.hpp"
#include "rfsa/errors.hpp"

namespace rfsa {

namespace {

StateSet step(const Automaton& a, const StateSet& from, Symbol s) {
  StateSet out;
  for (State q : from) out = set_union(out, a.successors(q, s));
  return out;
}

bool intersects(const StateSet& x, const StateSet& y) {
  auto i = x.begin();
  auto j = y.begin();
  while (i != x.end() && j != y.end()) {
    if (*i == *j) return true;
    if (*i < *j) ++i; else ++j;
  }
  return false;
}

} // namespace

StateSet run(const Automaton& a, const StateSet& from, const Word& w) {
  for (State q : from) {
    if (q >= a.num_states()) throw InputError("run: state id out of range");
  }
  if (!a.alphabet().contains(w)) throw InputError("run: symbol not in alphabet");
  StateSet current = from;
  std::sort(current.begin(), current.end());
  current.erase(std::unique(current.begin(), current.end()), current.end());
  for (Symbol s : w) {
    if (current.empty()) break;
    current = step(a, current, s);
  }
  return current;
}

bool accepts(const Automaton& a, const Word& w) {
  return intersects(run(a, a.initial(), w), a.final_states());
}

bool accepts_from(const Automaton& a, State q, const Word& w) {
  if (q >= a.num_states()) throw InputError("accepts_from: state id out of range");
  return intersects(run(a, StateSet{q}, w), a.final_states());
}

Automaton reverse_automaton(const Automaton& a) {
  Automaton r(a.alphabet(), a.num_states());
  for (State q : a.final_states()) r.add_initial(q);
  for (State q : a.initial()) r.add_final(q);
  for (State q = 0; q < a.num_states(); ++q) {
    for (Symbol s = 0; s < a.num_symbols(); ++s) {
      for (State t : a.successors(q, s)) r.add_transition(t, s, q);
    }
  }
  return r;
}

Determinized determinize(const Automaton& a) {
  std::map<StateSet, State> ids;
  std::vector<StateSet> subsets{a.initial()};
  ids.emplace(a.initial(), 0);
  std::vector<std::vector<State>> next;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    std::vector<State> row(a.num_symbols());
    for (Symbol s = 0; s < a.num_symbols(); ++s) {
      StateSet target = step(a, subsets[i], s);
      auto [it, inserted] = ids.emplace(target, static_cast<State>(subsets.size()));
      if (inserted) subsets.push_back(std::move(target));
      row[s] = it->second;
    }
    next.push_back(std::move(row));
  }

  Automaton dfa(a.alphabet(), subsets.size());
  dfa.add_initial(0);
  for (State i = 0; i < subsets.size(); ++i) {
    if (intersects(subsets[i], a.final_states())) dfa.add_final(i);
    for (Symbol s = 0; s < a.num_symbols(); ++s) dfa.add_transition(i, s, next[i][s]);
  }
  return {std::move(dfa), std::move(subsets)};
}

Automaton minimize(const Automaton& dfa) {
  if (!dfa.is_deterministic()) throw ContractError("minimize: input is not deterministic");
  const std::size_t k = dfa.num_symbols();

  // Reachable part, completed with a sink when some transition is missing.
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(dfa.num_states(), kUnset);
  std::vector<State> order{dfa.initial().front()};
  index[order[0]] = 0;
  bool needs_sink = false;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Symbol s = 0; s < k; ++s) {
      const auto& t = dfa.successors(order[i], s);
      if (t.empty()) { needs_sink = true; continue; }
      if (index[t.front()] == kUnset) {
        index[t.front()] = order.size();
        order.push_back(t.front());
      }
    }
  }
  const std::size_t n = order.size() + (needs_sink ? 1 : 0);
  const std::size_t sink = order.size();
  std::vector<std::size_t> next(n * k, sink);
  std::vector<std::size_t> cls(n, 0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Symbol s = 0; s < k; ++s) {
      const auto& t = dfa.successors(order[i], s);
      if (!t.empty()) next[i * k + s] = index[t.front()];
    }
    cls[i] = dfa.is_final(order[i]) ? 1 : 0;
  }

  // Moore refinement until the number of blocks stops growing.
  std::size_t num_classes = 0;
  for (;;) {
    std::map<std::vector<std::size_t>, std::size_t> signatures;
    std::vector<std::size_t> refined(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::size_t> sig{cls[i]};
      for (Symbol s = 0; s < k; ++s) sig.push_back(cls[next[i * k + s]]);
      refined[i] = signatures.emplace(std::move(sig), signatures.size()).first->second;
    }
    cls = std::move(refined);
    if (signatures.size() == num_classes) break;
    num_classes = signatures.size();
  }

  // Canonical numbering: breadth-first from the initial block.
  std::vector<std::size_t> rep(num_classes, kUnset);
  for (std::size_t i = n; i-- > 0;) rep[cls[i]] = i;
  std::vector<std::size_t> canon(num_classes, kUnset);
  std::vector<std::size_t> queue{cls[0]};
  canon[cls[0]] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::size_t r = rep[queue[head]];
    for (Symbol s = 0; s < k; ++s) {
      std::size_t c = cls[next[r * k + s]];
      if (canon[c] == kUnset) {
        canon[c] = queue.size();
        queue.push_back(c);
      }
    }
  }

  Automaton out(dfa.alphabet(), num_classes);
  out.add_initial(0);
  for (std::size_t c : queue) {
    std::size_t r = rep[c];
    auto from = static_cast<State>(canon[c]);
    if (r < order.size() && dfa.is_final(order[r])) out.add_final(from);
    for (Symbol s = 0; s < k; ++s) {
      out.add_transition(from, s, static_cast<State>(canon[cls[next[r * k + s]]]));
    }
  }
  return out;
}

Automaton trim(const Automaton& a) {
  const std::size_t n = a.num_states();
  const std::size_t k = a.num_symbols();
  auto closure = [&](const Automaton& aut, const StateSet& seeds) {
    std::vector<bool> seen(n, false);
    std::vector<State> stack(seeds.begin(), seeds.end());
    for (State q : seeds) seen[q] = true;
    while (!stack.empty()) {
      State q = stack.back();
      stack.pop_back();
      for (Symbol s = 0; s < k; ++s) {
        for (State t : aut.successors(q, s)) {
          if (!seen[t]) { seen[t] = true; stack.push_back(t); }
        }
      }
    }
    return seen;
  };
  auto forward = closure(a, a.initial());
  auto backward = closure(reverse_automaton(a), a.final_states());

  constexpr State kDropped = static_cast<State>(-1);
  std::vector<State> renumber(n, kDropped);
  State kept = 0;
  for (State q = 0; q < n; ++q) {
    if (forward[q] && backward[q]) renumber[q] = kept++;
  }
  Automaton out(a.alphabet(), kept);
  for (State q = 0; q < n; ++q) {
    if (renumber[q] == kDropped) continue;
    if (a.is_initial(q)) out.add_initial(renumber[q]);
    if (a.is_final(q)) out.add_final(renumber[q]);
    for (Symbol s = 0; s < k; ++s) {
      for (State t : a.successors(q, s)) {
        if (renumber[t] != kDropped) out.add_transition(renumber[q], s, renumber[t]);
      }
    }
  }
  return out;
}

std::optional<Word> shortest_difference_witness(const Automaton& a, const Automaton& b) {
  if (a.alphabet() != b.alphabet()) throw InputError("witness: alphabet mismatch");
  // Subset construction on the fly over the product, so that exploration
  // stops at the first difference instead of materializing both DFAs.
  using Pair = std::pair<StateSet, StateSet>;
  struct Node {
    std::size_t parent;
    Symbol via;
  };
  std::map<Pair, std::size_t> seen;
  std::vector<const Pair*> pairs;
  std::vector<Node> nodes;
  auto visit = [&](Pair p, std::size_t parent, Symbol via) {
    auto [it, inserted] = seen.emplace(std::move(p), nodes.size());
    if (!inserted) return;
    pairs.push_back(&it->first);
    nodes.push_back({parent, via});
  };
  visit({a.initial(), b.initial()}, 0, 0);
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    const auto& [x, y] = *pairs[head];
    if (intersects(x, a.final_states()) != intersects(y, b.final_states())) {
      Word w;
      for (std::size_t i = head; i != 0; i = nodes[i].parent) w.push_back(nodes[i].via);
      std::reverse(w.begin(), w.end());
      return w;
    }
    for (Symbol s = 0; s < a.num_symbols(); ++s) visit({step(a, x, s), step(b, y, s)}, head, s);
  }
  return std::nullopt;
}

namespace {

// Iterated colour refinement: initial/final flags, then the multiset of
// (symbol, successor colour) and (symbol, predecessor colour) pairs.
std::vector<std::size_t> refine_colours(const Automaton& a, const Automaton& rev,
                                        std::map<std::vector<std::size_t>, std::size_t>& palette,
                                        std::size_t rounds) {
  const std::size_t n = a.num_states();
  std::vector<std::size_t> colour(n);
  for (State q = 0; q < n; ++q) {
    std::vector<std::size_t> sig{a.is_initial(q) ? 1u : 0u, a.is_final(q) ? 1u : 0u};
    colour[q] = palette.emplace(std::move(sig), palette.size()).first->second;
  }
  for (std::size_t r = 0; r < rounds; ++r) {
    std::vector<std::size_t> next(n);
    for (State q = 0; q < n; ++q) {
      std::vector<std::size_t> sig{colour[q], static_cast<std::size_t>(-1)};
      for (Symbol s = 0; s < a.num_symbols(); ++s) {
        std::vector<std::size_t> out, in;
        for (State t : a.successors(q, s)) out.push_back(colour[t]);
        for (State t : rev.successors(q, s)) in.push_back(colour[t]);
        std::sort(out.begin(), out.end());
        std::sort(in.begin(), in.end());
        sig.push_back(out.size());
        sig.insert(sig.end(), out.begin(), out.end());
        sig.push_back(in.size());
        sig.insert(sig.end(), in.begin(), in.end());
      }
      next[q] = palette.emplace(std::move(sig), palette.size()).first->second;
    }
    colour = std::move(next);
  }
  return colour;
}

} // namespace

bool isomorphic(const Automaton& a, const Automaton& b) {
  const std::size_t n = a.num_states();
  if (a.alphabet() != b.alphabet() || n != b.num_states() ||
      a.initial().size() != b.initial().size() ||
      a.final_states().size() != b.final_states().size() ||
      a.num_transitions() != b.num_transitions()) {
    return false;
  }
  // A shared palette makes colours comparable across the two automata.
  std::map<std::vector<std::size_t>, std::size_t> palette;
  const auto ca = refine_colours(a, reverse_automaton(a), palette, n);
  const auto cb = refine_colours(b, reverse_automaton(b), palette, n);
  {
    auto sa = ca, sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }

  constexpr State kFree = static_cast<State>(-1);
  std::vector<State> map(n, kFree);
  std::vector<bool> used(n, false);
  const std::size_t k = a.num_symbols();

  auto compatible = [&](State u, State v) {
    for (State w = 0; w < n; ++w) {
      if (map[w] == kFree) continue;
      for (Symbol s = 0; s < k; ++s) {
        if (contains_sorted(a.successors(u, s), w) != contains_sorted(b.successors(v, s), map[w]) ||
            contains_sorted(a.successors(w, s), u) != contains_sorted(b.successors(map[w], s), v)) {
          return false;
        }
      }
    }
    for (Symbol s = 0; s < k; ++s) {
      if (contains_sorted(a.successors(u, s), u) != contains_sorted(b.successors(v, s), v)) {
        return false;
      }
    }
    return true;
  };

  auto search = [&](auto&& self, State u) -> bool {
    if (u == n) return true;
    for (State v = 0; v < n; ++v) {
      if (used[v] || ca[u] != cb[v] || !compatible(u, v)) continue;
      map[u] = v;
      used[v] = true;
      if (self(self, u + 1)) return true;
      map[u] = kFree;
      used[v] = false;
    }
    return false;
  };
  return search(search, 0);
}

std::optional<Word> shortest_path(const Automaton& dfa, State from, State target) {
  if (from >= dfa.num_states() || target >= dfa.num_states()) {
    throw InputError("shortest_path: state id out of range");
  }
  constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent(dfa.num_states(), kUnseen);
  std::vector<Symbol> via(dfa.num_states(), 0);
  std::deque<State> queue{from};
  parent[from] = from;
  while (!queue.empty()) {
    State q = queue.front();
    queue.pop_front();
    if (q == target) {
      Word w;
      for (State c = q; c != from; c = static_cast<State>(parent[c])) w.push_back(via[c]);
      std::reverse(w.begin(), w.end());
      return w;
    }
    for (Symbol s = 0; s < dfa.num_symbols(); ++s) {
      for (State t : dfa.successors(q, s)) {
        if (parent[t] == kUnseen) {
          parent[t] = q;
          via[t] = s;
          queue.push_back(t);
        }
      }
    }
  }
  return std::nullopt;
}

} // namespace rfsa
