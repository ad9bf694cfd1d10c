#include "coxsds/sds.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <numeric>
#include <thread>

#include "coxsds/error.hpp"

namespace coxsds {

std::string format_state(State x, int n) {
  std::string out = "(";
  for (int v = 0; v < n; ++v) {
    if (v > 0) out += ',';
    out += (x >> v & 1) ? '1' : '0';
  }
  return out + ")";
}

State parse_state(std::string_view text, int n) {
  State x = 0;
  int count = 0;
  for (char c : text) {
    if (c == '0' || c == '1') {
      if (count >= n) throw InvalidInput("state has more than n bits");
      if (c == '1') x |= State{1} << count;
      ++count;
    } else if (c != '(' && c != ')' && c != ',' &&
               !std::isspace(static_cast<unsigned char>(c))) {
      throw InvalidInput("bad state '" + std::string(text) + "'");
    }
  }
  if (count != n) throw InvalidInput("state must have exactly n bits");
  return x;
}

State state_from_bits(std::initializer_list<int> bits) {
  State x = 0;
  int v = 0;
  for (int b : bits) {
    if (b) x |= State{1} << v;
    ++v;
  }
  return x;
}

LocalRule LocalRule::eca(int k) {
  if (k < 0 || k > 255) throw InvalidInput("ECA rule must be in 0..255");
  LocalRule r;
  r.arity_ = 3;
  r.table_.resize(8);
  for (int j = 0; j < 8; ++j) r.table_[j] = static_cast<std::uint8_t>(k >> j & 1);
  r.provenance_ = "eca:" + std::to_string(k);
  return r;
}

LocalRule LocalRule::symmetric(SymmetricFunction f, int arity) {
  if (arity < 1 || arity > 24) throw InvalidInput("arity must be in 1..24");
  LocalRule r;
  r.arity_ = arity;
  r.table_.resize(std::size_t{1} << arity);
  for (std::size_t idx = 0; idx < r.table_.size(); ++idx) {
    const int ones = std::popcount(idx);
    bool out = false;
    switch (f) {
      case SymmetricFunction::kNor: out = ones == 0; break;
      case SymmetricFunction::kNand: out = ones < arity; break;
      case SymmetricFunction::kOr: out = ones > 0; break;
      case SymmetricFunction::kAnd: out = ones == arity; break;
      case SymmetricFunction::kParity: out = ones % 2 == 1; break;
      case SymmetricFunction::kMajority: out = 2 * ones > arity; break;
    }
    r.table_[idx] = out ? 1 : 0;
  }
  RuleName name;
  name.function = f;
  r.provenance_ = name.to_string();
  return r;
}

LocalRule LocalRule::from_table(std::vector<std::uint8_t> table,
                                std::string provenance) {
  const auto size = table.size();
  if (size == 0 || (size & (size - 1)) != 0) {
    throw InvalidInput("truth table length must be a power of two");
  }
  LocalRule r;
  r.arity_ = std::countr_zero(size);
  for (auto& b : table) b = b ? 1 : 0;
  r.table_ = std::move(table);
  r.provenance_ = std::move(provenance);
  return r;
}

namespace {

constexpr std::pair<std::string_view, SymmetricFunction> kSymmetricNames[] = {
    {"nor", SymmetricFunction::kNor},       {"nand", SymmetricFunction::kNand},
    {"or", SymmetricFunction::kOr},         {"and", SymmetricFunction::kAnd},
    {"parity", SymmetricFunction::kParity}, {"majority", SymmetricFunction::kMajority},
};

}  // namespace

RuleName RuleName::parse(std::string_view text) {
  RuleName r;
  if (text.starts_with("eca:")) {
    auto digits = text.substr(4);
    int k = -1;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || k < 0 ||
        k > 255) {
      throw InvalidInput("bad ECA rule '" + std::string(text) + "'");
    }
    r.is_eca = true;
    r.eca_code = k;
    return r;
  }
  for (auto [name, f] : kSymmetricNames) {
    if (name == text) {
      r.function = f;
      return r;
    }
  }
  throw InvalidInput("unknown rule '" + std::string(text) + "'");
}

LocalRule RuleName::instantiate(int arity) const {
  if (is_eca) {
    if (arity != 3) {
      throw InvalidInput("ECA rules need vertices of degree 2");
    }
    return LocalRule::eca(eca_code);
  }
  return LocalRule::symmetric(function, arity);
}

std::string RuleName::to_string() const {
  if (is_eca) return "eca:" + std::to_string(eca_code);
  for (auto [name, f] : kSymmetricNames) {
    if (f == function) return std::string(name);
  }
  return "?";
}

SdsSpec::SdsSpec(Graph graph, std::vector<LocalRule> rules)
    : graph_(std::move(graph)), rules_(std::move(rules)) {
  const int n = graph_.vertex_count();
  if (n > 32) throw InvalidInput("SDS supports at most 32 vertices");
  if (static_cast<int>(rules_.size()) != n) {
    throw InvalidInput("need exactly one rule per vertex");
  }
  const bool ring = graph_.is_standard_circle();
  neighborhoods_.resize(n);
  for (int v = 0; v < n; ++v) {
    if (ring) {
      neighborhoods_[v] = {(v + n - 1) % n, v, (v + 1) % n};
    } else {
      auto& nb = neighborhoods_[v];
      nb = graph_.neighbors(v);
      nb.insert(std::lower_bound(nb.begin(), nb.end(), v), v);
    }
    if (rules_[v].arity() != static_cast<int>(neighborhoods_[v].size())) {
      throw InvalidInput("rule arity at vertex " + std::to_string(v + 1) +
                         " must equal 1 + degree");
    }
  }
}

SdsSpec SdsSpec::eca(int n, int k) {
  return SdsSpec(Graph::circle(n), std::vector<LocalRule>(n, LocalRule::eca(k)));
}

SdsSpec SdsSpec::uniform(Graph graph, const RuleName& rule) {
  std::vector<LocalRule> rules;
  for (int v = 0; v < graph.vertex_count(); ++v) {
    rules.push_back(rule.instantiate(graph.degree(v) + 1));
  }
  return SdsSpec(std::move(graph), std::move(rules));
}

State SdsSpec::apply_local(int v, State x) const {
  unsigned index = 0;
  for (int u : neighborhoods_[v]) index = index << 1 | (x >> u & 1);
  const State bit = State{1} << v;
  return rules_[v].output(index) ? (x | bit) : (x & ~bit);
}

State SdsSpec::sds_map(const Word& w, State x) const {
  for (int v : w) {
    if (v < 0 || v >= size()) throw InvalidInput("update letter out of range");
    x = apply_local(v, x);
  }
  return x;
}

namespace {

void check_n(int n, int cap, const char* name) {
  if (n > cap) throw CapExceeded(name, cap);
}

std::vector<State> marked(const std::vector<char>& flags) {
  std::vector<State> out;
  for (std::size_t x = 0; x < flags.size(); ++x) {
    if (flags[x]) out.push_back(static_cast<State>(x));
  }
  return out;
}

std::vector<char> image_of(const std::vector<State>& map) {
  std::vector<char> img(map.size(), 0);
  for (State y : map) img[y] = 1;
  return img;
}

}  // namespace

PhaseSpace phase_space(const SdsSpec& spec, const Word& w,
                       const SdsCaps& caps) {
  check_n(spec.size(), caps.max_phase_space_n, "max_phase_space_n");
  PhaseSpace ps;
  ps.n = spec.size();
  const std::size_t states = std::size_t{1} << ps.n;
  ps.successor.resize(states);
  for (std::size_t x = 0; x < states; ++x) {
    ps.successor[x] = static_cast<State>(x);
  }
  for (int v : w) {
    if (v < 0 || v >= spec.size()) {
      throw InvalidInput("update letter out of range");
    }
    for (auto& y : ps.successor) y = spec.apply_local(v, y);
  }
  return ps;
}

std::vector<State> periodic_points(const PhaseSpace& ps) {
  std::vector<State> power = ps.successor;
  auto current = image_of(power);
  for (;;) {
    std::vector<State> squared(power.size());
    for (std::size_t x = 0; x < power.size(); ++x) squared[x] = power[power[x]];
    auto next = image_of(squared);
    if (next == current) return marked(current);
    current = std::move(next);
    power = std::move(squared);
  }
}

std::vector<State> periodic_points_by_cycles(const PhaseSpace& ps) {
  const std::size_t states = ps.successor.size();
  // 0 unvisited, 1 on the current walk, 2 finished.
  std::vector<char> color(states, 0), periodic(states, 0);
  std::vector<State> walk;
  for (std::size_t start = 0; start < states; ++start) {
    if (color[start]) continue;
    walk.clear();
    State x = static_cast<State>(start);
    while (color[x] == 0) {
      color[x] = 1;
      walk.push_back(x);
      x = ps.successor[x];
    }
    if (color[x] == 1) {
      State y = x;
      do {
        periodic[y] = 1;
        y = ps.successor[y];
      } while (y != x);
    }
    for (State s : walk) color[s] = 2;
  }
  return marked(periodic);
}

std::vector<State> periodic_points(const SdsSpec& spec, const Word& w,
                                   const SdsCaps& caps) {
  return periodic_points(phase_space(spec, w, caps));
}

std::vector<std::size_t> cycle_lengths(const PhaseSpace& ps) {
  std::vector<std::size_t> out;
  std::vector<char> seen(ps.successor.size(), 0);
  for (State x : periodic_points(ps)) {
    if (seen[x]) continue;
    std::size_t len = 0;
    State y = x;
    do {
      seen[y] = 1;
      y = ps.successor[y];
      ++len;
    } while (y != x);
    out.push_back(len);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool cycle_equivalent(const PhaseSpace& a, const PhaseSpace& b) {
  return cycle_lengths(a) == cycle_lengths(b);
}

bool is_pi_independent(const SdsSpec& spec, const SdsCaps& caps) {
  const int n = spec.size();
  check_n(n, caps.max_pi_independence_n, "max_pi_independence_n");
  const std::size_t states = std::size_t{1} << n;
  std::vector<std::vector<State>> local(n, std::vector<State>(states));
  for (int v = 0; v < n; ++v)
    for (std::size_t x = 0; x < states; ++x)
      local[v][x] = spec.apply_local(v, static_cast<State>(x));

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<State> reference;
  PhaseSpace ps;
  ps.n = n;
  ps.successor.resize(states);
  do {
    for (std::size_t x = 0; x < states; ++x) {
      State y = static_cast<State>(x);
      for (int v : order) y = local[v][y];
      ps.successor[x] = y;
    }
    auto per = periodic_points(ps);
    if (reference.empty()) {
      reference = std::move(per);
    } else if (per != reference) {
      return false;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return true;
}

StateAutomaton state_automaton(const SdsSpec& spec, const SdsCaps& caps) {
  check_n(spec.size(), caps.max_automaton_n, "max_automaton_n");
  StateAutomaton aut;
  aut.n = spec.size();
  const std::size_t states = std::size_t{1} << aut.n;
  aut.successor.assign(aut.n, std::vector<State>(states));
  for (int v = 0; v < aut.n; ++v)
    for (std::size_t x = 0; x < states; ++x)
      aut.successor[v][x] = spec.apply_local(v, static_cast<State>(x));
  return aut;
}

PhaseSpace phase_space_from_automaton(const StateAutomaton& aut,
                                      const Word& w) {
  PhaseSpace ps;
  ps.n = aut.n;
  const std::size_t states = std::size_t{1} << aut.n;
  ps.successor.resize(states);
  for (std::size_t x = 0; x < states; ++x) {
    State y = static_cast<State>(x);
    for (int v : w) {
      if (v < 0 || v >= aut.n) throw InvalidInput("label out of range");
      y = aut.successor[v][y];
    }
    ps.successor[x] = y;
  }
  return ps;
}

EcaClassification classify_eca(int n, int k, const SdsCaps& caps) {
  const SdsSpec spec = SdsSpec::eca(n, k);
  EcaClassification out;
  out.k = k;
  out.n = n;
  out.pi_independent = is_pi_independent(spec, caps);
  std::vector<int> identity(n);
  std::iota(identity.begin(), identity.end(), 0);
  out.per_size = periodic_points(spec, Word(identity), caps).size();
  return out;
}

std::vector<EcaClassification> classify_eca_range(int n, int k_first,
                                                  int k_last, int jobs,
                                                  const SdsCaps& caps) {
  if (k_first < 0 || k_last > 255 || k_first > k_last) {
    throw InvalidInput("rule range must lie in 0..255");
  }
  std::vector<EcaClassification> out(k_last - k_first + 1);
  std::atomic<int> next{k_first};
  auto worker = [&] {
    for (int k = next++; k <= k_last; k = next++) {
      out[k - k_first] = classify_eca(n, k, caps);
    }
  };
  jobs = std::max(1, jobs);
  if (jobs == 1) {
    worker();
    return out;
  }
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace coxsds
