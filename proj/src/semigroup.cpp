#include "sgag/semigroup.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>
#include <queue>
#include <sstream>

#include "sgag/errors.hpp"

namespace sgag {

namespace {

// Keeps dense tables (size ~ conductor) within reasonable memory.
constexpr Value kMaxConductor = 4'000'000;

// Apéry set of ⟨gens⟩ w.r.t. m: shortest paths on residues mod m.
std::vector<Value> apery_by_dijkstra(Value m, std::span<const Value> gens) {
  constexpr Value inf = std::numeric_limits<Value>::max();
  std::vector<Value> dist(static_cast<std::size_t>(m), inf);
  using Item = std::pair<Value, Value>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[0] = 0;
  queue.emplace(0, 0);
  while (!queue.empty()) {
    auto [d, r] = queue.top();
    queue.pop();
    if (d != dist[r]) continue;
    for (Value g : gens) {
      const Value nd = d + g;
      const Value nr = (r + g) % m;
      if (nd < dist[nr]) {
        dist[nr] = nd;
        queue.emplace(nd, nr);
      }
    }
  }
  return dist;
}

}  // namespace

NumericalSemigroup NumericalSemigroup::from_generators(std::span<const Value> gens) {
  if (gens.empty()) throw DomainError("empty generator list");
  Value g = 0;
  for (Value a : gens) {
    if (a <= 0) {
      throw NotNumericalSemigroup("generators must be positive, got " + std::to_string(a));
    }
    g = std::gcd(g, a);
  }
  if (g != 1) {
    throw NotNumericalSemigroup("not a numerical semigroup of finite genus (gcd of generators is " +
                                std::to_string(g) + ")");
  }
  const Value m = *std::min_element(gens.begin(), gens.end());
  if (m > kMaxConductor) throw DomainError("multiplicity too large");
  const auto ap = apery_by_dijkstra(m, gens);
  const Value conductor = *std::max_element(ap.begin(), ap.end()) - m + 1;
  if (conductor > kMaxConductor) throw DomainError("conductor too large");

  std::vector<Value> below;
  for (Value x = 0; x < conductor; ++x) {
    if (x >= ap[x % m]) below.push_back(x);
  }
  return NumericalSemigroup(CofiniteSet(std::move(below), conductor));
}

NumericalSemigroup NumericalSemigroup::from_elements(const CofiniteSet& elements) {
  if (!elements.is_cofinite()) throw NotNumericalSemigroup("set is not cofinite");
  if (!elements.contains(0) || elements.min() != 0) {
    throw NotNumericalSemigroup("set must contain 0 and no negative integers");
  }
  const Value c = *elements.all_from();
  if (c > kMaxConductor) throw DomainError("conductor too large");
  const auto& below = elements.below();
  for (std::size_t i = 0; i < below.size(); ++i) {
    for (std::size_t j = i; j < below.size(); ++j) {
      const Value s = below[i] + below[j];
      if (s >= c) break;
      if (!elements.contains(s)) {
        throw NotNumericalSemigroup("set is not closed under addition: " +
                                    std::to_string(below[i]) + " + " + std::to_string(below[j]));
      }
    }
  }
  return NumericalSemigroup(elements);
}

NumericalSemigroup::NumericalSemigroup(CofiniteSet elements) : elements_(std::move(elements)) {
  conductor_ = *elements_.all_from();
  for (Value x = 1; x < conductor_; ++x) {
    if (!elements_.contains(x)) gaps_.push_back(x);
  }

  Value m = conductor_;  // smallest nonzero element
  for (Value x : elements_.below()) {
    if (x > 0) {
      m = x;
      break;
    }
  }
  if (conductor_ == 0) m = 1;

  apery_.assign(static_cast<std::size_t>(m), -1);
  Value found = 0;
  for (Value x = 0; found < m; ++x) {
    if (elements_.contains(x) && apery_[x % m] < 0) {
      apery_[x % m] = x;
      ++found;
    }
  }

  // w ∈ Ap∖{0} is decomposable iff w - w' ∈ H for another nonzero w' ∈ Ap.
  generators_.push_back(m);
  for (Value w : apery_) {
    if (w == 0) continue;
    bool minimal = true;
    for (Value v : apery_) {
      if (v == 0 || v == w || v > w) continue;
      if (elements_.contains(w - v)) {
        minimal = false;
        break;
      }
    }
    if (minimal) generators_.push_back(w);
  }
  std::sort(generators_.begin(), generators_.end());

  if (conductor_ == 0) {
    pseudo_frobenius_ = {-1};
  } else {
    for (Value x : gaps_) {
      const bool pf = std::all_of(generators_.begin(), generators_.end(),
                                  [&](Value g) { return elements_.contains(x + g); });
      if (pf) pseudo_frobenius_.push_back(x);
    }
  }
}

std::vector<Value> NumericalSemigroup::apery(Value m) const {
  if (m <= 0 || !contains(m)) throw DomainError("Apéry set needs a nonzero element of H");
  std::vector<Value> ap(static_cast<std::size_t>(m), -1);
  Value found = 0;
  for (Value x = 0; found < m; ++x) {
    if (contains(x) && ap[x % m] < 0) {
      ap[x % m] = x;
      ++found;
    }
  }
  return ap;
}

CofiniteSet NumericalSemigroup::maximal_ideal() const {
  std::vector<Value> below(elements_.below());
  if (!below.empty() && below.front() == 0) below.erase(below.begin());
  // For ℕ the tail starts at 0; M₊ is then {1, 2, ...}.
  Value tail = std::max<Value>(conductor_, 1);
  return CofiniteSet(std::move(below), tail);
}

std::string NumericalSemigroup::to_string() const {
  std::ostringstream os;
  os << "<";
  for (std::size_t i = 0; i < generators_.size(); ++i) os << (i ? "," : "") << generators_[i];
  os << ">";
  return os.str();
}

bool is_symmetric(const NumericalSemigroup& h) {
  const Value f = h.frobenius();
  for (Value x = 0; x <= f; ++x) {
    if (h.contains(x) == h.contains(f - x)) return false;
  }
  return true;
}

CofiniteSet canonical_value_set(const NumericalSemigroup& h) {
  const Value f = h.frobenius();
  std::vector<Value> below;
  for (Value x = 0; x <= f; ++x) {
    if (!h.contains(f - x)) below.push_back(x);
  }
  return CofiniteSet(std::move(below), f + 1);
}

bool is_almost_symmetric(const NumericalSemigroup& h) {
  if (h.is_dvr()) return true;
  return sumset(h.maximal_ideal(), canonical_value_set(h)).is_subset_of(h.elements());
}

void enumerate_by_genus(std::int64_t g_max,
                        const std::function<void(const NumericalSemigroup&)>& visit) {
  if (g_max < 0) return;
  std::vector<NumericalSemigroup> level{NumericalSemigroup::from_elements(CofiniteSet::naturals())};
  for (std::int64_t g = 0;; ++g) {
    std::sort(level.begin(), level.end(), [](const auto& a, const auto& b) {
      return a.gaps() < b.gaps();
    });
    for (const auto& h : level) visit(h);
    if (g == g_max) break;

    // Children: remove a minimal generator beyond the Frobenius number.
    std::vector<NumericalSemigroup> next;
    for (const auto& h : level) {
      for (Value gen : h.minimal_generators()) {
        if (gen <= h.frobenius()) continue;
        std::vector<Value> below = h.elements().below();
        for (Value x = h.conductor(); x < gen; ++x) below.push_back(x);
        next.push_back(NumericalSemigroup::from_elements(CofiniteSet(std::move(below), gen + 1)));
      }
    }
    level = std::move(next);
  }
}

std::vector<NumericalSemigroup> semigroups_up_to_genus(std::int64_t g_max) {
  std::vector<NumericalSemigroup> out;
  enumerate_by_genus(g_max, [&](const NumericalSemigroup& h) { out.push_back(h); });
  return out;
}

std::vector<Value> parse_generators(const std::string& text) {
  std::string cleaned;
  for (std::size_t i = 0; i < text.size(); ++i) {
    // ⟨ and ⟩ are E2 9F A8 / E2 9F A9 in UTF-8.
    if (text.compare(i, 3, "\xE2\x9F\xA8") == 0 || text.compare(i, 3, "\xE2\x9F\xA9") == 0) {
      i += 2;
      continue;
    }
    const char ch = text[i];
    if (ch == '<' || ch == '>' || ch == '(' || ch == ')' || ch == '[' || ch == ']' || ch == ' ') {
      continue;
    }
    cleaned.push_back(ch);
  }
  std::vector<Value> out;
  std::size_t pos = 0;
  while (pos <= cleaned.size()) {
    const std::size_t end = std::min(cleaned.find(',', pos), cleaned.size());
    const std::string token = cleaned.substr(pos, end - pos);
    Value v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw DomainError("cannot parse generator list '" + text + "'");
    }
    out.push_back(v);
    pos = end + 1;
  }
  return out;
}

}  // namespace sgag
