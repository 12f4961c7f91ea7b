#include "sgag/value_set.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "sgag/errors.hpp"

namespace sgag {

CofiniteSet::CofiniteSet(std::vector<Value> below, std::optional<Value> all_from)
    : below_(std::move(below)), all_from_(all_from) {
  std::sort(below_.begin(), below_.end());
  below_.erase(std::unique(below_.begin(), below_.end()), below_.end());
  if (all_from_) {
    auto cut = std::lower_bound(below_.begin(), below_.end(), *all_from_);
    below_.erase(cut, below_.end());
    while (!below_.empty() && below_.back() == *all_from_ - 1) {
      below_.pop_back();
      --*all_from_;
    }
  }
}

CofiniteSet CofiniteSet::finite(std::vector<Value> members) {
  return CofiniteSet(std::move(members), std::nullopt);
}

CofiniteSet CofiniteSet::from(Value threshold) { return CofiniteSet({}, threshold); }

bool CofiniteSet::contains(Value x) const {
  if (all_from_ && x >= *all_from_) return true;
  return std::binary_search(below_.begin(), below_.end(), x);
}

Value CofiniteSet::min() const {
  if (!below_.empty()) return below_.front();
  if (all_from_) return *all_from_;
  throw DomainError("min of an empty set");
}

Value CofiniteSet::horizon() const {
  if (all_from_) return *all_from_;
  if (!below_.empty()) return below_.back() + 1;
  return std::numeric_limits<Value>::min();
}

std::vector<Value> CofiniteSet::members_in(Value lo, Value hi) const {
  std::vector<Value> out;
  if (lo >= hi) return out;
  auto first = std::lower_bound(below_.begin(), below_.end(), lo);
  auto last = std::lower_bound(first, below_.end(), hi);
  out.assign(first, last);
  if (all_from_) {
    for (Value x = std::max(lo, *all_from_); x < hi; ++x) out.push_back(x);
  }
  return out;
}

std::int64_t CofiniteSet::count_in(Value lo, Value hi) const {
  if (lo >= hi) return 0;
  auto first = std::lower_bound(below_.begin(), below_.end(), lo);
  auto last = std::lower_bound(first, below_.end(), hi);
  std::int64_t n = last - first;
  if (all_from_) n += std::max<Value>(0, hi - std::max(lo, *all_from_));
  return n;
}

CofiniteSet CofiniteSet::shifted(Value d) const {
  CofiniteSet out = *this;
  for (auto& x : out.below_) x += d;
  if (out.all_from_) *out.all_from_ += d;
  return out;
}

std::optional<Value> CofiniteSet::witness_not_in(const CofiniteSet& other) const {
  if (empty()) return std::nullopt;
  const Value hi = std::max(horizon(), other.horizon());
  for (Value x : members_in(min(), hi)) {
    if (!other.contains(x)) return x;
  }
  if (all_from_ && !other.contains(hi)) return hi;
  return std::nullopt;
}

bool CofiniteSet::is_subset_of(const CofiniteSet& other) const {
  return !witness_not_in(other).has_value();
}

std::string CofiniteSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (Value x : below_) {
    os << (first ? "" : ",") << x;
    first = false;
  }
  if (all_from_) os << (first ? "" : ",") << *all_from_ << ",...";
  os << '}';
  return os.str();
}

namespace {

// Dense membership table over [lo, hi).
class Window {
 public:
  Window(const CofiniteSet& s, Value lo, Value hi) : lo_(lo), bits_(hi > lo ? hi - lo : 0, 0) {
    for (Value x : s.members_in(lo, hi)) bits_[x - lo] = 1;
  }
  bool operator[](Value x) const { return bits_[x - lo_] != 0; }

 private:
  Value lo_;
  std::vector<char> bits_;
};

template <typename Pred>
CofiniteSet pointwise(const CofiniteSet& a, const CofiniteSet& b, Pred keep) {
  if (a.empty() && b.empty()) return {};
  Value lo = std::numeric_limits<Value>::max();
  if (!a.empty()) lo = std::min(lo, a.min());
  if (!b.empty()) lo = std::min(lo, b.min());
  const Value hi = std::max({a.horizon(), b.horizon(), lo});
  std::vector<Value> members;
  for (Value x = lo; x < hi; ++x) {
    if (keep(a.contains(x), b.contains(x))) members.push_back(x);
  }
  std::optional<Value> tail;
  if (keep(a.is_cofinite(), b.is_cofinite())) tail = hi;
  return CofiniteSet(std::move(members), tail);
}

}  // namespace

CofiniteSet sumset(const CofiniteSet& a, const CofiniteSet& b) {
  if (a.empty() || b.empty()) throw DomainError("sumset: empty operand");
  const Value lo = a.min() + b.min();
  Value hi;
  std::optional<Value> tail;
  if (a.is_cofinite() && b.is_cofinite()) {
    hi = std::min(*a.all_from() + b.min(), *b.all_from() + a.min());
    tail = hi;
  } else if (a.is_cofinite()) {
    hi = *a.all_from() + b.min();
    tail = hi;
  } else if (b.is_cofinite()) {
    hi = *b.all_from() + a.min();
    tail = hi;
  } else {
    hi = a.below().back() + b.below().back() + 1;
  }

  std::vector<char> hit(hi - lo, 0);
  const auto xs = a.members_in(a.min(), hi - b.min());
  const auto ys = b.members_in(b.min(), hi - a.min());
  for (Value x : xs) {
    for (Value y : ys) {
      if (x + y >= hi) break;
      hit[x + y - lo] = 1;
    }
  }
  std::vector<Value> members;
  for (Value i = 0; i < hi - lo; ++i) {
    if (hit[i]) members.push_back(lo + i);
  }
  return CofiniteSet(std::move(members), tail);
}

CofiniteSet colon(const CofiniteSet& a, const CofiniteSet& b) {
  if (b.empty()) throw DomainError("colon: empty divisor");
  if (a.empty()) return {};
  if (b.is_cofinite() && !a.is_cofinite()) return {};

  const Value lo = a.min() - b.min();
  const Value ha = a.horizon();
  const Value hi = ha - b.min();
  std::optional<Value> tail;
  if (a.is_cofinite()) tail = hi;

  // Only shifts landing below the horizon of A can fail when A is cofinite;
  // a finite A needs every element of (the then finite) B.
  const auto ys = a.is_cofinite() ? b.members_in(b.min(), std::max(b.min(), ha - lo))
                                  : b.below();
  const Window in_a(a, a.min(), ha);

  std::vector<Value> members;
  for (Value z = lo; z < hi; ++z) {
    bool ok = true;
    for (Value y : ys) {
      const Value v = z + y;
      if (v >= ha) {
        ok = a.is_cofinite();
        break;
      }
      if (v < a.min() || !in_a[v]) {
        ok = false;
        break;
      }
    }
    if (ok) members.push_back(z);
  }
  return CofiniteSet(std::move(members), tail);
}

CofiniteSet n_fold_sum(const CofiniteSet& a, std::int64_t n) {
  if (n < 0) throw DomainError("n_fold_sum: negative count");
  if (n == 0) return CofiniteSet::singleton(0);
  if (a.empty()) throw DomainError("n_fold_sum: empty operand");
  std::optional<CofiniteSet> acc;
  CofiniteSet base = a;
  while (true) {
    if (n & 1) acc = acc ? sumset(*acc, base) : base;
    n >>= 1;
    if (n == 0) break;
    base = sumset(base, base);
  }
  return *acc;
}

std::int64_t length_between(const CofiniteSet& a, const CofiniteSet& b) {
  if (auto w = b.witness_not_in(a)) {
    throw ContainmentError("length_between: second set is not contained in the first", *w);
  }
  if (a.is_cofinite() && !b.is_cofinite()) {
    throw DomainError("length_between: infinite difference");
  }
  if (a.empty()) return 0;
  const Value lo = a.min();
  const Value hi = std::max({a.horizon(), b.horizon(), lo});
  return a.count_in(lo, hi) - b.count_in(lo, hi);
}

CofiniteSet set_union(const CofiniteSet& a, const CofiniteSet& b) {
  return pointwise(a, b, [](bool x, bool y) { return x || y; });
}

CofiniteSet set_intersection(const CofiniteSet& a, const CofiniteSet& b) {
  return pointwise(a, b, [](bool x, bool y) { return x && y; });
}

std::vector<Value> set_difference(const CofiniteSet& a, const CofiniteSet& b) {
  if (a.empty()) return {};
  if (a.is_cofinite() && !b.is_cofinite()) {
    throw DomainError("set_difference: infinite difference");
  }
  const Value hi = std::max(a.horizon(), b.horizon());
  std::vector<Value> out;
  for (Value x : a.members_in(a.min(), hi)) {
    if (!b.contains(x)) out.push_back(x);
  }
  return out;
}

}  // namespace sgag
