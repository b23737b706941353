#include "nilcomm/partitions/partitions.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace nilcomm {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be non-increasing");
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int i) const {
  if (i < 1 || i > length() + 1) throw std::out_of_range("partition index out of range");
  return i == length() + 1 ? 0 : parts_[i - 1];
}

std::vector<int> Partition::distinct_values() const {
  std::vector<int> v;
  for (int p : parts_)
    if (v.empty() || v.back() != p) v.push_back(p);
  return v;
}

int Partition::multiplicity(int value) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

Partition Partition::conjugate() const {
  std::vector<int> c;
  for (int k = 1; !parts_.empty() && k <= parts_.front(); ++k)
    c.push_back(static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [k](int p) { return p >= k; })));
  return Partition(std::move(c));
}

Partition Partition::without(int i) const {
  if (i < 1 || i > length()) throw std::out_of_range("partition index out of range");
  auto p = parts_;
  p.erase(p.begin() + (i - 1));
  return Partition(std::move(p));
}

Partition Partition::with_part(int value) const {
  auto p = parts_;
  p.push_back(value);
  std::sort(p.begin(), p.end(), std::greater<>());
  return Partition(std::move(p));
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "()";
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
  return s + ")";
}

MarkedPartition::MarkedPartition(int h, Partition t) : head(h), tail(std::move(t)) {
  if (head < 1) throw std::invalid_argument("marked partition head must be at least 1");
}

int MarkedPartition::part(int i) const {
  if (i == 1) return head;
  return tail.part(i - 1);
}

std::vector<int> MarkedPartition::block_sizes() const {
  std::vector<int> b{head};
  b.insert(b.end(), tail.parts().begin(), tail.parts().end());
  return b;
}

Partition MarkedPartition::underlying() const { return tail.with_part(head); }

std::string MarkedPartition::to_string() const {
  const std::string t = tail.length() == 0 ? "()" : tail.to_string();
  return "(" + std::to_string(head) + "," + t + ")";
}

MarkedPartition2::MarkedPartition2(MarkedPartition a, int l_, int eps_) : alpha(std::move(a)), l(l_), eps(eps_) {
  validate(*this);
}

int MarkedPartition2::marked_index() const {
  const int d = alpha.length();
  if (l == 0) return d + 1;
  for (int i = 2; i <= d; ++i)
    if (alpha.part(i) == l) return i;
  throw std::logic_error("mark value is not a tail part");
}

int MarkedPartition2::d() const { return alpha.length() + ((eps == 0 && l == 0) ? 1 : 0); }

int MarkedPartition2::c() const { return d() - ((eps == 1 && l > 0) ? 1 : 0); }

std::string MarkedPartition2::to_string() const {
  return "(" + alpha.to_string() + "," + std::to_string(l) + "," + std::to_string(eps) + ")";
}

void validate(const MarkedPartition2& mu) {
  if (mu.eps != 0 && mu.eps != 1) throw std::invalid_argument("eps must be 0 or 1");
  if (mu.l < 0) throw std::invalid_argument("mark value must be non-negative");
  if (mu.l > 0 && mu.alpha.tail.multiplicity(mu.l) == 0)
    throw std::invalid_argument("mark value " + std::to_string(mu.l) + " is not a tail part of " + mu.alpha.to_string());
  if (mu.eps == 1 && mu.l > 0 && mu.l <= mu.alpha.head)
    throw std::invalid_argument("eps = 1 needs l = 0 or l larger than the head");
}

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw std::invalid_argument("cannot partition a negative integer");
  std::vector<Partition> out;
  std::vector<int> cur;
  // Largest first part first, then recursively: yields reverse lexicographic order.
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, cap); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<MarkedPartition> enumerate_marked(int n) {
  if (n < 1) throw std::invalid_argument("marked partitions need n >= 1");
  std::vector<MarkedPartition> out;
  for (const auto& p : enumerate_partitions(n))
    for (int v : p.distinct_values()) {
      const auto pos = std::find(p.parts().begin(), p.parts().end(), v) - p.parts().begin();
      out.emplace_back(v, p.without(static_cast<int>(pos) + 1));
    }
  return out;
}

std::vector<MarkedPartition2> enumerate_marked2(int n) {
  if (n < 2) throw std::invalid_argument("doubly marked partitions need n >= 2");
  std::vector<MarkedPartition2> out;
  for (const auto& a : enumerate_marked(n - 1)) {
    auto marks = a.tail.distinct_values();
    marks.push_back(0);
    for (int l : marks)
      for (int eps = 0; eps <= 1; ++eps) {
        if (eps == 1 && l > 0 && l <= a.head) continue;
        out.emplace_back(a, l, eps);
      }
  }
  return out;
}

nlohmann::json to_json(const Partition& p) { return p.parts(); }

nlohmann::json to_json(const MarkedPartition& p) { return {{"head", p.head}, {"tail", p.tail.parts()}}; }

nlohmann::json to_json(const MarkedPartition2& p) { return {{"alpha", to_json(p.alpha)}, {"l", p.l}, {"eps", p.eps}}; }

Partition partition_from_json(const nlohmann::json& j) { return Partition(j.get<std::vector<int>>()); }

MarkedPartition marked_from_json(const nlohmann::json& j) {
  return MarkedPartition(j.at("head").get<int>(), partition_from_json(j.at("tail")));
}

MarkedPartition2 marked2_from_json(const nlohmann::json& j) {
  return MarkedPartition2(marked_from_json(j.at("alpha")), j.at("l").get<int>(), j.at("eps").get<int>());
}

namespace {

// Minimal reader for nested tuples of non-negative integers.
struct TupleReader {
  const std::string& s;
  std::size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool peek(char c) {
    skip();
    return pos < s.size() && s[pos] == c;
  }
  void expect(char c) {
    if (!peek(c)) throw std::invalid_argument("malformed label '" + s + "'");
    ++pos;
  }
  int integer() {
    skip();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw std::invalid_argument("malformed label '" + s + "'");
    return std::stoi(s.substr(start, pos - start));
  }
  std::vector<int> int_list() {
    expect('(');
    std::vector<int> v;
    if (peek(')')) {
      ++pos;
      return v;
    }
    v.push_back(integer());
    while (peek(',')) {
      ++pos;
      v.push_back(integer());
    }
    expect(')');
    return v;
  }
  MarkedPartition marked() {
    expect('(');
    const int head = integer();
    expect(',');
    std::vector<int> tail;
    if (peek('(')) tail = int_list();
    expect(')');
    return MarkedPartition(head, Partition(tail));
  }
  void finish() {
    skip();
    if (pos != s.size()) throw std::invalid_argument("trailing characters in label '" + s + "'");
  }
};

}  // namespace

Partition parse_partition(const std::string& text) {
  TupleReader r{text};
  auto v = r.int_list();
  r.finish();
  return Partition(v);
}

MarkedPartition parse_marked(const std::string& text) {
  TupleReader r{text};
  auto m = r.marked();
  r.finish();
  return m;
}

MarkedPartition2 parse_marked2(const std::string& text) {
  TupleReader r{text};
  r.expect('(');
  auto a = r.marked();
  r.expect(',');
  const int l = r.integer();
  r.expect(',');
  const int eps = r.integer();
  r.expect(')');
  r.finish();
  return MarkedPartition2(a, l, eps);
}

}  // namespace nilcomm
