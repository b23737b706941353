#pragma once

#include <compare>
#include <string>
#include <vector>

#include <json.hpp>

namespace nilcomm {

// Integer partition: a non-increasing list of positive parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;  // the integer being partitioned
  int length() const { return static_cast<int>(parts_.size()); }
  // 1-based; part(length()+1) is 0.
  int part(int i) const;
  // Distinct part values, largest first.
  std::vector<int> distinct_values() const;
  int multiplicity(int value) const;
  Partition conjugate() const;
  // Partition obtained by deleting the part at 1-based position i.
  Partition without(int i) const;
  Partition with_part(int value) const;

  std::string to_string() const;
  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

// Pair (head, tail) with head >= 1 and tail a partition; the head need not be the largest part.
struct MarkedPartition {
  int head = 0;
  Partition tail;

  MarkedPartition() = default;
  MarkedPartition(int head, Partition tail);

  int size() const { return head + tail.size(); }
  int length() const { return 1 + tail.length(); }
  // 1-based: part(1) is the head, part(i) = tail.part(i-1), part(length()+1) = 0.
  int part(int i) const;
  // Head followed by the tail parts; the block order of the associated Jordan matrix.
  std::vector<int> block_sizes() const;
  Partition underlying() const;

  std::string to_string() const;
  auto operator<=>(const MarkedPartition&) const = default;
};

// Triple (alpha, l, eps) labelling nilpotent orbits of the two-step flag algebras.
struct MarkedPartition2 {
  MarkedPartition alpha;
  int l = 0;
  int eps = 0;

  MarkedPartition2() = default;
  MarkedPartition2(MarkedPartition alpha, int l, int eps);

  int size() const { return alpha.size() + 1; }
  // Smallest index i > 1 with alpha_i = l; alpha.length()+1 when l = 0.
  int marked_index() const;
  int d() const;
  int c() const;

  std::string to_string() const;
  auto operator<=>(const MarkedPartition2&) const = default;
};

// All partitions of n, largest first in reverse lexicographic order.
std::vector<Partition> enumerate_partitions(int n);
// Ordered by underlying partition, then by head value (largest first).
std::vector<MarkedPartition> enumerate_marked(int n);
// Ordered by alpha, then by l (largest first, 0 last), then eps.
std::vector<MarkedPartition2> enumerate_marked2(int n);

// Throws std::invalid_argument when the triple violates the admissibility rules.
void validate(const MarkedPartition2& mu);

nlohmann::json to_json(const Partition& p);
nlohmann::json to_json(const MarkedPartition& p);
nlohmann::json to_json(const MarkedPartition2& p);
Partition partition_from_json(const nlohmann::json& j);
MarkedPartition marked_from_json(const nlohmann::json& j);
MarkedPartition2 marked2_from_json(const nlohmann::json& j);

// Parsers for the text forms produced by to_string: "(3,1)", "(3,(2,1))", "((2,(1)),1,0)".
Partition parse_partition(const std::string& text);
MarkedPartition parse_marked(const std::string& text);
MarkedPartition2 parse_marked2(const std::string& text);

}  // namespace nilcomm
