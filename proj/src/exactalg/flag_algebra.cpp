#include "nilcomm/exactalg/flag_algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace nilcomm {

FlagAlgebra::FlagAlgebra(int n, std::vector<int> chain) : n_(n), chain_(std::move(chain)) {
  if (n < 1) throw std::invalid_argument("flag algebra needs n >= 1");
  if (chain_.empty() || chain_.back() != n) throw std::invalid_argument("flag chain must end at n");
  for (std::size_t j = 0; j < chain_.size(); ++j)
    if (chain_[j] <= (j ? chain_[j - 1] : 0)) throw std::invalid_argument("flag chain must be strictly increasing and positive");
}

FlagAlgebra FlagAlgebra::full(int n) { return FlagAlgebra(n, {n}); }

FlagAlgebra FlagAlgebra::parabolic(int k, int n) {
  if (k < 0 || k > n) throw std::invalid_argument("parabolic index out of range");
  if (k == 0 || k == n) return full(n);
  return FlagAlgebra(n, {k, n});
}

FlagAlgebra FlagAlgebra::nested(int k, int n) {
  if (k < 0 || k > n) throw std::invalid_argument("flag length out of range");
  std::vector<int> chain;
  for (int i = 1; i <= k && i < n; ++i) chain.push_back(i);
  chain.push_back(n);
  return FlagAlgebra(n, chain);
}

FlagAlgebra FlagAlgebra::parse(const std::string& name) {
  const auto colon = name.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("bad algebra name '" + name + "'");
  const std::string kind = name.substr(0, colon), rest = name.substr(colon + 1);
  try {
    if (kind == "flag") {
      std::vector<int> chain;
      std::stringstream ss(rest);
      std::string item;
      while (std::getline(ss, item, ',')) chain.push_back(std::stoi(item));
      if (chain.empty()) throw std::invalid_argument("empty chain");
      return FlagAlgebra(chain.back(), chain);
    }
    const int n = std::stoi(rest);
    if (kind == "gl") return full(n);
    if (kind.size() >= 2 && (kind[0] == 'p' || kind[0] == 'q')) {
      const int k = std::stoi(kind.substr(1));
      return kind[0] == 'p' ? parabolic(k, n) : nested(k, n);
    }
  } catch (const std::logic_error&) {
    throw std::invalid_argument("bad algebra name '" + name + "'");
  }
  throw std::invalid_argument("bad algebra name '" + name + "'");
}

int FlagAlgebra::dim() const {
  int forbidden = 0;
  for (std::size_t j = 0; j + 1 < chain_.size(); ++j) forbidden += chain_[j] * (chain_[j + 1] - chain_[j]);
  return n_ * n_ - forbidden;
}

int FlagAlgebra::block_of(int r) const {
  for (std::size_t j = 0; j < chain_.size(); ++j)
    if (r < chain_[j]) return static_cast<int>(j);
  throw std::out_of_range("basis index outside the flag");
}

std::vector<std::pair<int, int>> FlagAlgebra::blocks() const {
  std::vector<std::pair<int, int>> out;
  int start = 0;
  for (int end : chain_) {
    out.emplace_back(start, end - start);
    start = end;
  }
  return out;
}

std::vector<std::pair<int, int>> FlagAlgebra::free_positions() const {
  std::vector<std::pair<int, int>> out;
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c)
      if (allows(r, c)) out.emplace_back(r, c);
  return out;
}

std::string FlagAlgebra::name() const {
  if (chain_.size() == 1) return "gl:" + std::to_string(n_);
  if (chain_.size() == 2) return "p" + std::to_string(chain_[0]) + ":" + std::to_string(n_);
  bool nested_chain = true;
  for (std::size_t j = 0; j + 1 < chain_.size(); ++j) nested_chain = nested_chain && chain_[j] == static_cast<int>(j) + 1;
  if (nested_chain) return "q" + std::to_string(chain_.size() - 1) + ":" + std::to_string(n_);
  std::string s = "flag:";
  for (std::size_t j = 0; j < chain_.size(); ++j) s += (j ? "," : "") + std::to_string(chain_[j]);
  return s;
}

}  // namespace nilcomm
