#include "nilcomm/hilbert/poly.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace nilcomm {

std::string Monomial::to_string() const {
  auto factor = [](char var, int e) {
    std::string s(1, var);
    if (e > 1) s += "^" + std::to_string(e);
    return s;
  };
  if (x == 0 && y == 0) return "1";
  if (y == 0) return factor('x', x);
  if (x == 0) return factor('y', y);
  return factor('x', x) + "*" + factor('y', y);
}

Monomial Monomial::parse(const std::string& text) {
  auto fail = [&]() -> Monomial { throw std::invalid_argument("bad monomial '" + text + "'"); };
  if (text == "1") return {};
  Monomial m;
  std::size_t pos = 0;
  bool any = false;
  while (pos < text.size()) {
    if (any) {
      if (text[pos] != '*') return fail();
      ++pos;
    }
    if (pos >= text.size()) return fail();
    const char var = text[pos++];
    if (var != 'x' && var != 'y') return fail();
    int e = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      const auto [end, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), e);
      if (ec != std::errc() || e < 1) return fail();
      pos = end - text.data();
    }
    int& slot = var == 'x' ? m.x : m.y;
    if (slot != 0) return fail();
    slot = e;
    any = true;
  }
  if (!any) return fail();
  return m;
}

bool less(MonomialOrder order, const Monomial& a, const Monomial& b) {
  if (order == MonomialOrder::graded) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.y < b.y;
  }
  if (a.y != b.y) return a.y < b.y;
  return a.x < b.x;
}

std::string to_string(MonomialOrder order) { return order == MonomialOrder::graded ? "graded" : "lex"; }

MonomialOrder parse_monomial_order(const std::string& text) {
  if (text == "graded") return MonomialOrder::graded;
  if (text == "lex") return MonomialOrder::lex;
  throw std::invalid_argument("unknown monomial order '" + text + "'");
}

std::size_t monomial_count(int cap) {
  if (cap < 0) throw std::invalid_argument("negative degree cap");
  const auto c = static_cast<std::size_t>(cap);
  return (c + 1) * (c + 2) / 2;
}

std::size_t monomial_index(const Monomial& m) {
  const auto d = static_cast<std::size_t>(m.degree());
  return d * (d + 1) / 2 + static_cast<std::size_t>(m.y);
}

Monomial monomial_at(std::size_t index) {
  std::size_t d = 0;
  while ((d + 1) * (d + 2) / 2 <= index) ++d;
  const int y = static_cast<int>(index - d * (d + 1) / 2);
  return {static_cast<int>(d) - y, y};
}

std::vector<PolyTerm> parse_terms(const std::string& text) {
  std::string compact;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
  if (compact.empty()) throw std::invalid_argument("empty polynomial");

  std::vector<std::string> pieces;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= compact.size(); ++i)
    if (i == compact.size() || compact[i] == '+' || compact[i] == '-') {
      pieces.push_back(compact.substr(start, i - start));
      start = i;
    }

  std::vector<PolyTerm> out;
  for (auto piece : pieces) {
    std::string sign;
    if (piece.front() == '+' || piece.front() == '-') {
      if (piece.front() == '-') sign = "-";
      piece.erase(0, 1);
    }
    if (piece.empty()) throw std::invalid_argument("bad polynomial '" + text + "'");
    const auto var = piece.find_first_of("xy");
    if (var == std::string::npos) {
      out.push_back({sign + piece, {}});
      continue;
    }
    std::string coeff = piece.substr(0, var);
    if (!coeff.empty()) {
      if (coeff.back() != '*') throw std::invalid_argument("bad polynomial '" + text + "'");
      coeff.pop_back();
    }
    out.push_back({sign + (coeff.empty() ? "1" : coeff), Monomial::parse(piece.substr(var))});
  }
  return out;
}

std::vector<Monomial> monomials_up_to(int cap, MonomialOrder order) {
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < monomial_count(cap); ++i) out.push_back(monomial_at(i));
  std::sort(out.begin(), out.end(), [order](const Monomial& a, const Monomial& b) { return less(order, a, b); });
  return out;
}

}  // namespace nilcomm
