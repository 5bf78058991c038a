#include "galchar/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "galchar/error.hpp"

namespace galchar {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p]) throw DomainError("images do not form a permutation");
    seen[p] = true;
  }
}

Permutation Permutation::from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
  Permutation result(degree);
  for (const auto& cycle : cycles) {
    if (cycle.empty()) continue;
    Permutation c(degree);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (cycle[i] >= degree) throw DomainError("cycle point out of range");
      c.images_[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
    result = result * Permutation(c.images_);
  }
  return result;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree()) throw DomainError("cannot multiply permutations of different degrees");
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out.images_[i] = rhs.images_[images_[i]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out.images_[images_[i]] = static_cast<Point>(i);
  return out;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::vector<std::vector<Permutation::Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (Point start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    std::vector<Point> cycle;
    for (Point p = start; !seen[p]; p = images_[p]) {
      seen[p] = true;
      cycle.push_back(p);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

unsigned long long Permutation::order() const {
  unsigned long long result = 1;
  for (const auto& c : cycles()) result = std::lcm(result, static_cast<unsigned long long>(c.size()));
  return result;
}

std::string to_cycle_string(const Permutation& p) {
  auto cycles = p.cycles();
  if (cycles.empty()) return "()";
  std::string out;
  for (const auto& c : cycles) {
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i != 0) out += ' ';
      out += std::to_string(c[i] + 1);
    }
    out += ')';
  }
  return out;
}

Permutation parse_cycles(std::string_view text, std::size_t degree, std::size_t base_offset) {
  std::size_t pos = 0;
  auto at = [&](std::size_t p) { return base_offset + p; };
  // End-of-input errors point at the last character.
  auto eof_at = [&] { return at(text.empty() ? 0 : text.size() - 1); };
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };

  std::vector<std::vector<Permutation::Point>> cycles;
  skip_ws();
  if (pos == text.size()) throw ParseError(eof_at(), "expected '('");
  while (pos < text.size()) {
    if (text[pos] != '(') throw ParseError(at(pos), "expected '('");
    ++pos;
    std::vector<Permutation::Point> cycle;
    while (true) {
      skip_ws();
      if (pos == text.size()) throw ParseError(eof_at(), "expected point or ')'");
      char ch = text[pos];
      if (ch == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(ch))) throw ParseError(at(pos), "expected point or ')'");
      std::size_t start = pos;
      unsigned long long value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<unsigned>(text[pos] - '0');
        if (value > degree + 1ULL) value = degree + 1ULL;  // saturate; reported below
        ++pos;
      }
      if (value == 0 || value > degree)
        throw ParseError(at(start), "point " + std::string(text.substr(start, pos - start)) + " out of range 1.." +
                                        std::to_string(degree));
      auto point = static_cast<Permutation::Point>(value - 1);
      if (std::find(cycle.begin(), cycle.end(), point) != cycle.end())
        throw ParseError(at(start), "point " + std::to_string(value) + " repeated within a cycle");
      cycle.push_back(point);
    }
    cycles.push_back(std::move(cycle));
    skip_ws();
  }
  return Permutation::from_cycles(degree, cycles);
}

}  // namespace galchar

std::size_t std::hash<galchar::Permutation>::operator()(const galchar::Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (auto v : p.images()) {
    h ^= v;
    h *= 1099511628211ULL;
  }
  return h;
}
