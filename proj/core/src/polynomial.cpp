#include "tamejumps/polynomial.hpp"

#include <algorithm>

namespace tamejumps {

std::string to_string(const LatticePoint& p) {
  return "(" + std::to_string(p.i) + "," + std::to_string(p.j) + ")";
}

BivariatePoly::BivariatePoly(TermMap terms) {
  for (auto& [e, c] : terms) {
    if (c != 0) terms_.emplace(e, std::move(c));
  }
}

BivariatePoly BivariatePoly::constant(const Rat& c) { return monomial(c, 0, 0); }

BivariatePoly BivariatePoly::monomial(const Rat& c, std::int64_t i, std::int64_t j) {
  BivariatePoly out;
  if (c != 0) out.terms_.emplace(LatticePoint{i, j}, c);
  return out;
}

Rat BivariatePoly::coeff(const LatticePoint& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Rat(0) : it->second;
}

std::vector<LatticePoint> BivariatePoly::support() const {
  std::vector<LatticePoint> out;
  out.reserve(terms_.size());
  for (const auto& [e, c] : terms_) out.push_back(e);
  return out;
}

BivariatePoly BivariatePoly::operator-() const {
  BivariatePoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

BivariatePoly operator+(const BivariatePoly& a, const BivariatePoly& b) {
  BivariatePoly out = a;
  for (const auto& [e, c] : b.terms_) {
    auto [it, inserted] = out.terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) out.terms_.erase(it);
    }
  }
  return out;
}

BivariatePoly operator-(const BivariatePoly& a, const BivariatePoly& b) { return a + (-b); }

BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
  BivariatePoly::TermMap acc;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) acc[{ea.i + eb.i, ea.j + eb.j}] += ca * cb;
  }
  return BivariatePoly(std::move(acc));
}

BivariatePoly BivariatePoly::x_dx() const {
  TermMap out;
  for (const auto& [e, c] : terms_) out[e] = c * e.i;
  return BivariatePoly(std::move(out));
}

BivariatePoly BivariatePoly::y_dy() const {
  TermMap out;
  for (const auto& [e, c] : terms_) out[e] = c * e.j;
  return BivariatePoly(std::move(out));
}

namespace {
std::string power(const char* var, std::int64_t e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return std::string(var) + "^" + std::to_string(e);
}
}  // namespace

std::string BivariatePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  std::vector<std::pair<LatticePoint, Rat>> items(terms_.begin(), terms_.end());
  std::stable_sort(items.begin(), items.end(), [](const auto& l, const auto& r) {
    if (l.first.j != r.first.j) return l.first.j > r.first.j;
    return l.first.i > r.first.i;
  });
  for (const auto& [e, c] : items) {
    const bool neg = c < 0;
    const Rat mag = neg ? Rat(-c) : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string mono = power("x", e.i);
    const std::string ypart = power("y", e.j);
    if (!ypart.empty()) mono = mono.empty() ? ypart : mono + "*" + ypart;
    if (mono.empty()) {
      out += tamejumps::to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += tamejumps::to_string(mag) + "*" + mono;
    }
  }
  return out;
}

}  // namespace tamejumps
