#include "tamejumps/dvrlin.hpp"

#include "tamejumps/error.hpp"

#include <algorithm>
#include <numeric>

namespace tamejumps {

ValuedSpace ValuedSpace::make(std::vector<std::string> labels, std::vector<Rat> values, std::int64_t granularity) {
  if (labels.size() != values.size()) throw Error(Errc::kOutOfRange, "label and value counts differ");
  if (granularity < 1) throw Error(Errc::kInvalidDegree, "granularity must be positive");
  for (const auto& v : values) {
    if (!is_integer(v * granularity)) {
      throw Error(Errc::kNotIntegral, to_string(v) + " is not in (1/" + std::to_string(granularity) + ")Z");
    }
  }
  return ValuedSpace{std::move(labels), std::move(values), granularity};
}

ExtRat ValuedSpace::valuation(const std::vector<Rat>& coeffs, std::uint64_t p) const {
  if (coeffs.size() != values.size()) throw Error(Errc::kOutOfRange, "coefficient count differs from dimension");
  ExtRat best = ExtRat::infinity();
  for (std::size_t i = 0; i < coeffs.size(); ++i) best = min(best, val_p(coeffs[i], p) + ExtRat(values[i]));
  return best;
}

LocalMatrix::LocalMatrix(std::uint32_t p, std::vector<std::vector<Rat>> rows) : p_(p), m_(std::move(rows)) {
  require_prime(p);
  for (const auto& r : m_) {
    if (r.size() != cols()) throw Error(Errc::kOutOfRange, "ragged matrix");
    for (const auto& x : r) {
      if (x != 0 && val_p_int(x, p) < 0) throw Error(Errc::kNotIntegral, to_string(x) + " has negative valuation");
    }
  }
}

LocalMatrix LocalMatrix::identity(std::uint32_t p, std::size_t n) {
  return diagonal(p, std::vector<Rat>(n, Rat(1)));
}

LocalMatrix LocalMatrix::diagonal(std::uint32_t p, const std::vector<Rat>& entries) {
  std::vector<std::vector<Rat>> m(entries.size(), std::vector<Rat>(entries.size(), Rat(0)));
  for (std::size_t i = 0; i < entries.size(); ++i) m[i][i] = entries[i];
  return LocalMatrix(p, std::move(m));
}

LocalMatrix LocalMatrix::transpose() const {
  std::vector<std::vector<Rat>> t(cols(), std::vector<Rat>(rows()));
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols(); ++j) t[j][i] = m_[i][j];
  }
  return LocalMatrix(p_, std::move(t));
}

LocalMatrix operator*(const LocalMatrix& a, const LocalMatrix& b) {
  if (a.p_ != b.p_ || a.cols() != b.rows()) throw Error(Errc::kOutOfRange, "incompatible matrices");
  std::vector<std::vector<Rat>> out(a.rows(), std::vector<Rat>(b.cols(), Rat(0)));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a.m_[i][k] == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out[i][j] += a.m_[i][k] * b.m_[k][j];
    }
  }
  return LocalMatrix(a.p_, std::move(out));
}

ValuedSpace prolong(const ValuedSpace& w, std::int64_t d) {
  if (d < 1) throw Error(Errc::kInvalidDegree, "degree must be positive");
  if (std::gcd(d, w.granularity) != 1) {
    throw Error(Errc::kNotCoprime, "gcd(" + std::to_string(d) + ", " + std::to_string(w.granularity) + ") != 1");
  }
  ValuedSpace out;
  out.granularity = w.granularity;
  for (std::size_t j = 0; j < w.dim(); ++j) {
    for (std::int64_t i = 0; i < d; ++i) {
      out.labels.push_back(i == 0 ? w.labels[j] : "pi^" + std::to_string(i) + "*" + w.labels[j]);
      out.values.push_back(Rat(i) + w.values[j] * d);
    }
  }
  return out;
}

bool class_disjointness(std::int64_t d, std::int64_t e) {
  if (d < 1 || e < 1) throw Error(Errc::kInvalidDegree, "d and e must be positive");
  // i + (d/e)Z meets i' + (d/e)Z iff (i - i') e / d is an integer
  for (std::int64_t i = 0; i < d; ++i) {
    for (std::int64_t k = i + 1; k < d; ++k) {
      if (((k - i) * e) % d == 0) return false;
    }
  }
  return true;
}

std::vector<std::int64_t> lattice_exponents(const std::vector<Rat>& values, std::int64_t d) {
  if (d < 1) throw Error(Errc::kInvalidDegree, "degree must be positive");
  std::vector<std::int64_t> out;
  for (const auto& v : values) {
    if (v <= -1 || v > 0) throw Error(Errc::kOutOfRange, to_string(v) + " is not in (-1, 0]");
    out.push_back(to_int64(floor_rat(-v * d)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

ElemDivisors snf_local(const LocalMatrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw Error(Errc::kSingularMatrix, "matrix is not square");
  const std::uint32_t p = m.prime();
  auto a = m.data();
  ElemDivisors out;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pr = n, pc = n;
    std::int64_t best = 0;
    for (std::size_t i = k; i < n; ++i) {
      for (std::size_t j = k; j < n; ++j) {
        if (a[i][j] == 0) continue;
        std::int64_t v = val_p_int(a[i][j], p);
        if (pr == n || v < best) {
          best = v;
          pr = i;
          pc = j;
        }
      }
    }
    if (pr == n) throw Error(Errc::kSingularMatrix, "matrix is singular");
    std::swap(a[k], a[pr]);
    for (auto& row : a) std::swap(row[k], row[pc]);
    const Rat pivot = a[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      Rat factor = a[i][k] / pivot;
      for (std::size_t j = k; j < n; ++j) a[i][j] -= factor * a[k][j];
    }
    for (std::size_t j = k + 1; j < n; ++j) a[k][j] = 0;
    out.push_back(best);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Rat> relative_jumps_from_matrix(const LocalMatrix& m, std::int64_t d) {
  if (d < 1) throw Error(Errc::kInvalidDegree, "degree must be positive");
  std::vector<Rat> out;
  for (auto c : snf_local(m)) out.push_back(Rat(c) / d);
  return out;
}

}  // namespace tamejumps
