#pragma once

// Exact rational arithmetic: dense polynomials, interpolation, linear solving
// over Q and GF(2), and the moment-recovery algorithm used by the wedge
// pipeline.

#include "edginj/common.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace edginj {

/// Dense univariate polynomial over Q; coeffs[i] multiplies x^i.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Polynomial(const Rational& c) : coeffs_{c} { trim(); }  // NOLINT: implicit constant
  Polynomial(long long c) : Polynomial(Rational(c)) {}    // NOLINT

  static Polynomial x() { return Polynomial(std::vector<Rational>{0, 1}); }
  /// x - c
  static Polynomial linear(const Rational& c) { return Polynomial(std::vector<Rational>{-c, 1}); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int i) const {
    if (i < 0 || i > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(i)];
  }

  Rational operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// p(x + c)
  Polynomial shifted(const Rational& c) const {
    Polynomial result;
    Polynomial base(Rational(1));
    const Polynomial step(std::vector<Rational>{c, 1});
    for (const auto& a : coeffs_) {
      result += base * a;
      base *= step;
    }
    return result;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) { return *this += o * Rational(-1); }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(c));
  }
  friend Polynomial operator*(const Polynomial& a, const Rational& s) {
    if (s == 0) return {};
    std::vector<Rational> c = a.coeffs_;
    for (auto& v : c) v *= s;
    return Polynomial(std::move(c));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
      const Rational& c = coeffs_[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      if (!first) out << (c < 0 ? " - " : " + ");
      else if (c < 0) out << "-";
      Rational a = c < 0 ? Rational(-c) : c;
      if (a != 1 || i == 0) out << a;
      if (i > 0) out << (a != 1 ? "*" : "") << "x";
      if (i > 1) out << "^" << i;
      first = false;
    }
    return out.str();
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<Rational> coeffs_;
};

inline Rational falling_factorial(const Rational& x, int t) {
  if (t < 0) throw DomainError("falling factorial needs t >= 0");
  Rational result = 1;
  for (int i = 0; i < t; ++i) result *= x - i;
  return result;
}

inline Polynomial falling_factorial(const Polynomial& x, int t) {
  if (t < 0) throw DomainError("falling factorial needs t >= 0");
  Polynomial result(Rational(1));
  for (int i = 0; i < t; ++i) result *= x - Polynomial(Rational(i));
  return result;
}

/// Unique polynomial of degree < |points| through the given points
/// (Newton divided differences).
inline Polynomial interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (points[i].first == points[j].first) throw DomainError("interpolate: duplicate x value");
    }
  }
  std::vector<Rational> dd;
  for (const auto& p : points) dd.push_back(p.second);
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - level].first);
    }
  }
  Polynomial result;
  for (std::size_t i = n; i-- > 0;) {
    result = result * Polynomial::linear(points[i].first) + Polynomial(dd[i]);
  }
  return result;
}

/// Expands (y - t)_{2(r-k)} = Σ_i σ_i(t) · y^{2(r-k)-i}; returns σ_0..σ_{2(r-k)}.
inline std::vector<Polynomial> sigma_expand(int r, int k) {
  if (r < k || k < 0) throw DomainError("sigma_expand needs r >= k >= 0");
  const int d = 2 * (r - k);
  // by_y[j] = coefficient (a polynomial in t) of y^j.
  std::vector<Polynomial> by_y{Polynomial(Rational(1))};
  for (int j = 0; j < d; ++j) {
    // multiply by (y - t - j)
    const Polynomial shift(std::vector<Rational>{Rational(-j), Rational(-1)});
    std::vector<Polynomial> next(by_y.size() + 1);
    for (std::size_t i = 0; i < by_y.size(); ++i) {
      next[i + 1] += by_y[i];
      next[i] += by_y[i] * shift;
    }
    by_y = std::move(next);
  }
  std::vector<Polynomial> sigma;
  for (int i = 0; i <= d; ++i) sigma.push_back(by_y[static_cast<std::size_t>(d - i)]);
  return sigma;
}

/// Exact solution of a square nonsingular system by Gaussian elimination over Q.
inline std::vector<Rational> solve_rational(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw DomainError("solve_rational: dimension mismatch");
  for (const auto& row : a) {
    if (row.size() != n) throw DomainError("solve_rational: matrix is not square");
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw DomainError("solve_rational: singular matrix");
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      Rational f = a[row][col] / a[col][col];
      for (std::size_t j = col; j < n; ++j) a[row][j] -= f * a[col][j];
      b[row] -= f * b[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

/// Number of solutions x ∈ GF(2)^cols of a·x = rhs.
inline Count gf2_solution_count(const std::vector<std::vector<bool>>& a, const std::vector<bool>& rhs, int cols) {
  if (a.size() != rhs.size()) throw DomainError("gf2_solution_count: dimension mismatch");
  const std::size_t words = (static_cast<std::size_t>(cols) + 1 + 63) / 64;  // last bit column = rhs
  std::vector<std::vector<std::uint64_t>> rows;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (static_cast<int>(a[i].size()) != cols) throw DomainError("gf2_solution_count: ragged row");
    std::vector<std::uint64_t> row(words, 0);
    for (int j = 0; j < cols; ++j) {
      if (a[i][static_cast<std::size_t>(j)]) row[static_cast<std::size_t>(j) / 64] |= std::uint64_t(1) << (j % 64);
    }
    if (rhs[i]) row[static_cast<std::size_t>(cols) / 64] |= std::uint64_t(1) << (cols % 64);
    rows.push_back(std::move(row));
  }
  auto bit = [](const std::vector<std::uint64_t>& row, int j) {
    return (row[static_cast<std::size_t>(j) / 64] >> (j % 64)) & 1U;
  };
  std::size_t rank = 0;
  for (int col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && !bit(rows[pivot], col)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && bit(rows[r], col)) {
        for (std::size_t w = 0; w < words; ++w) rows[r][w] ^= rows[rank][w];
      }
    }
    ++rank;
  }
  // Inconsistent iff some zero row has rhs 1.
  for (std::size_t r = rank; r < rows.size(); ++r) {
    if (bit(rows[r], cols)) return 0;
  }
  return power(2, static_cast<unsigned>(cols - static_cast<int>(rank)));
}

// ---------------------------------------------------------------------------
// Moment recovery
//
// Unknowns a_{g,b} and, for each r, the polynomial
//   P_r(y) = Σ_{k=0}^{r} Σ_{t=0}^{k} a_{t,k-t} · C(r,k) · (y-t)_{2(r-k)}.
// Given P_0..P_R the moments I_{k,i} = Σ_t a_{t,k-t} t^i are computed in
// phases s = 2k+i, and a Vandermonde solve turns I_{k,0..k} into a_{t,k-t}.

/// Number of P_r inputs beyond P_0 needed to recover the row k: P_0..P_{R(k)}.
/// Phases run up to s = 3k and phase s uses nodes ceil(s/2)..s.
inline int recovery_inputs_needed(int k) { return 3 * k; }

/// Forward map: coefficients of P_r for given unknowns (a missing a_{g,b} is 0).
inline Polynomial moment_polynomial(const std::map<std::pair<int, int>, Rational>& a, int r) {
  Polynomial total;
  const Polynomial y = Polynomial::x();
  for (int k = 0; k <= r; ++k) {
    for (int t = 0; t <= k; ++t) {
      auto it = a.find({t, k - t});
      if (it == a.end() || it->second == 0) continue;
      total += falling_factorial(y - Polynomial(Rational(t)), 2 * (r - k)) * (it->second * Rational(binomial(r, k)));
    }
  }
  return total;
}

namespace detail {

inline Rational int_power(int base, int exponent) {
  if (exponent == 0) return 1;  // 0^0 = 1
  Rational r = 1;
  for (int i = 0; i < exponent; ++i) r *= base;
  return r;
}

/// Solves Σ_t a_t t^i = I_i for i = 0..n-1 (n = k+1 unknowns, t = 0..k).
inline std::vector<Rational> vandermonde_solve(const std::vector<Rational>& moments, int k) {
  std::vector<std::vector<Rational>> b(static_cast<std::size_t>(k + 1), std::vector<Rational>(static_cast<std::size_t>(k + 1)));
  std::vector<Rational> rhs(static_cast<std::size_t>(k + 1));
  for (int i = 0; i <= k; ++i) {
    for (int t = 0; t <= k; ++t) b[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)] = int_power(t, i);
    rhs[static_cast<std::size_t>(i)] = moments[static_cast<std::size_t>(i)];
  }
  return solve_rational(b, rhs);
}

}  // namespace detail

/// Recovers a_{0,k}, a_{1,k-1}, ..., a_{k,0} (index t holds a_{t,k-t}) from
/// the coefficient lists of P_0..P_R, R >= recovery_inputs_needed(k).
/// Throws IdentityViolation when the inputs are not of the required form.
inline std::vector<Rational> recover_unknowns(int k, const std::vector<Polynomial>& p) {
  if (k < 0) throw DomainError("recover_unknowns needs k >= 0");
  const int available = static_cast<int>(p.size()) - 1;
  if (available < recovery_inputs_needed(k)) {
    throw DomainError("recover_unknowns: need P_0..P_" + std::to_string(recovery_inputs_needed(k)));
  }
  for (int r = 0; r <= available; ++r) {
    if (p[static_cast<std::size_t>(r)].degree() > 2 * r) {
      throw IdentityViolation("recover_unknowns: P_" + std::to_string(r) + " has degree above 2r");
    }
  }
  if (p[0].degree() > 0) throw IdentityViolation("recover_unknowns: P_0 is not constant");

  const int top = 3 * k;
  // moments[k'][i] = I_{k',i}
  std::vector<std::vector<Rational>> moments(static_cast<std::size_t>(top / 2 + 1));
  auto get = [&](int kk, int i) -> const Rational& { return moments[static_cast<std::size_t>(kk)][static_cast<std::size_t>(i)]; };
  moments[0].push_back(p[0].coeff(0));
  std::map<std::pair<int, int>, std::vector<Polynomial>> sigma_cache;
  auto sigma = [&](int r, int kk) -> const std::vector<Polynomial>& {
    auto key = std::make_pair(r, kk);
    auto it = sigma_cache.find(key);
    if (it == sigma_cache.end()) it = sigma_cache.emplace(key, sigma_expand(r, kk)).first;
    return it->second;
  };

  for (int s = 1; s <= top; ++s) {
    // Unknowns this phase: I_{k', s-2k'} for k' = 0..floor(s/2).
    const int width = s / 2 + 1;
    bool solved = false;
    for (int shift = 0; !solved; ++shift) {
      const int first = (s + 1) / 2 + shift;
      if (first + width - 1 > available) {
        throw IdentityViolation("recover_unknowns: singular node system at phase " + std::to_string(s));
      }
      std::vector<std::vector<Rational>> a(static_cast<std::size_t>(width), std::vector<Rational>(static_cast<std::size_t>(width)));
      std::vector<Rational> rhs(static_cast<std::size_t>(width));
      for (int j = 0; j < width; ++j) {
        const int r = first + j;
        Rational known = 0;
        for (int kk = 0; kk < width; ++kk) {
          const auto& sig = sigma(r, kk);
          const Polynomial& poly = sig[static_cast<std::size_t>(s - 2 * kk)];
          Rational inner = 0;
          for (int i = 0; i < s - 2 * kk; ++i) inner += poly.coeff(i) * get(kk, i);
          known += Rational(binomial(r, kk)) * inner;
        }
        const Rational c = p[static_cast<std::size_t>(r)].coeff(2 * r - s);
        rhs[static_cast<std::size_t>(j)] = (s % 2 == 0 ? 1 : -1) * (c - known);
        for (int kk = 0; kk < width; ++kk) {
          a[static_cast<std::size_t>(j)][static_cast<std::size_t>(kk)] =
              Rational(binomial(2 * (r - kk), s - 2 * kk) * binomial(r, kk));
        }
      }
      try {
        auto sol = solve_rational(a, rhs);
        for (int kk = 0; kk < width; ++kk) {
          auto& row = moments[static_cast<std::size_t>(kk)];
          if (static_cast<int>(row.size()) != s - 2 * kk) {
            throw IdentityViolation("recover_unknowns: moment bookkeeping out of order");
          }
          row.push_back(sol[static_cast<std::size_t>(kk)]);
        }
        solved = true;
      } catch (const DomainError&) {
        // singular: move the nodes up
      }
    }
  }

  // Rows with more than kk+1 moments overdetermine their unknowns; they must agree.
  for (int kk = 0; kk < static_cast<int>(moments.size()); ++kk) {
    const auto& row = moments[static_cast<std::size_t>(kk)];
    if (static_cast<int>(row.size()) <= kk + 1) continue;
    auto a = detail::vandermonde_solve(row, kk);
    for (std::size_t i = static_cast<std::size_t>(kk) + 1; i < row.size(); ++i) {
      Rational v = 0;
      for (int t = 0; t <= kk; ++t) v += a[static_cast<std::size_t>(t)] * detail::int_power(t, static_cast<int>(i));
      if (v != row[i]) {
        throw IdentityViolation("recover_unknowns: inconsistent inputs (row " + std::to_string(kk) + ")");
      }
    }
  }
  return detail::vandermonde_solve(moments[static_cast<std::size_t>(k)], k);
}

}  // namespace edginj
