#include "qmval/mpoly.hpp"

#include <algorithm>
#include <numeric>

namespace qmval {

namespace {

void check_nvars(int nvars) {
  if (nvars <= 0) throw invalid_input("nvars must be positive");
}

std::int64_t degree_of(const Expvec& e) {
  return std::accumulate(e.begin(), e.end(), std::int64_t{0});
}

// Graded-lex: higher total degree first, ties broken by lex-larger vector.
bool grlex_greater(const Expvec& a, const Expvec& b) {
  std::int64_t da = degree_of(a), db = degree_of(b);
  if (da != db) return da > db;
  return a > b;
}

}  // namespace

MPoly::MPoly(int nvars) : nvars_(nvars) { check_nvars(nvars); }

MPoly MPoly::constant(int nvars, Rat value) {
  MPoly f(nvars);
  if (value != 0) f.terms_.emplace(Expvec(nvars, 0), std::move(value));
  return f;
}

MPoly MPoly::variable(int nvars, int index) {
  check_nvars(nvars);
  if (index < 0 || index >= nvars) throw invalid_input("variable index out of range");
  Expvec e(nvars, 0);
  e[index] = 1;
  return monomial(nvars, std::move(e), Rat(1));
}

MPoly MPoly::monomial(int nvars, Expvec exponents, Rat coefficient) {
  MPoly f(nvars);
  if (static_cast<int>(exponents.size()) != nvars)
    throw invalid_input("exponent vector length mismatch");
  for (std::int64_t e : exponents) {
    if (e < 0) throw invalid_input("negative exponent");
    if (e > kMaxExponent) throw invalid_input("exponent exceeds supported range");
  }
  if (coefficient != 0) f.terms_.emplace(std::move(exponents), std::move(coefficient));
  return f;
}

Rat MPoly::coefficient(const Expvec& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? Rat(0) : it->second;
}

Rat MPoly::constant_term() const { return coefficient(Expvec(nvars_, 0)); }

std::int64_t MPoly::order() const {
  if (terms_.empty()) throw invalid_input("order of the zero polynomial");
  std::int64_t best = -1;
  for (const auto& [e, c] : terms_) {
    std::int64_t d = degree_of(e);
    if (best < 0 || d < best) best = d;
  }
  return best;
}

std::int64_t MPoly::total_degree() const {
  if (terms_.empty()) throw invalid_input("degree of the zero polynomial");
  std::int64_t best = 0;
  for (const auto& [e, c] : terms_) best = std::max(best, degree_of(e));
  return best;
}

void MPoly::add_term(const Expvec& exponents, const Rat& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.emplace(exponents, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly MPoly::operator-() const {
  MPoly out(nvars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, Rat(-c));
  return out;
}

MPoly operator+(const MPoly& f, const MPoly& g) {
  if (f.nvars_ != g.nvars_) throw invalid_input("nvars mismatch");
  MPoly out = f;
  for (const auto& [e, c] : g.terms_) out.add_term(e, c);
  return out;
}

MPoly operator-(const MPoly& f, const MPoly& g) { return f + (-g); }

MPoly operator*(const MPoly& f, const MPoly& g) {
  if (f.nvars_ != g.nvars_) throw invalid_input("nvars mismatch");
  MPoly out(f.nvars_);
  Expvec e(f.nvars_);
  for (const auto& [ef, cf] : f.terms_) {
    for (const auto& [eg, cg] : g.terms_) {
      for (int i = 0; i < f.nvars_; ++i) {
        e[i] = ef[i] + eg[i];
        if (e[i] > MPoly::kMaxExponent)
          throw invalid_input("exponent exceeds supported range in product");
      }
      out.add_term(e, Rat(cf * cg));
    }
  }
  return out;
}

MPoly operator*(const Rat& c, const MPoly& f) {
  MPoly out(f.nvars_);
  if (c == 0) return out;
  for (const auto& [e, cf] : f.terms_) out.terms_.emplace(e, Rat(c * cf));
  return out;
}

MPoly MPoly::pow(std::int64_t k) const {
  if (k < 0) throw invalid_input("negative exponent");
  MPoly base = *this;
  MPoly out = MPoly::constant(nvars_, Rat(1));
  while (k > 0) {
    if (k & 1) out = out * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return out;
}

std::string MPoly::to_string(const std::vector<std::string>& vars) const {
  if (static_cast<int>(vars.size()) != nvars_)
    throw invalid_input("variable list length mismatch");
  if (terms_.empty()) return "0";

  std::vector<const std::pair<const Expvec, Rat>*> ordered;
  ordered.reserve(terms_.size());
  for (const auto& term : terms_) ordered.push_back(&term);
  std::sort(ordered.begin(), ordered.end(),
            [](auto* a, auto* b) { return grlex_greater(a->first, b->first); });

  std::string out;
  bool first = true;
  for (const auto* term : ordered) {
    const auto& [e, c] = *term;
    bool negative = c < 0;
    Rat abs_c = negative ? Rat(-c) : c;

    if (first) {
      if (negative) out += '-';
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }

    // A leading unary '-' would bind to the first atom, inside any '^'
    // ("-x^2" parses as (-x)^2), so the head term spells out its
    // coefficient instead.
    bool head_negative = negative && out.size() == 1;
    std::vector<std::string> pieces;
    if (abs_c != 1 || degree_of(e) == 0 || head_negative)
      pieces.push_back(rat_to_string(abs_c));
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      std::string piece = vars[i];
      if (e[i] > 1) piece += '^' + std::to_string(e[i]);
      pieces.push_back(std::move(piece));
    }
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      if (i > 0) out += '*';
      out += pieces[i];
    }
  }
  return out;
}

MPoly subst_linear(const MPoly& f, const RatMatrix& m) {
  const int n = f.nvars();
  if (static_cast<int>(m.size()) != n)
    throw invalid_input("substitution matrix dimension mismatch");
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != n)
      throw invalid_input("substitution matrix is not square");

  // Gaussian elimination for the invertibility check.
  RatMatrix work = m;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int row = col; row < n; ++row) {
      if (work[row][col] != 0) {
        pivot = row;
        break;
      }
    }
    if (pivot < 0) throw invalid_input("singular substitution matrix");
    std::swap(work[col], work[pivot]);
    for (int row = col + 1; row < n; ++row) {
      if (work[row][col] == 0) continue;
      Rat factor = work[row][col] / work[col][col];
      for (int j = col; j < n; ++j) work[row][j] -= factor * work[col][j];
    }
  }

  std::vector<MPoly> images;
  images.reserve(n);
  for (int i = 0; i < n; ++i) {
    MPoly image(n);
    for (int j = 0; j < n; ++j) {
      if (m[i][j] != 0) image = image + m[i][j] * MPoly::variable(n, j);
    }
    images.push_back(std::move(image));
  }

  MPoly out(n);
  for (const auto& [e, c] : f.terms()) {
    MPoly term = MPoly::constant(n, c);
    for (int i = 0; i < n; ++i) {
      if (e[i] > 0) term = term * images[i].pow(e[i]);
    }
    out = out + term;
  }
  return out;
}

}  // namespace qmval
