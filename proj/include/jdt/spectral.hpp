#pragma once

// Young's seminormal representation of the symmetric group in exact rational
// arithmetic, Jucys-Murphy elements, and the conditioned moment identity
//   E[W(u_a, ..., u_b) | u_a < ... < u_b] = tr(P W(Z_a..Z_b)) / tr(P)
// with P the symmetrizer of the permutations of {a, ..., b}.

#include <cctype>
#include <cstddef>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "jdt/errors.hpp"
#include "jdt/tableau.hpp"

namespace jdt {

using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(r);
  if (boost::multiprecision::denominator(r) != 1)
    os << '/' << boost::multiprecision::denominator(r);
  return os.str();
}

// Dense square matrix over Q, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

  static RationalMatrix identity(std::size_t dim) {
    RationalMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t dim() const { return dim_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * dim_ + c];
  }

  bool is_diagonal() const {
    for (std::size_t r = 0; r < dim_; ++r)
      for (std::size_t c = 0; c < dim_; ++c)
        if (r != c && (*this)(r, c) != 0) return false;
    return true;
  }

  std::vector<Rational> diagonal() const {
    std::vector<Rational> d(dim_);
    for (std::size_t i = 0; i < dim_; ++i) d[i] = (*this)(i, i);
    return d;
  }

  Rational trace() const {
    Rational t = 0;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
  }

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    RationalMatrix out(a.dim_);
    for (std::size_t i = 0; i < a.dim_; ++i)
      for (std::size_t k = 0; k < a.dim_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < a.dim_; ++j)
          if (b(k, j) != 0) out(i, j) += a(i, k) * b(k, j);
      }
    return out;
  }

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.dim_ == b.dim_ && a.data_ == b.data_;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<Rational> data_;
};

// Sparse vector in the tableau basis.
using SparseVector = std::map<std::size_t, Rational>;

inline constexpr int kModuleMaxSize = 10;

// Basis e_T indexed by the standard tableaux of a shape. In this seminormal
// convention, with d = u_{s+1}(T) - u_s(T) for the generator (s, s+1):
//   s+1 right of s in one row     -> s e_T = e_T
//   s+1 above s in one column     -> s e_T = -e_T
//   otherwise, T' = T with s and s+1 swapped:
//     s e_T = (1/d) e_T + c e_T',  c = 1 if s+1 lies in a higher row of T,
//                                  c = 1 - 1/d^2 otherwise.
class SeminormalModule {
 public:
  explicit SeminormalModule(const YoungDiagram& shape) : shape_(shape) {
    if (shape.size() > kModuleMaxSize)
      throw InputError("seminormal module is limited to " +
                       std::to_string(kModuleMaxSize) + " boxes");
    basis_ = enumerate_syt(shape);
    for (std::size_t i = 0; i < basis_.size(); ++i) index_[basis_[i].reading_word()] = i;
    const int n = shape.size();
    generators_.resize(static_cast<std::size_t>(std::max(0, n - 1)));
    for (int s = 1; s < n; ++s) {
      auto& columns = generators_[static_cast<std::size_t>(s - 1)];
      columns.resize(basis_.size());
      for (std::size_t t = 0; t < basis_.size(); ++t) columns[t] = generator_column(s, t);
    }
  }

  const YoungDiagram& shape() const { return shape_; }
  const std::vector<StandardTableau>& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }
  int degree() const { return shape_.size(); }

  std::size_t index_of(const StandardTableau& t) const {
    auto it = index_.find(t.reading_word());
    if (it == index_.end()) throw InputError("tableau is not a basis element");
    return it->second;
  }

  // Image of a vector under the generator (s, s+1).
  SparseVector apply_generator(int s, const SparseVector& v) const {
    check_generator(s);
    const auto& columns = generators_[static_cast<std::size_t>(s - 1)];
    SparseVector out;
    for (const auto& [t, coef] : v) {
      for (const auto& [row, entry] : columns[t]) {
        auto& slot = out[row];
        slot += coef * entry;
        if (slot == 0) out.erase(row);
      }
    }
    return out;
  }

  // Applies generators right to left: word {s1, s2} acts as s1 * s2.
  SparseVector apply_word(const std::vector<int>& word, SparseVector v) const {
    for (auto it = word.rbegin(); it != word.rend(); ++it) v = apply_generator(*it, v);
    return v;
  }

  RationalMatrix word_matrix(const std::vector<int>& word) const {
    RationalMatrix m(dim());
    for (std::size_t t = 0; t < dim(); ++t) {
      const auto image = apply_word(word, SparseVector{{t, Rational(1)}});
      for (const auto& [row, entry] : image) m(row, t) = entry;
    }
    return m;
  }

  RationalMatrix generator_matrix(int s) const { return word_matrix({s}); }

 private:
  void check_generator(int s) const {
    if (s < 1 || s >= degree()) throw InputError("generator index out of range");
  }

  std::vector<std::pair<std::size_t, Rational>> generator_column(int s, std::size_t t) const {
    const auto& tab = basis_[t];
    const Position a = tab.position_of(s);
    const Position b = tab.position_of(s + 1);
    if (a.y == b.y) return {{t, Rational(1)}};
    if (a.x == b.x) return {{t, Rational(-1)}};
    const Rational d = b.u() - a.u();
    auto rows = tab.rows();
    std::swap(rows[static_cast<std::size_t>(a.y - 1)][static_cast<std::size_t>(a.x - 1)],
              rows[static_cast<std::size_t>(b.y - 1)][static_cast<std::size_t>(b.x - 1)]);
    const std::size_t swapped = index_of(StandardTableau(std::move(rows)));
    const Rational c = b.y > a.y ? Rational(1) : Rational(1) - 1 / (d * d);
    return {{t, 1 / d}, {swapped, c}};
  }

  YoungDiagram shape_;
  std::vector<StandardTableau> basis_;
  std::map<std::vector<int>, std::size_t> index_;
  // generators_[s-1][t] lists the nonzero entries of column t.
  std::vector<std::vector<std::vector<std::pair<std::size_t, Rational>>>> generators_;
};

inline SeminormalModule build_module(const YoungDiagram& shape) {
  return SeminormalModule(shape);
}

// Word of adjacent generators for the transposition (i, j), i < j:
// s_i s_{i+1} ... s_{j-2} s_{j-1} s_{j-2} ... s_i.
inline std::vector<int> transposition_word(int i, int j) {
  if (i >= j) throw InputError("transposition_word needs i < j");
  std::vector<int> w;
  for (int s = i; s < j; ++s) w.push_back(s);
  for (int s = j - 2; s >= i; --s) w.push_back(s);
  return w;
}

// Exact Coxeter relations: s^2 = 1, distant generators commute, braid moves.
// Returns a description of the first failure.
inline std::optional<std::string> check_coxeter_relations(const SeminormalModule& m) {
  const int n = m.degree();
  for (std::size_t t = 0; t < m.dim(); ++t) {
    const SparseVector e{{t, Rational(1)}};
    for (int s = 1; s < n; ++s) {
      if (m.apply_word({s, s}, e) != e)
        return "generator " + std::to_string(s) + " does not square to identity";
      for (int r = s + 2; r < n; ++r)
        if (m.apply_word({s, r}, e) != m.apply_word({r, s}, e))
          return "generators " + std::to_string(s) + "," + std::to_string(r) +
                 " do not commute";
      if (s + 1 < n && m.apply_word({s, s + 1, s}, e) != m.apply_word({s + 1, s, s + 1}, e))
        return "braid relation fails at " + std::to_string(s);
    }
  }
  return std::nullopt;
}

// Z_s = sum_{i<s} (i, s), each transposition expanded into generators.
inline RationalMatrix jm_matrix(const SeminormalModule& m, int s) {
  if (s < 1 || s > m.degree()) throw InputError("jm_matrix: index out of range");
  RationalMatrix z(m.dim());
  for (std::size_t t = 0; t < m.dim(); ++t) {
    SparseVector column;
    for (int i = 1; i < s; ++i) {
      for (const auto& [row, entry] :
           m.apply_word(transposition_word(i, s), SparseVector{{t, Rational(1)}}))
        column[row] += entry;
    }
    for (const auto& [row, entry] : column) z(row, t) = entry;
  }
  return z;
}

// Symmetric polynomial written as an integer combination of products of power
// sums p_r and elementary polynomials e_r, e.g. "p1", "p1^2", "2*e2 - p2".
class SymmetricPolynomial {
 public:
  struct Factor {
    char kind;  // 'p' or 'e'
    int degree;
    int power;
  };
  struct Term {
    long coefficient;
    std::vector<Factor> factors;
  };

  SymmetricPolynomial() = default;
  explicit SymmetricPolynomial(std::vector<Term> terms) : terms_(std::move(terms)) {}

  static SymmetricPolynomial parse(const std::string& text) {
    std::string s;
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw InputError("empty polynomial");
    std::size_t pos = 0;
    auto read_int = [&]() {
      const std::size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (start == pos) throw InputError("polynomial: expected a number in '" + text + "'");
      return std::stol(s.substr(start, pos - start));
    };
    std::vector<Term> terms;
    while (pos < s.size()) {
      long sign = 1;
      if (s[pos] == '+' || s[pos] == '-') {
        sign = s[pos] == '-' ? -1 : 1;
        ++pos;
      } else if (!terms.empty()) {
        throw InputError("polynomial: expected '+' or '-' in '" + text + "'");
      }
      Term term{sign, {}};
      bool first = true;
      for (;;) {
        if (pos >= s.size()) throw InputError("polynomial: dangling operator");
        if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
          if (!first) throw InputError("polynomial: coefficient must lead a term");
          term.coefficient *= read_int();
        } else if (s[pos] == 'p' || s[pos] == 'e') {
          const char kind = s[pos++];
          const int degree = static_cast<int>(read_int());
          if (degree < 1) throw InputError("polynomial: degree must be positive");
          int power = 1;
          if (pos < s.size() && s[pos] == '^') {
            ++pos;
            power = static_cast<int>(read_int());
          }
          term.factors.push_back({kind, degree, power});
        } else {
          throw InputError("polynomial: unexpected character in '" + text + "'");
        }
        first = false;
        if (pos < s.size() && s[pos] == '*') {
          ++pos;
          continue;
        }
        break;
      }
      terms.push_back(std::move(term));
    }
    return SymmetricPolynomial(std::move(terms));
  }

  const std::vector<Term>& terms() const { return terms_; }

  Rational evaluate(const std::vector<Rational>& xs) const {
    Rational total = 0;
    for (const auto& term : terms_) {
      Rational value = term.coefficient;
      for (const auto& f : term.factors) {
        const Rational base = f.kind == 'p' ? power_sum(xs, f.degree) : elementary(xs, f.degree);
        Rational raised = 1;
        for (int i = 0; i < f.power; ++i) raised *= base;
        value *= raised;
      }
      total += value;
    }
    return total;
  }

  std::string to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      const auto& t = terms_[i];
      if (i > 0) os << (t.coefficient < 0 ? " - " : " + ");
      else if (t.coefficient < 0) os << '-';
      const long mag = t.coefficient < 0 ? -t.coefficient : t.coefficient;
      if (mag != 1 || t.factors.empty()) os << mag << (t.factors.empty() ? "" : "*");
      for (std::size_t j = 0; j < t.factors.size(); ++j) {
        const auto& f = t.factors[j];
        os << (j ? "*" : "") << f.kind << f.degree;
        if (f.power != 1) os << '^' << f.power;
      }
    }
    return os.str();
  }

 private:
  static Rational power_sum(const std::vector<Rational>& xs, int r) {
    Rational s = 0;
    for (const auto& x : xs) {
      Rational v = 1;
      for (int i = 0; i < r; ++i) v *= x;
      s += v;
    }
    return s;
  }

  static Rational elementary(const std::vector<Rational>& xs, int r) {
    // e[j] accumulates e_j of the prefix.
    std::vector<Rational> e(static_cast<std::size_t>(r) + 1);
    e[0] = 1;
    for (const auto& x : xs)
      for (int j = r; j >= 1; --j)
        e[static_cast<std::size_t>(j)] += e[static_cast<std::size_t>(j - 1)] * x;
    return e[static_cast<std::size_t>(r)];
  }

  std::vector<Term> terms_;
};

struct ExpvalueCheck {
  Rational lhs;
  Rational rhs;
  bool equal = false;
  std::size_t conditioned = 0;  // tableaux with u_a < ... < u_b
};

inline constexpr int kExpvalueMaxSize = 9;

namespace detail {

// Diagonal of the symmetrizer of the permutations of {a..b}. Group elements
// are generated breadth-first from the identity by left multiplication with
// s_a..s_{b-1}; each element's action on e_t is derived from its parent's.
inline std::vector<Rational> symmetrizer_diagonal(const SeminormalModule& m, int a, int b) {
  const int k = b - a + 1;
  std::vector<Rational> diag(m.dim());
  Rational order = 1;
  for (int i = 2; i <= k; ++i) order *= i;
  for (std::size_t t = 0; t < m.dim(); ++t) {
    std::vector<int> ident(static_cast<std::size_t>(k));
    std::iota(ident.begin(), ident.end(), 0);
    std::map<std::vector<int>, SparseVector> seen{{ident, SparseVector{{t, Rational(1)}}}};
    std::vector<std::vector<int>> frontier{ident};
    while (!frontier.empty()) {
      std::vector<std::vector<int>> next;
      for (const auto& perm : frontier) {
        const SparseVector& image = seen.at(perm);
        for (int s = a; s < b; ++s) {
          // Left multiplication by (s, s+1) swaps those values in one-line form.
          auto child = perm;
          for (int& v : child) {
            if (v == s - a) v = s + 1 - a;
            else if (v == s + 1 - a) v = s - a;
          }
          if (seen.count(child)) continue;
          seen.emplace(child, m.apply_generator(s, image));
          next.push_back(std::move(child));
        }
      }
      frontier = std::move(next);
    }
    Rational sum = 0;
    for (const auto& [perm, image] : seen) {
      auto it = image.find(t);
      if (it != image.end()) sum += it->second;
    }
    diag[t] = sum / order;
  }
  return diag;
}

}  // namespace detail

inline ExpvalueCheck lemma_expvalue_check(const YoungDiagram& shape, int a, int b,
                                          const SymmetricPolynomial& w) {
  if (shape.size() > kExpvalueMaxSize)
    throw InputError("lemma_expvalue_check is limited to " +
                     std::to_string(kExpvalueMaxSize) + " boxes");
  if (a < 1 || b < a || b > shape.size()) throw InputError("need 1 <= a <= b <= |shape|");
  const auto module = build_module(shape);
  const auto& basis = module.basis();

  ExpvalueCheck out;
  Rational lhs_sum = 0;
  for (const auto& t : basis) {
    bool ordered = true;
    for (int s = a; s < b; ++s)
      if (t.position_of(s).u() >= t.position_of(s + 1).u()) ordered = false;
    if (!ordered) continue;
    std::vector<Rational> us;
    for (int s = a; s <= b; ++s) us.emplace_back(t.position_of(s).u());
    lhs_sum += w.evaluate(us);
    ++out.conditioned;
  }
  if (out.conditioned == 0) throw InputError("no tableau satisfies u_a < ... < u_b");
  out.lhs = lhs_sum / static_cast<long>(out.conditioned);

  // W of commuting diagonal matrices is diagonal with W applied entrywise.
  std::vector<std::vector<Rational>> jm_diagonals;
  for (int s = a; s <= b; ++s) {
    const auto z = jm_matrix(module, s);
    if (!z.is_diagonal()) throw Error("Jucys-Murphy matrix is not diagonal");
    jm_diagonals.push_back(z.diagonal());
  }
  const auto p_diag = detail::symmetrizer_diagonal(module, a, b);
  Rational num = 0;
  Rational den = 0;
  for (std::size_t t = 0; t < module.dim(); ++t) {
    std::vector<Rational> eigen;
    for (const auto& d : jm_diagonals) eigen.push_back(d[t]);
    num += p_diag[t] * w.evaluate(eigen);
    den += p_diag[t];
  }
  out.rhs = num / den;
  out.equal = out.lhs == out.rhs;
  return out;
}

}  // namespace jdt
