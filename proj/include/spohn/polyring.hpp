#ifndef SPOHN_POLYRING_HPP
#define SPOHN_POLYRING_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

namespace spohn {

using Rational = mpq_class;
using Integer = mpz_class;

Rational rat(long num, long den = 1);
Rational rat_from_string(const std::string& text);
double to_double(const Rational& r);

// Fixed, ordered set of variable names, optionally grouped into blocks.
// Blocks model the factors of a product of projective spaces; a polynomial
// multihomogeneous per block has a well-defined multidegree.
class VarTable {
 public:
  explicit VarTable(std::vector<std::string> names);
  VarTable(std::vector<std::string> names, std::vector<int> block_of_var,
           int block_count);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  int index_of(const std::string& name) const;
  std::optional<int> find(const std::string& name) const;

  bool has_blocks() const { return block_count_ > 0; }
  int block_count() const { return block_count_; }
  int block_of(int var) const { return block_of_var_.at(var); }
  std::vector<int> block_vars(int block) const;

  bool same_as(const VarTable& other) const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
  std::vector<int> block_of_var_;
  int block_count_ = 0;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

using ExpVec = std::vector<uint16_t>;

int total_degree(const ExpVec& e);
// Graded lexicographic: higher total degree first, ties broken by the
// lexicographically larger exponent vector. Returns <0, 0, >0 like memcmp
// with "a before b in canonical order" mapped to negative.
int grlex_compare(const ExpVec& a, const ExpVec& b);

struct Term {
  ExpVec exps;
  Rational coef;
};

// Sparse exact-rational multivariate polynomial. Terms are kept in canonical
// (graded-lex descending) order; no zero coefficients are stored.
class Polynomial {
 public:
  Polynomial() = default;
  static Polynomial zero(VarTablePtr tab);
  static Polynomial constant(VarTablePtr tab, const Rational& c);
  static Polynomial variable(VarTablePtr tab, int var);
  static Polynomial monomial(VarTablePtr tab, const ExpVec& e, const Rational& c);
  // Builds from unsorted (possibly duplicated) terms.
  static Polynomial from_terms(VarTablePtr tab, std::vector<Term> terms);

  const VarTablePtr& table() const { return tab_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  int num_terms() const { return static_cast<int>(terms_.size()); }
  int degree() const;  // total degree, -1 for the zero polynomial
  const Term& leading_term() const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& q) const;
  Polynomial operator-(const Polynomial& q) const;
  Polynomial operator*(const Polynomial& q) const;
  Polynomial operator*(const Rational& c) const;
  bool operator==(const Polynomial& q) const;
  bool operator!=(const Polynomial& q) const { return !(*this == q); }

  Polynomial pow(int k) const;

  Rational evaluate(const std::map<std::string, Rational>& point) const;
  Rational evaluate(const std::vector<Rational>& point) const;
  double evaluate(const std::vector<double>& point) const;

  // Exact composition; the assignment must cover every variable that occurs
  // in this polynomial, and all images must share one target table.
  Polynomial substitute(const std::vector<Polynomial>& images) const;
  Polynomial substitute(const std::map<std::string, Polynomial>& images) const;

  // Exact quotient when q divides p (multivariate leading-term division with
  // a remainder-zero check); nullopt otherwise.
  std::optional<Polynomial> divide_exact(const Polynomial& q) const;

  // Degree in each block; requires block structure and multihomogeneity.
  std::vector<int> multidegree() const;

  Polynomial partial_derivative(int var) const;

  // Scales to primitive integer form with positive leading coefficient.
  // If scale is non-null it receives c with *this == c * primitive.
  Polynomial primitive(Rational* scale = nullptr) const;

  // Proportional by a nonzero rational constant.
  bool proportional_to(const Polynomial& q) const;

  std::string to_string() const;
  static Polynomial parse(VarTablePtr tab, const std::string& text);

 private:
  VarTablePtr tab_;
  std::vector<Term> terms_;

  void check_same_table(const Polynomial& q) const;
};

struct Matrix2x2 {
  Polynomial a, b, c, d;  // row-major: [a b; c d]
};

Polynomial det2(const Matrix2x2& m);

}  // namespace spohn

#endif
