#include "spohn/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace spohn {

Rational rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational rat_from_string(const std::string& text) {
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  // Base 10 always; the default GMP string constructors auto-detect octal
  // and hex prefixes, which is wrong for "025"-style decimals.
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    Rational r(s, 10);
    r.canonicalize();
    return r;
  }
  auto dot = s.find('.');
  if (dot == std::string::npos) {
    Rational r(s, 10);
    r.canonicalize();
    return r;
  }
  // Decimal literal: digits.digits parsed as an exact rational.
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  size_t frac_len = s.size() - dot - 1;
  if (digits.empty() || digits == "-" || digits == "+")
    throw std::invalid_argument("bad decimal literal: " + text);
  Integer num(digits, 10);
  Integer den = 1;
  for (size_t i = 0; i < frac_len; ++i) den *= 10;
  Rational r(num, den);
  r.canonicalize();
  return r;
}

double to_double(const Rational& r) { return r.get_d(); }

VarTable::VarTable(std::vector<std::string> names) : names_(std::move(names)) {
  for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
    if (!index_.emplace(names_[i], i).second)
      throw std::invalid_argument("duplicate variable name: " + names_[i]);
  }
}

VarTable::VarTable(std::vector<std::string> names, std::vector<int> block_of_var, int block_count)
    : VarTable(std::move(names)) {
  if (block_of_var.size() != names_.size())
    throw std::invalid_argument("block assignment does not cover all variables");
  for (int b : block_of_var)
    if (b < 0 || b >= block_count) throw std::invalid_argument("block index out of range");
  block_of_var_ = std::move(block_of_var);
  block_count_ = block_count;
}

int VarTable::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw std::invalid_argument("unknown variable: " + name);
  return it->second;
}

std::optional<int> VarTable::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<int> VarTable::block_vars(int block) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (block_of_var_[i] == block) out.push_back(i);
  return out;
}

bool VarTable::same_as(const VarTable& other) const {
  if (this == &other) return true;
  return names_ == other.names_ && block_of_var_ == other.block_of_var_;
}

int total_degree(const ExpVec& e) {
  int d = 0;
  for (auto x : e) d += x;
  return d;
}

int grlex_compare(const ExpVec& a, const ExpVec& b) {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db ? -1 : 1;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  return 0;
}

namespace {
struct GrlexLess {
  bool operator()(const ExpVec& a, const ExpVec& b) const { return grlex_compare(a, b) < 0; }
};
}  // namespace

Polynomial Polynomial::zero(VarTablePtr tab) {
  Polynomial p;
  p.tab_ = std::move(tab);
  return p;
}

Polynomial Polynomial::constant(VarTablePtr tab, const Rational& c) {
  Polynomial p = zero(std::move(tab));
  if (c != 0) p.terms_.push_back({ExpVec(p.tab_->size(), 0), c});
  return p;
}

Polynomial Polynomial::variable(VarTablePtr tab, int var) {
  Polynomial p = zero(std::move(tab));
  if (var < 0 || var >= p.tab_->size()) throw std::invalid_argument("variable index out of range");
  ExpVec e(p.tab_->size(), 0);
  e[var] = 1;
  p.terms_.push_back({std::move(e), Rational(1)});
  return p;
}

Polynomial Polynomial::monomial(VarTablePtr tab, const ExpVec& e, const Rational& c) {
  Polynomial p = zero(std::move(tab));
  if (static_cast<int>(e.size()) != p.tab_->size())
    throw std::invalid_argument("exponent vector length mismatch");
  if (c != 0) p.terms_.push_back({e, c});
  return p;
}

Polynomial Polynomial::from_terms(VarTablePtr tab, std::vector<Term> terms) {
  std::map<ExpVec, Rational, GrlexLess> acc;
  for (auto& t : terms) {
    if (static_cast<int>(t.exps.size()) != tab->size())
      throw std::invalid_argument("exponent vector length mismatch");
    acc[t.exps] += t.coef;
  }
  Polynomial p = zero(std::move(tab));
  for (auto& [e, c] : acc)
    if (c != 0) p.terms_.push_back({e, c});
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree(terms_[0].exps) == 0);
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  return total_degree(terms_.front().exps);
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
  return terms_.front();
}

void Polynomial::check_same_table(const Polynomial& q) const {
  if (!tab_ || !q.tab_ || !tab_->same_as(*q.tab_))
    throw std::invalid_argument("polynomials over different variable tables");
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& q) const {
  check_same_table(q);
  Polynomial r = zero(tab_);
  r.terms_.reserve(terms_.size() + q.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < q.terms_.size()) {
    int c = grlex_compare(terms_[i].exps, q.terms_[j].exps);
    if (c < 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c > 0) {
      r.terms_.push_back(q.terms_[j++]);
    } else {
      Rational s = terms_[i].coef + q.terms_[j].coef;
      if (s != 0) r.terms_.push_back({terms_[i].exps, s});
      ++i, ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < q.terms_.size(); ++j) r.terms_.push_back(q.terms_[j]);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& q) const { return *this + (-q); }

Polynomial Polynomial::operator*(const Polynomial& q) const {
  check_same_table(q);
  std::map<ExpVec, Rational, GrlexLess> acc;
  ExpVec e(tab_->size());
  for (const auto& t : terms_) {
    for (const auto& u : q.terms_) {
      for (int k = 0; k < tab_->size(); ++k) e[k] = static_cast<uint16_t>(t.exps[k] + u.exps[k]);
      acc[e] += t.coef * u.coef;
    }
  }
  Polynomial r = zero(tab_);
  for (auto& [ex, c] : acc)
    if (c != 0) r.terms_.push_back({ex, c});
  return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  if (c == 0) return zero(tab_);
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coef *= c;
  return r;
}

bool Polynomial::operator==(const Polynomial& q) const {
  if (!tab_ || !q.tab_) return terms_.empty() && q.terms_.empty();
  if (!tab_->same_as(*q.tab_)) return false;
  if (terms_.size() != q.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].exps != q.terms_[i].exps || terms_[i].coef != q.terms_[i].coef) return false;
  return true;
}

Polynomial Polynomial::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative power");
  Polynomial r = constant(tab_, 1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

Rational Polynomial::evaluate(const std::map<std::string, Rational>& point) const {
  std::vector<Rational> vals(tab_->size());
  std::vector<bool> seen(tab_->size(), false);
  for (auto& [name, v] : point) {
    if (auto idx = tab_->find(name)) {
      vals[*idx] = v;
      seen[*idx] = true;
    }
  }
  for (const auto& t : terms_)
    for (int k = 0; k < tab_->size(); ++k)
      if (t.exps[k] > 0 && !seen[k])
        throw std::invalid_argument("missing assignment for variable " + tab_->name(k));
  return evaluate(vals);
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != tab_->size())
    throw std::invalid_argument("point dimension mismatch");
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational m = t.coef;
    for (int k = 0; k < tab_->size(); ++k)
      for (int e = 0; e < t.exps[k]; ++e) m *= point[k];
    sum += m;
  }
  return sum;
}

double Polynomial::evaluate(const std::vector<double>& point) const {
  if (static_cast<int>(point.size()) != tab_->size())
    throw std::invalid_argument("point dimension mismatch");
  double sum = 0;
  for (const auto& t : terms_) {
    double m = to_double(t.coef);
    for (int k = 0; k < tab_->size(); ++k)
      for (int e = 0; e < t.exps[k]; ++e) m *= point[k];
    sum += m;
  }
  return sum;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  if (static_cast<int>(images.size()) != tab_->size())
    throw std::invalid_argument("substitution must assign every variable");
  VarTablePtr target;
  for (const auto& im : images) {
    if (!im.table()) continue;
    if (!target) target = im.table();
    else if (!target->same_as(*im.table()))
      throw std::invalid_argument("substitution images over different tables");
  }
  if (!target) throw std::invalid_argument("substitution images lack a variable table");

  // Memoized powers of each image, far cheaper than repeated pow().
  std::vector<std::vector<Polynomial>> powers(tab_->size());
  auto power = [&](int var, int e) -> const Polynomial& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[var]);
    return cache[e];
  };

  Polynomial sum = Polynomial::zero(target);
  for (const auto& t : terms_) {
    Polynomial m = Polynomial::constant(target, t.coef);
    for (int k = 0; k < tab_->size(); ++k)
      if (t.exps[k] > 0) m = m * power(k, t.exps[k]);
    sum = sum + m;
  }
  return sum;
}

Polynomial Polynomial::substitute(const std::map<std::string, Polynomial>& images) const {
  VarTablePtr target;
  for (auto& [name, im] : images)
    if (im.table()) { target = im.table(); break; }
  if (!target) throw std::invalid_argument("substitution images lack a variable table");
  std::vector<Polynomial> vec(tab_->size(), Polynomial::zero(target));
  std::vector<bool> assigned(tab_->size(), false);
  for (auto& [name, im] : images) {
    if (auto idx = tab_->find(name)) {
      vec[*idx] = im;
      assigned[*idx] = true;
    }
  }
  for (const auto& t : terms_)
    for (int k = 0; k < tab_->size(); ++k)
      if (t.exps[k] > 0 && !assigned[k])
        throw std::invalid_argument("missing substitution for variable " + tab_->name(k));
  return substitute(vec);
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& q) const {
  check_same_table(q);
  if (q.is_zero()) throw std::invalid_argument("division by zero polynomial");
  Polynomial rem = *this;
  Polynomial quot = zero(tab_);
  const Term& lq = q.leading_term();
  while (!rem.is_zero()) {
    const Term& lr = rem.leading_term();
    ExpVec e(tab_->size());
    bool divisible = true;
    for (int k = 0; k < tab_->size(); ++k) {
      if (lr.exps[k] < lq.exps[k]) { divisible = false; break; }
      e[k] = static_cast<uint16_t>(lr.exps[k] - lq.exps[k]);
    }
    if (!divisible) return std::nullopt;
    Polynomial m = monomial(tab_, e, lr.coef / lq.coef);
    quot = quot + m;
    rem = rem - m * q;
  }
  return quot;
}

std::vector<int> Polynomial::multidegree() const {
  if (!tab_->has_blocks()) throw std::domain_error("variable table has no block structure");
  std::vector<int> deg(tab_->block_count(), -1);
  for (const auto& t : terms_) {
    std::vector<int> d(tab_->block_count(), 0);
    for (int k = 0; k < tab_->size(); ++k) d[tab_->block_of(k)] += t.exps[k];
    for (int b = 0; b < tab_->block_count(); ++b) {
      if (deg[b] == -1) deg[b] = d[b];
      else if (deg[b] != d[b])
        throw std::domain_error("polynomial not homogeneous in block " + std::to_string(b));
    }
  }
  if (deg.empty() || deg[0] == -1) std::fill(deg.begin(), deg.end(), 0);
  return deg;
}

Polynomial Polynomial::partial_derivative(int var) const {
  if (var < 0 || var >= tab_->size()) throw std::invalid_argument("variable index out of range");
  Polynomial r = zero(tab_);
  for (const auto& t : terms_) {
    if (t.exps[var] == 0) continue;
    Term u = t;
    u.coef *= static_cast<long>(t.exps[var]);
    u.exps[var] -= 1;
    r.terms_.push_back(std::move(u));
  }
  std::sort(r.terms_.begin(), r.terms_.end(),
            [](const Term& a, const Term& b) { return grlex_compare(a.exps, b.exps) < 0; });
  return r;
}

Polynomial Polynomial::primitive(Rational* scale) const {
  if (is_zero()) {
    if (scale) *scale = 1;
    return *this;
  }
  Integer num_gcd = 0, den_lcm = 1;
  for (const auto& t : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coef.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coef.get_den().get_mpz_t());
  }
  Rational c(num_gcd, den_lcm);
  c.canonicalize();
  if (leading_term().coef < 0) c = -c;
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coef /= c;
  if (scale) *scale = c;
  return r;
}

bool Polynomial::proportional_to(const Polynomial& q) const {
  if (is_zero() || q.is_zero()) return is_zero() && q.is_zero();
  if (terms_.size() != q.terms_.size()) return false;
  Rational ratio = terms_[0].coef / q.terms_[0].coef;
  for (size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].exps != q.terms_[i].exps) return false;
    if (terms_[i].coef != ratio * q.terms_[i].coef) return false;
  }
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << " + ";
    first = false;
    os << t.coef.get_num().get_str();
    if (t.coef.get_den() != 1) os << "/" << t.coef.get_den().get_str();
    for (int k = 0; k < tab_->size(); ++k)
      if (t.exps[k] > 0) os << "*" << tab_->name(k) << "^" << t.exps[k];
  }
  return os.str();
}

Polynomial Polynomial::parse(VarTablePtr tab, const std::string& text) {
  std::vector<Term> terms;
  size_t pos = 0;
  auto skip_ws = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
  skip_ws();
  if (text.compare(pos, 1, "0") == 0 && pos + 1 >= text.size())
    return Polynomial::zero(std::move(tab));
  bool expect_term = true;
  while (pos < text.size()) {
    skip_ws();
    if (!expect_term) {
      if (text[pos] != '+') throw std::invalid_argument("expected '+' in polynomial text");
      ++pos;
      skip_ws();
    }
    expect_term = false;
    // coefficient: [-]digits[/digits]
    size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos < text.size() && text[pos] == '/') {
      ++pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    if (pos == start) throw std::invalid_argument("expected coefficient in polynomial text");
    Rational coef = rat_from_string(text.substr(start, pos - start));
    ExpVec exps(tab->size(), 0);
    skip_ws();
    while (pos < text.size() && text[pos] == '*') {
      ++pos;
      skip_ws();
      size_t vstart = pos;
      while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) ++pos;
      std::string vname = text.substr(vstart, pos - vstart);
      int vidx = tab->index_of(vname);
      int e = 1;
      skip_ws();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        size_t estart = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        e = std::stoi(text.substr(estart, pos - estart));
      }
      exps[vidx] = static_cast<uint16_t>(exps[vidx] + e);
      skip_ws();
    }
    terms.push_back({std::move(exps), coef});
    skip_ws();
  }
  return Polynomial::from_terms(std::move(tab), std::move(terms));
}

Polynomial det2(const Matrix2x2& m) { return m.a * m.d - m.b * m.c; }

}  // namespace spohn
