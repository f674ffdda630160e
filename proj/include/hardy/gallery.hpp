#pragma once

#include <boost/rational.hpp>

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hardy::gallery {

using Rational = boost::rational<long long>;

/// Exact a + bi with rational parts.
struct GaussRational {
  Rational re{0};
  Rational im{0};

  GaussRational() = default;
  GaussRational(Rational r, Rational i = Rational{0}) : re(r), im(i) {}
  GaussRational(long long r) : re(r) {}  // NOLINT(google-explicit-constructor)

  GaussRational conj() const { return {re, -im}; }
  Rational norm2() const { return re * re + im * im; }
  bool is_zero() const { return re == Rational(0) && im == Rational(0); }
  std::string str() const;

  friend GaussRational operator+(const GaussRational& a, const GaussRational& b) { return {a.re + b.re, a.im + b.im}; }
  friend GaussRational operator-(const GaussRational& a, const GaussRational& b) { return {a.re - b.re, a.im - b.im}; }
  friend GaussRational operator-(const GaussRational& a) { return {-a.re, -a.im}; }
  friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const GaussRational& a, const GaussRational& b) { return a.re == b.re && a.im == b.im; }
};

/// The value of a symbol on e_n: weight * z^power * e_target.
struct Term {
  long target = 0;
  int power = 0;
  GaussRational weight{1};
  /// Some index on the way to `target` (or target itself) lies outside the window.
  bool escaped = false;

  friend bool operator==(const Term& a, const Term& b) {
    return a.target == b.target && a.power == b.power && a.weight == b.weight;
  }
};

/// Basis e_n for n in Z, or for n >= 0.
enum class Domain { bilateral, unilateral };

struct Window {
  long lo = 0;
  long hi = 0;
  bool contains(long n) const { return lo <= n && n <= hi; }
  long width() const { return hi - lo; }
};

/// Operator-valued function z -> Phi(z) acting on basis vectors by monomial
/// rules. The rule is a generator over the whole domain; the window selects
/// the indices that checks quantify over. nullopt means Phi(z) e_n = 0.
class ShiftSymbol {
 public:
  using Generator = std::function<std::optional<Term>(long)>;

  ShiftSymbol(Domain domain, Window window, Generator rule, std::string name = {});

  Domain domain() const { return domain_; }
  const Window& window() const { return window_; }
  const std::string& name() const { return name_; }
  bool in_domain(long n) const { return domain_ == Domain::bilateral || n >= 0; }

  /// Rule at n with the escape flag set relative to the window.
  std::optional<Term> rule(long n) const;
  ShiftSymbol with_window(Window w) const;

  /// Rule table over the window.
  std::map<long, std::optional<Term>> table() const;
  /// In-window indices whose rule leaves the window.
  std::vector<long> escaped() const;

 private:
  Domain domain_;
  Window window_;
  Generator gen_;
  std::string name_;
};

ShiftSymbol compose(const ShiftSymbol& a, const ShiftSymbol& b);
/// Pointwise adjoint on the circle. Preimages are searched within 4W + 16 of
/// the target; throws std::domain_error if a target has two preimages.
ShiftSymbol adjoint(const ShiftSymbol& a);

struct AnalyticReport {
  bool analytic = true;
  std::optional<long> witness;  ///< first interior index with a negative power
  std::optional<Term> witness_term;
  int escaped = 0;  ///< in-window indices excluded from the check
};

/// Interior = in-window indices whose rule stays inside the window.
AnalyticReport is_analytic(const ShiftSymbol& a);
bool is_two_sided_inner_symbolic(const ShiftSymbol& a);

/// Rule tables agree on every interior index of both symbols.
bool same_on_interior(const ShiftSymbol& a, const ShiftSymbol& b);

/// B = A Omega with Omega = A^* B analytic and A (A^* B) = B on the interior.
bool left_divides(const ShiftSymbol& a, const ShiftSymbol& b);
/// B = Omega A with Omega = B A^* analytic and (B A^*) A = B on the interior.
bool right_divides(const ShiftSymbol& a, const ShiftSymbol& b);

// Gallery symbols.
ShiftSymbol identity_symbol(Domain d, Window w);
/// e_n -> z e_{n+1} for n >= 0 and e_{n+1} for n < 0, on Z.
ShiftSymbol delta_example(Window w);
/// e_n -> z^2 e_{1-n} for n <= 1 and e_{1-n} for n > 1, on Z.
ShiftSymbol theta_example(Window w);
/// Constant unilateral shift times z^n.
ShiftSymbol shift_symbol(Window w, int n = 0);
/// Constant backward shift.
ShiftSymbol backward_shift_symbol(Window w);
/// z I on the unilateral domain.
ShiftSymbol coordinate_symbol(Window w);

/// Finite sum of coeff * z^k e_j, keyed by (j, k) with k >= 0.
using FormalVector = std::map<std::pair<long, int>, GaussRational>;

/// T_phi f = P_+ (phi f).
FormalVector toeplitz_apply(const ShiftSymbol& phi, const FormalVector& f);
GaussRational inner_product(const FormalVector& f, const FormalVector& g);
/// <(T_{phi^*} T_phi - T_phi T_{phi^*}) f, f>
GaussRational toeplitz_bracket(const ShiftSymbol& phi, const FormalVector& f);

struct QuasinormalReport {
  bool isometric = true;  ///< T_phi^* T_phi = I on every interior e_j z^k, 0 <= k <= W
  std::optional<std::pair<long, int>> isometry_witness;
  bool non_normal = false;  ///< phi phi^* and phi^* phi differ as rule tables
  std::optional<long> normality_witness;
};
QuasinormalReport quasinormal_check(const ShiftSymbol& phi);

struct CoprimePair {
  bool right = true;
  bool left = true;
  std::vector<long> left_witnesses;   ///< joint kernel of the adjoints at 0
  std::vector<long> right_witnesses;  ///< joint kernel at 0
};

/// Coprimeness of two analytic symbols at z = 0, by exact coordinate kernels.
CoprimePair coprime_at_origin(const ShiftSymbol& phi, const ShiftSymbol& psi);
/// The constant shift against z I on the unilateral window [0, W].
CoprimePair shift_vs_coordinate_coprime(long W);

}  // namespace hardy::gallery
