#include "hardy/gallery.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace hardy::gallery {

namespace {

std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << r.numerator();
  if (r.denominator() != 1) os << "/" << r.denominator();
  return os.str();
}

long search_radius(const Window& w) {
  return 4 * std::max({std::labs(w.lo), std::labs(w.hi), w.width()}) + 16;
}

bool interior(const std::optional<Term>& t) { return !t || !t->escaped; }

}  // namespace

std::string GaussRational::str() const {
  if (im == Rational(0)) return rational_str(re);
  if (re == Rational(0)) return rational_str(im) + "i";
  return rational_str(re) + (im > Rational(0) ? "+" : "") + rational_str(im) + "i";
}

ShiftSymbol::ShiftSymbol(Domain domain, Window window, Generator rule, std::string name)
    : domain_(domain), window_(window), gen_(std::move(rule)), name_(std::move(name)) {
  if (window_.lo > window_.hi) throw std::invalid_argument("ShiftSymbol: empty window");
  if (domain_ == Domain::unilateral && window_.lo < 0)
    throw std::invalid_argument("ShiftSymbol: unilateral window must start at 0 or later");
}

std::optional<Term> ShiftSymbol::rule(long n) const {
  if (!in_domain(n)) throw std::out_of_range("ShiftSymbol: index outside the domain");
  std::optional<Term> t = gen_(n);
  if (t && !window_.contains(t->target)) t->escaped = true;
  return t;
}

ShiftSymbol ShiftSymbol::with_window(Window w) const { return {domain_, w, gen_, name_}; }

std::map<long, std::optional<Term>> ShiftSymbol::table() const {
  std::map<long, std::optional<Term>> out;
  for (long n = window_.lo; n <= window_.hi; ++n) out.emplace(n, rule(n));
  return out;
}

std::vector<long> ShiftSymbol::escaped() const {
  std::vector<long> out;
  for (const auto& [n, t] : table())
    if (!interior(t)) out.push_back(n);
  return out;
}

ShiftSymbol compose(const ShiftSymbol& a, const ShiftSymbol& b) {
  if (a.domain() != b.domain()) throw std::invalid_argument("compose: domains differ");
  auto gen = [a, b](long n) -> std::optional<Term> {
    const std::optional<Term> tb = b.rule(n);
    if (!tb) return std::nullopt;
    const std::optional<Term> ta = a.rule(tb->target);
    if (!ta) return std::nullopt;
    const bool escaped = tb->escaped || ta->escaped;
    return Term{ta->target, ta->power + tb->power, ta->weight * tb->weight, escaped};
  };
  return {a.domain(), a.window(), gen, "(" + a.name() + ")(" + b.name() + ")"};
}

ShiftSymbol adjoint(const ShiftSymbol& a) {
  const long R = search_radius(a.window());
  auto gen = [a, R](long m) -> std::optional<Term> {
    std::optional<Term> found;
    for (long n = m - R; n <= m + R; ++n) {
      if (!a.in_domain(n)) continue;
      const std::optional<Term> t = a.rule(n);
      if (!t || t->target != m) continue;
      if (found) throw std::domain_error("adjoint: index " + std::to_string(m) + " has two preimages");
      found = Term{n, -t->power, t->weight.conj(), t->escaped || !a.window().contains(n)};
    }
    return found;
  };
  return {a.domain(), a.window(), gen, a.name() + "^*"};
}

AnalyticReport is_analytic(const ShiftSymbol& a) {
  AnalyticReport out;
  for (const auto& [n, t] : a.table()) {
    if (!interior(t)) {
      ++out.escaped;
      continue;
    }
    if (t && t->power < 0 && out.analytic) {
      out.analytic = false;
      out.witness = n;
      out.witness_term = t;
    }
  }
  return out;
}

bool is_two_sided_inner_symbolic(const ShiftSymbol& a) {
  std::vector<long> targets;
  for (const auto& [n, t] : a.table()) {
    if (!interior(t)) continue;
    if (!t || t->weight.norm2() != Rational(1)) return false;
    targets.push_back(t->target);
  }
  std::sort(targets.begin(), targets.end());
  if (std::adjacent_find(targets.begin(), targets.end()) != targets.end()) return false;
  for (const auto& [m, t] : adjoint(a).table())
    if (interior(t) && !t) return false;
  return true;
}

bool same_on_interior(const ShiftSymbol& a, const ShiftSymbol& b) {
  const auto ta = a.table();
  const auto tb = b.table();
  for (const auto& [n, x] : ta) {
    const auto it = tb.find(n);
    if (it == tb.end()) continue;
    const auto& y = it->second;
    if (!interior(x) || !interior(y)) continue;
    if (x.has_value() != y.has_value()) return false;
    if (x && !(*x == *y)) return false;
  }
  return true;
}

bool left_divides(const ShiftSymbol& a, const ShiftSymbol& b) {
  const ShiftSymbol omega = compose(adjoint(a), b);
  return is_analytic(omega).analytic && same_on_interior(compose(a, omega), b);
}

bool right_divides(const ShiftSymbol& a, const ShiftSymbol& b) {
  const ShiftSymbol omega = compose(b, adjoint(a));
  return is_analytic(omega).analytic && same_on_interior(compose(omega, a), b);
}

ShiftSymbol identity_symbol(Domain d, Window w) {
  return {d, w, [](long n) { return std::optional<Term>(Term{n, 0, 1, false}); }, "I"};
}

ShiftSymbol delta_example(Window w) {
  return {Domain::bilateral, w, [](long n) { return std::optional<Term>(Term{n + 1, n >= 0 ? 1 : 0, 1, false}); },
          "Delta"};
}

ShiftSymbol theta_example(Window w) {
  return {Domain::bilateral, w, [](long n) { return std::optional<Term>(Term{1 - n, n <= 1 ? 2 : 0, 1, false}); },
          "Theta"};
}

ShiftSymbol shift_symbol(Window w, int n) {
  return {Domain::unilateral, w, [n](long j) { return std::optional<Term>(Term{j + 1, n, 1, false}); },
          n == 0 ? "S" : "S z^" + std::to_string(n)};
}

ShiftSymbol backward_shift_symbol(Window w) {
  return {Domain::unilateral, w,
          [](long j) { return j == 0 ? std::nullopt : std::optional<Term>(Term{j - 1, 0, 1, false}); }, "S^*"};
}

ShiftSymbol coordinate_symbol(Window w) {
  return {Domain::unilateral, w, [](long j) { return std::optional<Term>(Term{j, 1, 1, false}); }, "z I"};
}

FormalVector toeplitz_apply(const ShiftSymbol& phi, const FormalVector& f) {
  FormalVector out;
  for (const auto& [key, c] : f) {
    const auto [j, k] = key;
    const std::optional<Term> t = phi.rule(j);
    if (!t || k + t->power < 0) continue;
    GaussRational& slot = out[{t->target, k + t->power}];
    slot = slot + c * t->weight;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

GaussRational inner_product(const FormalVector& f, const FormalVector& g) {
  GaussRational s;
  for (const auto& [key, c] : f) {
    const auto it = g.find(key);
    if (it != g.end()) s = s + c * it->second.conj();
  }
  return s;
}

GaussRational toeplitz_bracket(const ShiftSymbol& phi, const FormalVector& f) {
  const ShiftSymbol phi_star = adjoint(phi);
  const FormalVector a = toeplitz_apply(phi_star, toeplitz_apply(phi, f));
  const FormalVector b = toeplitz_apply(phi, toeplitz_apply(phi_star, f));
  return inner_product(a, f) - inner_product(b, f);
}

QuasinormalReport quasinormal_check(const ShiftSymbol& phi) {
  QuasinormalReport out;
  const ShiftSymbol phi_star = adjoint(phi);
  const Window& w = phi.window();
  for (const auto& [j, t] : phi.table()) {
    if (!interior(t)) continue;
    for (int k = 0; k <= w.width() && out.isometric; ++k) {
      const FormalVector e{{{j, k}, GaussRational{1}}};
      if (toeplitz_apply(phi_star, toeplitz_apply(phi, e)) != e) {
        out.isometric = false;
        out.isometry_witness = std::pair{j, k};
      }
    }
  }
  const auto left = compose(phi, phi_star).table();
  const auto right = compose(phi_star, phi).table();
  for (const auto& [n, x] : left) {
    const auto& y = right.at(n);
    if (!interior(x) || !interior(y)) continue;
    if (x.has_value() != y.has_value() || (x && !(*x == *y))) {
      out.non_normal = true;
      out.normality_witness = n;
      break;
    }
  }
  return out;
}

CoprimePair coprime_at_origin(const ShiftSymbol& phi, const ShiftSymbol& psi) {
  if (phi.domain() != psi.domain()) throw std::invalid_argument("coprime_at_origin: domains differ");
  // A(0) sends e_n to w e_target when the power is 0 and to 0 when it is positive.
  auto value_at_zero = [](const std::optional<Term>& t, long n) -> std::optional<Term> {
    if (!t) return std::nullopt;
    if (t->power < 0) throw std::domain_error("coprime_at_origin: symbol is not analytic at index " + std::to_string(n));
    if (t->power > 0) return std::nullopt;
    return t;
  };
  CoprimePair out;
  const Window& w = phi.window();
  const long R = search_radius(w);
  for (long n = w.lo; n <= w.hi; ++n) {
    if (!value_at_zero(phi.rule(n), n) && !value_at_zero(psi.rule(n), n)) out.right_witnesses.push_back(n);
    bool hit = false;
    for (long m = n - R; m <= n + R && !hit; ++m) {
      if (!phi.in_domain(m)) continue;
      for (const ShiftSymbol* s : {&phi, &psi}) {
        const auto v = value_at_zero(s->rule(m), m);
        hit = hit || (v && v->target == n);
      }
    }
    if (!hit) out.left_witnesses.push_back(n);
  }
  out.right = out.right_witnesses.empty();
  out.left = out.left_witnesses.empty();
  return out;
}

CoprimePair shift_vs_coordinate_coprime(long W) {
  const Window w{0, W};
  return coprime_at_origin(shift_symbol(w), coordinate_symbol(w));
}

}  // namespace hardy::gallery
