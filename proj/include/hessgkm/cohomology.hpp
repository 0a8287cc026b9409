#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "json.hpp"

#include "hessgkm/gkm_graph.hpp"
#include "hessgkm/hessenberg.hpp"

namespace hessgkm {

/// Sparse polynomial in t_1..t_n with exact integer coefficients.
class Polynomial {
 public:
  using Exponents = std::vector<int>;

  explicit Polynomial(int num_vars = 0) : num_vars_(num_vars) {}
  static Polynomial constant(int num_vars, long long c);
  /// t_k, 1-indexed.
  static Polynomial variable(int num_vars, int k);
  /// t_a - t_b; the edge weight of a GKM edge with value pair (a, b).
  static Polynomial root_difference(int num_vars, int a, int b);

  int num_vars() const { return num_vars_; }
  const std::map<Exponents, long long>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& l, const Polynomial& r);
  friend Polynomial operator-(const Polynomial& l, const Polynomial& r);
  friend Polynomial operator*(const Polynomial& l, const Polynomial& r);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Substitutes t_from := t_to. p vanishes under it iff (t_from - t_to) | p.
  Polynomial substitute(int from, int to) const;

  bool divisible_by_difference(int a, int b) const {
    return substitute(a, b).is_zero();
  }

 private:
  void add_term(const Exponents& e, long long c);

  int num_vars_ = 0;
  std::map<Exponents, long long> terms_;
};

/// [[exponents...], coefficient] pairs in exponent order.
nlohmann::json to_json(const Polynomial& p);

/// A value at every vertex of a GKM graph, aligned with its vertex order.
struct ClassVector {
  std::vector<Polynomial> values;
};

struct CompatibilityResult {
  bool compatible = true;
  std::vector<std::size_t> violating_edges;  ///< indices into g.edges()
};

/// p(u) - p(v) divisible by t_a - t_b across every edge {u, v} with value
/// pair (a, b). Throws std::invalid_argument if the class has the wrong size.
CompatibilityResult check_compatibility(const GkmGraph& g, const ClassVector& c);

/// Betti numbers b_0, b_2, ... of Hess(s,h) from its affine paving:
/// b_{2k} = #{w : d_h - l_h(w) = k}.
std::vector<long long> poincare_polynomial(const HessenbergFunction& h);

class SignPropagationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LocalizedClass {
  GkmGraph ambient;  ///< Gamma(Hess(s,h)) on all of S_n
  ClassVector values;
  /// Sign chosen at each vertex of [w, w0] (ambient vertex order; 0 outside).
  std::vector<int> signs;
};

/// Candidate equivariant class of Omega_w cap Hess(s,h) in the smooth case:
/// at v in [w,w0] the product of t_{v(i)} - t_{v(j)} over window pairs
/// leaving [w,w0], times a sign fixed by spanning-tree propagation; zero
/// elsewhere. Determined only up to a global constant.
/// Throws std::invalid_argument when the interval graph is not regular and
/// SignPropagationError when no consistent signs exist.
LocalizedClass localized_class_candidate(const HessenbergFunction& h,
                                         const Permutation& w);

}  // namespace hessgkm
