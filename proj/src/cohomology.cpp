#include "hessgkm/cohomology.hpp"

#include <algorithm>
#include <deque>

namespace hessgkm {

Polynomial Polynomial::constant(int num_vars, long long c) {
  Polynomial p(num_vars);
  p.add_term(Exponents(static_cast<std::size_t>(num_vars), 0), c);
  return p;
}

Polynomial Polynomial::variable(int num_vars, int k) {
  if (k < 1 || k > num_vars) throw std::invalid_argument("variable out of range");
  Polynomial p(num_vars);
  Exponents e(static_cast<std::size_t>(num_vars), 0);
  e[static_cast<std::size_t>(k - 1)] = 1;
  p.add_term(e, 1);
  return p;
}

Polynomial Polynomial::root_difference(int num_vars, int a, int b) {
  return variable(num_vars, a) - variable(num_vars, b);
}

void Polynomial::add_term(const Exponents& e, long long c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int total = 0;
    for (int x : e) total += x;
    d = std::max(d, total);
  }
  return d;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(num_vars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

Polynomial operator+(const Polynomial& l, const Polynomial& r) {
  Polynomial out = l;
  out.num_vars_ = std::max(l.num_vars_, r.num_vars_);
  for (const auto& [e, c] : r.terms_) out.add_term(e, c);
  return out;
}

Polynomial operator-(const Polynomial& l, const Polynomial& r) {
  return l + (-r);
}

Polynomial operator*(const Polynomial& l, const Polynomial& r) {
  if (l.num_vars_ != r.num_vars_ && !l.is_zero() && !r.is_zero()) {
    throw std::invalid_argument("polynomial variable count mismatch");
  }
  Polynomial out(std::max(l.num_vars_, r.num_vars_));
  for (const auto& [el, cl] : l.terms_) {
    for (const auto& [er, cr] : r.terms_) {
      Polynomial::Exponents e = el;
      for (std::size_t k = 0; k < e.size(); ++k) e[k] += er[k];
      out.add_term(e, cl * cr);
    }
  }
  return out;
}

Polynomial Polynomial::substitute(int from, int to) const {
  Polynomial out(num_vars_);
  const auto f = static_cast<std::size_t>(from - 1);
  const auto t = static_cast<std::size_t>(to - 1);
  for (const auto& [e, c] : terms_) {
    Exponents moved = e;
    moved[t] += moved[f];
    moved[f] = 0;
    out.add_term(moved, c);
  }
  return out;
}

nlohmann::json to_json(const Polynomial& p) {
  auto out = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) out.push_back({e, c});
  return out;
}

CompatibilityResult check_compatibility(const GkmGraph& g,
                                        const ClassVector& c) {
  if (c.values.size() != g.vertices().size()) {
    throw std::invalid_argument("class vector does not match the graph's vertices");
  }
  CompatibilityResult result;
  for (std::size_t k = 0; k < g.edges().size(); ++k) {
    const auto& e = g.edges()[k];
    const auto diff = c.values[e.u] - c.values[e.v];
    if (!diff.divisible_by_difference(e.a, e.b)) {
      result.compatible = false;
      result.violating_edges.push_back(k);
    }
  }
  return result;
}

std::vector<long long> poincare_polynomial(const HessenbergFunction& h) {
  std::vector<long long> betti(static_cast<std::size_t>(complexity_dimension(h)) + 1, 0);
  for (const auto& w : all_permutations(h.rank())) {
    ++betti[static_cast<std::size_t>(complexity_dimension(h) - h_length(w, h))];
  }
  return betti;
}

LocalizedClass localized_class_candidate(const HessenbergFunction& h,
                                         const Permutation& w) {
  const int dim = complexity_dimension(h) - h_length(w, h);
  const auto interval = interval_graph(h, w);
  if (!is_regular(interval, dim).regular) {
    throw std::invalid_argument("interval graph of " + w.to_string() +
                                " is not regular; no smooth class candidate");
  }
  const int n = h.rank();
  auto ambient = build_hessenberg_graph(h);
  const auto& vs = ambient.vertices();

  // Normal-direction products at each vertex of [w, w0].
  std::vector<Polynomial> normal(vs.size(), Polynomial(n));
  std::vector<bool> inside(vs.size(), false);
  for (const auto& v : interval.vertices()) inside[*ambient.index_of(v)] = true;
  for (std::size_t k = 0; k < vs.size(); ++k) {
    if (!inside[k]) continue;
    Polynomial prod = Polynomial::constant(n, 1);
    for (const auto& [i, j] : h.window_pairs()) {
      if (!interval.contains(apply_transposition(vs[k], i, j))) {
        prod = prod * Polynomial::root_difference(n, vs[k](i), vs[k](j));
      }
    }
    normal[k] = prod;
  }

  // Spanning-forest sign propagation over the interval graph, root sign +1.
  std::vector<int> signs(vs.size(), 0);
  for (std::size_t root = 0; root < vs.size(); ++root) {
    if (!inside[root] || signs[root] != 0) continue;
    signs[root] = 1;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const auto k = queue.front();
      queue.pop_front();
      for (auto e : ambient.incident(k)) {
        const auto next = ambient.other_end(e, k);
        if (!inside[next] || signs[next] != 0) continue;
        const auto& edge = ambient.edges()[e];
        const auto here = signs[k] == 1 ? normal[k] : -normal[k];
        if ((here - normal[next]).divisible_by_difference(edge.a, edge.b)) {
          signs[next] = 1;
        } else if ((here + normal[next]).divisible_by_difference(edge.a, edge.b)) {
          signs[next] = -1;
        } else {
          throw SignPropagationError("no sign makes " + vs[k].to_string() +
                                     " and " + vs[next].to_string() +
                                     " compatible");
        }
        queue.push_back(next);
      }
    }
  }

  ClassVector values;
  values.values.assign(vs.size(), Polynomial(n));
  for (std::size_t k = 0; k < vs.size(); ++k) {
    if (inside[k]) values.values[k] = signs[k] == 1 ? normal[k] : -normal[k];
  }
  if (const auto check = check_compatibility(ambient, values); !check.compatible) {
    const auto& e = ambient.edges()[check.violating_edges.front()];
    throw SignPropagationError("sign assignment inconsistent on a cycle through " +
                               vs[e.u].to_string() + " -- " + vs[e.v].to_string());
  }
  return {std::move(ambient), std::move(values), std::move(signs)};
}

}  // namespace hessgkm
