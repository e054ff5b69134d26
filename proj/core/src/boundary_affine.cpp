#include "rlcm/boundary_affine.hpp"

#include <numeric>

#include "rlcm/text.hpp"
#include "rlcm/zappa_szep.hpp"

namespace rlcm {

namespace {

std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

/// Inverse of a modulo m, for gcd(a, m) = 1 and m >= 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = euclid_mod(a, m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    const auto q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
  }
  return euclid_mod(old_s, m);
}

}  // namespace

AffinePI AffinePI::affine(std::int64_t alpha, std::int64_t beta, std::int64_t rho, std::int64_t mu) {
  if (alpha == 0) throw std::invalid_argument("AffinePI: zero slope");
  if (mu < 1) throw std::invalid_argument("AffinePI: modulus must be positive");
  const auto r = euclid_mod(rho, mu);
  return parametrized(r, mu, alpha * r + beta, alpha * mu);
}

AffinePI AffinePI::parametrized(std::int64_t rho, std::int64_t mu, std::int64_t c, std::int64_t d) {
  if (d == 0) throw std::invalid_argument("AffinePI: zero slope");
  if (mu < 1) throw std::invalid_argument("AffinePI: modulus must be positive");
  AffinePI f;
  f.empty_ = false;
  f.rho_ = euclid_mod(rho, mu);
  f.mu_ = mu;
  f.c_ = c + d * ((f.rho_ - rho) / mu);
  f.d_ = d;
  return f;
}

bool AffinePI::in_domain(std::int64_t n) const { return !empty_ && euclid_mod(n - rho_, mu_) == 0; }

std::optional<std::int64_t> AffinePI::apply(std::int64_t n) const {
  if (!in_domain(n)) return std::nullopt;
  return c_ + d_ * ((n - rho_) / mu_);
}

std::string AffinePI::text() const {
  if (empty_) return "empty";
  auto a = d_;
  auto b = c_ * mu_ - d_ * rho_;
  auto den = mu_;
  const auto g = std::gcd(std::gcd(abs64(a), abs64(b)), den);
  a /= g;
  b /= g;
  den /= g;
  std::string map = std::to_string(a) + "*n" + (b < 0 ? "-" : "+") + std::to_string(abs64(b));
  if (den != 1) map = "(" + map + ")/" + std::to_string(den);
  return map + " on " + std::to_string(rho_) + "(mod " + std::to_string(mu_) + ")";
}

AffinePI affine_compose(const AffinePI& f, const AffinePI& g) {
  if (f.is_empty() || g.is_empty()) return AffinePI::empty();
  // g sends rho_g + mu_g t to cg + dg t; need that in rho_f (mod mu_f).
  const auto cg = *g.apply(g.rho());
  const auto dg = *g.apply(g.rho() + g.mu()) - cg;
  const auto h = std::gcd(abs64(dg), f.mu());
  const auto rhs = f.rho() - cg;
  if (euclid_mod(rhs, h) != 0) return AffinePI::empty();
  const auto period = f.mu() / h;
  const auto t0 = period == 1 ? 0 : euclid_mod((rhs / h) % period * mod_inverse(dg / h, period), period);
  const auto rho = g.rho() + g.mu() * t0;
  const auto mu = g.mu() * period;
  const auto c = *f.apply(*g.apply(rho));
  const auto d = *f.apply(*g.apply(rho + mu)) - c;
  return AffinePI::parametrized(rho, mu, c, d);
}

AffinePI affine_product(std::initializer_list<AffinePI> fs) {
  AffinePI acc = AffinePI::identity();
  for (const auto& f : fs) acc = affine_compose(acc, f);
  return acc;
}

AffinePI affine_adjoint(const AffinePI& f) {
  if (f.is_empty()) return f;
  const auto c = *f.apply(f.rho());
  const auto d = *f.apply(f.rho() + f.mu()) - c;
  return AffinePI::parametrized(c, abs64(d), f.rho(), d < 0 ? -f.mu() : f.mu());
}

AffinePI affine_power(const AffinePI& f, std::int64_t k) {
  const AffinePI base = k < 0 ? affine_adjoint(f) : f;
  AffinePI acc = AffinePI::identity();
  for (std::int64_t i = 0; i < abs64(k); ++i) acc = affine_compose(acc, base);
  return acc;
}

PartitionVerdict partition_check(const std::vector<AffinePI>& projections) {
  std::int64_t period = 1;
  for (const auto& p : projections) {
    if (!p.is_empty() && !p.is_projection()) throw std::invalid_argument("partition_check: not a projection");
    if (!p.is_empty()) period = std::lcm(period, p.mu());
  }
  PartitionVerdict v;
  for (std::int64_t r = 0; r < period; ++r) {
    int hits = 0;
    for (const auto& p : projections) hits += p.in_domain(r) ? 1 : 0;
    if (hits == 0 && !v.uncovered) v.uncovered = r;
    if (hits > 1 && !v.overlap) v.overlap = r;
  }
  if (v.uncovered && v.overlap) v.kind = PartitionKind::Neither;
  else if (v.uncovered) v.kind = PartitionKind::DisjointOnly;
  else if (v.overlap) v.kind = PartitionKind::CoverOnly;
  else v.kind = PartitionKind::Partition;
  return v;
}

std::string partition_text(PartitionKind k) {
  switch (k) {
    case PartitionKind::Partition: return "Partition";
    case PartitionKind::CoverOnly: return "CoverOnly";
    case PartitionKind::DisjointOnly: return "DisjointOnly";
    case PartitionKind::Neither: return "Neither";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Models

AffinePI BoundaryModel::gen(std::string_view g, std::int64_t i, std::int64_t j) const {
  auto it = generators.find(g);
  if (it == generators.end()) throw std::invalid_argument("model " + name + " has no generator " + std::string(g));
  return it->second(i, j);
}

namespace {

using Gen = std::function<AffinePI(std::int64_t, std::int64_t)>;

Gen shift() {
  return [](std::int64_t, std::int64_t) { return AffinePI::affine(1, 1); };
}

Gen scale() {
  return [](std::int64_t a, std::int64_t) { return AffinePI::affine(a, 0); };
}

Gen digit() {
  return [](std::int64_t r, std::int64_t x) { return AffinePI::affine(x, r); };
}

}  // namespace

std::vector<std::string> model_names() { return {"QN", "QZ", "Q2", "BS1n(2)", "BS1n(3)", "NxN", "ZxZ"}; }

BoundaryModel build_model(std::string_view name) {
  BoundaryModel m;
  m.name = std::string(name);
  if (name == "QN") {
    m.generators = {{"s", shift()}, {"v", scale()}};
  } else if (name == "QZ") {
    m.generators = {{"s", shift()}, {"u", shift()}, {"v", scale()}};
  } else if (name == "Q2") {
    m.generators = {{"u", shift()}, {"s2", [](std::int64_t, std::int64_t) { return AffinePI::affine(2, 0); }}};
  } else if (name.rfind("BS1n", 0) == 0) {
    auto rest = name.substr(4);
    std::int64_t d = 0;
    try {
      text::Cursor cur(rest);
      const bool paren = cur.consume('(');
      if (!paren) cur.expect(':');
      d = cur.integer();
      if (paren) cur.expect(')');
      cur.expect_end();
    } catch (const ParseError&) {
      throw UnknownModel("unknown model " + std::string(name) + " (expected BS1n(d))");
    }
    if (d < 2) throw UnknownModel("BS1n needs d >= 2");
    m.name = "BS1n(" + std::to_string(d) + ")";
    m.d = static_cast<int>(d);
    m.generators = {{"s", shift()},
                    {"t", [d](std::int64_t i, std::int64_t) { return AffinePI::affine(d, i - 1); }}};
  } else if (name == "NxN") {
    m.generators = {{"t", digit()}, {"s", [](std::int64_t k, std::int64_t) { return AffinePI::affine(1, k); }}};
  } else if (name == "ZxZ") {
    m.generators = {{"t", digit()}, {"s", [](std::int64_t k, std::int64_t j) { return AffinePI::affine(j, k); }}};
  } else {
    throw UnknownModel("unknown model " + std::string(name));
  }
  return m;
}

namespace {

std::string difference_point(const AffinePI& f, const AffinePI& g) {
  const auto span = 2 * std::lcm(f.mu(), g.mu()) + 2;
  for (std::int64_t k = 0; k <= span; ++k) {
    for (auto n : {k, -k}) {
      if (f.apply(n) != g.apply(n)) return "n=" + std::to_string(n);
    }
  }
  return "domain " + f.text() + " vs " + g.text();
}

struct Suite {
  std::string prefix;
  std::vector<CheckReport> reports;

  CheckReport& rel(const std::string& name) {
    for (auto& r : reports) {
      if (r.suite == prefix + name) return r;
    }
    reports.push_back({});
    reports.back().suite = prefix + name;
    return reports.back();
  }

  void equal(const std::string& name, const std::string& params, const AffinePI& lhs, const AffinePI& rhs) {
    auto& r = rel(name);
    ++r.compared;
    if (lhs != rhs) r.fail(name, params + " " + difference_point(lhs, rhs));
  }

  void partition(const std::string& name, const std::string& params, const std::vector<AffinePI>& maps,
                 bool cover_only_ok) {
    std::vector<AffinePI> ranges;
    for (const auto& f : maps) ranges.push_back(affine_compose(f, affine_adjoint(f)));
    auto& r = rel(name);
    ++r.compared;
    const auto v = partition_check(ranges);
    const bool ok = v.kind == PartitionKind::Partition || (cover_only_ok && v.kind == PartitionKind::CoverOnly);
    if (!ok) {
      std::string w = params + " " + partition_text(v.kind);
      if (v.uncovered) w += " uncovered=" + std::to_string(*v.uncovered);
      if (v.overlap) w += " overlap=" + std::to_string(*v.overlap);
      r.fail(name, w);
    }
  }
};

std::string num(std::int64_t v) { return std::to_string(v); }

void qn_suite(const BoundaryModel& m, Suite& s) {
  const auto sh = m.gen("s");
  const auto one = AffinePI::identity();
  const std::int64_t primes[] = {2, 3, 5};
  for (auto p : primes) {
    const auto vp = m.gen("v", p);
    const auto ps = "p=" + num(p);
    s.equal("T1", ps, affine_product({vp, sh}), affine_product({affine_power(sh, p), vp}));
    s.equal("T4", ps, affine_product({affine_adjoint(sh), vp}),
            affine_product({affine_power(sh, p - 1), vp, affine_adjoint(sh)}));
    for (std::int64_t k = 1; k < p; ++k) {
      s.equal("T5", ps + " k=" + num(k), affine_product({affine_adjoint(vp), affine_power(sh, k), vp}),
              AffinePI::empty());
    }
    std::vector<AffinePI> family;
    for (std::int64_t k = 0; k < p; ++k) family.push_back(affine_product({affine_power(sh, k), vp}));
    s.partition("Q5", ps, family, false);
    for (auto q : primes) {
      const auto vq = m.gen("v", q);
      const auto pq = ps + " q=" + num(q);
      s.equal("T2", pq, affine_product({vp, vq}), affine_product({vq, vp}));
      if (p != q) {
        s.equal("T3", pq, affine_product({affine_adjoint(vp), vq}), affine_product({vq, affine_adjoint(vp)}));
      }
    }
  }
  s.equal("Q6", "", affine_product({sh, affine_adjoint(sh)}), one);
}

void qz_suite(const BoundaryModel& m, Suite& s) {
  const auto sh = m.gen("s");
  const std::int64_t as[] = {1, -1, 2, -2, 3, -3};
  for (auto a : as) {
    const auto va = m.gen("v", a);
    const auto pa = "a=" + num(a);
    for (auto b : as) {
      s.equal("i", pa + " b=" + num(b), affine_product({va, m.gen("v", b)}), m.gen("v", a * b));
    }
    s.equal("ii", pa, affine_product({va, sh}), affine_product({affine_power(sh, a), va}));
    s.equal("ii*", pa, affine_product({va, affine_adjoint(sh)}), affine_product({affine_power(sh, -a), va}));
    std::vector<AffinePI> family;
    for (std::int64_t j = 0; j < (a < 0 ? -a : a); ++j) family.push_back(affine_product({affine_power(sh, j), va}));
    s.partition("iii", pa, family, false);
  }
}

void q2_suite(const BoundaryModel& m, Suite& s) {
  const auto u = m.gen("u");
  const auto s2 = m.gen("s2");
  s.equal("I", "", affine_product({s2, u}), affine_product({u, u, s2}));
  s.partition("II", "", {s2, affine_product({u, s2})}, false);
}

void bs_suite(const BoundaryModel& m, Suite& s) {
  const auto sh = m.gen("s");
  std::vector<AffinePI> ts;
  for (int i = 1; i <= m.d; ++i) ts.push_back(m.gen("t", i));
  s.partition("1", "d=" + num(m.d), ts, false);
  for (int i = 1; i < m.d; ++i) {
    s.equal("2", "i=" + num(i), affine_product({sh, ts[static_cast<std::size_t>(i - 1)]}),
            ts[static_cast<std::size_t>(i)]);
  }
  s.equal("3", "c=1", affine_product({sh, ts.back()}), affine_product({ts.front(), sh}));
}

void semidirect_suite(const BoundaryModel& m, Suite& s, bool integers) {
  const auto d = integers ? zs_zxz() : zs_nxn();
  auto t = [&](const Element& u) { return m.gen("t", u[0], u[1]); };
  auto sa = [&](const Element& a) { return m.gen("s", a[0], integers ? a[1] : 1); };
  const std::int64_t primes[] = {2, 3, 5};
  std::vector<Element> as;
  for (std::int64_t k = integers ? -10 : 0; k <= 10; ++k) {
    if (integers) {
      as.push_back(Element{k, 1});
      as.push_back(Element{k, -1});
    } else {
      as.push_back(Element{k});
    }
  }
  for (const auto& a : as) {
    const auto pa = "a=" + d.A.display(a);
    s.equal("Q1", pa, affine_product({sa(a), affine_adjoint(sa(a))}), AffinePI::identity());
    for (auto p : primes) {
      for (std::int64_t r = 0; r < p; ++r) {
        const Element u{r, p};
        const auto params = pa + " u=" + d.U.display(u);
        s.equal("K1", params, affine_product({sa(a), t(u)}),
                affine_product({t(d.action(a, u)), sa(d.restriction(a, u))}));
        const auto z = d.action_inverse(a, u);
        s.equal("K2", params, affine_product({affine_adjoint(sa(a)), t(u)}),
                affine_product({t(z), affine_adjoint(sa(d.restriction(a, z)))}));
      }
    }
  }
  for (auto p : primes) {
    std::vector<AffinePI> family;
    for (std::int64_t k = 0; k < p; ++k) family.push_back(t(Element{k, p}));
    s.partition("Q2", "F={(k," + num(p) + ")}", family, true);
  }
}

}  // namespace

std::vector<CheckReport> verify_boundary_suite(const BoundaryModel& model, std::string_view suite) {
  if (suite != "boundary") throw std::invalid_argument("unknown boundary suite " + std::string(suite));
  Suite s{"boundary:" + model.name + ":", {}};
  if (model.name == "QN") qn_suite(model, s);
  else if (model.name == "QZ") qz_suite(model, s);
  else if (model.name == "Q2") q2_suite(model, s);
  else if (model.d > 0) bs_suite(model, s);
  else if (model.name == "NxN") semidirect_suite(model, s, false);
  else if (model.name == "ZxZ") semidirect_suite(model, s, true);
  else throw UnknownModel("no suite for model " + model.name);
  return s.reports;
}

std::vector<CheckReport> verify_generator_maps(std::int64_t max_x, std::int64_t max_a) {
  const auto qn = build_model("QN");
  const auto qz = build_model("QZ");
  const auto q2 = build_model("Q2");
  const auto bs = build_model("BS1n(2)");
  const auto nxn = build_model("NxN");
  const auto zxz = build_model("ZxZ");

  // v_x as a product of prime v_p, so composite x is not read off the model.
  auto v_of = [](const BoundaryModel& m, std::int64_t x) {
    AffinePI acc = AffinePI::identity();
    for (std::int64_t p = 2; x > 1; ++p) {
      while (x % p == 0) {
        acc = affine_compose(acc, m.gen("v", p));
        x /= p;
      }
    }
    return acc;
  };

  Suite s{"phi:", {}};
  for (std::int64_t x = 1; x <= max_x; ++x) {
    for (std::int64_t r = 0; r < x; ++r) {
      const auto params = "(r,x)=(" + num(r) + "," + num(x) + ")";
      s.equal("QN-NxN", params, affine_product({affine_power(qn.gen("s"), r), v_of(qn, x)}), nxn.gen("t", r, x));
      s.equal("QZ-ZxZ", params, affine_product({affine_power(qz.gen("s"), r), qz.gen("v", x)}), zxz.gen("t", r, x));
    }
    s.equal("QN-NxN", "s^" + num(x), affine_power(qn.gen("s"), x), nxn.gen("s", x));
  }
  for (std::int64_t a = -max_a; a <= max_a; ++a) {
    if (a == 0) continue;
    const auto abs_a = a < 0 ? -a : a;
    s.equal("QZ-ZxZ", "a=" + num(a), qz.gen("v", a), affine_product({zxz.gen("s", 0, a / abs_a), zxz.gen("t", 0, abs_a)}));
    s.equal("QZ-ZxZ", "s^" + num(a), affine_power(qz.gen("s"), a), zxz.gen("s", a, 1));
  }
  s.equal("Q2-BS1n(2)", "u", q2.gen("u"), bs.gen("s"));
  s.equal("Q2-BS1n(2)", "s2", q2.gen("s2"), bs.gen("t", 1));
  return s.reports;
}

}  // namespace rlcm
