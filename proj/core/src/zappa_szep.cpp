#include "rlcm/zappa_szep.hpp"

#include <unordered_map>

#include "rlcm/text.hpp"

namespace rlcm {

ZSElement zs_multiply(const ZSDescriptor& d, const ZSElement& p, const ZSElement& q) {
  return {d.U.multiply(p.u, d.action(p.a, q.u)), d.A.multiply(d.restriction(p.a, q.u), q.a)};
}

std::optional<ZSLcm> zs_right_lcm(const ZSDescriptor& d, const ZSElement& p, const ZSElement& q) {
  if (!d.U.has_right_lcm()) throw std::logic_error("zs_right_lcm: U has no closed right LCM");
  auto base = d.U.right_lcm(p.u, q.u);
  if (!base) return std::nullopt;
  const auto x = d.action_inverse(p.a, base->left_comp);
  const auto y = d.action_inverse(q.a, base->right_comp);
  const auto ax = d.restriction(p.a, x);
  const auto by = d.restriction(q.a, y);
  // The ideal a|_x A is the smaller one; the tie case lands here as well.
  if (auto c = d.A.left_divide(by, ax)) {
    return ZSLcm{{base->lcm, ax}, {x, d.A.identity}, {y, *c}};
  }
  if (auto c = d.A.left_divide(ax, by)) {
    return ZSLcm{{base->lcm, by}, {x, *c}, {y, d.A.identity}};
  }
  throw HypothesisViolation("restrictions " + d.A.display(ax) + " and " + d.A.display(by) +
                            " generate incomparable right ideals in " + d.A.name);
}

CheckReport zs_axiom_check(const ZSDescriptor& d, const Ball& ball_u, const Ball& ball_a) {
  CheckReport r;
  r.suite = "zs-axioms:" + d.name;
  const auto& U = d.U;
  const auto& A = d.A;
  const auto& eu = U.identity;
  const auto& ea = A.identity;
  auto show = [&](const Element& a, std::initializer_list<const Element*> us) {
    std::string out = A.display(a);
    for (const auto* u : us) out += " " + U.display(*u);
    return out;
  };
  auto show_aa = [&](const Element& a, const Element& b, const Element& u) {
    return A.display(a) + " " + A.display(b) + " " + U.display(u);
  };

  for (const auto& u : ball_u) {
    ++r.compared;
    if (d.action(ea, u) != u) r.fail("B1", U.display(u));
    ++r.compared;
    if (d.restriction(ea, u) != ea) r.fail("B7", U.display(u));
  }
  for (const auto& a : ball_a) {
    ++r.compared;
    if (d.action(a, eu) != eu) r.fail("B3", A.display(a));
    ++r.compared;
    if (d.restriction(a, eu) != a) r.fail("B4", A.display(a));
  }
  for (const auto& a : ball_a) {
    for (const auto& b : ball_a) {
      const auto ab = A.multiply(a, b);
      for (const auto& u : ball_u) {
        ++r.compared;
        const auto bu = d.action(b, u);
        if (d.action(ab, u) != d.action(a, bu)) r.fail("B2", show_aa(a, b, u));
        ++r.compared;
        if (d.restriction(ab, u) != A.multiply(d.restriction(a, bu), d.restriction(b, u))) {
          r.fail("B8", show_aa(a, b, u));
        }
      }
    }
  }
  for (const auto& a : ball_a) {
    for (const auto& u : ball_u) {
      const auto au = d.action(a, u);
      const auto a_u = d.restriction(a, u);
      for (const auto& v : ball_u) {
        const auto uv = U.multiply(u, v);
        ++r.compared;
        if (d.action(a, uv) != U.multiply(au, d.action(a_u, v))) r.fail("B5", show(a, {&u, &v}));
        ++r.compared;
        if (d.restriction(a, uv) != d.restriction(a_u, v)) r.fail("B6", show(a, {&u, &v}));
      }
    }
  }
  for (const auto& a : ball_a) {
    std::unordered_map<Element, const Element*, ElementHash> image;
    for (const auto& u : ball_u) {
      ++r.compared;
      const auto au = d.action(a, u);
      auto [it, fresh] = image.emplace(au, &u);
      if (!fresh) r.fail("injective", show(a, {it->second, &u}));
      ++r.compared;
      if (d.action_inverse(a, au) != u || d.action(a, d.action_inverse(a, u)) != u) {
        r.fail("section", show(a, {&u}));
      }
    }
  }
  return r;
}

Element zs_encode(const ZSElement& p) {
  std::vector<std::int64_t> code;
  code.reserve(1 + p.u.size() + p.a.size());
  code.push_back(static_cast<std::int64_t>(p.u.size()));
  code.insert(code.end(), p.u.code.begin(), p.u.code.end());
  code.insert(code.end(), p.a.code.begin(), p.a.code.end());
  return Element(std::move(code));
}

ZSElement zs_decode(const Element& e) {
  const auto n = static_cast<std::ptrdiff_t>(e[0]);
  const auto first = e.code.begin() + 1;
  return {Element(std::vector<std::int64_t>(first, first + n)),
          Element(std::vector<std::int64_t>(first + n, e.code.end()))};
}

namespace {

std::string trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return std::string(s.substr(b, e - b + 1));
}

ZSElement parse_zs(const ZSDescriptor& d, std::string_view t) {
  const auto s = trim(t);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') {
    throw ParseError("expected a parenthesised pair", 0, "(u ; a)");
  }
  int depth = 0;
  std::size_t split = std::string::npos;
  for (std::size_t i = 1; i + 1 < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == ';' && depth == 0) {
      if (split != std::string::npos) throw ParseError("second ';'", i, "')'");
      split = i;
    }
  }
  if (split == std::string::npos) throw ParseError("missing ';'", s.size() - 1, "';'");
  const auto u_text = trim(std::string_view(s).substr(1, split - 1));
  const auto a_text = trim(std::string_view(s).substr(split + 1, s.size() - split - 2));
  try {
    ZSElement out{d.U.parse(u_text), d.A.parse(a_text)};
    return out;
  } catch (const ParseError& e) {
    throw ParseError(std::string("in component: ") + e.what(), split, e.expected());
  }
}

}  // namespace

SemigroupDescriptor zs_product(const ZSDescriptor& d) {
  SemigroupDescriptor s;
  s.name = "zs:" + d.name;
  s.identity = zs_encode({d.U.identity, d.A.identity});
  for (const auto& g : d.U.generators) s.generators.push_back(zs_encode({g, d.A.identity}));
  for (const auto& h : d.A.generators) s.generators.push_back(zs_encode({d.U.identity, h}));
  s.multiply = [d](const Element& p, const Element& q) {
    return zs_encode(zs_multiply(d, zs_decode(p), zs_decode(q)));
  };
  s.is_unit = [d](const Element& p) {
    const auto z = zs_decode(p);
    return d.U.is_unit(z.u) && d.A.is_unit(z.a);
  };
  s.left_divide = [d](const Element& p, const Element& r) -> std::optional<Element> {
    const auto pz = zs_decode(p);
    const auto rz = zs_decode(r);
    auto vp = d.U.left_divide(pz.u, rz.u);
    if (!vp) return std::nullopt;
    auto v = d.action_inverse(pz.a, *vp);
    auto b = d.A.left_divide(d.restriction(pz.a, v), rz.a);
    if (!b) return std::nullopt;
    return zs_encode({std::move(v), std::move(*b)});
  };
  if (d.U.has_right_lcm()) {
    s.right_lcm = [d](const Element& p, const Element& q) -> RightLcmResult {
      auto l = zs_right_lcm(d, zs_decode(p), zs_decode(q));
      if (!l) return std::nullopt;
      return LcmWitness{zs_encode(l->lcm), zs_encode(l->left_comp), zs_encode(l->right_comp)};
    };
  }
  s.display = [d](const Element& p) {
    const auto z = zs_decode(p);
    return "(" + d.U.display(z.u) + " ; " + d.A.display(z.a) + ")";
  };
  s.parse = [d](std::string_view t) { return zs_encode(parse_zs(d, t)); };
  return s;
}

// ---------------------------------------------------------------------------
// Examples

namespace {

/// b^beta acting on a word of letters b^k a; returns (word, carried b-power).
std::pair<Element, std::int64_t> bs_act(BSParams params, std::int64_t beta, const Element& w) {
  std::vector<std::int64_t> out;
  out.reserve(w.size());
  for (auto k : w.code) {
    const auto s = k + beta;
    out.push_back(s % params.d);
    beta = params.c * (s / params.d);
  }
  return {Element(std::move(out)), beta};
}

}  // namespace

ZSDescriptor zs_bs(BSParams params) {
  ZSDescriptor d;
  d.name = "bs:" + std::to_string(params.c) + "," + std::to_string(params.d);
  d.U = free_monoid(params.d);
  d.A = nat_additive("b");
  d.action = [params](const Element& a, const Element& u) { return bs_act(params, a[0], u).first; };
  d.restriction = [params](const Element& a, const Element& u) {
    return Element{bs_act(params, a[0], u).second};
  };
  d.action_inverse = [params](const Element& a, const Element& u) {
    std::vector<std::int64_t> out;
    std::int64_t beta = a[0];
    for (auto t : u.code) {
      const auto k = euclid_mod(t - beta, params.d);
      out.push_back(k);
      beta = params.c * ((k + beta) / params.d);
    }
    return Element(std::move(out));
  };
  return d;
}

ZSDescriptor zs_nxn() {
  ZSDescriptor d;
  d.name = "nxn";
  d.U = frac_semigroup();
  d.A = nxn_translations();
  d.action = [](const Element& a, const Element& u) {
    return Element{euclid_mod(a[0] + u[0], u[1]), u[1]};
  };
  d.restriction = [](const Element& a, const Element& u) { return Element{floor_div(a[0] + u[0], u[1])}; };
  d.action_inverse = [](const Element& a, const Element& u) {
    return Element{euclid_mod(u[0] - a[0], u[1]), u[1]};
  };
  return d;
}

ZSDescriptor zs_zxz() {
  ZSDescriptor d;
  d.name = "zxz";
  d.U = frac_semigroup();
  d.A = zxz_signed_translations();
  d.action = [](const Element& a, const Element& u) {
    return Element{euclid_mod(a[0] + a[1] * u[0], u[1]), u[1]};
  };
  d.restriction = [](const Element& a, const Element& u) {
    return Element{floor_div(a[0] + a[1] * u[0], u[1]), a[1]};
  };
  d.action_inverse = [](const Element& a, const Element& u) {
    return Element{euclid_mod(a[1] * (u[0] - a[0]), u[1]), u[1]};
  };
  return d;
}

ZSElement bs_to_zs(const BSNormalForm& p) {
  return {Element(std::vector<std::int64_t>(p.alphas.begin(), p.alphas.end())), Element{p.beta}};
}

BSNormalForm zs_to_bs(const ZSElement& p) {
  return BSNormalForm{std::vector<int>(p.u.code.begin(), p.u.code.end()), p.a[0]};
}

ZSElement nxn_to_zs(NatAffine p) {
  const auto [u, t] = nxn_decompose(p);
  return {encode(u), Element{t.m}};
}

NatAffine zs_to_nxn(const ZSElement& p) { return nxn_multiply({p.u[0], p.u[1]}, {p.a[0], 1}); }

ZSElement zxz_to_zs(IntAffine p) {
  const auto [u, t] = zxz_decompose(p);
  return {encode(u), Element{t.m, t.a}};
}

IntAffine zs_to_zxz(const ZSElement& p) { return zxz_multiply({p.u[0], p.u[1]}, {p.a[0], p.a[1]}); }

SemigroupDescriptor bs_semigroup_with_lcm(BSParams params) {
  auto s = bs_semigroup(params);
  s.right_lcm = [d = zs_bs(params)](const Element& p, const Element& q) -> RightLcmResult {
    auto l = zs_right_lcm(d, bs_to_zs(decode_bs(p)), bs_to_zs(decode_bs(q)));
    if (!l) return std::nullopt;
    return LcmWitness{encode(zs_to_bs(l->lcm)), encode(zs_to_bs(l->left_comp)),
                      encode(zs_to_bs(l->right_comp))};
  };
  return s;
}

}  // namespace rlcm
