#include "rlcm/registry.hpp"

#include "rlcm/self_similar.hpp"
#include "rlcm/text.hpp"
#include "rlcm/zoo.hpp"

namespace rlcm {

namespace {

std::vector<int> int_params(std::string_view sel, std::string_view rest, std::size_t count) {
  std::vector<int> out;
  try {
    text::Cursor cur(rest);
    for (std::size_t i = 0; i < count; ++i) {
      if (i > 0) cur.expect(',');
      out.push_back(static_cast<int>(cur.integer()));
    }
    cur.expect_end();
  } catch (const ParseError&) {
    throw UnknownSelector("malformed selector " + std::string(sel));
  }
  return out;
}

bool starts(std::string_view s, std::string_view prefix) { return s.substr(0, prefix.size()) == prefix; }

BSParams bs_params(std::string_view sel, std::string_view rest) {
  const auto p = int_params(sel, rest, 2);
  if (p[0] < 1 || p[1] < 1 || p[1] > 10) throw UnknownSelector("bs needs c >= 1 and 1 <= d <= 10: " + std::string(sel));
  return {p[0], p[1]};
}

ThetaTable theta_params(std::string_view sel, std::string_view rest) {
  const auto p = int_params(sel, rest, 2);
  if (p[0] < 2 || p[1] < 2 || p[0] > 10 || p[1] > 10) {
    throw UnknownSelector("ftheta needs 2 <= m, n <= 10: " + std::string(sel));
  }
  return theta_build(p[0], p[1]);
}

}  // namespace

std::optional<ZSDescriptor> zs_for(std::string_view selector) {
  if (!starts(selector, "zs:")) return std::nullopt;
  const auto name = selector.substr(3);
  if (name == "nxn") return zs_nxn();
  if (name == "zxz") return zs_zxz();
  if (starts(name, "bs:")) return zs_bs(bs_params(selector, name.substr(3)));
  if (starts(name, "odo:")) {
    const auto n = int_params(selector, name.substr(4), 1)[0];
    if (n < 2 || n > 10) throw UnknownSelector("odometer needs 2 <= n <= 10");
    return zs_odometer(n);
  }
  if (starts(name, "ftheta:")) return zs_ftheta(theta_params(selector, name.substr(7)));
  throw UnknownSelector("unknown Zappa-Szep product " + std::string(selector));
}

SemigroupDescriptor semigroup_for(std::string_view selector) {
  if (auto zs = zs_for(selector)) return zs_product(*zs);
  if (selector == "nat") return nat_additive();
  if (selector == "frac") return frac_semigroup();
  if (selector == "nxn") return nxn_semigroup();
  if (selector == "zxz") return zxz_semigroup();
  if (starts(selector, "free:")) {
    const auto k = int_params(selector, selector.substr(5), 1)[0];
    if (k < 1 || k > 10) throw UnknownSelector("free needs 1 <= k <= 10");
    return free_monoid(k);
  }
  if (starts(selector, "bs:")) return bs_semigroup_with_lcm(bs_params(selector, selector.substr(3)));
  if (starts(selector, "ftheta:")) return ftheta_semigroup(theta_params(selector, selector.substr(7)));
  throw UnknownSelector("unknown semigroup " + std::string(selector));
}

WordContext word_context(std::string_view selector) {
  WordContext ctx;
  ctx.semigroup = semigroup_for(selector);
  if (auto zs = zs_for(selector)) {
    ctx.parse_t = [d = *zs](std::string_view t) { return zs_encode({d.U.parse(t), d.A.identity}); };
    ctx.parse_s = [d = *zs](std::string_view t) { return zs_encode({d.U.identity, d.A.parse(t)}); };
  } else if (selector == "nxn" || selector == "zxz") {
    ctx.parse_t = [u = frac_semigroup()](std::string_view t) { return u.parse(t); };
    if (selector == "nxn") {
      ctx.parse_s = [a = nxn_translations()](std::string_view t) { return Element{a.parse(t)[0], 1}; };
    } else {
      ctx.parse_s = [a = zxz_signed_translations()](std::string_view t) { return a.parse(t); };
    }
  } else if (starts(selector, "bs:")) {
    const auto params = bs_params(selector, selector.substr(3));
    ctx.parse_t = [u = free_monoid(params.d)](std::string_view t) {
      return encode(zs_to_bs({u.parse(t), Element{0}}));
    };
    ctx.parse_s = [a = nat_additive("b")](std::string_view t) { return encode(BSNormalForm{{}, a.parse(t)[0]}); };
  }
  return ctx;
}

Element parse_element(std::string_view selector, std::string_view text) {
  if (text.empty()) throw ParseError("empty element", 0, "element text");
  return semigroup_for(selector).parse(text);
}

std::vector<std::string> registered_selectors() {
  return {"free:2",     "free:3",      "nat",        "frac",         "nxn",       "zxz",
          "bs:1,2",     "bs:2,3",      "bs:3,2",     "ftheta:2,2",   "ftheta:2,3", "ftheta:3,4",
          "zs:bs:1,2",  "zs:bs:2,3",   "zs:nxn",     "zs:zxz",       "zs:odo:2",  "zs:odo:3",
          "zs:ftheta:2,3"};
}

std::vector<std::string> zs_example_selectors() {
  return {"zs:bs:1,2", "zs:bs:2,3", "zs:nxn", "zs:zxz", "zs:odo:2", "zs:odo:3", "zs:ftheta:2,3"};
}

}  // namespace rlcm
