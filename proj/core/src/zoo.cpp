#include "rlcm/zoo.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>
#include <string>

#include "rlcm/text.hpp"

namespace rlcm {

// ---------------------------------------------------------------------------
// N x| N^x and friends

NatAffine nxn_multiply(NatAffine p, NatAffine q) { return {p.m + p.a * q.m, p.a * q.a}; }

std::pair<FracPair, NatAffine> nxn_decompose(NatAffine p) {
  const auto r = euclid_mod(p.m, p.a);
  return {FracPair{r, p.a}, NatAffine{(p.m - r) / p.a, 1}};
}

FracPair frac_multiply(FracPair p, FracPair q) { return {p.r + p.x * q.r, p.x * q.x}; }

std::optional<std::int64_t> least_common_element(std::int64_t r, std::int64_t x,
                                                 std::int64_t s, std::int64_t y) {
  const auto g = std::gcd(x, y);
  if ((s - r) % g != 0) return std::nullopt;
  if (x < y) {
    std::swap(r, s);
    std::swap(x, y);
  }
  // Walk r, r + x, ... ; the residue mod y cycles with period y / g.
  const auto floor = std::max(r, s);
  std::int64_t l = r;
  if (l < floor) l += ((floor - l + x - 1) / x) * x;
  for (std::int64_t k = 0; k < y / g; ++k, l += x) {
    if (euclid_mod(l - s, y) == 0) return l;
  }
  return std::nullopt;
}

std::optional<LcmOf<FracPair>> frac_right_lcm(FracPair p, FracPair q) {
  auto l = least_common_element(p.r, p.x, q.r, q.x);
  if (!l) return std::nullopt;
  const auto big = std::lcm(p.x, q.x);
  const auto xp = big / p.x;
  const auto yp = big / q.x;
  const auto j = (*l - p.r) / p.x;
  const auto k = (*l - q.r) / q.x;
  if (!(j < xp && k < yp)) {
    throw std::logic_error("frac_right_lcm: complement outside U");
  }
  return LcmOf<FracPair>{{*l, big}, {j, xp}, {k, yp}};
}

namespace {

/// Solution of l = r (mod x), l = s (mod y) as a residue modulo lcm(x, y).
std::optional<std::int64_t> crt(std::int64_t r, std::int64_t x, std::int64_t s, std::int64_t y) {
  // Extended Euclid on (x, y).
  std::int64_t old_r = x, cur_r = y, old_s = 1, cur_s = 0;
  while (cur_r != 0) {
    const auto q = old_r / cur_r;
    std::tie(old_r, cur_r) = std::make_pair(cur_r, old_r - q * cur_r);
    std::tie(old_s, cur_s) = std::make_pair(cur_s, old_s - q * cur_s);
  }
  const auto g = old_r;
  if ((s - r) % g != 0) return std::nullopt;
  const auto big = x / g * y;
  // l = r + x * t with x t = s - r (mod y), t = old_s * (s - r)/g (mod y/g).
  const auto yg = y / g;
  const auto t = euclid_mod(old_s, yg) * euclid_mod((s - r) / g, yg) % yg;
  return euclid_mod(r + x * t, big);
}

}  // namespace

std::optional<LcmOf<NatAffine>> nxn_right_lcm(NatAffine p, NatAffine q) {
  auto residue = crt(p.m, p.a, q.m, q.a);
  if (!residue) return std::nullopt;
  const auto big = std::lcm(p.a, q.a);
  auto l = *residue;
  const auto floor = std::max(p.m, q.m);
  if (l < floor) l += ((floor - l + big - 1) / big) * big;
  return LcmOf<NatAffine>{{l, big}, {(l - p.m) / p.a, big / p.a}, {(l - q.m) / q.a, big / q.a}};
}

IntAffine zxz_multiply(IntAffine p, IntAffine q) { return {p.m + p.a * q.m, p.a * q.a}; }

std::pair<FracPair, IntAffine> zxz_decompose(IntAffine p) {
  const auto abs_a = p.a < 0 ? -p.a : p.a;
  const auto r = euclid_mod(p.m, abs_a);
  return {FracPair{r, abs_a}, IntAffine{(p.m - r) / abs_a, p.a / abs_a}};
}

std::optional<LcmOf<IntAffine>> zxz_right_lcm(IntAffine p, IntAffine q) {
  const auto pa = p.a < 0 ? -p.a : p.a;
  const auto qa = q.a < 0 ? -q.a : q.a;
  auto residue = crt(euclid_mod(p.m, pa), pa, euclid_mod(q.m, qa), qa);
  if (!residue) return std::nullopt;
  const auto big = std::lcm(pa, qa);
  const auto l = *residue;
  return LcmOf<IntAffine>{{l, big}, {(l - p.m) / p.a, big / p.a}, {(l - q.m) / q.a, big / q.a}};
}

// ---------------------------------------------------------------------------
// BS(c, d)^+

BSBlocks bs_blocks(const BSNormalForm& p) {
  BSBlocks blocks(p.alphas.begin(), p.alphas.end());
  blocks.push_back(p.beta);
  return blocks;
}

std::vector<std::size_t> bs_redexes(BSParams params, const BSBlocks& blocks) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + 1 < blocks.size(); ++i) {
    if (blocks[i] >= params.d) out.push_back(i);
  }
  return out;
}

void bs_rewrite_at(BSParams params, BSBlocks& blocks, std::size_t i) {
  if (i + 1 >= blocks.size() || blocks[i] < params.d) {
    throw std::invalid_argument("bs_rewrite_at: no redex at position");
  }
  blocks[i] -= params.d;
  blocks[i + 1] += params.c;
}

namespace {

BSNormalForm from_normal_blocks(const BSBlocks& blocks) {
  BSNormalForm out;
  out.alphas.reserve(blocks.size() - 1);
  for (std::size_t i = 0; i + 1 < blocks.size(); ++i) out.alphas.push_back(static_cast<int>(blocks[i]));
  out.beta = blocks.back();
  return out;
}

}  // namespace

BSNormalForm bs_normalize(BSParams params, BSBlocks blocks) {
  // The leftmost redex stays leftmost until its block drops below d, so a
  // run of q applications at position i collapses to one division.
  for (std::size_t i = 0; i + 1 < blocks.size(); ++i) {
    const auto q = blocks[i] / params.d;
    blocks[i] -= q * params.d;
    blocks[i + 1] += q * params.c;
  }
  return from_normal_blocks(blocks);
}

BSNormalForm bs_normalize_random(BSParams params, BSBlocks blocks, std::mt19937_64& rng) {
  for (auto redexes = bs_redexes(params, blocks); !redexes.empty();
       redexes = bs_redexes(params, blocks)) {
    std::uniform_int_distribution<std::size_t> pick(0, redexes.size() - 1);
    bs_rewrite_at(params, blocks, redexes[pick(rng)]);
  }
  return from_normal_blocks(blocks);
}

BSNormalForm bs_multiply(BSParams params, const BSNormalForm& p, const BSNormalForm& q) {
  BSBlocks blocks = bs_blocks(p);
  const BSBlocks tail = bs_blocks(q);
  blocks.back() += tail.front();
  blocks.insert(blocks.end(), tail.begin() + 1, tail.end());
  return bs_normalize(params, std::move(blocks));
}

// ---------------------------------------------------------------------------
// Encodings

Element encode(const FreeWord& w) { return Element(std::vector<std::int64_t>(w.letters.begin(), w.letters.end())); }
Element encode(FracPair p) { return Element{p.r, p.x}; }
Element encode(NatAffine p) { return Element{p.m, p.a}; }
Element encode(IntAffine p) { return Element{p.m, p.a}; }
Element encode(const BSNormalForm& p) {
  std::vector<std::int64_t> code{p.beta};
  code.insert(code.end(), p.alphas.begin(), p.alphas.end());
  return Element(std::move(code));
}

FreeWord decode_free(const Element& e) { return FreeWord{std::vector<int>(e.code.begin(), e.code.end())}; }
FracPair decode_frac(const Element& e) { return {e[0], e[1]}; }
NatAffine decode_nxn(const Element& e) { return {e[0], e[1]}; }
IntAffine decode_zxz(const Element& e) { return {e[0], e[1]}; }
BSNormalForm decode_bs(const Element& e) {
  BSNormalForm out;
  out.beta = e[0];
  out.alphas.assign(e.code.begin() + 1, e.code.end());
  return out;
}

// ---------------------------------------------------------------------------
// Descriptors

namespace {

constexpr std::string_view kEpsilon = "\xCE\xB5";  // UTF-8 epsilon

std::string power_text(const std::string& symbol, std::int64_t k) {
  if (k == 0) return "e";
  if (k == 1) return symbol;
  return symbol + "^" + std::to_string(k);
}

std::int64_t parse_power(text::Cursor& cur, const std::string& symbol) {
  if (cur.consume('e')) return 0;
  if (!cur.consume(symbol) && !(symbol == "g" && cur.consume("\xCE\xB3"))) {
    cur.fail("unexpected input", "'e' or '" + symbol + "'");
  }
  if (cur.consume('^')) return cur.integer();
  return 1;
}

std::pair<std::int64_t, std::int64_t> parse_pair(text::Cursor& cur) {
  cur.expect('(');
  const auto a = cur.integer();
  cur.expect(',');
  const auto b = cur.integer();
  cur.expect(')');
  return {a, b};
}

}  // namespace

SemigroupDescriptor free_monoid(int k) {
  if (k < 1 || k > 10) throw std::invalid_argument("free_monoid: alphabet size must be in [1, 10]");
  SemigroupDescriptor s;
  s.name = "free:" + std::to_string(k);
  s.identity = Element{};
  for (int x = 0; x < k; ++x) s.generators.push_back(Element{x});
  s.multiply = [](const Element& p, const Element& q) {
    Element out = p;
    out.code.insert(out.code.end(), q.code.begin(), q.code.end());
    return out;
  };
  s.is_unit = [](const Element& p) { return p.size() == 0; };
  s.left_divide = [](const Element& p, const Element& r) -> std::optional<Element> {
    if (p.size() > r.size() || !std::equal(p.code.begin(), p.code.end(), r.code.begin())) {
      return std::nullopt;
    }
    return Element(std::vector<std::int64_t>(r.code.begin() + static_cast<std::ptrdiff_t>(p.size()), r.code.end()));
  };
  s.right_lcm = [lhs = s.left_divide](const Element& p, const Element& q) -> RightLcmResult {
    if (auto d = lhs(p, q)) return LcmWitness{q, *d, Element{}};
    if (auto d = lhs(q, p)) return LcmWitness{p, Element{}, *d};
    return std::nullopt;
  };
  s.display = [](const Element& p) {
    if (p.size() == 0) return std::string(kEpsilon);
    std::string out;
    for (auto x : p.code) out += static_cast<char>('0' + x);
    return out;
  };
  s.parse = [k](std::string_view t) {
    text::Cursor cur(t);
    if (cur.consume(kEpsilon) || cur.consume('e')) {
      cur.expect_end();
      return Element{};
    }
    std::vector<std::int64_t> code;
    while (!cur.at_end()) {
      const char c = cur.peek();
      if (c < '0' || c >= '0' + k) cur.fail("letter outside alphabet", "digit below " + std::to_string(k));
      code.push_back(c - '0');
      cur.consume(c);
    }
    if (code.empty()) cur.fail("empty word", "letter or epsilon");
    return Element(std::move(code));
  };
  return s;
}

SemigroupDescriptor nat_additive(std::string symbol) {
  SemigroupDescriptor s;
  s.name = symbol.empty() ? "nat" : "nat:" + symbol;
  s.identity = Element{0};
  s.generators = {Element{1}};
  s.multiply = [](const Element& p, const Element& q) { return Element{p[0] + q[0]}; };
  s.is_unit = [](const Element& p) { return p[0] == 0; };
  s.left_divide = [](const Element& p, const Element& r) -> std::optional<Element> {
    if (r[0] < p[0]) return std::nullopt;
    return Element{r[0] - p[0]};
  };
  s.right_lcm = [](const Element& p, const Element& q) -> RightLcmResult {
    const auto m = std::max(p[0], q[0]);
    return LcmWitness{Element{m}, Element{m - p[0]}, Element{m - q[0]}};
  };
  if (symbol.empty()) {
    s.display = [](const Element& p) { return std::to_string(p[0]); };
    s.parse = [](std::string_view t) {
      text::Cursor cur(t);
      const auto v = cur.integer();
      if (v < 0) cur.fail("negative natural number", "non-negative integer");
      cur.expect_end();
      return Element{v};
    };
  } else {
    s.display = [symbol](const Element& p) { return power_text(symbol, p[0]); };
    s.parse = [symbol](std::string_view t) {
      text::Cursor cur(t);
      const auto v = parse_power(cur, symbol);
      if (v < 0) cur.fail("negative exponent", "non-negative exponent");
      cur.expect_end();
      return Element{v};
    };
  }
  return s;
}

SemigroupDescriptor int_group(std::string symbol) {
  SemigroupDescriptor s;
  s.name = "int:" + symbol;
  s.identity = Element{0};
  s.generators = {Element{1}, Element{-1}};
  s.multiply = [](const Element& p, const Element& q) { return Element{p[0] + q[0]}; };
  s.is_unit = [](const Element&) { return true; };
  s.left_divide = [](const Element& p, const Element& r) -> std::optional<Element> {
    return Element{r[0] - p[0]};
  };
  s.right_lcm = [](const Element& p, const Element& q) -> RightLcmResult {
    return LcmWitness{p, Element{0}, Element{p[0] - q[0]}};
  };
  s.display = [symbol](const Element& p) { return power_text(symbol, p[0]); };
  s.parse = [symbol](std::string_view t) {
    text::Cursor cur(t);
    const auto v = parse_power(cur, symbol);
    cur.expect_end();
    return Element{v};
  };
  return s;
}

SemigroupDescriptor frac_semigroup() {
  SemigroupDescriptor s;
  s.name = "frac";
  s.identity = encode(FracPair{0, 1});
  for (std::int64_t p : {2, 3}) {
    for (std::int64_t r = 0; r < p; ++r) s.generators.push_back(encode(FracPair{r, p}));
  }
  s.multiply = [](const Element& p, const Element& q) {
    return encode(frac_multiply(decode_frac(p), decode_frac(q)));
  };
  s.is_unit = [](const Element& p) { return p[1] == 1; };
  s.left_divide = [](const Element& p, const Element& w) -> std::optional<Element> {
    const auto [r, x] = decode_frac(p);
    const auto [t, z] = decode_frac(w);
    if (z % x != 0 || t < r || (t - r) % x != 0) return std::nullopt;
    return encode(FracPair{(t - r) / x, z / x});
  };
  s.right_lcm = [](const Element& p, const Element& q) -> RightLcmResult {
    auto l = frac_right_lcm(decode_frac(p), decode_frac(q));
    if (!l) return std::nullopt;
    return LcmWitness{encode(l->lcm), encode(l->left_comp), encode(l->right_comp)};
  };
  s.display = [](const Element& p) { return text::pair_text(p[0], p[1]); };
  s.parse = [](std::string_view t) {
    text::Cursor cur(t);
    const auto [r, x] = parse_pair(cur);
    cur.expect_end();
    if (x < 1 || r < 0 || r >= x) throw ParseError("pair outside U: need 0 <= r < x", 0, "(r,x)");
    return encode(FracPair{r, x});
  };
  return s;
}

SemigroupDescriptor nxn_semigroup() {
  SemigroupDescriptor s;
  s.name = "nxn";
  s.identity = encode(NatAffine{0, 1});
  s.generators = {encode(NatAffine{1, 1}), encode(NatAffine{0, 2}), encode(NatAffine{0, 3})};
  s.multiply = [](const Element& p, const Element& q) {
    return encode(nxn_multiply(decode_nxn(p), decode_nxn(q)));
  };
  s.is_unit = [](const Element& p) { return p[0] == 0 && p[1] == 1; };
  s.left_divide = [](const Element& p, const Element& w) -> std::optional<Element> {
    const auto [m, a] = decode_nxn(p);
    const auto [n, b] = decode_nxn(w);
    if (b % a != 0 || n < m || (n - m) % a != 0) return std::nullopt;
    return encode(NatAffine{(n - m) / a, b / a});
  };
  s.right_lcm = [](const Element& p, const Element& q) -> RightLcmResult {
    auto l = nxn_right_lcm(decode_nxn(p), decode_nxn(q));
    if (!l) return std::nullopt;
    return LcmWitness{encode(l->lcm), encode(l->left_comp), encode(l->right_comp)};
  };
  s.display = [](const Element& p) { return text::pair_text(p[0], p[1]); };
  s.parse = [](std::string_view t) {
    text::Cursor cur(t);
    const auto [m, a] = parse_pair(cur);
    cur.expect_end();
    if (m < 0 || a < 1) throw ParseError("pair outside N x| N^x", 0, "(m,a) with m >= 0, a >= 1");
    return encode(NatAffine{m, a});
  };
  return s;
}

SemigroupDescriptor nxn_translations() {
  SemigroupDescriptor s;
  s.name = "nxn-translations";
  s.identity = Element{0};
  s.generators = {Element{1}};
  s.multiply = [](const Element& p, const Element& q) { return Element{p[0] + q[0]}; };
  s.is_unit = [](const Element& p) { return p[0] == 0; };
  s.left_divide = [](const Element& p, const Element& r) -> std::optional<Element> {
    if (r[0] < p[0]) return std::nullopt;
    return Element{r[0] - p[0]};
  };
  s.right_lcm = [](const Element& p, const Element& q) -> RightLcmResult {
    const auto m = std::max(p[0], q[0]);
    return LcmWitness{Element{m}, Element{m - p[0]}, Element{m - q[0]}};
  };
  s.display = [](const Element& p) { return text::pair_text(p[0], 1); };
  s.parse = [](std::string_view t) {
    text::Cursor cur(t);
    const auto [m, one] = parse_pair(cur);
    cur.expect_end();
    if (m < 0 || one != 1) throw ParseError("not a translation (m,1)", 0, "(m,1) with m >= 0");
    return Element{m};
  };
  return s;
}

SemigroupDescriptor zxz_semigroup() {
  SemigroupDescriptor s;
  s.name = "zxz";
  s.identity = encode(IntAffine{0, 1});
  s.generators = {encode(IntAffine{1, 1}), encode(IntAffine{-1, 1}), encode(IntAffine{0, -1}),
                  encode(IntAffine{0, 2}), encode(IntAffine{0, 3})};
  s.multiply = [](const Element& p, const Element& q) {
    return encode(zxz_multiply(decode_zxz(p), decode_zxz(q)));
  };
  s.is_unit = [](const Element& p) { return p[1] == 1 || p[1] == -1; };
  s.left_divide = [](const Element& p, const Element& w) -> std::optional<Element> {
    const auto [m, a] = decode_zxz(p);
    const auto [n, b] = decode_zxz(w);
    if (b % a != 0 || (n - m) % a != 0) return std::nullopt;
    return encode(IntAffine{(n - m) / a, b / a});
  };
  s.right_lcm = [](const Element& p, const Element& q) -> RightLcmResult {
    auto l = zxz_right_lcm(decode_zxz(p), decode_zxz(q));
    if (!l) return std::nullopt;
    return LcmWitness{encode(l->lcm), encode(l->left_comp), encode(l->right_comp)};
  };
  s.display = [](const Element& p) { return text::pair_text(p[0], p[1]); };
  s.parse = [](std::string_view t) {
    text::Cursor cur(t);
    const auto [m, a] = parse_pair(cur);
    cur.expect_end();
    if (a == 0) throw ParseError("zero multiplier", 0, "(m,a) with a != 0");
    return encode(IntAffine{m, a});
  };
  return s;
}

SemigroupDescriptor zxz_signed_translations() {
  SemigroupDescriptor s;
  s.name = "zxz-translations";
  s.identity = Element{0, 1};
  s.generators = {Element{1, 1}, Element{-1, 1}, Element{0, -1}};
  s.multiply = [](const Element& p, const Element& q) {
    return encode(zxz_multiply(decode_zxz(p), decode_zxz(q)));
  };
  s.is_unit = [](const Element&) { return true; };
  s.left_divide = [](const Element& p, const Element& w) -> std::optional<Element> {
    // (m, j)^{-1} = (-j m, j).
    const auto [m, j] = decode_zxz(p);
    return encode(zxz_multiply(IntAffine{-j * m, j}, decode_zxz(w)));
  };
  s.right_lcm = [](const Element& p, const Element& q) -> RightLcmResult {
    const auto [m, j] = decode_zxz(q);
    const auto qinv = IntAffine{-j * m, j};
    return LcmWitness{p, Element{0, 1}, encode(zxz_multiply(qinv, decode_zxz(p)))};
  };
  s.display = [](const Element& p) { return text::pair_text(p[0], p[1]); };
  s.parse = [](std::string_view t) {
    text::Cursor cur(t);
    const auto [m, j] = parse_pair(cur);
    cur.expect_end();
    if (j != 1 && j != -1) throw ParseError("not a signed translation", 0, "(m,j) with j = +-1");
    return Element{m, j};
  };
  return s;
}

namespace {

std::string bs_text(const BSNormalForm& p) {
  std::vector<std::string> parts;
  auto bpow = [](std::int64_t k) { return k == 1 ? std::string("b") : "b^" + std::to_string(k); };
  for (auto alpha : p.alphas) {
    if (alpha > 0) parts.push_back(bpow(alpha));
    parts.emplace_back("a");
  }
  if (p.beta > 0) parts.push_back(bpow(p.beta));
  if (parts.empty()) return "e";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += "*" + parts[i];
  return out;
}

/// Any positive word over {a, b}, with optional '*' separators and powers.
BSBlocks parse_bs_word(std::string_view t) {
  text::Cursor cur(t);
  BSBlocks blocks{0};
  if (cur.consume('e')) {
    cur.expect_end();
    return blocks;
  }
  bool any = false;
  while (!cur.at_end()) {
    if (any) cur.consume('*');
    const char c = cur.peek();
    if (c != 'a' && c != 'b') cur.fail("unexpected letter", "'a' or 'b'");
    cur.consume(c);
    std::int64_t k = 1;
    if (cur.consume('^')) {
      k = cur.integer();
      if (k < 0) cur.fail("negative exponent", "non-negative exponent");
    }
    if (c == 'b') {
      blocks.back() += k;
    } else {
      for (std::int64_t i = 0; i < k; ++i) blocks.push_back(0);
    }
    any = true;
  }
  if (!any) cur.fail("empty word", "'a', 'b' or 'e'");
  return blocks;
}

}  // namespace

SemigroupDescriptor bs_semigroup(BSParams params) {
  if (params.c < 1 || params.d < 1) throw std::invalid_argument("bs_semigroup: c, d must be positive");
  SemigroupDescriptor s;
  s.name = "bs:" + std::to_string(params.c) + "," + std::to_string(params.d);
  s.identity = encode(BSNormalForm{});
  s.generators = {encode(BSNormalForm{{0}, 0}), encode(BSNormalForm{{}, 1})};
  s.multiply = [params](const Element& p, const Element& q) {
    return encode(bs_multiply(params, decode_bs(p), decode_bs(q)));
  };
  s.is_unit = [](const Element& p) { return p.size() == 1 && p[0] == 0; };
  // p = u b^beta divides w iff u is a prefix of the U-part of w and the
  // remainder v satisfies b^beta s = v; the b-power acts letterwise with carry.
  s.left_divide = [params](const Element& p, const Element& w) -> std::optional<Element> {
    const auto pp = decode_bs(p);
    const auto ww = decode_bs(w);
    if (ww.alphas.size() < pp.alphas.size()) return std::nullopt;
    for (std::size_t i = 0; i < pp.alphas.size(); ++i) {
      if (pp.alphas[i] != ww.alphas[i]) return std::nullopt;
    }
    BSNormalForm v{{ww.alphas.begin() + static_cast<std::ptrdiff_t>(pp.alphas.size()), ww.alphas.end()}, ww.beta};
    std::int64_t carry = pp.beta;
    BSNormalForm sol;
    for (auto target : v.alphas) {
      const auto k = euclid_mod(target - carry, params.d);
      sol.alphas.push_back(static_cast<int>(k));
      carry = params.c * ((k + carry) / params.d);
    }
    if (v.beta < carry) return std::nullopt;
    sol.beta = v.beta - carry;
    return encode(sol);
  };
  s.display = [](const Element& p) { return bs_text(decode_bs(p)); };
  s.parse = [params](std::string_view t) { return encode(bs_normalize(params, parse_bs_word(t))); };
  return s;
}

}  // namespace rlcm
