#include "rlcm/self_similar.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "rlcm/text.hpp"

namespace rlcm {

// ---------------------------------------------------------------------------
// Adding machine

namespace {

/// gamma^k . x and gamma^k|_x, one generator at a time.
std::pair<int, std::int64_t> odometer_step(int n, std::int64_t k, int x) {
  std::int64_t res = 0;
  if (k >= 0) {
    for (std::int64_t t = 0; t < k; ++t) {
      res += (x == n - 1) ? 1 : 0;
      x = (x + 1) % n;
    }
  } else {
    for (std::int64_t t = 0; t < -k; ++t) {
      res -= (x == 0) ? 1 : 0;
      x = (x + n - 1) % n;
    }
  }
  return {x, res};
}

}  // namespace

SSADescriptor adding_machine(int n) {
  if (n < 2 || n > 10) throw std::invalid_argument("adding_machine: alphabet size must be in [2, 10]");
  SSADescriptor d;
  d.name = "odometer:" + std::to_string(n);
  d.alphabet = n;
  d.act = [n](std::int64_t g, int x) { return odometer_step(n, g, x).first; };
  d.res = [n](std::int64_t g, int x) { return odometer_step(n, g, x).second; };
  return d;
}

std::pair<FreeWord, std::int64_t> ssa_act_word(const SSADescriptor& d, std::int64_t g, const FreeWord& w) {
  FreeWord out;
  out.letters.reserve(w.letters.size());
  for (int x : w.letters) {
    out.letters.push_back(d.act(g, x));
    g = d.res(g, x);
  }
  return {std::move(out), g};
}

ZSDescriptor zs_odometer(int n) {
  ZSDescriptor z;
  z.name = "odo:" + std::to_string(n);
  z.U = free_monoid(n);
  z.A = nat_additive("g");
  auto ssa = adding_machine(n);
  z.action = [ssa](const Element& a, const Element& u) {
    return encode(ssa_act_word(ssa, a[0], decode_free(u)).first);
  };
  z.restriction = [ssa](const Element& a, const Element& u) {
    return Element{ssa_act_word(ssa, a[0], decode_free(u)).second};
  };
  z.action_inverse = [ssa](const Element& a, const Element& u) {
    return encode(ssa_act_word(ssa, -a[0], decode_free(u)).first);
  };
  return z;
}

// ---------------------------------------------------------------------------
// Theta tables and 2-graph words

bool ThetaTable::is_bijection() const {
  std::vector<bool> hit(static_cast<std::size_t>(m * n), false);
  for (auto [i, j] : entries) {
    if (i < 0 || i >= m || j < 0 || j >= n) return false;
    const auto k = static_cast<std::size_t>(j * m + i);
    if (hit[k]) return false;
    hit[k] = true;
  }
  return entries.size() == hit.size();
}

ThetaTable theta_build(int m, int n) {
  if (m < 2 || n < 2) throw std::invalid_argument("theta_build: m, n must be at least 2");
  ThetaTable t;
  t.m = m;
  t.n = n;
  t.entries.resize(static_cast<std::size_t>(m * n));
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < m; ++i) {
      const int k = j + i * n;
      t.at(j, i) = {k % m, k / m};
    }
  }
  return t;
}

std::vector<TwoGraphLetter> ftheta_letters(const TwoGraphWord& z) {
  std::vector<TwoGraphLetter> out;
  out.reserve(z.x.letters.size() + z.y.letters.size());
  for (int i : z.x.letters) out.push_back({false, i});
  for (int j : z.y.letters) out.push_back({true, j});
  return out;
}

namespace {

TwoGraphWord split_normal(const std::vector<TwoGraphLetter>& w) {
  TwoGraphWord z;
  for (const auto& l : w) (l.is_y ? z.y : z.x).letters.push_back(l.index);
  return z;
}

void rewrite_yx(const ThetaTable& t, std::vector<TwoGraphLetter>& w, std::size_t k) {
  const auto [i2, j2] = t.at(w[k].index, w[k + 1].index);
  w[k] = {false, i2};
  w[k + 1] = {true, j2};
}

}  // namespace

TwoGraphWord ftheta_normalize(const ThetaTable& t, std::vector<TwoGraphLetter> word) {
  for (;;) {
    std::size_t k = 0;
    while (k + 1 < word.size() && !(word[k].is_y && !word[k + 1].is_y)) ++k;
    if (k + 1 >= word.size()) break;
    rewrite_yx(t, word, k);
  }
  return split_normal(word);
}

TwoGraphWord ftheta_normalize_random(const ThetaTable& t, std::vector<TwoGraphLetter> word,
                                     std::mt19937_64& rng) {
  for (;;) {
    std::vector<std::size_t> redexes;
    for (std::size_t k = 0; k + 1 < word.size(); ++k) {
      if (word[k].is_y && !word[k + 1].is_y) redexes.push_back(k);
    }
    if (redexes.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, redexes.size() - 1);
    rewrite_yx(t, word, redexes[pick(rng)]);
  }
  return split_normal(word);
}

TwoGraphWord ftheta_multiply(const ThetaTable& t, const TwoGraphWord& z1, const TwoGraphWord& z2) {
  // Only z1's Y-part has to cross z2's X-part.
  auto word = ftheta_letters(z1);
  auto tail = ftheta_letters(z2);
  word.insert(word.end(), tail.begin(), tail.end());
  return ftheta_normalize(t, std::move(word));
}

FracPair ftheta_embed(const ThetaTable& t, const TwoGraphWord& z) {
  FracPair p{0, 1};
  for (int i : z.x.letters) p = frac_multiply(p, {i, t.m});
  for (int j : z.y.letters) p = frac_multiply(p, {j, t.n});
  return p;
}

Element encode(const TwoGraphWord& z) {
  std::vector<std::int64_t> code{static_cast<std::int64_t>(z.x.letters.size())};
  code.insert(code.end(), z.x.letters.begin(), z.x.letters.end());
  code.insert(code.end(), z.y.letters.begin(), z.y.letters.end());
  return Element(std::move(code));
}

TwoGraphWord decode_ftheta(const Element& e) {
  const auto nx = static_cast<std::ptrdiff_t>(e[0]);
  const auto first = e.code.begin() + 1;
  return {FreeWord{std::vector<int>(first, first + nx)}, FreeWord{std::vector<int>(first + nx, e.code.end())}};
}

std::string ftheta_text(const TwoGraphWord& z) {
  if (z.x.letters.empty() && z.y.letters.empty()) return "\xCE\xB5";
  std::string out;
  for (int i : z.x.letters) out += "x" + std::to_string(i);
  if (!z.x.letters.empty() && !z.y.letters.empty()) out += ".";
  for (int j : z.y.letters) out += "y" + std::to_string(j);
  return out;
}

namespace {

std::vector<TwoGraphLetter> parse_ftheta_letters(const ThetaTable& t, std::string_view s) {
  text::Cursor cur(s);
  std::vector<TwoGraphLetter> word;
  if (cur.consume("\xCE\xB5") || cur.consume('e')) {
    cur.expect_end();
    return word;
  }
  while (!cur.at_end()) {
    if (cur.consume('.') || cur.consume('*')) continue;
    const char c = cur.peek();
    if (c != 'x' && c != 'y') cur.fail("unexpected letter", "'x<i>' or 'y<j>'");
    cur.consume(c);
    if (!cur.next_is_digit()) cur.fail("missing index", "letter index");
    const auto idx = cur.integer();
    const int bound = c == 'x' ? t.m : t.n;
    if (idx < 0 || idx >= bound) cur.fail("letter index out of range", "index below " + std::to_string(bound));
    word.push_back({c == 'y', static_cast<int>(idx)});
  }
  if (word.empty()) cur.fail("empty word", "letters or epsilon");
  return word;
}

/// Moves a block X^k Y^b to Y^b X^k through the inverse table.
std::vector<TwoGraphLetter> y_first(const std::vector<std::pair<int, int>>& inverse, int m,
                                    std::vector<TwoGraphLetter> w) {
  for (;;) {
    std::size_t k = 0;
    while (k + 1 < w.size() && !(!w[k].is_y && w[k + 1].is_y)) ++k;
    if (k + 1 >= w.size()) return w;
    const auto [j, i] = inverse[static_cast<std::size_t>(w[k + 1].index * m + w[k].index)];
    w[k] = {true, j};
    w[k + 1] = {false, i};
  }
}

}  // namespace

SemigroupDescriptor ftheta_semigroup(const ThetaTable& t) {
  if (!t.is_bijection()) throw std::invalid_argument("ftheta_semigroup: theta is not a bijection");
  SemigroupDescriptor s;
  s.name = "ftheta:" + std::to_string(t.m) + "," + std::to_string(t.n);
  s.identity = encode(TwoGraphWord{});
  for (int i = 0; i < t.m; ++i) s.generators.push_back(encode(TwoGraphWord{{{i}}, {}}));
  for (int j = 0; j < t.n; ++j) s.generators.push_back(encode(TwoGraphWord{{}, {{j}}}));
  s.multiply = [t](const Element& p, const Element& q) {
    return encode(ftheta_multiply(t, decode_ftheta(p), decode_ftheta(q)));
  };
  s.is_unit = [](const Element& p) { return p.size() == 1; };

  // inverse[j' * m + i'] = (j, i) with theta(y_j, x_i) = (x_i', y_j').
  std::vector<std::pair<int, int>> inverse(t.entries.size());
  for (int j = 0; j < t.n; ++j) {
    for (int i = 0; i < t.m; ++i) {
      const auto [i2, j2] = t.at(j, i);
      inverse[static_cast<std::size_t>(j2 * t.m + i2)] = {j, i};
    }
  }
  s.left_divide = [inverse, m = t.m](const Element& p, const Element& r) -> std::optional<Element> {
    // Factor r uniquely as (bidegree of p) * rest and compare the prefix.
    const auto pz = decode_ftheta(p);
    const auto rz = decode_ftheta(r);
    const auto a = pz.x.letters.size();
    const auto b = pz.y.letters.size();
    if (a > rz.x.letters.size() || b > rz.y.letters.size()) return std::nullopt;
    if (!std::equal(pz.x.letters.begin(), pz.x.letters.end(), rz.x.letters.begin())) return std::nullopt;
    std::vector<TwoGraphLetter> mid;
    for (auto k = a; k < rz.x.letters.size(); ++k) mid.push_back({false, rz.x.letters[k]});
    for (std::size_t k = 0; k < b; ++k) mid.push_back({true, rz.y.letters[k]});
    mid = y_first(inverse, m, std::move(mid));
    for (std::size_t k = 0; k < b; ++k) {
      if (mid[k].index != pz.y.letters[k]) return std::nullopt;
    }
    TwoGraphWord rest;
    for (auto k = b; k < mid.size(); ++k) rest.x.letters.push_back(mid[k].index);
    rest.y.letters.assign(rz.y.letters.begin() + static_cast<std::ptrdiff_t>(b), rz.y.letters.end());
    return encode(rest);
  };

  if (std::gcd(t.m, t.n) == 1) {
    s.right_lcm = [t, div = s.left_divide](const Element& p, const Element& q) -> RightLcmResult {
      auto l = frac_right_lcm(ftheta_embed(t, decode_ftheta(p)), ftheta_embed(t, decode_ftheta(q)));
      if (!l) return std::nullopt;
      auto big = l->lcm.x;
      int nx = 0;
      int ny = 0;
      while (big % t.m == 0) big /= t.m, ++nx;
      while (big % t.n == 0) big /= t.n, ++ny;
      if (big != 1) throw std::logic_error("ftheta right LCM left the embedded image");
      TwoGraphWord z;
      auto r = l->lcm.r;
      for (int k = 0; k < nx; ++k, r /= t.m) z.x.letters.push_back(static_cast<int>(r % t.m));
      for (int k = 0; k < ny; ++k, r /= t.n) z.y.letters.push_back(static_cast<int>(r % t.n));
      auto w = encode(z);
      auto pc = div(p, w);
      auto qc = div(q, w);
      if (!pc || !qc) throw std::logic_error("ftheta right LCM is not a common multiple");
      return LcmWitness{w, *pc, *qc};
    };
  }
  s.display = [](const Element& p) { return ftheta_text(decode_ftheta(p)); };
  s.parse = [t](std::string_view text) { return encode(ftheta_normalize(t, parse_ftheta_letters(t, text))); };
  return s;
}

ZSDescriptor zs_ftheta(const ThetaTable& t) {
  ZSDescriptor z;
  z.name = "ftheta:" + std::to_string(t.m) + "," + std::to_string(t.n);
  z.U = ftheta_semigroup(t);
  z.A = int_group("g");
  auto dx = adding_machine(t.m);
  auto dy = adding_machine(t.n);
  auto act = [dx, dy](std::int64_t g, const Element& u) {
    const auto w = decode_ftheta(u);
    auto [vx, gx] = ssa_act_word(dx, g, w.x);
    auto [vy, gy] = ssa_act_word(dy, gx, w.y);
    return std::make_pair(encode(TwoGraphWord{std::move(vx), std::move(vy)}), gy);
  };
  z.action = [act](const Element& a, const Element& u) { return act(a[0], u).first; };
  z.restriction = [act](const Element& a, const Element& u) { return Element{act(a[0], u).second}; };
  z.action_inverse = [act](const Element& a, const Element& u) { return act(-a[0], u).first; };
  return z;
}

CheckReport prop_compat_check(const ThetaTable& t, const SSADescriptor& dx, const SSADescriptor& dy,
                              std::int64_t g_min, std::int64_t g_max) {
  CheckReport r;
  r.suite = "theta-compat:" + std::to_string(t.m) + "," + std::to_string(t.n);
  for (auto g = g_min; g <= g_max; ++g) {
    for (int j = 0; j < t.n; ++j) {
      for (int i = 0; i < t.m; ++i) {
        const auto [xi, yj] = t.at(j, i);
        const int gy = dy.act(g, j);
        const auto h = dy.res(g, j);
        const auto [xi2, yj2] = t.at(gy, dx.act(h, i));
        const auto witness = "g^" + std::to_string(g) + " y" + std::to_string(j) + " x" + std::to_string(i);
        ++r.compared;
        if (dx.act(-g, xi2) != xi) r.fail("theta-X", witness);
        ++r.compared;
        if (dy.act(-dx.res(g, xi), yj2) != yj) r.fail("theta-Y", witness);
      }
    }
  }
  return r;
}

SurveyVerdict ftheta_right_lcm_survey(const ThetaTable& t, int max_x, int max_y) {
  auto words = [](int k, int len_max) {
    std::vector<FreeWord> out{FreeWord{}};
    std::size_t start = 0;
    for (int len = 1; len <= len_max; ++len) {
      const auto end = out.size();
      for (auto w = start; w < end; ++w) {
        for (int x = 0; x < k; ++x) {
          FreeWord v = out[w];
          v.letters.push_back(x);
          out.push_back(std::move(v));
        }
      }
      start = end;
    }
    return out;
  };
  const auto xs = words(t.m, max_x);
  const auto ys = words(t.n, max_y);
  std::vector<TwoGraphWord> el;
  std::unordered_map<Element, std::size_t, ElementHash> index;
  for (const auto& v : xs) {
    for (const auto& w : ys) {
      index.emplace(encode(TwoGraphWord{v, w}), el.size());
      el.push_back({v, w});
    }
  }
  const std::size_t n = el.size();
  const std::size_t blocks = (n + 63) / 64;
  // multiples[p] and divisors[c] as bitsets over el.
  std::vector<std::uint64_t> multiples(n * blocks, 0);
  std::vector<std::uint64_t> divisors(n * blocks, 0);
  auto set = [blocks](std::vector<std::uint64_t>& bits, std::size_t row, std::size_t col) {
    bits[row * blocks + col / 64] |= std::uint64_t{1} << (col % 64);
  };
  for (std::size_t p = 0; p < n; ++p) {
    const auto px = static_cast<int>(el[p].x.letters.size());
    const auto py = static_cast<int>(el[p].y.letters.size());
    for (std::size_t s = 0; s < n; ++s) {
      if (px + static_cast<int>(el[s].x.letters.size()) > max_x ||
          py + static_cast<int>(el[s].y.letters.size()) > max_y) {
        continue;
      }
      const auto c = index.at(encode(ftheta_multiply(t, el[p], el[s])));
      set(multiples, p, c);
      set(divisors, c, p);
    }
  }

  SurveyVerdict v;
  v.elements = n;
  std::vector<std::uint64_t> common(blocks);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      ++v.pairs;
      bool any = false;
      for (std::size_t b = 0; b < blocks; ++b) {
        common[b] = multiples[p * blocks + b] & multiples[q * blocks + b];
        any = any || common[b] != 0;
      }
      if (!any) continue;
      ++v.pairs_with_common;
      std::vector<TwoGraphWord> minimal;
      for (std::size_t b = 0; b < blocks; ++b) {
        for (auto bits = common[b]; bits != 0; bits &= bits - 1) {
          const auto c = b * 64 + static_cast<std::size_t>(std::countr_zero(bits));
          int below = 0;
          for (std::size_t k = 0; k < blocks && below <= 1; ++k) {
            below += std::popcount(divisors[c * blocks + k] & common[k]);
          }
          if (below == 1) minimal.push_back(el[c]);
        }
      }
      if (minimal.size() > 1) v.counterexamples.push_back({el[p], el[q], std::move(minimal)});
    }
  }
  return v;
}

}  // namespace rlcm
